#include "gomplab/audit.hpp"

#include <algorithm>
#include <cmath>

#include "gomplab/bounds.hpp"
#include "gomplab/rng.hpp"

namespace gomplab {

DeltaMap exact_delta_map(const Matrix& phi, int max_order, std::int64_t cap) {
    DeltaMap map;
    int top = std::min<int>({max_order, static_cast<int>(phi.rows()),
                             static_cast<int>(phi.cols())});
    for (int order = 1; order <= top; ++order)
        map.by_order[order] = exact_rip(phi, order, cap).delta;
    return map;
}

namespace {

// Everything the per-iteration checks consume, derived once.
struct IterationContext {
    int k = 0;
    int sparsity = 0; // K
    int overlap = 0;  // l
    IndexSet lambda;
    IndexSet t;
    IndexSet t_minus_lambda;
    IndexSet t_union_lambda;
    Vector measurement; // y (clean) or y + n
    Vector clean_y;     // Phi_T x_T
    Vector residual;    // r^k of the run's measurement
    Vector corr;        // |Phi^T r^k|
    double beta1 = 0.0;
    double alpha_primary = 0.0; // over j not in T
    double alpha_strict = 0.0;  // over j outside T and the support
    bool alpha_strict_valid = false;
    IndexSet selected_next;
    Vector x_rem;  // x on T - Lambda, embedded in R^n
    double x_rem_norm = 0.0;
    Vector xpp;    // coefficients of r^k in the columns of T union Lambda
    double xpp_norm = 0.0;
    double scale = 0.0; // ||measurement||
};

IterationContext build_context(const Matrix& phi, const SparseSignal& truth,
                               const Vector* noise, const PursuitTrace& trace, int k,
                               int n_select) {
    if (k < 0 || k >= static_cast<int>(trace.iterations.size()))
        throw std::invalid_argument("audit: iteration index outside trace");

    IterationContext ctx;
    ctx.k = k;
    ctx.t = truth.support;
    ctx.sparsity = truth.support.size();
    ctx.lambda = k == 0 ? IndexSet{} : trace.iterations[static_cast<size_t>(k) - 1].support;
    ctx.overlap = ctx.t.intersect_count(ctx.lambda);
    ctx.t_minus_lambda = ctx.t.minus(ctx.lambda);
    ctx.t_union_lambda = ctx.t.unite(ctx.lambda);
    ctx.selected_next = trace.iterations[static_cast<size_t>(k)].selected;

    Vector x = truth.dense();
    ctx.clean_y = phi * x;
    ctx.measurement = noise ? Vector(ctx.clean_y + *noise) : ctx.clean_y;
    ctx.scale = ctx.measurement.norm();
    ctx.residual = ctx.lambda.empty() ? ctx.measurement
                                      : project_residual(phi, ctx.lambda, ctx.measurement);
    ctx.corr = correlations(phi, ctx.residual);

    for (int i : ctx.t) ctx.beta1 = std::max(ctx.beta1, ctx.corr(i));

    const int n = static_cast<int>(phi.cols());
    if (n - ctx.t.size() < n_select)
        throw InsufficientCandidatesError("audit: fewer incorrect indices than N");
    {
        IndexSet w = select_top_n(ctx.corr, n_select, ctx.t);
        double lo = std::numeric_limits<double>::infinity();
        for (int j : w) lo = std::min(lo, ctx.corr(j));
        ctx.alpha_primary = lo;
    }
    IndexSet blocked = ctx.t_union_lambda;
    if (n - blocked.size() >= n_select) {
        IndexSet w = select_top_n(ctx.corr, n_select, blocked);
        double lo = std::numeric_limits<double>::infinity();
        for (int j : w) lo = std::min(lo, ctx.corr(j));
        ctx.alpha_strict = lo;
        ctx.alpha_strict_valid = true;
    }

    ctx.x_rem = Vector::Zero(n);
    for (int i = 0; i < ctx.t.size(); ++i) {
        int col = ctx.t[i];
        if (!ctx.lambda.contains(col)) ctx.x_rem(col) = truth.values(i);
    }
    ctx.x_rem_norm = ctx.x_rem.norm();

    ctx.xpp = ctx.x_rem;
    if (!ctx.lambda.empty() && ctx.x_rem_norm > 0.0) {
        Vector target = phi * ctx.x_rem;
        Vector z = least_squares(columns(phi, ctx.lambda), target);
        for (int i = 0; i < ctx.lambda.size(); ++i) ctx.xpp(ctx.lambda[i]) -= z(i);
    }
    ctx.xpp_norm = ctx.xpp.norm();
    return ctx;
}

Vector random_probe(Rng& rng, int dim) {
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = rng.next_gaussian();
    return v;
}

void emit_shared_alpha_gap(AuditReport& report, const IterationContext& ctx) {
    if (ctx.alpha_strict_valid) {
        report.checks.push_back(make_check("W-variant-gap",
                                           std::abs(ctx.alpha_primary - ctx.alpha_strict),
                                           Relation::LE, kCheckTolerance * ctx.scale,
                                           ctx.scale));
    } else {
        report.checks.push_back(make_vacuous("W-variant-gap"));
    }
}

} // namespace

AuditReport audit_noiseless_iteration(const Matrix& phi, const SparseSignal& truth,
                                      const PursuitTrace& trace, int k,
                                      const DeltaMap& deltas, int n_select,
                                      const std::string& instance_id) {
    IterationContext ctx = build_context(phi, truth, nullptr, trace, k, n_select);
    AuditReport report;
    report.iteration = k;
    report.instance_id = instance_id;

    const int big_k = ctx.sparsity;
    const int nk = n_select * big_k;
    const int remaining = big_k - ctx.overlap;
    const bool chain_ok = ctx.overlap >= ctx.k; // the delta-order arithmetic of the
                                                // selection chains assumes one correct
                                                // pick per previous iteration
    const double sqrt_n = std::sqrt(static_cast<double>(n_select));
    const double sqrt_k = std::sqrt(static_cast<double>(big_k));

    Rng rng(derive_seed(fnv1a(instance_id), static_cast<std::uint64_t>(k)));

    // Progress: while the order-NK constant certifies recovery, every
    // committed iteration must have picked at least one correct index.
    if (deltas.has(nk) && deltas.at(nk) < theorem1_bound(n_select, big_k)) {
        report.checks.push_back(make_check("Progress", ctx.overlap, Relation::GE,
                                           ctx.k, 1.0));
    } else {
        report.checks.push_back(make_vacuous("Progress"));
    }

    // L1b two-sided near-isometry of the Gram on T union Lambda.
    {
        const IndexSet& s = ctx.t_union_lambda;
        double d = deltas.at(s.size());
        Vector q = random_probe(rng, s.size());
        Matrix sub = columns(phi, s);
        double gq = (sub.transpose() * (sub * q)).norm();
        double qn = q.norm();
        report.checks.push_back(
            make_check("L1b-lower", (1.0 - d) * qn, Relation::LE, gq, qn));
        report.checks.push_back(
            make_check("L1b-upper", gq, Relation::LE, (1.0 + d) * qn, qn));
    }

    // L1c on the residual.
    {
        const IndexSet& s = ctx.t_union_lambda;
        double d = deltas.at(s.size());
        double lhs = (columns(phi, s).transpose() * ctx.residual).norm();
        report.checks.push_back(make_check("L1c", lhs, Relation::LT,
                                           std::sqrt(1.0 + d) * ctx.residual.norm(),
                                           ctx.scale));
    }

    // L1d cross-correlation between disjoint sets.
    if (remaining >= 1 && ctx.alpha_strict_valid) {
        IndexSet i_set = ctx.t_minus_lambda;
        IndexSet j_set = select_top_n(ctx.corr, n_select, ctx.t_union_lambda);
        double d = deltas.at(i_set.size() + j_set.size());
        Vector p = random_probe(rng, j_set.size());
        double lhs = (columns(phi, i_set).transpose() * (columns(phi, j_set) * p)).norm();
        report.checks.push_back(
            make_check("L1d", lhs, Relation::LT, d * p.norm(), p.norm()));
    } else {
        report.checks.push_back(make_vacuous("L1d"));
    }

    // L2: ceiling on the best incorrect correlations.
    if (chain_ok && remaining >= 1 && deltas.at(nk) < 1.0) {
        double d = deltas.at(nk);
        double rhs = d / (1.0 - d) * ctx.x_rem_norm / sqrt_n;
        report.checks.push_back(
            make_check("L2", ctx.alpha_primary, Relation::LT, rhs, ctx.scale));
    } else {
        report.checks.push_back(make_vacuous("L2"));
    }

    // Eq9: floor on the best correct correlation.
    if (chain_ok && remaining >= 1 && deltas.at(nk) < 1.0) {
        double d = deltas.at(nk);
        double rhs = (1.0 - d / (1.0 - d)) * ctx.x_rem_norm / sqrt_k;
        report.checks.push_back(
            make_check("Eq9", ctx.beta1, Relation::GT, rhs, ctx.scale));
    } else {
        report.checks.push_back(make_vacuous("Eq9"));
    }

    // Eq13 / Eq15: the same pair phrased through the residual's
    // coefficients on T union Lambda.
    if (chain_ok && remaining >= 1) {
        double d1 = deltas.at(nk + 1);
        report.checks.push_back(make_check("Eq13", ctx.alpha_primary, Relation::LT,
                                           d1 * ctx.xpp_norm / sqrt_n, ctx.scale));
        double dnk = deltas.at(nk);
        report.checks.push_back(make_check("Eq15", ctx.beta1, Relation::GT,
                                           (1.0 - dnk) * ctx.xpp_norm / sqrt_k,
                                           ctx.scale));
    } else {
        report.checks.push_back(make_vacuous("Eq13"));
        report.checks.push_back(make_vacuous("Eq15"));
    }

    // Eq11: the residual really is the dictionary acting on xpp.
    {
        double lhs = (ctx.residual - phi * ctx.xpp).norm();
        report.checks.push_back(make_check("Eq11", lhs, Relation::LE,
                                           kCheckTolerance * ctx.scale, ctx.scale));
    }

    // The four modified near-isometry margins with the selected set as
    // the orthogonalization set.
    if (remaining >= 1) {
        for (auto& c : modified_rip_margins(phi, ctx.lambda, ctx.t_minus_lambda, ctx.x_rem))
            report.checks.push_back(std::move(c));
    } else {
        for (const char* name : {"L3-lower", "L3-upper", "L3-phiu-lower", "L3-phiu-upper"})
            report.checks.push_back(make_vacuous(name));
    }

    // A2: the projection cosine is capped by d/(1-d).
    if (!ctx.lambda.empty() && remaining >= 1) {
        double d = deltas.at(ctx.t_union_lambda.size());
        Vector w = phi * ctx.x_rem;
        Vector perp = project_residual(phi, ctx.lambda, w);
        double cosine = (w - perp).norm() / w.norm();
        report.checks.push_back(
            make_check("A2", cosine, Relation::LT, d / (1.0 - d), 1.0));
    } else {
        report.checks.push_back(make_vacuous("A2"));
    }

    // Selection consequence: a winning correct correlation forces at
    // least one correct index into the next augmentation.
    if (remaining >= 1 && ctx.beta1 > ctx.alpha_primary) {
        int picked = ctx.selected_next.intersect_count(ctx.t);
        report.checks.push_back(make_check("Select", picked, Relation::GE, 1, 1.0));
    } else {
        report.checks.push_back(make_vacuous("Select"));
    }

    emit_shared_alpha_gap(report, ctx);
    return report;
}

AuditReport audit_noisy_iteration(const Matrix& phi, const SparseSignal& truth,
                                  const Vector& noise, const PursuitTrace& trace, int k,
                                  const DeltaMap& deltas, int n_select, double gamma,
                                  const std::string& instance_id) {
    if (!satisfies_gamma(truth, gamma))
        throw GammaViolationError("audit: signal violates the dynamic-range model");

    IterationContext ctx = build_context(phi, truth, &noise, trace, k, n_select);
    AuditReport report;
    report.iteration = k;
    report.instance_id = instance_id;

    const int big_k = ctx.sparsity;
    const int nk = n_select * big_k;
    const int remaining = big_k - ctx.overlap;
    const bool chain_ok = ctx.overlap >= ctx.k;
    const double sqrt_n = std::sqrt(static_cast<double>(n_select));
    const double sqrt_k = std::sqrt(static_cast<double>(big_k));
    const double noise_norm = noise.norm();
    const double clean_norm = ctx.clean_y.norm();
    const double d_n = deltas.at(n_select);
    const double d_k = deltas.at(big_k);
    const double d_nk = deltas.at(nk);

    // Eq16: always-valid ceiling on incorrect correlations.
    report.checks.push_back(make_check(
        "Eq16", ctx.alpha_primary, Relation::LT,
        std::sqrt(1.0 + d_n) * (clean_norm + noise_norm) / sqrt_n, ctx.scale));

    // Eq17: floor on the best correct correlation via the dynamic range.
    if (chain_ok && remaining >= 1 && d_nk < 0.5) {
        double lead = (1.0 - 2.0 * d_nk) * (1.0 - d_k) * clean_norm /
                      ((1.0 - d_nk) * (1.0 - d_nk) * gamma *
                       std::sqrt(big_k * (1.0 + d_k)));
        double rhs = lead - std::sqrt(1.0 + d_k) / sqrt_k * noise_norm;
        report.checks.push_back(make_check("Eq17", ctx.beta1, Relation::GT, rhs, ctx.scale));
    } else {
        report.checks.push_back(make_vacuous("Eq17"));
    }

    // B1/B2: noisy forms of L2 and Eq9.
    if (chain_ok && d_nk < 1.0) {
        double rhs1 = d_nk / (1.0 - d_nk) * ctx.x_rem_norm / sqrt_n +
                      std::sqrt(1.0 + d_n) / sqrt_n * noise_norm;
        report.checks.push_back(make_check("B1", ctx.alpha_primary, Relation::LT, rhs1,
                                           ctx.scale));
        double rhs2 = (1.0 - d_nk / (1.0 - d_nk)) * ctx.x_rem_norm / sqrt_k -
                      std::sqrt(1.0 + d_k) / sqrt_k * noise_norm;
        report.checks.push_back(make_check("B2", ctx.beta1, Relation::GT, rhs2, ctx.scale));
    } else {
        report.checks.push_back(make_vacuous("B1"));
        report.checks.push_back(make_vacuous("B2"));
    }

    // C1/C2: noisy forms of Eq13 and Eq15.
    if (chain_ok) {
        double d1 = deltas.at(nk + 1);
        double rhs1 = d1 * ctx.xpp_norm / sqrt_n + std::sqrt(1.0 + d_n) / sqrt_n * noise_norm;
        report.checks.push_back(make_check("C1", ctx.alpha_primary, Relation::LT, rhs1,
                                           ctx.scale));
        double rhs2 = (1.0 - d_nk) * ctx.xpp_norm / sqrt_k -
                      std::sqrt(1.0 + d_k) / sqrt_k * noise_norm;
        report.checks.push_back(make_check("C2", ctx.beta1, Relation::GT, rhs2, ctx.scale));
    } else {
        report.checks.push_back(make_vacuous("C1"));
        report.checks.push_back(make_vacuous("C2"));
    }

    // L4 and D1: dynamic-range floors on the unresolved part.
    if (remaining >= 1) {
        Vector w = phi * ctx.x_rem;
        double rhs_l4 = std::sqrt(remaining * (1.0 - d_k) /
                                  (static_cast<double>(big_k) * (1.0 + d_k))) *
                        clean_norm / gamma;
        report.checks.push_back(make_check("L4", w.norm(), Relation::GT, rhs_l4, ctx.scale));

        double x_t_norm = truth.values.norm();
        double rhs_d1 = std::sqrt(static_cast<double>(remaining) / big_k) * x_t_norm / gamma;
        report.checks.push_back(
            make_check("D1", ctx.x_rem_norm, Relation::GT, rhs_d1, x_t_norm));
    } else {
        report.checks.push_back(make_vacuous("L4"));
        report.checks.push_back(make_vacuous("D1"));
    }

    emit_shared_alpha_gap(report, ctx);
    return report;
}

std::vector<AuditReport> audit_noiseless_run(const Matrix& phi, const SparseSignal& truth,
                                             const PursuitResult& result,
                                             const DeltaMap& deltas, int n_select,
                                             const std::string& instance_id) {
    std::vector<AuditReport> reports;
    for (int k = 0; k < result.iterations_used(); ++k)
        reports.push_back(audit_noiseless_iteration(phi, truth, result.trace, k, deltas,
                                                    n_select, instance_id));
    return reports;
}

std::vector<AuditReport> audit_noisy_run(const Matrix& phi, const SparseSignal& truth,
                                         const Vector& noise, const PursuitResult& result,
                                         const DeltaMap& deltas, int n_select, double gamma,
                                         const std::string& instance_id) {
    std::vector<AuditReport> reports;
    const int iters = result.iterations_used();
    for (int k = 0; k < iters; ++k)
        reports.push_back(audit_noisy_iteration(phi, truth, noise, result.trace, k, deltas,
                                                n_select, gamma, instance_id));

    // Run-level error chain, anchored at the first iteration that
    // selected no correct index.
    AuditReport tail;
    tail.iteration = -1;
    tail.instance_id = instance_id;

    int first_bad = -1;
    for (int k = 0; k < iters; ++k) {
        if (result.trace.iterations[static_cast<size_t>(k)].selected.intersect_count(
                truth.support) == 0) {
            first_bad = k;
            break;
        }
    }

    const int big_k = truth.support.size();
    const int nk = n_select * big_k;
    const double noise_norm = noise.norm();
    if (first_bad >= 0) {
        IndexSet lambda_p = first_bad == 0
                                ? IndexSet{}
                                : result.trace.iterations[static_cast<size_t>(first_bad) - 1].support;
        Vector x = truth.dense();
        Vector x_rem = x;
        for (int j : lambda_p) x_rem(j) = 0.0;
        double rem_norm = x_rem.norm();

        double d_k = deltas.at(big_k);
        double d_nkk = deltas.at(nk + big_k);
        double d_nk = deltas.at(nk);
        double d_n = deltas.at(n_select);
        double sqrt_n = std::sqrt(static_cast<double>(n_select));
        double sqrt_k = std::sqrt(static_cast<double>(big_k));

        Vector xhat = result.estimate.dense();
        double err = (x - xhat).norm();
        double rhs_b4 = (std::sqrt(1.0 + d_k) * rem_norm + 2.0 * noise_norm) /
                        std::sqrt(1.0 - d_nkk);
        tail.checks.push_back(make_check("B4", err, Relation::LE, rhs_b4, x.norm()));

        if (d_nk < theorem1_bound(n_select, big_k)) {
            double rhs_b3 = (1.0 - d_nk) *
                            (std::sqrt(n_select * (1.0 + d_k)) +
                             std::sqrt(big_k * (1.0 + d_n))) /
                            (sqrt_n - (sqrt_k + 2.0 * sqrt_n) * d_nk) * noise_norm;
            tail.checks.push_back(make_check("B3", rem_norm, Relation::LT, rhs_b3, x.norm()));
        } else {
            tail.checks.push_back(make_vacuous("B3"));
        }

        double d_nk1 = deltas.at(nk + 1);
        if (d_nk1 < theorem2_bound(n_select, big_k)) {
            // Coefficients of the clean residual at step first_bad.
            Vector xpp = x_rem;
            if (!lambda_p.empty() && rem_norm > 0.0) {
                Vector z = least_squares(columns(phi, lambda_p), phi * x_rem);
                for (int i = 0; i < lambda_p.size(); ++i) xpp(lambda_p[i]) -= z(i);
            }
            double rhs_c3 = (std::sqrt(n_select * (1.0 + d_k)) +
                             std::sqrt(big_k * (1.0 + d_n))) /
                            (sqrt_n - (sqrt_k + sqrt_n) * d_nk1) * noise_norm;
            tail.checks.push_back(make_check("C3", xpp.norm(), Relation::LT, rhs_c3, x.norm()));
        } else {
            tail.checks.push_back(make_vacuous("C3"));
        }
    } else {
        tail.checks.push_back(make_vacuous("B4"));
        tail.checks.push_back(make_vacuous("B3"));
        tail.checks.push_back(make_vacuous("C3"));
    }
    reports.push_back(std::move(tail));
    return reports;
}

AuditCheck reconstruction_error_check(const SparseSignal& truth, const PursuitResult& result,
                                      double noise_norm, double constant) {
    Vector x = truth.dense();
    Vector xhat = result.estimate.dense();
    double err = (x - xhat).norm();
    return make_check("T3/T4-error", err, Relation::LT, constant * noise_norm, x.norm());
}

AuditCheck snr_support_check(const Matrix& phi, const SparseSignal& truth,
                             const Vector& noise, const PursuitResult& result,
                             double c_k3_value) {
    double noise_norm = noise.norm();
    if (noise_norm == 0.0)
        throw ZeroNoiseError("snr_support_check: zero noise, SNR undefined");
    double snr = (phi * truth.dense()).norm() / noise_norm;

    AuditCheck c;
    c.name = "T5-support";
    c.lhs = snr;
    c.rhs = c_k3_value;
    c.relation = Relation::GT;
    c.margin = snr - c_k3_value;
    if (snr > c_k3_value) {
        c.pass = truth.support.is_subset_of(result.final_support);
        c.vacuous = false;
    } else {
        c.pass = true;
        c.vacuous = true; // below the threshold nothing is claimed
    }
    return c;
}

} // namespace gomplab
