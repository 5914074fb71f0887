#include "gomplab/pursuit.hpp"

#include <algorithm>
#include <numeric>

namespace gomplab {

IndexSet select_top_n(const Vector& corrs, int n_select, const IndexSet& excluded,
                      TieBreak) {
    const int n = static_cast<int>(corrs.size());
    std::vector<int> candidates;
    candidates.reserve(n);
    for (int j = 0; j < n; ++j)
        if (!excluded.contains(j)) candidates.push_back(j);
    if (n_select > static_cast<int>(candidates.size()))
        throw InsufficientCandidatesError("select_top_n: not enough candidates");

    // Partial sort by (value desc, index asc); the candidate list is
    // already index-ascending, so stability gives the tie break.
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](int a, int b) { return corrs(a) > corrs(b); });
    candidates.resize(static_cast<size_t>(n_select));
    return IndexSet(candidates);
}

namespace {

PursuitResult run_pursuit(const Matrix& phi, const Vector& y, const PursuitConfig& cfg,
                          const SparseSignal* truth) {
    const int m = static_cast<int>(phi.rows());
    const int n = static_cast<int>(phi.cols());
    const int atoms = cfg.atoms_per_iteration;
    const int iter_cap = cfg.max_iterations;

    if (y.size() != m)
        throw DimensionMismatchError("pursuit: measurement length does not match rows");
    if (atoms < 1 || iter_cap < 1)
        throw ConfigError("pursuit: N and max_iterations must be positive");
    if (cfg.residual_tolerance < 0.0)
        throw ConfigError("pursuit: residual tolerance must be nonnegative");
    if (static_cast<long long>(atoms) * iter_cap >= m)
        throw ConfigError("pursuit: N * max_iterations must stay below m");

    PursuitResult result;
    result.measurement_norm = y.norm();
    const double y_norm = result.measurement_norm;
    const double stop = cfg.residual_tolerance * y_norm;

    Vector residual = y;
    double residual_norm = y_norm;
    IndexSet support;

    if (residual_norm <= stop) {
        result.halt_reason = HaltReason::ResidualTolerance;
        result.estimate = SparseSignal{n, {}, Vector(0)};
        return result;
    }

    result.halt_reason = HaltReason::IterationCap;
    Vector coeffs;
    for (int k = 1; k <= iter_cap; ++k) {
        Vector corrs = correlations(phi, residual);
        IndexSet selected = select_top_n(corrs, atoms, support, cfg.tie_break);
        IndexSet grown = support.unite(selected);

        Matrix sub = columns(phi, grown);
        Vector z = least_squares(sub, y);
        Vector r_new = y - sub * z;
        double norm_new = r_new.norm();

        if (norm_new > residual_norm) {
            // A worsening step is discarded and ends the run.
            result.halt_reason = HaltReason::ResidualIncrease;
            break;
        }

        support = grown;
        residual = std::move(r_new);
        residual_norm = norm_new;
        coeffs = z;

        IterationRecord rec;
        rec.selected = selected;
        rec.support = support;
        rec.residual_norm = residual_norm;
        rec.coefficients = coeffs;
        if (truth != nullptr) {
            int overlap = support.intersect_count(truth->support);
            rec.correct_count = overlap;
            rec.overlap_l = overlap;
        }
        result.trace.iterations.push_back(std::move(rec));

        if (residual_norm <= stop) {
            result.halt_reason = HaltReason::ResidualTolerance;
            break;
        }
    }

    result.final_support = support;
    result.estimate = SparseSignal{n, support, coeffs.size() ? coeffs : Vector(0)};
    return result;
}

} // namespace

PursuitResult omp_solve(const Matrix& phi, const Vector& y, const PursuitConfig& cfg,
                        const SparseSignal* truth) {
    if (cfg.atoms_per_iteration != 1)
        throw ConfigError("omp_solve: requires exactly one atom per iteration");
    return run_pursuit(phi, y, cfg, truth);
}

PursuitResult gomp_solve(const Matrix& phi, const Vector& y, const PursuitConfig& cfg,
                         const SparseSignal* truth) {
    return run_pursuit(phi, y, cfg, truth);
}

} // namespace gomplab
