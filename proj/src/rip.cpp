#include "gomplab/rip.hpp"

#include <algorithm>
#include <cmath>

#include "gomplab/rng.hpp"

namespace gomplab {

std::int64_t binomial_capped(int n, int k, std::int64_t cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long double acc = 1.0L;
    for (int i = 1; i <= k; ++i) {
        acc = acc * static_cast<long double>(n - k + i) / static_cast<long double>(i);
        if (acc > static_cast<long double>(cap) * 2) return cap + 1;
    }
    std::int64_t v = static_cast<std::int64_t>(acc + 0.5L);
    return v > cap ? cap + 1 : v;
}

namespace {

double support_deviation(const Matrix& phi, const IndexSet& s) {
    auto [lo, hi] = gram_extreme_eigs(phi, s);
    return std::max(hi - 1.0, 1.0 - lo);
}

void validate_order(const Matrix& phi, int order) {
    if (order < 1) throw std::invalid_argument("rip order must be positive");
    if (order > phi.rows())
        throw std::invalid_argument("rip order exceeds row count");
    if (order > phi.cols())
        throw std::invalid_argument("rip order exceeds column count");
}

} // namespace

RipEstimate exact_rip(const Matrix& phi, int order, std::int64_t enumeration_cap) {
    validate_order(phi, order);
    const int n = static_cast<int>(phi.cols());
    std::int64_t count = binomial_capped(n, order, enumeration_cap);
    if (count > enumeration_cap)
        throw EnumerationTooLargeError("exact_rip: support count exceeds cap");

    std::vector<int> comb(order);
    for (int i = 0; i < order; ++i) comb[i] = i;

    double delta = 0.0;
    std::int64_t visited = 0;
    while (true) {
        delta = std::max(delta, support_deviation(phi, IndexSet(comb)));
        ++visited;
        // Lexicographic successor.
        int i = order - 1;
        while (i >= 0 && comb[i] == n - order + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < order; ++j) comb[j] = comb[j - 1] + 1;
    }

    RipEstimate est;
    est.order = order;
    est.delta = delta;
    est.method = RipMethod::Exact;
    est.supports_evaluated = visited;
    return est;
}

RipEstimate monte_carlo_rip(const Matrix& phi, int order, int trials,
                            std::uint64_t seed) {
    validate_order(phi, order);
    if (trials < 1) throw std::invalid_argument("monte_carlo_rip: trials must be >= 1");
    const int n = static_cast<int>(phi.cols());

    Rng rng(seed);
    double delta = 0.0;
    std::vector<int> pool(n);
    for (int t = 0; t < trials; ++t) {
        // Partial Fisher-Yates draw of `order` distinct indices.
        for (int i = 0; i < n; ++i) pool[i] = i;
        std::vector<int> pick(order);
        for (int i = 0; i < order; ++i) {
            int j = i + rng.next_int(n - i);
            std::swap(pool[i], pool[j]);
            pick[i] = pool[i];
        }
        delta = std::max(delta, support_deviation(phi, IndexSet(pick)));
    }

    RipEstimate est;
    est.order = order;
    est.delta = delta;
    est.method = RipMethod::MonteCarlo;
    est.supports_evaluated = trials;
    est.seed = seed;
    return est;
}

std::vector<AuditCheck> modified_rip_margins(const Matrix& phi, const IndexSet& i1,
                                             const IndexSet& i2, const Vector& u) {
    if (i1.intersect_count(i2) != 0)
        throw std::invalid_argument("modified_rip_margins: index sets overlap");
    if (u.size() != phi.cols())
        throw DimensionMismatchError("modified_rip_margins: u must have one entry per column");
    for (int j = 0; j < u.size(); ++j) {
        if (u(j) != 0.0 && !i2.contains(j))
            throw std::invalid_argument("modified_rip_margins: support of u not inside i2");
    }

    const int order = i1.size() + i2.size();
    double delta = order > 0 ? exact_rip(phi, order).delta : 0.0;
    double t = delta < 1.0 ? delta / (1.0 - delta) : std::numeric_limits<double>::infinity();

    Matrix a = orthogonalize_against(phi, i1);
    double au2 = (a * u).squaredNorm();
    double u2 = u.squaredNorm();
    double phiu2 = (phi * u).squaredNorm();

    std::vector<AuditCheck> checks;
    checks.push_back(make_check("L3-lower", (1.0 - t) * u2, Relation::LT, au2, u2));
    checks.push_back(make_check("L3-upper", au2, Relation::LT, (1.0 + delta) * u2, u2));
    checks.push_back(
        make_check("L3-phiu-lower", (1.0 - t * t) * phiu2, Relation::LT, au2, phiu2));
    checks.push_back(make_check("L3-phiu-upper", au2, Relation::LT, phiu2, phiu2));
    return checks;
}

} // namespace gomplab
