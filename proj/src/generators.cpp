#include "gomplab/generators.hpp"

#include <cmath>

#include "gomplab/bounds.hpp"
#include "gomplab/rng.hpp"

namespace gomplab {

Matrix gen_gaussian(int rows, int cols, std::uint64_t seed, bool unit_columns) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("gen_gaussian: dimensions must be positive");
    Rng rng(seed);
    Matrix phi(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) phi(i, j) = rng.next_gaussian();
    if (unit_columns) {
        for (int j = 0; j < cols; ++j) {
            double norm = phi.col(j).norm();
            if (norm > 0.0) phi.col(j) /= norm;
        }
    }
    return phi;
}

Matrix gen_perturbed_identity(int rows, int extra, double epsilon, std::uint64_t seed) {
    if (rows < 1) throw std::invalid_argument("gen_perturbed_identity: rows must be positive");
    if (extra < 0 || extra > rows)
        throw std::invalid_argument("gen_perturbed_identity: extra must lie in [0, rows]");
    if (!(epsilon >= 0.0) || epsilon >= 0.5)
        throw std::invalid_argument("gen_perturbed_identity: epsilon must lie in [0, 0.5)");

    Rng rng(seed);
    Matrix phi = Matrix::Zero(rows, rows + extra);
    phi.topLeftCorner(rows, rows).setIdentity();
    for (int e = 0; e < extra; ++e) {
        Vector col = Vector::Zero(rows);
        col(e) = 1.0; // distinct basis vector per extra column
        for (int i = 0; i < rows; ++i) col(i) += epsilon * rng.next_gaussian();
        phi.col(rows + e) = col / col.norm();
    }
    return phi;
}

SparseSignal gen_sparse_signal(int length, int sparsity, SignalDistribution dist,
                               double gamma, std::uint64_t seed) {
    if (sparsity < 1 || sparsity > length)
        throw std::invalid_argument("gen_sparse_signal: sparsity out of range");
    if (dist == SignalDistribution::GammaConstrained && gamma < 1.0)
        throw std::invalid_argument("gen_sparse_signal: gamma must be >= 1");

    Rng rng(seed);
    // Uniform support: partial Fisher-Yates over [0, length).
    std::vector<int> pool(static_cast<size_t>(length));
    for (int i = 0; i < length; ++i) pool[static_cast<size_t>(i)] = i;
    std::vector<int> chosen(static_cast<size_t>(sparsity));
    for (int i = 0; i < sparsity; ++i) {
        int j = i + rng.next_int(length - i);
        std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(j)]);
        chosen[static_cast<size_t>(i)] = pool[static_cast<size_t>(i)];
    }

    SparseSignal s;
    s.length = length;
    s.support = IndexSet(chosen);
    s.values = Vector(sparsity);
    for (int i = 0; i < sparsity; ++i) {
        double sign = rng.next_double() < 0.5 ? -1.0 : 1.0;
        switch (dist) {
            case SignalDistribution::RademacherPM1:
                s.values(i) = sign;
                break;
            case SignalDistribution::GaussianNonzero: {
                double v = rng.next_gaussian();
                while (std::abs(v) < 1e-12) v = rng.next_gaussian();
                s.values(i) = v;
                break;
            }
            case SignalDistribution::GammaConstrained: {
                const double x_max = 1.0;
                const double lo = x_max / gamma + 1e-6 * x_max;
                double mag = lo + (x_max - lo) * rng.next_double();
                s.values(i) = sign * mag;
                break;
            }
        }
    }
    return s;
}

Vector gen_noise_with_norm(int length, double target_norm, std::uint64_t seed) {
    if (target_norm < 0.0)
        throw std::invalid_argument("gen_noise_with_norm: negative target");
    Rng rng(seed);
    Vector g(length);
    for (int i = 0; i < length; ++i) g(i) = rng.next_gaussian();
    double norm = g.norm();
    if (target_norm == 0.0 || norm == 0.0) return Vector::Zero(length);
    return g * (target_norm / norm);
}

GatedInstance gen_gated_gaussian_instance(int rows, int cols, int n_select, int sparsity,
                                          std::uint64_t seed, double delta_cap,
                                          bool require_t1_gate, bool require_t2_gate,
                                          int max_attempts) {
    const int nk = n_select * sparsity;
    const int top_order = std::min(nk + sparsity, std::min(rows, cols));
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(attempt));
        Matrix phi = gen_gaussian(rows, cols, s, true);
        DeltaMap deltas = exact_delta_map(phi, top_order);
        bool ok = deltas.at(top_order) < delta_cap;
        if (ok && require_t1_gate)
            ok = deltas.at(nk) < theorem1_bound(n_select, sparsity);
        if (ok && require_t2_gate)
            ok = deltas.at(nk + 1) < theorem2_bound(n_select, sparsity);
        if (ok) {
            GatedInstance inst;
            inst.phi = std::move(phi);
            inst.deltas = std::move(deltas);
            inst.seed_used = s;
            inst.attempts = attempt + 1;
            return inst;
        }
    }
    throw ConfigError("gen_gated_gaussian_instance: no candidate passed the gates");
}

} // namespace gomplab
