#pragma once

#include <cstdint>

#include "gomplab/audit.hpp"
#include "gomplab/types.hpp"

namespace gomplab {

/// Standard-normal m x n matrix, entries drawn column by column from
/// the pinned generator (see rng.hpp). With unit_columns every column
/// is scaled to unit Euclidean norm. Bit-reproducible per seed.
Matrix gen_gaussian(int rows, int cols, std::uint64_t seed, bool unit_columns);

/// m x (m + extra) matrix: the identity block followed by `extra`
/// unit-norm columns, each the normalized sum of a distinct standard
/// basis vector and epsilon-scaled seeded Gaussian noise.
/// Note that appending any unit column v to a full identity block
/// forces the order-s constant up to the norm of the s-1 largest
/// entries of v, at least sqrt((s-1)/m); such matrices cannot have
/// small constants at orders above 1.
Matrix gen_perturbed_identity(int rows, int extra, double epsilon,
                              std::uint64_t seed);

enum class SignalDistribution { RademacherPM1, GaussianNonzero, GammaConstrained };

/// K-sparse signal on a uniformly random support. GammaConstrained
/// draws magnitudes uniformly in [max/gamma + eta, max] with
/// eta = 1e-6 * max, so the dynamic-range model holds strictly.
SparseSignal gen_sparse_signal(int length, int sparsity, SignalDistribution dist,
                               double gamma, std::uint64_t seed);

/// Isotropic Gaussian noise scaled to an exact Euclidean norm.
Vector gen_noise_with_norm(int length, double target_norm, std::uint64_t seed);

/// An instance whose exact constants pass the stated gates, found by
/// deterministic seed increments. Throws ConfigError when max_attempts
/// candidates all fail.
struct GatedInstance {
    Matrix phi;
    DeltaMap deltas;
    std::uint64_t seed_used = 0;
    int attempts = 0;
};

GatedInstance gen_gated_gaussian_instance(int rows, int cols, int n_select, int sparsity,
                                          std::uint64_t seed, double delta_cap,
                                          bool require_t1_gate, bool require_t2_gate,
                                          int max_attempts = 200);

} // namespace gomplab
