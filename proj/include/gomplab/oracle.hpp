#pragma once

#include <cstdint>
#include <string>

#include "gomplab/linalg.hpp"
#include "gomplab/rip.hpp"
#include "gomplab/types.hpp"

namespace gomplab {

/// Result of the exhaustive sparsest-fit search.
struct L0Result {
    IndexSet support;
    Vector coefficients;
    double residual_norm = 0.0;
    std::int64_t supports_evaluated = 0;
    std::int64_t rank_deficient_skipped = 0;
};

/// Enumerates every support of the given size, solves least squares on
/// each and returns the one with the smallest residual. Ties keep the
/// lexicographically first support. Rank-deficient supports are
/// skipped and counted.
L0Result l0_oracle(const Matrix& phi, const Vector& y, int sparsity,
                   std::int64_t enumeration_cap = kDefaultEnumerationCap);

/// Correlation order statistics of a residual against the dictionary:
/// the best correlation inside the true support, the n_select-th best
/// outside it, and the indices realizing the top incorrect
/// correlations. Incorrect means "not in the true support"; entries of
/// the running estimate outside the truth stay in the candidate pool
/// (their correlations vanish against an orthogonalized residual).
struct AlphaBeta {
    double beta_1 = 0.0;   // max |<phi_i, r>| over i in T
    double alpha_n = 0.0;  // n_select-th largest over j not in T
    IndexSet top_incorrect;
};

AlphaBeta alpha_beta(const Matrix& phi, const SparseSignal& truth,
                     const IndexSet& support, const Vector& residual, int n_select);

/// True when every subset of 2K columns has full rank; the uniqueness
/// precondition for the sparsest solution.
bool two_k_columns_independent(const Matrix& phi, int sparsity,
                               std::int64_t enumeration_cap = kDefaultEnumerationCap);

} // namespace gomplab
