#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gomplab/audit_check.hpp"
#include "gomplab/linalg.hpp"

namespace gomplab {

enum class RipMethod { Exact, MonteCarlo };

/// Restricted-isometry constant estimate for one order. An Exact
/// estimate enumerates every support of the given size; a MonteCarlo
/// estimate samples supports and therefore lower-bounds the exact
/// value.
struct RipEstimate {
    int order = 0;
    double delta = 0.0;
    RipMethod method = RipMethod::Exact;
    std::int64_t supports_evaluated = 0;
    std::optional<std::uint64_t> seed; // MonteCarlo only
};

inline constexpr std::int64_t kDefaultEnumerationCap = 2'000'000;

/// Number of size-k subsets of n elements, saturating at `cap + 1`
/// so callers can compare against a cap without overflow.
std::int64_t binomial_capped(int n, int k, std::int64_t cap);

/// Exact constant: max over all supports I of the given order of
/// max(lambda_max(I) - 1, 1 - lambda_min(I)). Enumeration is
/// lexicographic. Throws EnumerationTooLargeError past the cap.
RipEstimate exact_rip(const Matrix& phi, int order,
                      std::int64_t enumeration_cap = kDefaultEnumerationCap);

/// Sampled surrogate: max deviation over `trials` uniformly random
/// supports. Reproducible for a given seed.
RipEstimate monte_carlo_rip(const Matrix& phi, int order, int trials,
                            std::uint64_t seed);

/// Margins for the near-isometry of A = orthogonalize_against(phi, i1)
/// applied to a vector supported on i2, against both reference scales
/// ||u||^2 and ||Phi u||^2. The exact constant of order |i1|+|i2| is
/// computed by exhaustive enumeration. Returns four checks:
/// L3-lower, L3-upper, L3-phiu-lower, L3-phiu-upper.
std::vector<AuditCheck> modified_rip_margins(const Matrix& phi, const IndexSet& i1,
                                             const IndexSet& i2, const Vector& u);

} // namespace gomplab
