#pragma once

#include <optional>
#include <vector>

#include "gomplab/rip.hpp"

namespace gomplab {

enum class Theorem { T1, T2, T3, T4, T5 };

inline const char* theorem_name(Theorem t) {
    switch (t) {
        case Theorem::T1: return "T1";
        case Theorem::T2: return "T2";
        case Theorem::T3: return "T3";
        case Theorem::T4: return "T4";
        case Theorem::T5: return "T5";
    }
    return "?";
}

/// Verdict for one recovery theorem on one matrix: the required
/// isometry order, the critical threshold, the measured constant when
/// available, and whether the premise is satisfied. `satisfied` is
/// left empty when the evidence is inconclusive (a sampled constant
/// below the threshold only lower-bounds the true one).
struct BoundReport {
    Theorem theorem = Theorem::T1;
    int required_delta_order = 0;
    double bound_value = 0.0;
    std::optional<double> measured_delta;
    std::optional<bool> satisfied;
    std::optional<double> constant;
};

/// Critical threshold sqrt(N)/(sqrt(K) + 2 sqrt(N)) on the order-NK
/// constant for exact recovery of K-sparse signals with N atoms per
/// iteration. Always in (0, 1/2).
double theorem1_bound(int atoms_per_iteration, int sparsity);

/// Critical threshold sqrt(N)/(sqrt(K) + sqrt(N)) on the order-(NK+1)
/// constant. Always in (0, 1).
double theorem2_bound(int atoms_per_iteration, int sparsity);

/// Reconstruction-error amplification constant for the order-NK
/// recovery condition:
///   (1-dNK)(sqrt(N)(1+dK) + sqrt(K(1+dN)(1+dK)))
///   ------------------------------------------------ + 2/sqrt(1-dNKK)
///   (sqrt(N) - (sqrt(K)+2 sqrt(N)) dNK) sqrt(1-dNKK)
/// Requires dNKK < 1 and dNK < theorem1_bound(N, K).
double c_k1(double delta_nk, double delta_k, double delta_n, double delta_nkk,
            int atoms_per_iteration, int sparsity);

/// Variant of c_k1 whose numerator carries sqrt(N(1+dK)) + sqrt(K(1+dN)),
/// the factor that appears in the intermediate step of the error-chain
/// derivation. Exposed separately; the two are not numerically equal.
double c_k1_appendix(double delta_nk, double delta_k, double delta_n,
                     double delta_nkk, int atoms_per_iteration, int sparsity);

/// Error amplification constant for the order-(NK+1) condition.
/// Requires dNKK < 1 and dNK1 < theorem2_bound(N, K).
double c_k2(double delta_nk1, double delta_k, double delta_n, double delta_nkk,
            int atoms_per_iteration, int sparsity);

/// Signal-to-noise threshold above which the true support is still
/// identified under additive noise, for signals whose nonzero
/// magnitudes all exceed the maximum magnitude divided by gamma:
///   sqrt(K(1+dN)) + sqrt(N(1+dK))
///   -----------------------------------------------------------
///   sqrt(N)(1-dK)(1-2 dNK) / (gamma sqrt(1+dK) (1-dNK)^2) - sqrt(K(1+dN))
/// Throws DomainError(VacuousBound) when the denominator is not
/// positive, DomainError(InvalidInput) on out-of-range arguments.
double c_k3(double delta_nk, double delta_k, double delta_n, double gamma,
            int atoms_per_iteration, int sparsity);

/// Combines exact or sampled isometry estimates with the two recovery
/// thresholds. An Exact estimate certifies either way; a MonteCarlo
/// estimate can only refute (its delta is a lower bound), so a sampled
/// value below the threshold leaves `satisfied` empty.
std::vector<BoundReport> recovery_certificate(const std::vector<RipEstimate>& estimates,
                                              int atoms_per_iteration, int sparsity);

} // namespace gomplab
