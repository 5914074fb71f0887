#pragma once

#include <map>
#include <string>
#include <vector>

#include "gomplab/audit_check.hpp"
#include "gomplab/oracle.hpp"
#include "gomplab/pursuit.hpp"

namespace gomplab {

/// Exact isometry constants keyed by order. Audits refuse to run from
/// sampled constants, which under-estimate and could hide violations.
struct DeltaMap {
    std::map<int, double> by_order;

    bool has(int order) const { return by_order.count(order) != 0; }

    double at(int order) const {
        auto it = by_order.find(order);
        if (it == by_order.end())
            throw MissingDeltaError("no exact constant for order " + std::to_string(order));
        return it->second;
    }
};

/// Builds a DeltaMap with exact constants for every order 1..max_order
/// (clamped to the matrix dimensions).
DeltaMap exact_delta_map(const Matrix& phi, int max_order,
                         std::int64_t enumeration_cap = kDefaultEnumerationCap);

/// Audits the state before iteration k+1 of a noiseless run: the
/// classical selection-analysis inequalities (L1b/c/d, L2, Eq9, Eq13,
/// Eq15, the four L3 margins, the A2 projection cosine, the Eq11
/// residual decomposition) plus the consequence that a winning correct
/// correlation forces a correct selection. k indexes trace iterations
/// from 0 (the state with k committed iterations).
AuditReport audit_noiseless_iteration(const Matrix& phi, const SparseSignal& truth,
                                      const PursuitTrace& trace, int k,
                                      const DeltaMap& deltas, int n_select,
                                      const std::string& instance_id);

/// Noisy counterpart: Eq16/Eq17 and the B1/B2/C1/C2 chains, plus the
/// dynamic-range steps L4 and D1. `gamma` is the dynamic-range model
/// of the planted signal; GammaViolationError if it does not hold.
AuditReport audit_noisy_iteration(const Matrix& phi, const SparseSignal& truth,
                                  const Vector& noise, const PursuitTrace& trace, int k,
                                  const DeltaMap& deltas, int n_select, double gamma,
                                  const std::string& instance_id);

/// Per-iteration audits over a whole noiseless run.
std::vector<AuditReport> audit_noiseless_run(const Matrix& phi, const SparseSignal& truth,
                                             const PursuitResult& result,
                                             const DeltaMap& deltas, int n_select,
                                             const std::string& instance_id);

/// Per-iteration audits over a whole noisy run, plus a final
/// run-level report (iteration -1) carrying the first-bad-selection
/// error chain B3/B4/C3.
std::vector<AuditReport> audit_noisy_run(const Matrix& phi, const SparseSignal& truth,
                                         const Vector& noise, const PursuitResult& result,
                                         const DeltaMap& deltas, int n_select, double gamma,
                                         const std::string& instance_id);

/// ||x - x_hat||_2 against constant * ||n||_2 for a completed run.
AuditCheck reconstruction_error_check(const SparseSignal& truth, const PursuitResult& result,
                                      double noise_norm, double constant);

/// If the measurement SNR ||Phi x|| / ||n|| exceeds the threshold, the
/// true support must be contained in the recovered one; below the
/// threshold the check is inconclusive and reported vacuous. Throws
/// ZeroNoiseError when the noise vanishes.
AuditCheck snr_support_check(const Matrix& phi, const SparseSignal& truth,
                             const Vector& noise, const PursuitResult& result,
                             double c_k3_value);

} // namespace gomplab
