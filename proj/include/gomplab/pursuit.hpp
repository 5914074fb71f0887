#pragma once

#include <optional>
#include <vector>

#include "gomplab/linalg.hpp"
#include "gomplab/types.hpp"

namespace gomplab {

enum class TieBreak { LowestIndex };

enum class HaltReason { IterationCap, ResidualTolerance, ResidualIncrease };

inline const char* halt_reason_name(HaltReason h) {
    switch (h) {
        case HaltReason::IterationCap: return "iteration_cap";
        case HaltReason::ResidualTolerance: return "residual_tolerance";
        case HaltReason::ResidualIncrease: return "residual_increase";
    }
    return "?";
}

struct PursuitConfig {
    int atoms_per_iteration = 1;      // N
    int max_iterations = 1;           // K
    double residual_tolerance = 1e-10; // relative to ||y||_2
    TieBreak tie_break = TieBreak::LowestIndex;
};

/// State recorded after each committed iteration.
struct IterationRecord {
    IndexSet selected;      // the N indices added this iteration
    IndexSet support;       // running support after augmentation
    double residual_norm = 0.0;
    Vector coefficients;    // least-squares solution on `support`
    std::optional<int> correct_count; // |support ∩ T|, when truth known
    std::optional<int> overlap_l;     // same quantity, the overlap l
};

struct PursuitTrace {
    std::vector<IterationRecord> iterations;
};

struct PursuitResult {
    IndexSet final_support;
    SparseSignal estimate;
    PursuitTrace trace;
    HaltReason halt_reason = HaltReason::IterationCap;
    double measurement_norm = 0.0;

    int iterations_used() const {
        return static_cast<int>(trace.iterations.size());
    }
};

/// The n_select indices outside `excluded` with the largest entries of
/// `corrs`; ties go to the lowest index. Deterministic.
IndexSet select_top_n(const Vector& corrs, int n_select, const IndexSet& excluded,
                      TieBreak tie_break = TieBreak::LowestIndex);

/// Orthogonal matching pursuit: one atom per iteration. Requires
/// cfg.atoms_per_iteration == 1.
PursuitResult omp_solve(const Matrix& phi, const Vector& y, const PursuitConfig& cfg,
                        const SparseSignal* truth = nullptr);

/// Generalized OMP: selects cfg.atoms_per_iteration new atoms per
/// iteration by largest absolute correlation with the residual, then
/// refits by least squares on the grown support. Requires
/// N * max_iterations < rows(phi).
PursuitResult gomp_solve(const Matrix& phi, const Vector& y, const PursuitConfig& cfg,
                         const SparseSignal* truth = nullptr);

} // namespace gomplab
