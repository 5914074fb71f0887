#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gomplab/generators.hpp"

namespace gomplab {

enum class ExperimentKind {
    CertifiedRecovery,
    PhaseTransition,
    NoiseBound,
    SnrThreshold,
    AuditCorpus,
};

enum class MatrixEnsemble { GaussianUnitColumns, PerturbedIdentity, FromFile };

enum class NoiseMode { None, TargetSnr, TargetNorm };

struct IntRange {
    int lo = 1;
    int hi = 1;
    int count() const { return hi - lo + 1; }
};

/// One experiment = trials x |k_range| x |n_range| solver runs with
/// per-trial seeds derived from the master seed, so any execution
/// order or thread count produces identical output files.
struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::PhaseTransition;
    int m = 0;
    int n = 0;
    IntRange k_range;          // sparsity sweep
    IntRange n_range;          // atoms-per-iteration sweep
    int trials = 1;
    std::uint64_t seed = 0;
    NoiseMode noise_mode = NoiseMode::None;
    double noise_level = 0.0;  // SNR target, norm target, or SNR margin
                               // over the computed threshold for the
                               // SnrThreshold kind
    MatrixEnsemble ensemble = MatrixEnsemble::GaussianUnitColumns;
    std::string matrix_path;   // FromFile only
    double epsilon = 0.1;      // PerturbedIdentity only
    double gamma = 2.0;
    SignalDistribution signal = SignalDistribution::RademacherPM1;
    std::string output_path;   // stem; ".csv" and ".json" are appended
};

struct TrialRecord {
    std::int64_t trial_id = 0;
    std::uint64_t seed = 0;
    int m = 0;
    int n = 0;
    int sparsity = 0;
    int n_atoms = 0;
    std::optional<bool> exact_support_recovered;
    int iterations_used = 0;
    std::optional<double> residual_norm;
    std::optional<double> reconstruction_error;
    std::optional<double> snr;
    std::optional<bool> t1, t2, t3, t3_appendix, t4, t5;
    std::optional<std::int64_t> audit_failures;
    std::string error;
};

struct ExperimentResult {
    std::vector<TrialRecord> records;
    std::string summary_json; // serialized summary
    std::string csv_path;     // empty when no output was requested
    std::string json_path;
    std::int64_t total_audit_failures = 0;
};

/// Parses the JSON config (snake_case keys mirroring ExperimentConfig).
ExperimentConfig parse_experiment_config_file(const std::string& path);
ExperimentConfig parse_experiment_config_text(const std::string& text);

/// Runs all trials (parallel across trials, capped by the
/// GOMP_LAB_THREADS environment variable) and, when output_path is
/// set, writes the CSV of trial records and the JSON summary.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// CSV serialization of the records, including the "# schema=1" line.
std::string records_to_csv(const std::vector<TrialRecord>& records);

/// Effective worker count.
int thread_cap();

} // namespace gomplab
