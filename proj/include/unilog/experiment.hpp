#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "unilog/ensemble.hpp"
#include "unilog/unitary_log.hpp"

namespace unilog {

struct AlgorithmOutcome {
    Algorithm algorithm = Algorithm::Schur;
    double backward_error = 0.0;
    double wall_time = 0.0;
    /// Per-trial: 0 or 1. In an averaged record: number of failed trials,
    /// which are excluded from the mean.
    std::size_t failures = 0;
    std::string error;
};

/// One benchmark row: a single trial, or the mean over all trials.
struct ExperimentRecord {
    std::size_t n = 0;
    double noise_base = 0.0;
    std::size_t trial = 0;
    bool average = false;
    double measured_deviation = 0.0;
    std::vector<AlgorithmOutcome> outcomes;

    const AlgorithmOutcome* find(Algorithm alg) const;
};

/// {1, 3, 4, 5} for general ensembles, {1A, 6} for self-dual ones.
std::vector<Algorithm> algorithms_for(bool structured);

/// Per-trial records (trial i drawn from derive_seed(spec.seed, i)) followed
/// by the averaged record. Algorithms run sequentially on a single thread and
/// only the algorithm call is timed. A failing algorithm is recorded, never
/// fatal.
std::vector<ExperimentRecord> run_experiment(const EnsembleSpec& spec);

/// Mean over the non-average records.
ExperimentRecord average_records(const std::vector<ExperimentRecord>& trials);

struct CsvOptions {
    /// false writes 0 for wall_time_s, making output byte-reproducible.
    bool include_timing = true;
    /// Written as leading "# ..." lines.
    std::vector<std::string> comments;
};

/// Header `n,noise_base,deviation,alg,backward_error,wall_time_s`, one row
/// per (record, algorithm); averaged records get a leading "#avg" field.
/// Reals use scientific notation with 6 significant digits.
void emit_csv(const std::vector<ExperimentRecord>& records, std::ostream& out,
              const CsvOptions& options = {});
/// Throws IoError when the destination cannot be written.
void emit_csv(const std::vector<ExperimentRecord>& records,
              const std::filesystem::path& destination, const CsvOptions& options = {});

/// Benchmark table presets accepted by `unilog bench --table`.
struct TablePreset {
    double noise_base;
    bool structured;
};
/// "1", "3", "5", "dual-small", "dual-med", "dual-large".
TablePreset table_preset(const std::string& name);

} // namespace unilog
