#include "unilog/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

#include "unilog/errors.hpp"
#include "unilog/selfdual.hpp"

namespace unilog {

namespace {

std::string sci(double x) {
    if (std::isnan(x)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5e", x);
    return buf;
}

} // namespace

const AlgorithmOutcome* ExperimentRecord::find(Algorithm alg) const {
    for (const auto& o : outcomes)
        if (o.algorithm == alg) return &o;
    return nullptr;
}

std::vector<Algorithm> algorithms_for(bool structured) {
    if (structured) return {Algorithm::DiagonalizeSelfDual, Algorithm::SelfDual};
    return {Algorithm::Diagonalize, Algorithm::Schur, Algorithm::PolarSchur, Algorithm::NewtonSchur};
}

std::vector<ExperimentRecord> run_experiment(const EnsembleSpec& spec) {
    spec.validate();
    const auto algorithms = algorithms_for(spec.structured);
    std::vector<ExperimentRecord> records;
    records.reserve(spec.trials + 1);

    for (std::size_t trial = 0; trial < spec.trials; ++trial) {
        Rng rng(derive_seed(spec.seed, trial));
        const ComplexMatrix u = ensemble_sample(spec, rng);

        ExperimentRecord rec;
        rec.n = spec.n;
        rec.noise_base = spec.noise_base;
        rec.trial = trial;
        rec.measured_deviation = deviation_from_unitary(u);
        for (Algorithm alg : algorithms) {
            AlgorithmOutcome out;
            out.algorithm = alg;
            try {
                const auto r = log_unitary(u, alg);
                out.backward_error = r.backward_error;
                out.wall_time = r.wall_time;
                if (!std::isfinite(r.backward_error)) {
                    out.failures = 1;
                    out.error = "non-finite backward error";
                }
            } catch (const std::exception& e) {
                out.failures = 1;
                out.error = e.what();
            }
            if (out.failures) out.backward_error = std::numeric_limits<double>::quiet_NaN();
            rec.outcomes.push_back(std::move(out));
        }
        records.push_back(std::move(rec));
    }
    records.push_back(average_records(records));
    return records;
}

ExperimentRecord average_records(const std::vector<ExperimentRecord>& trials) {
    ExperimentRecord avg;
    avg.average = true;
    std::size_t count = 0;
    for (const auto& rec : trials) {
        if (rec.average) continue;
        if (count == 0) {
            avg.n = rec.n;
            avg.noise_base = rec.noise_base;
            for (const auto& o : rec.outcomes) {
                AlgorithmOutcome a;
                a.algorithm = o.algorithm;
                avg.outcomes.push_back(a);
            }
        }
        ++count;
        avg.measured_deviation += rec.measured_deviation;
        for (const auto& o : rec.outcomes) {
            for (auto& a : avg.outcomes) {
                if (a.algorithm != o.algorithm) continue;
                if (o.failures) {
                    a.failures += 1;
                    if (a.error.empty()) a.error = o.error;
                } else {
                    a.backward_error += o.backward_error;
                    a.wall_time += o.wall_time;
                }
            }
        }
    }
    avg.trial = count;
    if (count == 0) return avg;
    avg.measured_deviation /= static_cast<double>(count);
    for (auto& a : avg.outcomes) {
        const std::size_t ok = count - a.failures;
        if (ok == 0) {
            a.backward_error = std::numeric_limits<double>::quiet_NaN();
            a.wall_time = 0.0;
        } else {
            a.backward_error /= static_cast<double>(ok);
            a.wall_time /= static_cast<double>(ok);
        }
    }
    return avg;
}

void emit_csv(const std::vector<ExperimentRecord>& records, std::ostream& out,
              const CsvOptions& options) {
    for (const auto& c : options.comments) out << "# " << c << '\n';
    out << "n,noise_base,deviation,alg,backward_error,wall_time_s\n";
    for (const auto& rec : records) {
        for (const auto& o : rec.outcomes) {
            if (rec.average) out << "#avg,";
            out << rec.n << ',' << sci(rec.noise_base) << ',' << sci(rec.measured_deviation) << ','
                << algorithm_label(o.algorithm) << ',' << sci(o.backward_error) << ','
                << sci(options.include_timing ? o.wall_time : 0.0) << '\n';
        }
    }
    if (!out) throw IoError("emit_csv: write failed");
}

void emit_csv(const std::vector<ExperimentRecord>& records, const std::filesystem::path& destination,
              const CsvOptions& options) {
    std::ofstream f(destination, std::ios::binary);
    if (!f) throw IoError("emit_csv: cannot open '" + destination.string() + "' for writing");
    emit_csv(records, f, options);
    f.close();
    if (!f) throw IoError("emit_csv: failed writing '" + destination.string() + "'");
}

TablePreset table_preset(const std::string& name) {
    if (name == "1") return {1e-15, false};
    if (name == "3") return {1e-5, false};
    if (name == "5") return {0.3, false};
    if (name == "dual-small") return {1e-15, true};
    if (name == "dual-med") return {1e-5, true};
    if (name == "dual-large") return {0.3, true};
    throw DomainError("unknown table '" + name + "'");
}

} // namespace unilog
