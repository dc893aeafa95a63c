// Command-line front end: benchmark tables and one-off logarithms.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "unilog/ensemble.hpp"
#include "unilog/errors.hpp"
#include "unilog/experiment.hpp"
#include "unilog/matrix_io.hpp"
#include "unilog/random.hpp"
#include "unilog/unitary_log.hpp"

namespace {

struct BenchOptions {
    std::string table;
    std::vector<std::size_t> sizes{8, 16, 32, 64, 128, 256};
    std::size_t trials = 30;
    std::uint64_t seed = 1;
    double noise_exponent = -0.56;
    std::string out;
    bool no_timing = false;
};

struct LogOptions {
    std::string algorithm;
    std::string in;
    std::string out;
};

int run_bench(const BenchOptions& opt) {
    const auto preset = unilog::table_preset(opt.table);
    std::vector<unilog::ExperimentRecord> all;
    for (std::size_t n : opt.sizes) {
        unilog::EnsembleSpec spec;
        spec.n = n;
        spec.noise_base = preset.noise_base;
        spec.noise_exponent = opt.noise_exponent;
        spec.trials = opt.trials;
        spec.seed = opt.seed;
        spec.structured = preset.structured;
        auto records = unilog::run_experiment(spec);

        const auto& avg = records.back();
        std::cerr << "n=" << n << " deviation=" << avg.measured_deviation;
        for (const auto& o : avg.outcomes) {
            std::cerr << " alg" << unilog::algorithm_label(o.algorithm) << "=" << o.backward_error;
            if (o.failures) std::cerr << " (" << o.failures << " failed)";
        }
        std::cerr << '\n';
        all.insert(all.end(), records.begin(), records.end());
    }

    unilog::CsvOptions csv;
    csv.include_timing = !opt.no_timing;
    std::ostringstream params;
    params << "table=" << opt.table << " noise_base=" << preset.noise_base
           << " noise_exponent=" << opt.noise_exponent << " trials=" << opt.trials
           << " seed=" << opt.seed << " structured=" << (preset.structured ? 1 : 0);
    csv.comments.push_back(std::string("rng=") + std::string(unilog::Rng::algorithm) +
                           " subseed=splitmix64(seed,trial)");
    csv.comments.push_back(params.str());
    csv.comments.push_back(std::string("noise=noise_base*n^noise_exponent*G, G iid real uniform on [-1,1]") +
                           ", cluster_offset=1e-8");
    if (opt.out.empty() || opt.out == "-")
        unilog::emit_csv(all, std::cout, csv);
    else
        unilog::emit_csv(all, std::filesystem::path(opt.out), csv);
    return 0;
}

int run_log(const LogOptions& opt) {
    const auto alg = unilog::parse_algorithm(opt.algorithm);
    const auto u = opt.in == "-" ? unilog::read_matrix(std::cin)
                                 : unilog::read_matrix(std::filesystem::path(opt.in));
    const auto r = unilog::log_unitary(u, alg);
    if (opt.out == "-")
        unilog::write_matrix(std::cout, r.h);
    else
        unilog::write_matrix(std::filesystem::path(opt.out), r.h);
    std::cerr << "deviation=" << r.deviation << " backward_error=" << r.backward_error << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hermitian logarithms of near-unitary matrices"};
    app.require_subcommand(1);

    BenchOptions bench;
    auto* b = app.add_subcommand("bench", "Run a benchmark table and write CSV");
    b->add_option("--table", bench.table, "Table preset")
        ->required()
        ->check(CLI::IsMember({"1", "3", "5", "dual-small", "dual-med", "dual-large"}));
    b->add_option("--sizes", bench.sizes, "Matrix sizes")->delimiter(',')->check(CLI::Range(4, 4096));
    b->add_option("--trials", bench.trials, "Trials per size")->check(CLI::PositiveNumber);
    b->add_option("--seed", bench.seed, "Base seed");
    b->add_option("--noise-exponent", bench.noise_exponent, "Exponent of n in the noise scale");
    b->add_option("--out", bench.out, "CSV destination ('-' for stdout)");
    b->add_flag("--no-timing", bench.no_timing, "Write 0 for wall times (byte-reproducible output)");

    LogOptions log;
    auto* l = app.add_subcommand("log", "Hermitian logarithm of one matrix");
    l->add_option("--algorithm", log.algorithm, "Algorithm")
        ->required()
        ->check(CLI::IsMember({"1", "3", "4", "5", "6", "1A"}));
    l->add_option("--in", log.in, "Input matrix file ('-' for stdin)")->required();
    l->add_option("--out", log.out, "Output matrix file ('-' for stdout)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (b->parsed()) return run_bench(bench);
        return run_log(log);
    } catch (const unilog::Error& e) {
        std::cerr << "unilog: " << e.what() << '\n';
        return 1;
    }
}
