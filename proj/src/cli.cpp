#include "lsqfit/cli.hpp"

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "lsqfit/bench.hpp"
#include "lsqfit/csv_io.hpp"
#include "lsqfit/errors.hpp"
#include "lsqfit/fit.hpp"
#include "lsqfit/json_out.hpp"
#include "lsqfit/synthetic.hpp"

namespace lsqfit {
namespace {

Dataset load_dataset(const std::string& path, std::istream& in) {
    if (path == "-") return parse_csv(in);
    std::ifstream file(path);
    if (!file) throw InputError("cannot open input file: " + path);
    return parse_csv(file);
}

// Documents go out whole: either to the stream or to a fresh file.
void write_document(const std::string& path, std::ostream& out, const std::string& body) {
    if (path == "-") {
        out << body;
        return;
    }
    std::ofstream file(path);
    if (!file) throw InputError("cannot open output file: " + path);
    file << body;
}

int default_chunks() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

BackendChoice backend_from_name(const std::string& name) {
    if (name == "normal") return BackendChoice::Normal;
    if (name == "qr") return BackendChoice::Qr;
    return BackendChoice::Both;
}

}  // namespace

int cli_main(int argc, const char* const argv[], std::istream& in,
             std::ostream& out, std::ostream& err) {
    CLI::App app{"least-squares polynomial curve fitting"};
    app.require_subcommand(1);

    std::string fit_input;
    int fit_degree = 0;
    std::string fit_backend = "normal";
    int fit_chunks = default_chunks();
    std::string fit_output = "-";
    CLI::App* fit_cmd = app.add_subcommand("fit", "fit a polynomial to CSV data");
    fit_cmd->add_option("--input", fit_input, "CSV file of x,y rows, or - for stdin")
        ->required();
    fit_cmd->add_option("--degree", fit_degree, "polynomial degree")
        ->required()
        ->check(CLI::NonNegativeNumber);
    fit_cmd->add_option("--backend", fit_backend, "solver: normal, qr, or both")
        ->check(CLI::IsMember({"normal", "qr", "both"}));
    fit_cmd->add_option("--chunks", fit_chunks, "accumulation slices (default: hardware threads)")
        ->check(CLI::PositiveNumber);
    fit_cmd->add_option("--output", fit_output, "JSON destination, or - for stdout");

    std::size_t bench_points = 0;
    int bench_degree = 0;
    int bench_chunks = 1;
    int bench_repeat = 0;
    std::uint64_t bench_seed = 0;
    std::string bench_output = "-";
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "time sequential vs chunked accumulation");
    bench_cmd->add_option("--points", bench_points, "synthetic dataset size")->required();
    bench_cmd->add_option("--degree", bench_degree, "polynomial degree")
        ->required()
        ->check(CLI::NonNegativeNumber);
    bench_cmd->add_option("--chunks", bench_chunks, "accumulation slices")
        ->required()
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--repeat", bench_repeat, "timed repetitions (at least 3)")
        ->required()
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", bench_seed, "generator seed")->required();
    bench_cmd->add_option("--output", bench_output, "JSON destination, or - for stdout");

    std::size_t gen_points = 0;
    int gen_degree = 0;
    double gen_noise = 0.0;
    std::uint64_t gen_seed = 0;
    std::string gen_output;
    CLI::App* gen_cmd = app.add_subcommand("gen", "write a synthetic CSV dataset");
    gen_cmd->add_option("--points", gen_points, "dataset size")->required();
    gen_cmd->add_option("--degree", gen_degree, "ground-truth polynomial degree")
        ->required()
        ->check(CLI::NonNegativeNumber);
    gen_cmd->add_option("--noise", gen_noise, "Gaussian noise sigma")
        ->required()
        ->check(CLI::NonNegativeNumber);
    gen_cmd->add_option("--seed", gen_seed, "generator seed")->required();
    gen_cmd->add_option("--output", gen_output, "CSV destination, or - for stdout")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (fit_cmd->parsed()) {
            const Dataset dataset = load_dataset(fit_input, in);
            FitRequest request;
            request.degree = fit_degree;
            request.backend = backend_from_name(fit_backend);
            request.chunks = fit_chunks;
            const FitOutcome outcome = fit(dataset, request);
            if (!outcome.backends_agree)
                err << "warning: backends disagree; max coefficient discrepancy "
                    << *outcome.max_coef_discrepancy << '\n';
            write_document(fit_output, out, emit_report(outcome) + "\n");
        } else if (bench_cmd->parsed()) {
            const BenchReport report =
                run_benchmark(bench_points, bench_degree, bench_chunks, bench_repeat, bench_seed);
            if (!report.valid)
                err << "warning: strategies deviate by " << report.max_relative_deviation
                    << ", beyond 1e-9\n";
            write_document(bench_output, out, emit_bench_report(report) + "\n");
        } else if (gen_cmd->parsed()) {
            const Dataset dataset = generate_synthetic(gen_points, gen_degree, gen_noise, gen_seed);
            std::ostringstream csv;
            write_csv(csv, dataset);
            write_document(gen_output, out, csv.str());
        }
        return 0;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const NumericError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace lsqfit
