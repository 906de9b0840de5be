// Acceptance suite: end-to-end checks of the fitting library and CLI against
// their reference values and tolerances. Each criterion prints one PASS/FAIL
// line; the process exits nonzero if any hard criterion fails.

#include <sys/wait.h>

#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lsqfit/bench.hpp"
#include "lsqfit/fit.hpp"
#include "lsqfit/json_out.hpp"
#include "lsqfit/normal_backend.hpp"
#include "lsqfit/power_sums.hpp"
#include "lsqfit/qr_backend.hpp"
#include "lsqfit/synthetic.hpp"
#include "support/oracles.hpp"
#include "support/table1.hpp"

using namespace lsqfit;
using namespace testsupport;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool passed = true;
    std::string detail;
};

class Harness {
public:
    void run(const std::string& name, bool soft, const std::function<Outcome()>& body) {
        ++index_;
        const auto t0 = Clock::now();
        Outcome outcome;
        try {
            outcome = body();
        } catch (const std::exception& e) {
            outcome.passed = false;
            outcome.detail = std::string("unexpected exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();

        const char* verdict = outcome.passed ? "PASS" : (soft ? "SOFT-FAIL" : "FAIL");
        std::printf("[%2d] %-9s %7.3f s  %s\n", index_, verdict, seconds, name.c_str());
        if (!outcome.detail.empty()) std::printf("     %s\n", outcome.detail.c_str());
        if (!outcome.passed && !soft) ++hard_failures_;
    }

    int hard_failures() const { return hard_failures_; }
    int total() const { return index_; }

private:
    int index_ = 0;
    int hard_failures_ = 0;
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

bool check_coeffs(const FitReport& report, const std::vector<double>& expected,
                  const std::vector<double>& tolerances, std::string& detail) {
    const std::vector<double>& got = report.polynomial.coefficients();
    if (got.size() != expected.size()) {
        detail = "coefficient count mismatch";
        return false;
    }
    for (std::size_t k = 0; k < expected.size(); ++k) {
        if (std::abs(got[k] - expected[k]) > tolerances[k]) {
            detail = std::string(backend_name(report.backend)) + " a" + std::to_string(k) +
                     " = " + fmt(got[k]) + ", expected " + fmt(expected[k]) + " +- " +
                     fmt(tolerances[k]);
            return false;
        }
    }
    return true;
}

struct SpawnResult {
    int exit_code = -1;
    std::string out;
};

SpawnResult spawn_cli(const std::string& args) {
    const std::string out_path =
        (std::filesystem::temp_directory_path() / "lsqfit_acceptance_out.txt").string();
    const std::string command =
        std::string("\"") + LSQFIT_CLI_PATH + "\" " + args + " > \"" + out_path +
        "\" 2> /dev/null";
    const int status = std::system(command.c_str());

    SpawnResult result;
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    std::ifstream file(out_path);
    std::ostringstream body;
    body << file.rdbuf();
    result.out = body.str();
    std::remove(out_path.c_str());
    return result;
}

// ---------------------------------------------------------------------------

Outcome degree1_reference() {
    Outcome outcome;
    const auto t0 = Clock::now();
    const FitOutcome fits = fit(table1(), FitRequest{1, BackendChoice::Both, 1});
    const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();

    for (const FitReport& report : fits.reports)
        if (!check_coeffs(report, {kDeg1Coeffs[0], kDeg1Coeffs[1]}, {5e-3, 5e-4},
                          outcome.detail))
            outcome.passed = false;
    if (seconds >= 1.0) {
        outcome.passed = false;
        outcome.detail += " runtime " + fmt(seconds) + " s >= 1 s";
    }
    return outcome;
}

Outcome degree2_reference() {
    Outcome outcome;
    const FitOutcome fits = fit(table1(), FitRequest{2, BackendChoice::Both, 1});
    const std::vector<double> expected(kDeg2Coeffs.begin(), kDeg2Coeffs.end());
    for (const FitReport& report : fits.reports)
        if (!check_coeffs(report, expected, {1e-3, 1e-3, 1e-3}, outcome.detail))
            outcome.passed = false;

    // The two reference solver routes differ by 3e-4 in the intercept; our
    // two backends must stay within that spread of each other.
    const double a0_normal = fits.reports[0].polynomial.coefficients()[0];
    const double a0_qr = fits.reports[1].polynomial.coefficients()[0];
    if (std::abs(a0_normal - a0_qr) > 3e-4) {
        outcome.passed = false;
        outcome.detail += " backend intercepts differ by " + fmt(std::abs(a0_normal - a0_qr));
    }
    return outcome;
}

Outcome degree3_reference() {
    Outcome outcome;
    const FitOutcome fits = fit(table1(), FitRequest{3, BackendChoice::Both, 1});
    const std::vector<double> expected = {-4.755, 17.511, 0.1086, -0.0016};
    for (const FitReport& report : fits.reports)
        if (!check_coeffs(report, expected, {1e-3, 1e-3, 1e-3, 1e-3}, outcome.detail))
            outcome.passed = false;
    return outcome;
}

Outcome degree3_sse() {
    Outcome outcome;
    const FitOutcome fits = fit(table1(), FitRequest{3, BackendChoice::Both, 1});
    for (const FitReport& report : fits.reports) {
        if (std::abs(report.sse - kDeg3Sse) > 0.05) {
            outcome.passed = false;
            outcome.detail = std::string(backend_name(report.backend)) + " sse " +
                             fmt(report.sse) + ", expected " + fmt(kDeg3Sse) + " +- 0.05";
        }
    }

    // Evaluating the 4-decimal rounded reference coefficients must reproduce
    // the reference fitted column and its larger error sum.
    const Polynomial rounded({kDeg3QrCoeffs.begin(), kDeg3QrCoeffs.end()});
    const Dataset d = table1();
    double rounded_sse = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const double fitted = evaluate(rounded, d[i].x);
        if (std::abs(fitted - kDeg3QrFittedY[i]) > 0.05) {
            outcome.passed = false;
            outcome.detail = "fitted value at row " + std::to_string(i) + " is " +
                             fmt(fitted) + ", expected " + fmt(kDeg3QrFittedY[i]);
        }
        const double e = d[i].y - fitted;
        rounded_sse += e * e;
    }
    if (std::abs(rounded_sse - kDeg3RoundedSse) > 1e-2) {
        outcome.passed = false;
        outcome.detail += " rounded-coefficient sse " + fmt(rounded_sse) + ", expected " +
                          fmt(kDeg3RoundedSse) + " +- 1e-2";
    }
    return outcome;
}

Outcome correlation_reference() {
    Outcome outcome;
    for (int degree = 1; degree <= 3; ++degree) {
        const FitReport report = fit_normal(table1(), degree);
        const double expected = kRByDegree[degree - 1];
        if (std::abs(report.r - expected) > 1e-3) {
            outcome.passed = false;
            outcome.detail += "degree " + std::to_string(degree) + " r = " + fmt(report.r) +
                              ", expected " + fmt(expected) + " +- 1e-3; ";
        }
    }
    return outcome;
}

Outcome backend_equivalence() {
    Outcome outcome;
    const auto t0 = Clock::now();
    std::mt19937_64 gen(20250810);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 10 + gen() % 991;
        const int degree = static_cast<int>(gen() % 7);
        const double sigma = (gen() & 1) ? 0.1 : 0.0;
        const Dataset d = generate_synthetic(n, degree, sigma, gen());

        const FitOutcome fits = fit(d, FitRequest{degree, BackendChoice::Both, 1});
        const std::vector<double>& pn = fits.reports[0].polynomial.coefficients();
        const std::vector<double>& pq = fits.reports[1].polynomial.coefficients();
        for (std::size_t k = 0; k <= static_cast<std::size_t>(degree); ++k) {
            const double scale = 1.0 + std::max(std::abs(pn[k]), std::abs(pq[k]));
            if (std::abs(pn[k] - pq[k]) > 1e-6 * scale) {
                outcome.passed = false;
                outcome.detail = "trial " + std::to_string(trial) + ": a" +
                                 std::to_string(k) + " differs by " +
                                 fmt(std::abs(pn[k] - pq[k]));
            }
        }
        for (const FitReport& report : fits.reports) {
            if (normal_equation_residual_ratio(d, report.polynomial) > 1e-6) {
                outcome.passed = false;
                outcome.detail = "trial " + std::to_string(trial) + ": " +
                                 backend_name(report.backend) +
                                 " violates the zero-gradient condition";
            }
        }
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (seconds >= 30.0) {
        outcome.passed = false;
        outcome.detail += " runtime " + fmt(seconds) + " s >= 30 s";
    }
    return outcome;
}

Outcome interpolation_exactness() {
    Outcome outcome;
    std::mt19937_64 gen(7151);
    for (int m = 0; m <= 6; ++m) {
        for (int draw = 0; draw < 20; ++draw) {
            std::vector<Point> pts(m + 1);
            double y_max = 0.0;
            for (int i = 0; i <= m; ++i) {
                const double x = m == 0 ? 0.5 : static_cast<double>(i) / m;
                const double y =
                    -1.0 + 2.0 * (static_cast<double>(gen() >> 11) * 0x1.0p-53);
                pts[i] = {x, y};
                y_max = std::max(y_max, std::abs(y));
            }
            const Dataset d(pts);
            for (const FitReport& report : {fit_normal(d, m), fit_qr(d, m)}) {
                for (double e : report.residuals) {
                    if (std::abs(e) > 1e-8 * (1.0 + y_max)) {
                        outcome.passed = false;
                        outcome.detail = "degree " + std::to_string(m) + " residual " +
                                         fmt(e) + " from " +
                                         backend_name(report.backend);
                    }
                }
            }
        }
    }
    return outcome;
}

Outcome sse_monotonicity() {
    Outcome outcome;
    std::mt19937_64 gen(88);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 20 + gen() % 481;
        const Dataset d = generate_synthetic(n, 3, 0.1, gen());
        double prev = -1.0;
        for (int m = 0; m <= 6; ++m) {
            const double sse = fit_normal(d, m).sse;
            if (m > 0 && sse > prev + 1e-9 * (1.0 + prev)) {
                outcome.passed = false;
                outcome.detail = "trial " + std::to_string(trial) + ": sse rose from " +
                                 fmt(prev) + " to " + fmt(sse) + " at degree " +
                                 std::to_string(m);
            }
            prev = sse;
        }
    }
    return outcome;
}

Outcome parallel_correctness() {
    Outcome outcome;
    const auto t0 = Clock::now();
    const Dataset d = generate_synthetic(1000000, 4, 0.1, 424242);
    const PowerSums seq = accumulate(d, 4);

    for (int chunks : {1, 2, 4, 8}) {
        const PowerSums par = accumulate_parallel(d, 4, chunks);
        auto relative = [](double a, double b) {
            const double denom = std::max(std::abs(a), std::abs(b));
            return denom > 0.0 ? std::abs(a - b) / denom : 0.0;
        };
        for (std::size_t k = 0; k < seq.s.size(); ++k) {
            if (relative(seq.s[k], par.s[k]) > 1e-9) {
                outcome.passed = false;
                outcome.detail = "chunks " + std::to_string(chunks) + ": s[" +
                                 std::to_string(k) + "] deviates";
            }
        }
        for (std::size_t j = 0; j < seq.t.size(); ++j) {
            if (relative(seq.t[j], par.t[j]) > 1e-9) {
                outcome.passed = false;
                outcome.detail = "chunks " + std::to_string(chunks) + ": t[" +
                                 std::to_string(j) + "] deviates";
            }
        }
        if (chunks == 1) {
            for (std::size_t k = 0; k < seq.s.size(); ++k) {
                if (std::bit_cast<std::uint64_t>(seq.s[k]) !=
                    std::bit_cast<std::uint64_t>(par.s[k])) {
                    outcome.passed = false;
                    outcome.detail = "chunks=1 is not bit-identical";
                }
            }
        }
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (seconds >= 10.0) {
        outcome.passed = false;
        outcome.detail += " runtime " + fmt(seconds) + " s >= 10 s";
    }
    return outcome;
}

Outcome benchmark_at_scale() {
    Outcome outcome;
    const BenchReport report = run_benchmark(10000000, 4, 4, 3, 31337);
    if (!report.valid || report.max_relative_deviation > 1e-9) {
        outcome.passed = false;
        outcome.detail = "deviation " + fmt(report.max_relative_deviation) + " > 1e-9";
        return outcome;
    }
    // The speedup itself is hardware-dependent and reported, not asserted.
    outcome.detail = "speedup " + fmt(report.speedup) + " at chunks=4 (informational)";
    return outcome;
}

Outcome cli_contract() {
    Outcome outcome;
    const std::string table1_path = std::string(LSQFIT_TEST_DATA_DIR) + "/table1.csv";

    const SpawnResult ok =
        spawn_cli("fit --input \"" + table1_path + "\" --degree 3 --backend both");
    if (ok.exit_code != 0) {
        outcome.passed = false;
        outcome.detail = "fit --degree 3 exited " + std::to_string(ok.exit_code);
        return outcome;
    }
    const json parsed = json::parse(ok.out);
    for (const json& report : parsed["reports"]) {
        if (std::abs(report["sse"].get<double>() - kDeg3Sse) > 0.05) {
            outcome.passed = false;
            outcome.detail = "CLI sse " + report["sse"].dump() + " is off";
        }
    }

    const SpawnResult singular =
        spawn_cli("fit --input \"" + table1_path + "\" --degree 7");
    if (singular.exit_code != 3 || !singular.out.empty()) {
        outcome.passed = false;
        outcome.detail = "fit --degree 7 exited " + std::to_string(singular.exit_code) +
                         " with " + std::to_string(singular.out.size()) + " output bytes";
    }

    const SpawnResult usage =
        spawn_cli("fit --input \"" + table1_path + "\" --degree -1");
    if (usage.exit_code != 2) {
        outcome.passed = false;
        outcome.detail = "fit --degree -1 exited " + std::to_string(usage.exit_code);
    }

    // Emitted numbers parse back to the exact same doubles.
    const FitReport report = fit_normal(table1(), 2);
    const json round = json::parse(emit_report(report));
    for (std::size_t k = 0; k < report.polynomial.coefficients().size(); ++k) {
        if (round["coefficients"][k].get<double>() != report.polynomial.coefficients()[k]) {
            outcome.passed = false;
            outcome.detail = "coefficient " + std::to_string(k) + " did not round-trip";
        }
    }
    if (round["sse"].get<double>() != report.sse ||
        round["r"].get<double>() != report.r) {
        outcome.passed = false;
        outcome.detail = "sse or r did not round-trip";
    }
    return outcome;
}

}  // namespace

int main() {
    Harness harness;

    harness.run("degree-1 reference coefficients, both backends, under 1 s", false,
                degree1_reference);
    harness.run("degree-2 reference coefficients; backends within the reference spread",
                false, degree2_reference);
    harness.run("degree-3 reference coefficients, both backends", false, degree3_reference);
    harness.run("degree-3 SSE, plus the rounded-coefficient fitted column", false,
                degree3_sse);
    harness.run("correlation coefficient for degrees 1-3 (soft)", true,
                correlation_reference);
    harness.run("backend equivalence and zero-gradient residuals on 200 datasets, under 30 s",
                false, backend_equivalence);
    harness.run("interpolation exactness at n = degree+1, degrees 0-6", false,
                interpolation_exactness);
    harness.run("SSE monotonicity across degrees 0-6 on 50 datasets", false,
                sse_monotonicity);
    harness.run("chunked accumulation matches sequential on a million points, under 10 s",
                false, parallel_correctness);
    harness.run("benchmark at ten million points reports valid sums", false,
                benchmark_at_scale);
    harness.run("CLI exit codes and bit-exact JSON round-trip", false, cli_contract);

    std::printf("%d of %d criteria passed\n", harness.total() - harness.hard_failures(),
                harness.total());
    return harness.hard_failures() == 0 ? 0 : 1;
}
