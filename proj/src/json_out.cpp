#include "lsqfit/json_out.hpp"

#include <sstream>

#include "double_text.hpp"
#include "lsqfit/diagnostics.hpp"

namespace lsqfit {
namespace {

using detail::double_text;

std::string escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

std::string coefficient_array(const Polynomial& poly) {
    std::string out = "[";
    const std::vector<double>& coeffs = poly.coefficients();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (k) out += ", ";
        out += double_text(coeffs[k]);
    }
    out += "]";
    return out;
}

void append_report(std::ostringstream& os, const FitReport& report,
                   const std::string& indent) {
    os << indent << "{\n";
    os << indent << "  \"degree\": " << report.polynomial.degree() << ",\n";
    os << indent << "  \"backend\": \"" << backend_name(report.backend) << "\",\n";
    os << indent << "  \"coefficients\": " << coefficient_array(report.polynomial) << ",\n";
    os << indent << "  \"sse\": " << double_text(report.sse) << ",\n";
    os << indent << "  \"r\": " << double_text(report.r) << ",\n";
    os << indent << "  \"n_points\": " << report.n_points << ",\n";
    os << indent << "  \"r_definition\": \"" << escape(kRDefinition) << "\"\n";
    os << indent << "}";
}

}  // namespace

std::string emit_report(const FitReport& report) {
    std::ostringstream os;
    append_report(os, report, "");
    return os.str();
}

std::string emit_report(const FitOutcome& outcome) {
    if (outcome.reports.size() == 1) return emit_report(outcome.reports.front());

    std::ostringstream os;
    os << "{\n";
    os << "  \"reports\": [\n";
    for (std::size_t i = 0; i < outcome.reports.size(); ++i) {
        append_report(os, outcome.reports[i], "    ");
        os << (i + 1 < outcome.reports.size() ? ",\n" : "\n");
    }
    os << "  ],\n";
    os << "  \"max_coef_discrepancy\": "
       << double_text(outcome.max_coef_discrepancy.value_or(0.0)) << "\n";
    os << "}";
    return os.str();
}

std::string emit_bench_report(const BenchReport& report) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"n_points\": " << report.n_points << ",\n";
    os << "  \"degree\": " << report.degree << ",\n";
    os << "  \"chunks\": " << report.chunks << ",\n";
    os << "  \"repetitions\": " << report.repetitions << ",\n";
    os << "  \"sequential\": {\"median_s\": " << double_text(report.sequential_median_s)
       << ", \"min_s\": " << double_text(report.sequential_min_s) << "},\n";
    os << "  \"parallel\": {\"median_s\": " << double_text(report.parallel_median_s)
       << ", \"min_s\": " << double_text(report.parallel_min_s) << "},\n";
    os << "  \"speedup\": " << double_text(report.speedup) << ",\n";
    os << "  \"max_relative_deviation\": " << double_text(report.max_relative_deviation)
       << ",\n";
    os << "  \"valid\": " << (report.valid ? "true" : "false") << "\n";
    os << "}";
    return os.str();
}

}  // namespace lsqfit
