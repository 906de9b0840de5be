#pragma once

#include <string>

#include "lsqfit/bench.hpp"
#include "lsqfit/fit.hpp"

namespace lsqfit {

/// The exact formula behind FitReport::r, quoted in every emitted report.
inline constexpr const char* kRDefinition =
    "r = sqrt(max(0, 1 - sse/sst)) with sst = sum((y_i - mean(y))^2); "
    "when sst = 0, r is 1 for an exact fit and 0 otherwise";

/// JSON for one fit report. Numbers carry 17 significant digits, so parsing
/// them back reproduces the doubles bit-exactly.
std::string emit_report(const FitReport& report);

/// JSON for a fit outcome: the bare report object for a single backend, or
/// {"reports": [normal, qr], "max_coef_discrepancy": ...} for Both.
std::string emit_report(const FitOutcome& outcome);

std::string emit_bench_report(const BenchReport& report);

}  // namespace lsqfit
