#pragma once

#include <iosfwd>

#include "lsqfit/dataset.hpp"

namespace lsqfit {

/// Parses lines of "x,y" decimal floats. A single leading header line is
/// skipped when its first field is not numeric; lines starting with '#' and
/// blank lines are ignored; whitespace around fields is trimmed. Throws
/// CsvParseError (1-based line numbers) on malformed rows and
/// EmptyDatasetError when fewer than two usable rows remain.
Dataset parse_csv(std::istream& in);

/// Writes an "x,y" header plus one row per point at 17 significant digits,
/// so parse_csv(write_csv(d)) reproduces the values exactly.
void write_csv(std::ostream& out, const Dataset& dataset);

}  // namespace lsqfit
