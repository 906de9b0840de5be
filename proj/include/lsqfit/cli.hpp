#pragma once

#include <iosfwd>

namespace lsqfit {

/// Entry point behind the lsqfit binary. Subcommands: fit, bench, gen.
/// Returns 0 on success, 2 on usage or input errors, 3 on numerical errors.
/// Diagnostics go to err; data goes to out (or the --output file) only, and
/// only as a complete document.
int cli_main(int argc, const char* const argv[], std::istream& in,
             std::ostream& out, std::ostream& err);

}  // namespace lsqfit
