#pragma once

// The skhp command-line tool: spectrum, wavefunction, thermo, info, reproduce, figure.

#include <iosfwd>
#include <string>
#include <vector>

namespace skhp::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_internal = 1,   ///< numerical failure (e.g. quadrature did not converge)
    exit_config = 2,     ///< invalid flags, config file or parameter values
    exit_unbound = 3,    ///< a requested state is not bound
    exit_regression = 4, ///< reproduce: published energies not met
};

/// Runs one invocation. args excludes the program name. Results go to `out`
/// unless --out names a file; diagnostics and summaries go to `err`.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

} // namespace skhp::cli
