#pragma once

#include <string>
#include <vector>

namespace prsim::cli {

/// Entry point of the prsim command line tool. Subcommands:
///   solve, sim-single, sim-simul, sim-terminate, sim-async, consensus,
///   verify, mc, gen
/// Returns the process exit code: 0 on success, 1 on usage/input errors,
/// 2 when a verification check fails.
int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, char** argv);

}  // namespace prsim::cli
