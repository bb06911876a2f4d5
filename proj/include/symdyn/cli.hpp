#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace symdyn {

/// Command-line front door; returns the process exit status. Verdicts
/// (including counterexamples) are data and exit 0; malformed input,
/// invariant violations and verifier failures are nonzero.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symdyn
