#pragma once

#include <string>
#include <vector>

namespace pob {

struct CliResult {
  std::string out;
  int status = 0;  // 0 success/true, 1 property false, 2 input error
};

// Runs one subcommand: validate, invariants, heegaard, stabilize,
// isomorphic, oracle-check, enumerate.  File contents are read from
// disk; reports are byte-stable given identical inputs.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace pob
