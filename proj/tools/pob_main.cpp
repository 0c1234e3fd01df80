// Command-line driver for the partial open book toolkit.
//
// usage: pob <command> [arguments] [flags]
//   validate <file>                Definition conditions report
//   invariants <file>              surface, suture and homology data
//   heegaard <file>                diagram export and balance verdict
//   stabilize <file> --arc <word>  positive stabilization, prints the result
//   isomorphic <a> <b>             relabeling witness search
//   oracle-check <file>            compares the two homology routes
//   enumerate [--max-disks D --max-handles H --max-twists T] [--count]
// Flags: --json for machine-readable reports.
//
// Exit status: 0 success/true, 1 property false, 2 input error.

#include <cstdio>
#include <string>
#include <vector>

#include "pob/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || args[0] == "--help" || args[0] == "-h") {
    std::fputs(
        "usage: pob <command> [args] [--json]\n"
        "commands: validate invariants heegaard stabilize isomorphic oracle-check enumerate\n",
        args.empty() ? stderr : stdout);
    return args.empty() ? 2 : 0;
  }
  pob::CliResult res = pob::run_cli(args);
  std::fputs(res.out.c_str(), stdout);
  return res.status;
}
