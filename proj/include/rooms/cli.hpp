#pragma once

#include <iosfwd>

namespace rooms {

// Entry point of the command-line tool.  Parses argv, writes one JSON
// report to `out` (plus optional DOT/JSONL side files) and returns the
// process exit code:
//   0  success, every requested check passed
//   1  a verification check failed
//   2  usage, parse, range or resource-bound errors
//   3  the requested object provably does not exist (unreachable target,
//      permutation with no derangement factorization)
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace rooms
