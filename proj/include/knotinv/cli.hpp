// Command-line front end.
//
//   knotinv parity <file> [--json]
//   knotinv invariant --type s|nprime <file> [--json] [--dump-matrix]
//   knotinv compare <file> <name1> <name2> [--type s|nprime] [--expect-equivalent] [--json]
//   knotinv verify [--trials N] [--max-crossings K] [--genus G] [--seed S]
//                  [--invariant s|nprime|both] [--report FILE] [--json]
//   knotinv dump-matrix <file> [--type s|nprime|n] [--triples]
//
// Exit status: 0 success, 1 usage or input error, 2 counterexample found or
// Distinct under --expect-equivalent.

#ifndef KNOTINV_CLI_HPP
#define KNOTINV_CLI_HPP

#include <ostream>

namespace knotinv {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace knotinv

#endif  // KNOTINV_CLI_HPP
