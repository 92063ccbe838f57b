#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seq2adic::cli {

/// Runs the seq2adic command line (subcommands: gen, analyze, verify,
/// sweep) against the given streams.  Returns the process exit code:
///   0 success, 1 verification failure, 2 invalid input, 3 I/O failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace seq2adic::cli
