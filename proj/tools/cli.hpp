#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bary::cli {

/**
 * Runs one command line. args[0] is the program name.
 *
 * Exit codes: 0 success or a true answer, 1 a well-formed false answer,
 * 2 malformed input or internal error. Errors print a single line
 * "error: <Code>: <message>" on `err`.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bary::cli
