#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pla {

// Runs one command line (without the program name). Exit codes: 0 done and
// every requested check passed, 1 a requested check failed, 2 bad usage or
// input. Structured records go to --records PATH, or to $PLA_RECORDS.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pla
