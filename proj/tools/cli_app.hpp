#pragma once

#include <iosfwd>

namespace seshadri::cli {

// Exit codes: 0 ok/valid/certified, 1 undecided/invalid, 2 usage or parse
// error, 3 violated precondition.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace seshadri::cli
