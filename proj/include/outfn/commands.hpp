#pragma once

// The `outfn` command line: subcommands gersten, decompose, section4,
// induce and graph. Exit codes: 0 every check passed, 1 some check failed,
// 2 usage or input error.

#include <ostream>

namespace outfn::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace outfn::cli
