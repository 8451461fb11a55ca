#pragma once

#include <iosfwd>

namespace homalg::cli {

// Exit codes: 0 success, 1 expectation mismatch, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace homalg::cli
