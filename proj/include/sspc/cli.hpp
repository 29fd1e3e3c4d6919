#pragma once

#include <iosfwd>

namespace sspc::cli {

// Dispatches one command-line invocation. Streams are injected so the tests
// drive the exact code path main() uses. Exit codes: 0 success (a negative
// verdict is still a successful run), 1 audit rule violation or failed
// certificate re-validation, 2 parse failure (flags or input files),
// 3 precondition violation.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sspc::cli
