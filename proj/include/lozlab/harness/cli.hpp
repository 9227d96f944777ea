#pragma once
// Command-line front end. Exit codes: 0 success, 1 a verification failed,
// 2 usage error.

#include <iosfwd>

namespace lozlab {

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lozlab
