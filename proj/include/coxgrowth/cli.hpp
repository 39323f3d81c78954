#ifndef COXGROWTH_CLI_HPP
#define COXGROWTH_CLI_HPP

#include <iosfwd>

namespace coxgrowth {

// Full command-line surface of the tool. Returns the process exit code:
// 0 success, 1 verification failure, 2 usage or parse error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coxgrowth

#endif
