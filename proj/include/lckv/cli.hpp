#ifndef LCKV_CLI_HPP
#define LCKV_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lckv {

inline constexpr const char* tool_version = "1.0.0";
inline constexpr int report_schema_version = 1;

// Exit status: 0 when no check failed, 1 when one did, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

// Worker count for verify-table: LCKV_THREADS if set to a positive integer,
// otherwise the hardware concurrency.
unsigned worker_count();

}  // namespace lckv

#endif
