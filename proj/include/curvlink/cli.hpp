#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace curvlink::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Exit codes: 0 pass/success, 1 fail/infeasible, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "3,4,7..9" into {3, 4, 7, 8, 9}.
std::vector<int> parse_int_list(const std::string& spec);

}  // namespace curvlink::cli
