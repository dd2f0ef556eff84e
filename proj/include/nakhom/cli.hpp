#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nakhom {

inline constexpr const char* kToolVersion = "0.1.0";

/* Full command-line surface. Exit codes: 0 success, 1 verification mismatch,
 * 2 invalid input or usage. Deterministic output: same flags (and seed) give
 * identical bytes; timing is printed only on request. */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nakhom
