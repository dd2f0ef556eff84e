#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace nakhom {

/* Every user-facing failure carries a stable machine-readable code
 * (e.g. "SlopeViolation", "IndexExceedsDomdim") next to the human text. */
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
    throw Error(code, what);
}

/* Violations of internal invariants (bugs, not bad input). */
[[noreturn]] inline void fail_internal(const std::string& what) {
    throw Error("InternalError", what);
}

}  // namespace nakhom
