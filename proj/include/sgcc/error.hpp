#pragma once

#include <stdexcept>
#include <string>

namespace sgcc {

// Error categories map one-to-one onto CLI exit codes.
enum class ErrorKind {
    invalid_input = 1,
    precondition = 2,
    budget_exceeded = 3,
    bound_violation = 4,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
    if (!cond) fail(kind, what);
}

// Internal consistency check; a failure means a bug, not bad input.
inline void check_invariant(bool cond, const std::string& what) {
    if (!cond) fail(ErrorKind::bound_violation, "internal invariant violated: " + what);
}

}  // namespace sgcc
