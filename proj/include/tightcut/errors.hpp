#pragma once

#include <stdexcept>
#include <string>

namespace tightcut {

// Violation of a structural guarantee the underlying theory promises.
// Reaching one of these is a bug in this library, never a property of
// well-formed input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Malformed textual input (graph files, shore/matching arguments).
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// Caller precondition; maps to std::invalid_argument.
inline void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument(what);
}

// Structural guarantee; maps to internal_error.
inline void ensure(bool cond, const std::string& what) {
    if (!cond) throw internal_error(what);
}

}  // namespace tightcut
