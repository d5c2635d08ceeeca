#pragma once

#include <stdexcept>
#include <string>

namespace slicekit {

enum class ErrorCode {
    argument = 1,  // bad argument or violated precondition
    domain = 2,    // operation undefined for these parameters (e.g. 2k > n)
    parse = 3,     // malformed input text
    limit = 4,     // desk-scale bound exceeded
    internal = 5,  // invariant violated inside the library
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace slicekit
