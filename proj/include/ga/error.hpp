#pragma once

#include <stdexcept>
#include <string>

namespace ga {

enum class errc {
    syntax,          // unparseable input, with position info in the message
    ring_mismatch,   // operands live in different rings
    domain,          // precondition violated (index range, non-square matrix, ...)
    infeasible,      // system has no solution
    resource_limit,  // configured budget exceeded
    infinite,        // quotient algebra is not finite-dimensional
    unsupported,     // input outside the implemented fragment
};

class error : public std::runtime_error {
public:
    error(errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

} // namespace ga
