#pragma once

#include <stdexcept>
#include <string>

namespace capcurl {

// Bad input or a violated precondition. Carries a short stable code so the
// CLI and scripts can distinguish failure kinds; maps to exit code 2.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// A lemma-level internal assertion failed (cancellation bijection, oracle
// positivity, arrow-pair matching). Signals a bug, never bad input; maps to
// exit code 3.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// All arithmetic is on exact machine integers; overflow is an error, never
// wraparound. Desk-scale inputs stay far below these limits.
long long checked_add(long long a, long long b);
long long checked_sub(long long a, long long b);
long long checked_mul(long long a, long long b);

}  // namespace capcurl
