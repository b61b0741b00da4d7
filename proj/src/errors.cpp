#include "capcurl/errors.hpp"

namespace capcurl {

namespace {
[[noreturn]] void overflow(const char* op) {
    throw DomainError("overflow", std::string("integer overflow in ") + op);
}
}  // namespace

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) overflow("addition");
    return r;
}

long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) overflow("subtraction");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) overflow("multiplication");
    return r;
}

}  // namespace capcurl
