#pragma once

#include <stdexcept>

namespace zagreb {

// Every index value is an exact 64-bit signed integer. Arithmetic that would
// leave that range throws instead of wrapping.

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

// Exact division; the quotient must have no remainder.
inline long long checked_div_exact(long long a, long long b) {
    if (b == 0)
        throw std::domain_error("division by zero");
    if (a % b != 0)
        throw std::domain_error("inexact division");
    return a / b;
}

}  // namespace zagreb
