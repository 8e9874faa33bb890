#pragma once

#include <cstdint>

#include "fengrao/error.hpp"

namespace fengrao {

using Int = std::int64_t;

namespace checked {

inline Int add(Int a, Int b) {
    Int out;
    if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
    return out;
}

inline Int sub(Int a, Int b) {
    Int out;
    if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("integer overflow in subtraction");
    return out;
}

inline Int mul(Int a, Int b) {
    Int out;
    if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiplication");
    return out;
}

inline Int pow(Int base, Int exponent) {
    if (exponent < 0) throw InvalidArgument("negative exponent");
    Int result = 1;
    for (Int i = 0; i < exponent; ++i) result = mul(result, base);
    return result;
}

}  // namespace checked

/// Upper limit on the conductor of any semigroup the library materializes.
/// Every algorithm stores the small elements explicitly, so this bounds memory.
inline constexpr Int kMaxConductor = Int{1} << 24;

}  // namespace fengrao
