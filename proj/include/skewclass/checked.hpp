#pragma once

#include <cstdint>
#include <stdexcept>

namespace skewclass {

using Coefficient = std::int64_t;

// Coefficient arithmetic that throws instead of wrapping.
inline Coefficient checked_add(Coefficient a, Coefficient b)
{
    Coefficient out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("coefficient overflow in addition");
    return out;
}

inline Coefficient checked_mul(Coefficient a, Coefficient b)
{
    Coefficient out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("coefficient overflow in multiplication");
    return out;
}

inline Coefficient checked_neg(Coefficient a)
{
    return checked_mul(a, -1);
}

} // namespace skewclass
