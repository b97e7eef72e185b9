#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sumlab {

// Labels grow like phi^n / 2^(n/2) in the chained schemes, so the core works
// on arbitrary-precision integers throughout. Only the bounded search, whose
// labels are capped at B, uses machine ints.
using Big = boost::multiprecision::cpp_int;

// ceil(log2(x)) for x >= 1, with ceil_log2(1) == 0.
inline long ceil_log2(const Big& x) {
    if (x <= 1) return 0;
    Big v = x - 1;
    long bits = 0;
    while (v > 0) {
        v >>= 1;
        ++bits;
    }
    return bits;
}

} // namespace sumlab
