#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace satotate {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt bigint_pow(BigInt base, int64_t e) {
    BigInt acc = 1;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

}  // namespace satotate
