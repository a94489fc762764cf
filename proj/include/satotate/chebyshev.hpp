#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "satotate/bigint.hpp"

namespace satotate {

// Chebyshev polynomials of the second kind, plus the integer Lucas-type
// sequence w_j(t,q) = (rho^j - rhobar^j)/(rho - rhobar) where rho, rhobar
// are the roots of y^2 - t y + q = 0.  The two are linked by
// w_{k-1}(t,q) = q^{(k-2)/2} U_{k-2}(t / 2 sqrt(q)).

inline double u_poly(int n, double x) {
    if (n < 0) throw std::invalid_argument("u_poly: n must be nonnegative");
    if (n == 0) return 1.0;
    double prev = 1.0, cur = 2.0 * x;
    for (int j = 2; j <= n; ++j) {
        double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// w_1 = 1, w_2 = t, w_{j+1} = t w_j - q w_{j-1}; exact.
inline BigInt lucas_w(int j, int64_t t, int64_t q) {
    if (j < 1) throw std::invalid_argument("lucas_w: j must be positive");
    if (j == 1) return 1;
    BigInt prev = 1, cur = t;
    for (int i = 3; i <= j; ++i) {
        BigInt next = t * cur - q * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// U_n(cos t) - U_{n-2}(cos t) = 2 cos(n t), the recombination used when the
// sandwich's exponential sums are rewritten as Chebyshev sums.
inline double cos_combination(int n, double theta) {
    if (n < 2) throw std::invalid_argument("cos_combination: n must be >= 2");
    double c = std::cos(theta);
    return u_poly(n, c) - u_poly(n - 2, c);
}

}  // namespace satotate
