#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "satotate/bigint.hpp"
#include "satotate/chebyshev.hpp"
#include "satotate/classnumber.hpp"
#include "satotate/curves.hpp"
#include "satotate/ff.hpp"

namespace satotate {

// Eichler-Selberg trace formula for level 1, in the arrangement that keeps
// the square term separate:
//
//   Tr T_k(q) = (k-1)/12 q^{(k-2)/2} [q square]
//             - 1/2 sum_{t^2 < 4q} w_{k-1}(t,q) H(4q - t^2)
//             - 1/2 sum_{d d' = q} min(d,d')^{k-1}
//
// carried in exact rationals (H is 12-scaled) until the final total, which
// must come out an integer.

struct ESBreakdown {
    int k = 0;
    int64_t q = 0;
    BigRational square_term;
    BigRational elliptic_term;
    BigRational divisor_term;
    BigInt total;
};

namespace detail {

inline void validate_es_args(int k, int64_t q) {
    if (k < 4 || k % 2 != 0)
        throw std::invalid_argument("trace formula: k must be even and >= 4");
    auto [p, r] = factor_prime_power(q);  // throws unless q = p^r
    (void)r;
    if (p < 5) throw std::invalid_argument("trace formula: q must have characteristic >= 5");
}

inline BigInt divisor_sum_num(int k, int64_t q) {
    // sum over dd' = q of min(d, d')^{k-1}; q = p^r so divisors are p^i
    auto [p, r] = factor_prime_power(q);
    BigInt s = 0;
    for (int i = 0; i <= r; ++i) {
        int e = std::min(i, r - i);
        s += bigint_pow(bigint_pow(p, e), k - 1);
    }
    return s;
}

}  // namespace detail

inline ESBreakdown trace_tk_es(int k, int64_t q) {
    detail::validate_es_args(k, q);
    ESBreakdown out;
    out.k = k;
    out.q = q;

    int64_t s = floor_2sqrt(q);
    bool square = (s * s == 4 * q);

    if (square)
        out.square_term = BigRational(BigInt(k - 1) * bigint_pow(q, (k - 2) / 2), 12);
    else
        out.square_term = 0;

    BigInt elliptic_num = 0;  // 24-scaled
    for (int64_t t = -s; t <= s; ++t) {
        if (t * t >= 4 * q) continue;
        elliptic_num += lucas_w(k - 1, t, q) * twelve_hurwitz(4 * q - t * t);
    }
    out.elliptic_term = BigRational(-elliptic_num, 24);

    out.divisor_term = BigRational(-detail::divisor_sum_num(k, q), 2);

    BigRational total = out.square_term + out.elliptic_term + out.divisor_term;
    if (boost::multiprecision::denominator(total) != 1)
        throw std::logic_error("trace_tk_es: total is not an integer");
    out.total = boost::multiprecision::numerator(total);
    return out;
}

// Alternative arrangement: extend the class-number sum to t^2 <= 4q and let
// H(0) = -1/12 absorb the boundary; must agree with the split form.
inline BigInt trace_tk_es_absorbed(int k, int64_t q) {
    detail::validate_es_args(k, q);
    int64_t s = floor_2sqrt(q);
    BigInt num = 0;  // 24-scaled
    for (int64_t t = -s; t <= s; ++t)
        num += lucas_w(k - 1, t, q) * twelve_hurwitz(4 * q - t * t);
    BigRational total = BigRational(-num, 24) - BigRational(detail::divisor_sum_num(k, q), 2);
    if (boost::multiprecision::denominator(total) != 1)
        throw std::logic_error("trace_tk_es_absorbed: total is not an integer");
    return boost::multiprecision::numerator(total);
}

// sum_{t^2 < 4q} H(4q - t^2) U_{k-2}(t / 2 sqrt q), evaluated exactly as a
// 12-scaled integer against w_{k-1} and divided down at the end; the sum is
// << r k sqrt(q) and the reported ratio is |value|/(r k sqrt q).
struct HurwitzChebSum {
    double value = 0.0;
    double ratio = 0.0;
};

inline HurwitzChebSum hurwitz_cheb_sum(int k, int64_t q) {
    detail::validate_es_args(k, q);
    auto [p, r] = factor_prime_power(q);
    (void)p;
    int64_t s = floor_2sqrt(q);
    BigInt num = 0;  // 12-scaled, times q^{(k-2)/2}
    for (int64_t t = -s; t <= s; ++t) {
        if (t * t >= 4 * q) continue;
        num += twelve_hurwitz(4 * q - t * t) * lucas_w(k - 1, t, q);
    }
    HurwitzChebSum out;
    out.value = num.convert_to<double>() / 12.0 / std::pow(double(q), (k - 2) / 2.0);
    out.ratio = std::fabs(out.value) / (double(r) * k * std::sqrt(double(q)));
    return out;
}

// sum over nonsingular (a,b) of U_m(cos theta_{a,b}), from the histogram:
// exact numerator sum_t counts[t] w_{m+1}(t,q), zero by parity for odd m
// and << r m q^{3/2} for even m.
struct CurveChebSum {
    BigInt exact_numerator;  // sum_t counts[t] w_{m+1}(t, q)
    double value = 0.0;      // numerator / q^{m/2}
    double ratio = 0.0;      // |value| / (r m q^{3/2})
};

inline CurveChebSum curve_cheb_sum_bound(const TraceHistogram& h, int m, int r) {
    if (m < 1) throw std::invalid_argument("curve_cheb_sum_bound: m must be positive");
    CurveChebSum out;
    out.exact_numerator = 0;
    for (int64_t t = -h.tmax; t <= h.tmax; ++t) {
        int64_t c = h.count(t);
        if (c != 0) out.exact_numerator += c * lucas_w(m + 1, t, h.q);
    }
    out.value = out.exact_numerator.convert_to<double>() / std::pow(double(h.q), m / 2.0);
    out.ratio = std::fabs(out.value) / (double(r) * m * std::pow(double(h.q), 1.5));
    return out;
}

inline CurveChebSum curve_cheb_sum_bound(const FieldContext& K, int m, int threads = 1) {
    return curve_cheb_sum_bound(trace_histogram(K, threads), m, K.r);
}

}  // namespace satotate
