#pragma once

// Test-only reference implementations, kept deliberately independent of the
// library's algorithms: point counts by exhaustive (x,y) enumeration, class
// numbers by a C-major form sweep, Fourier coefficients by quadrature.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

#include "satotate/beurling.hpp"
#include "satotate/ff.hpp"

namespace testoracle {

// #E(F_q) by checking y^2 = x^3 + ax + b over all (x, y), plus infinity.
inline int64_t naive_point_count(const satotate::FieldContext& K, satotate::Index a,
                                 satotate::Index b) {
    int64_t n = 1;
    for (satotate::Index x = 0; x < K.q; ++x) {
        satotate::Index f = K.add(K.add(K.mul(K.mul(x, x), x), K.mul(a, x)), b);
        for (satotate::Index y = 0; y < K.q; ++y)
            if (K.mul(y, y) == f) ++n;
    }
    return n;
}

inline int64_t isqrt64(int64_t n) {
    int64_t s = int64_t(std::sqrt(double(n)));
    while (s * s > n) --s;
    while ((s + 1) * (s + 1) <= n) ++s;
    return s;
}

// 12 H(N) by sweeping (A, C) with A <= C <= N and solving for B >= 0 from
// B^2 = 4AC - N; forms with 0 < B < A and A < C are counted for both signs
// of B.  Different loop structure and arithmetic than the library's
// (A, B)-major enumeration.
inline int64_t naive_twelve_hurwitz(int64_t N) {
    if (N == 0) return -1;
    int64_t tw = 0;
    for (int64_t A = 1; A <= N; ++A) {
        if (3 * A * A > N) break;
        for (int64_t C = A; C <= N; ++C) {
            int64_t b2 = 4 * A * C - N;
            if (b2 < 0) continue;
            if (b2 > A * A) break;
            int64_t B = isqrt64(b2);
            if (B * B != b2) continue;
            int64_t weight;
            if (B == 0 && A == C)
                weight = 6;
            else if (A == B && B == C)
                weight = 4;
            else
                weight = 12;
            int64_t copies = (B > 0 && B < A && A < C) ? 2 : 1;
            tw += weight * copies;
        }
    }
    return tw;
}

// chi_hat by composite Simpson quadrature of e(-mx) over [alpha, beta].
inline std::complex<double> simpson_chi_hat(const satotate::IntervalJ& J, int64_t m,
                                            int panels = 4096) {
    auto f = [&](double x) { return satotate::e2pi(-double(m) * x); };
    double h = (J.beta - J.alpha) / (2.0 * panels);
    std::complex<double> s = f(J.alpha) + f(J.beta);
    for (int i = 1; i < 2 * panels; ++i)
        s += f(J.alpha + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * (h / 3.0);
}

}  // namespace testoracle
