#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace satotate {

// Beurling-Selberg majorant/minorant trigonometric polynomials of degree at
// most M for the indicator of J = [alpha, beta] subset [0,1], exposed as
// Fourier coefficient sequences.  e(x) means e^{2 pi i x} throughout.
//
// Construction: Vaaler's degree-M approximation to the sawtooth applied to
// the two interval endpoints, plus a Fejer-kernel correction that makes the
// result one-sided.  The contract is the property suite (majorization,
// S^(0) = beta - alpha +- 1/(M+1), |S^(m) - chi^(m)| <= 1/(M+1), conjugate
// symmetry), not the particular formula.

struct IntervalJ {
    double alpha = 0.0;
    double beta = 0.0;
};

enum class SelbergSign { majorant, minorant };

struct SelbergPolynomial {
    int M = 0;
    SelbergSign sign = SelbergSign::majorant;
    IntervalJ interval;
    std::vector<std::complex<double>> coeffs;  // index m + M, |m| <= M

    std::complex<double> coeff(int64_t m) const {
        if (m < -M || m > M) return {0.0, 0.0};
        return coeffs[size_t(m + M)];
    }
};

inline void validate_interval_j(const IntervalJ& J) {
    if (!(0.0 <= J.alpha && J.alpha < J.beta && J.beta <= 1.0))
        throw std::invalid_argument("interval must satisfy 0 <= alpha < beta <= 1");
}

inline std::complex<double> e2pi(double x) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    return {std::cos(two_pi * x), std::sin(two_pi * x)};
}

// Fourier transform of the indicator: chi^(m) = (e(-m alpha) - e(-m beta)) / (2 pi i m).
inline std::complex<double> chi_hat(const IntervalJ& J, int64_t m) {
    validate_interval_j(J);
    if (m == 0) return {J.beta - J.alpha, 0.0};
    std::complex<double> num = e2pi(-double(m) * J.alpha) - e2pi(-double(m) * J.beta);
    return num / std::complex<double>(0.0, 2.0 * std::numbers::pi * double(m));
}

namespace detail {

// Fourier coefficients of Vaaler's sawtooth approximant:
// J^(t) = pi t (1 - |t|) cot(pi t) + |t| on (-1, 1), J^(0) = 1, 0 beyond.
inline double vaaler_jhat(double t) {
    double a = std::fabs(t);
    if (a >= 1.0) return 0.0;
    if (a == 0.0) return 1.0;
    double pt = std::numbers::pi * t;
    return pt * (1.0 - a) * (std::cos(pt) / std::sin(pt)) + a;
}

}  // namespace detail

inline SelbergPolynomial selberg(const IntervalJ& J, int M, SelbergSign sign) {
    validate_interval_j(J);
    if (M < 1) throw std::invalid_argument("selberg: M must be >= 1");
    const double K = double(M + 1);
    const double sgn = (sign == SelbergSign::majorant) ? 1.0 : -1.0;
    SelbergPolynomial S;
    S.M = M;
    S.sign = sign;
    S.interval = J;
    S.coeffs.assign(size_t(2 * M + 1), {0.0, 0.0});
    S.coeffs[size_t(M)] = {(J.beta - J.alpha) + sgn / K, 0.0};
    for (int m = 1; m <= M; ++m) {
        std::complex<double> vhat =
            -detail::vaaler_jhat(m / K) / std::complex<double>(0.0, 2.0 * std::numbers::pi * m);
        double fejer = (1.0 - m / K) / (2.0 * K);
        std::complex<double> ea = e2pi(-double(m) * J.alpha);
        std::complex<double> eb = e2pi(-double(m) * J.beta);
        std::complex<double> c = vhat * (eb - ea) + sgn * fejer * (eb + ea);
        S.coeffs[size_t(M + m)] = c;
        S.coeffs[size_t(M - m)] = std::conj(c);
    }
    return S;
}

// S^(m) + S^(-m), the real combination appearing when the sandwich pairs the
// angles theta and -theta; within 2/(M+1) of (sin 2 pi m beta - sin 2 pi m alpha)/(m pi).
inline double paired_coeff(const SelbergPolynomial& S, int m) {
    if (m <= 0 || m > S.M) throw std::invalid_argument("paired_coeff: need 0 < m <= M");
    return (S.coeff(m) + S.coeff(-m)).real();
}

inline double evaluate(const SelbergPolynomial& S, double x) {
    std::complex<double> v = S.coeff(0);
    for (int m = 1; m <= S.M; ++m)
        v += S.coeff(m) * e2pi(double(m) * x) + S.coeff(-m) * e2pi(-double(m) * x);
    return v.real();
}

}  // namespace satotate
