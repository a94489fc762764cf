#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "satotate/bigint.hpp"

namespace satotate {

// Independent oracle for Tr T_n on level-1 cusp forms of even weight k:
// build the integral echelon (Miller) basis of S_k from Delta^i E_4^a E_6^b
// monomials and read traces off the Hecke action on q-expansions.  No
// floating point anywhere in this module.

struct PowerSeriesZ {
    std::vector<BigInt> coeffs;  // a_0 .. a_{prec-1}

    size_t prec() const { return coeffs.size(); }
};

inline PowerSeriesZ ps_zero(size_t prec) {
    PowerSeriesZ f;
    f.coeffs.assign(prec, 0);
    return f;
}

inline PowerSeriesZ ps_add(const PowerSeriesZ& f, const PowerSeriesZ& g) {
    size_t n = std::min(f.prec(), g.prec());
    PowerSeriesZ h = ps_zero(n);
    for (size_t i = 0; i < n; ++i) h.coeffs[i] = f.coeffs[i] + g.coeffs[i];
    return h;
}

inline PowerSeriesZ ps_sub(const PowerSeriesZ& f, const PowerSeriesZ& g) {
    size_t n = std::min(f.prec(), g.prec());
    PowerSeriesZ h = ps_zero(n);
    for (size_t i = 0; i < n; ++i) h.coeffs[i] = f.coeffs[i] - g.coeffs[i];
    return h;
}

inline PowerSeriesZ ps_mul(const PowerSeriesZ& f, const PowerSeriesZ& g) {
    size_t n = std::min(f.prec(), g.prec());
    PowerSeriesZ h = ps_zero(n);
    for (size_t i = 0; i < n; ++i) {
        if (f.coeffs[i] == 0) continue;
        for (size_t j = 0; i + j < n; ++j) {
            if (g.coeffs[j] == 0) continue;
            h.coeffs[i + j] += f.coeffs[i] * g.coeffs[j];
        }
    }
    return h;
}

inline PowerSeriesZ ps_scaled(const PowerSeriesZ& f, const BigInt& c) {
    PowerSeriesZ h = f;
    for (auto& a : h.coeffs) a *= c;
    return h;
}

inline BigInt sigma_k(int64_t k, int64_t n) {
    BigInt s = 0;
    for (int64_t d = 1; d <= n; ++d)
        if (n % d == 0) s += bigint_pow(d, k);
    return s;
}

inline PowerSeriesZ eisenstein_e4(size_t prec) {
    PowerSeriesZ f = ps_zero(prec);
    f.coeffs[0] = 1;
    for (size_t n = 1; n < prec; ++n) f.coeffs[n] = 240 * sigma_k(3, int64_t(n));
    return f;
}

inline PowerSeriesZ eisenstein_e6(size_t prec) {
    PowerSeriesZ f = ps_zero(prec);
    f.coeffs[0] = 1;
    for (size_t n = 1; n < prec; ++n) f.coeffs[n] = -504 * sigma_k(5, int64_t(n));
    return f;
}

// Delta = (E_4^3 - E_6^2)/1728; the division must be remainder-free.
inline PowerSeriesZ delta_series(size_t prec) {
    PowerSeriesZ e4 = eisenstein_e4(prec);
    PowerSeriesZ e6 = eisenstein_e6(prec);
    PowerSeriesZ num = ps_sub(ps_mul(ps_mul(e4, e4), e4), ps_mul(e6, e6));
    for (auto& c : num.coeffs) {
        if (c % 1728 != 0) throw std::logic_error("delta_series: 1728 does not divide");
        c /= 1728;
    }
    return num;
}

// dim S_k for level 1: floor(k/12), minus one when k = 2 mod 12.
inline int dim_sk(int k) {
    if (k < 4 || k % 2 != 0) throw std::invalid_argument("dim_sk: k must be even and >= 4");
    return int(k / 12) - (k % 12 == 2 ? 1 : 0);
}

struct CuspBasis {
    int k = 0;
    int dim = 0;
    size_t prec = 0;
    std::vector<PowerSeriesZ> rows;  // rows[i-1] = f_i with a_j(f_i) = delta_ij
};

// Echelon basis of S_k: f_i = Delta^i E_4^a E_6^b with 4a + 6b = k - 12i and
// b in {0,1}, then integer back-substitution.  The pivots a_i(f_i) are
// exactly 1 by construction, so elimination stays in the integers; this is
// asserted rather than assumed.
inline CuspBasis miller_basis(int k, size_t prec) {
    CuspBasis basis;
    basis.k = k;
    basis.dim = dim_sk(k);
    basis.prec = prec;
    if (basis.dim == 0) return basis;
    if (prec < size_t(basis.dim) + 1)
        throw std::invalid_argument("miller_basis: insufficient precision");

    PowerSeriesZ e4 = eisenstein_e4(prec);
    PowerSeriesZ e6 = eisenstein_e6(prec);
    PowerSeriesZ delta = delta_series(prec);

    PowerSeriesZ delta_pow = delta;
    for (int i = 1; i <= basis.dim; ++i) {
        int rem = k - 12 * i;
        int b = (rem % 4 == 2) ? 1 : 0;
        int a = (rem - 6 * b) / 4;
        if (a < 0) throw std::logic_error("miller_basis: negative E_4 exponent");
        PowerSeriesZ f = delta_pow;
        for (int j = 0; j < a; ++j) f = ps_mul(f, e4);
        if (b) f = ps_mul(f, e6);
        if (f.coeffs[size_t(i)] != 1) throw std::logic_error("miller_basis: pivot is not 1");
        basis.rows.push_back(std::move(f));
        if (i < basis.dim) delta_pow = ps_mul(delta_pow, delta);
    }
    for (int i = basis.dim - 1; i >= 1; --i) {
        PowerSeriesZ& f = basis.rows[size_t(i - 1)];
        for (int j = i + 1; j <= basis.dim; ++j) {
            BigInt c = f.coeffs[size_t(j)];
            if (c == 0) continue;
            f = ps_sub(f, ps_scaled(basis.rows[size_t(j - 1)], c));
        }
    }
    for (int i = 1; i <= basis.dim; ++i)
        for (int j = 1; j <= basis.dim; ++j)
            if (basis.rows[size_t(i - 1)].coeffs[size_t(j)] != BigInt(i == j ? 1 : 0))
                throw std::logic_error("miller_basis: echelon property failed");
    return basis;
}

// a_m(T_n f) = sum_{d | gcd(m,n)} d^{k-1} a_{mn/d^2}(f).
inline BigInt hecke_coeff(const PowerSeriesZ& f, int k, int64_t m, int64_t n) {
    int64_t g = std::gcd(m, n);
    BigInt s = 0;
    for (int64_t d = 1; d <= g; ++d) {
        if (g % d != 0) continue;
        int64_t idx = (m / d) * (n / d);
        if (idx < 0 || size_t(idx) >= f.prec())
            throw std::invalid_argument("hecke_coeff: precision shortfall");
        s += bigint_pow(d, k - 1) * f.coeffs[size_t(idx)];
    }
    return s;
}

inline BigInt trace_tk_mf(const CuspBasis& basis, int64_t n) {
    if (n < 1) throw std::invalid_argument("trace_tk_mf: n must be positive");
    if (basis.dim > 0 && basis.prec < size_t(basis.dim) * size_t(n) + 1)
        throw std::invalid_argument("trace_tk_mf: precision shortfall");
    BigInt tr = 0;
    for (int i = 1; i <= basis.dim; ++i)
        tr += hecke_coeff(basis.rows[size_t(i - 1)], basis.k, i, n);
    return tr;
}

inline BigInt trace_tk_mf(int k, int64_t n) {
    if (n < 1) throw std::invalid_argument("trace_tk_mf: n must be positive");
    int dim = dim_sk(k);
    size_t prec = size_t(dim) * size_t(n) + size_t(dim) + 1;
    return trace_tk_mf(miller_basis(k, prec), n);
}

}  // namespace satotate
