#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace satotate {

// Arithmetic in F_q, q = p^r with p >= 5 prime and q <= 2^20.
//
// An element is a polynomial c_0 + c_1 x + ... + c_{r-1} x^{r-1} over F_p,
// reduced modulo a fixed monic irreducible of degree r.  Every element is
// identified with its index sum_i c_i p^i in [0, q); the canonical
// enumeration of the field is index order.  Hot paths (curve enumeration)
// run on indices only, so FieldElement is a convenience wrapper.

using Index = int64_t;

constexpr int64_t kMaxQ = int64_t(1) << 20;
constexpr int kMaxExtensionDegree = 12;  // p >= 5 and q <= 2^20 force r <= 8

struct FieldElement {
    std::vector<int64_t> coeffs;  // length r, entries in [0, p)
};

inline bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace detail {

// Dense polynomials over F_p, low coefficient first, for modulus selection.
using Poly = std::vector<int64_t>;

inline Poly poly_mod(Poly f, const Poly& g, int64_t p) {
    // g monic; returns f mod g
    const int dg = int(g.size()) - 1;
    for (int i = int(f.size()) - 1; i >= dg; --i) {
        int64_t c = f[i] % p;
        if (c == 0) continue;
        for (int j = 0; j <= dg; ++j) {
            f[i - dg + j] = (f[i - dg + j] - c * g[j]) % p;
        }
    }
    f.resize(dg);
    for (auto& c : f) c = ((c % p) + p) % p;
    return f;
}

inline bool poly_is_zero(const Poly& f) {
    for (auto c : f)
        if (c != 0) return false;
    return true;
}

inline bool is_irreducible(const Poly& f, int64_t p) {
    // Trial division by every monic polynomial of degree 1..deg(f)/2.
    const int r = int(f.size()) - 1;
    for (int d = 1; 2 * d <= r; ++d) {
        int64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int64_t n = 0; n < count; ++n) {
            Poly g(d + 1, 0);
            int64_t m = n;
            for (int i = 0; i < d; ++i) {
                g[i] = m % p;
                m /= p;
            }
            g[d] = 1;
            if (poly_is_zero(poly_mod(f, g, p))) return false;
        }
    }
    return true;
}

inline Poly smallest_irreducible(int64_t p, int r) {
    // Candidates x^r + tail, tails ordered by their base-p index; the first
    // irreducible hit makes the modulus deterministic across runs.
    int64_t count = 1;
    for (int i = 0; i < r; ++i) count *= p;
    for (int64_t n = 0; n < count; ++n) {
        Poly f(r + 1, 0);
        int64_t m = n;
        for (int i = 0; i < r; ++i) {
            f[i] = m % p;
            m /= p;
        }
        f[r] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("smallest_irreducible: no irreducible found");
}

}  // namespace detail

struct FieldContext {
    int64_t p = 0;
    int r = 0;
    int64_t q = 0;
    std::vector<int64_t> modulus;   // monic, degree r, low-to-high, length r+1
    std::vector<int8_t> chi_table;  // quadratic character by element index

    bool prime_field() const { return r == 1; }

    // ---- index arithmetic -------------------------------------------------

    Index add(Index x, Index y) const {
        if (r == 1) {
            Index s = x + y;
            return s >= p ? s - p : s;
        }
        Index out = 0, place = 1, xx = x, yy = y;
        for (int i = 0; i < r; ++i) {
            int64_t s = xx % p + yy % p;
            if (s >= p) s -= p;
            out += s * place;
            xx /= p;
            yy /= p;
            place *= p;
        }
        return out;
    }

    Index neg(Index x) const {
        if (r == 1) return x == 0 ? 0 : p - x;
        Index out = 0, place = 1, xx = x;
        for (int i = 0; i < r; ++i) {
            int64_t c = xx % p;
            out += (c == 0 ? 0 : p - c) * place;
            xx /= p;
            place *= p;
        }
        return out;
    }

    Index sub(Index x, Index y) const { return add(x, neg(y)); }

    Index mul(Index x, Index y) const {
        if (r == 1) return (x * y) % p;
        int64_t xa[kMaxExtensionDegree], ya[kMaxExtensionDegree];
        int64_t prod[2 * kMaxExtensionDegree] = {0};
        Index xx = x, yy = y;
        for (int i = 0; i < r; ++i) {
            xa[i] = xx % p;
            ya[i] = yy % p;
            xx /= p;
            yy /= p;
        }
        for (int i = 0; i < r; ++i) {
            if (xa[i] == 0) continue;
            for (int j = 0; j < r; ++j) prod[i + j] += xa[i] * ya[j];
        }
        for (int i = 2 * r - 2; i >= r; --i) {
            int64_t c = prod[i] % p;
            if (c == 0) continue;
            for (int j = 0; j < r; ++j) prod[i - r + j] -= c * modulus[j];
        }
        Index out = 0, place = 1;
        for (int i = 0; i < r; ++i) {
            out += (((prod[i] % p) + p) % p) * place;
            place *= p;
        }
        return out;
    }

    Index pow(Index x, int64_t e) const {
        if (e < 0) throw std::invalid_argument("pow: negative exponent");
        Index acc = from_int(1), base = x;
        while (e > 0) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    Index inv(Index x) const {
        if (x == 0) throw std::domain_error("inv: division by zero");
        return pow(x, q - 2);
    }

    // Image of an integer under Z -> F_p -> F_q (constant polynomial).
    Index from_int(int64_t n) const { return ((n % p) + p) % p; }

    int chi(Index x) const { return chi_table[size_t(x)]; }

    // ---- element <-> index ------------------------------------------------

    FieldElement decode(Index x) const {
        FieldElement e;
        e.coeffs.resize(size_t(r));
        for (int i = 0; i < r; ++i) {
            e.coeffs[size_t(i)] = x % p;
            x /= p;
        }
        return e;
    }

    Index encode(const FieldElement& e) const {
        if (int(e.coeffs.size()) != r)
            throw std::invalid_argument("encode: wrong coefficient count");
        Index out = 0, place = 1;
        for (int i = 0; i < r; ++i) {
            int64_t c = e.coeffs[size_t(i)];
            if (c < 0 || c >= p)
                throw std::invalid_argument("encode: coefficient out of [0, p)");
            out += c * place;
            place *= p;
        }
        return out;
    }
};

inline FieldContext make_field(int64_t p, int r) {
    if (r < 1) throw std::invalid_argument("make_field: r must be positive");
    if (!is_prime(p)) throw std::invalid_argument("make_field: p must be prime");
    if (p == 2 || p == 3)
        throw std::invalid_argument("make_field: characteristics 2 and 3 unsupported");
    int64_t q = 1;
    for (int i = 0; i < r; ++i) {
        q *= p;
        if (q > kMaxQ) throw std::invalid_argument("make_field: q exceeds 2^20");
    }
    FieldContext K;
    K.p = p;
    K.r = r;
    K.q = q;
    K.modulus = detail::smallest_irreducible(p, r);
    // Squares table: marks i^2 for i in F_q^*, fills the rest with -1.  This
    // is deliberately independent of the z^((q-1)/2) definition so that the
    // two routes can be checked against each other.
    K.chi_table.assign(size_t(q), 0);
    for (Index i = 1; i < q; ++i) K.chi_table[size_t(K.mul(i, i))] = 1;
    for (Index i = 1; i < q; ++i)
        if (K.chi_table[size_t(i)] != 1) K.chi_table[size_t(i)] = -1;
    return K;
}

// Factor q as p^r with p prime; rejects anything else.
inline std::pair<int64_t, int> factor_prime_power(int64_t q) {
    if (q < 2) throw std::invalid_argument("factor_prime_power: q < 2");
    int64_t p = q;
    for (int64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    int r = 0;
    int64_t m = q;
    while (m % p == 0) {
        m /= p;
        ++r;
    }
    if (m != 1) throw std::invalid_argument("factor_prime_power: not a prime power");
    return {p, r};
}

// ---- element-level API ----------------------------------------------------

inline void validate_element(const FieldContext& K, const FieldElement& e) {
    if (int(e.coeffs.size()) != K.r)
        throw std::invalid_argument("FieldElement has wrong length");
    for (auto c : e.coeffs)
        if (c < 0 || c >= K.p) throw std::invalid_argument("coefficient out of [0, p)");
}

inline FieldElement field_add(const FieldContext& K, const FieldElement& x, const FieldElement& y) {
    return K.decode(K.add(K.encode(x), K.encode(y)));
}

inline FieldElement field_sub(const FieldContext& K, const FieldElement& x, const FieldElement& y) {
    return K.decode(K.sub(K.encode(x), K.encode(y)));
}

inline FieldElement field_mul(const FieldContext& K, const FieldElement& x, const FieldElement& y) {
    return K.decode(K.mul(K.encode(x), K.encode(y)));
}

inline FieldElement field_pow(const FieldContext& K, const FieldElement& x, int64_t e) {
    return K.decode(K.pow(K.encode(x), e));
}

inline FieldElement field_inv(const FieldContext& K, const FieldElement& x) {
    return K.decode(K.inv(K.encode(x)));
}

inline int quad_char(const FieldContext& K, const FieldElement& z) {
    return K.chi(K.encode(z));
}

// Reference route z^((q-1)/2); must agree with the table everywhere.
inline int quad_char_by_power(const FieldContext& K, const FieldElement& z) {
    Index x = K.encode(z);
    if (x == 0) return 0;
    Index v = K.pow(x, (K.q - 1) / 2);
    if (v == K.from_int(1)) return 1;
    if (v == K.from_int(-1)) return -1;
    throw std::logic_error("quad_char_by_power: z^((q-1)/2) not +-1");
}

}  // namespace satotate
