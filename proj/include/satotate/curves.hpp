#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "satotate/classnumber.hpp"
#include "satotate/ff.hpp"

namespace satotate {

// Enumeration of the Weierstrass family y^2 = x^3 + ax + b over F_q:
// point counts, traces of Frobenius, angles, automorphism orbits, trace
// histograms, and the Deuring class-number verification.

struct CurveParams {
    FieldElement a, b;
    bool discriminant_nonzero = false;
    int64_t trace = 0;
    double angle = 0.0;  // theta with trace = 2 sqrt(q) cos(theta)
};

struct PointCount {
    int64_t count;
    int64_t trace;
};

struct TraceHistogram {
    int64_t q = 0;
    int64_t tmax = 0;             // floor(2 sqrt q)
    std::vector<int64_t> counts;  // index t + tmax for t in [-tmax, tmax]

    int64_t count(int64_t t) const {
        if (t < -tmax || t > tmax) return 0;
        return counts[size_t(t + tmax)];
    }
    int64_t total() const {
        return std::accumulate(counts.begin(), counts.end(), int64_t(0));
    }
};

enum class HistogramMode { brute, orbit };

inline int64_t floor_2sqrt(int64_t q) {
    int64_t s = int64_t(std::sqrt(double(4 * q)));
    while (s * s > 4 * q) --s;
    while ((s + 1) * (s + 1) <= 4 * q) ++s;
    return s;
}

inline double angle_of(int64_t q, int64_t t) {
    double x = double(t) / (2.0 * std::sqrt(double(q)));
    return std::acos(std::max(-1.0, std::min(1.0, x)));
}

namespace detail {

// 4a^3 + 27b^2 as an index; nonzero iff the curve is nonsingular.
inline Index discriminant_part(const FieldContext& K, Index ia, Index ib) {
    Index a3 = K.mul(ia, K.mul(ia, ia));
    Index b2 = K.mul(ib, ib);
    return K.add(K.mul(K.from_int(4), a3), K.mul(K.from_int(27), b2));
}

inline int64_t char_sum(const FieldContext& K, Index ia, Index ib) {
    int64_t s = 0;
    for (Index x = 0; x < K.q; ++x) {
        Index f = K.add(K.add(K.mul(K.mul(x, x), x), K.mul(ia, x)), ib);
        s += K.chi(f);
    }
    return s;
}

}  // namespace detail

inline PointCount point_count(const FieldContext& K, Index ia, Index ib) {
    if (detail::discriminant_part(K, ia, ib) == 0)
        throw std::domain_error("point_count: singular curve");
    int64_t s = detail::char_sum(K, ia, ib);
    return {K.q + 1 + s, -s};
}

inline PointCount point_count(const FieldContext& K, const FieldElement& a, const FieldElement& b) {
    return point_count(K, K.encode(a), K.encode(b));
}

inline CurveParams curve_params(const FieldContext& K, const FieldElement& a, const FieldElement& b) {
    CurveParams cp;
    cp.a = a;
    cp.b = b;
    cp.discriminant_nonzero = detail::discriminant_part(K, K.encode(a), K.encode(b)) != 0;
    if (!cp.discriminant_nonzero)
        throw std::domain_error("curve_params: singular curve");
    PointCount pc = point_count(K, a, b);
    cp.trace = pc.trace;
    cp.angle = angle_of(K.q, pc.trace);
    return cp;
}

// #{u in F_q^* : u^4 a = a and u^6 b = b}; always 2, 4 or 6.
inline int aut_size(const FieldContext& K, Index ia, Index ib) {
    if (detail::discriminant_part(K, ia, ib) == 0)
        throw std::domain_error("aut_size: singular curve");
    int n = 0;
    for (Index u = 1; u < K.q; ++u) {
        Index u2 = K.mul(u, u);
        Index u4 = K.mul(u2, u2);
        Index u6 = K.mul(u4, u2);
        if (K.mul(u4, ia) == ia && K.mul(u6, ib) == ib) ++n;
    }
    return n;
}

inline int aut_size(const FieldContext& K, const FieldElement& a, const FieldElement& b) {
    return aut_size(K, K.encode(a), K.encode(b));
}

// The isomorphism class {(u^4 a, u^6 b) : u in F_q^*}, sorted by (a, b)
// index; all members carry the shared trace of the input curve.
inline std::vector<CurveParams> orbit(const FieldContext& K, const FieldElement& a, const FieldElement& b) {
    Index ia = K.encode(a), ib = K.encode(b);
    if (detail::discriminant_part(K, ia, ib) == 0)
        throw std::domain_error("orbit: singular curve");
    PointCount pc = point_count(K, ia, ib);
    std::vector<std::pair<Index, Index>> members;
    for (Index u = 1; u < K.q; ++u) {
        Index u2 = K.mul(u, u);
        Index u4 = K.mul(u2, u2);
        Index u6 = K.mul(u4, u2);
        members.emplace_back(K.mul(u4, ia), K.mul(u6, ib));
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    std::vector<CurveParams> out;
    out.reserve(members.size());
    for (auto [ja, jb] : members) {
        CurveParams cp;
        cp.a = K.decode(ja);
        cp.b = K.decode(jb);
        cp.discriminant_nonzero = true;
        cp.trace = pc.trace;
        cp.angle = angle_of(K.q, pc.trace);
        out.push_back(std::move(cp));
    }
    return out;
}

// Nonsingular trace histogram plus the singular locus tallied by the same
// statistic t = -sum chi(x^3+ax+b).  Brute enumeration: Theta(q^3) character
// lookups, sharded over the a-coordinate.
struct EnumerationCensus {
    TraceHistogram curves;
    TraceHistogram singular;
};

namespace detail {

inline void census_shard(const FieldContext& K, Index a_lo, Index a_hi,
                         std::vector<int64_t>& curve_counts,
                         std::vector<int64_t>& singular_counts) {
    const int64_t q = K.q;
    const int64_t tmax = floor_2sqrt(q);
    if (K.prime_field()) {
        const int64_t p = K.p;
        // chi over [0, 2p) so x^3+ax and b add without a reduction
        std::vector<int8_t> chi2(size_t(2 * p));
        for (int64_t i = 0; i < 2 * p; ++i) chi2[size_t(i)] = K.chi_table[size_t(i % p)];
        std::vector<int64_t> b27(size_t(p), 0);
        for (int64_t b = 0; b < p; ++b) b27[size_t(b)] = (27 * b % p) * b % p;
        std::vector<int64_t> g(size_t(p), 0);
        for (Index a = a_lo; a < a_hi; ++a) {
            for (int64_t x = 0; x < p; ++x)
                g[size_t(x)] = ((x * x % p) * x + a * x) % p;
            const int64_t a4 = (4 * a % p) * a % p * a % p;
            for (int64_t b = 0; b < p; ++b) {
                int64_t s = 0;
                for (int64_t x = 0; x < p; ++x) s += chi2[size_t(g[size_t(x)] + b)];
                int64_t disc = a4 + b27[size_t(b)];
                if (disc >= p) disc -= p;
                auto& bucket = (disc == 0) ? singular_counts : curve_counts;
                bucket[size_t(-s + tmax)] += 1;
            }
        }
    } else {
        std::vector<int64_t> d27(size_t(q), 0);
        for (Index b = 0; b < q; ++b) d27[size_t(b)] = K.mul(K.from_int(27), K.mul(b, b));
        std::vector<Index> g(size_t(q), 0);
        for (Index a = a_lo; a < a_hi; ++a) {
            for (Index x = 0; x < q; ++x)
                g[size_t(x)] = K.add(K.mul(K.mul(x, x), x), K.mul(a, x));
            const Index a4 = K.mul(K.from_int(4), K.mul(a, K.mul(a, a)));
            for (Index b = 0; b < q; ++b) {
                int64_t s = 0;
                for (Index x = 0; x < q; ++x) s += K.chi(K.add(g[size_t(x)], b));
                auto& bucket = (K.add(a4, d27[size_t(b)]) == 0) ? singular_counts : curve_counts;
                bucket[size_t(-s + tmax)] += 1;
            }
        }
    }
}

}  // namespace detail

inline EnumerationCensus full_census(const FieldContext& K, int threads = 1) {
    const int64_t q = K.q;
    const int64_t tmax = floor_2sqrt(q);
    const size_t bins = size_t(2 * tmax + 1);
    EnumerationCensus out;
    out.curves.q = q;
    out.curves.tmax = tmax;
    out.curves.counts.assign(bins, 0);
    out.singular.q = q;
    out.singular.tmax = tmax;
    out.singular.counts.assign(bins, 0);

    int nt = std::max(1, threads);
    nt = int(std::min<int64_t>(nt, q));
    if (nt == 1) {
        detail::census_shard(K, 0, q, out.curves.counts, out.singular.counts);
        return out;
    }
    std::vector<std::vector<int64_t>> curve_parts(size_t(nt), std::vector<int64_t>(bins, 0));
    std::vector<std::vector<int64_t>> sing_parts(size_t(nt), std::vector<int64_t>(bins, 0));
    std::vector<std::thread> pool;
    for (int i = 0; i < nt; ++i) {
        Index lo = q * i / nt, hi = q * (i + 1) / nt;
        pool.emplace_back([&, i, lo, hi] {
            detail::census_shard(K, lo, hi, curve_parts[size_t(i)], sing_parts[size_t(i)]);
        });
    }
    for (auto& th : pool) th.join();
    for (int i = 0; i < nt; ++i) {
        for (size_t j = 0; j < bins; ++j) {
            out.curves.counts[j] += curve_parts[size_t(i)][j];
            out.singular.counts[j] += sing_parts[size_t(i)][j];
        }
    }
    return out;
}

namespace detail {

inline TraceHistogram orbit_histogram(const FieldContext& K) {
    const int64_t q = K.q;
    TraceHistogram h;
    h.q = q;
    h.tmax = floor_2sqrt(q);
    h.counts.assign(size_t(2 * h.tmax + 1), 0);
    std::vector<Index> u4(size_t(q), 0), u6(size_t(q), 0);
    for (Index u = 1; u < q; ++u) {
        Index u2 = K.mul(u, u);
        u4[size_t(u)] = K.mul(u2, u2);
        u6[size_t(u)] = K.mul(u4[size_t(u)], u2);
    }
    std::vector<bool> visited(size_t(q) * size_t(q), false);
    for (Index a = 0; a < q; ++a) {
        for (Index b = 0; b < q; ++b) {
            if (visited[size_t(a) * size_t(q) + size_t(b)]) continue;
            int64_t orbit_size = 0;
            for (Index u = 1; u < q; ++u) {
                Index ja = K.mul(u4[size_t(u)], a);
                Index jb = K.mul(u6[size_t(u)], b);
                auto seen = visited[size_t(ja) * size_t(q) + size_t(jb)];
                if (!seen) {
                    seen = true;
                    ++orbit_size;
                }
            }
            if (discriminant_part(K, a, b) == 0) continue;
            int64_t s = char_sum(K, a, b);  // one count per class
            h.counts[size_t(-s + h.tmax)] += orbit_size;
        }
    }
    return h;
}

}  // namespace detail

inline TraceHistogram trace_histogram(const FieldContext& K, HistogramMode mode, int threads = 1) {
    if (mode == HistogramMode::brute) return full_census(K, threads).curves;
    return detail::orbit_histogram(K);
}

// Default mode: ground-truth brute force for small fields, orbit sharding
// (one character sum per isomorphism class) above q = 200.
inline TraceHistogram trace_histogram(const FieldContext& K, int threads = 1) {
    return trace_histogram(K, K.q <= 200 ? HistogramMode::brute : HistogramMode::orbit, threads);
}

// Deuring verification: for t^2 < 4q and gcd(t, p) = 1 the histogram must
// satisfy 2 * counts[t] = (q-1) H(4q - t^2) exactly (checked 24-scaled).
// Rows with p | t are reported with both sides but never asserted: the
// classical count covers ordinary traces only.
struct DeuringRow {
    int64_t t;
    int64_t count;
    int64_t twelve_h;  // 12 H(4q - t^2)
    bool asserted;     // gcd(t, p) = 1
    bool pass;         // 24 count == (q-1) twelve_h
};

struct DeuringReport {
    int64_t q = 0;
    std::vector<DeuringRow> rows;  // t ascending over t^2 < 4q
    bool all_pass = true;          // over asserted rows only
};

inline DeuringReport verify_deuring(const FieldContext& K, int threads = 1) {
    TraceHistogram h = trace_histogram(K, HistogramMode::brute, threads);
    DeuringReport rep;
    rep.q = K.q;
    for (int64_t t = -h.tmax; t <= h.tmax; ++t) {
        if (t * t >= 4 * K.q) continue;
        DeuringRow row;
        row.t = t;
        row.count = h.count(t);
        row.twelve_h = twelve_hurwitz(4 * K.q - t * t);
        row.asserted = (t % K.p) != 0;
        row.pass = (24 * row.count == (K.q - 1) * row.twelve_h);
        if (row.asserted && !row.pass) rep.all_pass = false;
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace satotate
