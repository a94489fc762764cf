#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "satotate/beurling.hpp"
#include "satotate/bigint.hpp"
#include "satotate/chebyshev.hpp"
#include "satotate/curves.hpp"
#include "satotate/ff.hpp"

namespace satotate {

// The headline experiment: angle counts N_I(q), the Sato-Tate measure, the
// Beurling-Selberg sandwich, discrepancy tables against q^{7/4}, and the
// moment check against C(2R,R)/(R+1) q^{R+2}.

struct AngleInterval {
    double alpha = 0.0;
    double beta = 0.0;
};

inline void validate_angle_interval(const AngleInterval& I) {
    if (!(0.0 <= I.alpha && I.alpha < I.beta && I.beta <= std::numbers::pi))
        throw std::invalid_argument("interval must satisfy 0 <= alpha < beta <= pi");
}

// mu_ST([alpha, beta]) = (2/pi) int sin^2 = ((beta - alpha) - (sin 2beta - sin 2alpha)/2) / pi.
inline double mu_st(const AngleInterval& I) {
    validate_angle_interval(I);
    return ((I.beta - I.alpha) - (std::sin(2.0 * I.beta) - std::sin(2.0 * I.alpha)) / 2.0) /
           std::numbers::pi;
}

// Count of curves with angle in the interval; endpoint inclusion is explicit
// because theta takes finitely many values and partitions must be exact.
inline int64_t count_angles(const TraceHistogram& h, double alpha, double beta,
                            bool include_left, bool include_right) {
    int64_t n = 0;
    for (int64_t t = -h.tmax; t <= h.tmax; ++t) {
        int64_t c = h.count(t);
        if (c == 0) continue;
        double theta = angle_of(h.q, t);
        bool left = include_left ? (theta >= alpha) : (theta > alpha);
        bool right = include_right ? (theta <= beta) : (theta < beta);
        if (left && right) n += c;
    }
    return n;
}

// N_I over the closed interval [alpha, beta].
inline int64_t count_NI(const TraceHistogram& h, const AngleInterval& I) {
    validate_angle_interval(I);
    return count_angles(h, I.alpha, I.beta, true, true);
}

inline int64_t count_NI(const FieldContext& K, const AngleInterval& I,
                        HistogramMode mode, int threads = 1) {
    return count_NI(trace_histogram(K, mode, threads), I);
}

// ---- Beurling-Selberg sandwich ---------------------------------------------
//
// With x = theta/(2 pi) and J = I/(2 pi), chi_I(theta) <= S+(x) + S+(-x)
// pointwise (and >= for S-), so summing over curves and regrouping the
// exponentials through 2 cos(m theta) = U_m - U_{m-2} gives
//
//   bound = 2 S^(0) N + sum_{m=1}^{M} paired_coeff(m) (C_m - C_{m-2})
//
// where N = q^2 - q, C_0 = N, C_{-1} = 0, and C_m = sum_t counts[t]
// w_{m+1}(t,q) / q^{m/2} is the curve Chebyshev sum.  At square q the proxy
// chi_J(x) + chi_J(-x) double counts theta = 0 (when alpha = 0) and
// theta = pi (when beta = pi); the lower bound subtracts those counts.

struct SandwichBounds {
    double lower = 0.0;
    double upper = 0.0;
};

inline SandwichBounds sandwich(const TraceHistogram& h, const AngleInterval& I, int M) {
    validate_angle_interval(I);
    if (M < 3) throw std::invalid_argument("sandwich: M must be >= 3");
    const double N = double(h.total());
    std::vector<double> C(size_t(M + 1), 0.0);
    C[0] = N;
    for (int m = 1; m <= M; ++m) {
        BigInt num = 0;
        for (int64_t t = -h.tmax; t <= h.tmax; ++t) {
            int64_t c = h.count(t);
            if (c != 0) num += c * lucas_w(m + 1, t, h.q);
        }
        C[size_t(m)] = num.convert_to<double>() / std::pow(double(h.q), m / 2.0);
    }
    const double two_pi = 2.0 * std::numbers::pi;
    IntervalJ J{I.alpha / two_pi, I.beta / two_pi};
    SandwichBounds out;
    for (SelbergSign sign : {SelbergSign::minorant, SelbergSign::majorant}) {
        SelbergPolynomial S = selberg(J, M, sign);
        double total = 2.0 * S.coeff(0).real() * N;
        for (int m = 1; m <= M; ++m)
            total += paired_coeff(S, m) * (C[size_t(m)] - (m >= 2 ? C[size_t(m - 2)] : 0.0));
        if (sign == SelbergSign::minorant)
            out.lower = total;
        else
            out.upper = total;
    }
    int64_t s = floor_2sqrt(h.q);
    if (s * s == 4 * h.q) {
        int64_t doubled = 0;
        if (I.alpha == 0.0) doubled += h.count(s);
        if (I.beta == std::numbers::pi) doubled += h.count(-s);
        out.lower -= double(doubled);
    }
    return out;
}

inline SandwichBounds sandwich(const FieldContext& K, const AngleInterval& I, int M,
                               HistogramMode mode, int threads = 1) {
    return sandwich(trace_histogram(K, mode, threads), I, M);
}

// Largest M with M^4 <= q; the sandwich's default degree.
inline int default_sandwich_degree(int64_t q) {
    int M = 1;
    while (int64_t(M + 1) * (M + 1) * (M + 1) * (M + 1) <= q) ++M;
    return std::max(M, 3);
}

// ---- discrepancy -----------------------------------------------------------

struct DiscrepancyRow {
    int64_t q = 0;
    double alpha = 0.0;
    double beta = 0.0;
    int64_t n_i = 0;
    double main = 0.0;        // mu_ST(I) q^2
    double diff = 0.0;        // n_i - main
    double normalized = 0.0;  // diff / q^{7/4}
};

// Uniform partition of [0, pi] into half-open cells [a, b); the last cell
// closes at pi so square-q boundary angles are not dropped.
inline std::vector<AngleInterval> uniform_grid(int cells) {
    if (cells < 1) throw std::invalid_argument("uniform_grid: cells must be positive");
    std::vector<AngleInterval> grid;
    for (int i = 0; i < cells; ++i)
        grid.push_back({i * std::numbers::pi / cells, (i + 1) * std::numbers::pi / cells});
    grid.back().beta = std::numbers::pi;
    return grid;
}

inline DiscrepancyRow discrepancy_row(const TraceHistogram& h, const AngleInterval& I) {
    validate_angle_interval(I);
    DiscrepancyRow row;
    row.q = h.q;
    row.alpha = I.alpha;
    row.beta = I.beta;
    bool closed_right = (I.beta == std::numbers::pi);
    row.n_i = count_angles(h, I.alpha, I.beta, true, closed_right);
    row.main = mu_st(I) * double(h.q) * double(h.q);
    row.diff = double(row.n_i) - row.main;
    row.normalized = row.diff / std::pow(double(h.q), 1.75);
    return row;
}

// One row per (q, interval); q ascending, then (alpha, beta) ascending.
// Grid cells are half-open on the right except at beta = pi.
inline std::vector<DiscrepancyRow> discrepancy_table(const std::vector<FieldContext>& fields,
                                                     std::vector<AngleInterval> grid,
                                                     HistogramMode mode, int threads = 1) {
    std::vector<const FieldContext*> order;
    for (const auto& K : fields) order.push_back(&K);
    std::sort(order.begin(), order.end(),
              [](const FieldContext* a, const FieldContext* b) { return a->q < b->q; });
    std::sort(grid.begin(), grid.end(), [](const AngleInterval& a, const AngleInterval& b) {
        return a.alpha != b.alpha ? a.alpha < b.alpha : a.beta < b.beta;
    });
    std::vector<DiscrepancyRow> rows;
    for (const FieldContext* K : order) {
        TraceHistogram h = trace_histogram(*K, mode, threads);
        for (const AngleInterval& I : grid) rows.push_back(discrepancy_row(h, I));
    }
    return rows;
}

// Least-squares slope of log|diff| against log q; rows with diff exactly 0
// are skipped, and at least 3 usable points are required.
inline double exponent_fit(const std::vector<std::pair<int64_t, double>>& q_and_diff) {
    std::vector<std::pair<double, double>> pts;
    for (auto [q, diff] : q_and_diff) {
        if (diff == 0.0) continue;
        pts.emplace_back(std::log(double(q)), std::log(std::fabs(diff)));
    }
    if (pts.size() < 3)
        throw std::invalid_argument("exponent_fit: need at least 3 points with nonzero diff");
    double n = double(pts.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// ---- moments ---------------------------------------------------------------

// Birch-style moment over ALL q^2 pairs (a,b), singular locus included:
// value = sum (sum_x chi(x^3+ax+b))^{2R}; predicted = C(2R,R)/(R+1) q^{R+2}.
struct MomentResult {
    BigInt value;
    double predicted = 0.0;
    double ratio = 0.0;
};

inline MomentResult moment_sum(const EnumerationCensus& census, int R) {
    if (R < 0) throw std::invalid_argument("moment_sum: R must be nonnegative");
    const int64_t q = census.curves.q;
    MomentResult out;
    out.value = 0;
    for (int64_t t = -census.curves.tmax; t <= census.curves.tmax; ++t) {
        int64_t c = census.curves.count(t) + census.singular.count(t);
        if (c != 0) out.value += c * bigint_pow(BigInt(t) * BigInt(t), R);
    }
    BigInt binom = 1;
    for (int i = 1; i <= R; ++i) binom = binom * (R + i) / i;  // C(2R, R)
    out.predicted = binom.convert_to<double>() / double(R + 1) * std::pow(double(q), R + 2);
    out.ratio = out.value.convert_to<double>() / out.predicted;
    return out;
}

inline MomentResult moment_sum(const FieldContext& K, int R, int threads = 1) {
    if (R > 5) throw std::invalid_argument("moment_sum: R must be <= 5");
    if (K.q > 200) throw std::invalid_argument("moment_sum: q must be <= 200");
    return moment_sum(full_census(K, threads), R);
}

}  // namespace satotate
