#pragma once

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace satotate {

// Hurwitz-Kronecker class numbers H(N) by enumeration of reduced
// positive-definite binary quadratic forms of discriminant -N.  H is carried
// exactly as the integer 12*H(N); floats never appear.

struct QuadForm {
    int64_t A, B, C;  // B^2 - 4AC = -N, A > 0
    friend bool operator==(const QuadForm&, const QuadForm&) = default;
};

struct HurwitzValue {
    int64_t N;
    int64_t twelve_H;
};

// All reduced forms of discriminant -N: |B| <= A <= C with B >= 0 whenever
// |B| = A or A = C.  Sorted by (A, B); empty when N = 1, 2 mod 4.
inline std::vector<QuadForm> reduced_forms(int64_t N) {
    if (N <= 0) throw std::invalid_argument("reduced_forms: N must be positive");
    std::vector<QuadForm> out;
    if (N % 4 == 1 || N % 4 == 2) return out;
    for (int64_t A = 1; 3 * A * A <= N; ++A) {
        for (int64_t B = -A; B <= A; ++B) {
            if ((N + B) % 2 != 0) continue;  // B^2 = -N mod 4 needs B = N mod 2
            int64_t num = B * B + N;
            if (num % (4 * A) != 0) continue;
            int64_t C = num / (4 * A);
            if (C < A) continue;
            if (B < 0 && (-B == A || A == C)) continue;
            out.push_back({A, B, C});
        }
    }
    std::sort(out.begin(), out.end(), [](const QuadForm& f, const QuadForm& g) {
        return f.A != g.A ? f.A < g.A : f.B < g.B;
    });
    return out;
}

// 12*H(N).  Weights: 1 per class, 1/2 for scalings of x^2+y^2 (A,0,A), 1/3
// for scalings of x^2+xy+y^2 (A,A,A); H(0) = -1/12 by convention so that the
// t^2 = 4q boundary of the trace formula absorbs into the class-number sum.
inline int64_t twelve_hurwitz(int64_t N) {
    if (N < 0) throw std::invalid_argument("twelve_hurwitz: N must be nonnegative");
    if (N == 0) return -1;
    if (N % 4 == 1 || N % 4 == 2) return 0;
    static std::mutex mu;
    static std::unordered_map<int64_t, int64_t> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(N);
        if (it != memo.end()) return it->second;
    }
    int64_t tw = 0;
    for (const QuadForm& f : reduced_forms(N)) {
        if (f.B == 0 && f.A == f.C)
            tw += 6;
        else if (f.A == f.B && f.B == f.C)
            tw += 4;
        else
            tw += 12;
    }
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(N, tw);
    return tw;
}

inline HurwitzValue hurwitz(int64_t N) { return {N, twelve_hurwitz(N)}; }

}  // namespace satotate
