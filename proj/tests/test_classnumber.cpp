#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <stdexcept>

#include "satotate/classnumber.hpp"
#include "oracles.hpp"

using namespace satotate;

TEST_CASE("reduced forms for small discriminants", "[classnumber]") {
    auto f23 = reduced_forms(23);
    REQUIRE(f23.size() == 3);
    REQUIRE(f23[0] == QuadForm{1, 1, 6});
    REQUIRE(f23[1] == QuadForm{2, -1, 3});
    REQUIRE(f23[2] == QuadForm{2, 1, 3});

    auto f12 = reduced_forms(12);
    REQUIRE(f12.size() == 2);
    REQUIRE(f12[0] == QuadForm{1, 0, 3});
    REQUIRE(f12[1] == QuadForm{2, 2, 2});

    auto f3 = reduced_forms(3);
    REQUIRE(f3.size() == 1);
    REQUIRE(f3[0] == QuadForm{1, 1, 1});

    auto f4 = reduced_forms(4);
    REQUIRE(f4.size() == 1);
    REQUIRE(f4[0] == QuadForm{1, 0, 1});

    REQUIRE(reduced_forms(1).empty());
    REQUIRE(reduced_forms(2).empty());
    REQUIRE(reduced_forms(5).empty());
    REQUIRE_THROWS_AS(reduced_forms(0), std::invalid_argument);
    REQUIRE_THROWS_AS(reduced_forms(-4), std::invalid_argument);
}

TEST_CASE("reduced form invariants", "[classnumber]") {
    for (int64_t N = 1; N <= 500; ++N) {
        auto forms = reduced_forms(N);
        if (N % 4 == 1 || N % 4 == 2) {
            REQUIRE(forms.empty());
            continue;
        }
        QuadForm prev{0, 0, 0};
        for (const auto& f : forms) {
            REQUIRE(f.B * f.B - 4 * f.A * f.C == -N);
            REQUIRE(std::abs(f.B) <= f.A);
            REQUIRE(f.A <= f.C);
            if (std::abs(f.B) == f.A || f.A == f.C) REQUIRE(f.B >= 0);
            // strictly increasing in (A, B)
            REQUIRE((f.A > prev.A || (f.A == prev.A && f.B > prev.B)));
            prev = f;
        }
    }
}

TEST_CASE("twelfth-integral Hurwitz values", "[classnumber]") {
    const std::map<int64_t, int64_t> table = {
        {0, -1}, {3, 4},   {4, 6},   {7, 12},  {8, 12},  {11, 12}, {12, 16},
        {15, 24}, {16, 18}, {19, 12}, {20, 24}, {23, 36}, {24, 24}, {28, 24},
    };
    for (auto [N, tw] : table) REQUIRE(twelve_hurwitz(N) == tw);
    REQUIRE(twelve_hurwitz(1) == 0);
    REQUIRE(twelve_hurwitz(2) == 0);
    REQUIRE_THROWS_AS(twelve_hurwitz(-3), std::invalid_argument);

    REQUIRE(hurwitz(0).twelve_H == -1);
    REQUIRE(hurwitz(0).N == 0);
    REQUIRE(hurwitz(3).twelve_H == 4);
    REQUIRE(hurwitz(4).twelve_H == 6);
    REQUIRE(hurwitz(23).twelve_H == 36);
}

TEST_CASE("Hurwitz values match the form-sweep oracle", "[classnumber]") {
    for (int64_t N = 0; N <= 600; ++N)
        REQUIRE(twelve_hurwitz(N) == testoracle::naive_twelve_hurwitz(N));
}
