#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "satotate/satotate.hpp"

using namespace satotate;

namespace {
const double kPi = std::numbers::pi;

double mu_st_quadrature(const AngleInterval& I, int panels = 4096) {
    auto f = [](double t) { return 2.0 / kPi * std::sin(t) * std::sin(t); };
    double h = (I.beta - I.alpha) / (2.0 * panels);
    double s = f(I.alpha) + f(I.beta);
    for (int i = 1; i < 2 * panels; ++i) s += f(I.alpha + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}
}  // namespace

TEST_CASE("semicircle measure", "[satotate]") {
    REQUIRE(mu_st({0.0, kPi}) == Catch::Approx(1.0).epsilon(1e-15));
    REQUIRE(mu_st({0.0, kPi / 2}) == Catch::Approx(0.5).epsilon(1e-15));
    REQUIRE(mu_st({0.0, kPi / 3}) ==
            Catch::Approx(1.0 / 3.0 - std::sqrt(3.0) / (4.0 * kPi)).epsilon(1e-14));
    REQUIRE(mu_st({kPi / 3, 2 * kPi / 3}) ==
            Catch::Approx((kPi / 3 + std::sqrt(3.0) / 2) / kPi).epsilon(1e-14));
    for (auto I : std::vector<AngleInterval>{
             {0.1, 0.2}, {0.0, 1.0}, {1.0, 1.5}, {2.5, kPi}, {kPi / 4, 3 * kPi / 4}}) {
        REQUIRE(mu_st(I) == Catch::Approx(mu_st_quadrature(I)).margin(1e-12));
    }
    REQUIRE_THROWS_AS(mu_st({-0.1, 1.0}), std::invalid_argument);
    REQUIRE_THROWS_AS(mu_st({1.0, 1.0}), std::invalid_argument);
    REQUIRE_THROWS_AS(mu_st({1.0, 4.0}), std::invalid_argument);
}

TEST_CASE("angle counts over F_5", "[satotate]") {
    FieldContext K = make_field(5, 1);
    TraceHistogram h = trace_histogram(K, 1);

    REQUIRE(count_NI(h, {0.0, kPi}) == 20);
    // t >= 0 <=> theta <= pi/2; both halves include the t = 0 column
    REQUIRE(count_NI(h, {0.0, kPi / 2}) == 12);
    REQUIRE(count_NI(h, {kPi / 2, kPi}) == 12);

    // half-open cells partition the family exactly
    int64_t left = count_angles(h, 0.0, kPi / 2, true, false);
    int64_t right = count_angles(h, kPi / 2, kPi, true, true);
    REQUIRE(left == 8);
    REQUIRE(left + right == 20);

    REQUIRE(count_NI(K, {0.0, kPi}, HistogramMode::orbit) == 20);
}

TEST_CASE("angle counts at q = 101", "[satotate]") {
    FieldContext K = make_field(101, 1);
    TraceHistogram h = trace_histogram(K, HistogramMode::brute, 2);
    REQUIRE(h.total() == 101 * 100);
    REQUIRE(count_NI(h, {kPi / 4, 3 * kPi / 4}) == 8450);
    REQUIRE(count_NI(h, {0.0, kPi / 3}) == 1775);
    REQUIRE(count_NI(h, {1.0, 1.5}) == 2825);
}

TEST_CASE("sandwich bounds enclose the exact count", "[satotate]") {
    FieldContext K = make_field(101, 1);
    TraceHistogram h = trace_histogram(K, HistogramMode::brute, 2);
    AngleInterval I{kPi / 4, 3 * kPi / 4};

    SandwichBounds b3 = sandwich(h, I, 3);
    REQUIRE(b3.lower == Catch::Approx(1607.6225043797).margin(1e-6));
    REQUIRE(b3.upper == Catch::Approx(11707.6225043797).margin(1e-6));
    REQUIRE(b3.lower <= 8450.0);
    REQUIRE(8450.0 <= b3.upper);

    for (int M : {4, 5, 6, 8, 12}) {
        SandwichBounds b = sandwich(h, I, M);
        REQUIRE(b.lower <= 8450.0);
        REQUIRE(8450.0 <= b.upper);
    }
    // degree growth tightens the window
    SandwichBounds b12 = sandwich(h, I, 12);
    REQUIRE(b12.upper - b12.lower < b3.upper - b3.lower);

    // the full interval catches every curve pair
    for (int M : {3, 7, 20}) {
        SandwichBounds full = sandwich(h, {0.0, kPi}, M);
        REQUIRE(full.lower <= 101.0 * 101.0 - 101.0);
        REQUIRE(101.0 * 101.0 - 101.0 <= full.upper);
    }

    REQUIRE_THROWS_AS(sandwich(h, I, 2), std::invalid_argument);
}

TEST_CASE("sandwich handles boundary angles at square q", "[satotate]") {
    FieldContext K = make_field(5, 2);
    TraceHistogram h = trace_histogram(K, HistogramMode::brute, 2);
    REQUIRE(h.count(10) == 4);  // theta = 0 exists at square q

    for (AngleInterval I : std::vector<AngleInterval>{
             {0.0, kPi}, {0.0, kPi / 2}, {kPi / 2, kPi}, {0.5, 2.0}}) {
        int64_t n = count_NI(h, I);
        for (int M : {3, 5, 9}) {
            SandwichBounds b = sandwich(h, I, M);
            REQUIRE(b.lower <= double(n));
            REQUIRE(double(n) <= b.upper);
        }
    }
}

TEST_CASE("default sandwich degree", "[satotate]") {
    REQUIRE(default_sandwich_degree(101) == 3);
    REQUIRE(default_sandwich_degree(255) == 3);
    REQUIRE(default_sandwich_degree(256) == 4);
    REQUIRE(default_sandwich_degree(499) == 4);
    REQUIRE(default_sandwich_degree(5) == 3);  // clamped to the minimum degree
}

TEST_CASE("uniform grid structure", "[satotate]") {
    auto grid = uniform_grid(4);
    REQUIRE(grid.size() == 4);
    for (int i = 0; i < 4; ++i) {
        REQUIRE(grid[size_t(i)].alpha == Catch::Approx(i * kPi / 4).epsilon(1e-15));
    }
    REQUIRE(grid.back().beta == kPi);
    REQUIRE_THROWS_AS(uniform_grid(0), std::invalid_argument);
}

TEST_CASE("discrepancy rows", "[satotate]") {
    FieldContext K = make_field(5, 1);
    TraceHistogram h = trace_histogram(K, 1);
    DiscrepancyRow row = discrepancy_row(h, {0.0, kPi});
    REQUIRE(row.q == 5);
    REQUIRE(row.n_i == 20);
    REQUIRE(row.main == Catch::Approx(25.0).epsilon(1e-15));
    REQUIRE(row.diff == Catch::Approx(-5.0).epsilon(1e-15));
    REQUIRE(row.normalized == Catch::Approx(-5.0 / std::pow(5.0, 1.75)).epsilon(1e-15));

    // an interval and its complement split q^2 - q points against mass q^2
    DiscrepancyRow left = discrepancy_row(h, {0.0, 1.0});
    DiscrepancyRow right = discrepancy_row(h, {1.0, kPi});
    REQUIRE(left.n_i + right.n_i == 20);
    REQUIRE(left.diff + right.diff == Catch::Approx(-5.0).margin(1e-9));
}

TEST_CASE("discrepancy table ordering and partition", "[satotate]") {
    std::vector<FieldContext> fields;
    fields.push_back(make_field(7, 1));
    fields.push_back(make_field(5, 1));
    auto rows = discrepancy_table(fields, uniform_grid(2), HistogramMode::brute, 1);
    REQUIRE(rows.size() == 4);
    REQUIRE(rows[0].q == 5);
    REQUIRE(rows[1].q == 5);
    REQUIRE(rows[2].q == 7);
    REQUIRE(rows[3].q == 7);
    REQUIRE(rows[0].alpha < rows[1].alpha);

    // the half-open cells tile [0, pi]: per-q counts sum to q^2 - q
    std::vector<FieldContext> sq;
    sq.push_back(make_field(5, 2));
    auto rows25 = discrepancy_table(sq, uniform_grid(16), HistogramMode::orbit, 1);
    REQUIRE(rows25.size() == 16);
    int64_t total = 0;
    for (const auto& r : rows25) total += r.n_i;
    REQUIRE(total == 600);
}

TEST_CASE("exponent fit", "[satotate]") {
    std::vector<std::pair<int64_t, double>> pts;
    for (int64_t q : {11, 101, 1009, 9973})
        pts.emplace_back(q, 3.0 * std::pow(double(q), 1.75));
    REQUIRE(exponent_fit(pts) == Catch::Approx(1.75).epsilon(1e-12));

    // sign of diff is irrelevant and zero rows are skipped
    pts[1].second *= -1.0;
    pts.emplace_back(50, 0.0);
    REQUIRE(exponent_fit(pts) == Catch::Approx(1.75).epsilon(1e-12));

    // constant |diff| across q fits slope zero
    REQUIRE(exponent_fit({{10, 7.0}, {100, 7.0}, {1000, 7.0}}) ==
            Catch::Approx(0.0).margin(1e-12));

    REQUIRE_THROWS_AS(exponent_fit({{5, 1.0}, {7, 2.0}}), std::invalid_argument);
    REQUIRE_THROWS_AS(exponent_fit({{5, 0.0}, {7, 0.0}, {11, 0.0}, {13, 1.0}, {17, 2.0}}),
                      std::invalid_argument);
}

TEST_CASE("Birch moments", "[satotate]") {
    FieldContext K5 = make_field(5, 1);
    MomentResult m0 = moment_sum(K5, 0);
    REQUIRE(m0.value == 25);  // q^2 pairs, singular included
    MomentResult m1 = moment_sum(K5, 1);
    REQUIRE(m1.value == 100);
    REQUIRE(m1.predicted == Catch::Approx(125.0));
    REQUIRE(m1.ratio == Catch::Approx(0.8));

    FieldContext K101 = make_field(101, 1);
    EnumerationCensus census = full_census(K101, 2);
    MomentResult r1 = moment_sum(census, 1);
    MomentResult r2 = moment_sum(census, 2);
    REQUIRE(r1.value == 1020100);
    REQUIRE(r2.value == 206029900);
    REQUIRE(r1.ratio > 0.9);
    REQUIRE(r1.ratio < 1.1);
    REQUIRE(r2.ratio > 0.9);
    REQUIRE(r2.ratio < 1.1);
    REQUIRE(moment_sum(K101, 1, 2).value == r1.value);

    REQUIRE_THROWS_AS(moment_sum(K5, 6), std::invalid_argument);
    FieldContext K211 = make_field(211, 1);
    REQUIRE_THROWS_AS(moment_sum(K211, 1), std::invalid_argument);
}
