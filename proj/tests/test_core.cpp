#include <catch2/catch_amalgamated.hpp>

#include "rotadrop/core.hpp"

#include "oracles.hpp"

using namespace rotadrop;

TEST_CASE("first integral closed form") {
    CHECK(first_integral(2.0, 0.0, 1.0) == Catch::Approx(1.0));
    CHECK(first_integral(1.0, 1.0, 1.0) == Catch::Approx(0.75));
    CHECK(first_integral(1.0, -1.0, 4.0) == Catch::Approx(1.75));
    CHECK(first_integral(2.0, 0.0, 0.0, 1.0) == Catch::Approx(0.5));
    CHECK(first_integral(0.0, 1.0, 1.0) == 0.0);
    CHECK_THROWS_AS(first_integral(0.0, 1.0, 1.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(first_integral(-1.0, 1.0, 1.0), std::domain_error);
}

TEST_CASE("profile curvature closed form") {
    CHECK(profile_curvature(0.0, 3.0, 1.2) == Catch::Approx(0.6));
    CHECK(profile_curvature(0.0, -7.0, 1.2) == Catch::Approx(0.6));
    CHECK(profile_curvature(1.0, 1.0, 1.0) == Catch::Approx(1.25));
    CHECK(profile_curvature(1.5, 0.0, 1.0) == Catch::Approx(0.5));
}

TEST_CASE("classification of the figure parameter pairs") {
    CHECK(classify(1.0, 1.0) == SurfaceType::TypeI);
    CHECK(classify(-1.0, 4.0) == SurfaceType::TypeIIa);
    CHECK(classify(-1.0, 1.2) == SurfaceType::TypeIIb);
    CHECK(classify(-1.0, 2.0) == SurfaceType::TypeIIb);
    CHECK(classify(0.0, 1.0) == SurfaceType::CMC);
    CHECK_THROWS_AS(classify(0.0, 0.0), std::invalid_argument);
}

TEST_CASE("classification threshold pair is TypeIIa") {
    // f(r1) = 1 exactly when a = -2 b^3 / 27.
    const double b = 1.5;
    const double a = -2.0 * b * b * b / 27.0;
    CHECK(classify(a, b) == SurfaceType::TypeIIa);
    CHECK(classify(a * (1.0 + 1e-6), b) == SurfaceType::TypeIIb);
}

TEST_CASE("classification matches a brute-force scan for a < 0") {
    // Oracle: sample f densely on (0, r2) and see whether it reaches 1.
    for (int i = 1; i <= 20; ++i) {
        for (int j = 1; j <= 20; ++j) {
            const double a = -0.1 - 0.2 * i;
            const double b = 0.2 * j;
            const double r2 = std::sqrt(-2.0 * b / a);
            double fmax = 0.0;
            for (int k = 1; k <= 4000; ++k)
                fmax = std::max(fmax, first_integral(r2 * k / 4000.0, a, b));
            const SurfaceType expect = fmax >= 1.0 - 1e-12
                                           ? SurfaceType::TypeIIa
                                           : SurfaceType::TypeIIb;
            INFO("a=" << a << " b=" << b);
            CHECK(classify(a, b) == expect);
        }
    }
}

TEST_CASE("classification is invariant under the sign flip") {
    CHECK(classify(-1.0, -1.0) == classify(1.0, 1.0));
    CHECK(classify(1.0, -4.0) == classify(-1.0, 4.0));
    CHECK(find_c0(-1.0, -1.0) == Catch::Approx(find_c0(1.0, 1.0)).epsilon(1e-12));
}

TEST_CASE("critical radii") {
    auto [r1, r2] = critical_radii(-1.0, 1.2);
    CHECK(r1 == Catch::Approx(std::sqrt(0.8)));
    CHECK(r2 == Catch::Approx(std::sqrt(2.4)));
    auto [s1, s2] = critical_radii(-2.0, 1.0);
    CHECK(s1 == Catch::Approx(1.0 / std::sqrt(3.0)));
    CHECK(s2 == Catch::Approx(1.0));
    CHECK(r1 < r2);
    CHECK_THROWS_AS(critical_radii(1.0, 1.0), std::invalid_argument);
}

TEST_CASE("maximal radius c0 against bisection oracles") {
    // sphere: f(r) = r/2
    CHECK(find_c0(0.0, 1.0) == Catch::Approx(2.0).epsilon(1e-12));
    // x^3 + 2x - 4 = 0 on [1, 2]
    const double c11 = oracles::bisect(
        [](double x) { return x * x * x + 2.0 * x - 4.0; }, 1.0, 2.0);
    CHECK(find_c0(1.0, 1.0) == Catch::Approx(c11).epsilon(1e-10));
    CHECK(c11 == Catch::Approx(1.1795).epsilon(1e-4));
    // r^3 - 8r + 4 = 0 on [0.4, 0.6]
    const double c14 = oracles::bisect(
        [](double x) { return x * x * x - 8.0 * x + 4.0; }, 0.4, 0.6);
    CHECK(find_c0(-1.0, 4.0) == Catch::Approx(c14).epsilon(1e-10));
    CHECK(c14 == Catch::Approx(0.517).epsilon(1e-3));
    // TypeIIb root past the height maximum: r^3 - 2.4r - 4 = 0 on [2, 2.2]
    const double cIIb = oracles::bisect(
        [](double x) { return x * x * x - 2.4 * x - 4.0; }, 2.0, 2.2);
    CHECK(find_c0(-1.0, 1.2) == Catch::Approx(cIIb).epsilon(1e-10));
    CHECK(first_integral(find_c0(-1.0, 1.2), -1.0, 1.2) ==
          Catch::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("f(c0) = +-1 on a parameter grid") {
    const double as[] = {0.0, 0.25, 0.5, 1.0, 2.0, -0.5, -1.0, -2.0};
    const double bs[] = {0.0, 0.5, 1.0, 1.2, 2.0, 4.0};
    for (double a : as) {
        for (double b : bs) {
            if (a <= 0.0 && b <= 0.0) continue;
            if (a < 0.0 && b == 0.0) continue;
            const double c0 = find_c0(a, b);
            INFO("a=" << a << " b=" << b << " c0=" << c0);
            CHECK(std::abs(std::abs(first_integral(c0, a, b)) - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("f and kappa strictly increasing up to c0 for a > 0") {
    for (double a : {0.25, 1.0, 2.0}) {
        for (double b : {0.0, 1.0, 2.0}) {
            const double c0 = find_c0(a, b);
            double prev_f = -1.0, prev_k = -1e300;
            for (int i = 1; i <= 256; ++i) {
                const double r = c0 * i / 256.0;
                CHECK(first_integral(r, a, b) > prev_f);
                CHECK(profile_curvature(r, a, b) > prev_k);
                prev_f = first_integral(r, a, b);
                prev_k = profile_curvature(r, a, b);
            }
        }
    }
}

TEST_CASE("r1 < r2 < c0 for TypeIIb parameters") {
    for (double a : {-0.5, -1.0, -2.0}) {
        for (double b : {0.5, 1.0, 1.2, 2.0}) {
            if (classify(a, b) != SurfaceType::TypeIIb) continue;
            auto [r1, r2] = critical_radii(a, b);
            const double c0 = find_c0(a, b);
            INFO("a=" << a << " b=" << b);
            CHECK(r1 < r2);
            CHECK(r2 < c0);
        }
    }
}

TEST_CASE("comparison circle radii") {
    CHECK(comparison_circle(1.0, {1.0, 1.0}, 0.0).radius ==
          Catch::Approx(4.0 / 3.0));
    CHECK(comparison_circle(1.0, {0.0, 1.0}, 0.0).radius == Catch::Approx(2.0));
    const double c0 = find_c0(1.0, 1.0);
    CHECK(comparison_circle(c0, {1.0, 1.0}, 0.0).radius ==
          Catch::Approx(c0).epsilon(1e-9));
    CHECK_THROWS_AS(comparison_circle(1.0, {-1.0, 4.0}, 0.0),
                    std::invalid_argument);
}

TEST_CASE("comparison circle anchors") {
    // upper circle starts at u0 with zero slope; lower circle meets u at c.
    const DropParams p{1.0, 1.0, 0.5};
    const double u_c = 0.9;
    const auto circ = comparison_circle(1.0, p, u_c);
    CHECK(circ.upper(0.0) == Catch::Approx(p.u0));
    CHECK(circ.lower(1.0) == Catch::Approx(u_c));
}
