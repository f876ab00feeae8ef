#include <cmath>
#include <doctest.h>

#include "hhfrac/errors.hpp"
#include "hhfrac/fracint.hpp"
#include "hhfrac/specfun.hpp"

using namespace hhfrac::fracint;
using hhfrac::DomainError;
using hhfrac::QuadratureConfig;

TEST_CASE("interval and order validation") {
    CHECK_THROWS_AS(HarmonicInterval(2.0, 1.0), DomainError);
    CHECK_THROWS_AS(HarmonicInterval(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(HarmonicInterval(-1.0, 1.0), DomainError);
    CHECK_THROWS_AS(HarmonicInterval(1.0, 1.0), DomainError);
    CHECK_THROWS_AS(FractionalOrder(0.0), DomainError);
    CHECK_THROWS_AS(FractionalOrder(-0.5), DomainError);
    CHECK(HarmonicInterval(1.0, 2.0).midpoint_harmonic() ==
          doctest::Approx(4.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("fractional integral of a constant") {
    QuadratureConfig cfg;
    auto one = [](double) { return 1.0; };
    for (double alpha : {0.25, 0.5, 1.0, 1.5, 2.0}) {
        const double expected =
            std::pow(1.5, alpha) / hhfrac::specfun::gamma_fn(alpha + 1.0);
        CHECK(rl_left(one, 0.5, alpha, 2.0, cfg) ==
              doctest::Approx(expected).epsilon(1e-10));
        CHECK(rl_right(one, 2.0, alpha, 0.5, cfg) ==
              doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("fractional integral linearity") {
    QuadratureConfig cfg;
    auto f = [](double t) { return t * t; };
    auto g = [](double t) { return std::exp(-t); };
    auto fg = [&](double t) { return 2.0 * f(t) - 3.0 * g(t); };
    const FractionalOrder alpha(0.7);
    const double lhs = rl_left(fg, 0.0, alpha, 1.0, cfg);
    const double rhs = 2.0 * rl_left(f, 0.0, alpha, 1.0, cfg) -
                       3.0 * rl_left(g, 0.0, alpha, 1.0, cfg);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
}

TEST_CASE("semigroup property J^0.5 J^0.5 = J^1") {
    QuadratureConfig outer;
    outer.abs_tol = 1e-9;
    outer.rel_tol = 1e-9;
    QuadratureConfig inner;
    inner.abs_tol = 1e-11;
    inner.rel_tol = 1e-11;
    auto f = [](double t) { return t; };
    auto half = [&](double x) { return rl_left(f, 0.0, 0.5, x, inner); };
    const double composed = rl_left(half, 0.0, 0.5, 1.0, outer);
    const double direct = rl_left(f, 0.0, 1.0, 1.0, outer);
    CHECK(composed == doctest::Approx(direct).epsilon(1e-8));
}

TEST_CASE("alpha = 1 reduces the middle term to the classical mean") {
    QuadratureConfig cfg;
    const HarmonicInterval iv(1.0, 2.0);
    auto id = [](double x) { return x; };
    // (ab/(b-a)) int_a^b x^{-2} f(x) dx = 2 log 2 for f = id
    CHECK(hh_middle_fractional(id, iv, 1.0, cfg) ==
          doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-10));
    CHECK(if_remainder(id, iv, 1.0, cfg) ==
          doctest::Approx(1.5 - 2.0 * std::log(2.0)).epsilon(1e-9));
}

TEST_CASE("frozen middle-term value at alpha = 1/2") {
    QuadratureConfig cfg;
    auto id = [](double x) { return x; };
    CHECK(hh_middle_fractional(id, {1.0, 2.0}, 0.5, cfg) ==
          doctest::Approx(1.40862340353768).epsilon(1e-10));
}

TEST_CASE("remainder identity matches its kernel form") {
    QuadratureConfig cfg;
    const HarmonicInterval iv(1.0, 3.0);
    auto f = [](double x) { return x * x; };
    auto fp = [](double x) { return 2.0 * x; };
    for (double alpha : {0.25, 0.5, 1.0, 2.0}) {
        const double direct = if_remainder(f, iv, alpha, cfg);
        const double kernel = if_remainder_kernel(fp, iv, alpha, cfg);
        CHECK(std::abs(direct - kernel) <=
              std::max(1e-8, 1e-6 * std::abs(direct)));
    }
}
