#include <cmath>
#include <doctest.h>

#include "hhfrac/errors.hpp"
#include "hhfrac/quadrature.hpp"

using hhfrac::DomainError;
using hhfrac::NumericalError;
using hhfrac::QuadratureConfig;
using hhfrac::integrate;

TEST_CASE("polynomials integrate to machine precision") {
    QuadratureConfig cfg;
    CHECK(integrate([](double) { return 1.0; }, 0.0, 1.0, cfg) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0, cfg) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(integrate([](double x) { return std::pow(x, 5); }, 0.0, 2.0, cfg) ==
          doctest::Approx(64.0 / 6.0).epsilon(1e-14));
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, M_PI, cfg) ==
          doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("adaptive refinement handles mild endpoint behavior") {
    QuadratureConfig cfg;
    CHECK(integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, cfg) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-10));
    CHECK(integrate([](double x) { return std::log(x); }, 0.0, 1.0, cfg) ==
          doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("breakpoints split a kinked integrand exactly") {
    QuadratureConfig cfg;
    auto kink = [](double t) { return std::abs(1.0 - 2.0 * t); };
    CHECK(integrate(kink, {0.0, 0.5, 1.0}, cfg) ==
          doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("invalid inputs are rejected") {
    QuadratureConfig cfg;
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, {1.0, 0.0}, cfg),
                    DomainError);
    CHECK_THROWS_AS(
        integrate([](double x) { return 1.0 / x; }, {0.0, 1.0}, cfg),
        NumericalError); // divergent integral exhausts the budget
    QuadratureConfig bad;
    bad.abs_tol = 0.0;
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, bad),
                    DomainError);
}

TEST_CASE("refinement budget exhaustion throws") {
    QuadratureConfig tiny;
    tiny.max_refinements = 1;
    tiny.abs_tol = 1e-14;
    tiny.rel_tol = 1e-14;
    auto rough = [](double x) { return std::sin(200.0 * x) / (x + 1e-3); };
    CHECK_THROWS_AS(integrate(rough, 0.0, 1.0, tiny), NumericalError);
}
