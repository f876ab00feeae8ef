#include <cmath>
#include <doctest.h>

#include "hhfrac/errors.hpp"
#include "hhfrac/specfun.hpp"

using namespace hhfrac::specfun;
using hhfrac::DomainError;

TEST_CASE("gamma spot values and recurrence") {
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-13));
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-13));
    for (double x = 0.1; x < 20.0; x += 0.37) {
        CHECK(gamma_fn(x + 1.0) ==
              doctest::Approx(x * gamma_fn(x)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(gamma_fn(0.0), DomainError);
    CHECK_THROWS_AS(gamma_fn(-1.5), DomainError);
}

TEST_CASE("beta spot value and symmetry") {
    CHECK(beta_fn(2.0, 3.0) == doctest::Approx(1.0 / 12.0).epsilon(1e-13));
    for (double x = 0.25; x < 5.0; x += 0.75)
        for (double y = 0.25; y < 5.0; y += 0.75)
            CHECK(beta_fn(x, y) == doctest::Approx(beta_fn(y, x)).epsilon(1e-12));
    CHECK_THROWS_AS(beta_fn(0.0, 1.0), DomainError);
}

TEST_CASE("hyp2f1 spot values") {
    // 2F1(1,1;2;z) = -log(1-z)/z
    CHECK(hyp2f1(1, 1, 2, 0.5) ==
          doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));
    CHECK(hyp2f1(1, 1, 2, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    // 2F1(1/2,1;3/2;z) = atanh(sqrt(z))/sqrt(z); at z = 1/4 this is log 3
    CHECK(hyp2f1(0.5, 1, 1.5, 0.25) ==
          doctest::Approx(std::log(3.0)).epsilon(1e-12));
    CHECK_THROWS_AS(hyp2f1(1, -1, 2, 0.5), DomainError);
    CHECK_THROWS_AS(hyp2f1(1, 3, 2, 0.5), DomainError); // needs c > b
    CHECK_THROWS_AS(hyp2f1(1, 1, 2, 1.0), DomainError);
}

TEST_CASE("hyp2f1 series and integral agree across a parameter grid") {
    hhfrac::QuadratureConfig cfg;
    cfg.abs_tol = 1e-13;
    cfg.rel_tol = 1e-12;
    int points = 0;
    for (double a : {0.5, 1.0, 2.0, 3.5})
        for (double b : {0.5, 1.0, 2.5})
            for (double dc : {0.5, 1.5, 3.0})
                for (double z : {0.0, 0.2, 0.5, 0.75}) {
                    Hyp2F1Params p{a, b, b + dc, z};
                    const double s = hyp2f1_series(p);
                    const double i = hyp2f1_integral(p, cfg);
                    CHECK(std::abs(s - i) <= 1e-10 * std::max(1.0, std::abs(s)));
                    ++points;
                }
    CHECK(points >= 100);
}

TEST_CASE("generalized logarithmic mean") {
    // p = 2: L_2(a,b) = ((b^3-a^3)/(3(b-a)))^{1/2}
    CHECK(log_mean_power(1.0, 2.0, 2.0) ==
          doctest::Approx(std::sqrt(7.0 / 3.0)).epsilon(1e-13));
    // consistency with direct quadrature of x^{2p-2}
    hhfrac::QuadratureConfig cfg;
    for (double p : {1.5, 2.0, 3.0}) {
        const double r = 2.0 * p - 2.0;
        const double mean =
            hhfrac::integrate([&](double x) { return std::pow(x, r); }, 1.0,
                              4.0, cfg) /
            3.0;
        CHECK(log_mean_power(1.0, 4.0, p) ==
              doctest::Approx(std::pow(mean, 1.0 / r)).epsilon(1e-10));
    }
    CHECK_THROWS_AS(log_mean_power(2.0, 1.0, 2.0), DomainError);
    CHECK_THROWS_AS(log_mean_power(1.0, 2.0, 1.0), DomainError);
}
