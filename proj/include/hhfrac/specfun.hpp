#pragma once

#include "hhfrac/quadrature.hpp"

namespace hhfrac::specfun {

/// Gamma function for x > 0, Lanczos approximation (relative error well
/// below 1e-12 on (0, 50]).
double gamma_fn(double x);

/// Beta function for x, y > 0.
double beta_fn(double x, double y);

/// Parameters of the Gauss hypergeometric function 2F1(a,b;c;z) in the
/// convergent regime used by the closed-form constants: c > b > 0, 0 <= z < 1.
struct Hyp2F1Params {
    double a;
    double b;
    double c;
    double z;

    void validate() const;
};

/// 2F1 by the Gauss series, truncated when the term drops below 1e-16 of
/// the partial sum (cap 10000 terms).
double hyp2f1_series(const Hyp2F1Params& p);

/// 2F1 by the Euler integral representation
///   (1/beta(b,c-b)) int_0^1 t^{b-1} (1-t)^{c-b-1} (1-z t)^{-a} dt,
/// with power substitutions removing both endpoint singularities.
double hyp2f1_integral(const Hyp2F1Params& p, const QuadratureConfig& cfg = {});

/// 2F1 computed both ways; throws NumericalError if they disagree beyond
/// 1e-10 relative. Returns the series value.
double hyp2f1(const Hyp2F1Params& p);
double hyp2f1(double a, double b, double c, double z);

/// Generalized logarithmic mean L_{2p-2}(a,b) for 0 < a < b, p > 1:
///   ((b^{2p-1} - a^{2p-1}) / ((2p-1)(b-a)))^{1/(2p-2)}.
double log_mean_power(double a, double b, double p);

} // namespace hhfrac::specfun
