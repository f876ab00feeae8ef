#pragma once

#include "hhfrac/quadrature.hpp"

namespace hhfrac::fracint {

/// Positive interval 0 < a < b; domain of every theorem.
struct HarmonicInterval {
    double a;
    double b;

    HarmonicInterval(double a_, double b_) : a(a_), b(b_) { validate(); }
    void validate() const;
    double midpoint_harmonic() const { return 2.0 * a * b / (a + b); }
};

/// Fractional order alpha > 0.
struct FractionalOrder {
    double alpha;

    FractionalOrder(double alpha_) : alpha(alpha_) { validate(); }
    void validate() const;
};

/// Left Riemann-Liouville integral (1/Gamma(alpha)) int_lower^x (x-t)^{alpha-1} f(t) dt.
/// The endpoint singularity (alpha < 1) is removed by the substitution
/// w = (x-t)^alpha before quadrature.
double rl_left(const ScalarFn& f, double lower, FractionalOrder alpha, double x,
               const QuadratureConfig& cfg);

/// Right Riemann-Liouville integral, kernel (t-x)^{alpha-1} over [x, upper].
double rl_right(const ScalarFn& f, double upper, FractionalOrder alpha, double x,
                const QuadratureConfig& cfg);

/// The symmetrized fractional middle term
///   (Gamma(alpha+1)/2) (ab/(b-a))^alpha { J^alpha_{1/a-}(f o g)(1/b) + J^alpha_{1/b+}(f o g)(1/a) },
/// g(x) = 1/x. Computed via the t-parameterized form
///   (alpha/2) int_0^1 t^{alpha-1} [f(ab/(tb+(1-t)a)) + f(ab/(ta+(1-t)b))] dt
/// (substitution t = s^{1/alpha}) and cross-checked against the direct
/// rl_left/rl_right composition; disagreement beyond 10*rel_tol throws.
double hh_middle_fractional(const ScalarFn& f, const HarmonicInterval& iv,
                            FractionalOrder alpha, const QuadratureConfig& cfg);

/// Remainder I_f(g; alpha, a, b) = (f(a)+f(b))/2 - middle term.
double if_remainder(const ScalarFn& f, const HarmonicInterval& iv,
                    FractionalOrder alpha, const QuadratureConfig& cfg);

/// Same remainder via the kernel identity
///   (ab(b-a)/2) int_0^1 [t^alpha - (1-t)^alpha] / (ta+(1-t)b)^2 * f'(ab/(ta+(1-t)b)) dt,
/// split at t = 1/2 where the bound proofs introduce the |.| kink.
double if_remainder_kernel(const ScalarFn& fprime, const HarmonicInterval& iv,
                           FractionalOrder alpha, const QuadratureConfig& cfg);

} // namespace hhfrac::fracint
