#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hhfrac/fracint.hpp"

namespace hhfrac::harmonic {

using fracint::HarmonicInterval;

/// Verdict of a grid-based harmonic-convexity check, with the worst
/// violating triple for diagnostics.
struct ConvexityVerdict {
    bool convex = true;
    double worst_violation = 0.0; // largest positive lhs - rhs excess
    double x = 0.0, y = 0.0, t = 0.0;
};

/// Checks f(xy/(tx+(1-t)y)) <= t f(y) + (1-t) f(x) on a uniform grid of
/// samples x samples x t_samples triples over [a,b] x [a,b] x [0,1].
/// Returns false iff some triple violates by more than tol, measured
/// relative to max(1, |rhs|) so large function values do not drown it.
ConvexityVerdict is_harmonically_convex(const ScalarFn& f,
                                        const HarmonicInterval& iv,
                                        int samples = 50, double tol = 1e-10,
                                        int t_samples = 21);

/// Independent oracle: f is harmonically convex on [a,b] iff u -> f(1/u) is
/// convex on [1/b, 1/a]. Midpoint-convexity sampling of the reciprocal map.
bool reciprocal_convexity_check(const ScalarFn& f, const HarmonicInterval& iv,
                                int samples = 50, double tol = 1e-10);

/// A catalog entry: f, f' and declared convexity flags used to select the
/// theorems that apply to it.
struct TestFunction {
    std::string id;
    ScalarFn f;
    ScalarFn f_prime; // empty if no derivative is available
    bool harmonically_convex = false;
    // whether |f'|^q is harmonically convex on the working intervals, q >= 1
    std::function<bool(double)> abs_deriv_pow_convex;

    bool has_prime() const { return static_cast<bool>(f_prime); }
};

/// The built-in, load-time-validated function catalog
/// (id_x, sq, log, recip_affine, exp). Declared flags are confirmed
/// numerically on first use; a mismatch aborts with NumericalError.
const std::vector<TestFunction>& catalog();

/// Lookup by id; throws DomainError if absent.
const TestFunction& find(std::string_view id);

} // namespace hhfrac::harmonic
