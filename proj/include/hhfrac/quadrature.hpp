#pragma once

#include <functional>
#include <initializer_list>
#include <vector>

#include "hhfrac/errors.hpp"

namespace hhfrac {

using ScalarFn = std::function<double(double)>;

/// Tolerances and refinement budget for all adaptive integration.
struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_refinements = 4000; // interval bisection budget

    void validate() const;
};

/// Adaptive Gauss-Kronrod 7-15 integration of f over [lo, hi].
/// Panels are bisected worst-error-first until the summed error estimate
/// drops below max(abs_tol, rel_tol*|result|). Throws NumericalError if
/// the refinement budget is exhausted first.
double integrate(const ScalarFn& f, double lo, double hi,
                 const QuadratureConfig& cfg);

/// Same, but with mandatory initial panel boundaries (for kink points,
/// e.g. t = 1/2 under |1-2t| kernels). `points` must be strictly increasing.
double integrate(const ScalarFn& f, std::initializer_list<double> points,
                 const QuadratureConfig& cfg);

} // namespace hhfrac
