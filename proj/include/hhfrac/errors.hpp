#pragma once

#include <stdexcept>

namespace hhfrac {

/// Invalid argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Quadrature non-convergence or disagreement between independent
/// computation paths beyond tolerance.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hhfrac
