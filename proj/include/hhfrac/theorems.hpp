#pragma once

#include <string>

#include "hhfrac/harmonic.hpp"

namespace hhfrac::theorems {

using fracint::FractionalOrder;
using fracint::HarmonicInterval;
using harmonic::TestFunction;

/// Conjugate Holder exponents 1/p + 1/q = 1, p,q > 1.
struct ExponentPair {
    double p;
    double q;

    ExponentPair(double p_, double q_) : p(p_), q(q_) { validate(); }
    static ExponentPair from_p(double p_) { return {p_, p_ / (p_ - 1.0)}; }
    void validate() const;
};

/// Power-mean exponent q >= 1.
struct PowerMeanExponent {
    double q;

    PowerMeanExponent(double q_) : q(q_) { validate(); }
    void validate() const;
};

enum class ConstantName {
    lambda1, lambda2, lambda3,
    mu1, mu2,
    c1_powermean, c2_powermean, c3_powermean,
    c1_lemma15, c2_lemma15, c3_lemma15,
    k1_exact, k2_exact, k3_exact,
    k4, k5, k6, k7, k8, k9, k10, k11,
};

std::string to_string(ConstantName name);

/// One closed-form constant paired with its quadrature oracle. When the
/// printed closed form disagrees with the defining integral beyond
/// max(1e-9, 1e-7 relative), the oracle is authoritative: `value` carries
/// the oracle, `printed_value` the closed form, and `note` records the
/// discrepancy.
struct BoundConstant {
    ConstantName name;
    double value = 0.0;         // authoritative value used in the bounds
    double oracle_value = 0.0;  // defining integral by adaptive quadrature
    double printed_value = 0.0; // closed form exactly as printed
    bool discrepant = false;
    std::string note;
};

struct LambdaConstants { double lambda1, lambda2, lambda3; };
struct MuConstants { double mu1, mu2; };
struct CConstants { BoundConstant c1, c2, c3; };
struct ChainValues { double left, middle, right; };

/// A bound value together with any oracle-discrepancy notes picked up from
/// the constants it uses.
struct BoundResult {
    double value = 0.0;
    std::string notes;
};

/// Closed form + oracle for any named constant. alpha, p, q are consulted
/// only where the constant depends on them (a missing-but-needed parameter
/// throws DomainError). The k*_exact names have no closed form; their
/// oracle doubles as the value.
BoundConstant named_constant(ConstantName name, const HarmonicInterval& iv,
                             double alpha, double p, double q,
                             const QuadratureConfig& cfg);

/// Defining integral of a constant, by adaptive quadrature (split at
/// t = 1/2 wherever a |1-2t| or Lemma-1.5 split appears). alpha, p, q are
/// consulted only where the constant depends on them.
double constant_oracle(ConstantName name, const HarmonicInterval& iv,
                       double alpha, double p, double q,
                       const QuadratureConfig& cfg);

/// The fractional HH chain: left = f(2ab/(a+b)), middle = fractional middle
/// term, right = (f(a)+f(b))/2.
ChainValues hh_chain(const TestFunction& f, const HarmonicInterval& iv,
                     FractionalOrder alpha, const QuadratureConfig& cfg);

/// lambda1..3 closed forms; lambda3 = lambda1 - lambda2 identically.
LambdaConstants lambda_constants(const HarmonicInterval& iv);

/// mu1, mu2 closed forms; requires q > 1.
MuConstants mu_constants(const HarmonicInterval& iv, double q);

/// C1..C3 of the power-mean fractional bound, closed forms via 2F1 with
/// quadrature oracles. C3's printed prefactor disagrees with its defining
/// integral; it is returned discrepant with the oracle authoritative.
CConstants c_constants_powermean(const HarmonicInterval& iv,
                                 FractionalOrder alpha,
                                 const QuadratureConfig& cfg);

/// C1..C3 of the Lemma-1.5 variant (0 < alpha <= 1), closed forms via 2F1
/// with quadrature oracles.
CConstants c_constants_lemma15(const HarmonicInterval& iv,
                               FractionalOrder alpha,
                               const QuadratureConfig& cfg);

// Upper bounds on |I_f(g; alpha, a, b)|. Each requires f' in the catalog
// entry and the |f'|^q harmonic-convexity hypothesis (checked by caller
// against the catalog flags; missing f' throws DomainError here).
/// Applies the shared power-mean bound shape
///   (ab(b-a)/2) C1^{1-1/q} (C2 |f'(b)|^q + C3 |f'(a)|^q)^{1/q}
/// to precomputed constants (lets sweeps hoist the C's out of the f/q loops).
BoundResult bound_from_constants(const CConstants& c, const TestFunction& f,
                                 const HarmonicInterval& iv,
                                 PowerMeanExponent q);

double bound_thm13(const TestFunction& f, const HarmonicInterval& iv,
                   PowerMeanExponent q);
double bound_thm14(const TestFunction& f, const HarmonicInterval& iv,
                   const ExponentPair& pq);
BoundResult bound_thm22(const TestFunction& f, const HarmonicInterval& iv,
                        FractionalOrder alpha, PowerMeanExponent q,
                        const QuadratureConfig& cfg);
BoundResult bound_thm23(const TestFunction& f, const HarmonicInterval& iv,
                        FractionalOrder alpha, PowerMeanExponent q,
                        const QuadratureConfig& cfg);
BoundResult bound_thm24(const TestFunction& f, const HarmonicInterval& iv,
                        FractionalOrder alpha, const ExponentPair& pq,
                        const QuadratureConfig& cfg);
BoundResult bound_thm25(const TestFunction& f, const HarmonicInterval& iv,
                        FractionalOrder alpha, const ExponentPair& pq,
                        const QuadratureConfig& cfg);
BoundResult bound_thm26(const TestFunction& f, const HarmonicInterval& iv,
                        FractionalOrder alpha, const ExponentPair& pq,
                        const QuadratureConfig& cfg);

} // namespace hhfrac::theorems
