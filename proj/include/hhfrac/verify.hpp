#pragma once

#include "hhfrac/report.hpp"
#include "hhfrac/theorems.hpp"

namespace hhfrac::verify {

using fracint::HarmonicInterval;
using theorems::ExponentPair;

/// Parameter grid for the sweep engine.
struct SweepGrid {
    std::vector<HarmonicInterval> intervals;
    std::vector<double> alphas;
    std::vector<double> qs;           // power-mean family, q >= 1
    std::vector<ExponentPair> pqs;    // Holder family
    std::vector<std::string> functions;
    QuadratureConfig quadrature;
    double tol = 1e-8; // margin tolerance

    void validate() const;
    static SweepGrid default_grid();
};

struct SweepSummary {
    int pass = 0;
    int fail = 0;
    int skipped = 0;
    int numerical_error = 0;
};

struct SweepResult {
    std::vector<MarginReport> reports; // sorted
    SweepSummary summary;
};

SweepSummary summarize(const std::vector<MarginReport>& reports);

/// Runs every applicable theorem over the grid and the catalog. One report
/// per (theorem, applicable tuple, function); hypothesis failures are
/// skipped rows, numerical failures are error rows, nothing is dropped.
SweepResult run_sweep(const SweepGrid& grid);

/// alpha = 1 reduction checks over the default grid: the Lemma 2.1 kernel
/// against the classical identity kernel, thm23 against thm13, thm26
/// against thm14 (1e-9 relative).
std::vector<MarginReport> reduction_suite(const QuadratureConfig& cfg);

/// Every closed-form constant against its defining-integral oracle over the
/// default grid, plus the K_i <= C_i ordering checks. Discrepancies where
/// the oracle is authoritative appear as notes, not failures.
std::vector<MarginReport> oracle_suite(const QuadratureConfig& cfg);

} // namespace hhfrac::verify
