// Acceptance gate: one line per criterion, exit 0 iff every criterion passes.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hhfrac/errors.hpp"
#include "hhfrac/fracint.hpp"
#include "hhfrac/harmonic.hpp"
#include "hhfrac/specfun.hpp"
#include "hhfrac/theorems.hpp"
#include "hhfrac/verify.hpp"

using namespace hhfrac;
using fracint::HarmonicInterval;
using harmonic::TestFunction;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& what, const std::string& detail) {
    std::printf("criterion %d: %s - %s%s%s\n", n, ok ? "pass" : "FAIL",
                what.c_str(), detail.empty() ? "" : ": ", detail.c_str());
    if (!ok) ++failures;
}

const std::vector<HarmonicInterval>& intervals() {
    static const std::vector<HarmonicInterval> ivs{
        {1.0, 2.0}, {1.0, 5.0}, {2.0, 3.0}, {0.5, 4.0}};
    return ivs;
}

const std::vector<double>& alphas() {
    static const std::vector<double> as{0.25, 0.5, 0.75, 1.0, 1.5, 2.0};
    return as;
}

// 1. Two-sided chain on the full grid, plus the alpha = 1 classical reduction.
void criterion_chain() {
    QuadratureConfig cfg;
    bool ok = true;
    std::string detail;
    int tuples = 0;
    for (const auto& iv : intervals())
        for (double alpha : alphas())
            for (const auto& f : harmonic::catalog()) {
                const auto c = theorems::hh_chain(f, iv, alpha, cfg);
                ++tuples;
                if (!(c.middle - c.left >= -1e-8 &&
                      c.right - c.middle >= -1e-8)) {
                    ok = false;
                    detail = "chain violated for " + f.id;
                }
                if (alpha == 1.0) {
                    const double classical =
                        iv.a * iv.b / (iv.b - iv.a) *
                        integrate([&](double x) { return f.f(x) / (x * x); },
                                  iv.a, iv.b, cfg);
                    if (std::abs(c.middle - classical) >
                        1e-9 * std::max(1.0, std::abs(classical))) {
                        ok = false;
                        detail = "alpha=1 middle mismatch for " + f.id;
                    }
                }
            }
    report(1, ok && tuples == 120,
           "two-sided chain holds on the 120-tuple grid and the alpha=1 "
           "middle term matches the classical mean",
           detail);
}

// 2. Remainder identity vs its kernel form on the full grid.
void criterion_identity() {
    QuadratureConfig cfg;
    bool ok = true;
    std::string detail;
    int tuples = 0;
    for (const auto& iv : intervals())
        for (double alpha : alphas())
            for (const auto& f : harmonic::catalog()) {
                const double direct = fracint::if_remainder(f.f, iv, alpha, cfg);
                const double kernel =
                    fracint::if_remainder_kernel(f.f_prime, iv, alpha, cfg);
                ++tuples;
                if (std::abs(direct - kernel) >
                    std::max(1e-8, 1e-6 * std::abs(direct))) {
                    ok = false;
                    detail = "identity mismatch for " + f.id;
                }
            }
    report(2, ok && tuples == 120,
           "remainder identity matches its kernel form on all 120 tuples",
           detail);
}

// 3. Closed-form constants against their defining-integral oracles.
void criterion_constants() {
    using theorems::ConstantName;
    QuadratureConfig cfg;
    bool ok = true;
    std::string detail;
    auto expect = [&](double got, double want, double tol, const char* what) {
        if (std::abs(got - want) > tol) {
            ok = false;
            detail = std::string(what) + " off";
        }
    };

    const HarmonicInterval unit(1.0, 2.0);
    const auto l = theorems::lambda_constants(unit);
    expect(l.lambda1, 0.2644337, 1e-6, "lambda1(1,2)");
    expect(l.lambda2, 0.0889152, 1e-6, "lambda2(1,2)");
    const auto m = theorems::mu_constants(unit, 2.0);
    expect(m.mu1, 1.0 / 12.0, 1e-12, "mu1(1,2,2)");
    expect(m.mu2, 5.0 / 24.0, 1e-12, "mu2(1,2,2)");
    const double nan = std::nan("");
    expect(theorems::named_constant(ConstantName::k6, unit, nan, 2.0, nan, cfg)
               .value,
           7.0 / 24.0, 1e-10, "k6(1,2,p=2)");
    for (double alpha : {0.5, 1.5})
        for (double q : {1.5, 3.0}) {
            expect(theorems::named_constant(ConstantName::k7, unit, alpha, nan,
                                            q, cfg)
                       .value,
                   1.0 / (2.0 * (alpha * q + 1.0)), 1e-10, "k7");
            expect(theorems::named_constant(ConstantName::k8, unit, alpha, nan,
                                            q, cfg)
                       .value,
                   1.0 / (2.0 * (alpha * q + 1.0)), 1e-10, "k8");
            expect(theorems::named_constant(ConstantName::k9, unit, alpha, q,
                                            nan, cfg)
                       .value,
                   1.0 / (alpha * q + 1.0), 1e-10, "k9");
        }

    // every 2F1-based closed form vs oracle; c3_powermean must be flagged
    for (const auto& iv : intervals())
        for (double alpha : {0.25, 0.5, 0.75, 1.0}) {
            const auto pm = theorems::c_constants_powermean(iv, alpha, cfg);
            const auto l15 = theorems::c_constants_lemma15(iv, alpha, cfg);
            for (const auto* c : {&pm.c1, &pm.c2, &l15.c1, &l15.c2, &l15.c3}) {
                if (c->discrepant ||
                    std::abs(c->printed_value - c->oracle_value) >
                        1e-9 * std::max(1.0, std::abs(c->oracle_value))) {
                    ok = false;
                    detail = theorems::to_string(c->name) + " vs oracle";
                }
            }
            if (!pm.c3.discrepant || pm.c3.value != pm.c3.oracle_value) {
                ok = false;
                detail = "c3_powermean must be flagged with the oracle "
                         "authoritative";
            }
            for (auto name : {ConstantName::k4, ConstantName::k5}) {
                for (double p : {2.0, 3.0}) {
                    const auto k = theorems::named_constant(name, iv, alpha, p,
                                                            p / (p - 1.0), cfg);
                    if (k.discrepant ||
                        std::abs(k.printed_value - k.oracle_value) >
                            1e-9 * std::max(1.0, std::abs(k.oracle_value))) {
                        ok = false;
                        detail = theorems::to_string(name) + " vs oracle";
                    }
                }
            }
        }
    for (const auto& iv : intervals())
        for (auto name : {ConstantName::k10, ConstantName::k11})
            for (double q : {1.5, 2.0, 3.0}) {
                const auto k =
                    theorems::named_constant(name, iv, nan, nan, q, cfg);
                if (k.discrepant ||
                    std::abs(k.printed_value - k.oracle_value) >
                        1e-9 * std::max(1.0, std::abs(k.oracle_value))) {
                    ok = false;
                    detail = theorems::to_string(name) + " vs oracle";
                }
            }
    report(3, ok,
           "constant closed forms match their oracles (c3_powermean flagged, "
           "oracle authoritative)",
           detail);
}

// 4. Every bound dominates the remainder on every applicable grid tuple.
void criterion_bounds() {
    const auto result = verify::run_sweep(verify::SweepGrid::default_grid());
    int bound_rows = 0, bad = 0;
    for (const auto& r : result.reports) {
        const bool is_bound = r.theorem_id.rfind("thm", 0) == 0 &&
                              r.theorem_id != "thm20_left" &&
                              r.theorem_id != "thm20_right";
        if (!is_bound) continue;
        if (r.status == verify::Status::skipped_hypothesis) continue;
        ++bound_rows;
        if (r.status != verify::Status::pass) ++bad;
    }
    report(4, bad == 0 && bound_rows > 0,
           "all bound theorems dominate the remainder on the grid (" +
               std::to_string(bound_rows) + " rows, " + std::to_string(bad) +
               " failures)",
           "");
}

// 5. alpha = 1 reductions to the classical bounds and identity.
void criterion_reductions() {
    QuadratureConfig cfg;
    const auto rows = verify::reduction_suite(cfg);
    int bad = 0;
    for (const auto& r : rows)
        if (r.status != verify::Status::pass) ++bad;
    report(5, bad == 0 && !rows.empty(),
           "alpha=1 reductions match the classical results (" +
               std::to_string(rows.size()) + " checks)",
           "");
}

// 6. Special functions: dual-path 2F1, gamma recurrence, beta symmetry.
void criterion_specfun() {
    bool ok = true;
    std::string detail;
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-13;
    cfg.rel_tol = 1e-12;
    int points = 0;
    for (double a : {0.5, 1.0, 2.0, 3.5})
        for (double b : {0.5, 1.0, 2.5})
            for (double dc : {0.5, 1.5, 3.0})
                for (double z : {0.0, 0.2, 0.5, 0.75}) {
                    specfun::Hyp2F1Params p{a, b, b + dc, z};
                    const double s = specfun::hyp2f1_series(p);
                    const double i = specfun::hyp2f1_integral(p, cfg);
                    ++points;
                    if (std::abs(s - i) > 1e-10 * std::max(1.0, std::abs(s))) {
                        ok = false;
                        detail = "2F1 series/integral split";
                    }
                }
    if (points < 100) {
        ok = false;
        detail = "fewer than 100 2F1 points";
    }
    for (double x = 0.1; x < 25.0; x += 0.3)
        if (std::abs(specfun::gamma_fn(x + 1.0) - x * specfun::gamma_fn(x)) >
            1e-12 * specfun::gamma_fn(x + 1.0)) {
            ok = false;
            detail = "gamma recurrence";
        }
    for (double x = 0.25; x < 4.0; x += 0.5)
        for (double y = 0.25; y < 4.0; y += 0.5)
            if (std::abs(specfun::beta_fn(x, y) - specfun::beta_fn(y, x)) >
                1e-12 * specfun::beta_fn(x, y)) {
                ok = false;
                detail = "beta symmetry";
            }
    report(6, ok,
           "2F1 dual-path agreement on " + std::to_string(points) +
               " points; gamma recurrence and beta symmetry at 1e-12",
           detail);
}

// 7. |a^alpha - b^alpha| <= (b-a)^alpha for alpha in (0,1], 0 <= a < b <= 10.
void criterion_power_inequality() {
    std::mt19937 rng(20260824u);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int violations = 0;
    for (int i = 0; i < 1000; ++i) {
        const double alpha = 1.0 - unit(rng) * (1.0 - 1e-12); // (0, 1]
        double a = 10.0 * unit(rng);
        double b = 10.0 * unit(rng);
        if (a > b) std::swap(a, b);
        if (a == b) b += 1e-6;
        const double lhs = std::abs(std::pow(a, alpha) - std::pow(b, alpha));
        const double rhs = std::pow(b - a, alpha);
        if (lhs > rhs * (1.0 + 1e-12)) ++violations;
    }
    report(7, violations == 0,
           "|a^alpha - b^alpha| <= (b-a)^alpha on 1000 sampled tuples (" +
               std::to_string(violations) + " violations)",
           "");
}

// 8. Byte-identical CSV across two CLI runs.
void criterion_determinism() {
#ifndef HHFRAC_CLI_PATH
#error "HHFRAC_CLI_PATH must point at the CLI binary"
#endif
    const std::string cli = HHFRAC_CLI_PATH;
    const std::string out1 = "acceptance_run1.csv";
    const std::string out2 = "acceptance_run2.csv";
    const std::string base =
        "\"" + cli + "\" verify --default-grid --out ";
    const int rc1 = std::system((base + out1 + " 2>/dev/null").c_str());
    const int rc2 = std::system((base + out2 + " 2>/dev/null").c_str());
    bool ok = rc1 == 0 && rc2 == 0;
    std::string detail;
    if (!ok) detail = "CLI exit codes " + std::to_string(rc1) + ", " +
                      std::to_string(rc2);
    if (ok) {
        std::ifstream f1(out1, std::ios::binary), f2(out2, std::ios::binary);
        std::stringstream s1, s2;
        s1 << f1.rdbuf();
        s2 << f2.rdbuf();
        ok = f1 && f2 && s1.str() == s2.str() && !s1.str().empty();
        if (!ok) detail = "outputs differ or are empty";
    }
    std::remove(out1.c_str());
    std::remove(out2.c_str());
    report(8, ok, "two default-grid CLI runs produce byte-identical CSV",
           detail);
}

} // namespace

int main() {
    try {
        criterion_chain();
        criterion_identity();
        criterion_constants();
        criterion_bounds();
        criterion_reductions();
        criterion_specfun();
        criterion_power_inequality();
        criterion_determinism();
    } catch (const std::exception& e) {
        std::printf("acceptance aborted: %s\n", e.what());
        return 1;
    }
    std::printf("%s\n", failures == 0 ? "all criteria pass"
                                      : "acceptance failed");
    return failures == 0 ? 0 : 1;
}
