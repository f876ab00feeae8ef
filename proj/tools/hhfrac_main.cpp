// hhfrac command-line front end.
//
// Exit codes: 0 all pass, 1 at least one inequality/identity failure,
// 2 usage error, 3 numerical error. A failure (1) takes precedence over a
// numerical error (3) when both occur in one run.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hhfrac/errors.hpp"
#include "hhfrac/fracint.hpp"
#include "hhfrac/harmonic.hpp"
#include "hhfrac/specfun.hpp"
#include "hhfrac/theorems.hpp"
#include "hhfrac/verify.hpp"

namespace {

using hhfrac::DomainError;
using hhfrac::NumericalError;
using hhfrac::QuadratureConfig;
using hhfrac::fracint::FractionalOrder;
using hhfrac::fracint::HarmonicInterval;
using hhfrac::theorems::ConstantName;
using hhfrac::verify::MarginReport;
using hhfrac::verify::Status;
using hhfrac::verify::SweepGrid;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

std::string fmt12(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

HarmonicInterval make_interval(double a, double b) {
    if (!(a < b)) throw DomainError("interval requires a < b");
    return {a, b};
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw DomainError("cannot open output file: " + out_path);
    f << text;
}

int status_exit(const std::vector<MarginReport>& reports) {
    bool any_fail = false, any_numerical = false;
    for (const auto& r : reports) {
        if (r.status == Status::fail) any_fail = true;
        if (r.status == Status::numerical_error) any_numerical = true;
    }
    if (any_fail) return kExitFail;
    if (any_numerical) return kExitNumerical;
    return kExitPass;
}

struct VerifyOptions {
    bool default_grid = false;
    std::optional<double> a, b, alpha, p, q;
    std::string functions;
    double tol = 1e-8;
    std::string out;
    std::string format = "csv";
    std::string config;
};

// Config file mirrors the flags; flags win over file. Recognized keys:
// intervals ([[a,b],...]), alphas, qs, ps, functions, tol, out, format.
void apply_config_file(const VerifyOptions& opt, SweepGrid& grid,
                       std::string& out, std::string& format, double& tol) {
    std::ifstream f(opt.config);
    if (!f) throw DomainError("cannot open config file: " + opt.config);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("config parse error: ") + e.what());
    }
    if (j.contains("intervals") && !opt.a && !opt.b) {
        grid.intervals.clear();
        for (const auto& pair : j["intervals"]) {
            grid.intervals.push_back(make_interval(pair.at(0).get<double>(),
                                                   pair.at(1).get<double>()));
        }
    }
    if (j.contains("alphas") && !opt.alpha)
        grid.alphas = j["alphas"].get<std::vector<double>>();
    if (j.contains("qs") && !opt.q)
        grid.qs = j["qs"].get<std::vector<double>>();
    if (j.contains("ps") && !opt.p) {
        grid.pqs.clear();
        for (double p : j["ps"].get<std::vector<double>>())
            grid.pqs.push_back(hhfrac::theorems::ExponentPair::from_p(p));
    }
    if (j.contains("functions") && opt.functions.empty())
        grid.functions = j["functions"].get<std::vector<std::string>>();
    if (j.contains("tol") && tol == 1e-8) tol = j["tol"].get<double>();
    if (j.contains("out") && out.empty()) out = j["out"].get<std::string>();
    if (j.contains("format") && format == "csv")
        format = j["format"].get<std::string>();
}

int run_verify(const VerifyOptions& opt) {
    SweepGrid grid = SweepGrid::default_grid();
    std::string out = opt.out;
    std::string format = opt.format;
    double tol = opt.tol;

    if (!opt.config.empty()) apply_config_file(opt, grid, out, format, tol);

    if (!opt.default_grid) {
        if (opt.a || opt.b) {
            if (!opt.a || !opt.b)
                throw DomainError("--a and --b must be given together");
            grid.intervals = {make_interval(*opt.a, *opt.b)};
        }
        if (opt.alpha) grid.alphas = {*opt.alpha};
        if (opt.q) grid.qs = {*opt.q};
        if (opt.p)
            grid.pqs = {hhfrac::theorems::ExponentPair::from_p(*opt.p)};
        if (!opt.functions.empty()) grid.functions = split_csv(opt.functions);
    }
    grid.tol = tol;
    grid.validate();

    auto result = hhfrac::verify::run_sweep(grid);
    if (opt.default_grid) {
        auto red = hhfrac::verify::reduction_suite(grid.quadrature);
        auto ora = hhfrac::verify::oracle_suite(grid.quadrature);
        result.reports.insert(result.reports.end(), red.begin(), red.end());
        result.reports.insert(result.reports.end(), ora.begin(), ora.end());
        hhfrac::verify::sort_reports(result.reports);
        result.summary = hhfrac::verify::summarize(result.reports);
    }

    const std::string text = format == "json"
                                 ? hhfrac::verify::to_json(result.reports)
                                 : hhfrac::verify::to_csv(result.reports);
    write_output(text, out);

    std::cerr << "verify: " << result.summary.pass << " pass, "
              << result.summary.fail << " fail, " << result.summary.skipped
              << " skipped, " << result.summary.numerical_error
              << " numerical-error\n";
    return status_exit(result.reports);
}

int run_identity(double a, double b, double alpha_v, const std::string& fn_id,
                 double tol) {
    const auto iv = make_interval(a, b);
    const FractionalOrder alpha(alpha_v);
    const auto& f = hhfrac::harmonic::find(fn_id);
    if (!f.has_prime())
        throw DomainError("identity requires a function with a derivative");
    QuadratureConfig cfg;
    const double middle =
        hhfrac::fracint::hh_middle_fractional(f.f, iv, alpha, cfg);
    const double direct = hhfrac::fracint::if_remainder(f.f, iv, alpha, cfg);
    const double kernel =
        hhfrac::fracint::if_remainder_kernel(f.f_prime, iv, alpha, cfg);
    const double diff = std::abs(direct - kernel);
    const double bound = std::max(tol, 1e-6 * std::abs(direct));

    std::cout << "middle            = " << fmt12(middle) << "\n"
              << "endpoint_average  = " << fmt12((f.f(a) + f.f(b)) / 2.0) << "\n"
              << "remainder_direct  = " << fmt12(direct) << "\n"
              << "remainder_kernel  = " << fmt12(kernel) << "\n"
              << "abs_difference    = " << fmt12(diff) << "\n";
    if (diff <= bound) {
        std::cout << "identity holds (tolerance " << fmt12(bound) << ")\n";
        return kExitPass;
    }
    std::cerr << "identity violated: difference " << fmt12(diff)
              << " exceeds tolerance " << fmt12(bound) << "\n";
    return kExitFail;
}

ConstantName parse_constant_name(const std::string& s) {
    using CN = ConstantName;
    for (CN c : {CN::lambda1, CN::lambda2, CN::lambda3, CN::mu1, CN::mu2,
                 CN::c1_powermean, CN::c2_powermean, CN::c3_powermean,
                 CN::c1_lemma15, CN::c2_lemma15, CN::c3_lemma15, CN::k1_exact,
                 CN::k2_exact, CN::k3_exact, CN::k4, CN::k5, CN::k6, CN::k7,
                 CN::k8, CN::k9, CN::k10, CN::k11}) {
        if (hhfrac::theorems::to_string(c) == s) return c;
    }
    throw DomainError("unknown constant name: " + s);
}

int run_constants(const std::string& name, double a, double b,
                  std::optional<double> alpha, std::optional<double> p,
                  std::optional<double> q) {
    const auto iv = make_interval(a, b);
    const ConstantName cn = parse_constant_name(name);
    QuadratureConfig cfg;
    const auto c = hhfrac::theorems::named_constant(
        cn, iv, alpha.value_or(std::nan("")), p.value_or(std::nan("")),
        q.value_or(std::nan("")), cfg);
    std::cout << hhfrac::theorems::to_string(cn) << ":\n"
              << "  closed_form = " << fmt12(c.printed_value) << "\n"
              << "  oracle      = " << fmt12(c.oracle_value) << "\n"
              << "  value       = " << fmt12(c.value) << "\n";
    if (c.discrepant)
        std::cout << "  flagged: " << c.note << "\n";
    else if (!c.note.empty())
        std::cout << "  note: " << c.note << "\n";
    return kExitPass;
}

int run_bounds(double a, double b, double alpha_v, const std::string& fn_id,
               std::optional<double> q_opt, std::optional<double> p_opt,
               double tol) {
    const auto iv = make_interval(a, b);
    const FractionalOrder alpha(alpha_v);
    const auto& f = hhfrac::harmonic::find(fn_id);
    if (!f.has_prime())
        throw DomainError("bounds require a function with a derivative");
    QuadratureConfig cfg;
    const double remainder =
        std::abs(hhfrac::fracint::if_remainder(f.f, iv, alpha, cfg));
    std::cout << "|remainder| = " << fmt12(remainder) << "\n";

    bool any_fail = false;
    auto row = [&](const std::string& label, double bound,
                   const std::string& notes) {
        const bool ok = bound - remainder >= -tol;
        any_fail = any_fail || !ok;
        std::cout << label << " = " << fmt12(bound) << "  margin "
                  << fmt12(bound - remainder) << "  "
                  << (ok ? "pass" : "FAIL");
        if (!notes.empty()) std::cout << "  [" << notes << "]";
        std::cout << "\n";
    };

    const double q = q_opt.value_or(2.0);
    if (f.abs_deriv_pow_convex && f.abs_deriv_pow_convex(q)) {
        auto b22 = hhfrac::theorems::bound_thm22(
            f, iv, alpha, hhfrac::theorems::PowerMeanExponent(q), cfg);
        row("powermean_bound(q=" + fmt12(q) + ")", b22.value, b22.notes);
        if (alpha.alpha <= 1.0) {
            auto b23 = hhfrac::theorems::bound_thm23(
                f, iv, alpha, hhfrac::theorems::PowerMeanExponent(q), cfg);
            row("split_powermean_bound(q=" + fmt12(q) + ")", b23.value,
                b23.notes);
        }
    } else {
        std::cout << "powermean bounds skipped: |f'|^" << fmt12(q)
                  << " not harmonically convex\n";
    }

    const double p = p_opt.value_or(2.0);
    const auto pq = hhfrac::theorems::ExponentPair::from_p(p);
    if (f.abs_deriv_pow_convex && f.abs_deriv_pow_convex(pq.q)) {
        auto b24 = hhfrac::theorems::bound_thm24(f, iv, alpha, pq, cfg);
        auto b25 = hhfrac::theorems::bound_thm25(f, iv, alpha, pq, cfg);
        auto b26 = hhfrac::theorems::bound_thm26(f, iv, alpha, pq, cfg);
        row("holder_bound(p=" + fmt12(p) + ")", b24.value, b24.notes);
        row("logmean_bound(p=" + fmt12(p) + ")", b25.value, b25.notes);
        row("weighted_holder_bound(p=" + fmt12(p) + ")", b26.value, b26.notes);
    } else {
        std::cout << "holder bounds skipped: |f'|^" << fmt12(pq.q)
                  << " not harmonically convex\n";
    }
    return any_fail ? kExitFail : kExitPass;
}

int run_convexity(double a, double b, const std::string& fn_id) {
    const auto iv = make_interval(a, b);
    const auto& f = hhfrac::harmonic::find(fn_id);
    const auto verdict = hhfrac::harmonic::is_harmonically_convex(f.f, iv);
    const bool recip = hhfrac::harmonic::reciprocal_convexity_check(f.f, iv);
    std::cout << "grid_check       = "
              << (verdict.convex ? "harmonically convex"
                                 : "not harmonically convex")
              << "\n";
    if (!verdict.convex) {
        std::cout << "  worst violation " << fmt12(verdict.worst_violation)
                  << " at x=" << fmt12(verdict.x) << " y=" << fmt12(verdict.y)
                  << " t=" << fmt12(verdict.t) << "\n";
    }
    std::cout << "reciprocal_check = "
              << (recip ? "convex on reciprocal interval"
                        : "not convex on reciprocal interval")
              << "\n";
    if (verdict.convex != recip) {
        std::cerr << "checks disagree\n";
        return kExitNumerical;
    }
    return verdict.convex ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical verifier for fractional Hermite-Hadamard "
                 "inequalities of harmonically convex functions"};
    app.require_subcommand(1);

    // verify
    VerifyOptions vopt;
    auto* verify = app.add_subcommand(
        "verify", "Run the theorem sweep and emit a margin report");
    verify->add_flag("--default-grid", vopt.default_grid,
                     "Full default grid plus reduction and oracle suites");
    verify->add_option("--a", vopt.a, "Interval left endpoint");
    verify->add_option("--b", vopt.b, "Interval right endpoint");
    verify->add_option("--alpha", vopt.alpha, "Fractional order");
    verify->add_option("--p", vopt.p, "Holder exponent p (q conjugate)");
    verify->add_option("--q", vopt.q, "Power-mean exponent q");
    verify->add_option("--functions", vopt.functions,
                       "Comma-separated catalog ids");
    verify->add_option("--tol", vopt.tol, "Margin tolerance");
    verify->add_option("--out", vopt.out, "Output path (default stdout)");
    verify->add_option("--format", vopt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    verify->add_option("--config", vopt.config,
                       "JSON config file (flags win over file)");

    // identity
    double ia = 1.0, ib = 2.0, ialpha = 1.0, itol = 1e-8;
    std::string ifn = "id_x";
    auto* identity = app.add_subcommand(
        "identity", "Middle term and both sides of the remainder identity");
    identity->add_option("--a", ia, "Interval left endpoint");
    identity->add_option("--b", ib, "Interval right endpoint");
    identity->add_option("--alpha", ialpha, "Fractional order");
    identity->add_option("--function", ifn, "Catalog id");
    identity->add_option("--tol", itol, "Absolute tolerance");

    // constants
    std::string cname;
    double ca = 1.0, cb = 2.0;
    std::optional<double> calpha, cp, cq;
    auto* constants = app.add_subcommand(
        "constants", "Closed form and quadrature oracle of a named constant");
    constants->add_option("--name", cname, "Constant name (e.g. mu1, k6)")
        ->required();
    constants->add_option("--a", ca, "Interval left endpoint");
    constants->add_option("--b", cb, "Interval right endpoint");
    constants->add_option("--alpha", calpha, "Fractional order");
    constants->add_option("--p", cp, "Holder exponent p");
    constants->add_option("--q", cq, "Power-mean exponent q");

    // bounds
    double ba = 1.0, bb = 2.0, balpha = 1.0, btol = 1e-8;
    std::string bfn = "id_x";
    std::optional<double> bq, bp;
    auto* bounds = app.add_subcommand(
        "bounds", "Every applicable upper bound against |remainder|");
    bounds->add_option("--a", ba, "Interval left endpoint");
    bounds->add_option("--b", bb, "Interval right endpoint");
    bounds->add_option("--alpha", balpha, "Fractional order");
    bounds->add_option("--function", bfn, "Catalog id");
    bounds->add_option("--q", bq, "Power-mean exponent q (default 2)");
    bounds->add_option("--p", bp, "Holder exponent p (default 2)");
    bounds->add_option("--tol", btol, "Margin tolerance");

    // convexity
    double xa = 1.0, xb = 2.0;
    std::string xfn = "id_x";
    auto* convexity = app.add_subcommand(
        "convexity", "Harmonic-convexity grid check plus reciprocal oracle");
    convexity->add_option("--a", xa, "Interval left endpoint");
    convexity->add_option("--b", xb, "Interval right endpoint");
    convexity->add_option("--function", xfn, "Catalog id");

    // specfun
    std::vector<double> sgamma, sbeta, shyp, slogmean;
    auto* specfun =
        app.add_subcommand("specfun", "Evaluate the special functions");
    specfun->add_option("--gamma", sgamma, "Gamma(x)")->expected(1);
    specfun->add_option("--beta", sbeta, "Beta(x, y)")->expected(2);
    specfun->add_option("--hyp2f1", shyp, "2F1(a, b; c; z)")->expected(4);
    specfun->add_option("--logmean", slogmean,
                        "Generalized logarithmic mean L_{2p-2}(a, b): a b p")
        ->expected(3);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) return run_verify(vopt);
        if (identity->parsed()) return run_identity(ia, ib, ialpha, ifn, itol);
        if (constants->parsed())
            return run_constants(cname, ca, cb, calpha, cp, cq);
        if (bounds->parsed())
            return run_bounds(ba, bb, balpha, bfn, bq, bp, btol);
        if (convexity->parsed()) return run_convexity(xa, xb, xfn);
        if (specfun->parsed()) {
            if (sgamma.empty() && sbeta.empty() && shyp.empty() &&
                slogmean.empty())
                throw DomainError(
                    "specfun needs one of --gamma --beta --hyp2f1 --logmean");
            if (!sgamma.empty())
                std::cout << "gamma(" << fmt12(sgamma[0])
                          << ") = " << fmt12(hhfrac::specfun::gamma_fn(sgamma[0]))
                          << "\n";
            if (!sbeta.empty())
                std::cout << "beta(" << fmt12(sbeta[0]) << ", "
                          << fmt12(sbeta[1]) << ") = "
                          << fmt12(hhfrac::specfun::beta_fn(sbeta[0], sbeta[1]))
                          << "\n";
            if (!shyp.empty())
                std::cout << "hyp2f1(" << fmt12(shyp[0]) << ", "
                          << fmt12(shyp[1]) << "; " << fmt12(shyp[2]) << "; "
                          << fmt12(shyp[3]) << ") = "
                          << fmt12(hhfrac::specfun::hyp2f1(shyp[0], shyp[1],
                                                           shyp[2], shyp[3]))
                          << "\n";
            if (!slogmean.empty())
                std::cout << "log_mean_power(" << fmt12(slogmean[0]) << ", "
                          << fmt12(slogmean[1]) << "; p=" << fmt12(slogmean[2])
                          << ") = "
                          << fmt12(hhfrac::specfun::log_mean_power(
                                 slogmean[0], slogmean[1], slogmean[2]))
                          << "\n";
            return kExitPass;
        }
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
