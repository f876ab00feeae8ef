#include "hhfrac/harmonic.hpp"

#include <cmath>
#include <string>

namespace hhfrac::harmonic {

ConvexityVerdict is_harmonically_convex(const ScalarFn& f,
                                        const HarmonicInterval& iv,
                                        int samples, double tol,
                                        int t_samples) {
    if (samples < 3) throw DomainError("is_harmonically_convex: samples >= 3");
    if (t_samples < 3) throw DomainError("is_harmonically_convex: t_samples >= 3");

    ConvexityVerdict v;
    const double a = iv.a, b = iv.b;
    for (int i = 0; i < samples; ++i) {
        const double x = a + (b - a) * i / (samples - 1);
        const double fx = f(x);
        for (int j = 0; j < samples; ++j) {
            const double y = a + (b - a) * j / (samples - 1);
            const double fy = f(y);
            for (int k = 0; k < t_samples; ++k) {
                const double t = static_cast<double>(k) / (t_samples - 1);
                const double m = x * y / (t * x + (1.0 - t) * y);
                const double rhs = t * fy + (1.0 - t) * fx;
                // normalized so tol stays meaningful for large |f|
                const double excess = (f(m) - rhs) / std::max(1.0, std::abs(rhs));
                if (excess > v.worst_violation) {
                    v.worst_violation = excess;
                    v.x = x;
                    v.y = y;
                    v.t = t;
                }
            }
        }
    }
    v.convex = v.worst_violation <= tol;
    return v;
}

bool reciprocal_convexity_check(const ScalarFn& f, const HarmonicInterval& iv,
                                int samples, double tol) {
    if (samples < 3) throw DomainError("reciprocal_convexity_check: samples >= 3");
    const double ulo = 1.0 / iv.b, uhi = 1.0 / iv.a;
    auto g = [&](double u) { return f(1.0 / u); };
    for (int i = 0; i < samples; ++i) {
        const double u = ulo + (uhi - ulo) * i / (samples - 1);
        for (int j = i; j < samples; ++j) {
            const double v = ulo + (uhi - ulo) * j / (samples - 1);
            const double avg = 0.5 * (g(u) + g(v));
            if (g(0.5 * (u + v)) > avg + tol * std::max(1.0, std::abs(avg)))
                return false;
        }
    }
    return true;
}

namespace {

void check_derivative(const TestFunction& fn) {
    // central differences vs declared f' at interior points of [0.5, 5]
    for (double x = 0.6; x < 5.0; x += 0.2) {
        const double h = 1e-6 * std::max(1.0, std::abs(x));
        const double fd = (fn.f(x + h) - fn.f(x - h)) / (2.0 * h);
        const double d = fn.f_prime(x);
        if (std::abs(fd - d) > 1e-6 * std::max(1.0, std::abs(d)))
            throw NumericalError("catalog: derivative mismatch for '" + fn.id +
                                 "' at x=" + std::to_string(x));
    }
}

void check_flags(const TestFunction& fn) {
    const HarmonicInterval ivs[] = {{1.0, 2.0}, {0.5, 4.0}};
    for (const auto& iv : ivs) {
        const auto verdict = is_harmonically_convex(fn.f, iv, 30, 1e-10, 11);
        const bool recip = reciprocal_convexity_check(fn.f, iv, 30, 1e-10);
        if (verdict.convex != fn.harmonically_convex || recip != fn.harmonically_convex)
            throw NumericalError("catalog: harmonic-convexity flag mismatch for '" +
                                 fn.id + "'");
        if (fn.has_prime()) {
            for (double q : {1.0, 1.5, 2.0, 3.0}) {
                auto pow_q = [&, q](double x) {
                    return std::pow(std::abs(fn.f_prime(x)), q);
                };
                const bool declared = fn.abs_deriv_pow_convex(q);
                const bool grid =
                    is_harmonically_convex(pow_q, iv, 30, 1e-10, 11).convex;
                const bool recip_q = reciprocal_convexity_check(pow_q, iv, 30, 1e-10);
                if (grid != declared || recip_q != declared)
                    throw NumericalError("catalog: |f'|^q flag mismatch for '" +
                                         fn.id + "' at q=" + std::to_string(q));
            }
        }
    }
}

std::vector<TestFunction> build_catalog() {
    auto always = [](double q) { return q >= 1.0; };
    std::vector<TestFunction> fns;
    fns.push_back({"id_x", [](double x) { return x; },
                   [](double) { return 1.0; }, true, always});
    fns.push_back({"sq", [](double x) { return x * x; },
                   [](double x) { return 2.0 * x; }, true, always});
    fns.push_back({"log", [](double x) { return std::log(x); },
                   [](double x) { return 1.0 / x; }, true, always});
    fns.push_back({"recip_affine", [](double x) { return 2.0 - 1.0 / x; },
                   [](double x) { return 1.0 / (x * x); }, true, always});
    fns.push_back({"exp", [](double x) { return std::exp(x); },
                   [](double x) { return std::exp(x); }, true, always});
    for (const auto& fn : fns) {
        if (fn.has_prime()) check_derivative(fn);
        check_flags(fn);
    }
    return fns;
}

} // namespace

const std::vector<TestFunction>& catalog() {
    static const std::vector<TestFunction> fns = build_catalog();
    return fns;
}

const TestFunction& find(std::string_view id) {
    for (const auto& fn : catalog())
        if (fn.id == id) return fn;
    throw DomainError("unknown catalog function: " + std::string(id));
}

} // namespace hhfrac::harmonic
