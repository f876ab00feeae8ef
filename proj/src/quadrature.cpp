#include "hhfrac/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

namespace hhfrac {

void QuadratureConfig::validate() const {
    if (!(abs_tol > 0.0 && abs_tol < 1.0))
        throw DomainError("QuadratureConfig: abs_tol must be in (0,1)");
    if (!(rel_tol > 0.0 && rel_tol < 1.0))
        throw DomainError("QuadratureConfig: rel_tol must be in (0,1)");
    if (max_refinements < 1)
        throw DomainError("QuadratureConfig: max_refinements must be >= 1");
}

namespace {

// Gauss-Kronrod 7-15 nodes on [0,1]; odd indices form the 7-point Gauss rule.
constexpr double kNodes[15] = {
    0.0042723144395936940576063989283284,
    0.025446043828620756865888097308925,
    0.067567788320115451661251881887438,
    0.12923440720030276995800022632466,
    0.20695638226615442611944217787823,
    0.29707742431130140792205907018797,
    0.3961075224960507457083735971537,
    0.5,
    0.6038924775039492542916264028463,
    0.7029225756886985365667896985542,
    0.79304361773384557388055782212177,
    0.87076559279969723004199977367534,
    0.93243221167988454833874811811256,
    0.97455395617137918762296067143325,
    0.99572768556040625043124236981384};

constexpr double kKronrodW[15] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
    0.204432940075298892414161999234649, 0.190350578064785409913256402421014,
    0.169004726639267902826583426598550, 0.140653259715525918745189590510238,
    0.104790010322250183839876322541518, 0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};

constexpr double kGaussW[15] = {
    0.0, 0.129484966168869693270611432679082,
    0.0, 0.279705391489276667901467771423780,
    0.0, 0.381830050505118944950369775488975,
    0.0, 0.417959183673469387755102040816327,
    0.0, 0.381830050505118944950369775488975,
    0.0, 0.279705391489276667901467771423780,
    0.0, 0.129484966168869693270611432679082,
    0.0};

struct Panel {
    double lo, hi;
    double value; // Kronrod estimate
    double err;   // |Kronrod - Gauss|
    bool operator<(const Panel& o) const { return err < o.err; }
};

Panel evaluate(const ScalarFn& f, double lo, double hi) {
    const double h = hi - lo;
    double k = 0.0, g = 0.0;
    for (int i = 0; i < 15; ++i) {
        const double y = f(lo + h * kNodes[i]);
        if (!std::isfinite(y))
            throw NumericalError("integrate: non-finite integrand value at x=" +
                                 std::to_string(lo + h * kNodes[i]));
        k += kKronrodW[i] * y;
        g += kGaussW[i] * y;
    }
    // weights are the standard [-1,1] ones: scale by h/2, not h
    return {lo, hi, 0.5 * h * k, std::abs(0.5 * h * (k - g))};
}

} // namespace

double integrate(const ScalarFn& f, std::initializer_list<double> points,
                 const QuadratureConfig& cfg) {
    cfg.validate();
    std::vector<double> pts(points);
    if (pts.size() < 2 || !std::is_sorted(pts.begin(), pts.end()))
        throw DomainError("integrate: breakpoints must be increasing");

    std::priority_queue<Panel> panels;
    double total = 0.0, toterr = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (pts[i] == pts[i + 1]) continue;
        Panel p = evaluate(f, pts[i], pts[i + 1]);
        total += p.value;
        toterr += p.err;
        panels.push(p);
    }

    auto target = [&] { return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)); };

    int refinements = 0;
    while (toterr > target() && !panels.empty()) {
        if (refinements++ >= cfg.max_refinements)
            throw NumericalError("integrate: refinement budget exhausted (err=" +
                                 std::to_string(toterr) + ")");
        Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi)
            throw NumericalError("integrate: panel width underflow");
        Panel l = evaluate(f, worst.lo, mid);
        Panel r = evaluate(f, mid, worst.hi);
        total += l.value + r.value - worst.value;
        toterr += l.err + r.err - worst.err;
        panels.push(l);
        panels.push(r);
    }
    return total;
}

double integrate(const ScalarFn& f, double lo, double hi,
                 const QuadratureConfig& cfg) {
    return integrate(f, {lo, hi}, cfg);
}

} // namespace hhfrac
