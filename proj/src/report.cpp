#include "hhfrac/report.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <tuple>

#include <json.hpp>

namespace hhfrac::verify {

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped_hypothesis: return "skipped-hypothesis";
        case Status::numerical_error: return "numerical-error";
    }
    return "?";
}

namespace {

std::string fmt12(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string fmt_opt(const std::optional<double>& x) {
    return x ? fmt12(*x) : std::string();
}

// CSV fields are free of commas/quotes by construction except notes.
std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

auto sort_key(const MarginReport& r) {
    auto opt = [](const std::optional<double>& v) {
        return std::make_pair(v.has_value(), v.value_or(0.0));
    };
    return std::make_tuple(r.theorem_id, r.function_id, opt(r.a), opt(r.b),
                           opt(r.alpha), opt(r.p), opt(r.q));
}

} // namespace

void sort_reports(std::vector<MarginReport>& reports) {
    std::stable_sort(reports.begin(), reports.end(),
                     [](const MarginReport& x, const MarginReport& y) {
                         return sort_key(x) < sort_key(y);
                     });
}

std::string to_csv(const std::vector<MarginReport>& reports) {
    std::string out =
        "theorem_id,function_id,a,b,alpha,p,q,lhs,rhs,margin,status,notes\n";
    for (const auto& r : reports) {
        out += r.theorem_id + ',' + r.function_id + ',' + fmt_opt(r.a) + ',' +
               fmt_opt(r.b) + ',' + fmt_opt(r.alpha) + ',' + fmt_opt(r.p) +
               ',' + fmt_opt(r.q) + ',' + fmt12(r.lhs) + ',' + fmt12(r.rhs) +
               ',' + fmt12(r.margin) + ',' + to_string(r.status) + ',' +
               csv_escape(r.notes) + '\n';
    }
    return out;
}

std::string to_json(const std::vector<MarginReport>& reports) {
    using nlohmann::json;
    auto num = [](double x) { return std::strtod(fmt12(x).c_str(), nullptr); };
    auto opt = [&](const std::optional<double>& x) {
        return x ? json(std::strtod(fmt12(*x).c_str(), nullptr)) : json(nullptr);
    };
    json arr = json::array();
    for (const auto& r : reports) {
        arr.push_back({{"theorem_id", r.theorem_id},
                       {"function_id", r.function_id},
                       {"a", opt(r.a)},
                       {"b", opt(r.b)},
                       {"alpha", opt(r.alpha)},
                       {"p", opt(r.p)},
                       {"q", opt(r.q)},
                       {"lhs", num(r.lhs)},
                       {"rhs", num(r.rhs)},
                       {"margin", num(r.margin)},
                       {"status", to_string(r.status)},
                       {"notes", r.notes}});
    }
    return arr.dump(2) + "\n";
}

} // namespace hhfrac::verify
