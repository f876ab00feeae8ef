#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hhfrac::verify {

enum class Status { pass, fail, skipped_hypothesis, numerical_error };

std::string to_string(Status s);

/// One verification record: a (theorem, parameters, function) tuple with
/// both sides, the margin, and a status. Absent parameters (e.g. alpha for
/// the classical theorems) stay unset and serialize as empty/null.
struct MarginReport {
    std::string theorem_id;
    std::string function_id;
    std::optional<double> a, b, alpha, p, q;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    Status status = Status::pass;
    std::string notes;
};

/// Stable report order: theorem_id, function_id, then numeric params.
void sort_reports(std::vector<MarginReport>& reports);

/// CSV with the fixed header
///   theorem_id,function_id,a,b,alpha,p,q,lhs,rhs,margin,status,notes
/// floats at 12 significant digits, rows in sorted order.
std::string to_csv(const std::vector<MarginReport>& reports);

/// JSON array of objects with the same field names; numeric fields carry
/// the same 12-significant-digit values as the CSV.
std::string to_json(const std::vector<MarginReport>& reports);

} // namespace hhfrac::verify
