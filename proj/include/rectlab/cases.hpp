#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rectlab/expr.hpp"
#include "rectlab/series.hpp"

namespace rectlab {

struct CaseEquation {
    std::string unknown;
    std::string text;  // right-hand side as written
    ExprPtr rhs;
};

/// One guillotine case: its system, and either a closed form for F or a
/// polynomial P(t, F) with P(t, F(t)) = 0.
struct CaseSpec {
    int id = 0;
    std::string row;
    std::vector<CaseEquation> equations;
    std::string closed_text;
    ExprPtr closed;
    std::string poly_text;
    ExprPtr poly;
    std::string poly_at_text = "F";  // series in t and F at which poly vanishes
    ExprPtr poly_at;
    std::vector<std::string> printed;  // original text of corrected lines
};

/// Parses the block format of data/cases.txt.
std::vector<CaseSpec> parse_cases(const std::string& text);
/// The case file compiled into the library.
const std::vector<CaseSpec>& bundled_cases();
const std::string& bundled_cases_text();
const CaseSpec& find_case_spec(int id);

class NonContraction : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SystemSolution {
    std::map<std::string, QSeries> values;  // every unknown, F included
    int sweeps = 0;
    std::vector<int> change_valuations;     // per sweep, strictly increasing
    const QSeries& F() const { return values.at("F"); }
};

/// Gauss-Seidel substitution from zero until the change vanishes to order N.
/// Throws NonContraction when a sweep fails to raise the valuation of the change.
SystemSolution solve_system(const CaseSpec& spec, int order);

/// Evaluates an expression in t alone to order N, widening the working order
/// when divisions by powers of t lose precision.
QSeries expand_in_t(const Expr& e, int order);

/// P(t, F) for a given series F.
QSeries polynomial_residual(const Expr& poly, const QSeries& F);
/// Value of an expression in t and F for a given series F.
QSeries evaluate_in_t_and_F(const Expr& e, const QSeries& F);

/// Power-series root of P(t, F) = 0 with zero constant term, by Newton
/// iteration. Throws std::domain_error when dP/dF vanishes at (0, 0).
QSeries algebraic_root(const Expr& poly, int order);

struct CaseCheck {
    bool ok = false;
    std::string method;        // "closed form" or "polynomial"
    int first_mismatch = -1;   // coefficient index, -1 when none
    QSeries system;            // F from the system
    QSeries reference;         // closed-form expansion or residual
};

CaseCheck verify_theorem1(const CaseSpec& spec, int order);

}  // namespace rectlab
