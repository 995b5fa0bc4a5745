#include "rectlab/cases.hpp"

#include <algorithm>
#include <sstream>

#include "cases_data.hpp"

namespace rectlab {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Dual numbers over series: value and derivative with respect to F.
struct Dual {
    QSeries v;
    QSeries d;
};

Dual operator+(const Dual& a, const Dual& b) { return {a.v + b.v, a.d + b.d}; }
Dual operator-(const Dual& a, const Dual& b) { return {a.v - b.v, a.d - b.d}; }
Dual operator*(const Dual& a, const Dual& b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }
Dual operator/(const Dual& a, const Dual& b) { return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)}; }
[[maybe_unused]] Dual sqrt(const Dual&) { throw ExprError("algebraic_root: sqrt is not allowed in a polynomial"); }

}  // namespace

std::vector<CaseSpec> parse_cases(const std::string& text) {
    std::vector<CaseSpec> out;
    std::istringstream in(text);
    std::string raw;
    std::optional<CaseSpec> cur;
    int line_no = 0;
    const auto fail = [&](const std::string& what) {
        throw ExprError("cases line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.rfind("# printed:", 0) == 0 && cur) {
            cur->printed.push_back(trim(line.substr(10)));
            continue;
        }
        if (line.empty() || line[0] == '#') continue;
        const auto sp = line.find(' ');
        const std::string key = line.substr(0, sp);
        const std::string rest = sp == std::string::npos ? "" : trim(line.substr(sp + 1));
        if (key == "case") {
            if (cur) fail("nested case");
            cur = CaseSpec{};
            cur->id = std::stoi(rest);
        } else if (!cur) {
            fail("'" + key + "' outside a case block");
        } else if (key == "row") {
            cur->row = rest;
        } else if (key == "eq") {
            const auto eq = rest.find('=');
            if (eq == std::string::npos) fail("equation without '='");
            CaseEquation e;
            e.unknown = trim(rest.substr(0, eq));
            e.text = trim(rest.substr(eq + 1));
            e.rhs = Expr::parse(e.text);
            cur->equations.push_back(std::move(e));
        } else if (key == "closed") {
            cur->closed_text = rest;
            cur->closed = Expr::parse(rest);
        } else if (key == "poly") {
            cur->poly_text = rest;
            cur->poly = Expr::parse(rest);
        } else if (key == "poly_at") {
            cur->poly_at_text = rest;
            cur->poly_at = Expr::parse(rest);
        } else if (key == "end") {
            out.push_back(std::move(*cur));
            cur.reset();
        } else {
            fail("unknown keyword '" + key + "'");
        }
    }
    if (cur) throw ExprError("cases: unterminated case block");
    return out;
}

const std::string& bundled_cases_text() {
    static const std::string text = detail::cases_text;
    return text;
}

const std::vector<CaseSpec>& bundled_cases() {
    static const std::vector<CaseSpec> cases = parse_cases(bundled_cases_text());
    return cases;
}

const CaseSpec& find_case_spec(int id) {
    for (const auto& c : bundled_cases()) {
        if (c.id == id) return c;
    }
    throw std::invalid_argument("no case " + std::to_string(id));
}

QSeries expand_in_t(const Expr& e, int order) {
    for (int margin = 2; margin <= 64; margin *= 2) {
        const int work = order + margin;
        const QSeries r = evaluate<QSeries>(
            e,
            [&](const std::string& name) -> QSeries {
                if (name != "t") throw ExprError("unexpected variable '" + name + "'");
                return QSeries::t(work);
            },
            [&](const mpq_class& q) { return QSeries::constant(q, work); });
        if (r.order() >= order) return r.truncate(order);
    }
    throw ExprError("expand_in_t: precision loss too large");
}

SystemSolution solve_system(const CaseSpec& spec, int order) {
    if (order < 1) throw std::invalid_argument("solve_system: order must be positive");
    SystemSolution sol;
    for (const auto& e : spec.equations) sol.values.emplace(e.unknown, QSeries(order));
    const auto variable = [&](const std::string& name) -> QSeries {
        if (name == "t") return QSeries::t(order);
        const auto it = sol.values.find(name);
        if (it == sol.values.end()) throw ExprError("unknown variable '" + name + "'");
        return it->second;
    };
    const auto constant = [&](const mpq_class& q) { return QSeries::constant(q, order); };
    int last = -1;
    for (int sweep = 1; sweep <= order + 2; ++sweep) {
        int change = INT_MAX;
        for (const auto& e : spec.equations) {
            QSeries next = evaluate<QSeries>(*e.rhs, variable, constant);
            if (next.order() < order) throw ExprError("solve_system: precision loss in '" + e.text + "'");
            next = next.truncate(order);
            change = std::min(change, (next - sol.values.at(e.unknown)).valuation());
            sol.values.at(e.unknown) = std::move(next);
        }
        sol.sweeps = sweep;
        if (change == INT_MAX) return sol;
        if (change <= last) {
            throw NonContraction("case " + std::to_string(spec.id) + ": sweep " + std::to_string(sweep) +
                                 " changed the solution at t^" + std::to_string(change) +
                                 ", no higher than the previous sweep");
        }
        sol.change_valuations.push_back(change);
        last = change;
    }
    throw NonContraction("case " + std::to_string(spec.id) + ": no fixed point after " +
                         std::to_string(order + 2) + " sweeps");
}

QSeries evaluate_in_t_and_F(const Expr& e, const QSeries& F) { return polynomial_residual(e, F); }

QSeries polynomial_residual(const Expr& poly, const QSeries& F) {
    const int n = F.order();
    return evaluate<QSeries>(
        poly,
        [&](const std::string& name) -> QSeries {
            if (name == "t") return QSeries::t(n);
            if (name == "F") return F;
            throw ExprError("unexpected variable '" + name + "'");
        },
        [&](const mpq_class& q) { return QSeries::constant(q, n); });
}

QSeries algebraic_root(const Expr& poly, int order) {
    QSeries F(order);
    const auto eval = [&](const QSeries& f) {
        return evaluate<Dual>(
            poly,
            [&](const std::string& name) -> Dual {
                if (name == "t") return {QSeries::t(order), QSeries(order)};
                if (name == "F") return {f, QSeries::constant(1, order)};
                throw ExprError("unexpected variable '" + name + "'");
            },
            [&](const mpq_class& q) { return Dual{QSeries::constant(q, order), QSeries(order)}; });
    };
    const Dual at0 = eval(F);
    if (at0.v[0] != 0) throw std::domain_error("algebraic_root: P(0,0) != 0, no root with zero constant term");
    if (at0.d[0] == 0) throw std::domain_error("algebraic_root: dP/dF vanishes at (0,0), branch is ambiguous");
    // Newton doubles the number of correct coefficients each step.
    for (int correct = 1; correct <= 2 * (order + 1); correct *= 2) {
        const Dual p = eval(F);
        F = F - p.v / p.d;
    }
    if (!eval(F).v.is_zero()) throw std::domain_error("algebraic_root: iteration did not converge");
    return F;
}

CaseCheck verify_theorem1(const CaseSpec& spec, int order) {
    CaseCheck res;
    res.system = solve_system(spec, order).F();
    if (spec.closed) {
        res.method = "closed form";
        res.reference = expand_in_t(*spec.closed, order);
        res.first_mismatch = first_difference(res.system, res.reference, order);
    } else if (spec.poly) {
        res.method = "polynomial";
        const QSeries arg = spec.poly_at ? evaluate_in_t_and_F(*spec.poly_at, res.system) : res.system;
        res.reference = polynomial_residual(*spec.poly, arg);
        const int v = res.reference.valuation();
        res.first_mismatch = v == INT_MAX ? -1 : v;
    } else {
        throw std::invalid_argument("case " + std::to_string(spec.id) + " has neither closed form nor polynomial");
    }
    res.ok = res.first_mismatch < 0;
    return res;
}

}  // namespace rectlab
