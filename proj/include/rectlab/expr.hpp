#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rectlab {

/// Arithmetic expression over rationals and named variables.
/// Grammar: sums and products with + - * /, unary minus, integer powers
/// `x^k` (k may be negative), `sqrt(...)`, parentheses.
struct Expr {
    enum class Op { number, variable, add, sub, mul, div, neg, pow, sqrt };
    Op op = Op::number;
    mpq_class value;      // number
    std::string name;     // variable
    int exponent = 0;     // pow
    std::vector<std::shared_ptr<const Expr>> args;

    static std::shared_ptr<const Expr> parse(std::string_view text);
    std::string str() const;
    void collect_variables(std::vector<std::string>& out) const;
};

using ExprPtr = std::shared_ptr<const Expr>;

class ExprError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evaluates `e` in any ring-like type with + - * / and a free sqrt().
template <class T>
T evaluate(const Expr& e, const std::function<T(const std::string&)>& variable,
           const std::function<T(const mpq_class&)>& constant) {
    switch (e.op) {
        case Expr::Op::number:
            return constant(e.value);
        case Expr::Op::variable:
            return variable(e.name);
        case Expr::Op::add:
            return evaluate<T>(*e.args[0], variable, constant) + evaluate<T>(*e.args[1], variable, constant);
        case Expr::Op::sub:
            return evaluate<T>(*e.args[0], variable, constant) - evaluate<T>(*e.args[1], variable, constant);
        case Expr::Op::mul:
            return evaluate<T>(*e.args[0], variable, constant) * evaluate<T>(*e.args[1], variable, constant);
        case Expr::Op::div:
            return evaluate<T>(*e.args[0], variable, constant) / evaluate<T>(*e.args[1], variable, constant);
        case Expr::Op::neg:
            return constant(0) - evaluate<T>(*e.args[0], variable, constant);
        case Expr::Op::pow: {
            const T base = evaluate<T>(*e.args[0], variable, constant);
            T result = constant(1);
            for (int k = 0; k < std::abs(e.exponent); ++k) result = result * base;
            return e.exponent < 0 ? constant(1) / result : result;
        }
        case Expr::Op::sqrt:
            return sqrt(evaluate<T>(*e.args[0], variable, constant));
    }
    throw ExprError("evaluate: unknown node");
}

}  // namespace rectlab
