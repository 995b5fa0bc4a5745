#include "rectlab/expr.hpp"

#include <algorithm>
#include <cctype>

namespace rectlab {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    ExprPtr parse_all() {
        ExprPtr e = sum();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ExprError("expression parse error at column " + std::to_string(pos_ + 1) + ": " + what + " in '" +
                        std::string(s_) + "'");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    static ExprPtr node(Expr::Op op, std::vector<ExprPtr> args) {
        auto e = std::make_shared<Expr>();
        e->op = op;
        e->args = std::move(args);
        return e;
    }

    ExprPtr sum() {
        ExprPtr lhs = product();
        for (;;) {
            if (eat('+')) {
                lhs = node(Expr::Op::add, {lhs, product()});
            } else if (eat('-')) {
                lhs = node(Expr::Op::sub, {lhs, product()});
            } else {
                return lhs;
            }
        }
    }

    ExprPtr product() {
        ExprPtr lhs = unary();
        for (;;) {
            if (eat('*')) {
                lhs = node(Expr::Op::mul, {lhs, unary()});
            } else if (eat('/')) {
                lhs = node(Expr::Op::div, {lhs, unary()});
            } else {
                return lhs;
            }
        }
    }

    ExprPtr unary() {
        if (eat('-')) return node(Expr::Op::neg, {unary()});
        return power();
    }

    ExprPtr power() {
        ExprPtr base = primary();
        if (!eat('^')) return base;
        skip();
        bool negative = false;
        if (eat('-')) negative = true;
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("integer exponent expected");
        auto e = std::make_shared<Expr>();
        e->op = Expr::Op::pow;
        e->exponent = std::stoi(std::string(s_.substr(start, pos_ - start))) * (negative ? -1 : 1);
        e->args = {base};
        return e;
    }

    ExprPtr primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = sum();
            if (!eat(')')) fail("')' expected");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            auto e = std::make_shared<Expr>();
            e->op = Expr::Op::number;
            e->value = mpq_class(std::string(s_.substr(start, pos_ - start)));
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            const std::string name(s_.substr(start, pos_ - start));
            if (name == "sqrt") {
                if (!eat('(')) fail("'(' expected after sqrt");
                ExprPtr arg = sum();
                if (!eat(')')) fail("')' expected");
                return node(Expr::Op::sqrt, {arg});
            }
            auto e = std::make_shared<Expr>();
            e->op = Expr::Op::variable;
            e->name = name;
            return e;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

}  // namespace

ExprPtr Expr::parse(std::string_view text) { return Parser(text).parse_all(); }

std::string Expr::str() const {
    switch (op) {
        case Op::number:
            return value.get_str();
        case Op::variable:
            return name;
        case Op::add:
            return "(" + args[0]->str() + " + " + args[1]->str() + ")";
        case Op::sub:
            return "(" + args[0]->str() + " - " + args[1]->str() + ")";
        case Op::mul:
            return "(" + args[0]->str() + "*" + args[1]->str() + ")";
        case Op::div:
            return "(" + args[0]->str() + "/" + args[1]->str() + ")";
        case Op::neg:
            return "-" + args[0]->str();
        case Op::pow:
            return args[0]->str() + "^" + std::to_string(exponent);
        case Op::sqrt:
            return "sqrt(" + args[0]->str() + ")";
    }
    return "?";
}

void Expr::collect_variables(std::vector<std::string>& out) const {
    if (op == Op::variable && std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    for (const auto& a : args) a->collect_variables(out);
}

}  // namespace rectlab
