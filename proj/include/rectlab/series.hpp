#pragma once

#include <gmpxx.h>

#include <climits>
#include <stdexcept>
#include <string>
#include <vector>

namespace rectlab {

/// Truncated power series c_0 + c_1 t + ... + c_N t^N with exact rational
/// coefficients. Every operation tracks the order to which the result is exact.
class QSeries {
public:
    QSeries() : QSeries(0) {}
    explicit QSeries(int order);
    QSeries(int order, std::vector<mpq_class> coeffs);  // missing coefficients are zero

    static QSeries constant(const mpq_class& c, int order);
    static QSeries monomial(int k, const mpq_class& c, int order);  // c t^k
    static QSeries t(int order) { return monomial(1, 1, order); }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const mpq_class& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    mpq_class coefficient(int k) const;  // zero above the order is an error
    const std::vector<mpq_class>& coefficients() const { return c_; }
    void set(int k, const mpq_class& c) { c_.at(static_cast<std::size_t>(k)) = c; }

    /// Index of the first nonzero coefficient, INT_MAX for the zero series.
    int valuation() const;
    bool is_zero() const { return valuation() == INT_MAX; }

    QSeries truncate(int order) const;
    QSeries shift_down(int k) const;  // divide by t^k; low coefficients must vanish

    QSeries operator-() const;
    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    QSeries& operator*=(const QSeries& o);
    QSeries& operator/=(const QSeries& o);

    QSeries inverse() const;  // requires a nonzero constant term
    QSeries pow(int k) const;
    /// Branch with positive leading coefficient; needs an even valuation and a
    /// leading coefficient that is the square of a rational.
    QSeries sqrt() const;

    /// Coefficients c_0..c_k as a string "c0,c1,..." (k defaults to the order).
    std::string str(int k = -1) const;

    /// Equal on the common order.
    bool agrees_with(const QSeries& o, int upto) const;

private:
    std::vector<mpq_class> c_;
};

QSeries operator+(QSeries a, const QSeries& b);
QSeries operator-(QSeries a, const QSeries& b);
QSeries operator*(QSeries a, const QSeries& b);
QSeries operator/(QSeries a, const QSeries& b);
QSeries operator*(const mpq_class& c, QSeries a);
inline QSeries sqrt(const QSeries& f) { return f.sqrt(); }

/// First index k <= upto at which a and b differ, -1 when they agree.
int first_difference(const QSeries& a, const QSeries& b, int upto);

bool is_rational_square(const mpq_class& q);
mpq_class rational_sqrt(const mpq_class& q);  // throws unless is_rational_square

/// Catalan generating function C(t) = 1 + t + 2t^2 + 5t^3 + ... to order N.
QSeries catalan(int order);

}  // namespace rectlab
