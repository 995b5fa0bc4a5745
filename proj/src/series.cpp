#include "rectlab/series.hpp"

#include <algorithm>
#include <sstream>

namespace rectlab {

QSeries::QSeries(int order) {
    if (order < 0) throw std::invalid_argument("QSeries: negative order");
    c_.assign(static_cast<std::size_t>(order) + 1, mpq_class(0));
}

QSeries::QSeries(int order, std::vector<mpq_class> coeffs) : QSeries(order) {
    for (std::size_t k = 0; k < coeffs.size() && k < c_.size(); ++k) c_[k] = coeffs[k];
}

QSeries QSeries::constant(const mpq_class& c, int order) {
    QSeries s(order);
    s.c_[0] = c;
    return s;
}

QSeries QSeries::monomial(int k, const mpq_class& c, int order) {
    QSeries s(order);
    if (k <= order) s.c_[static_cast<std::size_t>(k)] = c;
    return s;
}

mpq_class QSeries::coefficient(int k) const {
    if (k < 0) return 0;
    if (k > order()) throw std::out_of_range("QSeries: coefficient above the known order");
    return c_[static_cast<std::size_t>(k)];
}

int QSeries::valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] != 0) return static_cast<int>(k);
    }
    return INT_MAX;
}

QSeries QSeries::truncate(int order) const {
    if (order > this->order()) throw std::invalid_argument("QSeries::truncate: order above the known order");
    QSeries s(order);
    std::copy_n(c_.begin(), order + 1, s.c_.begin());
    return s;
}

QSeries QSeries::shift_down(int k) const {
    if (k == 0) return *this;
    if (k > order()) throw std::invalid_argument("QSeries::shift_down: no coefficients left");
    for (int i = 0; i < k; ++i) {
        if (c_[static_cast<std::size_t>(i)] != 0) throw std::domain_error("QSeries: division by t^k with a nonzero low term");
    }
    QSeries s(order() - k);
    std::copy(c_.begin() + k, c_.end(), s.c_.begin());
    return s;
}

QSeries QSeries::operator-() const {
    QSeries s = *this;
    for (auto& c : s.c_) c = -c;
    return s;
}

QSeries& QSeries::operator+=(const QSeries& o) {
    c_.resize(static_cast<std::size_t>(std::min(order(), o.order())) + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
    c_.resize(static_cast<std::size_t>(std::min(order(), o.order())) + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

QSeries& QSeries::operator*=(const QSeries& o) {
    const int n = std::min(order(), o.order());
    std::vector<mpq_class> out(static_cast<std::size_t>(n) + 1, mpq_class(0));
    mpq_class prod;
    for (int i = 0; i <= n; ++i) {
        if (c_[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (o.c_[static_cast<std::size_t>(j)] == 0) continue;
            mpq_mul(prod.get_mpq_t(), c_[static_cast<std::size_t>(i)].get_mpq_t(),
                    o.c_[static_cast<std::size_t>(j)].get_mpq_t());
            out[static_cast<std::size_t>(i + j)] += prod;
        }
    }
    c_ = std::move(out);
    return *this;
}

QSeries QSeries::inverse() const {
    if (c_[0] == 0) throw std::domain_error("QSeries: inverse of a non-unit");
    const int n = order();
    QSeries s(n);
    s.c_[0] = 1 / c_[0];
    for (int k = 1; k <= n; ++k) {
        mpq_class acc = 0;
        for (int j = 1; j <= k; ++j) acc += c_[static_cast<std::size_t>(j)] * s.c_[static_cast<std::size_t>(k - j)];
        s.c_[static_cast<std::size_t>(k)] = -acc * s.c_[0];
    }
    return s;
}

QSeries& QSeries::operator/=(const QSeries& o) {
    const int v = o.valuation();
    if (v == INT_MAX) throw std::domain_error("QSeries: division by zero series");
    const int n = std::min(order(), o.order());
    *this = truncate(n).shift_down(v) * o.truncate(n).shift_down(v).inverse();
    return *this;
}

QSeries QSeries::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    QSeries result = constant(1, order());
    QSeries base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return result;
}

bool is_rational_square(const mpq_class& q) {
    return sgn(q) >= 0 && mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

mpq_class rational_sqrt(const mpq_class& q) {
    if (!is_rational_square(q)) throw std::domain_error("not the square of a rational");
    mpz_class num;
    mpz_class den;
    mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
    return mpq_class(num, den);
}

QSeries QSeries::sqrt() const {
    const int v = valuation();
    if (v == INT_MAX) return QSeries(order());
    if (v % 2 != 0) throw std::domain_error("QSeries::sqrt: odd valuation");
    const QSeries h = shift_down(v);
    const int n = h.order();
    QSeries s(n);
    s.c_[0] = rational_sqrt(h.c_[0]);
    const mpq_class twice = 2 * s.c_[0];
    for (int k = 1; k <= n; ++k) {
        mpq_class acc = h.c_[static_cast<std::size_t>(k)];
        for (int i = 1; i < k; ++i) acc -= s.c_[static_cast<std::size_t>(i)] * s.c_[static_cast<std::size_t>(k - i)];
        s.c_[static_cast<std::size_t>(k)] = acc / twice;
    }
    // Multiply back by t^(v/2); the order drops by v/2.
    QSeries out(order() - v / 2);
    for (int k = 0; k + v / 2 <= out.order(); ++k) out.c_[static_cast<std::size_t>(k + v / 2)] = s.c_[static_cast<std::size_t>(k)];
    return out;
}

std::string QSeries::str(int k) const {
    if (k < 0 || k > order()) k = order();
    std::ostringstream os;
    for (int i = 0; i <= k; ++i) {
        if (i) os << ',';
        os << c_[static_cast<std::size_t>(i)].get_str();
    }
    return os.str();
}

bool QSeries::agrees_with(const QSeries& o, int upto) const { return first_difference(*this, o, upto) < 0; }

QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
QSeries operator*(QSeries a, const QSeries& b) { return a *= b; }
QSeries operator/(QSeries a, const QSeries& b) { return a /= b; }

QSeries operator*(const mpq_class& c, QSeries a) {
    for (int k = 0; k <= a.order(); ++k) a.set(k, a[k] * c);
    return a;
}

int first_difference(const QSeries& a, const QSeries& b, int upto) {
    if (upto > a.order() || upto > b.order()) {
        throw std::invalid_argument("first_difference: series known to order " + std::to_string(a.order()) + " and " +
                                    std::to_string(b.order()) + ", comparison up to " + std::to_string(upto));
    }
    for (int k = 0; k <= upto; ++k) {
        if (a[k] != b[k]) return k;
    }
    return -1;
}

QSeries catalan(int order) {
    const int n = order + 1;
    const QSeries one = QSeries::constant(1, n);
    return ((one - (one - QSeries::monomial(1, 4, n)).sqrt()) / QSeries::monomial(1, 2, n)).truncate(order);
}

}  // namespace rectlab
