#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rectlab/series.hpp"

namespace rectlab {

/// Exponents of (t, x1, x2, x3, x4).
using Mono = std::array<std::uint8_t, 5>;

/// Polynomial in x1..x4 with power-series coefficients in t, truncated above t^order.
class XPoly {
public:
    explicit XPoly(int order = 0) : order_(order) {}

    static XPoly monomial(int t, int a, int b, int c, int d, const mpq_class& coeff, int order);
    static XPoly constant(const mpq_class& c, int order) { return monomial(0, 0, 0, 0, 0, c, order); }

    int order() const { return order_; }
    const std::map<Mono, mpq_class>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    /// Smallest t exponent, INT_MAX when zero.
    int t_valuation() const;
    void add_term(const Mono& m, const mpq_class& c);

    XPoly operator-() const;
    XPoly& operator+=(const XPoly& o);
    XPoly& operator-=(const XPoly& o);
    XPoly operator*(const XPoly& o) const;
    XPoly scaled(const mpq_class& c) const;

    /// x_i -> 1 (i = 1..4).
    XPoly at_one(int i) const;
    /// Coefficient of x_i^k as a polynomial without x_i.
    XPoly coeff_x(int i, int k) const;
    /// (f - f|_{x_i=1}) / (x_i - 1).
    XPoly divided_difference(int i) const;
    /// Coefficient of t^k as a polynomial in x only.
    XPoly coeff_t(int k) const;
    /// Multiply by t^k, dropping terms above the order.
    XPoly shift_t(int k) const;
    XPoly truncate(int order) const;
    /// x_i -> x_{perm[i-1]}.
    XPoly permute(const std::array<int, 4>& perm) const;
    /// All x_i -> 1.
    QSeries specialize_ones() const;

    bool operator==(const XPoly& o) const { return order_ == o.order_ && terms_ == o.terms_; }
    std::string str(std::size_t max_terms = 40) const;

private:
    int order_;
    std::map<Mono, mpq_class> terms_;
};

inline XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
inline XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }

/// Exact division of polynomials in x1..x4 (t-free numerator and divisor).
/// Throws std::domain_error when the division leaves a remainder.
XPoly divide_exact(const XPoly& num, const XPoly& den);

/// Elementary symmetric polynomial e_m(x1..x4).
XPoly elementary(int m, int order);

struct FuncEqSolution {
    XPoly F;
    int iterations = 0;
    std::vector<int> change_valuations;
};

/// Fixed point of the simple-whirl functional equation by iteration from 0.
FuncEqSolution solve_funceq(int order);

/// Right-hand side of the functional equation applied to F.
XPoly funceq_operator(const XPoly& F);

/// Closed form t^5 G with alpha G^2 - beta G + e4^2 = 0 and G(0) = x1x2x3x4,
/// expanded coefficient by coefficient (Hensel lifting).
XPoly closed_form_F(int order);
/// alpha G^2 - beta G + e4^2 for G = F / t^5.
XPoly closed_form_residual(const XPoly& F);

/// Sum over generating-tree nodes of t^(5+depth) x1^s1 x2^s2 x3^s3 x4^s4.
XPoly tree_census(int order);

struct ClosedFormCheck {
    bool funceq_matches = false;     // fixed point vs closed form
    bool residual_zero = false;      // fixed point satisfies the quadratic
    bool specialization_ok = false;  // x = 1 gives t^5 C^4
    bool cyclic_invariant = false;   // x1 -> x2 -> x3 -> x4 -> x1
    bool transposition_invariant = false;  // x1 <-> x2, reported only
};

ClosedFormCheck verify_closedform_F(int order);

struct WhirlPipeline {
    QSeries P, W, Z, V;
    QSeries target;           // t C^2 (1 + t^2 C^4)
    QSeries radical;          // (1-2t)(1-4t+2t^2 - (1-2t) sqrt(1-4t)) / (2t^3)
    bool identity_ok = false;  // V == target
    bool radical_ok = false;   // radical == target
    bool printed_radical_is_series = false;  // sign as printed (+) gives a power series
};

WhirlPipeline whirl_pipeline(int order);

/// (n+4) v_n - 6(n+2) v_{n-1} + 4(2n-1) v_{n-2}.
mpz_class recurrence_residual(const std::vector<mpz_class>& v, int n);
/// Shifts s with v_n = [t^(n+s)] V satisfying the recurrence for 2 <= n <= last.
std::vector<int> calibrate_recurrence_offset(const QSeries& V, int last);
/// v_0 .. v_K from the recurrence with v_0 = 1, v_1 = 2.
std::vector<mpz_class> vortex_recurrence(int K);

struct AsymptoticRatio {
    mpq_class lower;  // rigorous bounds on v_n sqrt(pi) n^(3/2) / 4^(n+2)
    mpq_class upper;
    double estimate = 0;
};

AsymptoticRatio asymptotic_ratio(int n);

}  // namespace rectlab
