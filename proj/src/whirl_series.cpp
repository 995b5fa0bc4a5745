#include "rectlab/whirl_series.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <sstream>

#include "rectlab/generators.hpp"

namespace rectlab {

XPoly XPoly::monomial(int t, int a, int b, int c, int d, const mpq_class& coeff, int order) {
    XPoly p(order);
    p.add_term(Mono{static_cast<std::uint8_t>(t), static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                    static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)},
               coeff);
    return p;
}

void XPoly::add_term(const Mono& m, const mpq_class& c) {
    if (m[0] > order_ || c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int XPoly::t_valuation() const {
    int v = INT_MAX;
    for (const auto& [m, c] : terms_) v = std::min(v, static_cast<int>(m[0]));
    return v;
}

XPoly XPoly::operator-() const { return scaled(-1); }

XPoly& XPoly::operator+=(const XPoly& o) {
    order_ = std::min(order_, o.order_);
    for (auto it = terms_.begin(); it != terms_.end();) it = it->first[0] > order_ ? terms_.erase(it) : std::next(it);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) { return *this += -o; }

XPoly XPoly::operator*(const XPoly& o) const {
    XPoly out(std::min(order_, o.order_));
    mpq_class prod;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            if (m1[0] + m2[0] > out.order_) continue;
            Mono m;
            for (std::size_t i = 0; i < 5; ++i) m[i] = static_cast<std::uint8_t>(m1[i] + m2[i]);
            mpq_mul(prod.get_mpq_t(), c1.get_mpq_t(), c2.get_mpq_t());
            out.add_term(m, prod);
        }
    }
    return out;
}

XPoly XPoly::scaled(const mpq_class& c) const {
    XPoly out(order_);
    if (c == 0) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
    return out;
}

XPoly XPoly::at_one(int i) const {
    XPoly out(order_);
    for (const auto& [key, c] : terms_) {
        Mono m = key;
        m[static_cast<std::size_t>(i)] = 0;
        out.add_term(m, c);
    }
    return out;
}

XPoly XPoly::coeff_x(int i, int k) const {
    XPoly out(order_);
    for (const auto& [key, c] : terms_) {
        Mono m = key;
        if (m[static_cast<std::size_t>(i)] != k) continue;
        m[static_cast<std::size_t>(i)] = 0;
        out.add_term(m, c);
    }
    return out;
}

XPoly XPoly::divided_difference(int i) const {
    // x^b -> 1 + x + ... + x^(b-1)
    XPoly out(order_);
    for (const auto& [m, c] : terms_) {
        const int b = m[static_cast<std::size_t>(i)];
        Mono n = m;
        for (int j = 0; j < b; ++j) {
            n[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(j);
            out.add_term(n, c);
        }
    }
    return out;
}

XPoly XPoly::coeff_t(int k) const {
    XPoly out(order_);
    for (const auto& [key, c] : terms_) {
        Mono m = key;
        if (m[0] != k) continue;
        m[0] = 0;
        out.add_term(m, c);
    }
    return out;
}

XPoly XPoly::shift_t(int k) const {
    XPoly out(order_);
    for (const auto& [key, c] : terms_) {
        Mono m = key;
        if (m[0] + k < 0) throw std::domain_error("XPoly::shift_t: negative t exponent");
        m[0] = static_cast<std::uint8_t>(m[0] + k);
        out.add_term(m, c);
    }
    return out;
}

XPoly XPoly::truncate(int order) const {
    XPoly out(order);
    for (const auto& [m, c] : terms_) out.add_term(m, c);
    return out;
}

XPoly XPoly::permute(const std::array<int, 4>& perm) const {
    XPoly out(order_);
    for (const auto& [m, c] : terms_) {
        Mono n = m;
        for (std::size_t i = 1; i <= 4; ++i) n[static_cast<std::size_t>(perm[i - 1])] = m[i];
        out.add_term(n, c);
    }
    return out;
}

QSeries XPoly::specialize_ones() const {
    QSeries s(order_);
    for (const auto& [m, c] : terms_) s.set(m[0], s[m[0]] + c);
    return s;
}

std::string XPoly::str(std::size_t max_terms) const {
    std::ostringstream os;
    std::size_t n = 0;
    for (const auto& [m, c] : terms_) {
        if (n++ == max_terms) {
            os << " + ...";
            break;
        }
        if (n > 1) os << " + ";
        os << c.get_str();
        static const char* names[] = {"t", "x1", "x2", "x3", "x4"};
        for (std::size_t i = 0; i < 5; ++i) {
            if (m[i] == 1) os << '*' << names[i];
            if (m[i] > 1) os << '*' << names[i] << '^' << static_cast<int>(m[i]);
        }
    }
    if (n == 0) os << '0';
    os << " + O(t^" << order_ + 1 << ')';
    return os.str();
}

XPoly divide_exact(const XPoly& num, const XPoly& den) {
    if (den.is_zero()) throw std::domain_error("divide_exact: zero divisor");
    const int order = std::min(num.order(), den.order());
    const auto& [lead_m, lead_c] = *den.terms().rbegin();
    XPoly rem = num.truncate(order);
    XPoly quot(order);
    while (!rem.is_zero()) {
        const auto [m, c] = *rem.terms().rbegin();
        Mono q;
        for (std::size_t i = 0; i < 5; ++i) {
            if (m[i] < lead_m[i]) throw std::domain_error("divide_exact: remainder is not zero");
            q[i] = static_cast<std::uint8_t>(m[i] - lead_m[i]);
        }
        XPoly step(order);
        step.add_term(q, c / lead_c);
        quot += step;
        rem -= step * den;
    }
    return quot;
}

XPoly elementary(int m, int order) {
    XPoly out(order);
    for (int mask = 0; mask < 16; ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) != m) continue;
        Mono mono{0, 0, 0, 0, 0};
        for (int i = 0; i < 4; ++i) {
            if (mask & (1 << i)) mono[static_cast<std::size_t>(i + 1)] = 1;
        }
        out.add_term(mono, 1);
    }
    return out;
}

XPoly funceq_operator(const XPoly& F) {
    const int n = F.order();
    const XPoly t_e4 = XPoly::monomial(1, 1, 1, 1, 1, 1, n);
    XPoly out = XPoly::monomial(5, 1, 1, 1, 1, 1, n);
    out += t_e4 * F.at_one(1).coeff_x(3, 1).coeff_x(4, 1);
    out += t_e4 * F.coeff_x(1, 1).coeff_x(4, 1).divided_difference(2);
    out += XPoly::monomial(1, 1, 0, 1, 1, 1, n) * F.coeff_x(1, 1).divided_difference(3);
    out += XPoly::monomial(1, 1, 0, 0, 1, 1, n) * F.divided_difference(4);
    return out;
}

FuncEqSolution solve_funceq(int order) {
    if (order < 5) throw std::invalid_argument("solve_funceq: order must be at least 5");
    FuncEqSolution sol{XPoly(order), 0, {}};
    int last = -1;
    for (;;) {
        XPoly next = funceq_operator(sol.F);
        XPoly diff = next;
        diff -= sol.F;
        ++sol.iterations;
        sol.F = std::move(next);
        const int v = diff.t_valuation();
        if (v == INT_MAX) return sol;
        if (v <= last) throw std::runtime_error("solve_funceq: iteration is not contracting");
        sol.change_valuations.push_back(v);
        last = v;
    }
}

namespace {

XPoly alpha_poly(int order) {
    XPoly a = XPoly::constant(1, order);
    for (int i = 1; i <= 4; ++i) {
        XPoly f = XPoly::constant(1, order);
        Mono x{0, 0, 0, 0, 0};
        x[static_cast<std::size_t>(i)] = 1;
        f.add_term(x, -1);
        Mono tx2{1, 0, 0, 0, 0};
        tx2[static_cast<std::size_t>(i)] = 2;
        f.add_term(tx2, 1);
        a = a * f;
    }
    return a;
}

XPoly beta_poly(int order) {
    const XPoly e1 = elementary(1, order);
    const XPoly e2 = elementary(2, order);
    const XPoly e3 = elementary(3, order);
    const XPoly e4 = elementary(4, order);
    XPoly inner = e4.scaled(2).shift_t(2);
    XPoly lin = e4.scaled(4);
    lin -= e3.scaled(3);
    lin += e2.scaled(2);
    inner -= lin.shift_t(1);
    inner += e4;
    inner -= e3;
    inner += e2;
    inner -= e1;
    inner += XPoly::constant(2, order);
    return inner * e4;
}

XPoly quadratic(const XPoly& G, int order) {
    const XPoly e4 = elementary(4, order);
    XPoly r = alpha_poly(order) * G * G;
    r -= beta_poly(order) * G;
    r += e4 * e4;
    return r;
}

}  // namespace

XPoly closed_form_F(int order) {
    if (order < 5) throw std::invalid_argument("closed_form_F: order must be at least 5");
    const int m = order - 5;
    const XPoly e4 = elementary(4, m);
    // Linear coefficient of the quadratic at t = 0 along the chosen branch:
    // 2 alpha_0 e4 - beta_0 = e4 (alpha_0 - 1).
    XPoly alpha0 = alpha_poly(m).coeff_t(0);
    alpha0 -= XPoly::constant(1, m);
    const XPoly lin = e4 * alpha0;
    XPoly G = e4;
    for (int k = 1; k <= m; ++k) {
        const XPoly rest = quadratic(G.truncate(k), k).coeff_t(k);
        G += divide_exact(-rest, lin).truncate(m).shift_t(k);
    }
    return G.truncate(order).shift_t(5);
}

XPoly closed_form_residual(const XPoly& F) {
    const int m = F.order() - 5;
    const XPoly G = F.shift_t(-5).truncate(m);
    return quadratic(G, m);
}

XPoly tree_census(int order) {
    XPoly out(order);
    if (order < 5) return out;
    const WhirlTreeLevels levels = whirl_tree(order - 5);
    for (std::size_t k = 0; k < levels.signatures.size(); ++k) {
        for (const auto& [s, mult] : levels.signatures[k]) {
            out += XPoly::monomial(static_cast<int>(k) + 5, s[0], s[1], s[2], s[3], mpq_class(mpz_class(mult)), order);
        }
    }
    return out;
}

ClosedFormCheck verify_closedform_F(int order) {
    ClosedFormCheck res;
    const XPoly F = solve_funceq(order).F;
    res.funceq_matches = F == closed_form_F(order);
    res.residual_zero = closed_form_residual(F).is_zero();
    const QSeries c4 = catalan(order).pow(4);
    const QSeries target = QSeries::monomial(5, 1, order) * c4;
    res.specialization_ok = F.specialize_ones().agrees_with(target, order);
    res.cyclic_invariant = F.permute({2, 3, 4, 1}) == F;
    res.transposition_invariant = F.permute({2, 1, 3, 4}) == F;
    return res;
}

WhirlPipeline whirl_pipeline(int order) {
    if (order < 1) throw std::invalid_argument("whirl_pipeline: order must be positive");
    const int m = order + 4;
    const QSeries one = QSeries::constant(1, m);
    const QSeries t = QSeries::t(m);
    const QSeries C = catalan(m);
    const QSeries C2 = C * C;
    const QSeries C4 = C2 * C2;
    WhirlPipeline out;
    const QSeries one_minus_t = one - t;
    const QSeries seq = one / (one_minus_t * one_minus_t) - one;
    out.P = QSeries::monomial(5, 1, m) * C4 * (mpq_class(2) * (one / (one - seq)) - one);
    out.W = one / (one - out.P / t);
    out.Z = t * (one - mpq_class(2) * t) / (one - mpq_class(4) * t + mpq_class(2) * t * t);
    out.V = out.W * out.Z;
    out.target = t * C2 * (one + t * t * C4);
    const QSeries root = (one - mpq_class(4) * t).sqrt();
    const QSeries lead = one - mpq_class(2) * t;
    const QSeries quad = one - mpq_class(4) * t + mpq_class(2) * t * t;
    const QSeries t3 = QSeries::monomial(3, 2, m);
    out.radical = lead * (quad - lead * root) / t3;
    try {
        (void)(lead * (quad + lead * root) / t3);
        out.printed_radical_is_series = true;
    } catch (const std::domain_error&) {
        out.printed_radical_is_series = false;
    }
    out.P = out.P.truncate(order);
    out.W = out.W.truncate(order);
    out.Z = out.Z.truncate(order);
    out.V = out.V.truncate(order);
    out.target = out.target.truncate(order);
    out.radical = out.radical.truncate(order);
    out.identity_ok = out.V.agrees_with(out.target, order);
    out.radical_ok = out.radical.agrees_with(out.target, order);
    return out;
}

mpz_class recurrence_residual(const std::vector<mpz_class>& v, int n) {
    const auto at = [&](int k) { return v.at(static_cast<std::size_t>(k)); };
    return mpz_class(n + 4) * at(n) - mpz_class(6 * (n + 2)) * at(n - 1) + mpz_class(4 * (2 * n - 1)) * at(n - 2);
}

std::vector<int> calibrate_recurrence_offset(const QSeries& V, int last) {
    std::vector<int> ok;
    for (int s = -2; s <= 3; ++s) {
        if (last + s > V.order()) continue;
        std::vector<mpz_class> v;
        for (int n = 0; n <= last; ++n) {
            const int k = n + s;
            v.push_back(k < 0 ? mpz_class(0) : mpz_class(V[k].get_num()));
        }
        bool good = true;
        for (int n = 2; n <= last && good; ++n) good = recurrence_residual(v, n) == 0;
        if (good) ok.push_back(s);
    }
    return ok;
}

std::vector<mpz_class> vortex_recurrence(int K) {
    if (K < 1) throw std::invalid_argument("vortex_recurrence: K must be at least 1");
    std::vector<mpz_class> v{1, 2};
    for (int n = 2; n <= K; ++n) {
        const mpz_class num = mpz_class(6 * (n + 2)) * v[static_cast<std::size_t>(n - 1)] -
                              mpz_class(4 * (2 * n - 1)) * v[static_cast<std::size_t>(n - 2)];
        if (num % (n + 4) != 0) throw std::runtime_error("vortex_recurrence: non-integral term");
        v.push_back(num / (n + 4));
    }
    return v;
}

AsymptoticRatio asymptotic_ratio(int n) {
    if (n < 2) throw std::invalid_argument("asymptotic_ratio: n must be at least 2");
    const mpz_class vn = vortex_recurrence(n).back();
    // pi bounds with 14 correct decimals.
    const mpq_class pi_lo(mpz_class("314159265358979"), mpz_class("100000000000000"));
    const mpq_class pi_hi(mpz_class("314159265358980"), mpz_class("100000000000000"));
    mpz_class p16;
    mpz_ui_pow_ui(p16.get_mpz_t(), 16, static_cast<unsigned long>(n + 2));
    const mpz_class n3 = mpz_class(n) * n * n;
    const mpq_class base(vn * vn * n3, p16);
    const mpq_class sq_lo = base * pi_lo;
    const mpq_class sq_hi = base * pi_hi;
    // Integer square roots at 20 decimal digits give outward-rounded bounds.
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, 20);
    const mpz_class scale2 = scale * scale;
    mpz_class lo_int = sq_lo.get_num() * scale2 / sq_lo.get_den();
    mpz_class hi_int = (sq_hi.get_num() * scale2 + sq_hi.get_den() - 1) / sq_hi.get_den();
    mpz_class r_lo;
    mpz_class r_hi;
    mpz_sqrt(r_lo.get_mpz_t(), lo_int.get_mpz_t());
    mpz_sqrt(r_hi.get_mpz_t(), hi_int.get_mpz_t());
    r_hi += 1;
    AsymptoticRatio out;
    out.lower = mpq_class(r_lo, scale);
    out.upper = mpq_class(r_hi, scale);
    out.lower.canonicalize();
    out.upper.canonicalize();
    out.estimate = (out.lower.get_d() + out.upper.get_d()) / 2;
    return out;
}

}  // namespace rectlab
