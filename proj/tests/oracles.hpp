#pragma once

// Reference values computed without the library: closed-form integer
// formulas, naive recurrences and brute-force permutation checks.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <vector>

namespace oracle {

using Poly = std::vector<mpz_class>;  // coefficients c_0..c_N

inline mpz_class binom(long n, long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// [t^n] C(t)^k = k/(2n+k) * binom(2n+k, n).
inline mpz_class catalan_power(long k, long n) {
    if (n == 0) return 1;
    mpz_class b = binom(2 * n + k, n) * k;
    return b / (2 * n + k);
}

inline Poly mul(const Poly& a, const Poly& b, int N) {
    Poly c(static_cast<std::size_t>(N) + 1, 0);
    for (int i = 0; i <= N && i < static_cast<int>(a.size()); ++i) {
        for (int j = 0; i + j <= N && j < static_cast<int>(b.size()); ++j) {
            c[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        }
    }
    return c;
}

inline Poly catalan_power_series(int k, int N) {
    Poly c(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) c[static_cast<std::size_t>(n)] = catalan_power(k, n);
    return c;
}

/// t C^2 (1 + t^2 C^4) = t C^2 + t^3 C^6 as plain sums of Catalan powers.
inline Poly vortex_series(int N) {
    Poly v(static_cast<std::size_t>(N) + 1, 0);
    for (int n = 1; n <= N; ++n) v[static_cast<std::size_t>(n)] += catalan_power(2, n - 1);
    for (int n = 3; n <= N; ++n) v[static_cast<std::size_t>(n)] += catalan_power(6, n - 3);
    return v;
}

/// Large Schroeder numbers r_0, r_1, ... via (n+1) r_n = 3(2n-1) r_{n-1} - (n-2) r_{n-2}.
inline Poly schroeder(int N) {
    Poly r(static_cast<std::size_t>(N) + 1);
    r[0] = 1;
    if (N >= 1) r[1] = 2;
    for (int n = 2; n <= N; ++n) {
        r[static_cast<std::size_t>(n)] =
            (3 * (2 * n - 1) * r[static_cast<std::size_t>(n - 1)] - (n - 2) * r[static_cast<std::size_t>(n - 2)]) /
            (n + 1);
    }
    return r;
}

/// Expansion of num/den for integer polynomials with den[0] = 1.
inline Poly rational(const std::vector<long>& num, const std::vector<long>& den, int N) {
    Poly c(static_cast<std::size_t>(N) + 1, 0);
    for (int n = 0; n <= N; ++n) {
        mpz_class v = n < static_cast<int>(num.size()) ? mpz_class(num[static_cast<std::size_t>(n)]) : 0;
        for (int j = 1; j <= n && j < static_cast<int>(den.size()); ++j) {
            v -= den[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(n - j)];
        }
        c[static_cast<std::size_t>(n)] = v;
    }
    return c;
}

inline std::vector<std::uint64_t> to_u64(const Poly& p, int from, int to) {
    std::vector<std::uint64_t> out;
    for (int n = from; n <= to; ++n) out.push_back(p[static_cast<std::size_t>(n)].get_ui());
    return out;
}

/// Classical containment by trying every increasing index tuple.
inline bool contains_classical(const std::vector<int>& p, const std::vector<int>& q) {
    const int n = static_cast<int>(p.size());
    const int k = static_cast<int>(q.size());
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    if (k > n) return false;
    while (true) {
        bool ok = true;
        for (int a = 0; a < k && ok; ++a) {
            for (int b = a + 1; b < k && ok; ++b) {
                const bool lt = p[static_cast<std::size_t>(idx[static_cast<std::size_t>(a)])] <
                                p[static_cast<std::size_t>(idx[static_cast<std::size_t>(b)])];
                ok = lt == (q[static_cast<std::size_t>(a)] < q[static_cast<std::size_t>(b)]);
            }
        }
        if (ok) return true;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

/// Separable permutations of size n listed by brute force (avoid 2413 and 3142).
inline std::vector<std::vector<int>> separable_brute(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
    std::vector<std::vector<int>> out;
    do {
        if (!contains_classical(p, {2, 4, 1, 3}) && !contains_classical(p, {3, 1, 4, 2})) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace oracle
