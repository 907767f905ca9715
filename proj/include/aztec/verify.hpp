#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "delannoy.hpp"
#include "domains.hpp"
#include "exact.hpp"
#include "formulas.hpp"
#include "paths.hpp"
#include "sequences.hpp"

namespace aztec {

struct CheckReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> params;
    bool pass = true;
    std::vector<Rat> residual;
};

// pass <=> every residual entry is exactly zero
using KernelReport = CheckReport;

namespace detail {

inline bool all_zero(const std::vector<Rat>& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

inline void axpy(std::vector<Rat>& acc, const Rat& c, const std::vector<Rat>& v) {
    if (acc.empty()) acc.assign(v.size(), 0);
    for (std::size_t t = 0; t < v.size(); ++t) acc[t] += c * v[t];
}

inline Rat sign(long e) { return e % 2 == 0 ? 1 : -1; }

// 2^e for any integer e
inline Rat pow2q(long e) { return e >= 0 ? Rat(pow2(e)) : ratio(1, pow2(-e)); }

inline KernelReport kernel(const char* name, long k, long s, long a, std::vector<Rat> residual,
                           const char* variant = nullptr) {
    KernelReport r{name, {{"k", std::to_string(k)}, {"s", std::to_string(s)}, {"a", std::to_string(a)}}, true, {}};
    if (variant) r.params.emplace_back("variant", variant);
    if (residual.empty()) residual.assign(static_cast<std::size_t>(k), 0);
    r.pass = all_zero(residual);
    r.residual = std::move(residual);
    return r;
}

inline void require(bool ok, const std::string& what) {
    if (!ok) throw UsageError(what);
}

}  // namespace detail

// sum_j C(2s-2a+1, j-a) col_j of D1(k; s+1)
inline KernelReport check_step1(long k, long s, long a) {
    detail::require(0 <= a && a <= s && k >= 2 * s - a + 2 && (k - a) % 2 == 0,
                    "check_step1 needs 0 <= a <= s, k >= 2s-a+2, k = a mod 2");
    Matrix m = d_submatrix(k, s + 1, Case::one);
    std::vector<Rat> res;
    for (long j = a; j <= 2 * s - a + 1; ++j) detail::axpy(res, binomial(2 * s - 2 * a + 1, j - a), m.col(j));
    return detail::kernel("kernels/step1", k, s, a, res);
}

// sum_j C(2s-2a, j-a) col_j of D1(k; s+1/2)
inline KernelReport check_step2(long k, long s, long a) {
    detail::require(0 <= a && a <= s && k >= 2 * s - a + 1 && (k - a) % 2 != 0,
                    "check_step2 needs 0 <= a <= s, k >= 2s-a+1, k != a mod 2");
    Matrix m = d_submatrix(k, Rat(s) + rat(1, 2), Case::one);
    std::vector<Rat> res;
    for (long j = a; j <= 2 * s - a; ++j) detail::axpy(res, binomial(2 * s - 2 * a, j - a), m.col(j));
    return detail::kernel("kernels/step2", k, s, a, res);
}

// sum_{i=a}^{s+1-a} (-1)^{i-a} C(s+1-2a, i-a) row_i
//   - sum_{i=s+1-a}^{k-1} 2^{2s+2-4a} C(i-a-1, s-2a) row_i   of D1(k; -k+s+1)
inline KernelReport check_step3(long k, long s, long a) {
    detail::require(0 <= 2 * a && 2 * a <= s && k >= 2 * s - 2 * a + 2, "check_step3 needs 0 <= 2a <= s, k >= 2s-2a+2");
    Matrix m = d_submatrix(k, -k + s + 1, Case::one);
    std::vector<Rat> res;
    for (long i = a; i <= s + 1 - a; ++i)
        detail::axpy(res, detail::sign(i - a) * binomial(s + 1 - 2 * a, i - a), m.row(i));
    for (long i = s + 1 - a; i <= k - 1; ++i)
        detail::axpy(res, -Rat(pow2(2 * s + 2 - 4 * a)) * binomial(i - a - 1, s - 2 * a), m.row(i));
    return detail::kernel("kernels/step3", k, s, a, res);
}

inline Rat step4_c1(long s, long l) {
    Rat head = Rat(4 * l - 4 * s + 1) * detail::sign(s - 1) * pochhammer(1 - l, s - 1) * pochhammer(rat(1, 2), s) *
               pochhammer(rat(1, 2), l - s) / (Rat(2 * l - 4 * s + 1) * Rat(factorial(l)) * Rat(factorial(s - 1)));
    Rat tail = 0;
    for (long r = 1; r <= s; ++r)
        tail += Rat(pow2(4 * r - 3)) * pochhammer(Rat(2 * r) - rat(1, 2), s - r) *
                pochhammer(Rat(2 * r) - rat(1, 2), l - s - r) * inv_factorial(s - r) * inv_factorial(l - s - r + 1);
    return -head - Rat(4 * l - 4 * s + 1) * tail;
}

inline Rat step4_c2(long s, long l) {
    Rat head = Rat(4 * l - 4 * s - 1) * detail::sign(s - 1) * pochhammer(1 - l, s - 1) * pochhammer(rat(1, 2), s + 1) *
               pochhammer(rat(1, 2), l - s - 1) /
               (Rat(2 * l - 4 * s - 1) * Rat(factorial(l)) * Rat(factorial(s - 1)));
    Rat tail = 0;
    for (long r = 1; r <= s; ++r)
        tail += Rat(pow2(4 * r - 1)) * pochhammer(Rat(2 * r) + rat(1, 2), s - r) *
                pochhammer(Rat(2 * r) + rat(1, 2), l - s - r - 1) * inv_factorial(s - r) * inv_factorial(l - s - r);
    return head - Rat(4 * l - 4 * s - 1) * tail;
}

enum class Step4 { odd, even };

// sum_{i=a}^{k-1} c(s-a, i-a) row_i of D1(k; -k+2s-1/2) (odd, c1) or D1(k; -k+2s+1/2) (even, c2)
inline KernelReport check_step4(long k, long s, long a, Step4 variant) {
    const bool odd = variant == Step4::odd;
    detail::require(0 <= a && a < s && k >= 4 * s - 2 * a + (odd ? -1 : 1),
                    odd ? "check_step4 (odd) needs 0 <= a < s, k >= 4s-2a-1"
                        : "check_step4 (even) needs 0 <= a < s, k >= 4s-2a+1");
    Matrix m = d_submatrix(k, Rat(-k + 2 * s) + (odd ? rat(-1, 2) : rat(1, 2)), Case::one);
    std::vector<Rat> res;
    for (long i = a; i <= k - 1; ++i)
        detail::axpy(res, odd ? step4_c1(s - a, i - a) : step4_c2(s - a, i - a), m.row(i));
    return detail::kernel("kernels/step4", k, s, a, res, odd ? "odd" : "even");
}

inline Rat check_id1(long k, long s) {
    if (s < 1 || k < 4 * s - 1) throw UsageError("check_id1 needs s >= 1, k >= 4s-1");
    Rat total = 0;
    for (long i = 0; i <= k - 1; ++i) {
        Rat c = Rat(4 * i - 4 * s + 1) * detail::sign(s - 1) * pochhammer(1 - i, s - 1) * pochhammer(rat(1, 2), s) *
                pochhammer(rat(1, 2), i - s) / (Rat(2 * i - 4 * s + 1) * Rat(factorial(i)) * Rat(factorial(s - 1)));
        for (long l = 0; l <= k - 2 * i; ++l)
            total += c * binomial(k - 2 * i, l) * binomial(Rat(-k + 2 * s) - rat(3, 2), l) * Rat(pow2(l));
    }
    for (long r = 1; r <= s; ++r) {
        Rat c = detail::sign(k) * Rat(pow2(4 * r - 3)) * pochhammer(Rat(2 * r) - rat(1, 2), s - r) * inv_factorial(s - r);
        for (long l = 0; l <= k - 2 * r - 2 * s + 2; ++l) {
            Rat f = ratio(factorial(k - 2 * r - 2 * s + 1) * factorial(k + 2 * r - 2 * s - 1),
                          factorial(l) * factorial(l) * factorial(k - 2 * r - 2 * s + 2 - l) *
                              factorial(k + 2 * r - 2 * s - l));
            Rat poly = -l * l + 2 * k + k * k + 4 * r - 4 * r * r - 4 * s - 4 * k * s + 4 * s * s;
            total += c * detail::pow2q(k - 2 * r - 2 * s + 3 - l) * f * poly;
        }
    }
    return total;
}

inline Rat check_id2(long k, long s) {
    if (s < 1 || k < 4 * s + 1) throw UsageError("check_id2 needs s >= 1, k >= 4s+1");
    Rat total = 0;
    for (long i = 0; i <= k - 1; ++i) {
        Rat c = Rat(4 * i - 4 * s - 1) * detail::sign(s - 1) * pochhammer(1 - i, s - 1) *
                pochhammer(rat(1, 2), s + 1) * pochhammer(rat(1, 2), i - s - 1) /
                (Rat(2 * i - 4 * s - 1) * Rat(factorial(i)) * Rat(factorial(s - 1)));
        for (long l = 0; l <= k - 2 * i; ++l)
            total += c * binomial(k - 2 * i, l) * binomial(Rat(-k + 2 * s) - rat(1, 2), l) * Rat(pow2(l));
    }
    for (long r = 1; r <= s; ++r) {
        Rat c = detail::sign(k - 1) * Rat(pow2(4 * r - 1)) * pochhammer(Rat(2 * r) + rat(1, 2), s - r) *
                inv_factorial(s - r);
        for (long l = 0; l <= k - 2 * r - 2 * s; ++l) {
            Rat f = ratio(factorial(k - 2 * r - 2 * s - 1) * factorial(k + 2 * r - 2 * s - 1),
                          factorial(l) * factorial(l) * factorial(k - 2 * r - 2 * s - l) *
                              factorial(k + 2 * r - 2 * s - l));
            Rat poly = -l * l + k * k - 4 * r * r - 4 * k * s + 4 * s * s;
            total += c * detail::pow2q(k - 2 * r - 2 * s + 1 - l) * f * poly;
        }
    }
    return total;
}

// the large factor of gamma6 (a polynomial in k and s)
inline Int gamma6_factor(long k, long s) {
    Int K = k, S = s;
    return 425613 + 518672 * K + 230896 * K * K + 44800 * K * K * K + 3200 * K * K * K * K - 1084280 * S -
           946880 * K * S - 272128 * K * K * S - 25600 * K * K * K * S + 1048112 * S * S + 590336 * K * S * S +
           82432 * K * K * S * S - 387328 * S * S * S - 96256 * K * S * S * S + 4096 * K * K * S * S * S -
           44288 * S * S * S * S - 45056 * K * S * S * S * S - 4096 * K * K * S * S * S * S + 67584 * S * S * S * S * S +
           16384 * K * S * S * S * S * S - 12288 * S * S * S * S * S * S;
}

inline Int gamma6(long k, long s) {
    Int K = k, S = s;
    return Int((K + 6) * (K - 4 * S + 7)) * Int((2 * K - 4 * S + 7) * (2 * K - 4 * S + 11)) *
           Int((2 * K - 4 * S + 13) * (K - 2 * S + 3)) * Int((K - 2 * S + 4) * (K - 2 * S + 6)) * gamma6_factor(k, s);
}

inline bool check_gamma6(long k, long s) {
    if (s < 1 || k < 4 * s - 1) throw UsageError("check_gamma6 needs s >= 1, k >= 4s-1");
    return gamma6(k, s) != 0 && mpz_odd_p(gamma6_factor(k, s).get_mpz_t());
}

inline bool check_detprop(long k, long n) {
    if (k < 0) throw UsageError("check_detprop needs k >= 0");
    return determinant(d_submatrix(k, Rat(n) + rat(1, 2), Case::one)) == determinant(d_submatrix(k, n, Case::two));
}

inline bool check_main(long k, const Rat& n) {
    if (k < 0) throw UsageError("check_main needs k >= 0");
    return determinant(d_submatrix(k, n, Case::one)) == product_main(k, n);
}

// coefficients (constant term first) of the polynomial through (x_t, y_t)
inline std::vector<Rat> lagrange_coefficients(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    const std::size_t m = xs.size();
    std::vector<Rat> out(m, 0);
    for (std::size_t t = 0; t < m; ++t) {
        std::vector<Rat> basis{1};
        Rat den = 1;
        for (std::size_t u = 0; u < m; ++u) {
            if (u == t) continue;
            if (xs[u] == xs[t]) throw IdentityViolation("interpolation nodes are not distinct");
            std::vector<Rat> next(basis.size() + 1, 0);
            for (std::size_t e = 0; e < basis.size(); ++e) {
                next[e + 1] += basis[e];
                next[e] -= basis[e] * xs[u];
            }
            basis = std::move(next);
            den *= xs[t] - xs[u];
        }
        for (std::size_t e = 0; e < m; ++e) out[e] += ys[t] * basis[e] / den;
    }
    return out;
}

// det D1(k;n) interpolated at n = 0..C(k+1,2)+1
inline std::vector<Rat> det_polynomial(long k) {
    long top = k * (k + 1) / 2 + 1;
    std::vector<Rat> xs, ys;
    for (long t = 0; t <= top; ++t) {
        xs.push_back(t);
        ys.push_back(determinant(d_submatrix(k, t, Case::one)));
    }
    return lagrange_coefficients(xs, ys);
}

inline Rat expected_leading(long k) {
    Rat r = Rat(pow2(static_cast<unsigned long>(k * k)));
    for (long i = 1; i <= k; ++i) r /= pochhammer(i, i);
    return r;
}

// residual: (coefficient of n^{C(k+1,2)+1}, leading coefficient - expected)
inline CheckReport degree_report(long k) {
    if (k < 1) throw UsageError("check_degree_and_leading needs k >= 1");
    auto coeffs = det_polynomial(k);
    std::size_t deg = static_cast<std::size_t>(k * (k + 1) / 2);
    std::vector<Rat> res{coeffs[deg + 1], coeffs[deg] - expected_leading(k)};
    bool pass = detail::all_zero(res);
    return {"degree", {{"k", std::to_string(k)}}, pass, res};
}

inline bool check_degree_and_leading(long k) { return degree_report(k).pass; }

// -------- suites --------

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"delannoy", "kernels", "id1", "id2", "detprop",
                                                "main", "degree", "case12", "all"};
    return names;
}

namespace detail {

struct GridFailures {
    std::vector<Rat> residual;
    bool pass = true;
    void add(bool ok, const Rat& diff) {
        if (ok) return;
        pass = false;
        if (residual.size() < 8) residual.push_back(diff);
    }
};

inline CheckReport grid(const char* name, long lo_i, long hi_i, long lo_j, long hi_j,
                        const std::function<Rat(long, long)>& diff) {
    GridFailures g;
    for (long i = lo_i; i <= hi_i; ++i)
        for (long j = lo_j; j <= hi_j; ++j) {
            Rat d = diff(i, j);
            g.add(d == 0, d);
        }
    return {name,
            {{"i", std::to_string(lo_i) + ".." + std::to_string(hi_i)}, {"j", std::to_string(lo_j) + ".." + std::to_string(hi_j)}},
            g.pass,
            g.residual};
}

inline std::vector<CheckReport> delannoy_suite() {
    auto D = [](long i, long j) { return Rat(delannoy_D(i, j)); };
    auto H = [](long i, long j) { return Rat(delannoy_H(i, j)); };
    std::vector<CheckReport> out;
    out.push_back(grid("delannoy/first_difference", 0, 20, 0, 20,
                       [&](long i, long j) -> Rat { return D(i, j) - D(i - 1, j) - H(i, j - 1); }));
    out.push_back(grid("delannoy/h_column_sum", 0, 20, 0, 20, [&](long i, long j) -> Rat {
        Rat s = 0;
        for (long l = 0; l <= i; ++l) s += H(l, j - 1);
        return D(i, j) - s;
    }));
    out.push_back(grid("delannoy/binomial_sum", 0, 20, 0, 20, [&](long i, long j) -> Rat {
        Rat s = 0;
        for (long l = 0; l <= std::min(i, j); ++l) s += binomial(i, l) * binomial(j, l) * Rat(pow2(l));
        return D(i, j) - s;
    }));
    out.push_back(grid("delannoy/h_recurrence", 0, 20, 0, 20,
                       [&](long i, long j) -> Rat { return H(i, j) - H(i - 1, j) - H(i, j - 1) - H(i - 1, j - 1); }));
    out.push_back(grid("delannoy/h_row_sum", 1, 20, 0, 20, [&](long i, long j) -> Rat {
        Rat s = 0;
        for (long l = 0; l <= j; ++l) s += 2 * D(l, i - 1);
        return H(i, j) - s;
    }));
    out.push_back(grid("delannoy/h_binomial_sum", 1, 20, 0, 20, [&](long i, long j) -> Rat {
        Rat s = 0;
        for (long l = 0; l <= i; ++l) s += binomial(i - 1, l - 1) * binomial(j + 1, l) * Rat(pow2(l));
        return H(i, j) - s;
    }));
    out.push_back(grid("delannoy/polynomial_recurrence", -3, 12, -3, 12, [](long i, long j) -> Rat {
        return delannoy_D(i, Rat(j)) - delannoy_D(i - 1, Rat(j)) - delannoy_D(i - 1, Rat(j - 1)) -
               delannoy_D(i, Rat(j - 1));
    }));
    out.push_back(grid("delannoy/half_shift", -1, 12, -1, 12, [](long i, long j) -> Rat {
        try {
            half_shift_expansion(i, j);
            return Rat(0);
        } catch (const IdentityViolation&) {
            return Rat(1);
        }
    }));
    out.push_back(grid("delannoy/half_base_case", 0, 20, 0, 0, [](long i, long) -> Rat {
        Rat want = i % 2 ? Rat(0) : abs(binomial(rat(-1, 2), i / 2));
        return delannoy_D(i, rat(-1, 2)) - want;
    }));
    out.push_back(grid("delannoy/path_count", 0, 7, 0, 7, [](long i, long j) -> Rat {
        return Rat(delannoy_D(i, j) - count_D_paths_bruteforce(i, j)) +
               Rat(delannoy_H(i, j) - count_H_paths_bruteforce(i, j));
    }));
    return out;
}

inline std::vector<CheckReport> kernel_suite(long kmax) {
    std::vector<CheckReport> out;
    for (long k = 0; k <= kmax; ++k)
        for (long s = 0; s <= k; ++s)
            for (long a = 0; a <= s; ++a)
                if (k >= 2 * s - a + 2 && (k - a) % 2 == 0) out.push_back(check_step1(k, s, a));
    for (long k = 0; k <= kmax; ++k)
        for (long s = 0; s <= k; ++s)
            for (long a = 0; a <= s; ++a)
                if (k >= 2 * s - a + 1 && (k - a) % 2 != 0) out.push_back(check_step2(k, s, a));
    for (long k = 0; k <= kmax; ++k)
        for (long s = 0; s <= 2 * k; ++s)
            for (long a = 0; 2 * a <= s; ++a)
                if (k >= 2 * s - 2 * a + 2) out.push_back(check_step3(k, s, a));
    for (Step4 v : {Step4::odd, Step4::even})
        for (long k = 0; k <= kmax; ++k)
            for (long s = 1; s <= k; ++s)
                for (long a = 0; a < s; ++a)
                    if (k >= 4 * s - 2 * a + (v == Step4::odd ? -1 : 1)) out.push_back(check_step4(k, s, a, v));
    return out;
}

inline CheckReport scalar(const char* name, std::vector<std::pair<std::string, std::string>> params, const Rat& diff) {
    return {name, std::move(params), diff == 0, diff == 0 ? std::vector<Rat>{} : std::vector<Rat>{diff}};
}

inline CheckReport flag(const char* name, std::vector<std::pair<std::string, std::string>> params, bool ok) {
    return {name, std::move(params), ok, {}};
}

inline std::pair<std::string, std::string> kv(const char* key, long v) { return {key, std::to_string(v)}; }
inline std::pair<std::string, std::string> kv(const char* key, const Rat& v) { return {key, v.get_str()}; }

inline std::vector<CheckReport> id_suite(bool second, std::optional<long> kmax) {
    std::vector<CheckReport> out;
    for (long s = 1; s <= 3; ++s) {
        for (long k = 4 * s + (second ? 1 : -1); k <= 4 * s + 6; ++k) {
            if (kmax && k > *kmax) continue;
            Rat v = second ? check_id2(k, s) : check_id1(k, s);
            out.push_back(scalar(second ? "id2" : "id1", {kv("k", k), kv("s", s)}, v));
        }
    }
    if (!second)
        for (long s = 1; s <= 4; ++s)
            for (long k = 4 * s - 1; k <= 20; ++k)
                if (!kmax || k <= *kmax) out.push_back(flag("id1/gamma6", {kv("k", k), kv("s", s)}, check_gamma6(k, s)));
    return out;
}

inline Partition staircase(long k, long n) {
    std::vector<int> p;
    for (long i = 0; i < n; ++i) p.push_back(static_cast<int>(std::max(k - i, 0L)));
    return Partition(p);
}

inline std::vector<CheckReport> case12_suite(long kmax) {
    std::vector<CheckReport> out;
    for (long k = 1; k <= kmax; ++k) {
        Partition one = staircase(k + 1, k + 1), two = staircase(k, k + 1);
        Int a = count_sequences_by_transfer(one, Case::one), b = count_sequences_by_transfer(two, Case::two);
        Int c = lgv_count(one, Case::one), d = lgv_count(two, Case::two);
        out.push_back(flag("case12/equinumerous", {kv("k", k)}, a == b && c == d && a == c));
    }
    for (long n = 1; n <= kmax; ++n)
        for (long k = 1; k <= n; ++k)
            for (Case c : {Case::one, Case::two}) {
                Partition mu = staircase(k, n);
                Rat want = Rat(count_sequences_by_transfer(mu, c));
                Rat got = c == Case::one ? product_case1(k, 2 * n) : product_case2(k, n);
                out.push_back(scalar(c == Case::one ? "case12/product_case1" : "case12/product_case2",
                                     {kv("k", k), kv("n", n)}, got - want));
            }
    for (long n = 1; n <= 2 * kmax; ++n) {
        Int f = df_value(n), g = g_value(n);
        out.push_back(scalar("case12/f_equals_g", {kv("n", n)}, Rat(f - g)));
    }
    for (long n = 1; n <= kmax + 1; ++n)
        out.push_back(scalar("case12/df_product", {kv("n", n)}, Rat(df_value(n)) - product_case1(n, 2 * n)));
    return out;
}

}  // namespace detail

struct SuiteDefaults {
    long kernels = 8, detprop = 6, main = 5, degree = 4, case12 = 4;
};

inline std::vector<CheckReport> run_suite(const std::string& name, std::optional<long> kmax = std::nullopt) {
    if (kmax && *kmax < 0) throw UsageError("--kmax must be non-negative");
    const SuiteDefaults def;
    auto bound = [&](long d) { return kmax ? *kmax : d; };
    std::vector<CheckReport> out;
    auto take = [&](std::vector<CheckReport> v) { out.insert(out.end(), v.begin(), v.end()); };
    bool all = name == "all";
    bool known = false;
    if (all || name == "delannoy") {
        known = true;
        take(detail::delannoy_suite());
    }
    if (all || name == "kernels") {
        known = true;
        take(detail::kernel_suite(bound(def.kernels)));
    }
    if (all || name == "id1") {
        known = true;
        take(detail::id_suite(false, kmax));
    }
    if (all || name == "id2") {
        known = true;
        take(detail::id_suite(true, kmax));
    }
    if (all || name == "detprop") {
        known = true;
        for (long k = 0; k <= bound(def.detprop); ++k)
            for (long n = -3; n <= 6; ++n)
                out.push_back(detail::flag("detprop", {detail::kv("k", k), detail::kv("n", n)}, check_detprop(k, n)));
    }
    if (all || name == "main") {
        known = true;
        for (long k = 0; k <= bound(def.main); ++k) {
            std::vector<Rat> grid;
            for (long n = -2; n <= 6; ++n) grid.push_back(n);
            for (long t = -3; t <= 11; t += 2) grid.push_back(rat(t, 2));
            for (const Rat& n : grid) {
                Rat diff = determinant(d_submatrix(k, n, Case::one)) - product_main(k, n);
                out.push_back(detail::scalar("main", {detail::kv("k", k), detail::kv("n", n)}, diff));
            }
        }
    }
    if (all || name == "degree") {
        known = true;
        for (long k = 1; k <= bound(def.degree); ++k) out.push_back(degree_report(k));
    }
    if (all || name == "case12") {
        known = true;
        take(detail::case12_suite(bound(def.case12)));
    }
    if (!known) throw UsageError("unknown suite \"" + name + "\"");
    return out;
}

inline bool all_pass(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

}  // namespace aztec
