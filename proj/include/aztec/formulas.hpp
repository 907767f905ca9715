#pragma once

#include <algorithm>
#include <optional>

#include "exact.hpp"
#include "kinds.hpp"
#include "partition.hpp"

namespace aztec {

namespace detail {

inline long floor_div(long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }

inline Rat shifted_range_product(const Rat& base, long lo, long hi) {
    Rat r = 1;
    for (long s = lo; s <= hi; ++s) r *= base + s;
    return r;
}

inline Rat staircase_product(long k, const Rat& ell) {
    Rat num = 1;
    for (long i = 0; i <= floor_div(k - 1, 2); ++i) num *= shifted_range_product(ell, -2 * k + 4 * i + 1, -k + 2 * i);
    for (long i = 0; i <= floor_div(k - 2, 2); ++i) num *= shifted_range_product(ell, k - 2 * i, 2 * k - 4 * i - 2);
    Int den = 1;
    for (long i = 1; i <= k - 1; ++i) {
        Int f;
        mpz_ui_pow_ui(f.get_mpz_t(), static_cast<unsigned long>(2 * i + 1), static_cast<unsigned long>(k - i));
        den *= f;
    }
    return num / Rat(den);
}

inline Rat checked_count(const Rat& v, const char* what) {
    if (!is_integer(v) || v < 0) throw IdentityViolation(std::string(what) + " is not a non-negative integer: " + v.get_str());
    return v;
}

}  // namespace detail

// Case 1 count for mu = (k, k-1, ..., 1, 0^{n-k}) with ell = 2n
inline Rat product_case1(long k, long ell) {
    if (k < 1 || ell < 2 * k) throw DomainError("product_case1 needs k >= 1 and ell >= 2k");
    return detail::checked_count(detail::staircase_product(k, ell), "product_case1");
}

// Case 2 count: the Case 1 product with n replaced by n + 1/2
inline Rat product_case2(long k, long n) {
    if (k < 1 || n < k) throw DomainError("product_case2 needs 1 <= k <= n");
    return detail::checked_count(detail::staircase_product(k, 2 * n + 1), "product_case2");
}

// det D1(k;n) as a product: prefactor 2^{k^2} prod 1/(i)_i times four families of
// linear factors whose exponents depend on the parity of k
inline Rat product_main(long k, const Rat& n) {
    if (k < 0) throw DomainError("product_main needs k >= 0");
    Rat r = Rat(pow2(static_cast<unsigned long>(k * k)));
    for (long i = 1; i <= k; ++i) r /= pochhammer(i, i);
    const long even = k % 2 == 0, odd = 1 - even;
    const Rat half = rat(1, 2);
    auto power = [&](const Rat& base, long e) {
        for (long t = 0; t < e; ++t) r *= base;
    };
    for (long s = 0; s <= k - 2; ++s) power(n - s - 1, std::min((s + 1 + even) / 2, (k - s) / 2));
    for (long s = 0; s <= k - 1; ++s) power(n - s - half, std::min((s + 1 + odd) / 2, (k - s + 1) / 2));
    for (long s = 0; s <= k - 2; ++s) power(n + k - s - 1, std::min((s + 2) / 2, (k - s - odd) / 2));
    for (long s = 1; s <= k - 2; ++s) power(n + k - s - half, std::min((s + 1) / 2, (k - s - even) / 2));
    return r;
}

// 2^{n(n-1)/2} prod_{i<n} (4i+2)!/(n+2i+1)!
inline Int df_value(long n) {
    Rat r = Rat(pow2(static_cast<unsigned long>(n * (n - 1) / 2)));
    for (long i = 0; i < n; ++i) r *= ratio(factorial(4 * i + 2), factorial(n + 2 * i + 1));
    return to_int(r);
}

inline Int g_value(long n) {
    Rat r = 1;
    for (long i = 0; 4 * i + 1 <= n + 2 * i || 3 * n - 2 * i <= 4 * n - 4 * i - 2; ++i) {
        r *= detail::shifted_range_product(0, 4 * i + 1, n + 2 * i);
        r *= detail::shifted_range_product(0, 3 * n - 2 * i, 4 * n - 4 * i - 2);
    }
    for (long i = 1; i <= n - 1; ++i) {
        Int f;
        mpz_ui_pow_ui(f.get_mpz_t(), static_cast<unsigned long>(2 * i + 1), static_cast<unsigned long>(n - i));
        r /= Rat(f);
    }
    return to_int(r);
}

inline Int df_formula(long n) {
    if (n < 1) throw DomainError("df_formula needs n >= 1");
    Int f = df_value(n), g = g_value(n);
    if (f != g) throw IdentityViolation("F(" + std::to_string(n) + ") = " + f.get_str() + " but G = " + g.get_str());
    return f;
}

inline Int g_formula(long n) {
    if (n < 1) throw DomainError("g_formula needs n >= 1");
    return g_value(n);
}

// k when mu = (k, k-1, ..., 1, 0, ..., 0)
inline std::optional<long> staircase_order(const Partition& mu) {
    long k = mu.first();
    if (static_cast<std::size_t>(k) > mu.length()) return std::nullopt;
    for (long i = 0; i < static_cast<long>(mu.length()); ++i)
        if (mu[i] != std::max(k - i, 0L)) return std::nullopt;
    return k;
}

// product-formula count for a staircase mu; empty products give 1 when k = 0
inline std::optional<Int> count_by_product(const Partition& mu, Case c) {
    auto k = staircase_order(mu);
    if (!k) return std::nullopt;
    if (*k == 0) return Int(1);
    long n = static_cast<long>(mu.length());
    return to_int(c == Case::one ? product_case1(*k, 2 * n) : product_case2(*k, n));
}

}  // namespace aztec
