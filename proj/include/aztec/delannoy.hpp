#pragma once

#include <algorithm>
#include <mutex>
#include <string>
#include <vector>

#include "exact.hpp"

namespace aztec {

namespace detail {

// D(i,j) for 0 <= i,j by the three-term recurrence, grown on demand
class DelannoyTable {
public:
    Int get(long i, long j) {
        std::lock_guard<std::mutex> lock(mu_);
        grow(static_cast<std::size_t>(std::max(i, j)) + 1);
        return t_[i][j];
    }

private:
    void grow(std::size_t size) {
        if (size <= t_.size()) return;
        std::size_t old = t_.size();
        t_.resize(size);
        for (auto& row : t_) row.resize(size);
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = (i < old ? old : 0); j < size; ++j) fill(i, j);
    }
    void fill(std::size_t i, std::size_t j) {
        if (i == 0 || j == 0) {
            t_[i][j] = 1;
            return;
        }
        t_[i][j] = t_[i - 1][j] + t_[i][j - 1] + t_[i - 1][j - 1];
    }

    std::mutex mu_;
    std::vector<std::vector<Int>> t_;
};

inline DelannoyTable& delannoy_table() {
    static DelannoyTable table;
    return table;
}

}  // namespace detail

// sum_l C(i,l) C(j,l) 2^l, zero for i < 0
inline Rat delannoy_sum(long i, const Rat& j) {
    if (i < 0) return 0;
    Rat r = 0;
    for (long l = 0; l <= i; ++l) r += binomial(i, l) * binomial(j, l) * Rat(pow2(l));
    return r;
}

inline Rat delannoy_D(long i, const Rat& j) {
    if (i < 0) return 0;
    if (is_integer(j) && j >= 0 && j.get_num().fits_slong_p())
        return detail::delannoy_table().get(i, j.get_num().get_si());
    return delannoy_sum(i, j);
}

inline Int delannoy_D(long i, long j) {
    if (i < 0) return 0;
    if (j >= 0) return detail::delannoy_table().get(i, j);
    return to_int(delannoy_sum(i, j));
}

inline Int delannoy_H(long i, long j) {
    if (i < 0 || j < -1) return 0;
    if (j == -1) return i == 0 ? 1 : 0;
    return delannoy_D(i, j) + delannoy_D(i - 1, j);
}

// H(i,j) = D(i,j) + D(i-1,j) for every rational j; agrees with delannoy_H for j >= -1
inline Rat delannoy_H_poly(long i, const Rat& j) { return delannoy_D(i, j) + delannoy_D(i - 1, j); }

namespace detail {

inline void walk(long x, long y, long tx, long ty, long bx, long by, unsigned long long& count) {
    if (x == bx && y == by) return;
    if (x == tx && y == ty) {
        ++count;
        return;
    }
    if (y < ty) walk(x, y + 1, tx, ty, bx, by, count);
    if (x < tx && y < ty) walk(x + 1, y + 1, tx, ty, bx, by, count);
    if (x < tx) walk(x + 1, y, tx, ty, bx, by, count);
}

}  // namespace detail

inline Int count_D_paths_bruteforce(long i, long j) {
    if (i < 0 || j < 0) throw DomainError("count_D_paths_bruteforce needs i, j >= 0");
    unsigned long long count = 0;
    detail::walk(0, 0, i, j, -1, -1, count);
    return Int(std::to_string(count));
}

// N/NE/E paths from (0,0) to (i,j+1) that avoid (i-1,j+1)
inline Int count_H_paths_bruteforce(long i, long j) {
    if (i < 0 || j < -1) throw DomainError("count_H_paths_bruteforce needs i >= 0, j >= -1");
    unsigned long long count = 0;
    detail::walk(0, 0, i, j + 1, i - 1, j + 1, count);
    return Int(std::to_string(count));
}

inline Rat half_shift_expansion(long i, long j) {
    if (i < -1 || j < -1) throw DomainError("half_shift_expansion needs i, j >= -1");
    Rat sum = 0;
    long top = i >= 0 ? (i + 1) / 2 : 0;
    for (long l = 0; l <= top; ++l) {
        Rat term = binomial(rat(-1, 2), l) * Rat(delannoy_H(i - 2 * l, j));
        sum += (l % 2 ? -term : term);
    }
    if (sum != delannoy_D(i, Rat(j) + rat(1, 2)))
        throw IdentityViolation("half_shift_expansion(" + std::to_string(i) + "," + std::to_string(j) + ")");
    return sum;
}

}  // namespace aztec
