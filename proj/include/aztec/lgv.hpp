#pragma once

#include "delannoy.hpp"
#include "exact.hpp"
#include "kinds.hpp"
#include "partition.hpp"

namespace aztec {

// (i,j) entry D(mu_{i+1}-i+j, n-j-1) in Case 1, H(...) in Case 2 (0-based i,j)
inline Matrix lgv_matrix(const Partition& mu, Case c) {
    const std::size_t n = mu.length();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            long a = mu[i] - static_cast<long>(i) + static_cast<long>(j);
            long b = static_cast<long>(n) - static_cast<long>(j) - 1;
            m(i, j) = Rat(c == Case::one ? delannoy_D(a, b) : delannoy_H(a, b));
        }
    }
    return m;
}

inline Int lgv_count(const Partition& mu, Case c) { return to_int(determinant(lgv_matrix(mu, c))); }

}  // namespace aztec
