#pragma once

#include <cstddef>
#include <string>

#include "errors.hpp"

namespace aztec {

// Case 1: chains of length 2n; Case 2: chains of length 2n+1
enum class Case { one = 1, two = 2 };

inline std::size_t chain_length(Case c, std::size_t n) { return c == Case::one ? 2 * n : 2 * n + 1; }

inline int case_number(Case c) { return static_cast<int>(c); }

inline Case case_from_number(int c) {
    if (c == 1) return Case::one;
    if (c == 2) return Case::two;
    throw UsageError("case must be 1 or 2, got " + std::to_string(c));
}

}  // namespace aztec
