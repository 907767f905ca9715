#pragma once

#include <cstdlib>
#include <string>

#include "errors.hpp"

namespace aztec {

inline constexpr unsigned long long default_search_cap = 10'000'000ULL;

// AZTEC_CAP overrides the number of search nodes an enumeration may visit
inline unsigned long long search_cap() {
    const char* env = std::getenv("AZTEC_CAP");
    if (!env || !*env) return default_search_cap;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) throw UsageError(std::string("AZTEC_CAP must be a positive integer, got \"") + env + "\"");
    return v;
}

class NodeBudget {
public:
    explicit NodeBudget(std::string what) : what_(std::move(what)), cap_(search_cap()) {}

    void tick() {
        if (++used_ > cap_)
            throw ResourceError(what_ + ": search exceeded " + std::to_string(cap_) + " nodes (raise AZTEC_CAP)");
    }
    unsigned long long used() const { return used_; }

private:
    std::string what_;
    unsigned long long cap_;
    unsigned long long used_ = 0;
};

}  // namespace aztec
