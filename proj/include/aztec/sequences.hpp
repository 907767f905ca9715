#pragma once

#include <functional>
#include <limits>
#include <map>
#include <vector>

#include "budget.hpp"
#include "kinds.hpp"
#include "lgv.hpp"
#include "partition.hpp"

namespace aztec {

struct PartitionSequence {
    Case kind = Case::one;
    Partition mu;
    std::vector<Partition> chain;

    std::size_t n() const { return mu.length(); }
    std::size_t ell() const { return chain_length(kind, n()); }

    friend bool operator==(const PartitionSequence&, const PartitionSequence&) = default;
};

inline bool validate_sequence(const PartitionSequence& s) {
    const std::size_t n = s.n();
    if (s.chain.size() != s.ell()) return false;
    for (std::size_t i = 0; i < s.chain.size(); ++i) {
        if (s.chain[i].nonzero() > (i + 1) / 2 || s.chain[i].nonzero() > n) return false;
        if (i == 0) continue;
        bool ok = i % 2 ? is_horizontal_strip(s.chain[i], s.chain[i - 1]) : is_vertical_strip(s.chain[i], s.chain[i - 1]);
        if (!ok) return false;
    }
    if (!s.chain.empty() && !(s.chain.front().empty() && s.chain.back() == s.mu)) return false;
    if (s.chain.empty() && n != 0) return false;
    return true;
}

namespace detail {

// part_cap(i), when set, bounds every part of lambda^(i)
struct ChainWalker {
    const Partition& mu;
    Case kind;
    std::function<int(std::size_t)> part_cap;
    NodeBudget budget;
    std::size_t n, ell;
    std::vector<Partition> chain;

    ChainWalker(const Partition& m, Case c, std::function<int(std::size_t)> cap, const char* what)
        : mu(m), kind(c), part_cap(std::move(cap)), budget(what), n(m.length()), ell(chain_length(c, m.length())) {}

    // children of chain.back() at step i, in increasing lexicographic order
    std::vector<Partition> children(std::size_t i) const {
        const Partition& in = chain.back();
        const std::size_t allowed = (i + 1) / 2;
        const int cap = part_cap ? part_cap(i) : std::numeric_limits<int>::max();
        std::vector<Partition> out;
        std::vector<int> cur(n, 0);
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t t, std::size_t nz) {
            if (t == n) {
                out.emplace_back(cur);
                return;
            }
            int lo = in[t];
            int hi = std::min(mu[t], cap);
            if (i % 2)
                hi = std::min(hi, t == 0 ? mu[0] : in[t - 1]);
            else
                hi = std::min(hi, in[t] + 1);
            if (t > 0) hi = std::min(hi, cur[t - 1]);
            for (int v = lo; v <= hi; ++v) {
                std::size_t nz2 = nz + (v > 0);
                if (nz2 > allowed) break;
                cur[t] = v;
                rec(t + 1, nz2);
            }
            cur[t] = 0;
        };
        rec(0, 0);
        return out;
    }

    // visit returns false to stop the walk
    bool walk(const std::function<bool(const std::vector<Partition>&)>& visit) {
        chain.assign(1, Partition(std::vector<int>(n, 0)));
        if (ell == 0) {
            chain.clear();
            return mu.empty() ? visit(chain) : true;
        }
        return step(1, visit);
    }

    bool step(std::size_t i, const std::function<bool(const std::vector<Partition>&)>& visit) {
        budget.tick();
        if (i == ell) return chain.back() == mu ? visit(chain) : true;
        for (auto& next : children(i)) {
            chain.push_back(next);
            bool go = step(i + 1, visit);
            chain.pop_back();
            if (!go) return false;
        }
        return true;
    }
};

inline std::vector<PartitionSequence> collect(const Partition& mu, Case c, std::function<int(std::size_t)> cap,
                                              std::size_t limit, const char* what) {
    std::vector<PartitionSequence> out;
    if (limit == 0) return out;
    ChainWalker w(mu, c, std::move(cap), what);
    w.walk([&](const std::vector<Partition>& chain) {
        out.push_back({c, mu, chain});
        return out.size() < limit;
    });
    return out;
}

}  // namespace detail

inline constexpr std::size_t no_limit = std::numeric_limits<std::size_t>::max();

// all sequences ending at mu, in lexicographic chain order
inline std::vector<PartitionSequence> enumerate_sequences(const Partition& mu, Case c, std::size_t limit = no_limit) {
    return detail::collect(mu, c, nullptr, limit, "enumerate_sequences");
}

// Case 1 sequences for mu=(n,...,1) with lambda^(i)_j <= n-(k-1)+floor(i/2)
inline std::vector<PartitionSequence> enumerate_restricted(int n, int k, std::size_t limit = no_limit) {
    if (k < 1 || k > n) throw UsageError("enumerate_restricted needs 1 <= k <= n");
    std::vector<int> parts;
    for (int v = n; v >= 1; --v) parts.push_back(v);
    auto cap = [n, k](std::size_t i) { return n - (k - 1) + static_cast<int>(i / 2); };
    return detail::collect(Partition(parts), Case::one, cap, limit, "enumerate_restricted");
}

inline Int count_sequences(const Partition& mu, Case c) { return lgv_count(mu, c); }

// layer-by-layer transfer count over the same strip moves the enumerator uses
inline Int count_sequences_by_transfer(const Partition& mu, Case c) {
    detail::ChainWalker w(mu, c, nullptr, "count_sequences_by_transfer");
    const std::size_t ell = w.ell;
    if (ell == 0) return mu.empty() ? 1 : 0;
    std::map<Partition, Int> layer{{Partition(std::vector<int>(w.n, 0)), 1}};
    for (std::size_t i = 1; i < ell; ++i) {
        std::map<Partition, Int> next;
        for (auto& [lam, count] : layer) {
            w.budget.tick();
            w.chain.assign(1, lam);
            for (auto& child : w.children(i)) next[child] += count;
        }
        layer = std::move(next);
    }
    auto it = layer.find(mu.padded(w.n));
    return it == layer.end() ? Int(0) : it->second;
}

}  // namespace aztec
