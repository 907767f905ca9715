#pragma once

#include <aztec/partition.hpp>
#include <aztec/sequences.hpp>

#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

namespace fixtures {

using aztec::Partition;

// every partition with at most `len` parts, parts at most `top`, padded to `len`
inline std::vector<Partition> partitions_in_box(int len, int top) {
    std::vector<Partition> out;
    std::vector<int> cur(len, 0);
    std::function<void(int, int)> rec = [&](int i, int hi) {
        if (i == len) {
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= hi; ++v) {
            cur[i] = v;
            rec(i + 1, v);
        }
    };
    rec(0, top);
    return out;
}

// the shapes of the cross-model criteria: mu_1 <= 3, length 1..3 (zeros allowed)
inline std::vector<Partition> small_shapes() {
    std::vector<Partition> out;
    for (int len = 1; len <= 3; ++len)
        for (const auto& p : partitions_in_box(len, 3)) out.push_back(p);
    return out;
}

inline Partition staircase(int k, int n) {
    std::vector<int> p;
    for (int i = 0; i < n; ++i) p.push_back(std::max(k - i, 0));
    return Partition(p);
}

// the chain listed with the tableau figure: mu = (5,3,2,1), Case 1
inline aztec::PartitionSequence tableau_figure_chain() {
    return {aztec::Case::one,
            Partition({5, 3, 2, 1}),
            {Partition({0, 0, 0, 0}), Partition({2, 0, 0, 0}), Partition({3, 0, 0, 0}), Partition({3, 1, 0, 0}),
             Partition({3, 2, 0, 0}), Partition({4, 3, 2, 0}), Partition({5, 3, 2, 0}), Partition({5, 3, 2, 1})}};
}

// the chain in the example-domain caption: mu = (3,2,2,1), Case 1
inline aztec::PartitionSequence domain_figure_chain() {
    return {aztec::Case::one,
            Partition({3, 2, 2, 1}),
            {Partition({0, 0, 0, 0}), Partition({1, 0, 0, 0}), Partition({2, 0, 0, 0}), Partition({3, 1, 0, 0}),
             Partition({3, 1, 0, 0}), Partition({3, 1, 0, 0}), Partition({3, 2, 1, 0}), Partition({3, 2, 2, 1})}};
}

class ScopedCap {
public:
    explicit ScopedCap(const char* value) {
        if (const char* old = std::getenv("AZTEC_CAP")) old_ = old;
        setenv("AZTEC_CAP", value, 1);
    }
    ~ScopedCap() {
        if (old_.empty())
            unsetenv("AZTEC_CAP");
        else
            setenv("AZTEC_CAP", old_.c_str(), 1);
    }

private:
    std::string old_;
};

}  // namespace fixtures
