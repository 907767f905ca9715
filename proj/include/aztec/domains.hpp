#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <vector>

#include "budget.hpp"
#include "kinds.hpp"
#include "partition.hpp"
#include "sequences.hpp"

namespace aztec {

// (diagonal d, position p counted from the diagonal's southwestern-most cell)
struct Cell {
    long d = 0, p = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Diagonals 0..L with L = 2n-1 (Case 1) or 2n (Case 2). Diagonal d has
// mu_1 + ceil(d/2) cells; on diagonal L only the cells flagged in last_mask
// belong to the domain.
struct Domain {
    Partition mu;
    Case kind = Case::one;
    std::vector<bool> last_mask;

    long diagonals() const { return static_cast<long>(chain_length(kind, mu.length())); }
    long last() const { return diagonals() - 1; }
    long length(long d) const { return mu.first() + (d + 1) / 2; }

    bool contains(const Cell& c) const {
        if (c.d < 0 || c.d > last() || c.p < 0 || c.p >= length(c.d)) return false;
        return c.d < last() || last_mask[static_cast<std::size_t>(c.p)];
    }

    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        for (long d = 0; d <= last(); ++d)
            for (long p = 0; p < length(d); ++p)
                if (contains({d, p})) out.push_back({d, p});
        return out;
    }

    friend bool operator==(const Domain&, const Domain&) = default;
};

inline Domain build_domain(const Partition& mu, Case c) {
    Domain dom{mu, c, {}};
    const long L = dom.last();
    if (L < 0) return dom;
    const auto marks = anchored_marks(mu, static_cast<std::size_t>((L + 1) / 2), mu.first());
    const Mark inside = c == Case::one ? Mark::hole : Mark::particle;
    for (Mark m : marks) dom.last_mask.push_back(m == inside);
    return dom;
}

enum class Orientation { vertical, horizontal };

// start is the north (vertical) or west (horizontal) cell; it lies on the lower diagonal
struct Domino {
    Cell start;
    Orientation orient = Orientation::vertical;

    Cell other() const { return {start.d + 1, start.p + (orient == Orientation::horizontal ? 1 : 0)}; }
    bool even() const { return start.d % 2 == 0; }

    friend auto operator<=>(const Domino& a, const Domino& b) {
        if (auto c = a.start <=> b.start; c != 0) return c;
        return a.orient <=> b.orient;
    }
    friend bool operator==(const Domino&, const Domino&) = default;
};

struct Tiling {
    Domain domain;
    std::vector<Domino> dominoes;  // sorted by start cell

    friend bool operator==(const Tiling&, const Tiling&) = default;
};

inline bool validate_tiling(const Tiling& t) {
    std::vector<Cell> covered;
    for (const Domino& x : t.dominoes) {
        if (!t.domain.contains(x.start) || !t.domain.contains(x.other())) return false;
        covered.push_back(x.start);
        covered.push_back(x.other());
    }
    std::sort(covered.begin(), covered.end());
    return covered == t.domain.cells();
}

namespace detail {

class TilingSearch {
public:
    explicit TilingSearch(const Domain& d) : dom_(d), budget_("enumerate_tilings") {
        for (long k = 0; k <= d.last(); ++k) covered_.emplace_back(static_cast<std::size_t>(d.length(k)), false);
        order_ = d.cells();
    }

    // visit returns false to stop
    void run(const std::function<bool(const std::vector<Domino>&)>& visit) { rec(0, visit); }

private:
    bool free(const Cell& c) const { return dom_.contains(c) && !covered_[c.d][c.p]; }
    void set(const Cell& c, bool v) { covered_[c.d][c.p] = v; }

    bool rec(std::size_t from, const std::function<bool(const std::vector<Domino>&)>& visit) {
        budget_.tick();
        while (from < order_.size() && covered_[order_[from].d][order_[from].p]) ++from;
        if (from == order_.size()) return visit(placed_);
        const Cell c = order_[from];
        for (Orientation o : {Orientation::vertical, Orientation::horizontal}) {
            Domino x{c, o};
            if (!free(x.other())) continue;
            set(c, true);
            set(x.other(), true);
            placed_.push_back(x);
            bool go = rec(from + 1, visit);
            placed_.pop_back();
            set(x.other(), false);
            set(c, false);
            if (!go) return false;
        }
        return true;
    }

    const Domain& dom_;
    NodeBudget budget_;
    std::vector<std::vector<bool>> covered_;
    std::vector<Cell> order_;
    std::vector<Domino> placed_;
};

}  // namespace detail

// backtracking on the first uncovered cell in (d,p) order, vertical before horizontal
inline std::vector<Tiling> enumerate_tilings(const Domain& d, std::size_t limit = no_limit) {
    std::vector<Tiling> out;
    if (limit == 0) return out;
    detail::TilingSearch search(d);
    search.run([&](const std::vector<Domino>& ds) {
        out.push_back({d, ds});
        return out.size() < limit;
    });
    return out;
}

inline Int count_tilings(const Domain& d) {
    Int count = 0;
    detail::TilingSearch search(d);
    search.run([&](const std::vector<Domino>&) {
        ++count;
        return true;
    });
    return count;
}

// Hole/particle reading of every diagonal. Starts on even diagonals and ends on
// odd diagonals are holes; out-of-domain cells of the last diagonal count as starts.
inline std::vector<std::vector<Mark>> tiling_marks(const Tiling& t) {
    const Domain& dom = t.domain;
    std::vector<std::vector<bool>> start;
    for (long d = 0; d <= dom.last(); ++d) start.emplace_back(static_cast<std::size_t>(dom.length(d)), false);
    for (const Domino& x : t.dominoes) start[x.start.d][x.start.p] = true;
    std::vector<std::vector<Mark>> marks;
    for (long d = 0; d <= dom.last(); ++d) {
        std::vector<Mark> row;
        for (long p = 0; p < dom.length(d); ++p) {
            bool s = start[d][p] || !dom.contains({d, p});
            bool hole = s == (d % 2 == 0);
            row.push_back(hole ? Mark::hole : Mark::particle);
        }
        marks.push_back(std::move(row));
    }
    return marks;
}

inline PartitionSequence tiling_to_sequence(const Tiling& t) {
    if (!validate_tiling(t)) throw ContractViolation("tiling_to_sequence: not a tiling of its domain");
    PartitionSequence s{t.domain.kind, t.domain.mu, {}};
    const std::size_t n = s.n();
    for (const auto& row : tiling_marks(t)) {
        Partition lam = decode_marks(row);
        if (lam.nonzero() > n) throw ContractViolation("tiling_to_sequence: diagonal decodes to too many parts");
        s.chain.push_back(lam.padded(n));
    }
    if (!validate_sequence(s)) throw ContractViolation("tiling_to_sequence: decoded chain is not a valid sequence");
    return s;
}

// starts on diagonal d are matched in order with ends on diagonal d+1
inline Tiling sequence_to_tiling(const PartitionSequence& s) {
    if (!validate_sequence(s)) throw ContractViolation("sequence_to_tiling: invalid sequence");
    Tiling t{build_domain(s.mu, s.kind), {}};
    const long L = t.domain.last();
    const int holes = s.mu.first();
    std::vector<std::vector<Mark>> marks;
    for (long d = 0; d <= L; ++d) marks.push_back(anchored_marks(s.chain[d], static_cast<std::size_t>((d + 1) / 2), holes));
    for (long d = 0; d < L; ++d) {
        const Mark start_mark = d % 2 == 0 ? Mark::hole : Mark::particle;
        std::vector<long> starts, ends;
        for (long p = 0; p < static_cast<long>(marks[d].size()); ++p)
            if (marks[d][p] == start_mark) starts.push_back(p);
        for (long p = 0; p < static_cast<long>(marks[d + 1].size()); ++p)
            if (marks[d + 1][p] == start_mark && t.domain.contains({d + 1, p})) ends.push_back(p);
        if (starts.size() != ends.size()) throw ContractViolation("sequence_to_tiling: diagonals do not pair up");
        for (std::size_t q = 0; q < starts.size(); ++q) {
            long shift = ends[q] - starts[q];
            if (shift != 0 && shift != 1) throw ContractViolation("sequence_to_tiling: diagonals do not pair up");
            t.dominoes.push_back({{d, starts[q]}, shift ? Orientation::horizontal : Orientation::vertical});
        }
    }
    std::sort(t.dominoes.begin(), t.dominoes.end());
    if (!validate_tiling(t)) throw ContractViolation("sequence_to_tiling: result does not tile the domain");
    return t;
}

}  // namespace aztec
