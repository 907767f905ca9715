#pragma once

#include <compare>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "budget.hpp"
#include "delannoy.hpp"
#include "lgv.hpp"
#include "tableaux.hpp"

namespace aztec {

struct Point {
    long x = 0, y = 0;
    friend auto operator<=>(const Point&, const Point&) = default;
};

// steps: 'N' (0,1), 'D' (1,1), 'E' (1,0)
struct LatticePath {
    Point start;
    std::string steps;

    std::vector<Point> vertices() const {
        std::vector<Point> v{start};
        for (char s : steps) {
            Point p = v.back();
            if (s == 'N' || s == 'D') ++p.y;
            if (s == 'E' || s == 'D') ++p.x;
            v.push_back(p);
        }
        return v;
    }
    Point end() const { return vertices().back(); }

    friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

// paths[j-1] runs from (-j, j) to (mu_j - j, n) in Case 1, (mu_j - j, n+1) in Case 2
struct PathFamily {
    Case kind = Case::one;
    Partition mu;
    std::vector<LatticePath> paths;

    friend bool operator==(const PathFamily&, const PathFamily&) = default;
};

inline Point path_start(std::size_t j) { return {-static_cast<long>(j), static_cast<long>(j)}; }

inline Point path_end(const Partition& mu, Case c, std::size_t j) {
    long top = static_cast<long>(mu.length()) + (c == Case::two ? 1 : 0);
    return {mu[j - 1] - static_cast<long>(j), top};
}

inline bool validate_family(const PathFamily& f) {
    const std::size_t n = f.mu.length();
    if (f.paths.size() != n) return false;
    std::set<Point> seen;
    for (std::size_t j = 1; j <= n; ++j) {
        const LatticePath& p = f.paths[j - 1];
        if (p.steps.find_first_not_of("NDE") != std::string::npos) return false;
        if (p.start != path_start(j) || p.end() != path_end(f.mu, f.kind, j)) return false;
        if (f.kind == Case::two && !p.steps.empty() && p.steps.back() == 'E') return false;
        for (const Point& v : p.vertices())
            if (!seen.insert(v).second) return false;
    }
    return true;
}

// row j: go north to height v, then E for entry v or D for entry v~; finish north
inline PathFamily tableau_to_paths(const Tableau& t) {
    if (!validate_tableau(t)) throw ContractViolation("tableau_to_paths: invalid tableau");
    PathFamily f{t.type, t.shape, {}};
    for (std::size_t j = 1; j <= t.n(); ++j) {
        LatticePath p{path_start(j), ""};
        long y = p.start.y;
        for (const Entry& e : t.rows[j - 1]) {
            for (; y < e.value; ++y) p.steps += 'N';
            p.steps += e.barred ? 'D' : 'E';
            if (e.barred) ++y;
        }
        for (long top = path_end(t.shape, t.type, j).y; y < top; ++y) p.steps += 'N';
        f.paths.push_back(std::move(p));
    }
    return f;
}

inline Tableau paths_to_tableau(const PathFamily& f) {
    if (!validate_family(f)) throw ContractViolation("paths_to_tableau: invalid path family");
    Tableau t{f.kind, f.mu, {}};
    for (const LatticePath& p : f.paths) {
        std::vector<Entry> row;
        long y = p.start.y;
        for (char s : p.steps) {
            if (s == 'E') row.push_back({static_cast<int>(y), false});
            if (s == 'D') row.push_back({static_cast<int>(y), true});
            if (s != 'E') ++y;
        }
        t.rows.push_back(std::move(row));
    }
    if (!validate_tableau(t)) throw ContractViolation("paths_to_tableau: family does not encode a tableau");
    return t;
}

namespace detail {

inline void single_paths(Point at, Point to, bool no_final_e, std::string& word, std::vector<std::string>& out,
                         NodeBudget& budget) {
    budget.tick();
    if (at == to) {
        if (!(no_final_e && !word.empty() && word.back() == 'E')) out.push_back(word);
        return;
    }
    const char letters[] = {'N', 'D', 'E'};
    for (char s : letters) {
        Point next{at.x + (s != 'N'), at.y + (s != 'E')};
        if (next.x > to.x || next.y > to.y) continue;
        word.push_back(s);
        single_paths(next, to, no_final_e, word, out, budget);
        word.pop_back();
    }
}

}  // namespace detail

// vertex-disjoint families, ordered lexicographically by path 1's word, then path 2's, ...
inline std::vector<PathFamily> enumerate_path_families(const Partition& mu, Case c, std::size_t limit = no_limit) {
    const std::size_t n = mu.length();
    NodeBudget budget("enumerate_path_families");
    std::vector<std::vector<LatticePath>> options(n);
    for (std::size_t j = 1; j <= n; ++j) {
        std::vector<std::string> words;
        std::string w;
        detail::single_paths(path_start(j), path_end(mu, c, j), c == Case::two, w, words, budget);
        for (auto& s : words) options[j - 1].push_back({path_start(j), s});
    }

    std::vector<PathFamily> out;
    if (limit == 0) return out;
    PathFamily cur{c, mu, {}};
    std::set<Point> used;
    std::function<bool(std::size_t)> rec = [&](std::size_t j) {
        budget.tick();
        if (j == n) {
            out.push_back(cur);
            return out.size() < limit;
        }
        for (const LatticePath& p : options[j]) {
            auto vs = p.vertices();
            bool clash = false;
            for (const Point& v : vs) clash = clash || used.count(v);
            if (clash) continue;
            used.insert(vs.begin(), vs.end());
            cur.paths.push_back(p);
            bool go = rec(j + 1);
            cur.paths.pop_back();
            for (const Point& v : vs) used.erase(v);
            if (!go) return false;
        }
        return true;
    };
    rec(0);
    return out;
}

// Bottom-right k x k block: entries X(k-2i+j, n-j-1), X = D (Case 1) or H (Case 2),
// both with the polynomial extension in the second argument.
inline Matrix d_submatrix(long k, const Rat& n, Case c) {
    if (k < 0) throw DomainError("d_submatrix needs k >= 0");
    if (c == Case::two && !is_integer(n)) throw DomainError("d_submatrix: Case 2 needs integer n, got " + n.get_str());
    Matrix m(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
    for (long i = 0; i < k; ++i) {
        for (long j = 0; j < k; ++j) {
            long a = k - 2 * i + j;
            Rat b = n - j - 1;
            m(i, j) = c == Case::one ? delannoy_D(a, b) : delannoy_H_poly(a, b);
        }
    }
    return m;
}

// the same block in the indexing X(2j-i, i+n-k-1), 1-based: i -> k-j, j -> k-i
inline Matrix first_indexing_view(const Matrix& m) {
    if (!m.square()) throw DimensionError("first_indexing_view of a non-square matrix");
    const std::size_t k = m.rows();
    Matrix v(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) v(i, j) = m(k - 1 - j, k - 1 - i);
    return v;
}

}  // namespace aztec
