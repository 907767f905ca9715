#pragma once

#include <string>
#include <vector>

#include "kinds.hpp"
#include "partition.hpp"
#include "sequences.hpp"

namespace aztec {

// ordered 1 < 1~ < 2 < 2~ < ...
struct Entry {
    int value = 1;
    bool barred = false;

    int rank() const { return 2 * value - 1 + (barred ? 1 : 0); }

    std::string str() const { return std::to_string(value) + (barred ? "~" : ""); }

    friend bool operator==(const Entry&, const Entry&) = default;
    friend auto operator<=>(const Entry& a, const Entry& b) { return a.rank() <=> b.rank(); }
};

inline Entry parse_entry(const std::string& s) {
    bool barred = !s.empty() && s.back() == '~';
    std::string digits = barred ? s.substr(0, s.size() - 1) : s;
    if (digits.empty() || digits.size() > 6 || digits.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("malformed tableau entry \"" + s + "\"");
    return {std::stoi(digits), barred};
}

// Type 1 entries go up to n, type 2 up to n~, where n is the shape's length.
// Type numbers coincide with case numbers.
struct Tableau {
    Case type = Case::one;
    Partition shape;
    std::vector<std::vector<Entry>> rows;

    std::size_t n() const { return shape.length(); }

    friend bool operator==(const Tableau&, const Tableau&) = default;
};

inline bool validate_tableau(const Tableau& t) {
    const std::size_t n = t.n();
    if (t.rows.size() != n) return false;
    const int max_rank = t.type == Case::one ? 2 * static_cast<int>(n) - 1 : 2 * static_cast<int>(n);
    for (std::size_t r = 0; r < n; ++r) {
        const auto& row = t.rows[r];
        if (row.size() != static_cast<std::size_t>(t.shape[r])) return false;
        for (std::size_t c = 0; c < row.size(); ++c) {
            const Entry& e = row[c];
            if (e.value < 1 || e.rank() > max_rank) return false;
            if (e.value < static_cast<int>(r) + 1) return false;
            if (c > 0) {
                const Entry& left = row[c - 1];
                if (left > e) return false;
                if (left == e && e.barred) return false;
            }
            if (r > 0) {
                const Entry& up = t.rows[r - 1][c];
                if (up > e) return false;
                if (up == e && !e.barred) return false;
            }
        }
    }
    return true;
}

// entries i fill lambda^(2i-1)/lambda^(2i-2), entries i~ fill lambda^(2i)/lambda^(2i-1)
inline Tableau sequence_to_tableau(const PartitionSequence& s) {
    if (!validate_sequence(s)) throw ContractViolation("sequence_to_tableau: invalid sequence");
    Tableau t{s.kind, s.mu, std::vector<std::vector<Entry>>(s.n())};
    for (std::size_t i = 1; i < s.chain.size(); ++i) {
        Entry e{static_cast<int>((i + 1) / 2), i % 2 == 0};
        for (std::size_t r = 0; r < s.n(); ++r)
            for (int c = s.chain[i - 1][r]; c < s.chain[i][r]; ++c) t.rows[r].push_back(e);
    }
    return t;
}

// lambda^(m) is the set of cells whose entry has rank <= m
inline PartitionSequence tableau_to_sequence(const Tableau& t) {
    if (!validate_tableau(t)) throw ContractViolation("tableau_to_sequence: invalid tableau");
    PartitionSequence s{t.type, t.shape, {}};
    for (std::size_t m = 0; m < s.ell(); ++m) {
        std::vector<int> parts(t.n(), 0);
        for (std::size_t r = 0; r < t.n(); ++r)
            for (const Entry& e : t.rows[r])
                if (e.rank() <= static_cast<int>(m)) ++parts[r];
        s.chain.emplace_back(std::move(parts));
    }
    return s;
}

inline std::vector<Tableau> enumerate_tableaux(const Partition& mu, Case type, std::size_t limit = no_limit) {
    std::vector<Tableau> out;
    for (const auto& s : enumerate_sequences(mu, type, limit)) out.push_back(sequence_to_tableau(s));
    return out;
}

}  // namespace aztec
