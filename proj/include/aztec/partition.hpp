#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"

namespace aztec {

// Weakly decreasing list of non-negative parts. The stored length is the
// declared length n; trailing zeros are kept but ignored by ==.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw DomainError("partition parts must be non-negative");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return nonzero() == 0; }

    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    int first() const { return (*this)[0]; }

    std::size_t nonzero() const {
        return static_cast<std::size_t>(std::count_if(parts_.begin(), parts_.end(), [](int v) { return v > 0; }));
    }
    long size() const {
        long s = 0;
        for (int v : parts_) s += v;
        return s;
    }

    Partition padded(std::size_t n) const {
        if (nonzero() > n) throw DomainError("partition has more than " + std::to_string(n) + " nonzero parts");
        std::vector<int> p(n, 0);
        for (std::size_t i = 0; i < n; ++i) p[i] = (*this)[i];
        return Partition(std::move(p));
    }
    Partition trimmed() const { return padded(nonzero()); }

    bool contained_in(const Partition& o) const {
        for (std::size_t i = 0; i < std::max(length(), o.length()); ++i)
            if ((*this)[i] > o[i]) return false;
        return true;
    }

    friend bool operator==(const Partition& a, const Partition& b) {
        for (std::size_t i = 0; i < std::max(a.length(), b.length()); ++i)
            if (a[i] != b[i]) return false;
        return true;
    }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        for (std::size_t i = 0; i < std::max(a.length(), b.length()); ++i)
            if (auto c = a[i] <=> b[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

private:
    std::vector<int> parts_;
};

inline std::string format_partition(const Partition& p) {
    std::string s;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    return s;
}

// "3,2,1" -> (3,2,1); "" -> ()
inline Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    if (text.find_first_not_of(" \t") == std::string::npos) return {};
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        tok.erase(0, tok.find_first_not_of(" \t"));
        tok.erase(tok.find_last_not_of(" \t") + 1);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 6)
            throw UsageError("malformed partition \"" + text + "\"");
        parts.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    try {
        return Partition(std::move(parts));
    } catch (const DomainError& e) {
        throw UsageError("malformed partition \"" + text + "\": " + e.what());
    }
}

inline Partition conjugate(const Partition& p) {
    std::vector<int> c(static_cast<std::size_t>(p.first()), 0);
    for (int v : p.parts())
        for (int i = 0; i < v; ++i) ++c[i];
    return Partition(std::move(c));
}

// outer/inner has at most one box in each column
inline bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
    if (!inner.contained_in(outer)) return false;
    for (std::size_t i = 0; i < std::max(outer.length(), inner.length()); ++i)
        if (outer[i + 1] > inner[i]) return false;
    return true;
}

// outer/inner has at most one box in each row
inline bool is_vertical_strip(const Partition& outer, const Partition& inner) {
    if (!inner.contained_in(outer)) return false;
    for (std::size_t i = 0; i < std::max(outer.length(), inner.length()); ++i)
        if (outer[i] - inner[i] > 1) return false;
    return true;
}

enum class Mark : char { hole = 'H', particle = 'P' };

// A window of the bi-infinite hole/particle word: particles extend to the
// left of the window, holes to the right. first_site is the charge-0 site
// index of the window's first cell.
struct MayaWord {
    long first_site = 0;
    std::vector<Mark> marks;

    std::string str() const {
        std::string s;
        for (Mark m : marks) s += static_cast<char>(m);
        return s;
    }
};

// j-th part = number of holes before the j-th-to-last particle
inline Partition decode_marks(const std::vector<Mark>& marks) {
    std::vector<int> parts;
    int holes = 0;
    for (Mark m : marks) {
        if (m == Mark::hole)
            ++holes;
        else
            parts.push_back(holes);
    }
    std::reverse(parts.begin(), parts.end());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

inline Partition from_maya(const MayaWord& w) { return decode_marks(w.marks); }

inline MayaWord to_maya(const Partition& p, long window_length) {
    if (window_length < 0) throw EncodingError("negative Maya window length");
    MayaWord w;
    w.first_site = -((window_length + 1) / 2 - 1);
    long last_site = w.first_site + window_length - 1;
    long len = static_cast<long>(p.nonzero());
    if (len > 0 && (w.first_site > -len || last_site < p.first() - 1))
        throw EncodingError("Maya window of length " + std::to_string(window_length) + " is too short for " +
                            format_partition(p));
    std::vector<long> sites;
    for (long j = 1; j <= len; ++j) sites.push_back(p[j - 1] - j);
    for (long s = w.first_site; s <= last_site; ++s) {
        bool particle = s < -len || std::find(sites.begin(), sites.end(), s) != sites.end();
        w.marks.push_back(particle ? Mark::particle : Mark::hole);
    }
    return w;
}

// The window that holds exactly `particles` particles and `holes` holes: the
// diagonal reading used by the tiling bijection.
inline std::vector<Mark> anchored_marks(const Partition& p, std::size_t particles, int holes) {
    if (p.nonzero() > particles || p.first() > holes)
        throw EncodingError("partition " + format_partition(p) + " does not fit " + std::to_string(particles) +
                            " particles and " + std::to_string(holes) + " holes");
    std::vector<Mark> marks;
    for (std::size_t j = particles; j >= 1; --j) {
        marks.insert(marks.end(), static_cast<std::size_t>(p[j - 1] - p[j]), Mark::hole);
        marks.push_back(Mark::particle);
    }
    marks.insert(marks.end(), static_cast<std::size_t>(holes - p.first()), Mark::hole);
    return marks;
}

}  // namespace aztec
