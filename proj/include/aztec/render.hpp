#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "domains.hpp"
#include "errors.hpp"

namespace aztec {

enum class Format { ascii, svg };

inline Format parse_format(const std::string& s) {
    if (s == "ascii") return Format::ascii;
    if (s == "svg") return Format::svg;
    throw UsageError("unknown render format \"" + s + "\" (expected ascii or svg)");
}

// Cell (d,p) sits at column x = p, row y = p - d (y grows northward).
//
// ASCII glyphs, one pair per domino (north/west cell first):
//   horizontal on an even diagonal  <>     horizontal on an odd diagonal  []
//   vertical on an even diagonal    ^ v    vertical on an odd diagonal    A V
// A bare domain shows '.' for cells on even diagonals and '#' on odd ones.
namespace detail {

struct Canvas {
    long xmax = -1, ymin = 0, ymax = -1;

    explicit Canvas(const Domain& d) {
        bool first = true;
        for (const Cell& c : d.cells()) {
            long y = c.p - c.d;
            xmax = std::max(xmax, c.p);
            ymin = first ? y : std::min(ymin, y);
            ymax = first ? y : std::max(ymax, y);
            first = false;
        }
    }
    long width() const { return xmax + 1; }
    long height() const { return ymax >= ymin ? ymax - ymin + 1 : 0; }
};

inline std::string ascii(const Domain& dom, const std::map<Cell, char>& glyph) {
    Canvas cv(dom);
    std::ostringstream out;
    for (long y = cv.ymax; y >= cv.ymin && cv.height() > 0; --y) {
        std::string line;
        for (long x = 0; x <= cv.xmax; ++x) {
            auto it = glyph.find({x - y, x});
            line += it == glyph.end() ? ' ' : it->second;
        }
        line.erase(line.find_last_not_of(' ') + 1);
        out << line << '\n';
    }
    return out.str();
}

constexpr int unit = 24;
constexpr int margin = 12;

inline void svg_open(std::ostringstream& out, const Canvas& cv) {
    long w = cv.width() * unit + 2 * margin, h = cv.height() * unit + 2 * margin;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
}

inline long sx(long x) { return margin + x * unit; }
inline long sy(const Canvas& cv, long y) { return margin + (cv.ymax - y) * unit; }

inline void svg_cells(std::ostringstream& out, const Canvas& cv, const Domain& dom, bool stroke) {
    for (const Cell& c : dom.cells()) {
        long x = c.p, y = c.p - c.d;
        out << "  <rect x=\"" << sx(x) << "\" y=\"" << sy(cv, y) << "\" width=\"" << unit << "\" height=\"" << unit
            << "\" fill=\"" << (c.d % 2 == 0 ? "#eeeeee" : "#999999") << '"';
        if (stroke) out << " stroke=\"#444444\" stroke-width=\"1\"";
        out << "/>\n";
    }
}

}  // namespace detail

inline std::string render(const Domain& dom, Format f) {
    if (f == Format::ascii) {
        std::map<Cell, char> glyph;
        for (const Cell& c : dom.cells()) glyph[c] = c.d % 2 == 0 ? '.' : '#';
        return detail::ascii(dom, glyph);
    }
    detail::Canvas cv(dom);
    std::ostringstream out;
    detail::svg_open(out, cv);
    detail::svg_cells(out, cv, dom, true);
    out << "</svg>\n";
    return out.str();
}

// marks: draw each cell's hole (open circle) or particle (dot)
inline std::string render(const Tiling& t, Format f, bool marks = false) {
    if (f == Format::ascii) {
        std::map<Cell, char> glyph;
        for (const Domino& x : t.dominoes) {
            bool h = x.orient == Orientation::horizontal;
            const char* pair = h ? (x.even() ? "<>" : "[]") : (x.even() ? "^v" : "AV");
            glyph[x.start] = pair[0];
            glyph[x.other()] = pair[1];
        }
        return detail::ascii(t.domain, glyph);
    }
    detail::Canvas cv(t.domain);
    std::ostringstream out;
    detail::svg_open(out, cv);
    detail::svg_cells(out, cv, t.domain, false);
    for (const Domino& x : t.dominoes) {
        bool h = x.orient == Orientation::horizontal;
        long left = x.start.p, top = x.start.p - x.start.d;
        out << "  <rect x=\"" << detail::sx(left) << "\" y=\"" << detail::sy(cv, top) << "\" width=\""
            << (h ? 2 : 1) * detail::unit << "\" height=\"" << (h ? 1 : 2) * detail::unit
            << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
    }
    if (marks) {
        auto rows = tiling_marks(t);
        for (long d = 0; d <= t.domain.last(); ++d) {
            for (long p = 0; p < t.domain.length(d); ++p) {
                if (!t.domain.contains({d, p})) continue;
                bool hole = rows[d][p] == Mark::hole;
                out << "  <circle cx=\"" << detail::sx(p) + detail::unit / 2 << "\" cy=\""
                    << detail::sy(cv, p - d) + detail::unit / 2 << "\" r=\"4\" fill=\""
                    << (hole ? "#ffffff" : "#000000") << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
            }
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace aztec
