#pragma once

// String tilings of the discrete torus Z_{k+1}^2: a string here is a row or
// column minus one point. Covers of the torus minus a hole are the 2-D
// ingredient every higher-dimensional construction slices from.

#include <algorithm>
#include <optional>
#include <vector>

#include "punctile/lattice.hpp"
#include "punctile/solver.hpp"

namespace punctile {

struct not_an_sdr_hole : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Point of Z_{k+1}^2. x is the first (horizontal) coordinate, y the second
/// (vertical); a row has fixed y, a column fixed x.
struct Point2 {
    int x = 0;
    int y = 0;
    friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const Point2& a, const Point2& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
};

enum class LineDir { row, column };

/// A row or column of Z_{k+1}^2 minus one of its points; covers k cells.
struct StringPlacement {
    LineDir dir = LineDir::row;
    int line = 0;     // y for a row, x for a column
    Point2 removed;   // must lie on the line

    std::vector<Point2> cells(int k) const {
        std::vector<Point2> out;
        out.reserve(k);
        for (int i = 0; i <= k; ++i) {
            Point2 p = dir == LineDir::row ? Point2{i, line} : Point2{line, i};
            if (!(p == removed)) out.push_back(p);
        }
        return out;
    }
};

/// Strings covering Z_{k+1}^2 minus {x}: one string per column, each missing
/// its point in row x.y, plus the row through x minus x itself. k+2 strings.
inline std::vector<StringPlacement> tile_torus_minus_point(int k, Point2 x) {
    if (k < 1) throw std::invalid_argument("tile_torus_minus_point: k must be >= 1");
    x = Point2{mod(x.x, k + 1), mod(x.y, k + 1)};
    std::vector<StringPlacement> out;
    out.reserve(k + 2);
    for (int c = 0; c <= k; ++c)
        out.push_back(StringPlacement{LineDir::column, c, Point2{c, x.y}});
    out.push_back(StringPlacement{LineDir::row, x.y, x});
    return out;
}

namespace detail {
// The line index -> hole point map when the hole has one point per column
// (resp. per row); nullopt otherwise.
inline std::optional<std::vector<Point2>> sdr_by(LineDir dir, int k,
                                                 const std::vector<Point2>& hole) {
    std::vector<Point2> at(k + 1);
    std::vector<int> count(k + 1, 0);
    for (const Point2& p : hole) {
        int line = dir == LineDir::column ? p.x : p.y;
        if (line < 0 || line > k) return std::nullopt;
        if (++count[line] > 1) return std::nullopt;
        at[line] = p;
    }
    for (int c : count)
        if (c != 1) return std::nullopt;
    return at;
}
}  // namespace detail

/// Cover of Z_{k+1}^2 minus an SDR hole (one point per row or per column):
/// k+1 strings, one per line, each missing the hole's point on that line.
/// Columns are preferred when the hole is an SDR both ways.
inline std::vector<StringPlacement> sdr_hole_cover(int k, const std::vector<Point2>& hole) {
    if (auto at = detail::sdr_by(LineDir::column, k, hole)) {
        std::vector<StringPlacement> out;
        for (int c = 0; c <= k; ++c) out.push_back(StringPlacement{LineDir::column, c, (*at)[c]});
        return out;
    }
    if (auto at = detail::sdr_by(LineDir::row, k, hole)) {
        std::vector<StringPlacement> out;
        for (int r = 0; r <= k; ++r) out.push_back(StringPlacement{LineDir::row, r, (*at)[r]});
        return out;
    }
    throw not_an_sdr_hole("hole has neither one point per row nor one point per column");
}

struct StringInstance {
    ExactCoverInstance cover;
    std::vector<StringPlacement> strings;  // provenance, parallel to cover.pieces
    TorusShape shape;                      // (k+1, k+1); rank = x*(k+1)+y
};

/// Exact-cover instance over Z_{k+1}^2 minus `removed`, with every string
/// whose cells avoid the removed points as a piece.
inline StringInstance build_string_instance(int k, const std::vector<Point2>& removed) {
    if (k < 1) throw std::invalid_argument("build_string_instance: k must be >= 1");
    StringInstance out;
    out.shape = TorusShape{{k + 1, k + 1}};
    std::vector<bool> gone(out.shape.cell_count(), false);
    for (const Point2& p : removed) gone[out.shape.rank({p.x, p.y})] = true;
    for (Cell c = 0; c < out.shape.cell_count(); ++c)
        if (!gone[c]) out.cover.universe.push_back(c);
    if (out.cover.universe.size() % k != 0)
        out.cover.warnings.push_back("universe size not divisible by k; instance is infeasible");

    auto add = [&](StringPlacement sp) {
        std::vector<Cell> cells;
        for (const Point2& p : sp.cells(k)) {
            Cell c = out.shape.rank({p.x, p.y});
            if (gone[c]) return;
            cells.push_back(c);
        }
        std::sort(cells.begin(), cells.end());
        out.cover.pieces.push_back(std::move(cells));
        out.strings.push_back(sp);
    };
    for (int line = 0; line <= k; ++line)
        for (int i = 0; i <= k; ++i) {
            add(StringPlacement{LineDir::row, line, Point2{i, line}});
            add(StringPlacement{LineDir::column, line, Point2{line, i}});
        }
    return out;
}

struct HoleCertificate {
    bool hole = false;
    std::vector<StringPlacement> strings;  // exact cover of the complement when hole
};

/// Decides whether Z_{k+1}^2 \ X can be tiled with strings, with the cover as
/// certificate. Exhaustive for these instance sizes, so `false` is a proof.
inline HoleCertificate is_hole(int k, const std::vector<Point2>& points) {
    StringInstance inst = build_string_instance(k, points);
    if (!inst.cover.warnings.empty()) return {};
    SolveResult r = solve(inst.cover);
    if (r.status == SolveStatus::budget_exhausted)
        throw std::runtime_error("is_hole: node budget exhausted");
    HoleCertificate cert;
    cert.hole = r.status == SolveStatus::found;
    for (int idx : r.selected) cert.strings.push_back(inst.strings[idx]);
    return cert;
}

/// Lifts a quotient string to tile placements on a torus whose axes
/// `axis_x`, `axis_y` carry the two coordinates (extents multiples of
/// 2(k+1)). Each congruent line contributes extent/(2(k+1)) placements.
/// `base` fixes the remaining coordinates.
inline std::vector<Placement> lift_string(const StringPlacement& sp, int k,
                                          const TorusShape& shape, int axis_x, int axis_y,
                                          Coord base) {
    std::vector<Placement> out;
    if (sp.dir == LineDir::row) {
        for (int y = mod(sp.line, k + 1); y < shape.dims[axis_y]; y += k + 1) {
            Coord b = base;
            b[axis_y] = y;
            auto part = string_line_placements(axis_x, std::move(b), mod(sp.removed.x, k + 1),
                                               shape.dims[axis_x], k);
            out.insert(out.end(), part.begin(), part.end());
        }
    } else {
        for (int x = mod(sp.line, k + 1); x < shape.dims[axis_x]; x += k + 1) {
            Coord b = base;
            b[axis_x] = x;
            auto part = string_line_placements(axis_y, std::move(b), mod(sp.removed.y, k + 1),
                                               shape.dims[axis_y], k);
            out.insert(out.end(), part.begin(), part.end());
        }
    }
    return out;
}

}  // namespace punctile
