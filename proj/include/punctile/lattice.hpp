#pragma once

// Coordinate arithmetic on quotient tori, the punctured-interval tile and its
// placements, and the exact-cover verifier for periodic tilings.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace punctile {

using Cell = std::uint32_t;
using Coord = std::vector<int>;

// A placement wraps onto itself: two of its cells coincide under the quotient.
struct degenerate_placement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int mod(long v, int m) {
    long r = v % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

/// The tile of half-length k: offsets {0,...,2k} \ {k} relative to its start.
struct PuncturedTile {
    int k;
    std::vector<int> cells;
};

inline std::vector<int> tile_cells(int k) {
    if (k < 1) throw std::invalid_argument("tile_cells: k must be >= 1");
    std::vector<int> out;
    out.reserve(2 * k);
    for (int t = 0; t <= 2 * k; ++t)
        if (t != k) out.push_back(t);
    return out;
}

inline PuncturedTile punctured_tile(int k) { return PuncturedTile{k, tile_cells(k)}; }

/// Finite quotient box with wraparound. Cell ids are the row-major rank of
/// the coordinates reduced into [0, dims[i]).
struct TorusShape {
    std::vector<int> dims;

    int dim() const { return static_cast<int>(dims.size()); }

    std::uint64_t cell_count() const {
        std::uint64_t n = 1;
        for (int p : dims) n *= static_cast<std::uint64_t>(p);
        return n;
    }

    Cell rank(const Coord& c) const {
        std::uint64_t r = 0;
        for (std::size_t i = 0; i < dims.size(); ++i)
            r = r * dims[i] + mod(c[i], dims[i]);
        return static_cast<Cell>(r);
    }

    Coord unrank(Cell cell) const {
        Coord c(dims.size());
        std::uint64_t r = cell;
        for (std::size_t i = dims.size(); i-- > 0;) {
            c[i] = static_cast<int>(r % dims[i]);
            r /= dims[i];
        }
        return c;
    }

    bool valid() const {
        if (dims.empty()) return false;
        for (int p : dims)
            if (p < 1) return false;
        return true;
    }
};

/// One axis-aligned copy of the tile: begins at `origin` and runs along
/// `axis`, covering origin + t*e_axis for t in tile_cells(k).
struct Placement {
    int axis = 0;
    Coord origin;

    friend bool operator==(const Placement& a, const Placement& b) {
        return a.axis == b.axis && a.origin == b.origin;
    }
    friend bool operator<(const Placement& a, const Placement& b) {
        if (a.axis != b.axis) return a.axis < b.axis;
        return a.origin < b.origin;
    }
};

namespace detail {
// Wrapped cells without the distinctness check; duplicates are kept so a
// degenerate placement shows up as an over-covered cell in the verifier.
inline void append_placement_cells(const Placement& p, const TorusShape& shape, int k,
                                   std::vector<Cell>& out) {
    Coord c = p.origin;
    const int extent = shape.dims[p.axis];
    const int base = mod(p.origin[p.axis], extent);
    for (int t = 0; t <= 2 * k; ++t) {
        if (t == k) continue;
        c[p.axis] = (base + t) % extent;
        out.push_back(shape.rank(c));
    }
}
}  // namespace detail

/// The 2k wrapped torus cells covered by a placement.
/// Throws degenerate_placement if two of them coincide.
inline std::vector<Cell> placement_cells(const Placement& p, const TorusShape& shape, int k) {
    if (p.axis < 0 || p.axis >= shape.dim())
        throw std::invalid_argument("placement_cells: axis out of range");
    if (static_cast<int>(p.origin.size()) != shape.dim())
        throw std::invalid_argument("placement_cells: origin dimension mismatch");
    std::vector<Cell> cells;
    cells.reserve(2 * k);
    detail::append_placement_cells(p, shape, k, cells);
    std::vector<Cell> sorted = cells;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
            throw degenerate_placement("placement wraps onto itself (torus too small along axis " +
                                       std::to_string(p.axis) + ")");
    return cells;
}

/// A torus shape plus the placements claimed to partition it. A verified
/// value of this type is the machine certificate that the tile tiles the
/// corresponding infinite lattice periodically.
struct PeriodicTiling {
    int k = 0;
    TorusShape shape;
    std::vector<Placement> placements;
};

struct CellIssue {
    Cell cell = 0;
    int multiplicity = 0;
    std::vector<int> placements;  // ids (indices into tiling.placements) covering the cell
};

struct CoverReport {
    bool ok = false;
    std::uint64_t cell_count = 0;
    std::vector<CellIssue> issues;  // every cell with multiplicity != 1

    std::size_t uncovered() const {
        std::size_t n = 0;
        for (const auto& i : issues) n += (i.multiplicity == 0);
        return n;
    }
    std::size_t overcovered() const {
        std::size_t n = 0;
        for (const auto& i : issues) n += (i.multiplicity >= 2);
        return n;
    }
};

/// Exact-cover check: ok iff every torus cell is covered exactly once.
/// Violations are reported as data; nothing throws. A degenerate placement
/// contributes its coinciding cell twice and therefore surfaces as an
/// over-covered cell listing the same placement id twice.
inline CoverReport verify_exact_cover(const PeriodicTiling& t) {
    CoverReport report;
    report.cell_count = t.shape.cell_count();
    std::vector<std::uint16_t> mult(report.cell_count, 0);

    std::vector<Cell> cells;
    for (const auto& p : t.placements) {
        cells.clear();
        detail::append_placement_cells(p, t.shape, t.k, cells);
        for (Cell c : cells) {
            if (mult[c] < 0xffff) ++mult[c];
        }
    }

    std::vector<std::uint32_t> bad_index(report.cell_count, UINT32_MAX);
    for (Cell c = 0; c < report.cell_count; ++c) {
        if (mult[c] != 1) {
            bad_index[c] = static_cast<std::uint32_t>(report.issues.size());
            report.issues.push_back(CellIssue{c, mult[c], {}});
        }
    }
    if (!report.issues.empty()) {
        // second pass: attribute placement ids to the offending cells
        for (std::size_t id = 0; id < t.placements.size(); ++id) {
            cells.clear();
            detail::append_placement_cells(t.placements[id], t.shape, t.k, cells);
            for (Cell c : cells)
                if (bad_index[c] != UINT32_MAX)
                    report.issues[bad_index[c]].placements.push_back(static_cast<int>(id));
        }
    }
    report.ok = report.issues.empty();
    return report;
}

/// Decomposes one torus line minus the points { x ≡ r (mod k+1) } into whole
/// tile copies: extent/(2(k+1)) placements beginning at positions
/// ≡ r+1 (mod 2(k+1)), so each puncture lands on a removed point.
/// `base` supplies the fixed coordinates of the other axes.
inline std::vector<Placement> string_line_placements(int axis, Coord base, int removal_phase,
                                                     int extent, int k) {
    if (k < 1) throw std::invalid_argument("string_line_placements: k must be >= 1");
    if (removal_phase < 0 || removal_phase > k)
        throw std::invalid_argument("string_line_placements: removal phase must be in [0, k+1)");
    const int period = 2 * (k + 1);
    if (extent <= 0 || extent % period != 0)
        throw std::invalid_argument(
            "string_line_placements: extent must be a positive multiple of 2(k+1)");
    std::vector<Placement> out;
    out.reserve(extent / period);
    for (int start = removal_phase + 1; start < extent; start += period) {
        Coord origin = base;
        origin[axis] = start % extent;
        out.push_back(Placement{axis, std::move(origin)});
    }
    return out;
}

}  // namespace punctile
