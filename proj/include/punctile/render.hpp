#pragma once

// ASCII rendering of a 2-D slice of a tiling: placement ids cycle through a
// 62-glyph alphabet, uncovered cells render '.', doubly covered cells '#'.
// Diagnostic only; the verifier is authoritative.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "punctile/lattice.hpp"

namespace punctile {

inline constexpr std::string_view glyph_alphabet =
    "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";

/// Renders the slice obtained by fixing all but two axes. `fixed` pairs
/// (axis, index) must pin exactly dim-2 distinct axes; the first free axis
/// runs horizontally, the second vertically (top to bottom).
inline std::string render_slice(const PeriodicTiling& t,
                                const std::vector<std::pair<int, int>>& fixed) {
    const int d = t.shape.dim();
    std::vector<int> fixed_at(d, -1);
    for (auto [axis, index] : fixed) {
        if (axis < 0 || axis >= d) throw std::invalid_argument("render_slice: axis out of range");
        if (fixed_at[axis] >= 0)
            throw std::invalid_argument("render_slice: axis fixed twice");
        if (index < 0 || index >= t.shape.dims[axis])
            throw std::invalid_argument("render_slice: slice index out of range");
        fixed_at[axis] = index;
    }
    std::vector<int> free_axes;
    for (int a = 0; a < d; ++a)
        if (fixed_at[a] < 0) free_axes.push_back(a);
    if (free_axes.size() != 2)
        throw std::invalid_argument("render_slice: need exactly dim-2 fixed axes, got " +
                                    std::to_string(fixed.size()));

    const int ax = free_axes[0], ay = free_axes[1];
    const int w = t.shape.dims[ax], h = t.shape.dims[ay];
    std::vector<std::vector<char>> grid(h, std::vector<char>(w, '.'));

    std::vector<Cell> cells;
    Coord coord;
    for (std::size_t id = 0; id < t.placements.size(); ++id) {
        cells.clear();
        detail::append_placement_cells(t.placements[id], t.shape, t.k, cells);
        for (Cell c : cells) {
            coord = t.shape.unrank(c);
            bool onslice = true;
            for (int a = 0; a < d; ++a)
                if (fixed_at[a] >= 0 && coord[a] != fixed_at[a]) onslice = false;
            if (!onslice) continue;
            char& g = grid[coord[ay]][coord[ax]];
            g = g == '.' ? glyph_alphabet[id % glyph_alphabet.size()] : '#';
        }
    }

    std::string out;
    out.reserve(static_cast<std::size_t>(h) * (w + 1));
    for (int y = 0; y < h; ++y) {
        out.append(grid[y].begin(), grid[y].end());
        out.push_back('\n');
    }
    return out;
}

}  // namespace punctile
