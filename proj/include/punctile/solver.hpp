#pragma once

// Independent exact-cover engine (Algorithm X over dancing links) used as an
// oracle for small instances and as an explorer for tori where no
// construction is known.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "punctile/lattice.hpp"

namespace punctile {

/// Universe cells plus candidate pieces. Pieces are cell subsets of the
/// universe; the same cell set may appear more than once (wrapped placements
/// coincide on tiny tori) and is merged at search time.
struct ExactCoverInstance {
    std::vector<Cell> universe;               // sorted, distinct
    std::vector<std::vector<Cell>> pieces;    // each sorted
    std::vector<std::string> warnings;        // e.g. cell count not divisible by piece size
};

enum class SolveStatus {
    found,             // `selected` is an exact cover
    none,              // search space exhausted: no cover exists for this instance
    budget_exhausted,  // inconclusive, never to be confused with none
};

struct SolveResult {
    SolveStatus status = SolveStatus::none;
    std::vector<int> selected;  // piece indices; canonical representative when duplicates merged
    std::uint64_t nodes = 0;
};

using ProgressFn = std::function<void(std::uint64_t nodes)>;

namespace detail {

// Knuth-style dancing links matrix. Column order follows the sorted universe,
// so the min-size heuristic breaks ties by lowest cell id; row order follows
// piece order, so candidate iteration is deterministic.
class DlxMatrix {
public:
    explicit DlxMatrix(const ExactCoverInstance& inst) {
        std::map<Cell, int> col_of;
        const int ncols = static_cast<int>(inst.universe.size());
        for (int i = 0; i < ncols; ++i) col_of[inst.universe[i]] = i;

        // node 0 is the root header; 1..ncols the column headers
        nodes_.resize(ncols + 1);
        size_.assign(ncols + 1, 0);
        for (int i = 0; i <= ncols; ++i) {
            nodes_[i].left = (i + ncols) % (ncols + 1);
            nodes_[i].right = (i + 1) % (ncols + 1);
            nodes_[i].up = nodes_[i].down = i;
            nodes_[i].col = i;
        }

        std::map<std::vector<Cell>, int> seen;
        for (std::size_t pi = 0; pi < inst.pieces.size(); ++pi) {
            const auto& piece = inst.pieces[pi];
            if (piece.empty()) continue;
            auto [it, fresh] = seen.emplace(piece, static_cast<int>(pi));
            if (!fresh) continue;  // identical cell set already present
            int first = -1, prev = -1;
            for (Cell cell : piece) {
                int col = col_of.at(cell) + 1;
                int n = static_cast<int>(nodes_.size());
                nodes_.push_back(Node{});
                nodes_[n].col = col;
                nodes_[n].row = static_cast<int>(pi);
                nodes_[n].up = nodes_[col].up;
                nodes_[n].down = col;
                nodes_[nodes_[col].up].down = n;
                nodes_[col].up = n;
                ++size_[col];
                if (first < 0) {
                    first = prev = n;
                    nodes_[n].left = nodes_[n].right = n;
                } else {
                    nodes_[n].left = prev;
                    nodes_[n].right = first;
                    nodes_[prev].right = n;
                    nodes_[first].left = n;
                    prev = n;
                }
            }
        }
    }

    // Runs Algorithm X. `on_solution` returns false to stop the search.
    // Returns true if the space was exhausted, false if stopped early
    // (solution cap or node budget).
    bool search(std::uint64_t budget, std::uint64_t& nodes,
                const std::function<bool(const std::vector<int>&)>& on_solution,
                const ProgressFn& progress) {
        if (nodes >= budget) return false;
        int col = pick_column();
        if (col == 0) return on_solution(picked_);
        cover(col);
        bool exhausted = true;
        for (int r = nodes_[col].down; r != col; r = nodes_[r].down) {
            ++nodes;
            if ((nodes & 0xffffff) == 0 && progress) progress(nodes);
            if (nodes >= budget) { exhausted = false; break; }
            picked_.push_back(nodes_[r].row);
            for (int j = nodes_[r].right; j != r; j = nodes_[j].right) cover(nodes_[j].col);
            exhausted = search(budget, nodes, on_solution, progress);
            for (int j = nodes_[r].left; j != r; j = nodes_[j].left) uncover(nodes_[j].col);
            picked_.pop_back();
            if (!exhausted) break;
        }
        uncover(col);
        return exhausted;
    }

private:
    struct Node {
        int left = 0, right = 0, up = 0, down = 0;
        int col = 0;
        int row = -1;
    };

    int pick_column() const {
        int best = 0, best_size = INT32_MAX;
        for (int c = nodes_[0].right; c != 0; c = nodes_[c].right) {
            if (size_[c] < best_size) {
                best = c;
                best_size = size_[c];
                if (best_size == 0) break;
            }
        }
        return best;
    }

    void cover(int col) {
        nodes_[nodes_[col].right].left = nodes_[col].left;
        nodes_[nodes_[col].left].right = nodes_[col].right;
        for (int i = nodes_[col].down; i != col; i = nodes_[i].down) {
            for (int j = nodes_[i].right; j != i; j = nodes_[j].right) {
                nodes_[nodes_[j].down].up = nodes_[j].up;
                nodes_[nodes_[j].up].down = nodes_[j].down;
                --size_[nodes_[j].col];
            }
        }
    }

    void uncover(int col) {
        for (int i = nodes_[col].up; i != col; i = nodes_[i].up) {
            for (int j = nodes_[i].left; j != i; j = nodes_[j].left) {
                nodes_[nodes_[j].down].up = j;
                nodes_[nodes_[j].up].down = j;
                ++size_[nodes_[j].col];
            }
        }
        nodes_[nodes_[col].right].left = col;
        nodes_[nodes_[col].left].right = col;
    }

    std::vector<Node> nodes_;
    std::vector<int> size_;
    std::vector<int> picked_;
};

}  // namespace detail

constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

/// First exact cover within the node budget. A `none` result is an
/// exhaustive proof that no cover of this finite instance exists.
inline SolveResult solve(const ExactCoverInstance& inst,
                         std::uint64_t node_budget = kDefaultNodeBudget,
                         const ProgressFn& progress = {}) {
    detail::DlxMatrix m(inst);
    SolveResult result;
    bool found = false;
    bool exhausted = m.search(
        node_budget, result.nodes,
        [&](const std::vector<int>& sel) {
            result.selected = sel;
            std::sort(result.selected.begin(), result.selected.end());
            found = true;
            return false;  // stop at the first solution
        },
        progress);
    result.status = found            ? SolveStatus::found
                    : exhausted      ? SolveStatus::none
                                     : SolveStatus::budget_exhausted;
    return result;
}

/// Number of exact covers, truncated at `cap`. Pieces with identical cell
/// sets count once. Runs to exhaustion (no node budget): the cap is the
/// runtime bound.
inline std::uint64_t count_solutions(const ExactCoverInstance& inst, std::uint64_t cap) {
    if (cap < 1) throw std::invalid_argument("count_solutions: cap must be >= 1");
    detail::DlxMatrix m(inst);
    std::uint64_t count = 0, nodes = 0;
    m.search(
        UINT64_MAX, nodes,
        [&](const std::vector<int>&) {
            ++count;
            return count < cap;
        },
        {});
    return count;
}

/// Region for instance building: a torus (wrapping) or a box (no wrap).
struct Region {
    bool torus = true;
    std::vector<int> dims;
};

struct TileInstance {
    ExactCoverInstance cover;
    std::vector<Placement> placements;  // provenance, parallel to cover.pieces
    TorusShape shape;                   // cell ranking shape (box cells rank the same way)
};

/// One piece per (axis, origin) pair. Boxes admit only fully contained
/// placements; tori admit every origin but drop placements that wrap onto
/// themselves.
inline TileInstance build_tile_instance(int k, const Region& region) {
    if (k < 1) throw std::invalid_argument("build_tile_instance: k must be >= 1");
    TorusShape shape{region.dims};
    if (!shape.valid()) throw std::invalid_argument("build_tile_instance: empty region");

    TileInstance out;
    out.shape = shape;
    const std::uint64_t n = shape.cell_count();
    out.cover.universe.resize(n);
    for (std::uint64_t c = 0; c < n; ++c) out.cover.universe[c] = static_cast<Cell>(c);
    if (n % (2 * k) != 0)
        out.cover.warnings.push_back("cell count " + std::to_string(n) +
                                     " is not divisible by 2k; instance is infeasible");

    const int d = shape.dim();
    const int span = 2 * k + 1;
    Coord origin(d, 0);
    auto emit_origins = [&](auto&& self, int axis, int i) -> void {
        if (i == d) {
            Placement p{axis, origin};
            std::vector<Cell> cells;
            detail::append_placement_cells(p, shape, k, cells);
            std::sort(cells.begin(), cells.end());
            if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
                return;  // degenerate under wrap
            out.cover.pieces.push_back(std::move(cells));
            out.placements.push_back(std::move(p));
            return;
        }
        int hi = shape.dims[i];
        if (!region.torus && i == axis) hi = shape.dims[i] - span + 1;
        for (int v = 0; v < hi; ++v) {
            origin[i] = v;
            self(self, axis, i + 1);
        }
        origin[i] = 0;
    };
    for (int axis = 0; axis < d; ++axis) {
        if (!region.torus && shape.dims[axis] < span) continue;
        emit_origins(emit_origins, axis, 0);
    }
    return out;
}

}  // namespace punctile
