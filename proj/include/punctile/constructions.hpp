#pragma once

// The three end-to-end constructions, each emitted as a concrete placement
// list on an explicit torus and certified by the exact-cover verifier. No
// periodicity argument is trusted: every ingredient is instantiated and the
// cover is checked cell by cell.
//
//   construct_odd      k odd        torus (2(k+1), 2(k+1), 3k)        d = 3
//   construct_general  any k >= 3   torus (2(k+1), 2(k+1), 6k, 3k)    d = 4
//   construct_mod8     k ≡ 4 mod 8  torus (8(k+1), 8(k+1), 3k)        d = 3

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "punctile/lattice.hpp"
#include "punctile/schedules.hpp"
#include "punctile/torus_strings.hpp"

namespace punctile {

// ---------------------------------------------------------------------------
// odd case
// ---------------------------------------------------------------------------

/// The (k+1)/2 marked triples {(2i,2i),(2i,2i+1),(2i+1,2i+1)} in Z_{k+1}^2.
inline std::vector<TripleSchedule> odd_case_triples(int k) {
    std::vector<TripleSchedule> out;
    for (int i = 0; 2 * i <= k - 1; ++i)
        out.push_back(TripleSchedule{
            k,
            {Coord{2 * i, 2 * i}, Coord{2 * i, 2 * i + 1}, Coord{2 * i + 1, 2 * i + 1}}});
    return out;
}

/// The slice hole X_n of the odd case, straight from its closed form:
/// the diagonal, the {(2i,2i),(2i,2i+1)} pairing, or the
/// {(2i,2i+1),(2i+1,2i+1)} pairing depending on the residue class of n.
inline std::vector<Point2> odd_case_hole(int k, long n) {
    const auto cls = triple_slice_class(k, n);
    std::vector<Point2> hole;
    hole.reserve(k + 1);
    if (cls == std::pair<int, int>{1, 3}) {
        for (int i = 0; i <= k; ++i) hole.push_back(Point2{i, i});
    } else if (cls == std::pair<int, int>{1, 2}) {
        for (int i = 0; 2 * i <= k - 1; ++i) {
            hole.push_back(Point2{2 * i, 2 * i});
            hole.push_back(Point2{2 * i, 2 * i + 1});
        }
    } else {
        for (int i = 0; 2 * i <= k - 1; ++i) {
            hole.push_back(Point2{2 * i, 2 * i + 1});
            hole.push_back(Point2{2 * i + 1, 2 * i + 1});
        }
    }
    return hole;
}

namespace detail {
constexpr int kTranslates[2] = {0, 1};
}

inline PeriodicTiling construct_odd(int k) {
    if (k < 3 || k % 2 == 0)
        throw std::invalid_argument("construct_odd: k must be odd and >= 3");
    PeriodicTiling t;
    t.k = k;
    t.shape = TorusShape{{2 * (k + 1), 2 * (k + 1), 3 * k}};

    // tile copies along axis 2 filling the holes, one schedule per triple
    // per (k+1)-translate of the doubled square
    for (const TripleSchedule& s : odd_case_triples(k)) {
        for (int sx : detail::kTranslates)
            for (int sy : detail::kTranslates) {
                TripleSchedule shifted = s;
                for (Coord& p : shifted.points) {
                    p[0] += sx * (k + 1);
                    p[1] += sy * (k + 1);
                }
                auto part = triple_placements(shifted, 2, 3 * k);
                t.placements.insert(t.placements.end(), part.begin(), part.end());
            }
    }

    // strings covering each slice minus its hole
    for (int n = 0; n < 3 * k; ++n)
        for (const StringPlacement& sp : sdr_hole_cover(k, odd_case_hole(k, n))) {
            auto part = lift_string(sp, k, t.shape, 0, 1, Coord{0, 0, n});
            t.placements.insert(t.placements.end(), part.begin(), part.end());
        }

    std::sort(t.placements.begin(), t.placements.end());
    return t;
}

// ---------------------------------------------------------------------------
// general case
// ---------------------------------------------------------------------------

/// The 3k marked triples in Z_{k+1}^2 x Z_{6k} (coordinates x, y, z), chosen
/// so every z layer holds either one triple's first point or one triple's
/// second and third points, and so the pair layers complete the B-schedule
/// footprint to a representative-sequence window.
inline std::vector<TripleSchedule> general_case_triples(int k) {
    const RepSequence seq = rep_sequence(k);
    const int zmod = 6 * k;
    std::vector<TripleSchedule> out;
    out.reserve(3 * k);
    auto triple = [&](int z1, Point2 p2, Point2 p3, int z23) {
        return TripleSchedule{k,
                              {Coord{0, 0, mod(z1, zmod)}, Coord{p2.x, p2.y, mod(z23, zmod)},
                               Coord{p3.x, p3.y, mod(z23, zmod)}}};
    };
    for (int n = 1; n <= k; ++n) out.push_back(triple(n, seq.a(n), seq.a(k + 1), n + k));
    for (int n = k + 1; n <= 2 * k; ++n)
        out.push_back(triple(n + k, seq.a(n), seq.a(2 * k + 1), n + 2 * k));
    for (int n = 2 * k + 1; n <= 3 * k; ++n)
        out.push_back(triple(n + 2 * k, seq.a(n), seq.a(1), n + 3 * k));
    return out;
}

inline PeriodicTiling construct_general(int k) {
    if (k < 3) throw std::invalid_argument("construct_general: k must be >= 3");
    PeriodicTiling t;
    t.k = k;
    t.shape = TorusShape{{2 * (k + 1), 2 * (k + 1), 6 * k, 3 * k}};

    const RepSequence seq = rep_sequence(k);
    const auto triples = general_case_triples(k);

    // layer maps: the single scheduled point per z layer, and the pair of
    // points per z layer, read off the triples
    std::vector<Point2> single_pt(6 * k);
    std::vector<std::array<Point2, 2>> pair_pts(6 * k);
    std::vector<bool> is_pair(6 * k, false), seen(6 * k, false);
    for (const TripleSchedule& s : triples) {
        const int z1 = s.points[0][2], z23 = s.points[1][2];
        single_pt[z1] = Point2{s.points[0][0], s.points[0][1]};
        pair_pts[z23] = {Point2{s.points[1][0], s.points[1][1]},
                         Point2{s.points[2][0], s.points[2][1]}};
        if (seen[z1] || seen[z23]) throw std::logic_error("construct_general: layer clash");
        seen[z1] = seen[z23] = true;
        is_pair[z23] = true;
    }

    // the schedule filling the fourth direction, per triple per translate
    for (const TripleSchedule& s : triples)
        for (int sx : detail::kTranslates)
            for (int sy : detail::kTranslates) {
                TripleSchedule shifted = s;
                for (Coord& p : shifted.points) {
                    p[0] += sx * (k + 1);
                    p[1] += sy * (k + 1);
                }
                auto part = triple_placements(shifted, 3, 3 * k);
                t.placements.insert(t.placements.end(), part.begin(), part.end());
            }

    for (int m = 0; m < 3 * k; ++m) {
        const auto cls = triple_slice_class(k, m);
        if (cls != std::pair<int, int>{2, 3}) {
            // every z layer misses exactly one point: strings around it
            for (int z = 0; z < 6 * k; ++z) {
                const Point2 p = is_pair[z] ? pair_pts[z][cls.second - 2] : single_pt[z];
                for (const StringPlacement& sp : tile_torus_minus_point(k, p)) {
                    auto part = lift_string(sp, k, t.shape, 0, 1, Coord{0, 0, z, m});
                    t.placements.insert(t.placements.end(), part.begin(), part.end());
                }
            }
        } else {
            // pair layers: tile copies along the z axis (B-schedule), then
            // strings around the completed window in every layer
            for (int sx : detail::kTranslates)
                for (int sy : detail::kTranslates)
                    for (Placement p : b_schedule_placements(seq, 2, 6 * k)) {
                        p.origin[0] += sx * (k + 1);
                        p.origin[1] += sy * (k + 1);
                        p.origin.push_back(m);
                        t.placements.push_back(std::move(p));
                    }
            for (int z = 0; z < 6 * k; ++z) {
                std::vector<Point2> w = b_schedule_slice(seq, z);
                if (is_pair[z]) {
                    w.push_back(pair_pts[z][0]);
                    w.push_back(pair_pts[z][1]);
                }
                if (static_cast<int>(w.size()) != k + 1)
                    throw std::logic_error("construct_general: layer footprint is not a window");
                for (const StringPlacement& sp : sdr_hole_cover(k, w)) {
                    auto part = lift_string(sp, k, t.shape, 0, 1, Coord{0, 0, z, m});
                    t.placements.insert(t.placements.end(), part.begin(), part.end());
                }
            }
        }
    }

    std::sort(t.placements.begin(), t.placements.end());
    return t;
}

// ---------------------------------------------------------------------------
// 4 mod 8 case
// ---------------------------------------------------------------------------

enum class Mod8Set { S1 = 1, S2 = 2, S3 = 3 };

/// Membership of a point of the 8(k+1) x 8(k+1) torus in S1, S2 or S3.
/// S1 and S2 live on the diagonals y - x ≡ 0 (mod k+1), S3 on y - x ≡ 1;
/// within diagonal n the x residues mod 8 select four of the eight classes.
inline bool mod8_membership(int k, Point2 p, Mod8Set which) {
    if (k < 4 || k % 8 != 4)
        throw std::invalid_argument("mod8_membership: k must be congruent to 4 mod 8");
    const int period = 8 * (k + 1);
    const int shift = which == Mod8Set::S3 ? 1 : 0;
    const int delta = mod(static_cast<long>(p.y) - p.x - shift, period);
    if (delta % (k + 1) != 0) return false;
    const int n = delta / (k + 1);  // diagonal index, 0..7
    const int lo = which == Mod8Set::S1 ? 0 : which == Mod8Set::S2 ? 4 : 2;
    return mod(p.x - 2 * n - lo, 8) < 4;
}

inline PeriodicTiling construct_mod8(int k) {
    if (k < 4 || k % 8 != 4)
        throw std::invalid_argument("construct_mod8: k must be congruent to 4 mod 8");
    const int P = 8 * (k + 1);
    PeriodicTiling t;
    t.k = k;
    t.shape = TorusShape{{P, P, 3 * k}};

    // schedules along axis 2: one triple (x1, x1+(4,4), x1+(2,3)) per S1 point
    for (int x = 0; x < P; ++x)
        for (int y = 0; y < P; ++y) {
            if (!mod8_membership(k, Point2{x, y}, Mod8Set::S1)) continue;
            TripleSchedule s{k,
                             {Coord{x, y}, Coord{(x + 4) % P, (y + 4) % P},
                              Coord{(x + 2) % P, (y + 3) % P}}};
            auto part = triple_placements(s, 2, 3 * k);
            t.placements.insert(t.placements.end(), part.begin(), part.end());
        }

    // per slice: the X_i complement of the two scheduled sets, tiled by
    // vertical copies (X1), horizontal copies (X2) or row strings (X3)
    const int half = 4 * (k + 1);
    for (int m = 0; m < 3 * k; ++m) {
        const auto cls = triple_slice_class(k, m);
        const int missing = 6 - cls.first - cls.second;
        if (missing == 1) {
            // X1 columns: column 0 starts at 1 and 2(k+1)+2 mod 4(k+1);
            // column parity shifts by 1, translation (2, k+3) propagates
            for (int x = 0; x < P; ++x) {
                const int c = x / 2, b = x % 2;
                for (int beta : {1, 2 * (k + 1) + 2}) {
                    const int start = mod(beta + b + c * (k + 3), half);
                    t.placements.push_back(Placement{1, Coord{x, start, m}});
                    t.placements.push_back(Placement{1, Coord{x, start + half, m}});
                }
            }
        } else if (missing == 2) {
            // X2 rows: row 0 starts at k+1, 3(k+1), 5(k+1)+1, 7(k+1)+1
            // mod 8(k+1); translation (k+2, 1) propagates
            for (int y = 0; y < P; ++y)
                for (int beta : {k + 1, 3 * (k + 1), 5 * (k + 1) + 1, 7 * (k + 1) + 1})
                    t.placements.push_back(
                        Placement{0, Coord{mod(beta + static_cast<long>(y) * (k + 2), P), y, m}});
        } else {
            // X3: every row is a full string with removal phase y mod (k+1)
            for (int y = 0; y < P; ++y) {
                auto part = string_line_placements(0, Coord{0, y, m}, y % (k + 1), P, k);
                t.placements.insert(t.placements.end(), part.begin(), part.end());
            }
        }
    }

    std::sort(t.placements.begin(), t.placements.end());
    return t;
}

}  // namespace punctile
