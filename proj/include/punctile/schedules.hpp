#pragma once

// The two interleaving schedules that stack tile copies along one axis so
// that every cross-slice sees a prescribed footprint: the triple schedule
// (2 of 3 marked points per slice, period 3k) and the B-schedule over a
// representative sequence (k+1 / k-1 alternating footprint, period 6k).

#include <array>
#include <utility>
#include <vector>

#include "punctile/lattice.hpp"
#include "punctile/torus_strings.hpp"

namespace punctile {

/// Three distinct marked points. Placements run along a fresh scheduling
/// axis inserted into the point coordinates.
struct TripleSchedule {
    int k = 0;
    std::array<Coord, 3> points;
};

namespace detail {
inline Coord insert_axis(const Coord& pt, int axis, int value) {
    Coord c;
    c.reserve(pt.size() + 1);
    c.insert(c.end(), pt.begin(), pt.begin() + axis);
    c.push_back(value);
    c.insert(c.end(), pt.begin() + axis, pt.end());
    return c;
}
}  // namespace detail

/// Copies of the tile beginning at (x_i, n) for every n ≡ i*k (mod 3k),
/// i = 1,2,3, over [0, extent). The scheduling coordinate is inserted at
/// `axis`; consecutive copies at the same point are 3k apart and never
/// collide.
inline std::vector<Placement> triple_placements(const TripleSchedule& s, int axis, int extent) {
    const int k = s.k;
    if (k < 1) throw std::invalid_argument("triple_placements: k must be >= 1");
    if (axis < 0 || axis > static_cast<int>(s.points[0].size()))
        throw std::invalid_argument("triple_placements: axis out of range");
    if (s.points[0] == s.points[1] || s.points[0] == s.points[2] || s.points[1] == s.points[2])
        throw std::invalid_argument("triple_placements: points must be distinct");
    if (extent <= 0 || extent % (3 * k) != 0)
        throw std::invalid_argument("triple_placements: extent must be a positive multiple of 3k");
    std::vector<Placement> out;
    out.reserve(3 * (extent / (3 * k)));
    for (int i = 1; i <= 3; ++i)
        for (int n = (i * k) % (3 * k); n < extent; n += 3 * k)
            out.push_back(Placement{axis, detail::insert_axis(s.points[i - 1], axis, n)});
    return out;
}

/// The two marked points present in slice n, as 1-based indices into the
/// triple: {1,3} for n ≡ 0, k+1..2k-1; {1,2} for n ≡ k, 2k+1..3k-1;
/// {2,3} for n ≡ 2k, 1..k-1 (all mod 3k).
inline std::pair<int, int> triple_slice_class(int k, long n) {
    const int r = mod(n, 3 * k);
    if (r == 0 || (r >= k + 1 && r <= 2 * k - 1)) return {1, 3};
    if (r == k || (r >= 2 * k + 1 && r <= 3 * k - 1)) return {1, 2};
    return {2, 3};
}

inline std::pair<int, int> triple_slice(const TripleSchedule& s, long n) {
    return triple_slice_class(s.k, n);
}

/// The 3k-point cycle a_1..a_3k in Z_{k+1}^2 whose every (k+1)-window has
/// one point per column (windows starting at 1..2k) or one point per row
/// (windows starting at 2k+1..3k). Indices are 1-based cyclic mod 3k.
struct RepSequence {
    int k = 0;
    std::vector<Point2> points;  // points[i] = a_{i+1}

    Point2 a(long n) const { return points[mod(n - 1, 3 * k)]; }
};

inline RepSequence rep_sequence(int k) {
    if (k < 3) throw std::invalid_argument("rep_sequence: k must be >= 3");
    RepSequence seq;
    seq.k = k;
    seq.points.resize(3 * k);
    auto set = [&](int n, int x, int y) { seq.points[n - 1] = Point2{x, y}; };
    for (int n = 1; n <= k + 1; ++n) set(n, n - 1, n - 1);
    for (int n = k + 2; n <= 2 * k - 1; ++n) set(n, n - k - 2, n - k - 1);
    for (int n = 2 * k; n <= 2 * k + 2; ++n) set(n, n - k - 2, n - 2 * k);
    for (int n = 2 * k + 3; n <= 3 * k; ++n) set(n, n - 2 * k - 3, n - 2 * k);
    return seq;
}

/// Cyclic window {a_r, ..., a_{r+k}} of k+1 points.
inline std::vector<Point2> window(const RepSequence& seq, long r) {
    std::vector<Point2> out;
    out.reserve(seq.k + 1);
    for (int i = 0; i <= seq.k; ++i) out.push_back(seq.a(r + i));
    return out;
}

namespace detail {
// Scheduling offset for a_i in the B-schedule: copies of T begin at
// n ≡ i, i+k, i+2k (mod 6k) for i in 1..k, k+1..2k, 2k+1..3k respectively.
inline int b_offset(int i, int k) {
    if (i <= k) return i;
    if (i <= 2 * k) return i + k;
    return i + 2 * k;
}
}  // namespace detail

/// The B-schedule: one tile copy along `axis` beginning at every
/// n ≡ b_offset(i) (mod 6k) for each a_i, over [0, extent). Slices have
/// k+1 points for n ≡ 1..k (mod 2k) and k-1 points for n ≡ k+1..2k.
/// Output placements are 3-dimensional with the a_i coordinates filling the
/// non-axis positions in order.
inline std::vector<Placement> b_schedule_placements(const RepSequence& seq, int axis,
                                                    int extent) {
    const int k = seq.k;
    if (axis < 0 || axis > 2)
        throw std::invalid_argument("b_schedule_placements: axis out of range");
    if (extent <= 0 || extent % (6 * k) != 0)
        throw std::invalid_argument(
            "b_schedule_placements: extent must be a positive multiple of 6k");
    std::vector<Placement> out;
    out.reserve(3 * k * (extent / (6 * k)));
    for (int i = 1; i <= 3 * k; ++i) {
        const Point2 p = seq.a(i);
        for (int n = detail::b_offset(i, k) % (6 * k); n < extent; n += 6 * k)
            out.push_back(Placement{axis, detail::insert_axis(Coord{p.x, p.y}, axis, n)});
    }
    return out;
}

/// Points of the B-schedule footprint in slice n (residues mod 6k),
/// derived by enumerating which copies cover the slice.
inline std::vector<Point2> b_schedule_slice(const RepSequence& seq, long n) {
    const int k = seq.k;
    const int r = mod(n, 6 * k);
    std::vector<Point2> out;
    for (int i = 1; i <= 3 * k; ++i) {
        const int start = detail::b_offset(i, k) % (6 * k);
        const int t = mod(r - start, 6 * k);
        if (t <= 2 * k && t != k) out.push_back(seq.a(i));
    }
    return out;
}

}  // namespace punctile
