#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "punctile/constructions.hpp"
#include "punctile/lattice.hpp"

using namespace punctile;

namespace {

std::set<Cell> cell_set(const Placement& p, const TorusShape& shape, int k) {
    auto v = placement_cells(p, shape, k);
    return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("tile_cells enumerates the punctured interval") {
    CHECK(tile_cells(1) == std::vector<int>{0, 2});
    CHECK(tile_cells(3) == std::vector<int>{0, 1, 2, 4, 5, 6});

    auto c4 = tile_cells(4);
    CHECK(c4.size() == 8);
    CHECK(std::find(c4.begin(), c4.end(), 4) == c4.end());

    // symmetric under t -> 2k - t
    for (int k = 1; k <= 9; ++k) {
        auto cells = tile_cells(k);
        CHECK(cells.size() == 2 * static_cast<std::size_t>(k));
        std::set<int> s(cells.begin(), cells.end());
        for (int t : cells) CHECK(s.count(2 * k - t) == 1);
    }

    CHECK_THROWS_AS(tile_cells(0), std::invalid_argument);
    CHECK_THROWS_AS(tile_cells(-2), std::invalid_argument);
}

TEST_CASE("placement_cells wraps around the torus") {
    TorusShape nine{{9}};
    auto got = cell_set(Placement{0, {5}}, nine, 3);

    // independent oracle: direct modular enumeration
    std::set<Cell> want;
    for (int t : {0, 1, 2, 4, 5, 6}) want.insert(static_cast<Cell>((5 + t) % 9));
    CHECK(got == want);
    CHECK(got == std::set<Cell>{5, 6, 7, 0, 1, 2});

    CHECK(cell_set(Placement{0, {0}}, TorusShape{{4}}, 1) == std::set<Cell>{0, 2});
}

TEST_CASE("placement_cells rejects placements that wrap onto themselves") {
    CHECK_THROWS_AS(placement_cells(Placement{0, {0}}, TorusShape{{6}}, 3), degenerate_placement);
    CHECK_THROWS_AS(placement_cells(Placement{1, {0, 0}}, TorusShape{{8, 3}}, 3),
                    degenerate_placement);
    CHECK_THROWS_AS(placement_cells(Placement{2, {0}}, TorusShape{{9}}, 3), std::invalid_argument);
}

TEST_CASE("placement cells are distinct whenever the extent admits them") {
    std::mt19937 rng(7);
    for (int k = 1; k <= 6; ++k)
        for (int trial = 0; trial < 50; ++trial) {
            std::uniform_int_distribution<int> ext(2 * k + 2, 4 * k + 4);
            TorusShape shape{{ext(rng), ext(rng)}};
            std::uniform_int_distribution<int> ax(0, 1);
            Placement p{ax(rng), {0, 0}};
            for (int a = 0; a < 2; ++a)
                p.origin[a] = std::uniform_int_distribution<int>(0, shape.dims[a] - 1)(rng);
            CHECK(cell_set(p, shape, k).size() == 2 * static_cast<std::size_t>(k));
        }
}

TEST_CASE("string_line_placements decomposes a punctured line into tiles") {
    SUBCASE("single period") {
        auto ps = string_line_placements(0, {0}, 0, 8, 3);
        REQUIRE(ps.size() == 1);
        CHECK(ps[0].origin == Coord{1});
        CHECK(cell_set(ps[0], TorusShape{{8}}, 3) == std::set<Cell>{1, 2, 3, 5, 6, 7});
    }
    SUBCASE("two periods") {
        auto ps = string_line_placements(0, {0}, 2, 16, 3);
        REQUIRE(ps.size() == 2);
        CHECK(ps[0].origin == Coord{3});
        CHECK(ps[1].origin == Coord{11});
        std::set<Cell> covered;
        for (const auto& p : ps)
            for (Cell c : placement_cells(p, TorusShape{{16}}, 3)) covered.insert(c);
        std::set<Cell> want;
        for (Cell c = 0; c < 16; ++c)
            if (c % 4 != 2) want.insert(c);
        CHECK(covered == want);
    }
    SUBCASE("k=1") {
        auto ps = string_line_placements(0, {0}, 1, 4, 1);
        REQUIRE(ps.size() == 1);
        CHECK(ps[0].origin == Coord{2});
        CHECK(cell_set(ps[0], TorusShape{{4}}, 1) == std::set<Cell>{2, 0});
    }
    SUBCASE("bad parameters") {
        CHECK_THROWS_AS(string_line_placements(0, {0}, 0, 9, 3), std::invalid_argument);
        CHECK_THROWS_AS(string_line_placements(0, {0}, 4, 8, 3), std::invalid_argument);
        CHECK_THROWS_AS(string_line_placements(0, {0}, -1, 8, 3), std::invalid_argument);
    }
}

TEST_CASE("string_line_placements unions to the full punctured line") {
    for (int k = 1; k <= 6; ++k) {
        const int period = 2 * (k + 1);
        for (int L = period; L <= 10 * (k + 1); L += period)
            for (int r = 0; r <= k; ++r) {
                auto ps = string_line_placements(0, {0}, r, L, k);
                CHECK(ps.size() == static_cast<std::size_t>(L / period));
                std::set<Cell> covered;
                std::size_t total = 0;
                for (const auto& p : ps) {
                    auto cells = placement_cells(p, TorusShape{{L}}, k);
                    total += cells.size();
                    covered.insert(cells.begin(), cells.end());
                }
                CHECK(total == covered.size());  // no overlap
                for (Cell c = 0; c < static_cast<Cell>(L); ++c)
                    CHECK(covered.count(c) == (c % (k + 1) != static_cast<Cell>(r) ? 1u : 0u));
            }
    }
}

TEST_CASE("verify_exact_cover reports precise violations") {
    PeriodicTiling t = construct_odd(3);
    REQUIRE(t.shape.cell_count() == 576);
    REQUIRE(t.placements.size() == 96);
    CHECK(verify_exact_cover(t).ok);

    SUBCASE("deleting a placement uncovers exactly its 2k cells") {
        PeriodicTiling broken = t;
        auto removed_cells = cell_set(broken.placements[17], broken.shape, 3);
        broken.placements.erase(broken.placements.begin() + 17);
        auto report = verify_exact_cover(broken);
        CHECK_FALSE(report.ok);
        CHECK(report.issues.size() == 6);
        CHECK(report.uncovered() == 6);
        for (const auto& issue : report.issues) {
            CHECK(issue.multiplicity == 0);
            CHECK(removed_cells.count(issue.cell) == 1);
        }
    }
    SUBCASE("duplicating a placement double-covers exactly its 2k cells") {
        PeriodicTiling broken = t;
        broken.placements.push_back(broken.placements[40]);
        auto report = verify_exact_cover(broken);
        CHECK_FALSE(report.ok);
        CHECK(report.issues.size() == 6);
        CHECK(report.overcovered() == 6);
        auto dup_cells = cell_set(t.placements[40], t.shape, 3);
        for (const auto& issue : report.issues) {
            CHECK(issue.multiplicity == 2);
            CHECK(dup_cells.count(issue.cell) == 1);
            // both the original and the duplicate are named
            REQUIRE(issue.placements.size() == 2);
            CHECK(issue.placements[0] == 40);
            CHECK(issue.placements[1] == 96);
        }
    }
    SUBCASE("cell count is a multiple of 2k and placements match") {
        CHECK(t.shape.cell_count() % (2 * t.k) == 0);
        CHECK(t.placements.size() == t.shape.cell_count() / (2 * t.k));
    }
}

TEST_CASE("a verified tiling replicated onto a doubled torus still verifies") {
    PeriodicTiling t = construct_odd(3);
    for (int axis = 0; axis < 3; ++axis) {
        PeriodicTiling big;
        big.k = t.k;
        big.shape = t.shape;
        big.shape.dims[axis] *= 2;
        for (const Placement& p : t.placements) {
            big.placements.push_back(p);
            Placement shifted = p;
            shifted.origin[axis] += t.shape.dims[axis];
            big.placements.push_back(shifted);
        }
        CHECK(verify_exact_cover(big).ok);
    }
}

TEST_CASE("torus rank and unrank are inverse") {
    TorusShape shape{{5, 3, 7}};
    for (Cell c = 0; c < shape.cell_count(); ++c) CHECK(shape.rank(shape.unrank(c)) == c);
    CHECK(shape.rank({-1, 3, 7}) == shape.rank({4, 0, 0}));
}
