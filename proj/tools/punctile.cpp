// Command-line surface: construct and certify tilings, verify and render
// certificate documents, and run the exact-cover solver on small regions.
//
// Exit codes: 0 ok, 1 verification failed / infeasible, 2 usage or malformed
// input, 3 node budget exhausted.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "punctile/punctile.hpp"

namespace {

using namespace punctile;

constexpr const char* kToolVersion = "punctile/1.0.0";

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::vector<int> parse_dims(const std::string& spec) {
    std::vector<int> dims;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, 'x')) {
        try {
            dims.push_back(std::stoi(part));
        } catch (const std::exception&) {
            throw CLI::ValidationError("region", "bad extent \"" + part + "\" in \"" + spec + "\"");
        }
        if (dims.back() < 1) throw CLI::ValidationError("region", "extents must be positive");
    }
    if (dims.empty()) throw CLI::ValidationError("region", "empty region spec");
    return dims;
}

std::vector<Point2> parse_points(const std::string& spec) {
    std::vector<Point2> pts;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ';')) {
        int x = 0, y = 0;
        if (std::sscanf(part.c_str(), "%d,%d", &x, &y) != 2)
            throw CLI::ValidationError("--remove", "expected x,y pairs separated by ';'");
        pts.push_back(Point2{x, y});
    }
    return pts;
}

std::string coord_str(const Coord& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(c[i]);
    }
    return s + ")";
}

void print_report(const PeriodicTiling& t, const CoverReport& report, std::ostream& out) {
    if (report.ok) {
        out << "exact cover: " << report.cell_count << " cells, " << t.placements.size()
            << " placements\n";
        return;
    }
    out << "violations: " << report.uncovered() << " uncovered, " << report.overcovered()
        << " overcovered (" << report.cell_count << " cells, " << t.placements.size()
        << " placements)\n";
    constexpr std::size_t cap = 50;
    for (std::size_t i = 0; i < report.issues.size() && i < cap; ++i) {
        const CellIssue& issue = report.issues[i];
        out << "cell " << coord_str(t.shape.unrank(issue.cell)) << ": multiplicity "
            << issue.multiplicity;
        if (!issue.placements.empty()) {
            out << ", placements [";
            for (std::size_t j = 0; j < issue.placements.size(); ++j)
                out << (j ? " " : "") << issue.placements[j];
            out << "]";
        }
        out << "\n";
    }
    if (report.issues.size() > cap)
        out << "... and " << (report.issues.size() - cap) << " more\n";
}

int write_output(const TilingDocument& doc, const std::string& out_path) {
    const std::string text = write_document(doc);
    if (out_path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return kExitFail;
    }
    f << text;
    return kExitOk;
}

std::optional<TilingDocument> load_document(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << path << "\n";
        return std::nullopt;
    }
    std::stringstream buf;
    buf << f.rdbuf();
    try {
        return parse_document(buf.str());
    } catch (const parse_error& e) {
        std::cerr << "error: " << path << ": " << e.what() << "\n";
        return std::nullopt;
    }
}

// Solver-found tilings for the small k the closed-form constructions skip:
// k=1 on the circle of length 4, k=2 on the smallest solvable square torus.
std::optional<PeriodicTiling> solver_tiling(int k, std::string& name) {
    std::vector<Region> regions;
    if (k == 1) {
        regions.push_back(Region{true, {4}});
        name = "solver-z1";
    } else {
        for (int side = 2; side <= 12; ++side)
            if ((side * side) % (2 * k) == 0) regions.push_back(Region{true, {side, side}});
        name = "solver-z2";
    }
    for (const Region& region : regions) {
        TileInstance inst = build_tile_instance(k, region);
        SolveResult res = solve(inst.cover);
        if (res.status == SolveStatus::found) {
            PeriodicTiling t{k, inst.shape, {}};
            for (int idx : res.selected) t.placements.push_back(inst.placements[idx]);
            std::sort(t.placements.begin(), t.placements.end());
            return t;
        }
    }
    return std::nullopt;
}

std::string admissible_targets(int k) {
    std::string s = "auto";
    if (k >= 3) {
        if (k % 2 == 1) s += ", z3-odd";
        if (k % 8 == 4) s += ", z3-mod8";
        s += ", z4";
    }
    return s;
}

int cmd_construct(int k, const std::string& target, const std::string& out_path) {
    std::string name = target;
    if (target == "auto") {
        if (k <= 2) name = "solver";
        else if (k % 2 == 1) name = "z3-odd";
        else if (k % 8 == 4) name = "z3-mod8";
        else name = "z4";
    }

    PeriodicTiling tiling;
    if (name == "solver") {
        auto t = solver_tiling(k, name);
        if (!t) {
            std::cerr << "error: solver found no tiling for k=" << k << "\n";
            return kExitFail;
        }
        tiling = std::move(*t);
    } else if (name == "z3-odd") {
        if (k < 3 || k % 2 == 0) {
            std::cerr << "error: target z3-odd needs odd k >= 3; admissible targets for k=" << k
                      << ": " << admissible_targets(k) << "\n";
            return kExitUsage;
        }
        tiling = construct_odd(k);
    } else if (name == "z3-mod8") {
        if (k % 8 != 4) {
            std::cerr << "error: target z3-mod8 needs k congruent to 4 mod 8; admissible targets "
                         "for k="
                      << k << ": " << admissible_targets(k) << "\n";
            return kExitUsage;
        }
        tiling = construct_mod8(k);
    } else if (name == "z4") {
        if (k < 3) {
            std::cerr << "error: target z4 needs k >= 3; admissible targets for k=" << k << ": "
                      << admissible_targets(k) << "\n";
            return kExitUsage;
        }
        tiling = construct_general(k);
    } else {
        std::cerr << "error: unknown target " << name << "\n";
        return kExitUsage;
    }

    CoverReport report = verify_exact_cover(tiling);
    if (!report.ok) {
        std::cerr << "internal error: construction failed verification\n";
        print_report(tiling, report, std::cerr);
        return kExitFail;
    }
    std::cerr << name << " k=" << k << ": ";
    {
        std::ostringstream s;
        print_report(tiling, report, s);
        std::cerr << s.str();
    }
    TilingDocument doc =
        document_from_tiling(tiling, {{"construction", name}, {"tool", kToolVersion}});
    return write_output(doc, out_path);
}

int cmd_verify(const std::string& path) {
    auto doc = load_document(path);
    if (!doc) return kExitUsage;
    PeriodicTiling tiling = tiling_from_document(*doc);
    CoverReport report = verify_exact_cover(tiling);
    print_report(tiling, report, std::cout);
    return report.ok ? kExitOk : kExitFail;
}

int cmd_render(const std::string& path, const std::vector<std::string>& fixes) {
    auto doc = load_document(path);
    if (!doc) return kExitUsage;
    if (doc->dim() < 2 || doc->dim() > 4) {
        std::cerr << "error: render supports dim 2, 3 or 4\n";
        return kExitUsage;
    }
    std::vector<std::pair<int, int>> fixed;
    for (const std::string& f : fixes) {
        int axis = 0, index = 0;
        if (std::sscanf(f.c_str(), "%d=%d", &axis, &index) != 2) {
            std::cerr << "error: --fix expects AXIS=INDEX, got \"" << f << "\"\n";
            return kExitUsage;
        }
        fixed.emplace_back(axis, index);
    }
    try {
        std::cout << render_slice(tiling_from_document(*doc), fixed);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

const char* dir_name(LineDir d) { return d == LineDir::row ? "row" : "column"; }

int cmd_solve(int k, const std::string& torus_spec, const std::string& box_spec,
              const std::string& pieces, const std::string& remove_spec, std::uint64_t budget,
              const std::string& out_path) {
    const bool is_torus = !torus_spec.empty();
    Region region{is_torus, parse_dims(is_torus ? torus_spec : box_spec)};
    auto progress = [](std::uint64_t nodes) {
        std::cerr << "... " << nodes << " nodes searched\n";
    };

    if (pieces == "string") {
        if (!is_torus || region.dims != std::vector<int>{k + 1, k + 1}) {
            std::cerr << "error: string pieces require --torus " << (k + 1) << "x" << (k + 1)
                      << "\n";
            return kExitUsage;
        }
        StringInstance inst = build_string_instance(k, parse_points(remove_spec));
        SolveResult res = solve(inst.cover, budget, progress);
        if (res.status == SolveStatus::budget_exhausted) {
            std::cerr << "inconclusive: node budget exhausted after " << res.nodes << " nodes\n";
            return kExitBudget;
        }
        if (res.status == SolveStatus::none) {
            std::cout << "no string cover exists (search exhausted, " << res.nodes << " nodes)\n";
            return kExitFail;
        }
        std::cout << "cover with " << res.selected.size() << " strings:\n";
        for (int idx : res.selected) {
            const StringPlacement& sp = inst.strings[idx];
            std::cout << dir_name(sp.dir) << " " << sp.line << " minus (" << sp.removed.x << ","
                      << sp.removed.y << ")\n";
        }
        return kExitOk;
    }

    if (!remove_spec.empty()) {
        std::cerr << "error: --remove requires --pieces string\n";
        return kExitUsage;
    }
    TileInstance inst = build_tile_instance(k, region);
    for (const std::string& w : inst.cover.warnings) std::cerr << "warning: " << w << "\n";
    SolveResult res = solve(inst.cover, budget, progress);
    if (res.status == SolveStatus::budget_exhausted) {
        std::cerr << "inconclusive: node budget exhausted after " << res.nodes << " nodes\n";
        return kExitBudget;
    }
    if (res.status == SolveStatus::none) {
        std::cout << "no tiling exists (search exhausted, " << res.nodes << " nodes)\n";
        return kExitFail;
    }
    std::cerr << "tiling found: " << res.selected.size() << " placements, " << res.nodes
              << " nodes\n";
    PeriodicTiling t{k, inst.shape, {}};
    for (int idx : res.selected) t.placements.push_back(inst.placements[idx]);
    std::sort(t.placements.begin(), t.placements.end());
    if (is_torus)
        return write_output(document_from_tiling(t, {{"construction", "solver"},
                                                     {"tool", kToolVersion}}),
                            out_path);
    for (const Placement& p : t.placements)
        std::cout << "axis " << p.axis << " origin " << coord_str(p.origin) << "\n";
    return kExitOk;
}

// --------------------------------------------------------------------------
// props: the property suites, runnable from the command line
// --------------------------------------------------------------------------

struct PropRunner {
    bool all_ok = true;

    void check(const std::string& name, bool ok, const std::string& detail) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << detail << "\n";
        all_ok = all_ok && ok;
    }
};

bool slice_matches_schedule(const TripleSchedule& s, int axis, int extent) {
    auto placements = triple_placements(s, axis, extent);
    // recompute slice membership by enumeration
    std::vector<std::vector<Coord>> per_slice(extent);
    for (const Placement& p : placements)
        for (int t : tile_cells(s.k)) {
            Coord c = p.origin;
            c[axis] = (c[axis] + t) % extent;
            Coord pt = c;
            pt.erase(pt.begin() + axis);
            per_slice[c[axis]].push_back(pt);
        }
    for (int n = 0; n < extent; ++n) {
        auto cls = triple_slice(s, n);
        std::vector<Coord> expect = {s.points[cls.first - 1], s.points[cls.second - 1]};
        auto got = per_slice[n];
        std::sort(got.begin(), got.end());
        std::sort(expect.begin(), expect.end());
        if (got != expect) return false;
    }
    return true;
}

int cmd_props(int kmax_odd, int kmax_general, int kmax_anprop, int trials, unsigned seed) {
    PropRunner r;
    std::mt19937 rng(seed);

    {  // triple schedule: per-slice footprint matches the three-class table
        int done = 0;
        bool ok = true;
        while (done < trials && ok) {
            for (int k = 3; k <= 10 && done < trials; ++k, ++done) {
                std::uniform_int_distribution<int> coord(0, 3 * k);
                std::array<Coord, 3> pts;
                do {
                    for (auto& p : pts) p = Coord{coord(rng), coord(rng)};
                } while (pts[0] == pts[1] || pts[0] == pts[2] || pts[1] == pts[2]);
                std::uniform_int_distribution<int> mult(1, 3);
                ok = slice_matches_schedule(TripleSchedule{k, pts}, 2, 3 * k * mult(rng));
            }
        }
        r.check("triple-schedule-slices", ok, std::to_string(done) + " random triples, k in 3..10");
    }

    {  // B-schedule: slice sizes follow the k+1 / k-1 block pattern
        bool ok = true;
        for (int k = 3; k <= 10 && ok; ++k) {
            RepSequence seq = rep_sequence(k);
            for (int n = 0; n < 6 * k && ok; ++n) {
                int size = static_cast<int>(b_schedule_slice(seq, n).size());
                int want = mod(n - 1, 2 * k) < k ? k + 1 : k - 1;
                ok = size == want;
            }
        }
        r.check("b-schedule-pattern", ok, "all 6k residues, k in 3..10");
    }

    {  // representative sequence: distinct points, every window is an SDR hole
        bool ok = true;
        for (int k = 3; k <= kmax_anprop && ok; ++k) {
            RepSequence seq = rep_sequence(k);
            std::vector<Point2> pts = seq.points;
            std::sort(pts.begin(), pts.end());
            ok = std::adjacent_find(pts.begin(), pts.end()) == pts.end();
            for (int n = 1; n <= 3 * k && ok; ++n) {
                std::vector<int> col(k + 1, 0), row(k + 1, 0);
                for (const Point2& p : window(seq, n)) {
                    ++col[p.x];
                    ++row[p.y];
                }
                bool one_per_col = *std::max_element(col.begin(), col.end()) == 1;
                bool one_per_row = *std::max_element(row.begin(), row.end()) == 1;
                ok = one_per_col || one_per_row;
            }
        }
        r.check("rep-sequence-windows", ok, "k in 3.." + std::to_string(kmax_anprop));
    }

    {  // certified constructions
        bool ok = true;
        for (int k = 3; k <= kmax_odd && ok; k += 2) ok = verify_exact_cover(construct_odd(k)).ok;
        r.check("z3-odd-sweep", ok, "odd k in 3.." + std::to_string(kmax_odd));
        ok = true;
        for (int k = 3; k <= kmax_general && ok; ++k)
            ok = verify_exact_cover(construct_general(k)).ok;
        r.check("z4-sweep", ok, "k in 3.." + std::to_string(kmax_general));
        ok = true;
        for (int k : {4, 12}) ok = ok && verify_exact_cover(construct_mod8(k)).ok;
        r.check("z3-mod8-sweep", ok, "k in {4, 12}");
    }

    {  // solver oracles
        auto i1 = build_tile_instance(1, Region{true, {4}});
        auto r1 = solve(i1.cover);
        r.check("solver-k1", r1.status == SolveStatus::found && r1.selected.size() == 2,
                "circle of length 4");
        std::string name;
        auto t2 = solver_tiling(2, name);
        r.check("solver-k2", t2 && verify_exact_cover(*t2).ok,
                t2 ? "square torus side " + std::to_string(t2->shape.dims[0]) : "no torus found");
        bool ok = true;
        for (int x = 0; x <= 3 && ok; ++x)
            for (int y = 0; y <= 3 && ok; ++y) {
                auto res = solve(build_string_instance(3, {Point2{x, y}}).cover);
                ok = res.status == SolveStatus::found && res.selected.size() == 5;
            }
        r.check("solver-strings-onepoint", ok, "all 16 removals, 5 strings each");
    }

    return r.all_ok ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"periodic tilings by punctured intervals: construct, certify, explore"};
    app.require_subcommand(1);

    int k = 0;
    std::string target = "auto", out_path, path;
    std::vector<std::string> fixes;
    std::string torus_spec, box_spec, pieces = "tile", remove_spec;
    std::uint64_t budget = kDefaultNodeBudget;
    int kmax_odd = 15, kmax_general = 10, kmax_anprop = 12, trials = 1000;
    unsigned seed = 20240001;

    auto* construct = app.add_subcommand("construct", "build and certify a periodic tiling");
    construct->add_option("--k", k, "tile half-length")->required();
    construct->add_option("--target", target, "auto, z3-odd, z4 or z3-mod8")
        ->check(CLI::IsMember({"auto", "z3-odd", "z4", "z3-mod8"}));
    construct->add_option("--out", out_path, "output path (stdout if omitted)");

    auto* verify = app.add_subcommand("verify", "check a tiling document for exact cover");
    verify->add_option("path", path, "tiling document")->required();

    auto* render = app.add_subcommand("render", "draw one 2-D slice of a tiling document");
    render->add_option("path", path, "tiling document")->required();
    render->add_option("--fix", fixes, "AXIS=INDEX for each axis to pin (dim-2 of them)");

    auto* slv = app.add_subcommand("solve", "search a region for an exact cover");
    slv->add_option("--k", k, "tile half-length")->required();
    auto* topt = slv->add_option("--torus", torus_spec, "torus extents, e.g. 6x6");
    auto* bopt = slv->add_option("--box", box_spec, "box extents, e.g. 7x14");
    topt->excludes(bopt);
    slv->add_option("--pieces", pieces, "tile or string")
        ->check(CLI::IsMember({"tile", "string"}));
    slv->add_option("--remove", remove_spec, "cells to puncture, e.g. 1,2;0,3 (string pieces)");
    slv->add_option("--budget", budget, "search node budget");
    slv->add_option("--out", out_path, "output path for the tiling document");

    auto* props = app.add_subcommand("props", "run the property suites");
    props->add_option("--kmax-odd", kmax_odd, "largest odd k for the z3 sweep");
    props->add_option("--kmax-general", kmax_general, "largest k for the z4 sweep");
    props->add_option("--kmax-anprop", kmax_anprop, "largest k for window checks");
    props->add_option("--trials", trials, "random schedule trials");
    props->add_option("--seed", seed, "PRNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (construct->parsed()) {
            if (k < 1) {
                std::cerr << "error: k must be >= 1\n";
                return kExitUsage;
            }
            if (k <= 2 && target != "auto") {
                std::cerr << "error: admissible targets for k=" << k << ": "
                          << admissible_targets(k) << "\n";
                return kExitUsage;
            }
            return cmd_construct(k, target, out_path);
        }
        if (verify->parsed()) return cmd_verify(path);
        if (render->parsed()) return cmd_render(path, fixes);
        if (slv->parsed()) {
            if (k < 1) {
                std::cerr << "error: k must be >= 1\n";
                return kExitUsage;
            }
            if (torus_spec.empty() && box_spec.empty()) {
                std::cerr << "error: one of --torus or --box is required\n";
                return kExitUsage;
            }
            return cmd_solve(k, torus_spec, box_spec, pieces, remove_spec, budget, out_path);
        }
        if (props->parsed()) return cmd_props(kmax_odd, kmax_general, kmax_anprop, trials, seed);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
