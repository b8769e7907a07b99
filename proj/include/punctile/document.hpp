#pragma once

// The interchange format for tiling certificates: line-oriented text with a
// versioned tag, decimal integers and a fixed field order, so equal
// documents are byte-equal and diff cleanly in golden files.
//
//   punctile-tiling/v1
//   k 3
//   dim 3
//   periods 8 8 9
//   meta construction z3-odd
//   placements 96
//   p 0 0 0 1
//   ...
//   end

#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "punctile/lattice.hpp"

namespace punctile {

struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

struct TilingDocument {
    static constexpr std::string_view format_tag = "punctile-tiling/v1";

    int k = 0;
    std::vector<int> periods;
    std::vector<Placement> placements;
    std::vector<std::pair<std::string, std::string>> meta;  // optional provenance, order kept

    int dim() const { return static_cast<int>(periods.size()); }

    friend bool operator==(const TilingDocument& a, const TilingDocument& b) {
        return a.k == b.k && a.periods == b.periods && a.placements == b.placements &&
               a.meta == b.meta;
    }
};

inline TilingDocument document_from_tiling(
    const PeriodicTiling& t, std::vector<std::pair<std::string, std::string>> meta = {}) {
    TilingDocument doc;
    doc.k = t.k;
    doc.periods = t.shape.dims;
    doc.placements = t.placements;
    doc.meta = std::move(meta);
    for (Placement& p : doc.placements)
        for (std::size_t i = 0; i < p.origin.size(); ++i)
            p.origin[i] = mod(p.origin[i], doc.periods[i]);
    return doc;
}

inline PeriodicTiling tiling_from_document(const TilingDocument& doc) {
    return PeriodicTiling{doc.k, TorusShape{doc.periods}, doc.placements};
}

inline std::string write_document(const TilingDocument& doc) {
    std::ostringstream out;
    out << TilingDocument::format_tag << '\n';
    out << "k " << doc.k << '\n';
    out << "dim " << doc.dim() << '\n';
    out << "periods";
    for (int p : doc.periods) out << ' ' << p;
    out << '\n';
    for (const auto& [key, value] : doc.meta) out << "meta " << key << ' ' << value << '\n';
    out << "placements " << doc.placements.size() << '\n';
    for (const Placement& p : doc.placements) {
        out << "p " << p.axis;
        for (int c : p.origin) out << ' ' << c;
        out << '\n';
    }
    out << "end\n";
    return out.str();
}

namespace detail {

struct LineReader {
    std::string_view text;
    int number = 0;

    // next non-empty line, or nullopt at end of input
    std::optional<std::string_view> next() {
        while (!text.empty()) {
            std::size_t nl = text.find('\n');
            std::string_view line = text.substr(0, nl);
            text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
            ++number;
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            if (!line.empty()) return line;
        }
        return std::nullopt;
    }
};

inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && line[i] == ' ') ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline int parse_int(std::string_view field, int line, const std::string& what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw parse_error(line, what + ": expected integer, got \"" + std::string(field) + "\"");
    return value;
}

}  // namespace detail

inline TilingDocument parse_document(std::string_view text) {
    detail::LineReader reader{text};
    auto require = [&](const char* what) {
        auto line = reader.next();
        if (!line) throw parse_error(reader.number + 1, std::string("unexpected end of document, expected ") + what);
        return *line;
    };

    if (require("format tag") != TilingDocument::format_tag)
        throw parse_error(reader.number, "format tag: expected punctile-tiling/v1");

    TilingDocument doc;
    {
        auto f = detail::split_fields(require("k"));
        if (f.size() != 2 || f[0] != "k") throw parse_error(reader.number, "expected \"k <int>\"");
        doc.k = detail::parse_int(f[1], reader.number, "k");
        if (doc.k < 1) throw parse_error(reader.number, "k must be >= 1");
    }
    int dim = 0;
    {
        auto f = detail::split_fields(require("dim"));
        if (f.size() != 2 || f[0] != "dim")
            throw parse_error(reader.number, "expected \"dim <int>\"");
        dim = detail::parse_int(f[1], reader.number, "dim");
        if (dim < 1 || dim > 16) throw parse_error(reader.number, "dim must be in [1, 16]");
    }
    {
        auto f = detail::split_fields(require("periods"));
        if (f.size() != static_cast<std::size_t>(dim) + 1 || f[0] != "periods")
            throw parse_error(reader.number, "expected \"periods\" with one extent per axis");
        for (int i = 1; i <= dim; ++i) {
            int p = detail::parse_int(f[i], reader.number, "period");
            if (p < 1) throw parse_error(reader.number, "periods must be positive");
            doc.periods.push_back(p);
        }
    }

    std::string_view line = require("meta or placements");
    while (true) {
        auto f = detail::split_fields(line);
        if (f.empty() || f[0] != "meta") break;
        if (f.size() < 3) throw parse_error(reader.number, "expected \"meta <key> <value>\"");
        std::string value(f[2]);
        for (std::size_t i = 3; i < f.size(); ++i) value += ' ', value += f[i];
        doc.meta.emplace_back(std::string(f[1]), std::move(value));
        line = require("meta or placements");
    }

    std::size_t count = 0;
    {
        auto f = detail::split_fields(line);
        if (f.size() != 2 || f[0] != "placements")
            throw parse_error(reader.number, "expected \"placements <count>\"");
        int c = detail::parse_int(f[1], reader.number, "placement count");
        if (c < 0) throw parse_error(reader.number, "placement count must be >= 0");
        count = static_cast<std::size_t>(c);
    }

    doc.placements.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        auto f = detail::split_fields(require("placement"));
        if (f.size() != static_cast<std::size_t>(dim) + 2 || f[0] != "p")
            throw parse_error(reader.number,
                              "expected \"p <axis> <coord...>\" with one coordinate per axis");
        Placement p;
        p.axis = detail::parse_int(f[1], reader.number, "axis");
        if (p.axis < 0 || p.axis >= dim) throw parse_error(reader.number, "axis out of range");
        for (int a = 0; a < dim; ++a) {
            int c = detail::parse_int(f[a + 2], reader.number, "coordinate");
            if (c < 0 || c >= doc.periods[a])
                throw parse_error(reader.number, "coordinate out of range [0, period)");
            p.origin.push_back(c);
        }
        doc.placements.push_back(std::move(p));
    }

    if (require("end") != "end") throw parse_error(reader.number, "expected \"end\"");
    if (reader.next()) throw parse_error(reader.number, "trailing content after \"end\"");
    return doc;
}

}  // namespace punctile
