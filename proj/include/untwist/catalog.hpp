#pragma once

#include <json.hpp>

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "untwist/knot_invariants.hpp"

namespace untwist {

struct KnotRecord {
    std::string name;
    SeifertMatrix seifert;
    std::string provenance;
};

namespace detail {

inline IntMatrix matrix_from_json(const nlohmann::json& rows) {
    if (!rows.is_array()) throw ParseError("seifert matrix must be an array of arrays");
    const std::size_t n = rows.size();
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || row.size() != n)
            throw ParseError("seifert matrix must be square");
        for (std::size_t j = 0; j < n; ++j) {
            if (!row[j].is_number_integer())
                throw ParseError("seifert matrix entries must be integers");
            m(i, j) = Int(row[j].get<std::int64_t>());
        }
    }
    return m;
}

}  // namespace detail

// JSON-lines catalog: one {"name", "seifert", "provenance"} object per line.
inline std::vector<KnotRecord> parse_catalog(std::string_view text) {
    std::vector<KnotRecord> records;
    std::set<std::string> names;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("catalog line " + std::to_string(line_no) +
                             ": invalid JSON: " + e.what());
        }
        if (!obj.is_object() || !obj.contains("name") ||
            !obj["name"].is_string() || !obj.contains("seifert"))
            throw ParseError("catalog line " + std::to_string(line_no) +
                             ": expected {\"name\", \"seifert\", \"provenance\"}");
        std::string name = obj["name"].get<std::string>();
        if (!names.insert(name).second)
            throw ParseError("catalog line " + std::to_string(line_no) +
                             ": duplicate knot name '" + name + "'");
        std::string provenance;
        if (obj.contains("provenance") && obj["provenance"].is_string())
            provenance = obj["provenance"].get<std::string>();
        try {
            SeifertMatrix v(detail::matrix_from_json(obj["seifert"]));
            records.push_back(
                KnotRecord{std::move(name), std::move(v), std::move(provenance)});
        } catch (const Error& e) {
            throw ParseError("catalog line " + std::to_string(line_no) + ": " +
                             e.what());
        }
    }
    return records;
}

inline std::string serialize_catalog(const std::vector<KnotRecord>& records) {
    std::string out;
    for (const KnotRecord& r : records) {
        nlohmann::ordered_json obj;
        obj["name"] = r.name;
        auto rows = nlohmann::ordered_json::array();
        const IntMatrix& m = r.seifert.matrix();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            auto row = nlohmann::ordered_json::array();
            for (std::size_t j = 0; j < m.cols(); ++j)
                row.push_back(to_int64(m(i, j)));
            rows.push_back(row);
        }
        obj["seifert"] = rows;
        obj["provenance"] = r.provenance;
        out += obj.dump();
        out += '\n';
    }
    return out;
}

// Small table of verified presentations. Every entry passes Seifert
// validation on load; the invariants derived from these matrices are pinned
// by the test suite.
inline const std::vector<KnotRecord>& bundled_catalog() {
    static const std::vector<KnotRecord> records = parse_catalog(R"catalog(
{"name":"unknot","seifert":[],"provenance":"empty presentation, genus 0"}
{"name":"3_1","seifert":[[-1,1],[0,-1]],"provenance":"genus-1 band presentation of the trefoil"}
{"name":"4_1","seifert":[[1,1],[0,-1]],"provenance":"genus-1 band presentation of the figure-eight knot"}
{"name":"5_1","seifert":[[-1,1,0,0],[0,-1,1,0],[0,0,-1,1],[0,0,0,-1]],"provenance":"genus-2 band presentation of the (2,5) torus knot"}
{"name":"5_2","seifert":[[1,1],[0,2]],"provenance":"genus-1 twist-knot presentation, determinant 7"}
{"name":"6_1","seifert":[[1,0],[1,-2]],"provenance":"genus-1 twist-knot presentation, determinant 9"}
{"name":"3_1#3_1","seifert":[[-1,1,0,0],[0,-1,0,0],[0,0,-1,1],[0,0,0,-1]],"provenance":"block sum of two trefoil presentations"}
)catalog");
    return records;
}

inline const KnotRecord* find_knot(const std::vector<KnotRecord>& catalog,
                                   std::string_view name) {
    for (const KnotRecord& r : catalog)
        if (r.name == name) return &r;
    return nullptr;
}

}  // namespace untwist
