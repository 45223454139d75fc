#pragma once

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "core.hpp"
#include "group.hpp"

namespace grkit {

// On-disk group format: {"order": n, "table": [[...], ...]} with optional
// {"generators": {"a": 1, ...}}. Table entries are 0-based, 0 the identity,
// entry [i][j] = i*j.
inline nlohmann::ordered_json group_table_json(const FiniteGroup& G) {
    nlohmann::ordered_json j;
    j["order"] = G.order();
    auto rows = nlohmann::ordered_json::array();
    for (int a = 0; a < G.order(); ++a) {
        auto row = nlohmann::ordered_json::array();
        for (int b = 0; b < G.order(); ++b) row.push_back(G.mul(a, b));
        rows.push_back(std::move(row));
    }
    j["table"] = std::move(rows);
    if (!G.generator_labels().empty()) {
        nlohmann::ordered_json labels;
        for (const auto& [name, g] : G.generator_labels()) labels[name] = g;
        j["generators"] = std::move(labels);
    }
    return j;
}

inline void write_group_table(const FiniteGroup& G, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw error("cannot open '" + path + "' for writing");
    out << group_table_json(G).dump(1) << "\n";
}

inline FiniteGroup group_from_json(const nlohmann::json& j, const std::string& where) {
    if (!j.is_object()) throw error(where + ": expected a JSON object");
    if (!j.contains("order") || !j["order"].is_number_integer())
        throw error(where + ": missing integer field 'order'");
    long long n = j["order"].get<long long>();
    if (!j.contains("table") || !j["table"].is_array())
        throw error(where + ": missing array field 'table'");
    const auto& t = j["table"];
    if (static_cast<long long>(t.size()) != n)
        throw error(where + ": 'table' has " + std::to_string(t.size()) +
                    " rows but order is " + std::to_string(n));
    std::vector<std::vector<Elt>> rows;
    rows.reserve(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!t[i].is_array() || static_cast<long long>(t[i].size()) != n)
            throw error(where + ": table row " + std::to_string(i) + " is not an array of length " +
                        std::to_string(n));
        std::vector<Elt> row;
        row.reserve(t[i].size());
        for (std::size_t k = 0; k < t[i].size(); ++k) {
            if (!t[i][k].is_number_integer())
                throw error(where + ": non-integer entry at (" + std::to_string(i) + "," +
                            std::to_string(k) + ")");
            row.push_back(t[i][k].get<Elt>());
        }
        rows.push_back(std::move(row));
    }
    std::map<std::string, Elt> labels;
    if (j.contains("generators")) {
        if (!j["generators"].is_object()) throw error(where + ": 'generators' must be an object");
        for (const auto& [name, v] : j["generators"].items()) {
            if (!v.is_number_integer())
                throw error(where + ": generator '" + name + "' must map to an integer");
            labels[name] = v.get<Elt>();
        }
    }
    try {
        return FiniteGroup(rows, std::move(labels));
    } catch (const error& e) {
        throw error(where + ": " + e.what());
    }
}

inline FiniteGroup read_group_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw error(path + ": " + e.what());
    }
    return group_from_json(j, path);
}

}  // namespace grkit
