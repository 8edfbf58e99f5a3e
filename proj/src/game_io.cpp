/*
 * Copyright 2026 the gamescc authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "gamescc/game_io.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

namespace gamescc {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::vector<std::string> string_array(const json& j, const char* key) {
    if (!j.is_array()) throw ParseError(std::string(key) + " must be an array");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string()) throw ParseError(std::string(key) + " must contain strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

}  // namespace

MullerGame parse_game(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("top-level value must be an object");
    for (const auto& [key, _] : doc.items())
        if (key != "v0" && key != "v1" && key != "edges" && key != "omega")
            throw ParseError("unknown key \"" + key + "\"");
    if (!doc.contains("v0") || !doc.contains("v1") || !doc.contains("edges"))
        throw ParseError("document requires keys v0, v1, edges");

    std::vector<std::string> v0 = string_array(doc["v0"], "v0");
    std::vector<std::string> v1 = string_array(doc["v1"], "v1");
    if (v0.empty() && v1.empty()) throw ParseError("empty vertex set");

    std::sort(v0.begin(), v0.end());
    std::sort(v1.begin(), v1.end());

    std::map<std::string, int> index;
    std::vector<std::string> names;
    for (const auto& nm : v0) {
        if (!index.emplace(nm, static_cast<int>(names.size())).second)
            throw ParseError("duplicate vertex name \"" + nm + "\"");
        names.push_back(nm);
    }
    for (const auto& nm : v1) {
        if (!index.emplace(nm, static_cast<int>(names.size())).second)
            throw ParseError("duplicate vertex name \"" + nm + "\"");
        names.push_back(nm);
    }

    auto lookup = [&](const std::string& nm) {
        auto it = index.find(nm);
        if (it == index.end()) throw ParseError("unknown vertex name \"" + nm + "\"");
        return it->second;
    };

    if (!doc["edges"].is_array()) throw ParseError("edges must be an array");
    std::vector<Edge> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw ParseError("each edge must be a [from, to] pair of strings");
        edges.emplace_back(lookup(e[0].get<std::string>()), lookup(e[1].get<std::string>()));
    }

    Arena arena;
    try {
        arena = Arena::make(static_cast<int>(v0.size()), static_cast<int>(v1.size()), edges,
                            std::move(names));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }

    std::vector<VertexSet> omega;
    if (doc.contains("omega")) {
        if (!doc["omega"].is_array()) throw ParseError("omega must be an array");
        std::set<std::vector<uint64_t>> seen;
        for (const auto& w : doc["omega"]) {
            VertexSet set(arena.size());
            for (const auto& nm : string_array(w, "omega member")) {
                int v = lookup(nm);
                if (set.contains(v)) throw ParseError("duplicate vertex \"" + nm + "\" in winning set");
                set.insert(v);
            }
            if (set.empty()) throw ParseError("empty winning set");
            if (!seen.insert(set.words()).second) throw ParseError("duplicate winning set");
            omega.push_back(std::move(set));
        }
    } else {
        omega.push_back(VertexSet::full(arena.size()));
    }
    return MullerGame{std::move(arena), std::move(omega)};
}

std::string serialize_game(const MullerGame& game) {
    const Arena& a = game.arena;

    auto sorted_names = [&](int lo, int hi) {
        std::vector<std::string> ns;
        for (int v = lo; v < hi; ++v) ns.push_back(a.name(v));
        std::sort(ns.begin(), ns.end());
        return ns;
    };

    ordered_json doc;
    doc["v0"] = sorted_names(0, a.n0());
    doc["v1"] = sorted_names(a.n0(), a.size());

    std::vector<std::pair<std::string, std::string>> edge_names;
    for (const auto& [u, v] : a.edges()) edge_names.emplace_back(a.name(u), a.name(v));
    std::sort(edge_names.begin(), edge_names.end());
    ordered_json edges = ordered_json::array();
    for (const auto& [f, t] : edge_names) edges.push_back({f, t});
    doc["edges"] = std::move(edges);

    if (!game.is_connectivity()) {
        std::vector<std::vector<std::string>> members;
        for (const VertexSet& w : game.omega) {
            std::vector<std::string> ns;
            w.for_each([&](int v) { ns.push_back(a.name(v)); });
            std::sort(ns.begin(), ns.end());
            members.push_back(std::move(ns));
        }
        std::sort(members.begin(), members.end());
        doc["omega"] = members;
    }
    return doc.dump() + "\n";
}

}  // namespace gamescc
