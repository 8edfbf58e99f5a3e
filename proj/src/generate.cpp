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

#include "gamescc/generate.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace gamescc {

namespace {

std::vector<std::string> block_names(const char* prefix, int count) {
    int width = 1;
    for (int c = count; c > 10; c /= 10) ++width;
    std::vector<std::string> out;
    for (int i = 0; i < count; ++i) {
        std::string num = std::to_string(i);
        out.push_back(prefix + std::string(width - num.size(), '0') + num);
    }
    return out;
}

VertexSet random_nonempty_subset(int n, SplitMix64& rng) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (rng.chance(0.5)) s.insert(v);
    if (s.empty()) s.insert(rng.range(0, n - 1));
    return s;
}

std::vector<VertexSet> make_omega(int n, OmegaClass cls, int sets, SplitMix64& rng) {
    std::vector<VertexSet> omega;
    auto contains = [&](const VertexSet& s) {
        return std::find(omega.begin(), omega.end(), s) != omega.end();
    };
    switch (cls) {
        case OmegaClass::connectivity:
            omega.push_back(VertexSet::full(n));
            break;
        case OmegaClass::random_explicit: {
            int attempts = 0;
            while (static_cast<int>(omega.size()) < sets && attempts++ < 64 * sets) {
                VertexSet s = random_nonempty_subset(n, rng);
                if (!contains(s)) omega.push_back(s);
            }
            if (omega.empty())
                throw std::invalid_argument("generate: cannot draw any winning set");
            break;
        }
        case OmegaClass::linear: {
            if (sets > n) throw std::invalid_argument("generate: chain longer than |V|");
            // A random permutation; set k takes a strictly growing prefix.
            std::vector<int> perm(n);
            for (int i = 0; i < n; ++i) perm[i] = i;
            for (int i = n - 1; i > 0; --i)
                std::swap(perm[i], perm[rng.range(0, i)]);
            std::vector<int> cuts;  // distinct prefix sizes
            std::set<int> chosen;
            while (static_cast<int>(chosen.size()) < sets) chosen.insert(rng.range(1, n));
            cuts.assign(chosen.begin(), chosen.end());
            for (int cut : cuts) {
                VertexSet s(n);
                for (int i = 0; i < cut; ++i) s.insert(perm[i]);
                omega.push_back(s);
            }
            break;
        }
        case OmegaClass::anti_chain: {
            // Equal-cardinality distinct sets are automatically incomparable.
            int card = std::max(1, std::min(n - 1, n / 2));
            int attempts = 0;
            while (static_cast<int>(omega.size()) < sets && attempts++ < 128 * sets) {
                VertexSet s(n);
                while (s.size() < card) s.insert(rng.range(0, n - 1));
                if (!contains(s)) omega.push_back(s);
            }
            if (omega.empty()) throw std::invalid_argument("generate: empty anti-chain");
            break;
        }
        case OmegaClass::fully_separated: {
            if (sets > n)
                throw std::invalid_argument("generate: more separated sets than candidate separators");
            // Pick the separators first; bodies avoid every separator.
            std::vector<int> perm(n);
            for (int i = 0; i < n; ++i) perm[i] = i;
            for (int i = n - 1; i > 0; --i)
                std::swap(perm[i], perm[rng.range(0, i)]);
            std::vector<int> separators(perm.begin(), perm.begin() + sets);
            for (int k = 0; k < sets; ++k) {
                VertexSet s(n);
                s.insert(separators[k]);
                for (int i = sets; i < n; ++i)
                    if (rng.chance(0.5)) s.insert(perm[i]);
                omega.push_back(s);
            }
            break;
        }
    }
    return omega;
}

}  // namespace

MullerGame generate_game(GenParams params, SplitMix64& rng) {
    if (params.n0 < 0 || params.n1 < 0 || params.n0 + params.n1 == 0)
        throw std::invalid_argument("generate: empty vertex set");
    const int n = params.n0 + params.n1;
    double p = params.edge_p;
    if (p < 0) p = n > 1 ? std::min(1.0, 2.0 * std::log(n) / n) : 0.0;

    std::vector<Edge> edges;
    for (int u = 0; u < params.n0; ++u)
        for (int v = params.n0; v < n; ++v) {
            if (rng.chance(p)) edges.emplace_back(u, v);
            if (rng.chance(p)) edges.emplace_back(v, u);
        }

    std::vector<std::string> names = block_names("a", params.n0);
    std::vector<std::string> b = block_names("b", params.n1);
    names.insert(names.end(), b.begin(), b.end());

    Arena arena = Arena::make(params.n0, params.n1, edges, std::move(names));
    std::vector<VertexSet> omega = make_omega(n, params.omega_class, params.sets, rng);
    return MullerGame{std::move(arena), std::move(omega)};
}

const char* omega_class_name(OmegaClass c) {
    switch (c) {
        case OmegaClass::connectivity: return "connectivity";
        case OmegaClass::random_explicit: return "random";
        case OmegaClass::linear: return "linear";
        case OmegaClass::anti_chain: return "anti-chain";
        case OmegaClass::fully_separated: return "fully-separated";
    }
    return "?";
}

OmegaClass omega_class_from_name(const std::string& name) {
    if (name == "connectivity") return OmegaClass::connectivity;
    if (name == "random") return OmegaClass::random_explicit;
    if (name == "linear") return OmegaClass::linear;
    if (name == "anti-chain") return OmegaClass::anti_chain;
    if (name == "fully-separated") return OmegaClass::fully_separated;
    throw std::invalid_argument("unknown omega class \"" + name + "\"");
}

}  // namespace gamescc
