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

#include "gamescc/muller.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <unordered_map>

namespace gamescc {

namespace {

bool omega_less(const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.lex_less(b);
}

std::string synthetic_name(const std::vector<std::string>& member_names) {
    std::vector<std::string> sorted = member_names;
    std::sort(sorted.begin(), sorted.end());
    uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (const auto& nm : sorted) {
        for (char c : nm) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ull;
        }
        h ^= ',';
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("@W:") + buf;
}

VertexSet reuniverse(const VertexSet& s, int universe) {
    VertexSet out(universe);
    s.for_each([&](int v) { out.insert(v); });
    return out;
}

/**
 * The solver's working game: the arena grows by synthetic player-1
 * vertices and shrinks by attractor removals, tracked with an alive mask
 * over a universe large enough for every possible contraction.
 */
struct WorkGame {
    int n_orig = 0;
    int universe = 0;
    std::vector<int> owner;
    std::vector<std::vector<int>> out, in;
    std::vector<std::string> names;
    VertexSet alive;

    explicit WorkGame(const MullerGame& game, int cap) : n_orig(game.arena.size()), universe(cap) {
        const Arena& a = game.arena;
        alive = VertexSet(cap);
        for (int v = 0; v < a.size(); ++v) {
            owner.push_back(a.owner(v));
            out.push_back(a.out(v));
            in.push_back(a.in(v));
            names.push_back(a.name(v));
            alive.insert(v);
        }
    }

    int size() const { return static_cast<int>(owner.size()); }

    bool determines_subgame_in(const VertexSet& w) const {
        bool ok = true;
        w.for_each([&](int v) {
            if (!ok) return;
            for (int t : out[v])
                if (alive.contains(t) && w.contains(t)) return;
            ok = false;
        });
        return ok;
    }

    bool is_one_trap_in(const VertexSet& w) const {
        if (!determines_subgame_in(w)) return false;
        bool trap = true;
        w.for_each([&](int v) {
            if (!trap || owner[v] != 1) return;
            for (int t : out[v])
                if (alive.contains(t) && !w.contains(t)) {
                    trap = false;
                    return;
                }
        });
        return trap;
    }

    VertexSet attr0_in(const VertexSet& target) const {
        VertexSet attr(universe);
        std::vector<int> escapes(size(), 0);
        alive.for_each([&](int v) {
            if (owner[v] != 1) return;
            int cnt = 0;
            for (int t : out[v])
                if (alive.contains(t)) ++cnt;
            escapes[v] = cnt;
        });
        std::vector<int> queue;
        target.for_each([&](int v) {
            attr.insert(v);
            queue.push_back(v);
        });
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (int p : in[v]) {
                if (!alive.contains(p) || attr.contains(p)) continue;
                if (owner[p] == 0) {
                    attr.insert(p);
                    queue.push_back(p);
                } else if (--escapes[p] == 0) {
                    attr.insert(p);
                    queue.push_back(p);
                }
            }
        }
        return attr;
    }

    /// Connectivity game induced on the live vertices of w.
    MullerGame subgame_on(const VertexSet& w, std::vector<int>* global_of) const {
        std::vector<int> order;
        w.for_each([&](int v) {
            if (owner[v] == 0) order.push_back(v);
        });
        const int sub_n0 = static_cast<int>(order.size());
        w.for_each([&](int v) {
            if (owner[v] == 1) order.push_back(v);
        });
        std::vector<int> local(universe, -1);
        std::vector<std::string> sub_names;
        for (size_t i = 0; i < order.size(); ++i) {
            local[order[i]] = static_cast<int>(i);
            sub_names.push_back(names[order[i]]);
        }
        std::vector<Edge> edges;
        for (int g : order)
            for (int t : out[g])
                if (alive.contains(t) && w.contains(t)) edges.emplace_back(local[g], local[t]);
        Arena sub = Arena::make(sub_n0, static_cast<int>(order.size()) - sub_n0, edges,
                                std::move(sub_names));
        if (global_of) *global_of = order;
        return MullerGame::connectivity(std::move(sub));
    }

    int add_synthetic(const VertexSet& w) {
        std::vector<std::string> member_names;
        w.for_each([&](int v) { member_names.push_back(names[v]); });
        int wid = size();
        assert(wid < universe);
        owner.push_back(1);
        out.emplace_back();
        in.emplace_back();
        names.push_back(synthetic_name(member_names));
        alive.insert(wid);

        w.for_each([&](int v) {
            if (owner[v] != 0) return;
            out[v].push_back(wid);
            in[wid].push_back(v);
        });
        VertexSet targets(universe);
        w.for_each([&](int v) {
            if (owner[v] != 1) return;
            for (int t : out[v])
                if (alive.contains(t) && !w.contains(t)) targets.insert(t);
        });
        targets.for_each([&](int t) {
            out[wid].push_back(t);
            in[t].push_back(wid);
        });
        return wid;
    }
};

}  // namespace

OmegaOrder topo_order_omega(const std::vector<VertexSet>& omega) {
    OmegaOrder order = omega;
    std::sort(order.begin(), order.end(), omega_less);
    for (size_t i = 1; i < order.size(); ++i)
        if (order[i - 1] == order[i]) throw std::invalid_argument("duplicate winning set");
    return order;
}

bool is_sensible(const VertexSet& w, const Arena& arena) { return determines_subgame(w, arena); }

MullerGame horn_construction(const MullerGame& game, const VertexSet& w) {
    const Arena& a = game.arena;
    const int n = a.size();

    std::vector<int> sub_global;
    Arena sub = induced_subarena(a, w, &sub_global);
    if (!determines_subgame(w, a))
        throw std::invalid_argument("horn_construction: W does not determine a subgame");
    if (!solve_dfcg_mk(MullerGame::connectivity(sub)).forced_connected)
        throw std::invalid_argument("horn_construction: subgame on W is not forced-connected");
    if (is_sigma_trap(1, w, a)) throw std::invalid_argument("horn_construction: W is a 1-trap");

    std::vector<std::string> member_names;
    w.for_each([&](int v) { member_names.push_back(a.name(v)); });

    const int wid = n;  // appended to the player-1 block
    std::vector<std::string> names = a.names();
    names.push_back(synthetic_name(member_names));

    std::vector<Edge> edges = a.edges();
    w.for_each([&](int v) {
        if (a.owner(v) == 0) edges.emplace_back(v, wid);
    });
    VertexSet targets(n);
    w.for_each([&](int v) {
        if (a.owner(v) != 1) return;
        for (int t : a.out(v))
            if (!w.contains(t)) targets.insert(t);
    });
    targets.for_each([&](int t) { edges.emplace_back(wid, t); });

    Arena grown = Arena::make(a.n0(), a.n1() + 1, edges, std::move(names));

    std::vector<VertexSet> omega;
    for (const VertexSet& o : game.omega) {
        if (o == w) continue;
        VertexSet big = reuniverse(o, n + 1);
        if (w.subset_of(o) && o != w) big.insert(wid);  // strict superset absorbs the new vertex
        omega.push_back(std::move(big));
    }
    return MullerGame{std::move(grown), std::move(omega)};
}

WinningRegions solve_explicit_muller(const MullerGame& game, ConnectivityAlgo algo,
                                     MullerStats* stats, const HornObserver& observer) {
    const int n_orig = game.arena.size();
    const int cap = n_orig + static_cast<int>(game.omega.size());
    WorkGame wg(game, cap);

    std::vector<VertexSet> omega;
    for (const VertexSet& o : game.omega) omega.push_back(reuniverse(o, cap));

    VertexSet banked(cap);
    MullerStats st;

    while (!omega.empty()) {
        ++st.iterations;
        size_t best = 0;
        for (size_t i = 1; i < omega.size(); ++i)
            if (omega_less(omega[i], omega[best])) best = i;
        VertexSet w = omega[best];
        omega.erase(omega.begin() + static_cast<long>(best));

        if (wg.determines_subgame_in(w) &&
            forced_connected_by(wg.subgame_on(w, nullptr), algo)) {
            if (wg.is_one_trap_in(w)) {
                VertexSet attr = wg.attr0_in(w);
                banked |= attr;
                wg.alive -= attr;
                ++st.attractor_removals;
                omega.erase(std::remove_if(omega.begin(), omega.end(),
                                           [&](const VertexSet& o) { return o.intersects(attr); }),
                            omega.end());
            } else {
                ++st.horn_steps;
                int wid = wg.add_synthetic(w);
                for (VertexSet& o : omega)
                    if (w.subset_of(o)) o.insert(wid);  // supersets are strict: w was popped
            }
        }

        if (observer) {
            HornSnapshot snap;
            snap.iteration = st.iterations;
            snap.game = wg.subgame_on(wg.alive, &snap.global_of);
            std::vector<VertexSet> sub_omega;
            std::vector<int> local(wg.universe, -1);
            for (size_t i = 0; i < snap.global_of.size(); ++i) local[snap.global_of[i]] = static_cast<int>(i);
            for (const VertexSet& o : omega) {
                VertexSet so(snap.game.arena.size());
                o.for_each([&](int v) { so.insert(local[v]); });
                sub_omega.push_back(std::move(so));
            }
            snap.game.omega = std::move(sub_omega);
            snap.win0_banked = banked.to_vector();
            observer(snap);
        }
    }

    WinningRegions regions{VertexSet(n_orig), VertexSet(n_orig)};
    for (int v = 0; v < n_orig; ++v) {
        if (banked.contains(v))
            regions.win0.insert(v);
        else
            regions.win1.insert(v);
    }
    if (stats) *stats = st;
    return regions;
}

namespace {

struct OracleSolver {
    const Arena& arena;
    const std::vector<VertexSet>& omega;
    std::unordered_map<uint64_t, std::pair<VertexSet, VertexSet>> memo;

    bool in_omega(const VertexSet& s) const {
        for (const VertexSet& o : omega)
            if (o == s) return true;
        return false;
    }

    // s always determines a sink-free subgame.
    std::pair<VertexSet, VertexSet> solve(const VertexSet& s) {
        const int n = arena.size();
        if (s.empty()) return {VertexSet(n), VertexSet(n)};
        uint64_t key = s.words()[0];
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        const int sigma = in_omega(s) ? 0 : 1;
        const int opp = 1 - sigma;

        std::pair<VertexSet, VertexSet> result{VertexSet(n), VertexSet(n)};
        bool decided = false;
        for (int x : s.to_vector()) {
            VertexSet attr = attractor_unchecked(sigma, VertexSet::of(n, {x}), s, arena);
            if (attr == s) continue;
            auto sub = solve(s - attr);
            const VertexSet& wopp = opp == 0 ? sub.first : sub.second;
            if (wopp.empty()) continue;
            // The opponent owns a paradise; carve out its attractor and
            // settle the rest recursively.
            VertexSet big = attractor_unchecked(opp, wopp, s, arena);
            auto rest = solve(s - big);
            if (opp == 0) {
                result.first = big | rest.first;
                result.second = rest.second;
            } else {
                result.second = big | rest.second;
                result.first = rest.first;
            }
            decided = true;
            break;
        }
        if (!decided) {
            // Every single-vertex attractor is total or leaves a region
            // fully won by sigma: sigma wins everywhere.
            (sigma == 0 ? result.first : result.second) = s;
        }
        memo.emplace(key, result);
        return result;
    }
};

}  // namespace

WinningRegions zielonka_oracle(const MullerGame& game, int cap) {
    const Arena& a = game.arena;
    const int n = a.size();
    if (n > cap) throw std::invalid_argument("zielonka_oracle: vertex cap exceeded");
    if (n > 63) throw std::invalid_argument("zielonka_oracle: unsupported arena size");

    VertexSet full = VertexSet::full(n);
    VertexSet sinks(n);
    for (int v = 0; v < n; ++v)
        if (a.out(v).empty()) sinks.insert(v);
    // A play that dies is lost by player 0: player 1 keeps everything it
    // can drag into a dead end.
    VertexSet lost = attractor_unchecked(1, sinks, full, a);

    OracleSolver solver{a, game.omega, {}};
    auto [w0, w1] = solver.solve(full - lost);
    return WinningRegions{w0, w1 | lost};
}

MullerGame build_horn_countercase() {
    // v1, v2 belong to player 0; u1, u2 to player 1.
    Arena a = Arena::make(2, 2, {{0, 2}, {1, 3}, {2, 0}, {2, 1}, {3, 0}},
                          {"v1", "v2", "u1", "u2"});
    std::vector<VertexSet> omega{
        VertexSet::of(4, {0, 2}),        // {v1, u1}
        VertexSet::of(4, {0, 2, 3}),     // {v1, u1, u2}
        VertexSet::of(4, {0, 1, 2, 3}),  // {v1, v2, u1, u2}
    };
    return MullerGame{std::move(a), std::move(omega)};
}

}  // namespace gamescc
