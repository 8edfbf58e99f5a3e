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

#include <doctest.h>

#include <algorithm>

#include "gamescc/connectivity.hpp"
#include "gamescc/generate.hpp"
#include "gamescc/rng.hpp"

using namespace gamescc;

namespace {

MullerGame four_cycle() {
    // a -> x -> b -> y -> a
    return MullerGame::connectivity(
        Arena::make(2, 2, {{0, 2}, {2, 1}, {1, 3}, {3, 0}}, {"a", "b", "x", "y"}));
}

MullerGame branching_x() {
    // a -> x, b -> x, x -> a, x -> b: player 1 can avoid b forever.
    return MullerGame::connectivity(
        Arena::make(2, 1, {{0, 2}, {1, 2}, {2, 0}, {2, 1}}, {"a", "b", "x"}));
}

MullerGame two_stage() {
    // a,b,c player 0; x,y,z,w player 1. Forced in two waves: x,y,z then w.
    return MullerGame::connectivity(Arena::make(
        3, 4, {{0, 3}, {3, 1}, {1, 4}, {4, 2}, {2, 5}, {5, 0}, {2, 6}, {6, 0}, {6, 1}},
        {"a", "b", "c", "x", "y", "z", "w"}));
}

MullerGame random_connectivity(int max_v, SplitMix64& rng) {
    GenParams p;
    int n = rng.range(2, max_v);
    p.n0 = rng.range(1, n - 1);
    p.n1 = n - p.n0;
    p.edge_p = 0.2 + 0.2 * static_cast<double>(rng.below(3));
    MullerGame g = generate_game(p, rng);
    return g;
}

/**
 * Independent cross-check of the product oracle: value iteration on "can
 * player 0 force k more arrivals into the reset states", run to fixpoint.
 * Shares no code with the library's attractor-based solver.
 */
std::vector<bool> buchi_by_backward_induction(const MullerGame& game) {
    const Arena& a = game.arena;
    const int n = a.size();
    const uint32_t full = (uint32_t{1} << n) - 1;
    const int ns = n << n;
    auto id = [&](int v, uint32_t m) { return (v << n) | static_cast<int>(m); };

    std::vector<std::vector<int>> succ(ns);
    std::vector<char> is_reset(ns, 0);
    for (int v = 0; v < n; ++v)
        for (uint32_t m = 0; m <= full; ++m)
            for (int u : a.out(v)) {
                uint32_t m2 = m | (uint32_t{1} << u);
                if (m2 == full) m2 = uint32_t{1} << u;
                succ[id(v, m)].push_back(id(u, m2));
            }
    for (int v = 0; v < n; ++v) is_reset[id(v, uint32_t{1} << v)] = 1;

    auto can_step_into = [&](int s, const std::vector<char>& x) {
        if (succ[s].empty()) return false;
        if (a.owner(s >> n) == 0) {
            for (int t : succ[s])
                if (x[t]) return true;
            return false;
        }
        for (int t : succ[s])
            if (!x[t]) return false;
        return true;
    };
    // Player-0 "eventually visit T" region by naive sweeping.
    auto reach = [&](const std::vector<char>& target) {
        std::vector<char> r = target;
        for (bool changed = true; changed;) {
            changed = false;
            for (int s = 0; s < ns; ++s)
                if (!r[s] && can_step_into(s, r)) {
                    r[s] = 1;
                    changed = true;
                }
        }
        return r;
    };

    std::vector<char> x(ns, 1);
    for (;;) {
        std::vector<char> t(ns, 0);
        for (int s = 0; s < ns; ++s) t[s] = is_reset[s] && can_step_into(s, x);
        std::vector<char> next = reach(t);
        if (next == x) break;
        x = std::move(next);
    }
    std::vector<bool> wins(n);
    for (int v = 0; v < n; ++v) wins[v] = x[id(v, uint32_t{1} << v)];
    return wins;
}

}  // namespace

TEST_CASE("force_set follows its definition") {
    // x's only successor is a.
    MullerGame g1 = MullerGame::connectivity(Arena::make(1, 1, {{1, 0}, {0, 1}}, {"a", "x"}));
    CHECK(force_set(VertexSet::of(2, {1}), VertexSet::of(2, {0}), g1) == VertexSet::of(2, {1}));
    // x has a successor escaping S.
    MullerGame g2 = MullerGame::connectivity(
        Arena::make(2, 1, {{2, 0}, {2, 1}, {0, 2}, {1, 2}}, {"a", "b", "x"}));
    CHECK(force_set(VertexSet::of(3, {2}), VertexSet::of(3, {0}), g2).empty());
}

TEST_CASE("derivative trace of the 4-cycle forces both player-1 vertices at stage 1") {
    DerivativeTrace tr = derivative_trace(four_cycle());
    CHECK(tr.stabilization == 1);
    CHECK(tr.stages[1].forced == VertexSet::of(4, {2, 3}));
    CHECK(tr.final_strongly_connected());
}

TEST_CASE("a branching player-1 vertex is never forced") {
    DerivativeTrace tr = derivative_trace(branching_x());
    CHECK(tr.stabilization == 0);
    CHECK_FALSE(tr.final_strongly_connected());
}

TEST_CASE("the two-stage instance forces x,y,z then w") {
    DerivativeTrace tr = derivative_trace(two_stage());
    REQUIRE(tr.stabilization == 2);
    CHECK(tr.stages[1].forced == VertexSet::of(7, {3, 4, 5}));
    CHECK(tr.stages[2].forced == VertexSet::of(7, {6}));
    CHECK(tr.final_strongly_connected());
    OracleVerdict oracle = oracle_forced_connected(two_stage());
    CHECK(oracle.forced_connected);
    for (bool w : oracle.wins_from) CHECK(w);
}

TEST_CASE("trace laws hold on random games") {
    SplitMix64 rng(808);
    for (int round = 0; round < 200; ++round) {
        MullerGame g = random_connectivity(10, rng);
        DerivativeTrace tr = derivative_trace(g);
        const int n = g.arena.size();

        CHECK(tr.stabilization <= g.arena.n1());
        CHECK(tr.stages[0].forced.empty());
        CHECK(tr.stages[0].residual == g.arena.player_vertices(1));

        VertexSet seen(n);
        for (size_t k = 1; k < tr.stages.size(); ++k) {
            const auto& stage = tr.stages[k];
            const auto& prev = tr.stages[k - 1];
            // Forced sets are pairwise disjoint and consume the residual chain.
            CHECK_FALSE(stage.forced.intersects(seen));
            CHECK_FALSE(stage.forced.empty());
            seen |= stage.forced;
            CHECK(stage.residual == prev.residual - stage.forced);
            CHECK(stage.residual.size() < prev.residual.size());
            CHECK(stage.edges.size() >= prev.edges.size());

            // Stage forced set equals the union of force_set over components.
            VertexSet by_definition(n);
            for (const auto& comp : prev.scc.components)
                by_definition |= force_set(prev.residual, VertexSet::of(n, comp), g);
            CHECK(stage.forced == by_definition);
        }
        // Every multi-vertex component of every stage is a forced trap.
        for (const auto& stage : tr.stages)
            for (const auto& comp : stage.scc.components) {
                if (comp.size() < 2) continue;
                VertexSet x = VertexSet::of(n, comp);
                for (int v : comp) {
                    if (g.arena.owner(v) != 1) continue;
                    for (int w : g.arena.out(v)) CHECK(x.contains(w));
                }
            }
    }
}

TEST_CASE("gamma forest of an edgeless trace is all singleton roots") {
    MullerGame g = MullerGame::connectivity(Arena::make(1, 1, {}, {"a", "x"}));
    GammaForest f = gamma_forest(derivative_trace(g));
    CHECK(f.nodes.size() == 2);
    CHECK(f.roots.size() == 2);
    for (const auto& kids : f.children) CHECK(kids.empty());
}

TEST_CASE("gamma forest of the 4-cycle is one root over four singleton leaves") {
    GammaForest f = gamma_forest(derivative_trace(four_cycle()));
    REQUIRE(f.roots.size() == 1);
    const auto& root = f.nodes[f.roots[0]];
    CHECK(root == std::vector<int>{0, 1, 2, 3});
    CHECK(f.children[f.roots[0]].size() == 4);
}

TEST_CASE("gamma forest of the two-stage instance nests the six-vertex component under V") {
    GammaForest f = gamma_forest(derivative_trace(two_stage()));
    REQUIRE(f.roots.size() == 1);
    CHECK(f.nodes[f.roots[0]].size() == 7);
    bool has_six_child = false;
    for (int child : f.children[f.roots[0]])
        if (f.nodes[child].size() == 6) has_six_child = true;
    CHECK(has_six_child);
}

TEST_CASE("gamma forest children partition their parent on random games") {
    SplitMix64 rng(313);
    for (int round = 0; round < 100; ++round) {
        MullerGame g = random_connectivity(10, rng);
        DerivativeTrace tr = derivative_trace(g);
        GammaForest f = gamma_forest(tr);
        for (size_t nid = 0; nid < f.nodes.size(); ++nid) {
            if (f.children[nid].empty()) continue;
            std::vector<int> merged;
            for (int c : f.children[nid])
                merged.insert(merged.end(), f.nodes[c].begin(), f.nodes[c].end());
            std::sort(merged.begin(), merged.end());
            CHECK(merged == f.nodes[nid]);
        }
        // Roots are exactly the components of the stable graph.
        std::vector<std::vector<int>> roots;
        for (int r : f.roots) roots.push_back(f.nodes[r]);
        std::sort(roots.begin(), roots.end());
        std::vector<std::vector<int>> finals = tr.final_stage().scc.components;
        std::sort(finals.begin(), finals.end());
        CHECK(roots == finals);
    }
}

TEST_CASE("both frameworks decide the worked examples") {
    CHECK(solve_dfcg_mk(four_cycle()).forced_connected);
    CHECK(solve_dfcg(four_cycle()).forced_connected);
    CHECK_FALSE(solve_dfcg_mk(branching_x()).forced_connected);
    CHECK_FALSE(solve_dfcg(branching_x()).forced_connected);
    CHECK(solve_dfcg_mk(two_stage()).forced_connected);
    CHECK(solve_dfcg(two_stage()).forced_connected);
}

TEST_CASE("a single vertex is not forced-connected") {
    MullerGame g = MullerGame::connectivity(Arena::make(1, 0, {}, {"a"}));
    CHECK_FALSE(solve_dfcg_mk(g).forced_connected);
    CHECK_FALSE(solve_dfcg(g).forced_connected);
    CHECK_FALSE(derivative_verdict(g));
    CHECK_FALSE(oracle_forced_connected(g).forced_connected);
}

TEST_CASE("oracle worked examples") {
    MullerGame two_cycle =
        MullerGame::connectivity(Arena::make(1, 1, {{0, 1}, {1, 0}}, {"a", "x"}));
    CHECK(oracle_forced_connected(two_cycle).forced_connected);
    CHECK_FALSE(oracle_forced_connected(branching_x()).forced_connected);
    CHECK_THROWS_AS(
        oracle_forced_connected(MullerGame::connectivity(Arena::make(8, 8, {})), 14),
        std::invalid_argument);
}

TEST_CASE("the product oracle matches an independent backward-induction solver") {
    SplitMix64 rng(66);
    for (int round = 0; round < 120; ++round) {
        MullerGame g = random_connectivity(8, rng);
        OracleVerdict fast = oracle_forced_connected(g);
        std::vector<bool> slow = buchi_by_backward_induction(g);
        REQUIRE(fast.wins_from.size() == slow.size());
        for (size_t v = 0; v < slow.size(); ++v) CHECK(fast.wins_from[v] == slow[v]);
    }
}

TEST_CASE("four solution routes agree and respect the SCC-test budget") {
    SplitMix64 rng(990);
    for (int round = 0; round < 400; ++round) {
        MullerGame g = random_connectivity(11, rng);
        SolveResult mk = solve_dfcg_mk(g);
        SolveResult dm = solve_dfcg(g);
        bool expected = oracle_forced_connected(g).forced_connected;
        CHECK(mk.forced_connected == expected);
        CHECK(dm.forced_connected == expected);
        CHECK(derivative_verdict(g) == expected);

        const uint64_t n1 = static_cast<uint64_t>(g.arena.n1());
        CHECK(mk.stats.scc_tests <= static_cast<uint64_t>(g.arena.edge_count()) + n1 * n1);
        // A positive verdict needs a strongly connected arena.
        if (expected) CHECK(tarjan_scc(g.arena).single_component());
    }
}
