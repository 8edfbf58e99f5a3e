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

#pragma once

#include <cstdint>
#include <vector>

#include "gamescc/arena.hpp"
#include "gamescc/isccm.hpp"

namespace gamescc {

/**
 * Player-1 vertices of U, outside S, that have an edge into S and all of
 * whose successors lie in S: the vertices forced to release their edges
 * once S is strongly connected.
 */
VertexSet force_set(const VertexSet& u, const VertexSet& s, const MullerGame& game);

/**
 * The derivative sequence of a connectivity game. Stage 0 holds only the
 * player-0 edges; each later stage releases the edges of every player-1
 * vertex whose successors have collapsed into one component of the
 * previous stage. stabilization is the last stage whose forced set is
 * nonempty (0 when no vertex is ever forced); the graph is unchanged from
 * that stage on.
 */
struct DerivativeTrace {
    struct Stage {
        std::vector<Edge> edges;
        VertexSet forced;    // F_k
        VertexSet residual;  // U_k
        SccResult scc;
    };
    std::vector<Stage> stages;  // indices 0 .. stabilization
    int stabilization = 0;

    const Stage& final_stage() const { return stages.back(); }
    /// Graph-theoretic verdict: the stable derivative graph is one SCC.
    bool final_strongly_connected() const { return stages.back().scc.single_component(); }
};

DerivativeTrace derivative_trace(const MullerGame& game);

/**
 * Forest of the derivative sequence: all singletons plus every new
 * component of any stage, with each new component parented over the
 * previous stage's components it swallowed.
 */
struct GammaForest {
    std::vector<std::vector<int>> nodes;     // vertex sets, singletons first
    std::vector<std::vector<int>> children;  // node id -> child node ids
    std::vector<int> roots;
};

GammaForest gamma_forest(const DerivativeTrace& trace);

/// Operation tallies of one connectivity solve.
struct SolveStats {
    uint64_t stages = 0;
    uint64_t scc_tests = 0;
    uint64_t forced_count = 0;
    Counters isccm;
};

struct SolveResult {
    bool forced_connected = false;
    SolveStats stats;
};

/**
 * First framework: scan the undecided player-1 vertices stage by stage,
 * pruning outgoing edges whose targets fell into one component and
 * forwarding each newly forced vertex's single surviving edge into the
 * incremental SCC engine; forced-connected iff the engine ends with one
 * component (after the upfront strong-connectivity check of the arena).
 */
SolveResult solve_dfcg_mk(const MullerGame& game);

/**
 * Second framework: runs on the contracted graph over the player-0
 * vertices. Out-degree and per-component in-degree tables over player-1
 * vertices detect forcing; each forced vertex contributes the edge bundle
 * predecessors x {target component}, streamed through the engine, whose
 * merge events update the tables in turn.
 */
SolveResult solve_dfcg(const MullerGame& game);

/// The derivative-sequence verdict with the single-vertex convention applied.
bool derivative_verdict(const MullerGame& game);

struct OracleVerdict {
    bool forced_connected = false;       // player 0 wins from every vertex
    std::vector<bool> wins_from;         // per-vertex winner map
};

/**
 * Brute-force reference: the product Buchi game over (vertex, visited set)
 * states, where the visited set resets on full coverage; player 0 wins
 * from v iff it can force every vertex to be visited infinitely often.
 * Throws std::invalid_argument when |V| exceeds the cap.
 */
OracleVerdict oracle_forced_connected(const MullerGame& game, int cap = 14);

enum class ConnectivityAlgo { dfcg_mk, dfcg, derivative, oracle };

/// Verdict through the selected route.
bool forced_connected_by(const MullerGame& game, ConnectivityAlgo algo, int oracle_cap = 14);

}  // namespace gamescc
