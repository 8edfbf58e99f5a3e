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
#include <functional>
#include <vector>

#include "gamescc/arena.hpp"
#include "gamescc/connectivity.hpp"

namespace gamescc {

/// Winning sets in a linear order extending strict inclusion.
using OmegaOrder = std::vector<VertexSet>;

/**
 * Orders a family of winning sets so that any strict subset comes before
 * its supersets; ties broken by (size, lexicographic members). Throws on
 * duplicate sets.
 */
OmegaOrder topo_order_omega(const std::vector<VertexSet>& omega);

/// A winning set is sensible iff it determines a subgame.
bool is_sensible(const VertexSet& w, const Arena& arena);

/**
 * Horn's construction for a forced-connected winning set W that is not a
 * 1-trap: a synthetic player-1 vertex stands in for "player 0 covers W".
 * It is entered from every player-0 vertex of W and exits to wherever W's
 * player-1 vertices could escape; W leaves the winning family and every
 * strict superset of W absorbs the new vertex, so |omega| shrinks by one
 * while both winning regions are preserved off the new vertex.
 *
 * Preconditions (violations throw std::invalid_argument): W is in omega,
 * the subgame on W is forced-connected, and W is not a 1-trap.
 */
MullerGame horn_construction(const MullerGame& game, const VertexSet& w);

struct MullerStats {
    uint64_t iterations = 0;
    uint64_t horn_steps = 0;
    uint64_t attractor_removals = 0;
};

/**
 * Snapshot of the working game at the end of one solver iteration: the
 * current game over its live vertices, the originating vertex id behind
 * each snapshot index, and player 0's region banked so far (original and
 * synthetic ids mixed).
 */
struct HornSnapshot {
    MullerGame game;
    std::vector<int> global_of;
    std::vector<int> win0_banked;
    uint64_t iteration = 0;
};
using HornObserver = std::function<void(const HornSnapshot&)>;

/**
 * Solves an explicitly-given Muller game.
 *
 * Winning sets are consumed smallest-first. A set that no longer
 * determines a subgame, or whose subgame is not forced-connected, is
 * discarded. A forced-connected 1-trap banks its player-0 attractor and
 * evicts every winning set the removal touched; any other
 * forced-connected set is contracted by Horn's construction. Either way
 * the family shrinks every iteration, and at exhaustion the banked
 * region intersected with the original vertices is player 0's.
 *
 * The connectivity subroutine is selectable; the observer, when given,
 * runs after every iteration.
 */
WinningRegions solve_explicit_muller(const MullerGame& game,
                                     ConnectivityAlgo algo = ConnectivityAlgo::dfcg_mk,
                                     MullerStats* stats = nullptr,
                                     const HornObserver& observer = nullptr);

/**
 * Independent exponential reference solver: recursive case analysis on
 * whether the current vertex set is a winning set, peeling single-vertex
 * attractors and opponent paradises, memoized per vertex subset. Throws
 * std::invalid_argument when |V| exceeds the cap.
 */
WinningRegions zielonka_oracle(const MullerGame& game, int cap = 9);

/**
 * The four-vertex regression game whose middle winning set stops
 * determining a subgame after the first Horn contraction. The arena
 * satisfies, by construction: the subgame on {v1, u1} is forced-connected
 * and not a 1-trap, and {v1, u1, u2} determines a subgame before the
 * contraction but not after it.
 */
MullerGame build_horn_countercase();

}  // namespace gamescc
