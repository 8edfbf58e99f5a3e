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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gamescc/vertex_set.hpp"

namespace gamescc {

using Edge = std::pair<int, int>;

/**
 * Finite bipartite game graph.
 *
 * Player 0 owns the index block [0, n0) and player 1 owns [n0, n0+n1).
 * Every edge alternates ownership, and in_adj is maintained as the exact
 * transpose of out_adj. Immutable after construction, safe to share.
 */
class Arena {
public:
    Arena() = default;  // the empty arena

    /**
     * Validates and builds an arena. Throws std::invalid_argument on a
     * non-bipartite edge, a duplicate edge, an endpoint out of range, or a
     * name list of the wrong length. Names default to "v<i>".
     */
    static Arena make(int n0, int n1, const std::vector<Edge>& edges,
                      std::vector<std::string> names = {});

    int n0() const { return n0_; }
    int n1() const { return n1_; }
    int size() const { return n0_ + n1_; }

    bool is_player0(int v) const { return v < n0_; }
    int owner(int v) const { return v < n0_ ? 0 : 1; }

    const std::vector<int>& out(int v) const { return out_adj_[v]; }
    const std::vector<int>& in(int v) const { return in_adj_[v]; }
    const std::string& name(int v) const { return names_[v]; }
    const std::vector<std::string>& names() const { return names_; }

    int edge_count() const { return edge_count_; }
    /// All edges, grouped by source in index order.
    std::vector<Edge> edges() const;

    VertexSet vertices() const { return VertexSet::full(size()); }
    VertexSet player_vertices(int sigma) const;

private:
    int n0_ = 0, n1_ = 0, edge_count_ = 0;
    std::vector<std::vector<int>> out_adj_, in_adj_;
    std::vector<std::string> names_;
};

/**
 * An arena plus an explicit family of winning sets. Player 0 wins a play
 * iff the set of infinitely visited vertices is a member of omega. The
 * connectivity (update) game is the special case omega == {V}.
 */
struct MullerGame {
    Arena arena;
    std::vector<VertexSet> omega;

    bool is_connectivity() const {
        return omega.size() == 1 && omega[0] == VertexSet::full(arena.size());
    }

    static MullerGame connectivity(Arena a) {
        VertexSet all = VertexSet::full(a.size());
        return MullerGame{std::move(a), {all}};
    }
};

/// Disjoint bipartition of the vertex set by winner.
struct WinningRegions {
    VertexSet win0;
    VertexSet win1;

    bool is_partition_of(const VertexSet& all) const {
        return !win0.intersects(win1) && (win0 | win1) == all;
    }
};

/**
 * Strongly connected components of a digraph.
 *
 * component_of maps a vertex to its component id (-1 outside the input
 * vertex set). topo_order lists component ids such that every
 * cross-component edge goes from an earlier to a later entry.
 */
struct SccResult {
    std::vector<int> component_of;
    std::vector<std::vector<int>> components;
    std::vector<int> topo_order;

    bool single_component() const { return components.size() == 1; }
};

/**
 * Tarjan's algorithm on the subgraph spanned by `vertices`, with n the
 * universe size. Iterative, deterministic given the input order. Throws
 * std::invalid_argument if an edge endpoint lies outside the vertex set.
 */
SccResult tarjan_scc(int n, const VertexSet& vertices, const std::vector<Edge>& edges);

/// Tarjan on a whole arena.
SccResult tarjan_scc(const Arena& arena);

/// True iff every vertex of S has at least one successor inside S.
bool determines_subgame(const VertexSet& s, const Arena& arena);

/**
 * True iff S determines a subgame and no sigma-owned vertex of S has an
 * edge leaving S (player sigma cannot exit S).
 */
bool is_sigma_trap(int sigma, const VertexSet& s, const Arena& arena);

/**
 * Attractor of player sigma to `target` inside the subgame on `domain`:
 * the least superset A of target such that a sigma vertex of the domain
 * with a domain successor in A joins A, and an opponent vertex whose
 * domain successors all lie in A joins A.
 *
 * Preconditions (violations throw std::invalid_argument): target is a
 * subset of domain, and domain determines a subgame.
 */
VertexSet attractor(int sigma, const VertexSet& target, const VertexSet& domain,
                    const Arena& arena);

/**
 * Attractor without the subgame precondition, interpreting dead ends by
 * the game rule that a play ending at a vertex with no moves is lost by
 * player 0: an opponent vertex with no domain successor is never
 * attracted, whichever player it belongs to.
 */
VertexSet attractor_unchecked(int sigma, const VertexSet& target, const VertexSet& domain,
                              const Arena& arena);

/**
 * Arena induced by a vertex subset, reindexed densely with player-0
 * vertices first. If global_of is non-null it receives, per new index,
 * the originating index in `arena`.
 */
Arena induced_subarena(const Arena& arena, const VertexSet& s, std::vector<int>* global_of);

}  // namespace gamescc
