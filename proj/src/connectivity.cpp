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

#include "gamescc/connectivity.hpp"

#include <cassert>
#include <map>
#include <stdexcept>

namespace gamescc {

VertexSet force_set(const VertexSet& u, const VertexSet& s, const MullerGame& game) {
    const Arena& a = game.arena;
    VertexSet out(a.size());
    u.for_each([&](int v) {
        if (s.contains(v) || a.out(v).empty()) return;
        for (int w : a.out(v))
            if (!s.contains(w)) return;
        out.insert(v);
    });
    return out;
}

DerivativeTrace derivative_trace(const MullerGame& game) {
    const Arena& a = game.arena;
    const int n = a.size();

    DerivativeTrace tr;
    DerivativeTrace::Stage st0;
    for (int v = 0; v < a.n0(); ++v)
        for (int w : a.out(v)) st0.edges.emplace_back(v, w);
    st0.forced = VertexSet(n);
    st0.residual = a.player_vertices(1);
    st0.scc = tarjan_scc(n, VertexSet::full(n), st0.edges);
    tr.stages.push_back(std::move(st0));

    for (;;) {
        const DerivativeTrace::Stage& prev = tr.stages.back();
        VertexSet forced(n);
        prev.residual.for_each([&](int v) {
            if (a.out(v).empty()) return;
            int comp = prev.scc.component_of[a.out(v)[0]];
            for (int w : a.out(v))
                if (prev.scc.component_of[w] != comp) return;
            if (prev.scc.component_of[v] == comp) return;
            forced.insert(v);
        });
        if (forced.empty()) break;

        DerivativeTrace::Stage next;
        next.edges = prev.edges;
        forced.for_each([&](int v) {
            for (int w : a.out(v)) next.edges.emplace_back(v, w);
        });
        next.forced = forced;
        next.residual = prev.residual - forced;
        next.scc = tarjan_scc(n, VertexSet::full(n), next.edges);
        tr.stages.push_back(std::move(next));
    }
    tr.stabilization = static_cast<int>(tr.stages.size()) - 1;
    return tr;
}

GammaForest gamma_forest(const DerivativeTrace& trace) {
    GammaForest g;
    std::map<std::vector<int>, int> id_of;
    const int n = static_cast<int>(trace.stages[0].scc.component_of.size());
    for (int v = 0; v < n; ++v) {
        id_of[{v}] = static_cast<int>(g.nodes.size());
        g.nodes.push_back({v});
        g.children.emplace_back();
    }
    for (size_t k = 1; k < trace.stages.size(); ++k) {
        const SccResult& cur = trace.stages[k].scc;
        const SccResult& prev = trace.stages[k - 1].scc;
        for (const auto& comp : cur.components) {
            if (id_of.count(comp)) continue;  // not new at this stage
            int nid = static_cast<int>(g.nodes.size());
            id_of[comp] = nid;
            g.nodes.push_back(comp);
            g.children.emplace_back();
            // Children: previous-stage components swallowed by comp. Edge
            // sets only grow, so the previous partition refines this one.
            std::vector<char> seen(prev.components.size(), 0);
            for (int v : comp) {
                int pc = prev.component_of[v];
                if (seen[pc]) continue;
                seen[pc] = 1;
                g.children[nid].push_back(id_of.at(prev.components[pc]));
            }
        }
    }
    for (const auto& comp : trace.final_stage().scc.components) g.roots.push_back(id_of.at(comp));
    return g;
}

SolveResult solve_dfcg_mk(const MullerGame& game) {
    const Arena& a = game.arena;
    const int n = a.size();
    SolveResult res;
    // A single vertex admits no infinite play: not forced-connected.
    if (n < 2) return res;
    if (!tarjan_scc(a).single_component()) return res;

    std::vector<Edge> player0_edges;
    for (int v = 0; v < a.n0(); ++v)
        for (int w : a.out(v)) player0_edges.emplace_back(v, w);
    SccPartition engine(n, player0_edges);

    // Intrusive scan lists over the undecided player-1 vertices and their
    // outgoing edges; pruning deletes the head edge physically.
    std::vector<int> etarget, enext;
    std::vector<int> first_out(n, -1);
    for (int u = a.n0(); u < n; ++u) {
        const auto& outs = a.out(u);
        for (size_t i = 0; i < outs.size(); ++i) {
            int e = static_cast<int>(etarget.size());
            etarget.push_back(outs[i]);
            enext.push_back(i + 1 < outs.size() ? e + 1 : -1);
            if (i == 0) first_out[u] = e;
        }
    }
    std::vector<int> next_u(n, -1);
    int first_u = -1;
    for (int u = n - 1; u >= a.n0(); --u) {
        next_u[u] = first_u;
        first_u = u;
    }

    std::vector<Edge> batch;
    for (;;) {
        ++res.stats.stages;
        batch.clear();
        int u = first_u, prev_u = -1;
        while (u != -1) {
            int e = first_out[u];
            assert(e != -1);  // strong connectivity leaves no player-1 sink
            if (enext[e] == -1) {
                batch.emplace_back(u, etarget[e]);
                ++res.stats.forced_count;
                if (first_u == u) first_u = next_u[u];
                if (prev_u != -1) next_u[prev_u] = next_u[u];
                u = next_u[u];
            } else {
                ++res.stats.scc_tests;
                if (engine.same_scc(etarget[e], etarget[enext[e]])) {
                    first_out[u] = enext[e];  // drop the duplicate head edge
                } else {
                    prev_u = u;
                    u = next_u[u];
                }
            }
        }
        if (batch.empty()) break;
        for (const auto& [f, y] : batch) engine.add_edge(f, y);
    }

    res.stats.isccm = engine.counters();
    res.forced_connected = engine.component_count() == 1;
    return res;
}

SolveResult solve_dfcg(const MullerGame& game) {
    const Arena& a = game.arena;
    const int n = a.size(), n0 = a.n0(), n1 = a.n1();
    SolveResult res;
    if (n < 2) return res;
    if (!tarjan_scc(a).single_component()) return res;

    SccPartition engine(n0, {});
    std::vector<int> outdeg(n, 0);
    std::vector<std::vector<int>> indeg(n0, std::vector<int>(n1, 0));
    for (int v = n0; v < n; ++v)
        for (int u : a.out(v)) {
            ++outdeg[v];
            indeg[u][v - n0] = 1;
        }

    std::vector<std::pair<int, int>> batch, pending;
    for (int v = n0; v < n; ++v)
        if (outdeg[v] == 1) {
            outdeg[v] = -1;
            batch.emplace_back(v, a.out(v)[0]);
            ++res.stats.forced_count;
        }

    // Merge callback: fold the absorbed components' in-degree rows into the
    // new canonical vertex and queue every vertex this forces.
    auto on_merge = [&](const MergeEvent& ev) {
        int x = ev.new_canonical;
        for (int y : ev.absorbed) {
            for (int vl = 0; vl < n1; ++vl) {
                indeg[x][vl] += indeg[y][vl];
                if (outdeg[n0 + vl] > 0 && outdeg[n0 + vl] == indeg[x][vl]) {
                    outdeg[n0 + vl] = -1;
                    pending.emplace_back(n0 + vl, x);
                    ++res.stats.forced_count;
                }
            }
        }
    };

    while (!batch.empty()) {
        ++res.stats.stages;
        pending.clear();
        for (const auto& [f, y] : batch)
            for (int p : a.in(f)) engine.add_edge(p, y, on_merge);
        batch.swap(pending);
    }

    res.stats.isccm = engine.counters();
    res.forced_connected = engine.component_count() == 1;
    return res;
}

bool derivative_verdict(const MullerGame& game) {
    if (game.arena.size() < 2) return false;
    return derivative_trace(game).final_strongly_connected();
}

namespace {

/// Backward attractor on an explicit game graph given by CSR predecessors.
std::vector<char> product_attractor(int sigma, const std::vector<char>& target,
                                    const std::vector<char>& domain,
                                    const std::vector<int>& owner,
                                    const std::vector<std::vector<int>>& succ,
                                    const std::vector<std::vector<int>>& pred) {
    const int ns = static_cast<int>(owner.size());
    std::vector<char> attr(ns, 0);
    std::vector<int> escapes(ns, 0);
    std::vector<int> queue;
    for (int s = 0; s < ns; ++s) {
        if (!domain[s]) continue;
        if (owner[s] != sigma) {
            int cnt = 0;
            for (int t : succ[s])
                if (domain[t]) ++cnt;
            escapes[s] = cnt;
        }
        if (target[s]) {
            attr[s] = 1;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        int s = queue.back();
        queue.pop_back();
        for (int p : pred[s]) {
            if (!domain[p] || attr[p]) continue;
            if (owner[p] == sigma) {
                attr[p] = 1;
                queue.push_back(p);
            } else if (--escapes[p] == 0) {
                attr[p] = 1;
                queue.push_back(p);
            }
        }
    }
    return attr;
}

}  // namespace

OracleVerdict oracle_forced_connected(const MullerGame& game, int cap) {
    const Arena& a = game.arena;
    const int n = a.size();
    if (n > cap) throw std::invalid_argument("oracle_forced_connected: vertex cap exceeded");

    OracleVerdict verdict;
    verdict.wins_from.assign(n, false);
    if (n == 0) {
        verdict.forced_connected = true;
        return verdict;
    }

    // Product states (v, S): S is the set visited since the last reset,
    // v included; a transition completing full coverage resets S to the
    // new singleton, and exactly those reset targets form the Buchi set.
    const uint32_t full_mask = n >= 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1;
    const int ns = n << n;
    auto state_id = [&](int v, uint32_t mask) { return (v << n) | static_cast<int>(mask); };

    std::vector<int> owner(ns);
    std::vector<char> is_target(ns, 0);
    std::vector<std::vector<int>> succ(ns), pred(ns);
    for (int v = 0; v < n; ++v) {
        for (uint32_t mask = 0; mask <= full_mask; ++mask) {
            int s = state_id(v, mask);
            owner[s] = a.owner(v);
            for (int u : a.out(v)) {
                uint32_t m2 = mask | (uint32_t{1} << u);
                if (m2 == full_mask) m2 = uint32_t{1} << u;
                int t = state_id(u, m2);
                succ[s].push_back(t);
                pred[t].push_back(s);
            }
        }
    }
    for (int v = 0; v < n; ++v) is_target[state_id(v, uint32_t{1} << v)] = 1;

    // Dead ends lose for player 0; peel player 1's attractor to them.
    std::vector<char> dead(ns, 0), all(ns, 1);
    for (int s = 0; s < ns; ++s)
        if (succ[s].empty()) dead[s] = 1;
    std::vector<char> lost = product_attractor(1, dead, all, owner, succ, pred);
    std::vector<char> alive(ns);
    for (int s = 0; s < ns; ++s) alive[s] = !lost[s];

    // Classical Buchi iteration: keep shrinking the arena by player 1's
    // attractor to the states that cannot reach the target set.
    for (;;) {
        std::vector<char> target(ns, 0);
        bool any_alive = false;
        for (int s = 0; s < ns; ++s) {
            target[s] = alive[s] && is_target[s];
            any_alive = any_alive || alive[s];
        }
        if (!any_alive) break;
        std::vector<char> reach = product_attractor(0, target, alive, owner, succ, pred);
        std::vector<char> bad(ns, 0);
        bool any_bad = false;
        for (int s = 0; s < ns; ++s) {
            bad[s] = alive[s] && !reach[s];
            any_bad = any_bad || bad[s];
        }
        if (!any_bad) break;
        std::vector<char> purge = product_attractor(1, bad, alive, owner, succ, pred);
        for (int s = 0; s < ns; ++s)
            if (purge[s]) alive[s] = 0;
    }

    verdict.forced_connected = true;
    for (int v = 0; v < n; ++v) {
        verdict.wins_from[v] = alive[state_id(v, uint32_t{1} << v)];
        verdict.forced_connected = verdict.forced_connected && verdict.wins_from[v];
    }
    return verdict;
}

bool forced_connected_by(const MullerGame& game, ConnectivityAlgo algo, int oracle_cap) {
    switch (algo) {
        case ConnectivityAlgo::dfcg_mk:
            return solve_dfcg_mk(game).forced_connected;
        case ConnectivityAlgo::dfcg:
            return solve_dfcg(game).forced_connected;
        case ConnectivityAlgo::derivative:
            return derivative_verdict(game);
        case ConnectivityAlgo::oracle:
            return oracle_forced_connected(game, oracle_cap).forced_connected;
    }
    return false;
}

}  // namespace gamescc
