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

#include "gamescc/arena.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gamescc {

Arena Arena::make(int n0, int n1, const std::vector<Edge>& edges, std::vector<std::string> names) {
    if (n0 < 0 || n1 < 0) throw std::invalid_argument("negative vertex count");
    const int n = n0 + n1;
    Arena a;
    a.n0_ = n0;
    a.n1_ = n1;
    a.out_adj_.resize(n);
    a.in_adj_.resize(n);
    if (names.empty()) {
        names.reserve(n);
        for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
    }
    if (static_cast<int>(names.size()) != n)
        throw std::invalid_argument("name list does not match vertex count");
    a.names_ = std::move(names);

    std::set<Edge> seen;
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (a.owner(u) == a.owner(v))
            throw std::invalid_argument("non-bipartite edge " + a.names_[u] + " -> " + a.names_[v]);
        if (!seen.insert({u, v}).second)
            throw std::invalid_argument("duplicate edge " + a.names_[u] + " -> " + a.names_[v]);
        a.out_adj_[u].push_back(v);
        a.in_adj_[v].push_back(u);
        ++a.edge_count_;
    }
    return a;
}

std::vector<Edge> Arena::edges() const {
    std::vector<Edge> es;
    es.reserve(edge_count_);
    for (int u = 0; u < size(); ++u)
        for (int v : out_adj_[u]) es.emplace_back(u, v);
    return es;
}

VertexSet Arena::player_vertices(int sigma) const {
    VertexSet s(size());
    const int lo = sigma == 0 ? 0 : n0_;
    const int hi = sigma == 0 ? n0_ : size();
    for (int v = lo; v < hi; ++v) s.insert(v);
    return s;
}

SccResult tarjan_scc(int n, const VertexSet& vertices, const std::vector<Edge>& edges) {
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : edges) {
        if (!vertices.contains(u) || !vertices.contains(v))
            throw std::invalid_argument("edge endpoint outside vertex set");
        adj[u].push_back(v);
    }

    SccResult res;
    res.component_of.assign(n, -1);
    std::vector<int> index(n, -1), lowlink(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    int next_index = 0;

    // Iterative DFS; each frame remembers its position in the adjacency list.
    struct Frame {
        int v;
        size_t edge;
    };
    std::vector<Frame> dfs;

    auto visit_root = [&](int root) {
        dfs.push_back({root, 0});
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!dfs.empty()) {
            Frame& f = dfs.back();
            if (f.edge < adj[f.v].size()) {
                int w = adj[f.v][f.edge++];
                if (index[w] == -1) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    dfs.push_back({w, 0});
                } else if (on_stack[w]) {
                    lowlink[f.v] = std::min(lowlink[f.v], index[w]);
                }
            } else {
                int v = f.v;
                dfs.pop_back();
                if (!dfs.empty()) lowlink[dfs.back().v] = std::min(lowlink[dfs.back().v], lowlink[v]);
                if (lowlink[v] == index[v]) {
                    std::vector<int> comp;
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        res.component_of[w] = static_cast<int>(res.components.size());
                        comp.push_back(w);
                    } while (w != v);
                    std::sort(comp.begin(), comp.end());
                    res.components.push_back(std::move(comp));
                }
            }
        }
    };

    vertices.for_each([&](int v) {
        if (index[v] == -1) visit_root(v);
    });

    // Components complete in reverse topological order.
    res.topo_order.resize(res.components.size());
    for (size_t i = 0; i < res.components.size(); ++i)
        res.topo_order[i] = static_cast<int>(res.components.size() - 1 - i);
    return res;
}

SccResult tarjan_scc(const Arena& arena) {
    return tarjan_scc(arena.size(), arena.vertices(), arena.edges());
}

bool determines_subgame(const VertexSet& s, const Arena& arena) {
    bool ok = true;
    s.for_each([&](int v) {
        if (!ok) return;
        bool any = false;
        for (int w : arena.out(v))
            if (s.contains(w)) {
                any = true;
                break;
            }
        if (!any) ok = false;
    });
    return ok;
}

bool is_sigma_trap(int sigma, const VertexSet& s, const Arena& arena) {
    if (!determines_subgame(s, arena)) return false;
    bool trapped = true;
    s.for_each([&](int v) {
        if (!trapped || arena.owner(v) != sigma) return;
        for (int w : arena.out(v))
            if (!s.contains(w)) {
                trapped = false;
                return;
            }
    });
    return trapped;
}

VertexSet attractor_unchecked(int sigma, const VertexSet& target, const VertexSet& domain,
                              const Arena& arena) {
    const int n = arena.size();
    VertexSet attr(n);
    // For opponent vertices, count domain successors not yet attracted.
    std::vector<int> escapes(n, 0);
    domain.for_each([&](int v) {
        if (arena.owner(v) == sigma) return;
        int cnt = 0;
        for (int w : arena.out(v))
            if (domain.contains(w)) ++cnt;
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
        for (int u : arena.in(v)) {
            if (!domain.contains(u) || attr.contains(u)) continue;
            if (arena.owner(u) == sigma) {
                attr.insert(u);
                queue.push_back(u);
            } else {
                // A dead end keeps escapes[u] at zero and is never pulled in.
                if (--escapes[u] == 0) {
                    attr.insert(u);
                    queue.push_back(u);
                }
            }
        }
    }
    return attr;
}

VertexSet attractor(int sigma, const VertexSet& target, const VertexSet& domain,
                    const Arena& arena) {
    if (!target.subset_of(domain)) throw std::invalid_argument("attractor: target not inside domain");
    if (!determines_subgame(domain, arena))
        throw std::invalid_argument("attractor: domain does not determine a subgame");
    return attractor_unchecked(sigma, target, domain, arena);
}

Arena induced_subarena(const Arena& arena, const VertexSet& s, std::vector<int>* global_of) {
    std::vector<int> order;
    s.for_each([&](int v) {
        if (arena.is_player0(v)) order.push_back(v);
    });
    const int n0 = static_cast<int>(order.size());
    s.for_each([&](int v) {
        if (!arena.is_player0(v)) order.push_back(v);
    });

    std::vector<int> local(arena.size(), -1);
    std::vector<std::string> names;
    names.reserve(order.size());
    for (size_t i = 0; i < order.size(); ++i) {
        local[order[i]] = static_cast<int>(i);
        names.push_back(arena.name(order[i]));
    }

    std::vector<Edge> edges;
    for (int g : order)
        for (int w : arena.out(g))
            if (s.contains(w)) edges.emplace_back(local[g], local[w]);

    if (global_of) *global_of = order;
    return Arena::make(n0, static_cast<int>(order.size()) - n0, edges, std::move(names));
}

}  // namespace gamescc
