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

#include "gamescc/isccm.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace gamescc {

SccPartition::SccPartition(int n, const std::vector<Edge>& initial_edges) : n_(n) {
    for (const auto& [u, v] : initial_edges)
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("isccm: endpoint out of range");

    SccResult scc = tarjan_scc(n, VertexSet::full(n), initial_edges);
    component_count_ = static_cast<int>(scc.components.size());

    parent_.resize(n);
    rank_.assign(n, 0);
    canon_of_root_.assign(n, -1);
    for (const auto& comp : scc.components) {
        int root = comp[0];  // components are sorted: smallest member is canonical
        for (int m : comp) parent_[m] = root;
        rank_[root] = 1;
        canon_of_root_[root] = root;
    }

    handle_.assign(n, nullptr);
    for (int cid : scc.topo_order) {
        int c = scc.components[cid][0];
        handle_[c] = order_.push_back(c);
    }

    out_head_.assign(n, -1);
    in_head_.assign(n, -1);
    out_size_.assign(n, 0);
    in_size_.assign(n, 0);
    recs_.reserve(initial_edges.size());
    for (const auto& [u, v] : initial_edges) {
        int cu = find(u), cv = find(v);
        if (cu != cv) append_record(cu, cv, u, v);
    }

    f_epoch_.assign(n, 0);
    b_epoch_.assign(n, 0);
    f_state_.assign(n, SState::none);
    b_state_.assign(n, SState::none);
    f_ptr_.assign(n, -1);
    b_ptr_.assign(n, -1);
    f_rem_.assign(n, 0);
    b_rem_.assign(n, 0);
    mark_epoch_.assign(n, 0);
    mark_id_.assign(n, -1);
}

int SccPartition::raw_find(int v) const {
    while (parent_[v] != v) {
        parent_[v] = parent_[parent_[v]];
        v = parent_[v];
    }
    return v;
}

int SccPartition::find(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("find: vertex out of range");
    return canon_of_root_[raw_find(v)];
}

bool SccPartition::order_precedes(int canon_a, int canon_b) const {
    return order_.precedes(handle_[canon_a], handle_[canon_b]);
}

std::vector<int> SccPartition::topological_canonicals() const { return order_.to_vector(); }

void SccPartition::append_record(int cu, int cv, int u, int v) {
    int e = static_cast<int>(recs_.size());
    recs_.push_back(EdgeRec{u, v, e, e, e, e, false});
    if (out_head_[cu] < 0) {
        out_head_[cu] = e;
    } else {
        int h = out_head_[cu], t = recs_[h].prev_out;
        recs_[t].next_out = e;
        recs_[e].prev_out = t;
        recs_[e].next_out = h;
        recs_[h].prev_out = e;
    }
    ++out_size_[cu];
    if (in_head_[cv] < 0) {
        in_head_[cv] = e;
    } else {
        int h = in_head_[cv], t = recs_[h].prev_in;
        recs_[t].next_in = e;
        recs_[e].prev_in = t;
        recs_[e].next_in = h;
        recs_[h].prev_in = e;
    }
    ++in_size_[cv];
}

void SccPartition::unlink_record(int e) {
    assert(!recs_[e].unlinked);
    int cu = find(recs_[e].tail), cv = find(recs_[e].head);
    if (recs_[e].next_out == e) {
        out_head_[cu] = -1;
    } else {
        recs_[recs_[e].prev_out].next_out = recs_[e].next_out;
        recs_[recs_[e].next_out].prev_out = recs_[e].prev_out;
        if (out_head_[cu] == e) out_head_[cu] = recs_[e].next_out;
    }
    --out_size_[cu];
    if (recs_[e].next_in == e) {
        in_head_[cv] = -1;
    } else {
        recs_[recs_[e].prev_in].next_in = recs_[e].next_in;
        recs_[recs_[e].next_in].prev_in = recs_[e].prev_in;
        if (in_head_[cv] == e) in_head_[cv] = recs_[e].next_in;
    }
    --in_size_[cv];
    recs_[e].unlinked = true;
}

/**
 * Removes a loop record discovered during a search. A loop consumed on one
 * side cannot have been consumed on the other earlier in the same search
 * (a backward consumption of a loop deletes it on the spot, and loop-ness
 * is fixed while a search runs), so the unconsumed side's remaining-edge
 * budget shrinks by one here.
 */
void SccPartition::delete_loop(int e, bool consumed_fwd, bool consumed_bwd) {
    int c = find(recs_[e].tail);
    int nout = recs_[e].next_out, nin = recs_[e].next_in;
    unlink_record(e);
    ++counters_.loop_deletions;
    if (!consumed_bwd) {
        SState st = bstate(c);
        if (st == SState::active || st == SState::passive) {
            if (b_ptr_[c] == e) b_ptr_[c] = nin;
            if (--b_rem_[c] == 0) {
                if (st == SState::active) --ba_count_;
                set_bstate(c, SState::dead);
            }
        }
    }
    if (!consumed_fwd) {
        SState st = fstate(c);
        if (st == SState::active || st == SState::passive) {
            if (f_ptr_[c] == e) f_ptr_[c] = nout;
            if (--f_rem_[c] == 0) {
                if (st == SState::active) --fa_count_;
                set_fstate(c, SState::dead);
            }
        }
    }
}

void SccPartition::activate_forward(int x) {
    f_members_.push_back(x);
    if (out_size_[x] > 0) {
        set_fstate(x, SState::active);
        f_ptr_[x] = out_head_[x];
        f_rem_[x] = out_size_[x];
        fa_stack_.push_back(x);
        ++fa_count_;
    } else {
        set_fstate(x, SState::dead);
        f_rem_[x] = 0;
    }
}

void SccPartition::activate_backward(int y) {
    b_members_.push_back(y);
    if (in_size_[y] > 0) {
        set_bstate(y, SState::active);
        b_ptr_[y] = in_head_[y];
        b_rem_[y] = in_size_[y];
        ba_stack_.push_back(y);
        ++ba_count_;
    } else {
        set_bstate(y, SState::dead);
        b_rem_[y] = 0;
    }
}

void SccPartition::search_step(int u, int z) {
    int e = f_ptr_[u];
    const int fwd_tail = recs_[e].tail, fwd_head = recs_[e].head;
    f_ptr_[u] = recs_[e].next_out;
    --f_rem_[u];
    ++counters_.edge_traversals;

    int e2 = b_ptr_[z];
    const int bwd_tail = recs_[e2].tail;
    b_ptr_[z] = recs_[e2].next_in;
    --b_rem_[z];
    ++counters_.edge_traversals;

    if (f_rem_[u] == 0) {
        set_fstate(u, SState::dead);
        --fa_count_;
    }
    if (b_rem_[z] == 0) {
        set_bstate(z, SState::dead);
        --ba_count_;
    }

    (void)fwd_tail;
    assert(find(fwd_tail) == u);
    int x = find(fwd_head);
    int y = find(bwd_tail);
    const bool same_record = (e == e2);

    if (x == u) delete_loop(e, /*consumed_fwd=*/true, /*consumed_bwd=*/same_record);
    if (!same_record && y == z) delete_loop(e2, /*consumed_fwd=*/false, /*consumed_bwd=*/true);

    if (fstate(x) == SState::none) activate_forward(x);
    if (bstate(y) == SState::none) activate_backward(y);
}

int SccPartition::pick_active(std::vector<int>& stack, const std::vector<SState>& state,
                              const std::vector<uint32_t>& epoch) const {
    while (!stack.empty()) {
        int v = stack.back();
        if (epoch[v] == epoch_ && state[v] == SState::active) return v;
        stack.pop_back();
    }
    return -1;
}

void SccPartition::audit_search() const {
    for (int x : fp_list_)
        if (fstate(x) == SState::passive && !order_lt(pivot_, x))
            throw std::logic_error("isccm audit: forward-passive vertex not above pivot");
    for (int y : bp_list_)
        if (bstate(y) == SState::passive && !order_lt(y, pivot_))
            throw std::logic_error("isccm audit: backward-passive vertex not below pivot");
}

std::optional<MergeEvent> SccPartition::add_edge(int u, int v, const MergeCallback& on_merge) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("add_edge: vertex out of range");
    int cu = find(u), cv = find(v);
    if (cu == cv) return std::nullopt;  // component-level loop or duplicate
    append_record(cu, cv, u, v);
    if (order_lt(cu, cv)) return std::nullopt;  // compatible with the order
    return run_search(cu, cv, on_merge);
}

std::optional<MergeEvent> SccPartition::run_search(int tail_canon, int head_canon,
                                                   const MergeCallback& on_merge) {
    ++epoch_;
    ++counters_.searches;
    fa_stack_.clear();
    ba_stack_.clear();
    fp_list_.clear();
    bp_list_.clear();
    f_members_.clear();
    b_members_.clear();
    fa_count_ = ba_count_ = 0;

    activate_forward(head_canon);
    activate_backward(tail_canon);
    pivot_ = tail_canon;

    std::vector<int> live;
    while (fa_count_ > 0 && ba_count_ > 0) {
        if (audit_) audit_search();
        int u = pick_active(fa_stack_, f_state_, f_epoch_);
        int z = pick_active(ba_stack_, b_state_, b_epoch_);
        assert(u >= 0 && z >= 0);
        if (order_lt(u, z)) {
            search_step(u, z);
        } else {
            bool moved = false;
            if (order_lt(pivot_, u)) {
                set_fstate(u, SState::passive);
                fp_list_.push_back(u);
                --fa_count_;
                moved = true;
            }
            if (order_lt(z, pivot_)) {
                set_bstate(z, SState::passive);
                bp_list_.push_back(z);
                --ba_count_;
                moved = true;
            }
            // Both sides hold the pivot itself; traverse to keep going.
            if (!moved) search_step(u, z);
        }

        if (fa_count_ == 0) {
            for (int y : bp_list_)
                if (bstate(y) == SState::passive) set_bstate(y, SState::dead);
            bp_list_.clear();
            if (bstate(pivot_) == SState::active) {
                set_bstate(pivot_, SState::dead);
                --ba_count_;
            }
            live.clear();
            for (int x : fp_list_)
                if (fstate(x) == SState::passive) live.push_back(x);
            fp_list_.clear();
            if (!live.empty()) {
                size_t mid = (live.size() - 1) / 2;
                std::nth_element(live.begin(), live.begin() + mid, live.end(),
                                 [this](int a, int b) { return order_lt(a, b); });
                pivot_ = live[mid];
                for (int x : live) {
                    if (!order_lt(pivot_, x)) {  // x <= pivot
                        set_fstate(x, SState::active);
                        fa_stack_.push_back(x);
                        ++fa_count_;
                    } else {
                        fp_list_.push_back(x);
                    }
                }
            }
        }
        if (ba_count_ == 0) {
            for (int x : fp_list_)
                if (fstate(x) == SState::passive) set_fstate(x, SState::dead);
            fp_list_.clear();
            if (fstate(pivot_) == SState::active) {
                set_fstate(pivot_, SState::dead);
                --fa_count_;
            }
            live.clear();
            for (int y : bp_list_)
                if (bstate(y) == SState::passive) live.push_back(y);
            bp_list_.clear();
            if (!live.empty()) {
                size_t mid = (live.size() - 1) / 2;
                std::nth_element(live.begin(), live.begin() + mid, live.end(),
                                 [this](int a, int b) { return order_lt(a, b); });
                pivot_ = live[mid];
                for (int y : live) {
                    if (!order_lt(y, pivot_)) {  // y >= pivot
                        set_bstate(y, SState::active);
                        ba_stack_.push_back(y);
                        ++ba_count_;
                    } else {
                        bp_list_.push_back(y);
                    }
                }
            }
        }
    }

    // Threshold vertex: the order-minimum of the edge tail and every
    // forward vertex that still has untraversed outgoing edges.
    int t = tail_canon;
    for (int x : f_members_)
        if (f_rem_[x] > 0 && order_lt(x, t)) t = x;

    std::vector<int> f_less, b_greater;
    for (int x : f_members_)
        if (order_lt(x, t)) f_less.push_back(x);
    for (int y : b_members_)
        if (order_lt(t, y)) b_greater.push_back(y);

    // Condensation subgraph: F_<, t, B_> plus both ends of the new edge.
    const uint32_t xmark = ++mark_counter_;
    auto local_of = [&](int v) { return mark_epoch_[v] == xmark ? mark_id_[v] : -1; };
    std::vector<int> xs;
    auto push_x = [&](int v) {
        if (mark_epoch_[v] == xmark) return;
        mark_epoch_[v] = xmark;
        mark_id_[v] = static_cast<int>(xs.size());
        xs.push_back(v);
    };
    for (int x : f_less) push_x(x);
    push_x(t);
    for (int y : b_greater) push_x(y);
    push_x(tail_canon);
    push_x(head_canon);
    const int nx = static_cast<int>(xs.size());

    std::vector<Edge> ys;
    auto walk_out = [&](int c, auto&& fn) {
        int h = out_head_[c];
        if (h < 0) return;
        int e = h;
        do {
            fn(e);
            e = recs_[e].next_out;
        } while (e != h);
    };
    auto walk_in = [&](int c, auto&& fn) {
        int h = in_head_[c];
        if (h < 0) return;
        int e = h;
        do {
            fn(e);
            e = recs_[e].next_in;
        } while (e != h);
    };
    for (int x : f_less)
        walk_out(x, [&](int e) {
            int h = find(recs_[e].head);
            if (h != x && local_of(h) >= 0) ys.emplace_back(local_of(x), local_of(h));
        });
    for (int y : b_greater)
        walk_in(y, [&](int e) {
            int tl = find(recs_[e].tail);
            if (tl != y && local_of(tl) >= 0) ys.emplace_back(local_of(tl), local_of(y));
        });
    ys.emplace_back(local_of(tail_canon), local_of(head_canon));

    SccResult sub = tarjan_scc(nx, VertexSet::full(nx), ys);
    std::vector<int> merged;
    for (const auto& comp : sub.components) {
        if (comp.size() < 2) continue;
        if (!merged.empty() ||
            std::find(comp.begin(), comp.end(), local_of(tail_canon)) == comp.end())
            throw std::logic_error("isccm: unexpected cycle without the new edge");
        for (int l : comp) merged.push_back(xs[l]);
    }

    // Restore topological order before contracting: topologically sort the
    // moved blocks, then place F_< right after t when t is the edge tail,
    // otherwise B_> then F_< immediately before t.
    auto topo_of = [&](const std::vector<int>& verts) {
        const uint32_t m = ++mark_counter_;
        for (size_t i = 0; i < verts.size(); ++i) {
            mark_epoch_[verts[i]] = m;
            mark_id_[verts[i]] = static_cast<int>(i);
        }
        std::vector<Edge> es;
        for (int x : verts)
            walk_out(x, [&](int e) {
                int h = find(recs_[e].head);
                if (h != x && mark_epoch_[h] == m) es.emplace_back(mark_id_[x], mark_id_[h]);
            });
        SccResult s = tarjan_scc(static_cast<int>(verts.size()),
                                 VertexSet::full(static_cast<int>(verts.size())), es);
        std::vector<int> out;
        for (int cid : s.topo_order) {
            assert(s.components[cid].size() == 1);
            out.push_back(verts[s.components[cid][0]]);
        }
        return out;
    };

    std::vector<int> sorted_f = topo_of(f_less);
    if (t == tail_canon) {
        auto anchor = handle_[t];
        for (int x : sorted_f) {
            order_.erase(handle_[x]);
            handle_[x] = order_.insert_after(x, anchor);
            anchor = handle_[x];
        }
    } else {
        for (int y : topo_of(b_greater)) {
            order_.erase(handle_[y]);
            handle_[y] = order_.insert_before(y, handle_[t]);
        }
        for (int x : sorted_f) {
            order_.erase(handle_[x]);
            handle_[x] = order_.insert_before(x, handle_[t]);
        }
    }

    if (merged.empty()) return std::nullopt;

    MergeEvent ev;
    ev.new_canonical = tail_canon;
    std::sort(merged.begin(), merged.end());
    for (int m : merged) {
        if (m == tail_canon) continue;
        int ra = raw_find(tail_canon), rb = raw_find(m);
        assert(ra != rb);
        if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
        parent_[rb] = ra;
        if (rank_[ra] == rank_[rb]) ++rank_[ra];
        canon_of_root_[ra] = tail_canon;

        // Splice m's cyclic edge lists into the new canonical vertex.
        if (out_head_[m] >= 0) {
            if (out_head_[tail_canon] < 0) {
                out_head_[tail_canon] = out_head_[m];
            } else {
                int ah = out_head_[tail_canon], bh = out_head_[m];
                int at = recs_[ah].prev_out, bt = recs_[bh].prev_out;
                recs_[at].next_out = bh;
                recs_[bh].prev_out = at;
                recs_[bt].next_out = ah;
                recs_[ah].prev_out = bt;
            }
            out_head_[m] = -1;
        }
        if (in_head_[m] >= 0) {
            if (in_head_[tail_canon] < 0) {
                in_head_[tail_canon] = in_head_[m];
            } else {
                int ah = in_head_[tail_canon], bh = in_head_[m];
                int at = recs_[ah].prev_in, bt = recs_[bh].prev_in;
                recs_[at].next_in = bh;
                recs_[bh].prev_in = at;
                recs_[bt].next_in = ah;
                recs_[ah].prev_in = bt;
            }
            in_head_[m] = -1;
        }
        out_size_[tail_canon] += out_size_[m];
        in_size_[tail_canon] += in_size_[m];
        out_size_[m] = in_size_[m] = 0;

        order_.erase(handle_[m]);
        handle_[m] = nullptr;
        ++counters_.merges;
        --component_count_;
        ev.absorbed.push_back(m);
    }

    if (on_merge) on_merge(ev);
    return ev;
}

CompatibleSearchReference::CompatibleSearchReference(int n) : n_(n), out_(n), in_(n) {
    handle_.resize(n);
    for (int v = 0; v < n; ++v) handle_[v] = order_.push_back(v);
}

bool CompatibleSearchReference::order_precedes(int u, int v) const {
    return order_.precedes(handle_[u], handle_[v]);
}

std::vector<int> CompatibleSearchReference::topological_vertices() const {
    return order_.to_vector();
}

std::optional<Edge> CompatibleSearchReference::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("compatible search: loop");
    auto commit = [&] {
        out_[u].emplace_back(u, v);
        in_[v].emplace_back(u, v);
    };
    if (order_precedes(u, v)) {
        commit();
        return std::nullopt;
    }

    std::vector<char> in_f(n_, 0), in_b(n_, 0);
    in_f[v] = 1;
    in_b[u] = 1;
    std::vector<int> f_members{v}, b_members{u};
    std::vector<Edge> af(out_[v]), ab(in_[u]);

    while (true) {
        int fi = -1, bi = -1;
        for (int i = static_cast<int>(af.size()) - 1; i >= 0 && fi < 0; --i)
            for (int j = static_cast<int>(ab.size()) - 1; j >= 0; --j)
                if (order_precedes(af[i].first, ab[j].second)) {
                    fi = i;
                    bi = j;
                    break;
                }
        if (fi < 0) break;
        Edge fe = af[fi], be = ab[bi];
        af[fi] = af.back();
        af.pop_back();
        ab[bi] = ab.back();
        ab.pop_back();
        traversals_ += 2;
        // Grow both sides before the hit tests: the forward head and the
        // backward tail may be the same fresh vertex, which already closes
        // a cycle and must not slip past membership checks taken earlier.
        if (!in_f[fe.second]) {
            in_f[fe.second] = 1;
            f_members.push_back(fe.second);
            af.insert(af.end(), out_[fe.second].begin(), out_[fe.second].end());
        }
        if (!in_b[be.first]) {
            in_b[be.first] = 1;
            b_members.push_back(be.first);
            ab.insert(ab.end(), in_[be.first].begin(), in_[be.first].end());
        }
        if (in_b[fe.second]) return fe;
        if (in_f[be.first]) return be;
    }

    int t = u;
    for (const auto& [p, _] : af)
        if (order_precedes(p, t)) t = p;
    std::vector<int> f_less, b_greater;
    for (int x : f_members)
        if (order_precedes(x, t)) f_less.push_back(x);
    for (int y : b_members)
        if (order_precedes(t, y)) b_greater.push_back(y);

    auto topo_of = [&](const std::vector<int>& verts) {
        std::vector<int> lid(n_, -1);
        for (size_t i = 0; i < verts.size(); ++i) lid[verts[i]] = static_cast<int>(i);
        std::vector<Edge> es;
        for (int x : verts)
            for (const auto& [a, b] : out_[x])
                if (lid[b] >= 0) es.emplace_back(lid[a], lid[b]);
        SccResult s = tarjan_scc(static_cast<int>(verts.size()),
                                 VertexSet::full(static_cast<int>(verts.size())), es);
        std::vector<int> res;
        for (int cid : s.topo_order) res.push_back(verts[s.components[cid][0]]);
        return res;
    };

    std::vector<int> sorted_f = topo_of(f_less);
    if (t == u) {
        auto anchor = handle_[t];
        for (int x : sorted_f) {
            order_.erase(handle_[x]);
            handle_[x] = order_.insert_after(x, anchor);
            anchor = handle_[x];
        }
    } else {
        for (int y : topo_of(b_greater)) {
            order_.erase(handle_[y]);
            handle_[y] = order_.insert_before(y, handle_[t]);
        }
        for (int x : sorted_f) {
            order_.erase(handle_[x]);
            handle_[x] = order_.insert_before(x, handle_[t]);
        }
    }
    commit();
    return std::nullopt;
}

}  // namespace gamescc
