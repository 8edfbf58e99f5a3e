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
#include <optional>
#include <vector>

#include "gamescc/arena.hpp"
#include "gamescc/order_list.hpp"

namespace gamescc {

/// Monotone operation tallies of an SccPartition.
struct Counters {
    uint64_t edge_traversals = 0;
    uint64_t searches = 0;
    uint64_t merges = 0;
    uint64_t loop_deletions = 0;
};

/// One unite cascade: the components absorbed into new_canonical.
struct MergeEvent {
    int new_canonical = -1;
    std::vector<int> absorbed;
};

/**
 * Incremental strongly-connected-component maintenance.
 *
 * Initialized from a static graph by one Tarjan pass; afterwards edges can
 * only be added. Each component is identified by a canonical vertex; only
 * canonical vertices appear in the maintained topological order, and each
 * carries cyclic doubly-linked lists of the component's outgoing and
 * incoming edges (parallel edges are kept until traversed, loops are
 * deleted lazily during searches).
 *
 * An addition that violates the current order triggers a soft-threshold
 * search: a two-sided traversal governed by a pivot vertex s that either
 * repairs the order or discovers the cycle closed by the new edge, in
 * which case the affected components are united under the canonical
 * vertex of the edge's tail.
 *
 * Single-threaded mutable state.
 */
class SccPartition {
public:
    SccPartition(int n, const std::vector<Edge>& initial_edges);

    using MergeCallback = std::function<void(const MergeEvent&)>;

    /**
     * Records the edge (u, v). A component-level loop or duplicate that
     * cannot change connectivity costs O(1) and reports nothing. If the
     * addition closes a cycle, the united components are reported through
     * the returned event and on_merge (invoked exactly once, before this
     * returns, with all structure invariants restored).
     */
    std::optional<MergeEvent> add_edge(int u, int v, const MergeCallback& on_merge = nullptr);

    /// Canonical vertex of v's component.
    int find(int v) const;
    bool same_scc(int x, int y) const { return find(x) == find(y); }

    int size() const { return n_; }
    int component_count() const { return component_count_; }
    const Counters& counters() const { return counters_; }

    /// Order query on two canonical vertices.
    bool order_precedes(int canon_a, int canon_b) const;
    /// Canonical vertices front to back; audit helper.
    std::vector<int> topological_canonicals() const;

    /// Enables exhaustive in-search invariant checks (slow; test use only).
    void set_audit(bool on) { audit_ = on; }

private:
    struct EdgeRec {
        int tail, head;
        int next_out, prev_out;
        int next_in, prev_in;
        bool unlinked = false;
    };

    enum class SState : uint8_t { none, active, passive, dead };

    int raw_find(int v) const;
    void append_record(int cu, int cv, int u, int v);
    void unlink_record(int e);
    void delete_loop(int e, bool consumed_fwd, bool consumed_bwd);

    bool order_lt(int a, int b) const { return order_.precedes(handle_[a], handle_[b]); }

    void activate_forward(int x);
    void activate_backward(int y);
    void search_step(int u, int z);
    int pick_active(std::vector<int>& stack, const std::vector<SState>& state,
                    const std::vector<uint32_t>& epoch) const;
    void audit_search() const;

    std::optional<MergeEvent> run_search(int tail_canon, int head_canon,
                                         const MergeCallback& on_merge);

    int n_ = 0;
    int component_count_ = 0;

    // Disjoint sets with a canonical-vertex alias per root: the root is a
    // rank artifact, the canonical vertex is the component's public name.
    mutable std::vector<int> parent_;
    std::vector<int> rank_;
    std::vector<int> canon_of_root_;

    OrderList<int> order_;
    std::vector<OrderList<int>::Handle> handle_;  // valid for canonical vertices

    std::vector<EdgeRec> recs_;
    std::vector<int> out_head_, in_head_;
    std::vector<int> out_size_, in_size_;

    Counters counters_;
    bool audit_ = false;

    // Per-search scratch, epoch-stamped to avoid O(n) clears.
    uint32_t epoch_ = 0;
    std::vector<uint32_t> f_epoch_, b_epoch_;
    std::vector<SState> f_state_, b_state_;
    std::vector<int> f_ptr_, b_ptr_;
    std::vector<int> f_rem_, b_rem_;
    std::vector<int> fa_stack_, ba_stack_, fp_list_, bp_list_;
    std::vector<int> f_members_, b_members_;
    int fa_count_ = 0, ba_count_ = 0;
    int pivot_ = -1;

    // Stamped labeling scratch so a search costs no O(n) clears.
    uint32_t mark_counter_ = 0;
    std::vector<uint32_t> mark_epoch_;
    std::vector<int> mark_id_;

    SState fstate(int v) const { return f_epoch_[v] == epoch_ ? f_state_[v] : SState::none; }
    SState bstate(int v) const { return b_epoch_[v] == epoch_ ? b_state_[v] : SState::none; }
    void set_fstate(int v, SState s) {
        f_epoch_[v] = epoch_;
        f_state_[v] = s;
    }
    void set_bstate(int v, SState s) {
        b_epoch_[v] = epoch_;
        b_state_[v] = s;
    }
};

/**
 * Incremental cycle detection on a growing DAG, implementing compatible
 * search: the two-sided traversal that only examines edge pairs agreeing
 * with the current order. Slower than the soft-threshold engine but
 * directly mirrors the declarative description; serves as a differential
 * test double on cycle-free prefixes.
 */
class CompatibleSearchReference {
public:
    explicit CompatibleSearchReference(int n);

    /**
     * Attempts to add (u, v). Returns an existing edge lying on the cycle
     * the addition would close, leaving the structure untouched; or
     * std::nullopt with the edge committed and the order repaired.
     */
    std::optional<Edge> add_edge(int u, int v);

    bool order_precedes(int u, int v) const;
    std::vector<int> topological_vertices() const;
    uint64_t traversals() const { return traversals_; }

private:
    int n_;
    std::vector<std::vector<Edge>> out_, in_;
    OrderList<int> order_;
    std::vector<OrderList<int>::Handle> handle_;
    uint64_t traversals_ = 0;
};

}  // namespace gamescc
