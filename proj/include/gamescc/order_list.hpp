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
#include <deque>
#include <set>
#include <stdexcept>
#include <vector>

namespace gamescc {

/**
 * Order-maintenance list: a strict total order over live elements with
 * order queries, deletions, and insertions next to an existing element,
 * all in amortized constant time.
 *
 * Two-level tagged structure: elements live in buckets of bounded size;
 * buckets carry 64-bit labels increasing along the list, elements carry
 * 64-bit labels increasing within their bucket. precedes() is two label
 * comparisons. A full bucket splits, an exhausted label range renumbers
 * locally; the top level renumbers wholesale when its own gaps run out.
 *
 * Handles stay valid until the element is deleted; operations on deleted
 * handles throw std::logic_error. Single writer, no concurrent mutation.
 */
template <typename T>
class OrderList {
    struct Bucket;

    struct Node {
        T value{};
        uint64_t label = 0;
        Bucket* bucket = nullptr;
        Node* prev = nullptr;
        Node* next = nullptr;
        bool alive = false;
    };

    struct Bucket {
        uint64_t label = 0;
        Node* head = nullptr;
        Node* tail = nullptr;
        int count = 0;
        Bucket* prev = nullptr;
        Bucket* next = nullptr;
    };

    static constexpr uint64_t kGap = uint64_t{1} << 32;
    static constexpr int kSplitLimit = 64;

public:
    using Handle = Node*;

    OrderList() = default;
    OrderList(const OrderList&) = delete;
    OrderList& operator=(const OrderList&) = delete;
    OrderList(OrderList&& o) noexcept { swap(o); }
    OrderList& operator=(OrderList&& o) noexcept {
        if (this != &o) {
            destroy_buckets();
            first_bucket_ = last_bucket_ = nullptr;
            live_ = 0;
            nodes_.clear();
            swap(o);
        }
        return *this;
    }
    ~OrderList() { destroy_buckets(); }

    /// Builds a list in the given order; throws on duplicate items.
    static OrderList from_sequence(const std::vector<T>& items) {
        std::set<T> seen(items.begin(), items.end());
        if (seen.size() != items.size())
            throw std::invalid_argument("from_sequence: duplicate item");
        OrderList list;
        for (const T& item : items) list.push_back(item);
        return list;
    }

    size_t size() const { return live_; }
    bool empty() const { return live_ == 0; }

    Handle push_back(T value) {
        if (!last_bucket_) {
            Bucket* b = new Bucket{kGap};
            first_bucket_ = last_bucket_ = b;
            return link_into(b, nullptr, kGap, std::move(value));
        }
        if (!last_bucket_->tail) return link_into(last_bucket_, nullptr, kGap, std::move(value));
        return insert_after(std::move(value), last_bucket_->tail);
    }

    Handle insert_before(T value, Handle at) {
        check_live(at, "insert_before");
        Bucket* b = at->bucket;
        if (b->count >= kSplitLimit) {
            split(b);
            b = at->bucket;
        }
        Node* prev = at->prev;
        uint64_t lo = prev ? prev->label : 0;
        if (at->label - lo < 2) {
            renumber(b);
            lo = prev ? prev->label : 0;
        }
        return link_into(b, prev, lo + (at->label - lo) / 2, std::move(value));
    }

    Handle insert_after(T value, Handle at) {
        check_live(at, "insert_after");
        Bucket* b = at->bucket;
        if (b->count >= kSplitLimit) {
            split(b);
            b = at->bucket;
        }
        Node* next = at->next;
        uint64_t hi = next ? next->label : at->label + 2 * kGap;
        if (hi - at->label < 2) {
            renumber(b);
            hi = next ? next->label : at->label + 2 * kGap;
        }
        return link_into(b, at, at->label + (hi - at->label) / 2, std::move(value));
    }

    void erase(Handle x) {
        check_live(x, "erase");
        Bucket* b = x->bucket;
        if (x->prev)
            x->prev->next = x->next;
        else
            b->head = x->next;
        if (x->next)
            x->next->prev = x->prev;
        else
            b->tail = x->prev;
        --b->count;
        x->alive = false;
        x->bucket = nullptr;
        --live_;
        if (b->count == 0) unlink_bucket(b);
    }

    /// Strictly-before query; false when x == y.
    bool precedes(Handle x, Handle y) const {
        check_live(x, "precedes");
        check_live(y, "precedes");
        if (x == y) return false;
        if (x->bucket == y->bucket) return x->label < y->label;
        return x->bucket->label < y->bucket->label;
    }

    const T& value(Handle x) const {
        check_live(x, "value");
        return x->value;
    }

    /// Live payloads front to back; test and audit helper.
    std::vector<T> to_vector() const {
        std::vector<T> out;
        out.reserve(live_);
        for (Bucket* b = first_bucket_; b; b = b->next)
            for (Node* n = b->head; n; n = n->next) out.push_back(n->value);
        return out;
    }

private:
    static void check_live(Handle x, const char* op) {
        if (!x || !x->alive) throw std::logic_error(std::string(op) + ": handle is not live");
    }

    Handle link_into(Bucket* b, Node* after, uint64_t label, T value) {
        nodes_.push_back(Node{std::move(value), label, b, nullptr, nullptr, true});
        Node* n = &nodes_.back();
        n->prev = after;
        n->next = after ? after->next : b->head;
        if (n->prev)
            n->prev->next = n;
        else
            b->head = n;
        if (n->next)
            n->next->prev = n;
        else
            b->tail = n;
        ++b->count;
        ++live_;
        return n;
    }

    void renumber(Bucket* b) {
        uint64_t label = kGap;
        for (Node* n = b->head; n; n = n->next, label += kGap) n->label = label;
    }

    /// Moves the back half of b into a fresh bucket placed right after it.
    void split(Bucket* b) {
        Bucket* b2 = new Bucket;
        b2->prev = b;
        b2->next = b->next;
        if (b2->next)
            b2->next->prev = b2;
        else
            last_bucket_ = b2;
        b->next = b2;

        uint64_t hi = b2->next ? b2->next->label : b->label + 2 * kGap;
        if (hi - b->label < 2) {
            renumber_buckets();
            hi = b2->next ? b2->next->label : b->label + 2 * kGap;
        }
        b2->label = b->label + (hi - b->label) / 2;

        Node* n = b->head;
        for (int i = 0; i < b->count / 2; ++i) n = n->next;
        // n starts the moved suffix.
        b2->head = n;
        b2->tail = b->tail;
        b->tail = n->prev;
        if (n->prev) n->prev->next = nullptr;
        n->prev = nullptr;
        int moved = 0;
        for (Node* m = n; m; m = m->next, ++moved) m->bucket = b2;
        b2->count = moved;
        b->count -= moved;
        renumber(b);
        renumber(b2);
    }

    void renumber_buckets() {
        uint64_t label = kGap;
        for (Bucket* b = first_bucket_; b; b = b->next, label += kGap) b->label = label;
    }

    void unlink_bucket(Bucket* b) {
        if (b->prev)
            b->prev->next = b->next;
        else
            first_bucket_ = b->next;
        if (b->next)
            b->next->prev = b->prev;
        else
            last_bucket_ = b->prev;
        delete b;
    }

    void destroy_buckets() {
        Bucket* b = first_bucket_;
        while (b) {
            Bucket* next = b->next;
            delete b;
            b = next;
        }
    }

    void swap(OrderList& o) {
        std::swap(first_bucket_, o.first_bucket_);
        std::swap(last_bucket_, o.last_bucket_);
        std::swap(live_, o.live_);
        nodes_.swap(o.nodes_);
    }

    Bucket* first_bucket_ = nullptr;
    Bucket* last_bucket_ = nullptr;
    size_t live_ = 0;
    std::deque<Node> nodes_;  // stable addresses; tombstones stay allocated
};

}  // namespace gamescc
