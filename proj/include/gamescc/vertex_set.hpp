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

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace gamescc {

/**
 * A set of vertex indices drawn from a fixed universe [0, n).
 *
 * Bitset-backed value type. Iteration is always in increasing index order,
 * which keeps every derived artifact (omega orders, serialized sets,
 * attractor results) deterministic.
 */
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.insert(v);
        return s;
    }
    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.insert(v);
        return s;
    }
    static VertexSet of(int universe, const std::vector<int>& vs) {
        VertexSet s(universe);
        for (int v : vs) s.insert(v);
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const {
        return words_[static_cast<size_t>(v) >> 6] >> (v & 63) & 1u;
    }
    void insert(int v) { words_[static_cast<size_t>(v) >> 6] |= uint64_t{1} << (v & 63); }
    void erase(int v) { words_[static_cast<size_t>(v) >> 6] &= ~(uint64_t{1} << (v & 63)); }

    int size() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    bool subset_of(const VertexSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    /// Members in increasing index order.
    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(size()));
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                int b = __builtin_ctzll(w);
                out.push_back(static_cast<int>(i * 64) + b);
                w &= w - 1;
            }
        }
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                int b = __builtin_ctzll(w);
                f(static_cast<int>(i * 64) + b);
                w &= w - 1;
            }
        }
    }

    /// Strict lexicographic order on the sorted member lists.
    bool lex_less(const VertexSet& o) const {
        std::vector<int> a = to_vector(), b = o.to_vector();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }

    /// Bit words, usable as a hash/memo key.
    const std::vector<uint64_t>& words() const { return words_; }

private:
    int n_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace gamescc
