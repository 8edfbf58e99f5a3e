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

namespace gamescc {

/**
 * SplitMix64: the 64-bit generator of Steele, Lea and Flood, chosen for
 * reproducibility. Every generated instance is a pure function of the
 * seed, independent of platform and standard-library version, so a seed
 * printed in a report replays its instance exactly.
 */
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound); bound > 0. Rejection-free multiply-shift.
    uint64_t below(uint64_t bound) {
        // 128-bit multiply keeps the tiny modulo bias far below any
        // statistical relevance at our bounds.
        return static_cast<uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    int range(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    /// True with probability p.
    bool chance(double p) {
        if (p <= 0) return false;
        if (p >= 1) return true;
        return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
    }

    /// Derives an independent stream (instance i of a batch).
    SplitMix64 fork(uint64_t salt) const {
        SplitMix64 g(state_ ^ (0x9e3779b97f4a7c15ull * (salt + 0x632be59bd9b4e019ull)));
        g.next();
        return g;
    }

private:
    uint64_t state_;
};

}  // namespace gamescc
