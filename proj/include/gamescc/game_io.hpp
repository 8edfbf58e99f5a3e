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

#include <stdexcept>
#include <string>

#include "gamescc/arena.hpp"

namespace gamescc {

/// Raised on any malformed or inconsistent game document.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * Parses the JSON game format:
 *
 *   {"v0": [names], "v1": [names], "edges": [[from, to], ...],
 *    "omega": [[names], ...]}
 *
 * "omega" may be absent, which denotes the connectivity game (omega = {V}).
 * Names are mapped to dense indices deterministically: the sorted v0 names
 * take indices 0..|v0|-1, then the sorted v1 names follow.
 *
 * Throws ParseError on malformed documents, duplicate names, unknown names,
 * non-bipartite or duplicate edges, an empty vertex set, or an empty or
 * duplicate winning set.
 */
MullerGame parse_game(const std::string& text);

/**
 * Canonical serialization: keys in the order v0, v1, edges, omega; every
 * array sorted lexicographically; omega omitted when it equals {V}.
 * parse_game(serialize_game(g)) is isomorphic to g, and the output is
 * byte-identical across runs.
 */
std::string serialize_game(const MullerGame& game);

}  // namespace gamescc
