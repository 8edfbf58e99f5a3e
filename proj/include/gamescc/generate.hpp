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

#include <string>

#include "gamescc/arena.hpp"
#include "gamescc/rng.hpp"

namespace gamescc {

enum class OmegaClass {
    connectivity,     // omega = {V}
    random_explicit,  // distinct random nonempty sets
    linear,           // a strict inclusion chain
    anti_chain,       // pairwise inclusion-incomparable
    fully_separated,  // every set holds a private separator vertex
};

struct GenParams {
    int n0 = 4;
    int n1 = 4;
    double edge_p = -1;  // < 0 selects the default 2 ln|V| / |V|
    OmegaClass omega_class = OmegaClass::connectivity;
    int sets = 3;  // winning sets for the non-connectivity classes
};

/**
 * Draws a uniform random bipartite arena (each of the 2*n0*n1 candidate
 * edges kept with probability edge_p) plus an omega family of the
 * requested class. Deterministic under the generator state; throws
 * std::invalid_argument on unsatisfiable parameters, e.g. more fully
 * separated sets than vertices.
 */
MullerGame generate_game(GenParams params, SplitMix64& rng);

const char* omega_class_name(OmegaClass c);
OmegaClass omega_class_from_name(const std::string& name);

}  // namespace gamescc
