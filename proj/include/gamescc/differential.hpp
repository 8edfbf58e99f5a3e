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
#include <string>
#include <vector>

namespace gamescc {

/**
 * Outcome of a differential batch. Instance i of a batch with master seed
 * s is generated from SplitMix64(s).fork(i), so (seed, index) replays a
 * counterexample exactly.
 */
struct CheckReport {
    uint64_t instances = 0;
    uint64_t failures = 0;
    int64_t first_failure_index = -1;
    uint64_t seed = 0;
    std::string message;

    bool ok() const { return failures == 0; }
    std::string summary(const std::string& suite) const;
};

struct CheckOptions {
    uint64_t seed = 1;
    int count = 1000;   // instances
    int max_v = 12;     // vertex bound for game suites
    int max_sets = 6;   // winning sets bound for the muller suite
    int isccm_n = 40;   // vertices per isccm run
    int adds = 400;     // incremental additions per isccm run
    int ops = 100000;   // order-list operations
    bool inject_bug = false;  // sensitivity smoke test: corrupt one verdict
    int threads = 0;    // 0: GAMESCC_THREADS, else hardware concurrency
};

/**
 * Random connectivity games: the two solver frameworks, the derivative
 * verdict and the product oracle must agree exactly, and the first
 * framework's SCC-test count must stay within |E| + |V1|^2.
 */
CheckReport check_connectivity(const CheckOptions& opts);

/**
 * Random explicit Muller games: the Horn solver must reproduce the
 * reference solver's regions, and every output must partition V.
 */
CheckReport check_muller(const CheckOptions& opts);

/**
 * Randomized incremental runs: after every addition, the engine partition
 * must equal a fresh static SCC pass over the accumulated edges and the
 * canonical topological order must be valid for every cross edge.
 */
CheckReport check_isccm(const CheckOptions& opts);

/// Order list against a naive shadow list, plus the compatible-search double.
CheckReport check_ordlist(const CheckOptions& opts);

struct BenchRow {
    int n0 = 0, n1 = 0, m = 0;
    std::string algo;
    uint64_t seed = 0;
    double millis = 0;
    uint64_t traversals = 0, scc_tests = 0, merges = 0;
};

/**
 * Runs the named workload grid ("small", "sparse", "dense") for each
 * selected algorithm, one row per (instance, algorithm).
 */
std::vector<BenchRow> run_bench(const std::string& grid, const std::vector<std::string>& algos,
                                uint64_t seed);

/// Canonical CSV with the header row.
std::string bench_csv(const std::vector<BenchRow>& rows);

/// Worker-thread budget: GAMESCC_THREADS when set, hardware otherwise.
int worker_threads();

}  // namespace gamescc
