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

#include "gamescc/differential.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "gamescc/arena.hpp"
#include "gamescc/connectivity.hpp"
#include "gamescc/generate.hpp"
#include "gamescc/isccm.hpp"
#include "gamescc/muller.hpp"
#include "gamescc/order_list.hpp"
#include "gamescc/rng.hpp"

namespace gamescc {

std::string CheckReport::summary(const std::string& suite) const {
    std::ostringstream os;
    os << "suite " << suite << ": " << instances << " instances, " << failures << " failures";
    if (failures > 0)
        os << "; first at index " << first_failure_index << " (replay: seed " << seed
           << ", index " << first_failure_index << "): " << message;
    return os.str();
}

int worker_threads() {
    if (const char* env = std::getenv("GAMESCC_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

/// Runs `fn` over indices [0, count) across workers; empty return = pass.
CheckReport run_batch(const CheckOptions& opts, int count,
                      const std::function<std::string(int, SplitMix64&)>& fn) {
    CheckReport report;
    report.instances = static_cast<uint64_t>(count);
    report.seed = opts.seed;

    const int threads = std::min(opts.threads > 0 ? opts.threads : worker_threads(),
                                 std::max(1, count));
    SplitMix64 master(opts.seed);

    std::atomic<int> next_index{0};
    std::atomic<uint64_t> failures{0};
    std::mutex mu;
    int64_t first_index = -1;
    std::string first_message;

    auto worker = [&] {
        for (;;) {
            int i = next_index.fetch_add(1);
            if (i >= count) return;
            SplitMix64 rng = master.fork(static_cast<uint64_t>(i));
            std::string err;
            try {
                err = fn(i, rng);
            } catch (const std::exception& e) {
                err = std::string("exception: ") + e.what();
            }
            if (!err.empty()) {
                failures.fetch_add(1);
                std::lock_guard<std::mutex> lock(mu);
                if (first_index < 0 || i < first_index) {
                    first_index = i;
                    first_message = err;
                }
            }
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    report.failures = failures.load();
    report.first_failure_index = first_index;
    report.message = first_message;
    return report;
}

GenParams random_game_shape(int max_v, SplitMix64& rng) {
    GenParams p;
    const int n = rng.range(2, std::max(2, max_v));
    p.n0 = rng.range(1, n - 1);
    p.n1 = n - p.n0;
    switch (rng.range(0, 3)) {
        case 0: p.edge_p = -1; break;  // 2 ln|V| / |V|
        case 1: p.edge_p = 0.15; break;
        case 2: p.edge_p = 0.35; break;
        default: p.edge_p = 0.6; break;
    }
    return p;
}

std::string describe_game(const MullerGame& game) {
    std::ostringstream os;
    os << "n0=" << game.arena.n0() << " n1=" << game.arena.n1() << " m=" << game.arena.edge_count();
    return os.str();
}

/**
 * A winning set player 0 has a chance to realize: an SCC of the subgame
 * kernel of a random vertex subset. Purely random subsets are almost
 * never achievable as infinity sets, which would leave the player-0 side
 * of the differential untested.
 */
VertexSet achievable_set(const Arena& a, SplitMix64& rng) {
    const int n = a.size();
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (rng.chance(0.7)) s.insert(v);
    if (s.empty()) s = VertexSet::full(n);
    for (bool changed = true; changed;) {
        changed = false;
        s.for_each([&](int v) {
            for (int w : a.out(v))
                if (s.contains(w)) return;
            s.erase(v);
            changed = true;
        });
    }
    if (s.empty()) return s;
    std::vector<Edge> edges;
    s.for_each([&](int v) {
        for (int w : a.out(v))
            if (s.contains(w)) edges.emplace_back(v, w);
    });
    SccResult scc = tarjan_scc(n, s, edges);
    std::vector<const std::vector<int>*> fat;
    for (const auto& comp : scc.components)
        if (comp.size() > 1) fat.push_back(&comp);
    if (fat.empty()) return VertexSet(n);
    const std::vector<int>& pick = *fat[rng.below(fat.size())];
    return VertexSet::of(n, pick);
}

}  // namespace

CheckReport check_connectivity(const CheckOptions& opts) {
    return run_batch(opts, opts.count, [&](int index, SplitMix64& rng) -> std::string {
        GenParams shape = random_game_shape(opts.max_v, rng);
        shape.omega_class = OmegaClass::connectivity;
        MullerGame game = generate_game(shape, rng);

        SolveResult mk = solve_dfcg_mk(game);
        SolveResult dm = solve_dfcg(game);
        bool deriv = derivative_verdict(game);
        OracleVerdict oracle = oracle_forced_connected(game, std::max(14, opts.max_v));

        bool mk_verdict = mk.forced_connected;
        if (opts.inject_bug && index % 97 == 13) mk_verdict = !mk_verdict;

        if (mk_verdict != oracle.forced_connected || dm.forced_connected != oracle.forced_connected ||
            deriv != oracle.forced_connected) {
            std::ostringstream os;
            os << "verdict mismatch on " << describe_game(game) << ": dfcg-mk=" << mk_verdict
               << " dfcg=" << dm.forced_connected << " derivative=" << deriv
               << " oracle=" << oracle.forced_connected;
            return os.str();
        }
        const uint64_t bound =
            static_cast<uint64_t>(game.arena.edge_count()) +
            static_cast<uint64_t>(game.arena.n1()) * static_cast<uint64_t>(game.arena.n1());
        if (mk.stats.scc_tests > bound) {
            std::ostringstream os;
            os << "scc_tests " << mk.stats.scc_tests << " exceeds |E|+|V1|^2=" << bound << " on "
               << describe_game(game);
            return os.str();
        }
        return {};
    });
}

CheckReport check_muller(const CheckOptions& opts) {
    return run_batch(opts, opts.count, [&](int index, SplitMix64& rng) -> std::string {
        GenParams shape = random_game_shape(std::min(opts.max_v, 8), rng);
        // Denser arenas carry more strongly connected substructure, which
        // is where the solver branches actually fire.
        shape.edge_p = 0.3 + 0.15 * static_cast<double>(rng.below(4));
        switch (rng.range(0, 4)) {
            case 0: shape.omega_class = OmegaClass::random_explicit; break;
            case 1: shape.omega_class = OmegaClass::linear; break;
            case 2: shape.omega_class = OmegaClass::anti_chain; break;
            case 3: shape.omega_class = OmegaClass::fully_separated; break;
            default: shape.omega_class = OmegaClass::connectivity; break;
        }
        shape.sets = rng.range(1, std::max(1, std::min(opts.max_sets, shape.n0 + shape.n1)));
        MullerGame game = generate_game(shape, rng);

        // Mix in sets player 0 can actually realize, respecting max_sets.
        while (static_cast<int>(game.omega.size()) < opts.max_sets && rng.chance(0.6)) {
            VertexSet c = achievable_set(game.arena, rng);
            if (c.empty()) break;
            if (std::find(game.omega.begin(), game.omega.end(), c) == game.omega.end())
                game.omega.push_back(c);
        }

        ConnectivityAlgo algo = static_cast<ConnectivityAlgo>(index % 3);  // rotate subroutines
        WinningRegions got = solve_explicit_muller(game, algo);
        if (opts.inject_bug && index % 89 == 7) {
            // Move one vertex across the partition: guaranteed mismatch.
            if (!got.win0.empty()) {
                int v = got.win0.to_vector()[0];
                got.win0.erase(v);
                got.win1.insert(v);
            } else {
                int v = got.win1.to_vector()[0];
                got.win1.erase(v);
                got.win0.insert(v);
            }
        }
        WinningRegions want = zielonka_oracle(game, std::min(opts.max_v, 8) + 1);

        if (!got.is_partition_of(game.arena.vertices()))
            return "solver output is not a determinacy partition on " + describe_game(game);
        if (got.win0 != want.win0) {
            std::ostringstream os;
            os << "region mismatch on " << describe_game(game) << " omega="
               << omega_class_name(shape.omega_class) << "/" << game.omega.size()
               << " algo=" << index % 3;
            return os.str();
        }
        return {};
    });
}

CheckReport check_isccm(const CheckOptions& opts) {
    return run_batch(opts, opts.count, [&](int index, SplitMix64& rng) -> std::string {
        const int n = rng.range(2, std::max(2, opts.isccm_n));
        const int initial = static_cast<int>(rng.below(static_cast<uint64_t>(2 * n) + 1));
        std::vector<Edge> accumulated;
        for (int i = 0; i < initial; ++i) {
            int u = rng.range(0, n - 1), v = rng.range(0, n - 1);
            if (u != v) accumulated.emplace_back(u, v);
        }
        SccPartition engine(n, accumulated);
        engine.set_audit(true);

        for (int step = 0; step < opts.adds; ++step) {
            int u = rng.range(0, n - 1), v = rng.range(0, n - 1);
            if (u == v) continue;
            engine.add_edge(u, v);
            accumulated.emplace_back(u, v);
            if (opts.inject_bug && index == 0 && step == opts.adds / 2)
                accumulated.emplace_back(rng.range(0, n - 1) == u ? u : (u + 1) % n, u);

            SccResult fresh = tarjan_scc(n, VertexSet::full(n), accumulated);
            for (int x = 0; x < n; ++x) {
                int rep = fresh.components[fresh.component_of[x]][0];
                if (engine.find(x) != engine.find(rep))
                    return "partition mismatch after step " + std::to_string(step);
            }
            if (engine.component_count() != static_cast<int>(fresh.components.size()))
                return "component count mismatch after step " + std::to_string(step);
            for (const auto& [a, b] : accumulated) {
                int ca = engine.find(a), cb = engine.find(b);
                if (ca != cb && !engine.order_precedes(ca, cb))
                    return "topological order violated after step " + std::to_string(step);
            }
        }
        return {};
    });
}

CheckReport check_ordlist(const CheckOptions& opts) {
    CheckOptions one = opts;
    return run_batch(one, 1, [&](int, SplitMix64& rng) -> std::string {
        OrderList<int> list;
        std::vector<int> shadow;                       // payloads in order
        std::vector<OrderList<int>::Handle> handles;   // parallel to shadow
        int next_payload = 0;

        for (int op = 0; op < opts.ops; ++op) {
            int kind = rng.range(0, 3);
            if (shadow.empty() || kind == 0) {
                handles.push_back(list.push_back(next_payload));
                shadow.push_back(next_payload);
                ++next_payload;
            } else if (kind == 1) {
                size_t at = rng.below(shadow.size());
                handles.insert(handles.begin() + at, list.insert_before(next_payload, handles[at]));
                shadow.insert(shadow.begin() + at, next_payload);
                ++next_payload;
            } else if (kind == 2) {
                size_t at = rng.below(shadow.size());
                handles.insert(handles.begin() + at + 1,
                               list.insert_after(next_payload, handles[at]));
                shadow.insert(shadow.begin() + at + 1, next_payload);
                ++next_payload;
            } else {
                size_t at = rng.below(shadow.size());
                list.erase(handles[at]);
                handles.erase(handles.begin() + at);
                shadow.erase(shadow.begin() + at);
            }
            if (shadow.size() >= 2) {
                for (int q = 0; q < 8; ++q) {
                    size_t i = rng.below(shadow.size()), j = rng.below(shadow.size());
                    if (i == j) continue;
                    bool got = list.precedes(handles[i], handles[j]);
                    if (got != (i < j))
                        return "precedes mismatch at op " + std::to_string(op);
                }
            }
            if (op % 4096 == 0 && list.to_vector() != shadow)
                return "sequence mismatch at op " + std::to_string(op);
        }
        if (list.to_vector() != shadow) return "final sequence mismatch";
        if (list.size() != shadow.size()) return "size mismatch";
        return {};
    });
}

namespace {

struct GridPoint {
    int n0, n1;
    double p;
};

std::vector<GridPoint> grid_points(const std::string& grid) {
    if (grid == "small")
        return {{10, 10, 0.25}, {20, 20, 0.2}, {40, 40, 0.15}, {60, 60, 0.12}};
    if (grid == "sparse")
        return {{100, 100, -1}, {200, 200, -1}, {400, 400, -1}, {800, 800, -1}};
    if (grid == "dense")
        return {{40, 40, 0.8}, {80, 80, 0.8}, {140, 140, 0.8}, {200, 200, 0.8}};
    throw std::invalid_argument("unknown bench grid \"" + grid + "\"");
}

}  // namespace

std::vector<BenchRow> run_bench(const std::string& grid, const std::vector<std::string>& algos,
                                uint64_t seed) {
    std::vector<BenchRow> rows;
    SplitMix64 master(seed);
    int instance = 0;
    for (const GridPoint& pt : grid_points(grid)) {
        SplitMix64 rng = master.fork(static_cast<uint64_t>(instance));
        GenParams shape;
        shape.n0 = pt.n0;
        shape.n1 = pt.n1;
        shape.edge_p = pt.p;
        shape.omega_class = OmegaClass::connectivity;
        MullerGame game = generate_game(shape, rng);

        for (const std::string& algo : algos) {
            BenchRow row;
            row.n0 = pt.n0;
            row.n1 = pt.n1;
            row.m = game.arena.edge_count();
            row.algo = algo;
            row.seed = seed;
            auto t0 = std::chrono::steady_clock::now();
            if (algo == "dfcg-mk") {
                SolveResult r = solve_dfcg_mk(game);
                row.traversals = r.stats.isccm.edge_traversals;
                row.scc_tests = r.stats.scc_tests;
                row.merges = r.stats.isccm.merges;
            } else if (algo == "dfcg") {
                SolveResult r = solve_dfcg(game);
                row.traversals = r.stats.isccm.edge_traversals;
                row.scc_tests = r.stats.scc_tests;
                row.merges = r.stats.isccm.merges;
            } else if (algo == "derivative") {
                derivative_verdict(game);
            } else {
                throw std::invalid_argument("unknown bench algorithm \"" + algo + "\"");
            }
            auto t1 = std::chrono::steady_clock::now();
            row.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
            rows.push_back(std::move(row));
        }
        ++instance;
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream os;
    os << "n0,n1,m,algo,seed,millis,traversals,scc_tests,merges\n";
    for (const BenchRow& r : rows) {
        os << r.n0 << ',' << r.n1 << ',' << r.m << ',' << r.algo << ',' << r.seed << ','
           << r.millis << ',' << r.traversals << ',' << r.scc_tests << ',' << r.merges << '\n';
    }
    return os.str();
}

}  // namespace gamescc
