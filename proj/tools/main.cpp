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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gamescc/connectivity.hpp"
#include "gamescc/differential.hpp"
#include "gamescc/game_io.hpp"
#include "gamescc/generate.hpp"
#include "gamescc/muller.hpp"
#include "gamescc/rng.hpp"

namespace {

using gamescc::ConnectivityAlgo;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write \"" + path + "\"");
    out << text;
}

ordered_json stats_json(const gamescc::SolveStats& st) {
    ordered_json j;
    j["stages"] = st.stages;
    j["scc_tests"] = st.scc_tests;
    j["forced_count"] = st.forced_count;
    j["edge_traversals"] = st.isccm.edge_traversals;
    j["searches"] = st.isccm.searches;
    j["merges"] = st.isccm.merges;
    j["loop_deletions"] = st.isccm.loop_deletions;
    return j;
}

std::vector<std::string> region_names(const gamescc::VertexSet& s, const gamescc::Arena& a) {
    std::vector<std::string> names;
    s.for_each([&](int v) { names.push_back(a.name(v)); });
    std::sort(names.begin(), names.end());
    return names;
}

int cmd_solve(const std::string& input, const std::string& algo, const std::string& output,
              int cap) {
    gamescc::MullerGame game = gamescc::parse_game(read_file(input));

    ordered_json doc;
    if (algo == "dfcg" || algo == "dfcg-mk" || algo == "derivative" || algo == "oracle") {
        if (!game.is_connectivity()) {
            std::cerr << "error: algorithm \"" << algo << "\" requires a connectivity game"
                      << std::endl;
            return kExitUsage;
        }
        if (algo == "dfcg") {
            gamescc::SolveResult r = gamescc::solve_dfcg(game);
            doc["forced_connected"] = r.forced_connected;
            doc["algorithm"] = algo;
            doc["stats"] = stats_json(r.stats);
        } else if (algo == "dfcg-mk") {
            gamescc::SolveResult r = gamescc::solve_dfcg_mk(game);
            doc["forced_connected"] = r.forced_connected;
            doc["algorithm"] = algo;
            doc["stats"] = stats_json(r.stats);
        } else if (algo == "derivative") {
            gamescc::DerivativeTrace tr = gamescc::derivative_trace(game);
            doc["forced_connected"] = gamescc::derivative_verdict(game);
            doc["algorithm"] = algo;
            doc["stats"] = ordered_json{{"stages", tr.stabilization}};
        } else {
            gamescc::OracleVerdict v = gamescc::oracle_forced_connected(game, cap);
            doc["forced_connected"] = v.forced_connected;
            doc["algorithm"] = algo;
            ordered_json wins = ordered_json::array();
            for (int i = 0; i < game.arena.size(); ++i)
                if (v.wins_from[i]) wins.push_back(game.arena.name(i));
            std::sort(wins.begin(), wins.end());
            doc["stats"] = ordered_json{{"wins_from", wins}};
        }
    } else if (algo == "muller" || algo == "muller-oracle") {
        gamescc::WinningRegions regions;
        gamescc::MullerStats st;
        if (algo == "muller")
            regions = gamescc::solve_explicit_muller(game, ConnectivityAlgo::dfcg_mk, &st);
        else
            regions = gamescc::zielonka_oracle(game, cap);
        doc["win0"] = region_names(regions.win0, game.arena);
        doc["win1"] = region_names(regions.win1, game.arena);
        doc["iterations"] = st.iterations;
        doc["horn_steps"] = st.horn_steps;
        doc["attractor_removals"] = st.attractor_removals;
    } else {
        std::cerr << "error: unknown algorithm \"" << algo << "\"" << std::endl;
        return kExitUsage;
    }
    write_output(output, doc.dump() + "\n");
    return kExitOk;
}

int cmd_gen(const std::string& cls, int count, int v0, int v1, double edge_p, int sets,
            uint64_t seed, const std::string& out_dir) {
    gamescc::GenParams params;
    params.n0 = v0;
    params.n1 = v1;
    params.edge_p = edge_p;
    params.sets = sets;
    params.omega_class = gamescc::omega_class_from_name(cls);

    std::filesystem::create_directories(out_dir);
    gamescc::SplitMix64 master(seed);
    for (int i = 0; i < count; ++i) {
        gamescc::SplitMix64 rng = master.fork(static_cast<uint64_t>(i));
        gamescc::MullerGame game = gamescc::generate_game(params, rng);
        std::ostringstream name;
        name << cls << "_s" << seed << "_" << i << ".json";
        write_output((std::filesystem::path(out_dir) / name.str()).string(),
                     gamescc::serialize_game(game));
    }
    return kExitOk;
}

int cmd_check(const std::string& suite, const gamescc::CheckOptions& opts) {
    gamescc::CheckReport report;
    if (suite == "connectivity")
        report = gamescc::check_connectivity(opts);
    else if (suite == "muller")
        report = gamescc::check_muller(opts);
    else if (suite == "isccm")
        report = gamescc::check_isccm(opts);
    else if (suite == "ordlist")
        report = gamescc::check_ordlist(opts);
    else {
        std::cerr << "error: unknown suite \"" << suite << "\"" << std::endl;
        return kExitUsage;
    }
    std::cout << report.summary(suite) << std::endl;
    return report.ok() ? kExitOk : kExitDisagreement;
}

int cmd_bench(const std::string& grid, const std::string& algos_csv, const std::string& out,
              uint64_t seed) {
    std::vector<std::string> algos;
    std::stringstream ss(algos_csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) algos.push_back(item);
    if (algos.empty()) {
        std::cerr << "error: no algorithms selected" << std::endl;
        return kExitUsage;
    }
    write_output(out, gamescc::bench_csv(gamescc::run_bench(grid, algos, seed)));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gamescc: connectivity and explicit Muller games on bipartite arenas"};
    app.require_subcommand(1);

    // solve
    std::string in_path, out_path, algo = "dfcg-mk";
    int cap = 14;
    CLI::App* solve = app.add_subcommand("solve", "solve a game file");
    solve->add_option("--input", in_path, "game file (JSON)")->required();
    solve->add_option("--algo", algo,
                      "dfcg | dfcg-mk | derivative | oracle | muller | muller-oracle");
    solve->add_option("--output", out_path, "result path (default stdout)");
    solve->add_option("--cap", cap, "vertex cap for the oracle algorithms");

    // gen
    std::string gen_class = "connectivity", gen_out = ".";
    int gen_count = 1, gen_v0 = 4, gen_v1 = 4, gen_sets = 3;
    double gen_p = -1;
    uint64_t gen_seed = 1;
    CLI::App* gen = app.add_subcommand("gen", "generate game files");
    gen->add_option("--class", gen_class,
                    "connectivity | random | linear | anti-chain | fully-separated");
    gen->add_option("--count", gen_count, "number of games");
    gen->add_option("--v0", gen_v0, "player-0 vertices");
    gen->add_option("--v1", gen_v1, "player-1 vertices");
    gen->add_option("--edge-p", gen_p, "edge probability (default 2 ln|V| / |V|)");
    gen->add_option("--sets", gen_sets, "winning sets for omega classes");
    gen->add_option("--seed", gen_seed, "seed");
    gen->add_option("--out", gen_out, "output directory")->required();

    // check
    std::string suite = "connectivity";
    gamescc::CheckOptions copts;
    copts.count = 1000;
    CLI::App* check = app.add_subcommand("check", "run a differential suite");
    check->add_option("--suite", suite, "connectivity | muller | isccm | ordlist")->required();
    check->add_option("--n", copts.count, "instances");
    check->add_option("--max-v", copts.max_v, "vertex bound");
    check->add_option("--sets", copts.max_sets, "winning set bound (muller)");
    check->add_option("--adds", copts.adds, "edge additions per run (isccm)");
    check->add_option("--ops", copts.ops, "operations (ordlist)");
    check->add_option("--seed", copts.seed, "master seed");
    check->add_flag("--inject-bug", copts.inject_bug,
                    "corrupt one verdict to exercise failure reporting");

    // bench
    std::string grid = "small", bench_algos = "dfcg-mk,dfcg", bench_out;
    uint64_t bench_seed = 1;
    CLI::App* bench = app.add_subcommand("bench", "sweep generated workloads");
    bench->add_option("--grid", grid, "small | sparse | dense");
    bench->add_option("--algo", bench_algos, "comma-separated algorithm list");
    bench->add_option("--out", bench_out, "CSV path (default stdout)");
    bench->add_option("--seed", bench_seed, "seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve->parsed()) return cmd_solve(in_path, algo, out_path, cap);
        if (gen->parsed())
            return cmd_gen(gen_class, gen_count, gen_v0, gen_v1, gen_p, gen_sets, gen_seed,
                           gen_out);
        if (check->parsed()) {
            if (suite == "muller" && !check->count("--max-v")) copts.max_v = 8;
            if (suite == "connectivity" && !check->count("--n")) copts.count = 1000;
            return cmd_check(suite, copts);
        }
        if (bench->parsed()) return cmd_bench(grid, bench_algos, bench_out, bench_seed);
    } catch (const gamescc::ParseError& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitUsage;
    }
    return kExitUsage;
}
