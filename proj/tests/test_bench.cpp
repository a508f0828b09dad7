// Copyright 2026 qembed developers
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include <doctest.h>

#include <sstream>

#include "bench.hpp"

using namespace qembed;

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string token;
    while (std::getline(ss, token, sep)) out.push_back(token);
    return out;
}

}  // namespace

TEST_CASE("structured-only bench rows") {
    const HardwareGraph g = HardwareGraph::build(LatticeParams::create(16, 12));
    BenchConfig cfg;
    cfg.sizes = {{8, 16}, {4, 8}};
    cfg.trials = 3;
    const auto records = run_bench(cfg, g);

    REQUIRE(records.size() == 2);
    CHECK(records[0].config_label == "4x8");  // sorted by size
    CHECK(records[1].config_label == "8x16");
    for (const auto& r : records) {
        CHECK(r.algorithm == "structured");
        CHECK(r.trials == 3);
        CHECK(r.failed_trials == 0);
        CHECK(r.avg_chains_ge == 0.0);
        CHECK(r.std_chains_ge == 0.0);
        CHECK(r.std_time_s >= 0.0);
    }

    const std::string csv = bench_csv(records);
    const auto lines = split(csv, '\n');
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] ==
          "config,algorithm,trials,avg_time_s,std_time_s,avg_chains_ge_6,std_chains_ge_6");
    CHECK(split(lines[1], ',').size() == 7);
}

TEST_CASE("structured 120x120 chain metrics and reference timing") {
    const HardwareGraph g = HardwareGraph::build(LatticeParams::create(16, 12));
    BenchConfig cfg;
    cfg.sizes = {{120, 120}};
    cfg.trials = 5;
    const auto records = run_bench(cfg, g);
    REQUIRE(records.size() == 1);
    CHECK(records[0].avg_chains_ge == 240.0);
    CHECK(records[0].std_chains_ge == 0.0);
    // comfortably inside the 0.014 s reference envelope
    CHECK(records[0].avg_time_s < 0.014);
}

TEST_CASE("single trial has zero standard deviation") {
    const HardwareGraph g = HardwareGraph::build(LatticeParams::create(16, 12));
    BenchConfig cfg;
    cfg.sizes = {{8, 8}};
    cfg.trials = 1;
    const auto records = run_bench(cfg, g);
    REQUIRE(records.size() == 1);
    CHECK(records[0].std_time_s == 0.0);
    CHECK(records[0].std_chains_ge == 0.0);
}

TEST_CASE("metric columns are reproducible for a fixed seed") {
    const HardwareGraph g = HardwareGraph::build(LatticeParams::create(4, 12));
    BenchConfig cfg;
    cfg.sizes = {{3, 3}};
    cfg.trials = 3;
    cfg.run_heuristic = true;
    cfg.seed_base = 5;
    cfg.heuristic_max_tries = 8;

    const auto a = run_bench(cfg, g);
    const auto b = run_bench(cfg, g);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].config_label == b[i].config_label);
        CHECK(a[i].algorithm == b[i].algorithm);
        CHECK(a[i].avg_chains_ge == b[i].avg_chains_ge);
        CHECK(a[i].std_chains_ge == b[i].std_chains_ge);
        CHECK(a[i].failed_trials == b[i].failed_trials);
    }
    // heuristic rows sort before structured rows at equal size
    CHECK(a[0].algorithm == "heuristic");
    CHECK(a[1].algorithm == "structured");
}

TEST_CASE("failed heuristic trials append a count column") {
    // an empty graph guarantees failures
    const auto lat = LatticeParams::create(3, 2);
    HardwareGraph g = HardwareGraph::build(lat);
    std::vector<QubitId> all;
    for (QubitId q = 0; q < g.label_count(); ++q) all.push_back(q);
    g = g.with_disabled(all);

    BenchConfig cfg;
    cfg.sizes = {{2, 2}};
    cfg.trials = 2;
    cfg.run_structured = false;
    cfg.run_heuristic = true;
    cfg.heuristic_max_tries = 1;

    const auto records = run_bench(cfg, g);
    REQUIRE(records.size() == 1);
    CHECK(records[0].failed_trials == 2);

    const std::string csv = bench_csv(records);
    const auto lines = split(csv, '\n');
    CHECK(lines[0] ==
          "config,algorithm,trials,avg_time_s,std_time_s,avg_chains_ge_6,std_chains_ge_6,"
          "failed_trials");
    CHECK(split(lines[1], ',').back() == "2");
}
