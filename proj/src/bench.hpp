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

#pragma once
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "heuristic.hpp"
#include "lattice.hpp"

namespace qembed {

struct BenchConfig {
    std::vector<std::pair<int, int>> sizes;  // empty selects 40..120 step 20, square
    int trials = 100;
    bool run_structured = true;
    bool run_heuristic = false;
    std::uint64_t seed_base = 0;
    int threshold = 6;
    int visible_group = 4;
    int hidden_group = 8;
    int visible_start = -1;
    int heuristic_max_tries = 10;
    double heuristic_timeout_s = 30.0;
};

struct BenchRecord {
    std::string config_label;  // "VxH"
    std::string algorithm;     // "structured" | "heuristic"
    int trials = 0;
    double avg_time_s = 0;
    double std_time_s = 0;      // sample standard deviation (n-1); 0 for n=1
    double avg_chains_ge = 0;   // over successful trials
    double std_chains_ge = 0;
    int failed_trials = 0;
};

// T timed trials per (size, algorithm); only the embedding call is timed.
// Heuristic trials derive their seed as seed_base + trial index and are
// recorded as failures, never dropped, when no valid embedding is returned.
// Rows come back sorted by (V, H, algorithm).
std::vector<BenchRecord> run_bench(const BenchConfig& cfg, const HardwareGraph& graph);

// Header "config,algorithm,trials,avg_time_s,std_time_s,avg_chains_ge_6,
// std_chains_ge_6"; a failed_trials column is appended only when some trial
// failed.
std::string bench_csv(const std::vector<BenchRecord>& records);

}  // namespace qembed
