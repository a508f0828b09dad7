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
#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "embedder.hpp"
#include "lattice.hpp"

namespace qembed {

// Logical bipartite problem graph; edges pair a visible index in [0, V) with
// a hidden index in [0, H).  May be partial.
struct BipartiteGraph {
    int visible = 0;
    int hidden = 0;
    std::vector<std::pair<int, int>> edges;

    static BipartiteGraph complete(int visible, int hidden);
    int node_count() const { return visible + hidden; }
};

struct HeuristicConfig {
    std::uint64_t seed = 0;
    int max_tries = 10;        // full node passes, including the first
    double overuse_base = 8.0; // per-qubit weight is overuse_base^usage
    std::chrono::milliseconds timeout{30000};
};

// Outcome of a heuristic run.  On failure `embedding` is empty and
// best_overlap holds the smallest number of doubly-used qubits seen at the
// end of any completed pass (-1 when no pass completed).
struct HeuristicResult {
    std::optional<Embedding> embedding;
    int best_overlap = -1;
    int passes = 0;
    bool timed_out = false;

    bool success() const { return embedding.has_value(); }
};

// Chain-growth embedder used as the comparison baseline.  Nodes are visited
// in seeded random order; each node is rooted at the qubit minimizing the sum
// of congestion-weighted shortest-path distances from its already-embedded
// neighbors' chains (ties to the lowest id), and its chain is the union of
// those paths.  Full passes repeat, re-routing every node against the rest,
// until the chains are disjoint and valid or max_tries passes have run.
// A returned embedding always passes the validator.
HeuristicResult heuristic_embed(const BipartiteGraph& logical, const HardwareGraph& g,
                                const HeuristicConfig& cfg);

}  // namespace qembed
