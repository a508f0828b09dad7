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
#include <utility>
#include <vector>

#include "lattice.hpp"

namespace qembed {

/*
Structured embedding of the complete bipartite graph K(V, H).

Every logical node owns one wire.  Visible node i sits on the vertical wire
C0 + i; hidden node j (group g = j / n, member r = j % n) sits on the
horizontal wire S + alpha*g + r, so hidden wires come in bundles of n with a
gap of alpha - n between bundles.  Chains grow along their wire from z = 0:

  visible chain length  L_v = ceil(H / n)          one segment per hidden group
  hidden chain length   L_h = ceil((V + C0 - S) / alpha)

Logical edge (i, j) is carried by the coupler between visible segment z = g
and hidden segment z' = (C0 + i - S) / alpha, which the crossing rule
guarantees to exist whenever the plan is within capacity.
*/

struct EmbedderConfig {
    int visible_group = 4;    // m, visible wires per cell column
    int hidden_group = 8;     // n, hidden wires per bundle
    int visible_start = -1;   // C0, wire of visible node 0; -1 selects alpha
    LatticeParams lattice{};

    // Resolves defaults and checks m >= 1, n >= 1, m + n <= alpha and
    // S <= C0 < alpha*M.  Throws DomainError.
    static EmbedderConfig create(const LatticeParams& lattice, int visible_group = 4,
                                 int hidden_group = 8, int visible_start = -1);
};

struct BlockPlan {
    EmbedderConfig config;
    int visible_count = 0;        // V
    int hidden_count = 0;         // H
    int visible_chain_length = 0; // L_v
    int hidden_chain_length = 0;  // L_h
    int visible_groups = 0;       // ceil(V / m)
    int hidden_groups = 0;        // ceil(H / n)
    QubitId start_visible_id = 0; // first qubit of visible node 0
    QubitId start_hidden_id = 0;  // first qubit of hidden node 0

    // Linear-id strides of the layout: adjacent wires differ by M-1, hidden
    // bundles by alpha*(M-1), visible cell columns by m*(M-1).
    std::int64_t wire_stride = 0;
    std::int64_t hidden_group_stride = 0;
    std::int64_t visible_group_stride = 0;
};

enum class Provenance { structured, heuristic };

// Lattice parameters an embedding was built against, echoed through
// serialization.  Group fields are zero for heuristic embeddings.
struct EmbeddingParams {
    int tiles = 0;
    int alpha = 0;
    int visible_group = 0;
    int hidden_group = 0;
    int visible_start = 0;

    bool operator==(const EmbeddingParams&) const = default;
};

struct Embedding {
    std::vector<std::vector<QubitId>> visible;
    std::vector<std::vector<QubitId>> hidden;
    Provenance provenance = Provenance::structured;
    EmbeddingParams params;

    int visible_count() const { return static_cast<int>(visible.size()); }
    int hidden_count() const { return static_cast<int>(hidden.size()); }

    bool operator==(const Embedding&) const = default;
};

// Largest (V_max, H_max) this configuration can host:
//   H_max = n*(M-1)
//   V_max = min(alpha*(M-1) - (C0 - S), alpha*M - C0)
std::pair<int, int> capacity(const EmbedderConfig& config);

// Lays out K(V, H); throws CapacityError naming the violated bound.
BlockPlan plan(int visible, int hidden, const EmbedderConfig& config);

// Materializes the plan against a graph built from the same parameters.
// Throws EmbeddingError listing every disabled qubit in the footprint.
Embedding embed(const BlockPlan& plan, const HardwareGraph& graph);

// plan + embed in one call.
Embedding embed_bipartite(int visible, int hidden, const EmbedderConfig& config,
                          const HardwareGraph& graph);

// The designated coupler carrying logical edge (i, j).
std::pair<QubitId, QubitId> edge_witness(const BlockPlan& plan, int i, int j);

// Footprint in K(m,m) sub-cell units: (ceil(V/m), ceil(H/m)).  Reporting
// only; the embedding itself is laid out wire by wire.
std::pair<int, int> footprint_cells(int visible, int hidden, int cell);

}  // namespace qembed
