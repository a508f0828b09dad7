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
#include <string>
#include <utility>
#include <vector>

#include "embedder.hpp"
#include "lattice.hpp"

namespace qembed {

// One entry per check, in fixed order: existence, disjointness, connectivity,
// coverage.  A failing check lists every offender, not just the first.
struct ValidationCheck {
    std::string name;
    bool pass = true;
    std::vector<QubitId> offending_ids;                 // existence/disjointness/connectivity
    std::vector<std::pair<int, int>> offending_edges;   // coverage: uncovered (i, j)
};

struct ValidationReport {
    bool is_valid = false;
    std::vector<ValidationCheck> checks;

    const ValidationCheck& check(const std::string& name) const;
};

// Full minor-embedding verification of e as an embedding of K(V, H) into g:
//   1. every chain qubit exists in g and is enabled
//   2. chains are pairwise vertex-disjoint
//   3. each chain induces a connected subgraph of g
//   4. every pair (i, j) has at least one coupler between chain i and chain j
// Failures are report content; only a shape mismatch between (V, H) and e
// throws.
ValidationReport validate(const Embedding& e, const HardwareGraph& g, int visible, int hidden);
ValidationReport validate(const Embedding& e, const HardwareGraph& g);

// Degree-counting bound: a chain whose qubits each carry at most alpha
// internal couplers needs ceil(opposite / alpha) qubits to reach `opposite`
// distinct chains of the other layer.
int chain_length_lower_bound(int opposite, int alpha);

struct ChainMetrics {
    std::vector<int> visible_lengths;
    std::vector<int> hidden_lengths;
    int max_length = 0;
    double mean_length = 0.0;
    int threshold = 6;
    int count_ge_threshold = 0;
    int lower_bound_visible = 0;  // bound for visible chains (opposite = H)
    int lower_bound_hidden = 0;   // bound for hidden chains (opposite = V)
};

// Chain statistics; alpha is taken from e.params (lower bounds are reported
// as 0 when the embedding carries no lattice parameters).
ChainMetrics chain_metrics(const Embedding& e, int threshold = 6);

}  // namespace qembed
