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
#include <map>
#include <utility>
#include <vector>

#include "embedder.hpp"
#include "lattice.hpp"

namespace qembed {

// Ising problem on K(V, H): biases indexed visible first, couplings keyed by
// (visible index, hidden index).  There are no intra-layer terms.
struct LogicalIsing {
    int visible = 0;
    int hidden = 0;
    std::vector<double> bias;                          // size V + H
    std::map<std::pair<int, int>, double> couplings;   // (i, j) -> J

    int node_count() const { return visible + hidden; }
    double total_abs_weight() const;  // sum |h| + sum |J|
};

// Ising problem on hardware ids with the convention
//   E(s) = sum_i h_i s_i + sum_{a<b} J_ab s_a s_b,   s in {-1, +1}.
// A negative coupling therefore rewards agreement (locks a chain).
struct PhysicalIsing {
    std::map<QubitId, double> bias;
    std::map<std::pair<QubitId, QubitId>, double> couplings;  // keys a < b

    std::vector<QubitId> variables() const;
    double energy(const std::map<QubitId, int>& spins) const;
};

// Maps logical parameters onto an embedding:
//   - each logical bias is split equally over its chain's qubits
//   - each logical coupling is placed on exactly one physical coupler, the
//     (min id, max id)-lexicographically smallest coupler between the chains
//   - every coupler internal to a chain is set to -chain_strength
// Throws EmbeddingError naming (i, j) when a nonzero logical coupling has no
// physical coupler to land on.
PhysicalIsing embed_parameters(const LogicalIsing& logical, const Embedding& e,
                               const HardwareGraph& g, double chain_strength);

struct UnembedResult {
    std::vector<int> logical;         // +-1 per logical node, visible first
    std::vector<bool> broken;         // per logical node
    double chain_break_fraction = 0;  // broken chains / total chains
};

// Majority vote per chain; an exact tie takes the value of the lowest-id
// qubit in the chain.  Throws DomainError when a chain qubit has no spin.
UnembedResult unembed_sample(const std::map<QubitId, int>& spins, const Embedding& e);

struct GroundStates {
    std::vector<QubitId> variables;          // spin order used in states
    double min_energy = 0;
    std::vector<std::vector<int>> states;    // all minimizers, +-1 entries
};

inline constexpr int kBruteForceLimit = 24;

// Exhaustive enumeration of all 2^N states.  States are reported in
// ascending bit-pattern order, where bit i set means variables[i] = +1.
// Refuses (LimitError) instances with more than `limit` variables.
GroundStates brute_force_ground(const PhysicalIsing& p, int limit = kBruteForceLimit);
GroundStates brute_force_ground(const LogicalIsing& l, int limit = kBruteForceLimit);

}  // namespace qembed
