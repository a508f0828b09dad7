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

#include "embedder.hpp"

#include <algorithm>
#include <string>

namespace qembed {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

EmbedderConfig EmbedderConfig::create(const LatticeParams& lattice, int visible_group,
                                      int hidden_group, int visible_start) {
    if (visible_start < 0) visible_start = lattice.alpha;
    if (visible_group < 1)
        throw DomainError("visible group size must be >= 1, got " + std::to_string(visible_group));
    if (hidden_group < 1)
        throw DomainError("hidden group size must be >= 1, got " + std::to_string(hidden_group));
    if (visible_group + hidden_group > lattice.alpha)
        throw DomainError("group sizes must satisfy m + n <= alpha, got " +
                          std::to_string(visible_group) + " + " + std::to_string(hidden_group) +
                          " > " + std::to_string(lattice.alpha));
    if (visible_start < lattice.shift || visible_start >= lattice.wires_per_side())
        throw DomainError("visible start wire must lie in [shift, alpha*M), got " +
                          std::to_string(visible_start));
    return EmbedderConfig{visible_group, hidden_group, visible_start, lattice};
}

std::pair<int, int> capacity(const EmbedderConfig& config) {
    const auto& lat = config.lattice;
    const int h_max = config.hidden_group * (lat.tiles - 1);
    const int v_max = std::min(lat.alpha * (lat.tiles - 1) - (config.visible_start - lat.shift),
                               lat.wires_per_side() - config.visible_start);
    return {v_max, h_max};
}

BlockPlan plan(int visible, int hidden, const EmbedderConfig& config) {
    if (visible < 1)
        throw DomainError("visible count must be >= 1, got " + std::to_string(visible));
    if (hidden < 1) throw DomainError("hidden count must be >= 1, got " + std::to_string(hidden));

    const auto [v_max, h_max] = capacity(config);
    if (hidden > h_max)
        throw CapacityError("hidden layer exceeds capacity: H=" + std::to_string(hidden) +
                            " > H_max=" + std::to_string(h_max) + " = n*(M-1)");
    if (visible > v_max)
        throw CapacityError("visible layer exceeds capacity: V=" + std::to_string(visible) +
                            " > V_max=" + std::to_string(v_max));

    const auto& lat = config.lattice;
    BlockPlan bp;
    bp.config = config;
    bp.visible_count = visible;
    bp.hidden_count = hidden;
    bp.visible_chain_length = ceil_div(hidden, config.hidden_group);
    bp.hidden_chain_length = ceil_div(visible + config.visible_start - lat.shift, lat.alpha);
    bp.visible_groups = ceil_div(visible, config.visible_group);
    bp.hidden_groups = ceil_div(hidden, config.hidden_group);
    bp.start_visible_id = linear_id(wire_qubit(0, config.visible_start, 0, lat), lat);
    bp.start_hidden_id = linear_id(wire_qubit(1, lat.shift, 0, lat), lat);
    bp.wire_stride = lat.wire_span();
    bp.hidden_group_stride = static_cast<std::int64_t>(lat.alpha) * lat.wire_span();
    bp.visible_group_stride = static_cast<std::int64_t>(config.visible_group) * lat.wire_span();
    return bp;
}

namespace {

int visible_wire(const BlockPlan& bp, int i) { return bp.config.visible_start + i; }

int hidden_wire(const BlockPlan& bp, int j) {
    const int g = j / bp.config.hidden_group;
    const int r = j % bp.config.hidden_group;
    return bp.config.lattice.shift + bp.config.lattice.alpha * g + r;
}

}  // namespace

Embedding embed(const BlockPlan& bp, const HardwareGraph& graph) {
    const auto& lat = bp.config.lattice;
    if (!graph.params() || *graph.params() != lat)
        throw DomainError("plan and hardware graph disagree on lattice parameters");

    Embedding e;
    e.provenance = Provenance::structured;
    e.params = EmbeddingParams{lat.tiles, lat.alpha, bp.config.visible_group,
                               bp.config.hidden_group, bp.config.visible_start};
    e.visible.reserve(bp.visible_count);
    e.hidden.reserve(bp.hidden_count);

    std::vector<QubitId> blocked;
    auto chain_on_wire = [&](int u, int wire, int length) {
        std::vector<QubitId> chain;
        chain.reserve(length);
        for (int z = 0; z < length; ++z) {
            QubitId q = linear_id(wire_qubit(u, wire, z, lat), lat);
            if (!graph.has_qubit(q)) blocked.push_back(q);
            chain.push_back(q);
        }
        return chain;
    };

    for (int i = 0; i < bp.visible_count; ++i)
        e.visible.push_back(chain_on_wire(0, visible_wire(bp, i), bp.visible_chain_length));
    for (int j = 0; j < bp.hidden_count; ++j)
        e.hidden.push_back(chain_on_wire(1, hidden_wire(bp, j), bp.hidden_chain_length));

    if (!blocked.empty()) {
        std::sort(blocked.begin(), blocked.end());
        blocked.erase(std::unique(blocked.begin(), blocked.end()), blocked.end());
        std::string ids;
        for (QubitId q : blocked) {
            if (!ids.empty()) ids += ", ";
            ids += std::to_string(q);
        }
        throw EmbeddingError("embedding footprint hits disabled qubits: " + ids);
    }
    return e;
}

Embedding embed_bipartite(int visible, int hidden, const EmbedderConfig& config,
                          const HardwareGraph& graph) {
    return embed(plan(visible, hidden, config), graph);
}

std::pair<QubitId, QubitId> edge_witness(const BlockPlan& bp, int i, int j) {
    if (i < 0 || i >= bp.visible_count)
        throw DomainError("visible index out of range, got " + std::to_string(i));
    if (j < 0 || j >= bp.hidden_count)
        throw DomainError("hidden index out of range, got " + std::to_string(j));
    const auto& lat = bp.config.lattice;
    const int g = j / bp.config.hidden_group;
    const int zp = (visible_wire(bp, i) - lat.shift) / lat.alpha;
    QubitId a = linear_id(wire_qubit(0, visible_wire(bp, i), g, lat), lat);
    QubitId b = linear_id(wire_qubit(1, hidden_wire(bp, j), zp, lat), lat);
    return {a, b};
}

std::pair<int, int> footprint_cells(int visible, int hidden, int cell) {
    if (visible < 1 || hidden < 1 || cell < 1)
        throw DomainError("footprint arguments must be >= 1");
    return {ceil_div(visible, cell), ceil_div(hidden, cell)};
}

}  // namespace qembed
