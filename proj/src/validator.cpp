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

#include "validator.hpp"

#include <algorithm>
#include <unordered_map>

namespace qembed {

const ValidationCheck& ValidationReport::check(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return c;
    throw DomainError("no such check: " + name);
}

int chain_length_lower_bound(int opposite, int alpha) {
    if (opposite < 1) throw DomainError("opposite layer size must be >= 1");
    if (alpha < 1) throw DomainError("alpha must be >= 1");
    return (opposite + alpha - 1) / alpha;
}

namespace {

// chain index space: visible chains first, then hidden
struct ChainRef {
    int layer;  // 0 visible, 1 hidden
    int index;
};

}  // namespace

ValidationReport validate(const Embedding& e, const HardwareGraph& g, int visible, int hidden) {
    if (e.visible_count() != visible || e.hidden_count() != hidden)
        throw DomainError("embedding shape is " + std::to_string(e.visible_count()) + "x" +
                          std::to_string(e.hidden_count()) + ", expected " +
                          std::to_string(visible) + "x" + std::to_string(hidden));

    ValidationReport report;
    ValidationCheck existence{"existence"};
    ValidationCheck disjointness{"disjointness"};
    ValidationCheck connectivity{"connectivity"};
    ValidationCheck coverage{"coverage"};

    auto chain_at = [&](int c) -> const std::vector<QubitId>& {
        return c < visible ? e.visible[c] : e.hidden[c - visible];
    };
    const int total = visible + hidden;

    // existence (also catches empty chains) and ownership map for disjointness
    std::unordered_map<QubitId, int> owner;
    for (int c = 0; c < total; ++c) {
        const auto& chain = chain_at(c);
        if (chain.empty()) existence.pass = false;
        for (QubitId q : chain) {
            if (!g.has_qubit(q)) {
                existence.pass = false;
                existence.offending_ids.push_back(q);
            }
            auto [it, inserted] = owner.emplace(q, c);
            if (!inserted && it->second != c) {
                disjointness.pass = false;
                disjointness.offending_ids.push_back(q);
            }
        }
    }

    // connectivity: BFS inside each chain over qubits that exist in g
    for (int c = 0; c < total; ++c) {
        const auto& chain = chain_at(c);
        std::unordered_map<QubitId, bool> seen;
        std::vector<QubitId> members;
        for (QubitId q : chain)
            if (g.has_qubit(q)) {
                seen.emplace(q, false);
                members.push_back(q);
            }
        if (members.empty()) continue;
        std::vector<QubitId> stack{members.front()};
        seen[members.front()] = true;
        while (!stack.empty()) {
            QubitId q = stack.back();
            stack.pop_back();
            for (QubitId nb : g.neighbors(q)) {
                auto it = seen.find(nb);
                if (it != seen.end() && !it->second) {
                    it->second = true;
                    stack.push_back(nb);
                }
            }
        }
        for (QubitId q : members)
            if (!seen[q]) {
                connectivity.pass = false;
                connectivity.offending_ids.push_back(q);
            }
    }

    // coverage: scan chain qubits' neighborhoods once
    std::vector<std::vector<char>> covered(visible, std::vector<char>(hidden, 0));
    for (int i = 0; i < visible; ++i) {
        for (QubitId q : e.visible[i]) {
            if (!g.has_qubit(q)) continue;
            for (QubitId nb : g.neighbors(q)) {
                auto it = owner.find(nb);
                if (it != owner.end() && it->second >= visible)
                    covered[i][it->second - visible] = 1;
            }
        }
    }
    for (int i = 0; i < visible; ++i)
        for (int j = 0; j < hidden; ++j)
            if (!covered[i][j]) {
                coverage.pass = false;
                coverage.offending_edges.emplace_back(i, j);
            }

    for (auto* check : {&existence, &disjointness, &connectivity, &coverage}) {
        std::sort(check->offending_ids.begin(), check->offending_ids.end());
        check->offending_ids.erase(
            std::unique(check->offending_ids.begin(), check->offending_ids.end()),
            check->offending_ids.end());
    }
    report.checks = {existence, disjointness, connectivity, coverage};
    report.is_valid = existence.pass && disjointness.pass && connectivity.pass && coverage.pass;
    return report;
}

ValidationReport validate(const Embedding& e, const HardwareGraph& g) {
    return validate(e, g, e.visible_count(), e.hidden_count());
}

ChainMetrics chain_metrics(const Embedding& e, int threshold) {
    ChainMetrics m;
    m.threshold = threshold;
    std::int64_t sum = 0;
    auto scan = [&](const std::vector<std::vector<QubitId>>& chains, std::vector<int>& out) {
        for (const auto& chain : chains) {
            const int len = static_cast<int>(chain.size());
            out.push_back(len);
            sum += len;
            m.max_length = std::max(m.max_length, len);
            if (len >= threshold) ++m.count_ge_threshold;
        }
    };
    scan(e.visible, m.visible_lengths);
    scan(e.hidden, m.hidden_lengths);
    const int total = e.visible_count() + e.hidden_count();
    m.mean_length = total > 0 ? static_cast<double>(sum) / total : 0.0;
    if (e.params.alpha > 0) {
        if (e.hidden_count() > 0)
            m.lower_bound_visible = chain_length_lower_bound(e.hidden_count(), e.params.alpha);
        if (e.visible_count() > 0)
            m.lower_bound_hidden = chain_length_lower_bound(e.visible_count(), e.params.alpha);
    }
    return m;
}

}  // namespace qembed
