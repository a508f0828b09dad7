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

#include "ising.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qembed {

double LogicalIsing::total_abs_weight() const {
    double sum = 0;
    for (double h : bias) sum += std::abs(h);
    for (const auto& [edge, j] : couplings) sum += std::abs(j);
    return sum;
}

std::vector<QubitId> PhysicalIsing::variables() const {
    std::vector<QubitId> vars;
    vars.reserve(bias.size());
    for (const auto& [q, h] : bias) vars.push_back(q);
    for (const auto& [edge, j] : couplings) {
        vars.push_back(edge.first);
        vars.push_back(edge.second);
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

double PhysicalIsing::energy(const std::map<QubitId, int>& spins) const {
    auto spin = [&](QubitId q) {
        auto it = spins.find(q);
        if (it == spins.end())
            throw DomainError("sample is missing a value for qubit " + std::to_string(q));
        return static_cast<double>(it->second);
    };
    double e = 0;
    for (const auto& [q, h] : bias) e += h * spin(q);
    for (const auto& [edge, j] : couplings) e += j * spin(edge.first) * spin(edge.second);
    return e;
}

PhysicalIsing embed_parameters(const LogicalIsing& logical, const Embedding& e,
                               const HardwareGraph& g, double chain_strength) {
    if (chain_strength <= 0) throw DomainError("chain strength must be > 0");
    if (e.visible_count() != logical.visible || e.hidden_count() != logical.hidden)
        throw DomainError("embedding shape does not match the logical problem");
    if (static_cast<int>(logical.bias.size()) != logical.node_count())
        throw DomainError("bias vector must have V + H entries");
    for (const auto& [edge, j] : logical.couplings)
        if (edge.first < 0 || edge.first >= logical.visible || edge.second < 0 ||
            edge.second >= logical.hidden)
            throw DomainError("logical coupling (" + std::to_string(edge.first) + ", " +
                              std::to_string(edge.second) + ") out of range");

    PhysicalIsing phys;

    auto chain_at = [&](int c) -> const std::vector<QubitId>& {
        return c < logical.visible ? e.visible[c] : e.hidden[c - logical.visible];
    };

    // split biases; chain couplers
    for (int c = 0; c < logical.node_count(); ++c) {
        const auto& chain = chain_at(c);
        if (chain.empty()) throw DomainError("chain " + std::to_string(c) + " is empty");
        const double share = logical.bias[c] / static_cast<double>(chain.size());
        for (QubitId q : chain) phys.bias[q] += share;
        for (std::size_t a = 0; a < chain.size(); ++a)
            for (std::size_t b = a + 1; b < chain.size(); ++b)
                if (g.are_coupled(chain[a], chain[b]))
                    phys.couplings[{std::min(chain[a], chain[b]),
                                    std::max(chain[a], chain[b])}] = -chain_strength;
    }

    // one designated coupler per logical pair
    for (int i = 0; i < logical.visible; ++i) {
        for (int j = 0; j < logical.hidden; ++j) {
            std::pair<QubitId, QubitId> best{-1, -1};
            for (QubitId a : e.visible[i])
                for (QubitId b : e.hidden[j])
                    if (g.are_coupled(a, b)) {
                        const std::pair<QubitId, QubitId> key{std::min(a, b), std::max(a, b)};
                        if (best.first < 0 || key < best) best = key;
                    }
            auto it = logical.couplings.find({i, j});
            const double weight = it == logical.couplings.end() ? 0.0 : it->second;
            if (best.first < 0) {
                if (weight != 0.0)
                    throw EmbeddingError("no coupler between chains for logical edge (" +
                                         std::to_string(i) + ", " + std::to_string(j) + ")");
                continue;
            }
            phys.couplings[best] = weight;
        }
    }
    return phys;
}

UnembedResult unembed_sample(const std::map<QubitId, int>& spins, const Embedding& e) {
    UnembedResult result;
    int broken_count = 0;
    auto decode = [&](const std::vector<QubitId>& chain) {
        if (chain.empty()) throw DomainError("cannot unembed an empty chain");
        int sum = 0;
        QubitId lowest = chain.front();
        for (QubitId q : chain) {
            auto it = spins.find(q);
            if (it == spins.end())
                throw DomainError("sample is missing a value for qubit " + std::to_string(q));
            if (it->second != 1 && it->second != -1)
                throw DomainError("spin values must be +-1, got " + std::to_string(it->second));
            sum += it->second;
            lowest = std::min(lowest, q);
        }
        int value = sum > 0 ? 1 : sum < 0 ? -1 : spins.at(lowest);
        bool is_broken = std::abs(sum) != static_cast<int>(chain.size());
        result.logical.push_back(value);
        result.broken.push_back(is_broken);
        if (is_broken) ++broken_count;
    };
    for (const auto& chain : e.visible) decode(chain);
    for (const auto& chain : e.hidden) decode(chain);
    const int total = e.visible_count() + e.hidden_count();
    result.chain_break_fraction = total > 0 ? static_cast<double>(broken_count) / total : 0.0;
    return result;
}

namespace {

// flattened instance for enumeration
struct DenseIsing {
    std::vector<QubitId> variables;
    std::vector<double> h;
    std::vector<std::tuple<int, int, double>> j;
};

GroundStates enumerate(const DenseIsing& ising, int limit) {
    const int n = static_cast<int>(ising.variables.size());
    if (limit < 1 || limit > 62) throw DomainError("enumeration limit must be in [1, 62]");
    if (n > limit)
        throw LimitError("refusing exhaustive enumeration of " + std::to_string(n) +
                         " variables (limit " + std::to_string(limit) + ")");

    GroundStates out;
    out.variables = ising.variables;
    std::vector<int> spins(n, -1);
    const std::uint64_t total = n == 0 ? 1 : (std::uint64_t{1} << n);
    for (std::uint64_t pattern = 0; pattern < total; ++pattern) {
        for (int b = 0; b < n; ++b) spins[b] = (pattern >> b) & 1 ? 1 : -1;
        double e = 0;
        for (int b = 0; b < n; ++b) e += ising.h[b] * spins[b];
        for (const auto& [a, b, w] : ising.j) e += w * spins[a] * spins[b];
        if (out.states.empty() || e < out.min_energy) {
            out.min_energy = e;
            out.states.clear();
            out.states.push_back(spins);
        } else if (e == out.min_energy) {
            out.states.push_back(spins);
        }
    }
    return out;
}

}  // namespace

GroundStates brute_force_ground(const PhysicalIsing& p, int limit) {
    DenseIsing ising;
    ising.variables = p.variables();
    ising.h.assign(ising.variables.size(), 0.0);
    std::map<QubitId, int> index;
    for (std::size_t i = 0; i < ising.variables.size(); ++i) index[ising.variables[i]] = (int)i;
    for (const auto& [q, h] : p.bias) ising.h[index.at(q)] = h;
    for (const auto& [edge, w] : p.couplings)
        ising.j.emplace_back(index.at(edge.first), index.at(edge.second), w);
    return enumerate(ising, limit);
}

GroundStates brute_force_ground(const LogicalIsing& l, int limit) {
    if (static_cast<int>(l.bias.size()) != l.node_count())
        throw DomainError("bias vector must have V + H entries");
    DenseIsing ising;
    for (int i = 0; i < l.node_count(); ++i) ising.variables.push_back(i);
    ising.h = l.bias;
    for (const auto& [edge, w] : l.couplings)
        ising.j.emplace_back(edge.first, l.visible + edge.second, w);
    return enumerate(ising, limit);
}

}  // namespace qembed
