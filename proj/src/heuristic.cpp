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

#include "heuristic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <random>

#include "validator.hpp"

namespace qembed {

BipartiteGraph BipartiteGraph::complete(int visible, int hidden) {
    if (visible < 1 || hidden < 1) throw DomainError("layer sizes must be >= 1");
    BipartiteGraph g{visible, hidden, {}};
    g.edges.reserve(static_cast<std::size_t>(visible) * hidden);
    for (int i = 0; i < visible; ++i)
        for (int j = 0; j < hidden; ++j) g.edges.emplace_back(i, j);
    return g;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr QubitId kUnreached = -1;
constexpr QubitId kAtChain = -2;  // path attaches directly to the source chain

struct Router {
    const HardwareGraph& g;
    const BipartiteGraph& logical;
    const HeuristicConfig& cfg;
    std::mt19937_64 rng;
    std::chrono::steady_clock::time_point deadline;

    std::int64_t n;                          // id space size
    std::vector<std::vector<int>> lnbrs;     // logical adjacency
    std::vector<std::vector<QubitId>> chains;
    std::vector<int> usage;                  // chains using each qubit
    std::vector<QubitId> enabled;

    // scratch, one slot per neighbor chain
    std::vector<std::vector<double>> dist;
    std::vector<std::vector<QubitId>> parent;

    Router(const HardwareGraph& g_, const BipartiteGraph& l_, const HeuristicConfig& c_)
        : g(g_), logical(l_), cfg(c_), rng(c_.seed) {
        n = g.label_count();
        deadline = std::chrono::steady_clock::now() + cfg.timeout;
        lnbrs.resize(logical.node_count());
        for (auto [i, j] : logical.edges) {
            if (i < 0 || i >= logical.visible || j < 0 || j >= logical.hidden)
                throw DomainError("logical edge (" + std::to_string(i) + ", " +
                                  std::to_string(j) + ") out of range");
            lnbrs[i].push_back(logical.visible + j);
            lnbrs[logical.visible + j].push_back(i);
        }
        for (auto& v : lnbrs) {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
        }
        chains.resize(logical.node_count());
        usage.assign(static_cast<std::size_t>(n), 0);
        for (QubitId q = 0; q < n; ++q)
            if (g.has_qubit(q)) enabled.push_back(q);
    }

    bool out_of_time() const { return std::chrono::steady_clock::now() > deadline; }

    double weight(QubitId q) const {
        const int uses = std::min(usage[q], 48);
        return std::pow(cfg.overuse_base, uses);
    }

    void shuffle(std::vector<int>& order) {
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[rng() % i]);
    }

    QubitId random_spot() {
        if (enabled.empty()) return -1;
        // prefer untouched qubits with at least one coupler so independent
        // nodes spread out over routable territory
        std::vector<QubitId> fresh;
        for (QubitId q : enabled)
            if (usage[q] == 0 && !g.neighbors(q).empty()) fresh.push_back(q);
        const auto& pool = fresh.empty() ? enabled : fresh;
        return pool[rng() % pool.size()];
    }

    // Vertex-weighted multi-source shortest paths from the border of `chain`.
    // dist[q] includes the weight of q itself; chain members are excluded
    // from the search space.
    void paths_from_chain(const std::vector<QubitId>& chain, std::vector<double>& d,
                          std::vector<QubitId>& par) {
        d.assign(static_cast<std::size_t>(n), kInf);
        par.assign(static_cast<std::size_t>(n), kUnreached);
        std::vector<char> in_chain(static_cast<std::size_t>(n), 0);
        for (QubitId q : chain) in_chain[q] = 1;

        using Entry = std::pair<double, QubitId>;
        std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> pq;
        for (QubitId q : chain)
            for (QubitId nb : g.neighbors(q))
                if (!in_chain[nb] && g.has_qubit(nb)) {
                    const double w = weight(nb);
                    if (w < d[nb]) {
                        d[nb] = w;
                        par[nb] = kAtChain;
                        pq.emplace(w, nb);
                    }
                }
        while (!pq.empty()) {
            auto [du, u] = pq.top();
            pq.pop();
            if (du > d[u]) continue;
            for (QubitId v : g.neighbors(u)) {
                if (in_chain[v] || !g.has_qubit(v)) continue;
                const double dv = du + weight(v);
                if (dv < d[v]) {
                    d[v] = dv;
                    par[v] = u;
                    pq.emplace(dv, v);
                }
            }
        }
    }

    // Re-routes one logical node against the current layout.  Returns false
    // when no root reaches every embedded neighbor (the node is then parked
    // on a random spot and a later pass retries).
    bool route(int node) {
        for (QubitId q : chains[node]) --usage[q];
        chains[node].clear();

        std::vector<int> embedded;
        for (int nb : lnbrs[node])
            if (!chains[nb].empty()) embedded.push_back(nb);

        if (embedded.empty()) {
            QubitId spot = random_spot();
            if (spot < 0) return false;
            chains[node] = {spot};
            ++usage[spot];
            return true;
        }

        dist.resize(embedded.size());
        parent.resize(embedded.size());
        for (std::size_t s = 0; s < embedded.size(); ++s)
            paths_from_chain(chains[embedded[s]], dist[s], parent[s]);

        QubitId root = -1;
        double best = kInf;
        for (QubitId q : enabled) {
            double total = 0;
            for (std::size_t s = 0; s < embedded.size() && total < kInf; ++s)
                total = dist[s][q] == kInf ? kInf : total + dist[s][q];
            if (total < best) {  // strict: ties resolve to the lowest id
                best = total;
                root = q;
            }
        }
        if (root < 0) {
            QubitId spot = random_spot();
            if (spot < 0) return false;
            chains[node] = {spot};
            ++usage[spot];
            return false;
        }

        std::vector<char> taken(static_cast<std::size_t>(n), 0);
        auto claim = [&](QubitId q) {
            if (!taken[q]) {
                taken[q] = 1;
                chains[node].push_back(q);
                ++usage[q];
            }
        };
        claim(root);
        for (std::size_t s = 0; s < embedded.size(); ++s)
            for (QubitId cur = root; cur != kAtChain; cur = parent[s][cur]) claim(cur);
        std::sort(chains[node].begin(), chains[node].end());
        return true;
    }

    int overlap() const {
        int count = 0;
        for (QubitId q : enabled) count += std::max(0, usage[q] - 1);
        return count;
    }

    Embedding snapshot() const {
        Embedding e;
        e.provenance = Provenance::heuristic;
        if (g.params())
            e.params = EmbeddingParams{g.params()->tiles, g.params()->alpha, 0, 0, 0};
        e.visible.assign(chains.begin(), chains.begin() + logical.visible);
        e.hidden.assign(chains.begin() + logical.visible, chains.end());
        return e;
    }

    // Coverage over the actual logical edge set (the full validator assumes a
    // complete bipartite problem).
    bool edges_covered() const {
        std::vector<int> owner(static_cast<std::size_t>(n), -1);
        for (int c = 0; c < logical.node_count(); ++c)
            for (QubitId q : chains[c]) owner[q] = c;
        for (auto [i, j] : logical.edges) {
            bool found = false;
            for (QubitId q : chains[i]) {
                for (QubitId nb : g.neighbors(q))
                    if (owner[nb] == logical.visible + j) {
                        found = true;
                        break;
                    }
                if (found) break;
            }
            if (!found) return false;
        }
        return true;
    }
};

}  // namespace

HeuristicResult heuristic_embed(const BipartiteGraph& logical, const HardwareGraph& g,
                                const HeuristicConfig& cfg) {
    if (logical.visible < 0 || logical.hidden < 0 || logical.node_count() < 1)
        throw DomainError("logical graph must have at least one node");
    if (cfg.max_tries < 1) throw DomainError("max_tries must be >= 1");
    if (cfg.overuse_base <= 1.0) throw DomainError("overuse_base must be > 1");

    Router router(g, logical, cfg);
    HeuristicResult result;

    std::vector<int> order(logical.node_count());
    for (int i = 0; i < logical.node_count(); ++i) order[i] = i;

    for (int pass = 0; pass < cfg.max_tries; ++pass) {
        router.shuffle(order);
        bool fully_routed = true;
        for (int node : order) {
            if (router.out_of_time()) {
                result.timed_out = true;
                return result;
            }
            fully_routed = router.route(node) && fully_routed;
        }
        ++result.passes;
        const int overlap = router.overlap();
        if (result.best_overlap < 0 || overlap < result.best_overlap)
            result.best_overlap = overlap;

        if (overlap == 0 && fully_routed && router.edges_covered()) {
            Embedding e = router.snapshot();
            const auto report = validate(e, g, logical.visible, logical.hidden);
            const bool complete =
                logical.edges.size() ==
                static_cast<std::size_t>(logical.visible) * logical.hidden;
            const bool structurally_sound = report.check("existence").pass &&
                                            report.check("disjointness").pass &&
                                            report.check("connectivity").pass;
            if (complete ? report.is_valid : structurally_sound) {
                result.embedding = std::move(e);
                return result;
            }
        }
    }
    return result;
}

}  // namespace qembed
