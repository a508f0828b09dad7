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

#include <cmath>
#include <random>
#include <set>

#include "embedder.hpp"
#include "ising.hpp"
#include "validator.hpp"

using namespace qembed;

namespace {

const LatticeParams kP16 = LatticeParams::create(16, 12);

// hand-built K(1,1) embedding with length-2 chains on the worked-example wires
Embedding two_chain_k11() {
    Embedding e;
    e.visible = {{180, 181}};
    e.hidden = {{2970, 2971}};
    e.params = EmbeddingParams{16, 12, 4, 8, 12};
    return e;
}

LogicalIsing k11(double h0, double h1, double j) {
    LogicalIsing l;
    l.visible = 1;
    l.hidden = 1;
    l.bias = {h0, h1};
    l.couplings[{0, 0}] = j;
    return l;
}

std::map<QubitId, int> spins_of(const GroundStates& gs, const std::vector<int>& state) {
    std::map<QubitId, int> spins;
    for (std::size_t i = 0; i < gs.variables.size(); ++i) spins[gs.variables[i]] = state[i];
    return spins;
}

}  // namespace

TEST_CASE("parameter mapping on the zero K(1,1) instance") {
    const HardwareGraph g = HardwareGraph::build(kP16);
    const auto p = embed_parameters(k11(0, 0, 0), two_chain_k11(), g, 1.0);

    REQUIRE(p.bias.size() == 4);
    for (const auto& [q, h] : p.bias) CHECK(h == 0.0);
    REQUIRE(p.couplings.size() == 3);
    CHECK(p.couplings.at({180, 181}) == -1.0);
    CHECK(p.couplings.at({2970, 2971}) == -1.0);
    CHECK(p.couplings.at({180, 2970}) == 0.0);
}

TEST_CASE("bias splits equally over the chain") {
    const HardwareGraph g = HardwareGraph::build(kP16);
    const auto p = embed_parameters(k11(1.0, 0, 0), two_chain_k11(), g, 1.0);
    CHECK(p.bias.at(180) == 0.5);
    CHECK(p.bias.at(181) == 0.5);
    CHECK(p.bias.at(2970) == 0.0);
}

TEST_CASE("logical couplings land on the designated coupler") {
    const HardwareGraph g = HardwareGraph::build(kP16);
    LogicalIsing l;
    l.visible = 8;
    l.hidden = 16;
    l.bias.assign(24, 0.0);
    l.couplings[{0, 0}] = 0.7;
    const Embedding e = embed_bipartite(8, 16, EmbedderConfig::create(kP16), g);
    const auto p = embed_parameters(l, e, g, 1.0);

    CHECK(p.couplings.at({180, 2970}) == 0.7);
    // every logical pair has exactly one coupler here: 128 inter-chain
    // entries plus 24 chains of length 2
    CHECK(p.couplings.size() == 128 + 24);
    int nonzero = 0;
    for (const auto& [edge, w] : p.couplings)
        if (w > 0) ++nonzero;
    CHECK(nonzero == 1);
}

TEST_CASE("parameter conservation") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    const HardwareGraph g = HardwareGraph::build(kP16);
    const Embedding e = embed_bipartite(5, 9, EmbedderConfig::create(kP16), g);
    for (int trial = 0; trial < 10; ++trial) {
        LogicalIsing l;
        l.visible = 5;
        l.hidden = 9;
        for (int i = 0; i < 14; ++i) l.bias.push_back(dist(rng));
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 9; ++j) l.couplings[{i, j}] = dist(rng);
        const auto p = embed_parameters(l, e, g, 3.0);

        double h_logical = 0, h_physical = 0;
        for (double h : l.bias) h_logical += h;
        for (const auto& [q, h] : p.bias) h_physical += h;
        CHECK(h_physical == doctest::Approx(h_logical).epsilon(1e-12));

        double j_logical = 0, j_inter = 0;
        for (const auto& [edge, w] : l.couplings) j_logical += w;
        for (const auto& [edge, w] : p.couplings)
            if (w != -3.0) j_inter += w;
        CHECK(j_inter == doctest::Approx(j_logical).epsilon(1e-12));

        // only hardware couplers are referenced
        for (const auto& [edge, w] : p.couplings) CHECK(g.are_coupled(edge.first, edge.second));
    }
}

TEST_CASE("a nonzero coupling with no physical coupler is an error") {
    const HardwareGraph g = HardwareGraph::build(kP16);
    Embedding e = two_chain_k11();
    e.hidden = {{2880, 2881}};  // dead wire, crosses nothing
    CHECK_THROWS_WITH_AS(embed_parameters(k11(0, 0, 1.0), e, g, 1.0),
                         doctest::Contains("(0, 0)"), EmbeddingError);
    // a zero coupling is fine, the pair is simply skipped
    const auto p = embed_parameters(k11(0, 0, 0.0), e, g, 1.0);
    CHECK(p.couplings.size() == 2);  // just the two chain couplers
}

TEST_CASE("chain strength must be positive") {
    const HardwareGraph g = HardwareGraph::build(kP16);
    CHECK_THROWS_AS(embed_parameters(k11(0, 0, 0), two_chain_k11(), g, 0.0), DomainError);
}

TEST_CASE("unembedding") {
    const Embedding e = two_chain_k11();

    SUBCASE("unanimous chain") {
        const auto r = unembed_sample({{180, 1}, {181, 1}, {2970, -1}, {2971, -1}}, e);
        CHECK(r.logical == std::vector<int>{1, -1});
        CHECK(r.broken == std::vector<bool>{false, false});
        CHECK(r.chain_break_fraction == 0.0);
    }
    SUBCASE("majority wins on a chain of three") {
        Embedding e3;
        e3.visible = {{180, 181, 182}};
        e3.hidden = {{2970}};
        const auto r = unembed_sample({{180, 1}, {181, 1}, {182, -1}, {2970, 1}}, e3);
        CHECK(r.logical[0] == 1);
        CHECK(r.broken[0]);
        CHECK(r.chain_break_fraction == doctest::Approx(0.5));
    }
    SUBCASE("an exact tie takes the lowest id") {
        auto r = unembed_sample({{180, 1}, {181, -1}, {2970, 1}, {2971, 1}}, e);
        CHECK(r.logical[0] == 1);
        CHECK(r.broken[0]);
        r = unembed_sample({{180, -1}, {181, 1}, {2970, 1}, {2971, 1}}, e);
        CHECK(r.logical[0] == -1);
    }
    SUBCASE("missing qubit values are an error") {
        CHECK_THROWS_AS(unembed_sample({{180, 1}, {181, 1}, {2970, 1}}, e), DomainError);
        CHECK_THROWS_AS(unembed_sample({{180, 2}, {181, 1}, {2970, 1}, {2971, 1}}, e),
                        DomainError);
    }
}

TEST_CASE("energy evaluation") {
    PhysicalIsing p;
    CHECK(p.energy({}) == 0.0);

    p.bias[0] = 1.0;
    CHECK(p.energy({{0, 1}}) == 1.0);
    CHECK(p.energy({{0, -1}}) == -1.0);

    SUBCASE("flipping all spins is invisible when h is zero") {
        PhysicalIsing q;
        std::mt19937_64 rng(5);
        for (QubitId a = 0; a < 6; ++a)
            for (QubitId b = a + 1; b < 6; ++b)
                q.couplings[{a, b}] = static_cast<double>(rng() % 7) - 3.0;
        for (int trial = 0; trial < 10; ++trial) {
            std::map<QubitId, int> s, flipped;
            for (QubitId v = 0; v < 6; ++v) {
                s[v] = rng() % 2 ? 1 : -1;
                flipped[v] = -s[v];
            }
            CHECK(q.energy(s) == q.energy(flipped));
        }
    }
}

TEST_CASE("brute force basics") {
    SUBCASE("single spin") {
        PhysicalIsing p;
        p.bias[0] = 1.0;
        const auto gs = brute_force_ground(p);
        CHECK(gs.min_energy == -1.0);
        REQUIRE(gs.states.size() == 1);
        CHECK(gs.states[0] == std::vector<int>{-1});
    }
    SUBCASE("two ferromagnetic spins") {
        PhysicalIsing p;
        p.couplings[{0, 1}] = -1.0;
        const auto gs = brute_force_ground(p);
        CHECK(gs.min_energy == -1.0);
        REQUIRE(gs.states.size() == 2);
        // ascending bit-pattern order
        CHECK(gs.states[0] == std::vector<int>{-1, -1});
        CHECK(gs.states[1] == std::vector<int>{1, 1});
    }
    SUBCASE("the limit is enforced") {
        LogicalIsing l;
        l.visible = 13;
        l.hidden = 12;
        l.bias.assign(25, 0.0);
        CHECK_THROWS_AS(brute_force_ground(l), LimitError);
        CHECK_THROWS_AS(brute_force_ground(l, 24), LimitError);
        CHECK_THROWS_AS(brute_force_ground(l, 63), DomainError);  // caller limit cap
    }
}

TEST_CASE("embedded K(1,1) reproduces the logical ground states") {
    const HardwareGraph g = HardwareGraph::build(kP16);
    const LogicalIsing l = k11(0, 0, 1.0);
    const Embedding e = two_chain_k11();
    const auto p = embed_parameters(l, e, g, 2.0);

    const auto physical = brute_force_ground(p);
    const auto logical = brute_force_ground(l);

    std::set<std::vector<int>> unembedded;
    for (const auto& state : physical.states) {
        const auto r = unembed_sample(spins_of(physical, state), e);
        for (bool broken : r.broken) CHECK_FALSE(broken);
        unembedded.insert(r.logical);
    }
    const std::set<std::vector<int>> expected{{1, -1}, {-1, 1}};
    CHECK(unembedded == expected);
    CHECK(std::set<std::vector<int>>(logical.states.begin(), logical.states.end()) == expected);
}

TEST_CASE("oracle agreement over random small instances") {
    // non-trivial chains: n = 2 and a late visible start stretch both layers
    const auto lat = LatticeParams::create(4, 12);
    const auto cfg = EmbedderConfig::create(lat, 2, 2, 24);
    const HardwareGraph g = HardwareGraph::build(lat);

    std::mt19937_64 rng(2026);
    const std::pair<int, int> shapes[] = {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {1, 4}, {2, 3}, {4, 1}};
    int draws = 0;
    for (const auto& [v, h] : shapes) {
        for (int rep = 0; rep < 3; ++rep, ++draws) {
            LogicalIsing l;
            l.visible = v;
            l.hidden = h;
            for (int i = 0; i < v + h; ++i) l.bias.push_back(rng() % 2 ? 1.0 : -1.0);
            for (int i = 0; i < v; ++i)
                for (int j = 0; j < h; ++j) l.couplings[{i, j}] = rng() % 2 ? 1.0 : -1.0;

            const Embedding e = embed_bipartite(v, h, cfg, g);
            REQUIRE(validate(e, g, v, h).is_valid);
            const double strength = 2.0 * l.total_abs_weight();
            const auto p = embed_parameters(l, e, g, strength);

            const auto logical = brute_force_ground(l);
            const auto physical = brute_force_ground(p);

            std::set<std::vector<int>> unembedded;
            for (const auto& state : physical.states) {
                const auto r = unembed_sample(spins_of(physical, state), e);
                for (bool broken : r.broken) REQUIRE_FALSE(broken);
                unembedded.insert(r.logical);
            }
            REQUIRE(unembedded ==
                    std::set<std::vector<int>>(logical.states.begin(), logical.states.end()));
        }
    }
    CHECK(draws == 21);
}
