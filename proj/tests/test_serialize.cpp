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

#include "embedder.hpp"
#include "serialize.hpp"
#include "validator.hpp"

using namespace qembed;

TEST_CASE("embedding JSON has the documented shape and key order") {
    Embedding e;
    e.visible = {{180, 181}};
    e.hidden = {{2970, 2971}, {2985, 2986}};
    e.params = EmbeddingParams{16, 12, 4, 8, 12};

    const std::string json = embedding_to_json(e);
    const char* expected = R"({
  "visible": [
    [
      180,
      181
    ]
  ],
  "hidden": [
    [
      2970,
      2971
    ],
    [
      2985,
      2986
    ]
  ],
  "params": {
    "M": 16,
    "alpha": 12,
    "m": 4,
    "n": 8,
    "C0": 12
  },
  "provenance": "structured"
}
)";
    CHECK(json == expected);

    const Embedding back = embedding_from_json(json);
    CHECK(back == e);
}

TEST_CASE("embedding JSON errors") {
    CHECK_THROWS_AS(embedding_from_json("not json"), ParseError);
    CHECK_THROWS_AS(embedding_from_json("{\"visible\": []}"), ParseError);
    CHECK_THROWS_AS(embedding_from_json(
                        R"({"visible": [], "hidden": [], "params": {"M":3,"alpha":2,"m":1,"n":1,"C0":2}, "provenance": "magic"})"),
                    ParseError);
}

TEST_CASE("report JSON key order is stable") {
    const LatticeParams p = LatticeParams::create(16, 12);
    const HardwareGraph g = HardwareGraph::build(p);
    Embedding e = embed_bipartite(2, 2, EmbedderConfig::create(p), g);
    e.hidden[1] = e.hidden[0];
    const auto report = validate(e, g, 2, 2);
    const std::string json = report_to_json(report);

    const auto v = json.find("\"is_valid\": false");
    const auto a = json.find("\"existence\"");
    const auto b = json.find("\"disjointness\"");
    const auto c = json.find("\"connectivity\"");
    const auto d = json.find("\"coverage\"");
    REQUIRE(v != std::string::npos);
    REQUIRE(a != std::string::npos);
    CHECK(v < a);
    CHECK(a < b);
    CHECK(b < c);
    CHECK(c < d);
}

TEST_CASE("logical Ising round trip and validation") {
    LogicalIsing l;
    l.visible = 2;
    l.hidden = 3;
    l.bias = {0.5, -1, 0, 0, 1};
    l.couplings[{0, 0}] = 1.0;
    l.couplings[{1, 2}] = -0.5;

    const std::string json = logical_ising_to_json(l);
    const LogicalIsing back = logical_ising_from_json(json);
    CHECK(back.visible == 2);
    CHECK(back.hidden == 3);
    CHECK(back.bias == l.bias);
    CHECK(back.couplings == l.couplings);

    CHECK_THROWS_AS(logical_ising_from_json("{\"V\": 1}"), ParseError);
    CHECK_THROWS_AS(logical_ising_from_json(R"({"V": 1, "H": 1, "h": [0]})"), ParseError);
    CHECK_THROWS_AS(logical_ising_from_json(R"({"V": 1, "H": 1, "J": [[0, 5, 1.0]]})"),
                    ParseError);
    // missing h defaults to zeros
    const LogicalIsing defaulted = logical_ising_from_json(R"({"V": 2, "H": 1})");
    CHECK(defaulted.bias == std::vector<double>{0, 0, 0});
}

TEST_CASE("physical Ising JSON is sorted with a < b") {
    PhysicalIsing p;
    p.bias[2970] = 0.5;
    p.bias[180] = -0.25;
    p.couplings[{2970, 2971}] = -2.0;
    p.couplings[{180, 2970}] = 1.0;

    const std::string json = physical_ising_to_json(p);
    const char* expected = R"({
  "h": {
    "180": -0.25,
    "2970": 0.5
  },
  "J": [
    [
      180,
      2970,
      1.0
    ],
    [
      2970,
      2971,
      -2.0
    ]
  ]
}
)";
    CHECK(json == expected);

    const PhysicalIsing back = physical_ising_from_json(json);
    CHECK(back.bias == p.bias);
    CHECK(back.couplings == p.couplings);

    CHECK_THROWS_AS(physical_ising_from_json(R"({"h": {"abc": 1}})"), ParseError);
    CHECK_THROWS_AS(physical_ising_from_json(R"({"h": {}, "J": [[1, 1, 0.5]]})"), ParseError);
}

TEST_CASE("metrics JSON carries the bounds") {
    const LatticeParams p = LatticeParams::create(16, 12);
    const HardwareGraph g = HardwareGraph::build(p);
    const Embedding e = embed_bipartite(120, 120, EmbedderConfig::create(p), g);
    const std::string json = metrics_to_json(chain_metrics(e));
    CHECK(json.find("\"count_ge_threshold\": 240") != std::string::npos);
    CHECK(json.find("\"lower_bound_visible\": 10") != std::string::npos);
    CHECK(json.find("\"max_length\": 15") != std::string::npos);
}
