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
#include "render.hpp"

using namespace qembed;

namespace {

std::size_t count_of(const std::string& haystack, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
         pos = haystack.find(needle, pos + needle.size()))
        ++count;
    return count;
}

}  // namespace

TEST_CASE("bare lattice renders qubits and wire couplers only") {
    const LatticeParams p = LatticeParams::create(3, 2);
    const HardwareGraph g = HardwareGraph::build(p);
    const std::string svg = render_svg(Embedding{}, g);

    CHECK(svg.rfind("<svg ", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(count_of(svg, "class=\"qubit\"") == static_cast<std::size_t>(qubit_count(p)));
    CHECK(count_of(svg, "visible") == 0);
    CHECK(count_of(svg, "hidden") == 0);
    // external couplers: 2*alpha*M*(M-2) = 12
    CHECK(count_of(svg, "class=\"coupler\"") == 12);
}

TEST_CASE("worked example colors qubit 180 as visible") {
    const LatticeParams p = LatticeParams::create(16, 12);
    const HardwareGraph g = HardwareGraph::build(p);
    const Embedding e = embed_bipartite(8, 16, EmbedderConfig::create(p), g);
    const std::string svg = render_svg(e, g);

    CHECK(svg.find("id=\"q180\" class=\"qubit visible\"") != std::string::npos);
    CHECK(svg.find("id=\"q2970\" class=\"qubit hidden\"") != std::string::npos);
    // 24 chains of length 2: one bold coupler each
    CHECK(count_of(svg, "class=\"chain-coupler\"") == 24);
    // every logical edge shows one used crossing
    CHECK(count_of(svg, "class=\"edge-coupler\"") == 8 * 16);
}

TEST_CASE("rendering is byte-deterministic") {
    const LatticeParams p = LatticeParams::create(4, 4);
    const HardwareGraph g = HardwareGraph::build(p);
    const Embedding e = embed_bipartite(2, 2, EmbedderConfig::create(p, 2, 2), g);
    CHECK(render_svg(e, g) == render_svg(e, g));
}

TEST_CASE("rendering an imported graph is refused") {
    const HardwareGraph g = HardwareGraph::import_edges("0 1\n");
    CHECK_THROWS_AS(render_svg(Embedding{}, g), DomainError);
}
