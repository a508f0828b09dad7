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

#include "render.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace qembed {

namespace {

constexpr int kUnit = 8;     // pixels per wire index
constexpr int kMargin = 16;

const char* kBlue = "#1f77b4";
const char* kGreen = "#2ca02c";
const char* kGray = "#d9d9d9";
const char* kDark = "#444444";

struct Layout {
    LatticeParams p;

    int along(int wire) const { return kMargin + wire * kUnit; }
    int window_lo(int z) const { return kMargin + (p.shift + p.alpha * z) * kUnit; }
    int window_hi(int z) const { return kMargin + (p.shift + p.alpha * z + p.alpha - 1) * kUnit; }
    int size() const { return 2 * kMargin + (p.wires_per_side() - 1) * kUnit; }

    // drawn endpoints of a qubit's segment
    void segment(const QubitCoord& c, int& x1, int& y1, int& x2, int& y2) const {
        const int wire = p.alpha * c.w + c.k;
        if (c.u == 0) {
            x1 = x2 = along(wire);
            y1 = window_lo(c.z);
            y2 = window_hi(c.z);
        } else {
            y1 = y2 = along(wire);
            x1 = window_lo(c.z);
            x2 = window_hi(c.z);
        }
    }
};

void append_line(std::string& out, const std::string& attrs, int x1, int y1, int x2, int y2,
                 const char* stroke, int width) {
    out += "<line ";
    out += attrs;
    out += "x1=\"" + std::to_string(x1) + "\" y1=\"" + std::to_string(y1) + "\" x2=\"" +
           std::to_string(x2) + "\" y2=\"" + std::to_string(y2) + "\" stroke=\"" + stroke +
           "\" stroke-width=\"" + std::to_string(width) + "\"/>\n";
}

}  // namespace

std::string render_svg(const Embedding& e, const HardwareGraph& g) {
    if (!g.params()) throw DomainError("rendering needs a parameterized lattice");
    const Layout lay{*g.params()};
    const LatticeParams& p = lay.p;

    // owner: chain layer per qubit (0 visible, 1 hidden, -1 free)
    std::vector<int> layer(static_cast<std::size_t>(g.label_count()), -1);
    std::vector<int> chain_index(static_cast<std::size_t>(g.label_count()), -1);
    auto mark = [&](const std::vector<std::vector<QubitId>>& chains, int which, int base) {
        for (std::size_t c = 0; c < chains.size(); ++c)
            for (QubitId q : chains[c]) {
                if (q < 0 || q >= g.label_count())
                    throw DomainError("embedding qubit " + std::to_string(q) +
                                      " is outside the lattice");
                layer[q] = which;
                chain_index[q] = base + static_cast<int>(c);
            }
    };
    mark(e.visible, 0, 0);
    mark(e.hidden, 1, e.visible_count());

    std::string body;

    // qubit segments, ascending id
    for (QubitId q = 0; q < g.label_count(); ++q) {
        if (!g.has_qubit(q)) continue;
        int x1, y1, x2, y2;
        lay.segment(coord_of(q, p), x1, y1, x2, y2);
        const char* color = layer[q] == 0 ? kBlue : layer[q] == 1 ? kGreen : kGray;
        const char* cls = layer[q] == 0   ? "qubit visible"
                          : layer[q] == 1 ? "qubit hidden"
                                          : "qubit";
        append_line(body,
                    "id=\"q" + std::to_string(q) + "\" class=\"" + std::string(cls) + "\" ", x1,
                    y1, x2, y2, color, layer[q] < 0 ? 1 : 3);
    }

    // couplers: external ones bridge consecutive segments of a wire, internal
    // ones show as ticks at the crossing; only chain-internal and chain-to-
    // chain couplers are drawn for internal class
    std::string couplers, chain_couplers, edge_ticks;
    for (QubitId a = 0; a < g.label_count(); ++a) {
        if (!g.has_qubit(a)) continue;
        const QubitCoord ca = coord_of(a, p);
        for (QubitId b : g.neighbors(a)) {
            if (b <= a) continue;
            const QubitCoord cb = coord_of(b, p);
            const bool same_chain = chain_index[a] >= 0 && chain_index[a] == chain_index[b];
            if (ca.u == cb.u) {
                // external: connect the facing ends of the two segments
                int x1, y1, x2, y2, x3, y3, x4, y4;
                lay.segment(ca, x1, y1, x2, y2);
                lay.segment(cb, x3, y3, x4, y4);
                if (same_chain) {
                    const char* color = layer[a] == 0 ? kBlue : kGreen;
                    append_line(chain_couplers, "class=\"chain-coupler\" ", x2, y2, x3, y3,
                                color, 4);
                } else {
                    append_line(couplers, "class=\"coupler\" ", x2, y2, x3, y3, kGray, 1);
                }
            } else {
                // internal: tick across the crossing point
                const QubitCoord& vert = ca.u == 0 ? ca : cb;
                const QubitCoord& horz = ca.u == 0 ? cb : ca;
                const int x = lay.along(p.alpha * vert.w + vert.k);
                const int y = lay.along(p.alpha * horz.w + horz.k);
                if (same_chain) {
                    const char* color = layer[a] == 0 ? kBlue : kGreen;
                    append_line(chain_couplers, "class=\"chain-coupler\" ", x - 3, y - 3, x + 3,
                                y + 3, color, 4);
                } else if (chain_index[a] >= 0 && chain_index[b] >= 0 && layer[a] != layer[b]) {
                    append_line(edge_ticks, "class=\"edge-coupler\" ", x - 3, y - 3, x + 3,
                                y + 3, kDark, 1);
                }
            }
        }
    }

    const int size = lay.size();
    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(size) +
           "\" height=\"" + std::to_string(size) + "\" viewBox=\"0 0 " + std::to_string(size) +
           " " + std::to_string(size) + "\">\n";
    svg += "<rect width=\"" + std::to_string(size) + "\" height=\"" + std::to_string(size) +
           "\" fill=\"#ffffff\"/>\n";
    svg += couplers;
    svg += body;
    svg += chain_couplers;
    svg += edge_ticks;
    svg += "</svg>\n";
    return svg;
}

}  // namespace qembed
