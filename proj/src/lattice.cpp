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

#include "lattice.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace qembed {

LatticeParams LatticeParams::create(int tiles, int alpha, int shift) {
    if (tiles < 3) throw DomainError("tiles must be >= 3, got " + std::to_string(tiles));
    if (alpha < 2 || alpha % 2 != 0)
        throw DomainError("alpha must be an even integer >= 2, got " + std::to_string(alpha));
    if (shift < 0) shift = alpha / 2;
    if (shift >= alpha)
        throw DomainError("shift must be in [0, alpha), got " + std::to_string(shift));
    return LatticeParams{tiles, alpha, shift};
}

std::int64_t orientation_qubit_count(const LatticeParams& p) {
    return static_cast<std::int64_t>(p.alpha) * p.tiles * (p.tiles - 1);
}

std::int64_t qubit_count(const LatticeParams& p) { return 2 * orientation_qubit_count(p); }

QubitId linear_id(const QubitCoord& c, const LatticeParams& p) {
    if (c.u != 0 && c.u != 1) throw DomainError("u must be 0 or 1, got " + std::to_string(c.u));
    if (c.w < 0 || c.w >= p.tiles)
        throw DomainError("w out of range [0, " + std::to_string(p.tiles) + "), got " +
                          std::to_string(c.w));
    if (c.k < 0 || c.k >= p.alpha)
        throw DomainError("k out of range [0, " + std::to_string(p.alpha) + "), got " +
                          std::to_string(c.k));
    if (c.z < 0 || c.z >= p.tiles - 1)
        throw DomainError("z out of range [0, " + std::to_string(p.tiles - 1) + "), got " +
                          std::to_string(c.z));
    return c.z + static_cast<std::int64_t>(p.tiles - 1) *
                     (c.k + static_cast<std::int64_t>(p.alpha) * (c.w + static_cast<std::int64_t>(p.tiles) * c.u));
}

QubitCoord coord_of(QubitId id, const LatticeParams& p) {
    if (id < 0 || id >= qubit_count(p))
        throw DomainError("qubit id out of range [0, " + std::to_string(qubit_count(p)) +
                          "), got " + std::to_string(id));
    const std::int64_t span = p.tiles - 1;
    QubitCoord c;
    c.z = static_cast<int>(id % span);
    std::int64_t rest = id / span;
    c.k = static_cast<int>(rest % p.alpha);
    rest /= p.alpha;
    c.w = static_cast<int>(rest % p.tiles);
    c.u = static_cast<int>(rest / p.tiles);
    return c;
}

int wire_of(const QubitCoord& c, const LatticeParams& p) { return p.alpha * c.w + c.k; }

QubitCoord wire_qubit(int u, int wire, int z, const LatticeParams& p) {
    if (wire < 0 || wire >= p.wires_per_side())
        throw DomainError("wire out of range [0, " + std::to_string(p.wires_per_side()) +
                          "), got " + std::to_string(wire));
    return QubitCoord{u, wire / p.alpha, wire % p.alpha, z};
}

void HardwareGraph::finalize_adjacency() {
    coupler_count_ = 0;
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        coupler_count_ += static_cast<std::int64_t>(nbrs.size());
    }
    coupler_count_ /= 2;
}

HardwareGraph HardwareGraph::build(const LatticeParams& p) {
    HardwareGraph g;
    g.params_ = p;
    g.adj_.assign(static_cast<std::size_t>(qubit_count(p)), {});
    g.present_.assign(g.adj_.size(), 1);

    const int span = p.wire_span();

    // external couplers along each wire
    for (int u = 0; u < 2; ++u)
        for (int wire = 0; wire < p.wires_per_side(); ++wire)
            for (int z = 0; z + 1 < span; ++z) {
                QubitId a = linear_id(wire_qubit(u, wire, z, p), p);
                g.adj_[a].push_back(a + 1);
                g.adj_[a + 1].push_back(a);
            }

    // internal couplers from the crossing rule; enumerating each live vertical
    // wire against the window of every z covers exactly the pairs where both
    // window conditions hold
    for (int cv = p.shift; cv < p.wires_per_side(); ++cv) {
        const int zh = (cv - p.shift) / p.alpha;
        if (zh > span - 1) break;
        for (int zv = 0; zv < span; ++zv) {
            const int lo = p.shift + p.alpha * zv;
            for (int ch = lo; ch < lo + p.alpha; ++ch) {
                QubitId a = linear_id(wire_qubit(0, cv, zv, p), p);
                QubitId b = linear_id(wire_qubit(1, ch, zh, p), p);
                g.adj_[a].push_back(b);
                g.adj_[b].push_back(a);
            }
        }
    }

    g.finalize_adjacency();
    return g;
}

HardwareGraph HardwareGraph::from_edges(const std::vector<std::pair<QubitId, QubitId>>& edges) {
    QubitId max_id = -1;
    for (const auto& [a, b] : edges) {
        if (a < 0 || b < 0) throw DomainError("edge endpoints must be non-negative");
        if (a == b) throw DomainError("self-loop on qubit " + std::to_string(a));
        max_id = std::max({max_id, a, b});
    }
    HardwareGraph g;
    g.adj_.assign(static_cast<std::size_t>(max_id + 1), {});
    g.present_.assign(g.adj_.size(), 0);
    for (const auto& [a, b] : edges) {
        g.present_[a] = 1;
        g.present_[b] = 1;
        g.adj_[a].push_back(b);
        g.adj_[b].push_back(a);
    }
    g.finalize_adjacency();
    return g;
}

std::int64_t HardwareGraph::enabled_count() const {
    std::int64_t n = 0;
    for (char c : present_) n += c;
    return n;
}

bool HardwareGraph::has_qubit(QubitId id) const {
    return id >= 0 && id < label_count() && present_[id];
}

bool HardwareGraph::are_coupled(QubitId a, QubitId b) const {
    if (!has_qubit(a) || !has_qubit(b)) return false;
    const auto& nbrs = adj_[a];
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::span<const QubitId> HardwareGraph::neighbors(QubitId id) const {
    if (id < 0 || id >= label_count())
        throw DomainError("qubit id out of range, got " + std::to_string(id));
    return adj_[id];
}

HardwareGraph HardwareGraph::with_disabled(const std::vector<QubitId>& ids) const {
    HardwareGraph g = *this;
    for (QubitId id : ids) {
        if (id < 0 || id >= g.label_count())
            throw DomainError("qubit id out of range, got " + std::to_string(id));
        g.present_[id] = 0;
    }
    for (std::size_t q = 0; q < g.adj_.size(); ++q) {
        if (!g.present_[q]) {
            g.adj_[q].clear();
            continue;
        }
        auto& nbrs = g.adj_[q];
        nbrs.erase(std::remove_if(nbrs.begin(), nbrs.end(),
                                  [&](QubitId n) { return !g.present_[n]; }),
                   nbrs.end());
    }
    g.finalize_adjacency();
    return g;
}

std::string HardwareGraph::export_edges() const {
    std::string out;
    for (QubitId a = 0; a < label_count(); ++a) {
        for (QubitId b : adj_[a]) {
            if (b <= a) continue;
            out += std::to_string(a);
            out += ' ';
            out += std::to_string(b);
            out += '\n';
        }
    }
    return out;
}

namespace {

bool parse_qubit_id(std::string_view tok, QubitId& out) {
    if (tok.empty()) return false;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && ptr == tok.data() + tok.size() && out >= 0;
}

}  // namespace

HardwareGraph HardwareGraph::import_edges(std::string_view text) {
    std::vector<std::pair<QubitId, QubitId>> edges;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;

        std::size_t sep = line.find(' ');
        QubitId a = 0, b = 0;
        if (sep == std::string_view::npos || !parse_qubit_id(line.substr(0, sep), a) ||
            !parse_qubit_id(line.substr(sep + 1), b) || a == b) {
            throw ParseError("malformed edge at line " + std::to_string(line_no) + ": \"" +
                                 std::string(line) + "\"",
                             line_no);
        }
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    return from_edges(edges);
}

}  // namespace qembed
