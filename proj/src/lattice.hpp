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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace qembed {

/*
Lattice model, in brief.  Qubits are line segments ("wires" cut into
segments) in two orientations: u=0 vertical, u=1 horizontal.  A qubit is
addressed by (u, w, k, z):

  w  tile index perpendicular to the qubit's direction, in [0, M)
  k  offset within the tile's bundle of alpha wires, in [0, alpha)
  z  tile index along the qubit's direction, in [0, M-1)

so a full wire is the set of M-1 qubits sharing (u, w, k).  The flat wire
coordinate c = alpha*w + k, in [0, alpha*M), fixes a column (u=0) or row
(u=1) of the grid.  Couplers come in two classes:

  external  (u,w,k,z) ~ (u,w,k,z+1), extending a wire
  internal  a vertical qubit at (c_v, z_v) crosses the alpha horizontal
            wires c_h in [S + alpha*z_v, S + alpha*(z_v+1)), and is coupled
            to the one segment of each whose own window covers c_v, i.e.
            whose z_h = floor((c_v - S) / alpha)

S ("shift") slides the crossing windows along the wires; it defaults to
alpha/2.  Wires whose window falls off the grid simply lack internal
couplers, so every qubit has internal degree alpha or 0, plus up to 2
external couplers.
*/

using QubitId = std::int64_t;

struct LatticeParams {
    int tiles;  // M, tiles per side
    int alpha;  // wires per tile bundle
    int shift;  // S, crossing window offset

    // Validates ranges: tiles >= 3, alpha even and >= 2, 0 <= shift < alpha.
    // shift < 0 selects the default alpha/2.
    static LatticeParams create(int tiles, int alpha = 12, int shift = -1);

    int wires_per_side() const { return alpha * tiles; }
    int wire_span() const { return tiles - 1; }  // qubits per wire

    bool operator==(const LatticeParams&) const = default;
};

struct QubitCoord {
    int u;  // 0 vertical, 1 horizontal
    int w;
    int k;
    int z;

    bool operator==(const QubitCoord&) const = default;
};

// Total label count 2*alpha*M*(M-1); exactly half per orientation.
std::int64_t qubit_count(const LatticeParams& p);
std::int64_t orientation_qubit_count(const LatticeParams& p);

// (u, w, k, z) -> z + (M-1)*(k + alpha*(w + M*u)).  Throws DomainError naming
// the offending field when the coordinate is out of range.
QubitId linear_id(const QubitCoord& c, const LatticeParams& p);

// Inverse of linear_id; throws DomainError when id is outside the label range.
QubitCoord coord_of(QubitId id, const LatticeParams& p);

// Flat wire coordinate c = alpha*w + k.
int wire_of(const QubitCoord& c, const LatticeParams& p);

// Qubit at offset z on the wire with flat coordinate c.
QubitCoord wire_qubit(int u, int wire, int z, const LatticeParams& p);

// Immutable hardware graph: either a generated lattice (params present) or a
// bare adjacency imported from an edge list.
class HardwareGraph {
  public:
    static HardwareGraph build(const LatticeParams& p);
    static HardwareGraph from_edges(const std::vector<std::pair<QubitId, QubitId>>& edges);

    const std::optional<LatticeParams>& params() const { return params_; }

    // Size of the id space (valid labels are [0, label_count())).
    std::int64_t label_count() const { return static_cast<std::int64_t>(adj_.size()); }
    std::int64_t enabled_count() const;
    std::int64_t coupler_count() const { return coupler_count_; }

    bool has_qubit(QubitId id) const;
    bool are_coupled(QubitId a, QubitId b) const;
    std::span<const QubitId> neighbors(QubitId id) const;

    // Copy with the listed qubits and their incident couplers removed.
    // Unknown or already-disabled ids are ignored.
    HardwareGraph with_disabled(const std::vector<QubitId>& ids) const;

    // One coupler per line, "a b" with a < b, sorted by (a, b), LF endings.
    std::string export_edges() const;

    // Inverse of export_edges: "a b" per line, blank lines skipped, CRLF
    // tolerated.  Throws ParseError with the failing line number.
    static HardwareGraph import_edges(std::string_view text);

  private:
    std::optional<LatticeParams> params_;
    std::vector<std::vector<QubitId>> adj_;
    std::vector<char> present_;
    std::int64_t coupler_count_ = 0;

    void finalize_adjacency();
};

}  // namespace qembed
