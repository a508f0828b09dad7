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

#include "serialize.hpp"

#include <json.hpp>

namespace qembed {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string finish(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json parse(std::string_view text, const char* what) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError(std::string("invalid JSON in ") + what);
    return j;
}

}  // namespace

std::string embedding_to_json(const Embedding& e) {
    ordered_json j;
    j["visible"] = e.visible;
    j["hidden"] = e.hidden;
    j["params"] = {{"M", e.params.tiles},
                   {"alpha", e.params.alpha},
                   {"m", e.params.visible_group},
                   {"n", e.params.hidden_group},
                   {"C0", e.params.visible_start}};
    j["provenance"] = e.provenance == Provenance::structured ? "structured" : "heuristic";
    return finish(j);
}

Embedding embedding_from_json(std::string_view text) {
    ordered_json j = parse(text, "embedding");
    Embedding e;
    try {
        e.visible = j.at("visible").get<std::vector<std::vector<QubitId>>>();
        e.hidden = j.at("hidden").get<std::vector<std::vector<QubitId>>>();
        const auto& p = j.at("params");
        e.params.tiles = p.at("M").get<int>();
        e.params.alpha = p.at("alpha").get<int>();
        e.params.visible_group = p.at("m").get<int>();
        e.params.hidden_group = p.at("n").get<int>();
        e.params.visible_start = p.at("C0").get<int>();
        const std::string prov = j.value("provenance", "structured");
        if (prov != "structured" && prov != "heuristic")
            throw ParseError("unknown provenance \"" + prov + "\"");
        e.provenance = prov == "structured" ? Provenance::structured : Provenance::heuristic;
    } catch (const ordered_json::exception& ex) {
        throw ParseError(std::string("embedding JSON: ") + ex.what());
    }
    return e;
}

std::string report_to_json(const ValidationReport& report) {
    ordered_json checks;
    for (const auto& c : report.checks) {
        ordered_json entry;
        entry["pass"] = c.pass;
        if (c.name == "coverage") {
            ordered_json pairs = ordered_json::array();
            for (const auto& [i, j] : c.offending_edges) pairs.push_back({i, j});
            entry["offenders"] = pairs;
        } else {
            entry["offenders"] = c.offending_ids;
        }
        checks[c.name] = entry;
    }
    ordered_json j;
    j["is_valid"] = report.is_valid;
    j["checks"] = checks;
    return finish(j);
}

std::string metrics_to_json(const ChainMetrics& m) {
    ordered_json j;
    j["visible_lengths"] = m.visible_lengths;
    j["hidden_lengths"] = m.hidden_lengths;
    j["max_length"] = m.max_length;
    j["mean_length"] = m.mean_length;
    j["threshold"] = m.threshold;
    j["count_ge_threshold"] = m.count_ge_threshold;
    j["lower_bound_visible"] = m.lower_bound_visible;
    j["lower_bound_hidden"] = m.lower_bound_hidden;
    return finish(j);
}

std::string logical_ising_to_json(const LogicalIsing& l) {
    ordered_json j;
    j["V"] = l.visible;
    j["H"] = l.hidden;
    j["h"] = l.bias;
    ordered_json couplings = ordered_json::array();
    for (const auto& [edge, w] : l.couplings) couplings.push_back({edge.first, edge.second, w});
    j["J"] = couplings;
    return finish(j);
}

LogicalIsing logical_ising_from_json(std::string_view text) {
    ordered_json j = parse(text, "logical Ising");
    LogicalIsing l;
    try {
        l.visible = j.at("V").get<int>();
        l.hidden = j.at("H").get<int>();
        if (l.visible < 1 || l.hidden < 1) throw ParseError("V and H must be >= 1");
        if (j.contains("h"))
            l.bias = j.at("h").get<std::vector<double>>();
        else
            l.bias.assign(static_cast<std::size_t>(l.node_count()), 0.0);
        if (static_cast<int>(l.bias.size()) != l.node_count())
            throw ParseError("bias array must have V + H entries");
        for (const auto& entry : j.value("J", ordered_json::array())) {
            if (!entry.is_array() || entry.size() != 3)
                throw ParseError("coupling entries must be [i, j, weight]");
            const int i = entry[0].get<int>();
            const int h = entry[1].get<int>();
            if (i < 0 || i >= l.visible || h < 0 || h >= l.hidden)
                throw ParseError("coupling (" + std::to_string(i) + ", " + std::to_string(h) +
                                 ") out of range");
            l.couplings[{i, h}] = entry[2].get<double>();
        }
    } catch (const ordered_json::exception& ex) {
        throw ParseError(std::string("logical Ising JSON: ") + ex.what());
    }
    return l;
}

std::string physical_ising_to_json(const PhysicalIsing& p) {
    ordered_json h;
    for (const auto& [q, bias] : p.bias) h[std::to_string(q)] = bias;
    ordered_json couplings = ordered_json::array();
    for (const auto& [edge, w] : p.couplings) couplings.push_back({edge.first, edge.second, w});
    ordered_json j;
    j["h"] = h.is_null() ? ordered_json::object() : h;
    j["J"] = couplings;
    return finish(j);
}

PhysicalIsing physical_ising_from_json(std::string_view text) {
    ordered_json j = parse(text, "physical Ising");
    PhysicalIsing p;
    try {
        for (const auto& [key, value] : j.at("h").items()) {
            std::size_t used = 0;
            const QubitId q = std::stoll(key, &used);
            if (used != key.size() || q < 0) throw ParseError("bad qubit id \"" + key + "\"");
            p.bias[q] = value.get<double>();
        }
        for (const auto& entry : j.value("J", ordered_json::array())) {
            if (!entry.is_array() || entry.size() != 3)
                throw ParseError("coupling entries must be [a, b, weight]");
            const QubitId a = entry[0].get<QubitId>();
            const QubitId b = entry[1].get<QubitId>();
            if (a < 0 || b < 0 || a == b) throw ParseError("bad coupler endpoints");
            p.couplings[{std::min(a, b), std::max(a, b)}] = entry[2].get<double>();
        }
    } catch (const ordered_json::exception& ex) {
        throw ParseError(std::string("physical Ising JSON: ") + ex.what());
    } catch (const std::invalid_argument&) {
        throw ParseError("bad qubit id key in physical Ising JSON");
    } catch (const std::out_of_range&) {
        throw ParseError("bad qubit id key in physical Ising JSON");
    }
    return p;
}

std::string ground_states_to_json(const GroundStates& gs) {
    ordered_json j;
    j["variables"] = gs.variables;
    j["min_energy"] = gs.min_energy;
    j["states"] = gs.states;
    return finish(j);
}

}  // namespace qembed
