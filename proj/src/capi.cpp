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

#include "qembed/qembed.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <set>
#include <string>

#include <json.hpp>

#include "bench.hpp"
#include "embedder.hpp"
#include "errors.hpp"
#include "heuristic.hpp"
#include "ising.hpp"
#include "lattice.hpp"
#include "render.hpp"
#include "serialize.hpp"
#include "validator.hpp"

// Opaque handle types wrap the core value types one-to-one.
struct qe_lattice {
    qembed::HardwareGraph graph;
};

struct qe_embedding {
    qembed::Embedding embedding;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

template <typename Fn>
qe_status guard(Fn&& fn) {
    try {
        fn();
        return QE_OK;
    } catch (const qembed::CapacityError& e) {
        set_error(e.what());
        return QE_CAPACITY_EXCEEDED;
    } catch (const qembed::ParseError& e) {
        set_error(e.what());
        return QE_PARSE_ERROR;
    } catch (const qembed::EmbeddingError& e) {
        set_error(e.what());
        return QE_EMBEDDING_FAILED;
    } catch (const qembed::LimitError& e) {
        set_error(e.what());
        return QE_LIMIT_EXCEEDED;
    } catch (const qembed::DomainError& e) {
        set_error(e.what());
        return QE_INVALID_ARGUMENT;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return QE_OUT_OF_MEMORY;
    } catch (const std::exception& e) {
        set_error(e.what());
        return QE_INTERNAL_ERROR;
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

qe_status require(bool ok, const char* message) {
    if (ok) return QE_OK;
    set_error(message);
    return QE_INVALID_ARGUMENT;
}

qembed::EmbedderConfig make_config(const qembed::LatticeParams& lat, int32_t visible_group,
                                   int32_t hidden_group, int32_t visible_start) {
    return qembed::EmbedderConfig::create(lat, visible_group < 0 ? 4 : visible_group,
                                          hidden_group < 0 ? 8 : hidden_group, visible_start);
}

}  // namespace

extern "C" {

const char* qe_version(void) { return "1.0.0"; }

const char* qe_status_name(qe_status status) {
    switch (status) {
        case QE_OK: return "ok";
        case QE_INVALID_ARGUMENT: return "invalid argument";
        case QE_CAPACITY_EXCEEDED: return "capacity exceeded";
        case QE_PARSE_ERROR: return "parse error";
        case QE_EMBEDDING_FAILED: return "embedding failed";
        case QE_LIMIT_EXCEEDED: return "limit exceeded";
        case QE_OUT_OF_MEMORY: return "out of memory";
        case QE_INTERNAL_ERROR: return "internal error";
    }
    return "unknown status";
}

const char* qe_last_error(void) { return g_last_error.c_str(); }

void qe_string_free(char* text) { delete[] text; }

qe_status qe_lattice_create(int32_t tiles, int32_t alpha, int32_t shift, qe_lattice** out) {
    if (auto rc = require(out != nullptr, "out pointer is null")) return rc;
    return guard([&] {
        auto params = qembed::LatticeParams::create(tiles, alpha, shift);
        *out = new qe_lattice{qembed::HardwareGraph::build(params)};
    });
}

void qe_lattice_free(qe_lattice* lattice) { delete lattice; }

qe_status qe_lattice_qubit_count(const qe_lattice* lattice, int64_t* total,
                                 int64_t* per_orientation) {
    if (auto rc = require(lattice != nullptr, "lattice is null")) return rc;
    return guard([&] {
        if (lattice->graph.params()) {
            if (total) *total = qembed::qubit_count(*lattice->graph.params());
            if (per_orientation)
                *per_orientation = qembed::orientation_qubit_count(*lattice->graph.params());
        } else {
            if (total) *total = lattice->graph.enabled_count();
            if (per_orientation) *per_orientation = 0;
        }
    });
}

qe_status qe_lattice_coupler_count(const qe_lattice* lattice, int64_t* count) {
    if (auto rc = require(lattice != nullptr && count != nullptr, "null argument")) return rc;
    *count = lattice->graph.coupler_count();
    return QE_OK;
}

qe_status qe_linear_id(const qe_lattice* lattice, int32_t u, int32_t w, int32_t k, int32_t z,
                       int64_t* id) {
    if (auto rc = require(lattice != nullptr && id != nullptr, "null argument")) return rc;
    return guard([&] {
        if (!lattice->graph.params())
            throw qembed::DomainError("lattice has no coordinate parameters");
        *id = qembed::linear_id(qembed::QubitCoord{u, w, k, z}, *lattice->graph.params());
    });
}

qe_status qe_coord_of(const qe_lattice* lattice, int64_t id, int32_t* u, int32_t* w, int32_t* k,
                      int32_t* z) {
    if (auto rc = require(lattice != nullptr, "lattice is null")) return rc;
    return guard([&] {
        if (!lattice->graph.params())
            throw qembed::DomainError("lattice has no coordinate parameters");
        auto c = qembed::coord_of(id, *lattice->graph.params());
        if (u) *u = c.u;
        if (w) *w = c.w;
        if (k) *k = c.k;
        if (z) *z = c.z;
    });
}

int qe_are_coupled(const qe_lattice* lattice, int64_t a, int64_t b) {
    if (!lattice) return 0;
    return lattice->graph.are_coupled(a, b) ? 1 : 0;
}

qe_status qe_lattice_disable(const qe_lattice* lattice, const int64_t* ids, size_t count,
                             qe_lattice** out) {
    if (auto rc = require(lattice != nullptr && out != nullptr && (ids != nullptr || count == 0),
                          "null argument"))
        return rc;
    return guard([&] {
        std::vector<qembed::QubitId> list(ids, ids + count);
        *out = new qe_lattice{lattice->graph.with_disabled(list)};
    });
}

qe_status qe_lattice_export_edges(const qe_lattice* lattice, char** text) {
    if (auto rc = require(lattice != nullptr && text != nullptr, "null argument")) return rc;
    return guard([&] { *text = copy_string(lattice->graph.export_edges()); });
}

qe_status qe_lattice_import_edges(const char* text, qe_lattice** out) {
    if (auto rc = require(text != nullptr && out != nullptr, "null argument")) return rc;
    return guard([&] { *out = new qe_lattice{qembed::HardwareGraph::import_edges(text)}; });
}

qe_status qe_capacity(const qe_lattice* lattice, int32_t hidden_group, int32_t visible_start,
                      int32_t* v_max, int32_t* h_max) {
    if (auto rc = require(lattice != nullptr, "lattice is null")) return rc;
    return guard([&] {
        if (!lattice->graph.params())
            throw qembed::DomainError("capacity needs a parameterized lattice");
        auto config = make_config(*lattice->graph.params(), -1, hidden_group, visible_start);
        auto [v, h] = qembed::capacity(config);
        if (v_max) *v_max = v;
        if (h_max) *h_max = h;
    });
}

qe_status qe_embed(const qe_lattice* lattice, int32_t visible, int32_t hidden,
                   int32_t visible_group, int32_t hidden_group, int32_t visible_start,
                   qe_embedding** out) {
    if (auto rc = require(lattice != nullptr && out != nullptr, "null argument")) return rc;
    return guard([&] {
        if (!lattice->graph.params())
            throw qembed::DomainError("structured embedding needs a parameterized lattice");
        auto config =
            make_config(*lattice->graph.params(), visible_group, hidden_group, visible_start);
        *out = new qe_embedding{
            qembed::embed_bipartite(visible, hidden, config, lattice->graph)};
    });
}

void qe_embedding_free(qe_embedding* embedding) { delete embedding; }

qe_status qe_embedding_shape(const qe_embedding* embedding, int32_t* visible, int32_t* hidden) {
    if (auto rc = require(embedding != nullptr, "embedding is null")) return rc;
    if (visible) *visible = embedding->embedding.visible_count();
    if (hidden) *hidden = embedding->embedding.hidden_count();
    return QE_OK;
}

qe_status qe_embedding_to_json(const qe_embedding* embedding, char** json) {
    if (auto rc = require(embedding != nullptr && json != nullptr, "null argument")) return rc;
    return guard([&] { *json = copy_string(qembed::embedding_to_json(embedding->embedding)); });
}

qe_status qe_embedding_from_json(const char* json, qe_embedding** out) {
    if (auto rc = require(json != nullptr && out != nullptr, "null argument")) return rc;
    return guard([&] { *out = new qe_embedding{qembed::embedding_from_json(json)}; });
}

qe_status qe_heuristic_embed(const qe_lattice* lattice, int32_t visible, int32_t hidden,
                             uint64_t seed, int32_t max_tries, double timeout_seconds,
                             qe_embedding** out, int64_t* best_overlap) {
    if (auto rc = require(lattice != nullptr && out != nullptr, "null argument")) return rc;
    qe_status status = guard([&] {
        qembed::HeuristicConfig cfg;
        cfg.seed = seed;
        if (max_tries > 0) cfg.max_tries = max_tries;
        if (timeout_seconds > 0)
            cfg.timeout =
                std::chrono::milliseconds(static_cast<std::int64_t>(timeout_seconds * 1000.0));
        auto result = qembed::heuristic_embed(qembed::BipartiteGraph::complete(visible, hidden),
                                              lattice->graph, cfg);
        if (best_overlap) *best_overlap = result.best_overlap;
        if (!result.success())
            throw qembed::EmbeddingError(
                result.timed_out
                    ? "heuristic embedding timed out"
                    : "heuristic embedding failed after " + std::to_string(result.passes) +
                          " passes (best overlap " + std::to_string(result.best_overlap) + ")");
        *out = new qe_embedding{std::move(*result.embedding)};
    });
    return status;
}

qe_status qe_validate(const qe_embedding* embedding, const qe_lattice* lattice, int* is_valid,
                      char** report_json) {
    if (auto rc = require(embedding != nullptr && lattice != nullptr, "null argument")) return rc;
    return guard([&] {
        auto report = qembed::validate(embedding->embedding, lattice->graph);
        if (is_valid) *is_valid = report.is_valid ? 1 : 0;
        if (report_json) *report_json = copy_string(qembed::report_to_json(report));
    });
}

qe_status qe_chain_metrics(const qe_embedding* embedding, int32_t threshold,
                           char** metrics_json) {
    if (auto rc = require(embedding != nullptr && metrics_json != nullptr, "null argument"))
        return rc;
    return guard([&] {
        auto metrics =
            qembed::chain_metrics(embedding->embedding, threshold < 0 ? 6 : threshold);
        *metrics_json = copy_string(qembed::metrics_to_json(metrics));
    });
}

qe_status qe_embed_parameters(const char* logical_json, const qe_embedding* embedding,
                              const qe_lattice* lattice, double chain_strength,
                              char** physical_json) {
    if (auto rc = require(logical_json != nullptr && embedding != nullptr &&
                              lattice != nullptr && physical_json != nullptr,
                          "null argument"))
        return rc;
    return guard([&] {
        auto logical = qembed::logical_ising_from_json(logical_json);
        auto physical = qembed::embed_parameters(logical, embedding->embedding, lattice->graph,
                                                 chain_strength);
        *physical_json = copy_string(qembed::physical_ising_to_json(physical));
    });
}

qe_status qe_ground_states(const char* ising_json, int32_t limit, char** states_json) {
    if (auto rc = require(ising_json != nullptr && states_json != nullptr, "null argument"))
        return rc;
    return guard([&] {
        const int lim = limit < 0 ? qembed::kBruteForceLimit : limit;
        // logical documents carry "V"; physical documents carry only h/J
        auto sniff = nlohmann::json::parse(ising_json, nullptr, false);
        if (sniff.is_discarded()) throw qembed::ParseError("invalid JSON in Ising document");
        qembed::GroundStates gs;
        if (sniff.contains("V"))
            gs = qembed::brute_force_ground(qembed::logical_ising_from_json(ising_json), lim);
        else
            gs = qembed::brute_force_ground(qembed::physical_ising_from_json(ising_json), lim);
        *states_json = copy_string(qembed::ground_states_to_json(gs));
    });
}

qe_status qe_unembed_check(const char* logical_json, const qe_embedding* embedding,
                           const qe_lattice* lattice, double chain_strength, int32_t limit,
                           int* match, char** detail_json) {
    if (auto rc = require(logical_json != nullptr && embedding != nullptr && lattice != nullptr,
                          "null argument"))
        return rc;
    return guard([&] {
        const int lim = limit < 0 ? qembed::kBruteForceLimit : limit;
        auto logical = qembed::logical_ising_from_json(logical_json);
        const double strength =
            chain_strength > 0 ? chain_strength : 2.0 * logical.total_abs_weight();
        auto physical =
            qembed::embed_parameters(logical, embedding->embedding, lattice->graph, strength);

        auto logical_ground = qembed::brute_force_ground(logical, lim);
        auto physical_ground = qembed::brute_force_ground(physical, lim);

        std::set<std::vector<int>> logical_set(logical_ground.states.begin(),
                                               logical_ground.states.end());
        std::set<std::vector<int>> unembedded_set;
        int broken_states = 0;
        for (const auto& state : physical_ground.states) {
            std::map<qembed::QubitId, int> spins;
            for (std::size_t i = 0; i < physical_ground.variables.size(); ++i)
                spins[physical_ground.variables[i]] = state[i];
            auto decoded = qembed::unembed_sample(spins, embedding->embedding);
            for (bool b : decoded.broken)
                if (b) {
                    ++broken_states;
                    break;
                }
            unembedded_set.insert(decoded.logical);
        }
        const bool equal = logical_set == unembedded_set && broken_states == 0;
        if (match) *match = equal ? 1 : 0;
        if (detail_json) {
            nlohmann::ordered_json detail;
            detail["match"] = equal;
            detail["chain_strength"] = strength;
            detail["logical_min_energy"] = logical_ground.min_energy;
            detail["physical_min_energy"] = physical_ground.min_energy;
            detail["logical_states"] =
                std::vector<std::vector<int>>(logical_set.begin(), logical_set.end());
            detail["unembedded_states"] =
                std::vector<std::vector<int>>(unembedded_set.begin(), unembedded_set.end());
            detail["broken_chain_states"] = broken_states;
            *detail_json = copy_string(detail.dump(2) + "\n");
        }
    });
}

qe_status qe_render_svg(const qe_lattice* lattice, const qe_embedding* embedding, char** svg) {
    if (auto rc = require(lattice != nullptr && svg != nullptr, "null argument")) return rc;
    return guard([&] {
        qembed::Embedding empty;
        const qembed::Embedding& e = embedding ? embedding->embedding : empty;
        *svg = copy_string(qembed::render_svg(e, lattice->graph));
    });
}

qe_status qe_bench_csv(const qe_lattice* lattice, const int32_t* size_pairs, size_t pair_count,
                       int32_t trials, int run_structured, int run_heuristic, uint64_t seed,
                       int32_t visible_group, int32_t hidden_group, int32_t visible_start,
                       int32_t heuristic_max_tries, double heuristic_timeout_seconds,
                       char** csv) {
    if (auto rc = require(lattice != nullptr && csv != nullptr &&
                              (size_pairs != nullptr || pair_count == 0),
                          "null argument"))
        return rc;
    return guard([&] {
        qembed::BenchConfig cfg;
        for (size_t i = 0; i < pair_count; ++i)
            cfg.sizes.emplace_back(size_pairs[2 * i], size_pairs[2 * i + 1]);
        cfg.trials = trials;
        cfg.run_structured = run_structured != 0;
        cfg.run_heuristic = run_heuristic != 0;
        cfg.seed_base = seed;
        if (visible_group >= 0) cfg.visible_group = visible_group;
        if (hidden_group >= 0) cfg.hidden_group = hidden_group;
        cfg.visible_start = visible_start;
        if (heuristic_max_tries > 0) cfg.heuristic_max_tries = heuristic_max_tries;
        if (heuristic_timeout_seconds > 0) cfg.heuristic_timeout_s = heuristic_timeout_seconds;
        auto records = qembed::run_bench(cfg, lattice->graph);
        *csv = copy_string(qembed::bench_csv(records));
    });
}

}  // extern "C"
