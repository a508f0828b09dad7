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

// Command-line driver over the libqembed C API.
//
// Exit codes: 0 success, 1 data/validation failure, 2 usage error (bad flags,
// bad values, capacity violations).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qembed/qembed.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) { throw CliError{code, message}; }

int exit_code_for(qe_status status) {
    switch (status) {
        case QE_OK: return kExitOk;
        case QE_INVALID_ARGUMENT:
        case QE_CAPACITY_EXCEEDED: return kExitUsage;
        default: return kExitFailure;
    }
}

void check(qe_status status) {
    if (status != QE_OK)
        fail(exit_code_for(status),
             std::string(qe_status_name(status)) + ": " + qe_last_error());
}

struct StringDeleter {
    void operator()(char* s) const { qe_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

struct LatticeDeleter {
    void operator()(qe_lattice* l) const { qe_lattice_free(l); }
};
using Lattice = std::unique_ptr<qe_lattice, LatticeDeleter>;

struct EmbeddingDeleter {
    void operator()(qe_embedding* e) const { qe_embedding_free(e); }
};
using EmbeddingHandle = std::unique_ptr<qe_embedding, EmbeddingDeleter>;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(kExitFailure, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Writes and re-reads the file, verifying the bytes round-trip.
void write_file_verified(const std::string& path, const std::string& content) {
    {
        std::ofstream out(path, std::ios::binary);
        if (!out) fail(kExitFailure, "cannot write " + path);
        out << content;
    }
    if (read_file(path) != content)
        fail(kExitFailure, "verification re-read of " + path + " does not match");
}

std::vector<std::int64_t> read_id_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(kExitFailure, "cannot open " + path);
    std::vector<std::int64_t> ids;
    std::int64_t id = 0;
    while (in >> id) ids.push_back(id);
    if (!in.eof()) fail(kExitFailure, "non-integer content in " + path);
    return ids;
}

// Shared lattice flags.
struct LatticeOptions {
    int tiles = 16;
    int alpha = 12;
    int shift = -1;
    std::string disable_file;
    bool tiles_set = false;

    void attach(CLI::App* cmd, bool required = false) {
        auto* m = cmd->add_option("--M", tiles, "Lattice tiles per side")
                      ->check(CLI::Range(3, 4096));
        if (required) m->required();
        m->each([this](const std::string&) { tiles_set = true; });
        cmd->add_option("--alpha", alpha, "Wires per tile bundle (even)");
        cmd->add_option("--shift", shift, "Crossing window offset (default alpha/2)");
        cmd->add_option("--disable-file", disable_file,
                        "File of qubit ids to disable, whitespace separated");
    }

    Lattice build() const {
        qe_lattice* raw = nullptr;
        check(qe_lattice_create(tiles, alpha, shift, &raw));
        Lattice lattice(raw);
        if (!disable_file.empty()) {
            const auto ids = read_id_file(disable_file);
            qe_lattice* masked = nullptr;
            check(qe_lattice_disable(lattice.get(), ids.data(), ids.size(), &masked));
            lattice.reset(masked);
        }
        return lattice;
    }
};

EmbeddingHandle load_embedding(const std::string& path) {
    const std::string text = read_file(path);
    qe_embedding* raw = nullptr;
    check(qe_embedding_from_json(text.c_str(), &raw));
    return EmbeddingHandle(raw);
}

// Rebuilds the lattice an embedding was produced on, preferring explicit
// flags over the parameters echoed in the embedding file.
Lattice lattice_for_embedding(const LatticeOptions& opts, const std::string& embedding_json) {
    if (opts.tiles_set) return opts.build();
    const auto doc = nlohmann::json::parse(embedding_json, nullptr, false);
    if (doc.is_discarded() || !doc.contains("params"))
        fail(kExitFailure, "embedding file carries no lattice parameters; pass --M/--alpha");
    const auto& p = doc["params"];
    const int tiles = p.value("M", 0);
    const int alpha = p.value("alpha", 0);
    if (tiles < 3 || alpha < 2)
        fail(kExitFailure, "embedding file carries no lattice parameters; pass --M/--alpha");
    LatticeOptions derived = opts;
    derived.tiles = tiles;
    derived.alpha = alpha;
    return derived.build();
}

std::vector<std::pair<int, int>> parse_sizes(const std::vector<std::string>& tokens) {
    std::vector<std::pair<int, int>> sizes;
    for (const auto& token : tokens) {
        try {
            const auto x = token.find('x');
            if (x == std::string::npos) {
                const int n = std::stoi(token);
                sizes.emplace_back(n, n);
            } else {
                sizes.emplace_back(std::stoi(token.substr(0, x)),
                                   std::stoi(token.substr(x + 1)));
            }
        } catch (const std::exception&) {
            fail(kExitUsage, "bad size \"" + token + "\" (use N or VxH)");
        }
    }
    return sizes;
}

int cmd_lattice_gen(const LatticeOptions& opts, const std::string& out_path) {
    Lattice lattice = opts.build();
    std::int64_t total = 0, per_orientation = 0, couplers = 0;
    check(qe_lattice_qubit_count(lattice.get(), &total, &per_orientation));
    check(qe_lattice_coupler_count(lattice.get(), &couplers));
    char* text = nullptr;
    check(qe_lattice_export_edges(lattice.get(), &text));
    ApiString edges(text);
    if (!out_path.empty()) write_file_verified(out_path, edges.get());
    std::cout << "lattice M=" << opts.tiles << " alpha=" << opts.alpha << ": " << total
              << " qubits (" << per_orientation << " per orientation), " << couplers
              << " couplers" << std::endl;
    if (out_path.empty()) std::cout << edges.get();
    return kExitOk;
}

int cmd_lattice_import(const std::string& edges_path, const std::string& out_path) {
    const std::string text = read_file(edges_path);
    qe_lattice* raw = nullptr;
    check(qe_lattice_import_edges(text.c_str(), &raw));
    Lattice lattice(raw);
    std::int64_t couplers = 0;
    check(qe_lattice_coupler_count(lattice.get(), &couplers));
    char* exported = nullptr;
    check(qe_lattice_export_edges(lattice.get(), &exported));
    ApiString canonical(exported);
    if (!out_path.empty()) write_file_verified(out_path, canonical.get());
    std::cout << "imported " << couplers << " couplers from " << edges_path << std::endl;
    return kExitOk;
}

struct EmbedOptions {
    int visible = 0;
    int hidden = 0;
    int visible_group = -1;
    int hidden_group = -1;
    int visible_start = -1;
    bool heuristic = false;
    std::uint64_t seed = 0;
    int max_tries = 10;
    double timeout_s = 30.0;
    std::string out_path;
};

int cmd_embed(const LatticeOptions& lat_opts, const EmbedOptions& opts) {
    Lattice lattice = lat_opts.build();
    qe_embedding* raw = nullptr;
    if (opts.heuristic) {
        std::int64_t best_overlap = -1;
        check(qe_heuristic_embed(lattice.get(), opts.visible, opts.hidden, opts.seed,
                                 opts.max_tries, opts.timeout_s, &raw, &best_overlap));
    } else {
        check(qe_embed(lattice.get(), opts.visible, opts.hidden, opts.visible_group,
                       opts.hidden_group, opts.visible_start, &raw));
    }
    EmbeddingHandle embedding(raw);

    char* json = nullptr;
    check(qe_embedding_to_json(embedding.get(), &json));
    ApiString text(json);
    if (!opts.out_path.empty())
        write_file_verified(opts.out_path, text.get());
    else
        std::cout << text.get();

    char* metrics = nullptr;
    check(qe_chain_metrics(embedding.get(), -1, &metrics));
    ApiString metrics_text(metrics);
    const auto m = nlohmann::json::parse(metrics_text.get());
    std::cerr << "embedded K(" << opts.visible << "," << opts.hidden << "): max chain length "
              << m["max_length"] << ", chains >= " << m["threshold"] << ": "
              << m["count_ge_threshold"] << std::endl;
    return kExitOk;
}

int cmd_validate(const LatticeOptions& lat_opts, const std::string& embedding_path,
                 const std::string& edges_path, const std::string& report_path, int threshold) {
    const std::string embedding_json = read_file(embedding_path);
    qe_embedding* raw_embedding = nullptr;
    check(qe_embedding_from_json(embedding_json.c_str(), &raw_embedding));
    EmbeddingHandle embedding(raw_embedding);

    Lattice lattice;
    if (!edges_path.empty()) {
        const std::string text = read_file(edges_path);
        qe_lattice* raw = nullptr;
        check(qe_lattice_import_edges(text.c_str(), &raw));
        lattice.reset(raw);
    } else {
        lattice = lattice_for_embedding(lat_opts, embedding_json);
    }

    int is_valid = 0;
    char* report = nullptr;
    check(qe_validate(embedding.get(), lattice.get(), &is_valid, &report));
    ApiString report_text(report);

    char* metrics = nullptr;
    check(qe_chain_metrics(embedding.get(), threshold, &metrics));
    ApiString metrics_text(metrics);

    if (!report_path.empty()) write_file_verified(report_path, report_text.get());
    std::cout << report_text.get();
    std::cout << metrics_text.get();
    return is_valid ? kExitOk : kExitFailure;
}

struct BenchOptions {
    std::vector<std::string> sizes;
    int trials = 100;
    std::uint64_t seed = 0;
    std::string algorithms = "structured";
    std::string csv_path;
    int visible_group = -1;
    int hidden_group = -1;
    int visible_start = -1;
    int max_tries = 10;
    double timeout_s = 30.0;
};

int cmd_bench(const LatticeOptions& lat_opts, const BenchOptions& opts) {
    bool run_structured = false, run_heuristic = false;
    std::stringstream ss(opts.algorithms);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token == "structured")
            run_structured = true;
        else if (token == "heuristic")
            run_heuristic = true;
        else if (!token.empty())
            fail(kExitUsage, "unknown algorithm \"" + token + "\"");
    }
    if (!run_structured && !run_heuristic)
        fail(kExitUsage, "no algorithm selected; use --algorithms structured,heuristic");

    const auto sizes = parse_sizes(opts.sizes);
    std::vector<std::int32_t> flat;
    for (const auto& [v, h] : sizes) {
        flat.push_back(v);
        flat.push_back(h);
    }

    Lattice lattice = lat_opts.build();
    char* csv = nullptr;
    check(qe_bench_csv(lattice.get(), flat.empty() ? nullptr : flat.data(), sizes.size(),
                       opts.trials, run_structured ? 1 : 0, run_heuristic ? 1 : 0, opts.seed,
                       opts.visible_group, opts.hidden_group, opts.visible_start, opts.max_tries,
                       opts.timeout_s, &csv));
    ApiString text(csv);
    if (!opts.csv_path.empty())
        write_file_verified(opts.csv_path, text.get());
    else
        std::cout << text.get();
    return kExitOk;
}

int cmd_render(const LatticeOptions& lat_opts, const std::string& embedding_path,
               const std::string& svg_path) {
    EmbeddingHandle embedding;
    Lattice lattice;
    if (!embedding_path.empty()) {
        const std::string json = read_file(embedding_path);
        qe_embedding* raw = nullptr;
        check(qe_embedding_from_json(json.c_str(), &raw));
        embedding.reset(raw);
        lattice = lattice_for_embedding(lat_opts, json);
    } else {
        lattice = lat_opts.build();
    }
    char* svg = nullptr;
    check(qe_render_svg(lattice.get(), embedding.get(), &svg));
    ApiString text(svg);
    if (!svg_path.empty())
        write_file_verified(svg_path, text.get());
    else
        std::cout << text.get();
    return kExitOk;
}

struct OracleOptions {
    std::string ising_path;
    std::string embedding_path;
    double chain_strength = -1;
    int limit = -1;
    std::string out_path;
};

int cmd_oracle(const LatticeOptions& lat_opts, const OracleOptions& opts) {
    const std::string ising_json = read_file(opts.ising_path);

    if (opts.embedding_path.empty()) {
        char* states = nullptr;
        check(qe_ground_states(ising_json.c_str(), opts.limit, &states));
        ApiString text(states);
        if (!opts.out_path.empty())
            write_file_verified(opts.out_path, text.get());
        else
            std::cout << text.get();
        return kExitOk;
    }

    const std::string embedding_json = read_file(opts.embedding_path);
    qe_embedding* raw = nullptr;
    check(qe_embedding_from_json(embedding_json.c_str(), &raw));
    EmbeddingHandle embedding(raw);
    Lattice lattice = lattice_for_embedding(lat_opts, embedding_json);

    int match = 0;
    char* detail = nullptr;
    check(qe_unembed_check(ising_json.c_str(), embedding.get(), lattice.get(),
                           opts.chain_strength, opts.limit, &match, &detail));
    ApiString text(detail);
    if (!opts.out_path.empty())
        write_file_verified(opts.out_path, text.get());
    else
        std::cout << text.get();
    return match ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Structured minor embedding of complete bipartite graphs"};
    app.require_subcommand(1);

    // lattice
    auto* lattice_cmd = app.add_subcommand("lattice", "Generate or import hardware graphs");
    lattice_cmd->require_subcommand(1);
    auto* gen = lattice_cmd->add_subcommand("gen", "Build a lattice and export its edge list");
    LatticeOptions gen_lattice;
    gen_lattice.attach(gen);
    std::string gen_out;
    gen->add_option("--out", gen_out, "Edge list output file");
    auto* import = lattice_cmd->add_subcommand("import", "Parse an edge list file");
    std::string import_edges, import_out;
    import->add_option("--edges", import_edges, "Edge list input file")->required();
    import->add_option("--out", import_out, "Canonical edge list output file");

    // embed
    auto* embed_cmd = app.add_subcommand("embed", "Embed K(V,H) onto a lattice");
    LatticeOptions embed_lattice;
    embed_lattice.attach(embed_cmd);
    EmbedOptions embed_opts;
    embed_cmd->add_option("--visible", embed_opts.visible, "Visible layer size")->required();
    embed_cmd->add_option("--hidden", embed_opts.hidden, "Hidden layer size")->required();
    embed_cmd->add_option("--m", embed_opts.visible_group, "Visible group size (default 4)");
    embed_cmd->add_option("--n", embed_opts.hidden_group, "Hidden group size (default 8)");
    embed_cmd->add_option("--visible-start", embed_opts.visible_start,
                          "Wire of visible node 0 (default alpha)");
    embed_cmd->add_flag("--heuristic", embed_opts.heuristic,
                        "Use the heuristic baseline instead of the structured embedder");
    embed_cmd->add_option("--seed", embed_opts.seed, "Heuristic RNG seed");
    embed_cmd->add_option("--max-tries", embed_opts.max_tries, "Heuristic pass limit");
    embed_cmd->add_option("--timeout", embed_opts.timeout_s, "Heuristic timeout in seconds");
    embed_cmd->add_option("--out", embed_opts.out_path, "Embedding JSON output file");

    // validate
    auto* validate_cmd = app.add_subcommand("validate", "Check an embedding file");
    LatticeOptions validate_lattice;
    validate_lattice.attach(validate_cmd);
    std::string validate_embedding, validate_edges, validate_report;
    int validate_threshold = -1;
    validate_cmd->add_option("--embedding", validate_embedding, "Embedding JSON file")
        ->required();
    validate_cmd->add_option("--edges", validate_edges,
                             "Validate against this edge list instead of a generated lattice");
    validate_cmd->add_option("--report", validate_report, "Report JSON output file");
    validate_cmd->add_option("--threshold", validate_threshold,
                             "Chain length threshold (default 6)");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Timed embedding trials, CSV output");
    LatticeOptions bench_lattice;
    bench_lattice.attach(bench_cmd);
    BenchOptions bench_opts;
    bench_cmd->add_option("--sizes", bench_opts.sizes,
                          "Sizes as N (square) or VxH (default 40..120 step 20)");
    bench_cmd->add_option("--trials", bench_opts.trials, "Trials per configuration");
    bench_cmd->add_option("--seed", bench_opts.seed, "Base seed for heuristic trials");
    bench_cmd->add_option("--algorithms", bench_opts.algorithms,
                          "Comma list of structured,heuristic (default structured)");
    bench_cmd->add_option("--csv", bench_opts.csv_path, "CSV output file");
    bench_cmd->add_option("--m", bench_opts.visible_group, "Visible group size");
    bench_cmd->add_option("--n", bench_opts.hidden_group, "Hidden group size");
    bench_cmd->add_option("--visible-start", bench_opts.visible_start, "Visible start wire");
    bench_cmd->add_option("--max-tries", bench_opts.max_tries, "Heuristic pass limit");
    bench_cmd->add_option("--timeout", bench_opts.timeout_s, "Heuristic timeout in seconds");

    // render
    auto* render_cmd = app.add_subcommand("render", "Draw a lattice or embedding as SVG");
    LatticeOptions render_lattice;
    render_lattice.attach(render_cmd);
    std::string render_embedding, render_svg;
    render_cmd->add_option("--embedding", render_embedding, "Embedding JSON file");
    render_cmd->add_option("--svg", render_svg, "SVG output file");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive ground states / embedding check");
    LatticeOptions oracle_lattice;
    oracle_lattice.attach(oracle_cmd);
    OracleOptions oracle_opts;
    oracle_cmd->add_option("--ising", oracle_opts.ising_path, "Ising JSON file (logical or physical)")
        ->required();
    oracle_cmd->add_option("--check-embedding", oracle_opts.embedding_path,
                           "Embedding JSON: embed parameters and compare ground states");
    oracle_cmd->add_option("--chain-strength", oracle_opts.chain_strength,
                           "Chain strength (default 2 * (sum|h| + sum|J|))");
    oracle_cmd->add_option("--limit", oracle_opts.limit,
                           "Enumeration variable limit (default 24)");
    oracle_cmd->add_option("--out", oracle_opts.out_path, "Result JSON output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_lattice_gen(gen_lattice, gen_out);
        if (import->parsed()) return cmd_lattice_import(import_edges, import_out);
        if (embed_cmd->parsed()) return cmd_embed(embed_lattice, embed_opts);
        if (validate_cmd->parsed())
            return cmd_validate(validate_lattice, validate_embedding, validate_edges,
                                validate_report, validate_threshold);
        if (bench_cmd->parsed()) return cmd_bench(bench_lattice, bench_opts);
        if (render_cmd->parsed()) return cmd_render(render_lattice, render_embedding, render_svg);
        if (oracle_cmd->parsed()) return cmd_oracle(oracle_lattice, oracle_opts);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << std::endl;
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitFailure;
    }
    return kExitUsage;
}
