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

// End-to-end runs of the installed CLI binary (path injected by the build).

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
    const std::string command = std::string(QEMBED_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    while (std::size_t got = std::fread(buffer, 1, sizeof(buffer), pipe))
        output.append(buffer, got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "qembed_cli_tests";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

}  // namespace

TEST_CASE("embed then validate round trip") {
    const fs::path emb = scratch_dir() / "k8x16.json";
    auto r = run("embed --visible 8 --hidden 16 --M 16 --out " + emb.string());
    CHECK(r.exit_code == 0);
    CHECK(slurp(emb).find("\"provenance\": \"structured\"") != std::string::npos);

    r = run("validate --embedding " + emb.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"is_valid\": true") != std::string::npos);
}

TEST_CASE("validate rejects a corrupted embedding file") {
    const fs::path bad = scratch_dir() / "corrupt.json";
    spit(bad, "this is not an embedding");
    const auto r = run("validate --embedding " + bad.string());
    CHECK(r.exit_code == 1);
}

TEST_CASE("validate flags an invalid embedding with exit 1") {
    const fs::path emb = scratch_dir() / "k2x2.json";
    auto r = run("embed --visible 2 --hidden 2 --M 16 --out " + emb.string());
    REQUIRE(r.exit_code == 0);
    // knock out a qubit the footprint uses
    const fs::path mask = scratch_dir() / "mask.txt";
    spit(mask, "2970\n");
    r = run("validate --embedding " + emb.string() + " --M 16 --disable-file " + mask.string());
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("\"is_valid\": false") != std::string::npos);
}

TEST_CASE("capacity violations are usage errors") {
    const auto r = run("embed --visible 8 --hidden 121 --M 16");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("capacity") != std::string::npos);
}

TEST_CASE("unknown flags are usage errors") {
    const auto r = run("embed --visible 8 --hidden 16 --frobnicate");
    CHECK(r.exit_code == 2);
}

TEST_CASE("missing subcommand prints help with usage exit") {
    const auto r = run("");
    CHECK(r.exit_code == 2);
}

TEST_CASE("lattice gen, import, and the edge-list path of validate") {
    const fs::path edges = scratch_dir() / "m3.edges";
    auto r = run("lattice gen --M 3 --alpha 2 --out " + edges.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("24 qubits") != std::string::npos);

    const fs::path canonical = scratch_dir() / "m3_canonical.edges";
    r = run("lattice import --edges " + edges.string() + " --out " + canonical.string());
    CHECK(r.exit_code == 0);
    CHECK(slurp(edges) == slurp(canonical));

    const fs::path bad = scratch_dir() / "bad.edges";
    spit(bad, "10 nonsense\n");
    r = run("lattice import --edges " + bad.string());
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("line 1") != std::string::npos);

    // an embedding validated against the exported full-lattice edge list
    const fs::path emb = scratch_dir() / "m16.json";
    const fs::path m16_edges = scratch_dir() / "m16.edges";
    REQUIRE(run("embed --visible 2 --hidden 2 --M 16 --out " + emb.string()).exit_code == 0);
    REQUIRE(run("lattice gen --M 16 --out " + m16_edges.string()).exit_code == 0);
    r = run("validate --embedding " + emb.string() + " --edges " + m16_edges.string());
    CHECK(r.exit_code == 0);
}

TEST_CASE("render writes an svg") {
    const fs::path emb = scratch_dir() / "render.json";
    const fs::path svg = scratch_dir() / "render.svg";
    REQUIRE(run("embed --visible 8 --hidden 16 --M 16 --out " + emb.string()).exit_code == 0);
    const auto r = run("render --embedding " + emb.string() + " --svg " + svg.string());
    CHECK(r.exit_code == 0);
    const std::string content = slurp(svg);
    CHECK(content.rfind("<svg ", 0) == 0);
    CHECK(content.find("id=\"q180\" class=\"qubit visible\"") != std::string::npos);
}

TEST_CASE("bench emits the documented CSV") {
    const fs::path csv = scratch_dir() / "bench.csv";
    const auto r =
        run("bench --sizes 8 --trials 2 --M 16 --algorithms structured --csv " + csv.string());
    CHECK(r.exit_code == 0);
    const std::string content = slurp(csv);
    CHECK(content.rfind("config,algorithm,trials,avg_time_s,std_time_s,avg_chains_ge_6,"
                        "std_chains_ge_6\n",
                        0) == 0);
    CHECK(content.find("8x8,structured,2,") != std::string::npos);
}

TEST_CASE("oracle ground states and embedding check") {
    const fs::path ising = scratch_dir() / "ising.json";
    spit(ising, R"({"V": 1, "H": 1, "h": [0, 0], "J": [[0, 0, 1.0]]})");

    auto r = run("oracle --ising " + ising.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"min_energy\": -1.0") != std::string::npos);

    const fs::path emb = scratch_dir() / "k1x1.json";
    REQUIRE(run("embed --visible 1 --hidden 1 --M 4 --out " + emb.string()).exit_code == 0);
    r = run("oracle --ising " + ising.string() + " --check-embedding " + emb.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"match\": true") != std::string::npos);
}

TEST_CASE("heuristic embedding through the CLI") {
    const fs::path emb = scratch_dir() / "heuristic.json";
    int exit_code = 1;
    for (int seed = 1; seed <= 3 && exit_code != 0; ++seed)
        exit_code = run("embed --visible 2 --hidden 2 --M 3 --heuristic --seed " +
                        std::to_string(seed) + " --out " + emb.string())
                        .exit_code;
    REQUIRE(exit_code == 0);
    CHECK(slurp(emb).find("\"provenance\": \"heuristic\"") != std::string::npos);
    CHECK(run("validate --embedding " + emb.string()).exit_code == 0);
}
