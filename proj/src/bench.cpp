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

#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "embedder.hpp"
#include "validator.hpp"

namespace qembed {

namespace {

struct Samples {
    std::vector<double> times;
    std::vector<double> chains;
    int failed = 0;
};

double mean(const std::vector<double>& v) {
    if (v.empty()) return 0;
    double sum = 0;
    for (double x : v) sum += x;
    return sum / static_cast<double>(v.size());
}

double sample_std(const std::vector<double>& v) {
    if (v.size() < 2) return 0;
    const double m = mean(v);
    double sum = 0;
    for (double x : v) sum += (x - m) * (x - m);
    return std::sqrt(sum / static_cast<double>(v.size() - 1));
}

BenchRecord summarize(const std::string& label, const std::string& algorithm,
                      const Samples& s, int trials) {
    BenchRecord r;
    r.config_label = label;
    r.algorithm = algorithm;
    r.trials = trials;
    r.avg_time_s = mean(s.times);
    r.std_time_s = sample_std(s.times);
    r.avg_chains_ge = mean(s.chains);
    r.std_chains_ge = sample_std(s.chains);
    r.failed_trials = s.failed;
    return r;
}

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& cfg, const HardwareGraph& graph) {
    if (cfg.trials < 1) throw DomainError("trials must be >= 1");
    if (!graph.params()) throw DomainError("benchmarking needs a parameterized lattice");

    std::vector<std::pair<int, int>> sizes = cfg.sizes;
    if (sizes.empty())
        for (int n = 40; n <= 120; n += 20) sizes.emplace_back(n, n);
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

    using clock = std::chrono::steady_clock;
    std::vector<BenchRecord> records;

    for (const auto& [v, h] : sizes) {
        const std::string label = std::to_string(v) + "x" + std::to_string(h);

        if (cfg.run_heuristic) {
            Samples s;
            const BipartiteGraph logical = BipartiteGraph::complete(v, h);
            for (int t = 0; t < cfg.trials; ++t) {
                HeuristicConfig hc;
                hc.seed = cfg.seed_base + static_cast<std::uint64_t>(t);
                hc.max_tries = cfg.heuristic_max_tries;
                hc.timeout = std::chrono::milliseconds(
                    static_cast<std::int64_t>(cfg.heuristic_timeout_s * 1000.0));
                const auto start = clock::now();
                const HeuristicResult result = heuristic_embed(logical, graph, hc);
                const std::chrono::duration<double> elapsed = clock::now() - start;
                s.times.push_back(elapsed.count());
                if (result.success())
                    s.chains.push_back(
                        chain_metrics(*result.embedding, cfg.threshold).count_ge_threshold);
                else
                    ++s.failed;
            }
            records.push_back(summarize(label, "heuristic", s, cfg.trials));
        }

        if (cfg.run_structured) {
            Samples s;
            const EmbedderConfig ec = EmbedderConfig::create(
                *graph.params(), cfg.visible_group, cfg.hidden_group, cfg.visible_start);
            for (int t = 0; t < cfg.trials; ++t) {
                const auto start = clock::now();
                const Embedding e = embed_bipartite(v, h, ec, graph);
                const std::chrono::duration<double> elapsed = clock::now() - start;
                s.times.push_back(elapsed.count());
                s.chains.push_back(chain_metrics(e, cfg.threshold).count_ge_threshold);
            }
            records.push_back(summarize(label, "structured", s, cfg.trials));
        }
    }

    std::sort(records.begin(), records.end(), [](const BenchRecord& a, const BenchRecord& b) {
        if (a.config_label != b.config_label) {
            // labels sort by the numeric (V, H) they encode
            const auto parse = [](const std::string& s) {
                const auto x = s.find('x');
                return std::pair<int, int>(std::stoi(s.substr(0, x)), std::stoi(s.substr(x + 1)));
            };
            return parse(a.config_label) < parse(b.config_label);
        }
        return a.algorithm < b.algorithm;
    });
    return records;
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
    bool any_failed = false;
    for (const auto& r : records) any_failed = any_failed || r.failed_trials > 0;

    std::string csv = "config,algorithm,trials,avg_time_s,std_time_s,avg_chains_ge_6,std_chains_ge_6";
    if (any_failed) csv += ",failed_trials";
    csv += "\n";
    for (const auto& r : records) {
        csv += r.config_label + "," + r.algorithm + "," + std::to_string(r.trials) + "," +
               format_number(r.avg_time_s) + "," + format_number(r.std_time_s) + "," +
               format_number(r.avg_chains_ge) + "," + format_number(r.std_chains_ge);
        if (any_failed) csv += "," + std::to_string(r.failed_trials);
        csv += "\n";
    }
    return csv;
}

}  // namespace qembed
