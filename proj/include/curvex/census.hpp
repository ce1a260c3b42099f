#pragma once

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <istream>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "curvex/graph.hpp"
#include "curvex/graph6.hpp"
#include "curvex/index.hpp"

namespace curvex {

struct CensusReport {
    int n = -1;  // common order of the scanned graphs; -1 when absent or mixed
    long long total_connected = 0;
    long long disconnected = 0;
    long long dx_count = 0;
    std::vector<std::string> dx_examples;
    std::map<std::string, long long> index_histogram;  // index string -> count
    long long malformed_lines = 0;

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["n"] = n;
        j["total_connected"] = total_connected;
        j["disconnected"] = disconnected;
        j["dx_count"] = dx_count;
        j["dx_examples"] = dx_examples;
        j["index_histogram"] = nlohmann::json::object();
        for (const auto& [k, v] : index_histogram) j["index_histogram"][k] = v;
        j["malformed_lines"] = malformed_lines;
        return j;
    }
};

namespace census_detail {

struct Chunk {
    CensusReport rep;
};

inline void scan_line(const std::string& line, CensusReport& rep) {
    Graph g = parse_graph6(line);  // caller converts MalformedGraph6 into a skip
    if (rep.n == -1)
        rep.n = g.vertex_count();
    else if (rep.n != g.vertex_count())
        rep.n = -2;  // mixed orders
    if (!is_connected(g)) {
        ++rep.disconnected;
        return;
    }
    ++rep.total_connected;
    IndexValue idx = curvature_index(g).index;
    ++rep.index_histogram[idx.str()];
    if (idx.is_zero()) {
        ++rep.dx_count;
        rep.dx_examples.push_back(line);
    }
}

inline void merge(CensusReport& into, CensusReport&& part) {
    if (into.n == -1)
        into.n = part.n;
    else if (part.n != -1 && part.n != into.n)
        into.n = -2;
    into.total_connected += part.total_connected;
    into.disconnected += part.disconnected;
    into.dx_count += part.dx_count;
    into.malformed_lines += part.malformed_lines;
    for (auto& s : part.dx_examples) into.dx_examples.push_back(std::move(s));
    for (auto& [k, v] : part.index_histogram) into.index_histogram[k] += v;
}

}  // namespace census_detail

// Scans graph6 lines and reports census counts. Parallel over fixed-size
// chunks; partial reports are merged in input order, so the report does not
// depend on the worker count. Malformed lines are counted and skipped.
inline CensusReport scan_graph6_lines(const std::vector<std::string>& lines, int jobs = 1) {
    if (jobs < 1) jobs = 1;
    const std::size_t chunk_size = 256;
    const std::size_t nchunks = (lines.size() + chunk_size - 1) / chunk_size;
    std::vector<CensusReport> parts(nchunks);

    auto work = [&](std::size_t c) {
        CensusReport& rep = parts[c];
        std::size_t begin = c * chunk_size;
        std::size_t end = std::min(lines.size(), begin + chunk_size);
        for (std::size_t i = begin; i < end; ++i) {
            if (lines[i].empty()) continue;
            try {
                census_detail::scan_line(lines[i], rep);
            } catch (const MalformedGraph6&) {
                ++rep.malformed_lines;
            }
        }
    };

    if (jobs == 1 || nchunks <= 1) {
        for (std::size_t c = 0; c < nchunks; ++c) work(c);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (std::size_t c = next.fetch_add(1); c < nchunks; c = next.fetch_add(1))
                    work(c);
            });
        for (auto& th : pool) th.join();
    }

    CensusReport out;
    for (auto& part : parts) census_detail::merge(out, std::move(part));
    if (out.n == -2) out.n = -1;
    return out;
}

inline CensusReport scan_graph6(std::istream& in, int jobs = 1) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        lines.push_back(line);
    }
    return scan_graph6_lines(lines, jobs);
}

// ---- Erdos-Renyi experiment ----

struct GnpSample {
    int n = 0;
    Rat p;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<IndexValue> indices;       // one per connected draw, in draw order
    long long discarded_disconnected = 0;  // draws thrown away
    double diam2_fraction = 0.0;
    double median_index = 0.0;
    double near_target_fraction = 0.0;  // |index - (2-p)| <= 0.1

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["n"] = n;
        j["p"] = rat_str(p);
        j["trials"] = trials;
        j["seed"] = seed;
        auto arr = nlohmann::json::array();
        for (const IndexValue& iv : indices) arr.push_back(iv.str());
        j["indices"] = arr;
        j["discarded_disconnected"] = discarded_disconnected;
        j["diam2_fraction"] = diam2_fraction;
        j["median_index"] = median_index;
        j["near_target_fraction"] = near_target_fraction;
        j["target"] = rat_str(Rat(2) - p);
        return j;
    }
};

namespace census_detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Bernoulli(p) via an exact 64-bit threshold, so samples are identical on
// every platform for a given seed.
inline Graph gnp_draw(int n, const BigInt& threshold, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (BigInt(rng()) < threshold) edges.emplace_back(u, v);
    return Graph(n, edges);
}

}  // namespace census_detail

// Samples G(n, p) until `trials` connected draws are collected (disconnected
// draws are counted and discarded). Every attempt derives its own generator
// from (seed, attempt), so the sample is reproducible bit for bit and
// independent of the worker count.
inline GnpSample gnp_experiment(int n, const Rat& p, int trials, std::uint64_t seed,
                                int jobs = 1) {
    if (n < 2) throw InvalidParameter("gnp needs n >= 2");
    if (p <= 0 || p >= 1) throw InvalidParameter("gnp needs 0 < p < 1");
    if (trials < 1) throw InvalidParameter("gnp needs trials >= 1");
    if (jobs < 1) jobs = 1;

    // floor(p * 2^64), exact
    BigInt threshold = (numerator(p) << 64) / denominator(p);

    GnpSample sample;
    sample.n = n;
    sample.p = p;
    sample.trials = trials;
    sample.seed = seed;

    struct Attempt {
        bool connected = false;
        IndexValue index;
        bool diam2 = false;
    };

    std::vector<Attempt> results;
    long long accepted = 0;
    std::uint64_t attempt_base = 0;
    while (accepted < trials) {
        // process attempts in deterministic batches
        const std::uint64_t batch = std::uint64_t(std::max(trials - accepted, 1ll * jobs));
        results.assign(batch, Attempt{});
        auto work = [&](std::uint64_t k) {
            std::uint64_t attempt = attempt_base + k;
            Graph g = census_detail::gnp_draw(
                n, threshold, census_detail::splitmix64(seed ^ (attempt * 0x9e3779b97f4a7c15ULL)));
            Attempt& a = results[k];
            a.connected = is_connected(g);
            if (!a.connected) return;
            DistanceMatrix dm = distance_matrix(g);
            a.diam2 = dm.max_entry() == 2;
            a.index = curvature_index_of_matrix(dm).index;
        };
        if (jobs == 1) {
            for (std::uint64_t k = 0; k < batch; ++k) work(k);
        } else {
            std::atomic<std::uint64_t> next{0};
            std::vector<std::thread> pool;
            for (int t = 0; t < jobs; ++t)
                pool.emplace_back([&] {
                    for (std::uint64_t k = next.fetch_add(1); k < batch; k = next.fetch_add(1))
                        work(k);
                });
            for (auto& th : pool) th.join();
        }
        for (std::uint64_t k = 0; k < batch && accepted < trials; ++k) {
            if (!results[k].connected) {
                ++sample.discarded_disconnected;
                continue;
            }
            sample.indices.push_back(results[k].index);
            if (results[k].diam2) sample.diam2_fraction += 1.0;
            Rat target = Rat(2) - p;
            if (results[k].index.is_finite()) {
                Rat err = results[k].index.value() - target;
                if (err < 0) err = -err;
                if (err <= Rat(1, 10)) sample.near_target_fraction += 1.0;
            }
            ++accepted;
        }
        attempt_base += batch;
    }

    sample.diam2_fraction /= trials;
    sample.near_target_fraction /= trials;

    std::vector<double> vals;
    vals.reserve(sample.indices.size());
    for (const IndexValue& iv : sample.indices)
        vals.push_back(iv.is_finite() ? rat_to_double(iv.value())
                                      : std::numeric_limits<double>::infinity());
    std::sort(vals.begin(), vals.end());
    const std::size_t t = vals.size();
    sample.median_index = t % 2 == 1 ? vals[t / 2] : 0.5 * (vals[t / 2 - 1] + vals[t / 2]);
    return sample;
}

}  // namespace curvex
