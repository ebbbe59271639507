#include "tifs/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "tifs/canonical.hpp"
#include "tifs/construct.hpp"
#include "tifs/forbidden.hpp"
#include "tifs/graph_io.hpp"
#include "tifs/realize.hpp"

namespace tifs {

namespace {

constexpr int kGenerationCap = 16;

inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

struct Generator {
    const SearchSpec& spec;
    const std::function<void(const Graph&)>& emit;
    std::vector<Graph> patterns;  // effective forbidden patterns, filters on
    int shard_depth;
    long shard_counter = 0;

    Generator(const SearchSpec& s, const std::function<void(const Graph&)>& sink)
        : spec(s), emit(sink) {
        if (spec.apply_filters) patterns = effective_forbidden_patterns(spec.d);
        shard_depth = spec.shard_depth > 0 ? spec.shard_depth : std::min(spec.n - 1, 8);
        if (shard_depth < 1) shard_depth = 1;
    }

    // Hereditary pruning: adding the new last vertex must not create a
    // forbidden pattern or a K(d+1). Parents are pattern-free by induction,
    // so any new occurrence goes through the added vertex.
    bool hereditary_ok(const Graph& child) const {
        if (!spec.apply_filters) return true;
        int added = child.size() - 1;
        std::uint64_t nbrs = child.neighbors(added);
        if (spec.d <= std::popcount(nbrs)) {
            Graph sub = child.induced(nbrs);
            if (has_clique(sub, spec.d)) return false;  // K(d+1) through the added vertex
        }
        for (const Graph& p : patterns) {
            if (p.size() > child.size()) continue;
            if (contains_subgraph_using(child, p, added)) return false;
        }
        return true;
    }

    bool terminal_ok(const Graph& g) const {
        if (!spec.apply_filters) return true;
        return passes_dimension_filters(g, spec.d);
    }

    // Accept the child iff its added last vertex sits in the same orbit as
    // the vertex holding the last canonical position.
    static bool canonical_augmentation(const CanonicalForm& cf, int added) {
        int canonical_last = -1;
        for (int v = 0; v <= added; ++v)
            if (cf.labeling[static_cast<std::size_t>(v)] == added) {
                canonical_last = v;
                break;
            }
        return cf.orbit[static_cast<std::size_t>(canonical_last)] == cf.orbit[static_cast<std::size_t>(added)];
    }

    void run() {
        Graph root(1);
        if (spec.n == 1) {
            if (terminal_ok(root)) emit(root);
            return;
        }
        descend(root, canonical_form(root));
    }

    void descend(const Graph& g, const CanonicalForm& g_cf) {
        if (g.size() == shard_depth && spec.shard_count > 1) {
            long index = shard_counter++;
            if (index % spec.shard_count != spec.shard_index) return;
        }
        const int k = g.size();
        const bool last_level = (k + 1 == spec.n);
        const std::uint64_t subset_limit = bit(k);
        const bool symmetric = g_cf.automorphism_count > 1;
        std::vector<bool> visited;
        if (symmetric) visited.assign(static_cast<std::size_t>(subset_limit), false);

        for (std::uint64_t s = 0; s < subset_limit; ++s) {
            if (symmetric) {
                if (visited[static_cast<std::size_t>(s)]) continue;
                std::vector<std::uint64_t> stack{s};
                visited[static_cast<std::size_t>(s)] = true;
                while (!stack.empty()) {
                    std::uint64_t m = stack.back();
                    stack.pop_back();
                    for (const auto& gen : g_cf.generators) {
                        std::uint64_t img = 0;
                        for (int v : bits_of(m)) img |= bit(gen[static_cast<std::size_t>(v)]);
                        if (!visited[static_cast<std::size_t>(img)]) {
                            visited[static_cast<std::size_t>(img)] = true;
                            stack.push_back(img);
                        }
                    }
                }
            }

            Graph child(k + 1);
            for (auto [u, v] : g.edges()) child.add_edge(u, v);
            for (int v : bits_of(s)) child.add_edge(k, v);

            if (last_level) {
                // Terminal filters subsume the hereditary ones and are far
                // more selective; apply them before the canonicity test.
                if (!terminal_ok(child)) continue;
            } else if (!hereditary_ok(child)) {
                continue;
            }

            CanonicalForm cf = canonical_form(child);
            if (!canonical_augmentation(cf, k)) continue;

            if (last_level)
                emit(child);
            else
                descend(child, cf);
        }
    }
};

}  // namespace

void generate(const SearchSpec& spec, const std::function<void(const Graph&)>& emit) {
    if (spec.n < 1 || spec.n > kGenerationCap)
        throw std::invalid_argument("generate supports 1.." + std::to_string(kGenerationCap) + " vertices, got " +
                                    std::to_string(spec.n));
    if (spec.shard_count < 1 || spec.shard_index < 0 || spec.shard_index >= spec.shard_count)
        throw std::invalid_argument("invalid shard selection " + std::to_string(spec.shard_index) + "/" +
                                    std::to_string(spec.shard_count));
    if (spec.apply_filters && spec.d < 3) throw std::invalid_argument("dimension filters require d >= 3");
    Generator gen(spec, emit);
    gen.run();
}

std::vector<Graph> generate_all(const SearchSpec& spec) {
    std::vector<Graph> out;
    generate(spec, [&](const Graph& g) { out.push_back(g); });
    return out;
}

std::vector<Graph> generate_parallel(int n, int d, bool filters, int workers,
                                     const std::string& checkpoint_path) {
    std::vector<Graph> result;
    if (workers <= 1 && checkpoint_path.empty()) {
        SearchSpec spec;
        spec.n = n;
        spec.d = d;
        spec.apply_filters = filters;
        generate(spec, [&](const Graph& g) { result.push_back(g); });
        return result;
    }
    if (workers < 1) workers = 1;
    std::set<int> done;
    std::vector<std::vector<Graph>> shard_graphs(static_cast<std::size_t>(workers));
    if (!checkpoint_path.empty()) {
        std::ifstream in(checkpoint_path);
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream is(line);
            int ln = 0, shard = 0;
            long count = 0;
            if (!(is >> ln >> shard >> count)) continue;
            if (ln != n || shard < 0 || shard >= workers) continue;
            std::vector<Graph> graphs;
            std::string g6;
            while (is >> g6) graphs.push_back(from_graph6(g6));
            if (static_cast<long>(graphs.size()) == count) {
                shard_graphs[static_cast<std::size_t>(shard)] = std::move(graphs);
                done.insert(shard);
            }
        }
    }
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
        if (done.count(w)) continue;
        threads.emplace_back([&, w] {
            SearchSpec spec;
            spec.n = n;
            spec.d = d;
            spec.apply_filters = filters;
            spec.shard_index = w;
            spec.shard_count = workers;
            generate(spec, [&, w](const Graph& g) { shard_graphs[static_cast<std::size_t>(w)].push_back(g); });
        });
    }
    for (auto& t : threads) t.join();
    if (!checkpoint_path.empty()) {
        std::ofstream out(checkpoint_path, std::ios::app);
        for (int w = 0; w < workers; ++w) {
            if (done.count(w)) continue;
            out << n << ' ' << w << ' ' << shard_graphs[static_cast<std::size_t>(w)].size();
            for (const Graph& g : shard_graphs[static_cast<std::size_t>(w)]) out << ' ' << to_graph6(g);
            out << '\n';
        }
    }
    for (auto& graphs : shard_graphs)
        for (auto& g : graphs) result.push_back(std::move(g));
    return result;
}

namespace {

// Confirmation thresholds for numeric realization witnesses.
constexpr double kWitnessEdgeTol = 1e-6;
constexpr double kWitnessOverlapMin = 1e-6;
constexpr double kWitnessOverlapMax = 0.995;

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

struct WitnessStats {
    double max_edge = 0.0;
    double min_overlap = 1.0;
    double max_overlap = 0.0;
};

WitnessStats witness_stats(const Graph& g, const std::vector<Vector>& vectors) {
    WitnessStats stats;
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v) {
            double dot = std::abs(vectors[static_cast<std::size_t>(u)].dot(vectors[static_cast<std::size_t>(v)]));
            if (g.has_edge(u, v)) {
                stats.max_edge = std::max(stats.max_edge, dot);
            } else {
                stats.min_overlap = std::min(stats.min_overlap, dot);
                stats.max_overlap = std::max(stats.max_overlap, dot);
            }
        }
    return stats;
}

}  // namespace

SearchReport search_minimal_tifs(int d, int n_max, int workers, double time_budget_seconds) {
    if (d < 3) throw std::invalid_argument("search_minimal_tifs requires d >= 3");
    if (n_max > kGenerationCap)
        throw std::invalid_argument("search_minimal_tifs capped at n <= " + std::to_string(kGenerationCap));
    auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };
    SearchReport report;
    report.d = d;
    report.n_max = n_max;

    // Exact confirmation shortcut: the constructed family at n = d+5.
    std::set<std::vector<std::uint8_t>> family_keys;
    for (const auto& dg : enumerate_minimal_tifs(d))
        family_keys.insert(designated_canonical_bytes(dg.graph, dg.a, dg.b_or_c));

    for (int n = d + 1; n <= n_max; ++n) {
        if (time_budget_seconds > 0 && elapsed() > time_budget_seconds) {
            report.incomplete = true;
            break;
        }
        std::vector<Graph> survivors = generate_parallel(n, d, true, workers);
        report.emitted_per_n[n] = static_cast<long>(survivors.size());
        report.graphs_emitted += static_cast<long>(survivors.size());

        std::vector<TifsCertificate> confirmed;
        std::vector<TifsCertificate> unconfirmed;
        std::set<std::vector<std::uint8_t>> keys;
        std::set<std::vector<std::uint8_t>> graph_keys;
        std::map<std::string, WitnessStats> witness_cache;
        for (const Graph& g : survivors) {
            for (const auto& cls : classify_all_pairs(g, d)) {
                if (cls.kind != Kind::TIFS) continue;
                TifsCertificate cert;
                cert.graph = g;
                cert.graph6 = to_graph6(g);
                cert.d = d;
                cert.a = cls.a;
                cert.b = cls.b_or_c;
                cert.witness = *cls.witness_sat;
                cert.raw_step2_verdict = cls.raw_step2_verdict;
                cert.designated_key = designated_canonical_bytes(g, cls.a, cls.b_or_c);
                if (!keys.insert(cert.designated_key).second) continue;

                if (n == d + 5 && family_keys.count(cert.designated_key)) {
                    cert.realizability = RealizabilityCheck::FamilyMatch;
                } else {
                    // One witness search per graph; the pair does not matter.
                    auto it = witness_cache.find(cert.graph6);
                    if (it == witness_cache.end()) {
                        auto result = numeric_realization_search(g, d, 60, fnv1a(cert.graph6));
                        it = witness_cache.emplace(cert.graph6, witness_stats(g, result.realization.vectors)).first;
                    }
                    const WitnessStats& stats = it->second;
                    cert.witness_residual = stats.max_edge;
                    bool faithful = stats.max_edge <= kWitnessEdgeTol && stats.min_overlap >= kWitnessOverlapMin &&
                                    stats.max_overlap <= kWitnessOverlapMax;
                    cert.realizability =
                        faithful ? RealizabilityCheck::NumericWitness : RealizabilityCheck::Unconfirmed;
                }

                if (cert.realizability == RealizabilityCheck::Unconfirmed) {
                    unconfirmed.push_back(std::move(cert));
                } else {
                    graph_keys.insert(canonical_form(g).bytes);
                    confirmed.push_back(std::move(cert));
                }
            }
        }
        auto by_key = [](const TifsCertificate& x, const TifsCertificate& y) {
            return x.designated_key < y.designated_key;
        };
        std::sort(unconfirmed.begin(), unconfirmed.end(), by_key);
        for (auto& cert : unconfirmed) report.unconfirmed.push_back(std::move(cert));
        if (!confirmed.empty()) {
            std::sort(confirmed.begin(), confirmed.end(), by_key);
            report.first_hit_n = n;
            report.tifs_found = std::move(confirmed);
            report.distinct_graphs = static_cast<int>(graph_keys.size());
            break;
        }
    }
    report.seconds = elapsed();
    return report;
}

}  // namespace tifs
