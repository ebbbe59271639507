#include "tifs/forbidden.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "tifs/canonical.hpp"

namespace tifs {

namespace {

std::vector<Graph> build_family(int d) {
    if (d == 1) return {Graph(2)};
    if (d == 2) return {Graph::from_edges(3, {{0, 1}, {1, 2}})};
    std::vector<Graph> prev = build_family(d - 2);
    std::vector<Graph> out;
    std::vector<std::vector<std::uint8_t>> seen;
    for (const Graph& p : prev) {
        for (int pair_edge = 0; pair_edge <= 1; ++pair_edge) {
            Graph q(p.size() + 2);
            for (auto [u, v] : p.edges()) q.add_edge(u, v);
            int x = p.size(), y = p.size() + 1;
            for (int v = 0; v < p.size(); ++v) {
                q.add_edge(x, v);
                q.add_edge(y, v);
            }
            if (pair_edge) q.add_edge(x, y);
            auto bytes = canonical_form(q).bytes;
            bool dup = false;
            for (const auto& b : seen)
                if (b == bytes) {
                    dup = true;
                    break;
                }
            if (!dup) {
                seen.push_back(std::move(bytes));
                out.push_back(std::move(q));
            }
        }
    }
    return out;
}

}  // namespace

ForbiddenFamily forbidden_family(int d) {
    if (d < 1) throw std::invalid_argument("forbidden_family requires dimension >= 1");
    static std::mutex mu;
    static std::map<int, ForbiddenFamily> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, ForbiddenFamily{d, build_family(d)}).first;
    return it->second;
}

std::vector<Graph> effective_forbidden_patterns(int d) {
    auto family = forbidden_family(d);
    std::vector<Graph> out;
    for (std::size_t i = 0; i < family.patterns.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < family.patterns.size() && !redundant; ++j) {
            if (i == j) continue;
            const Graph& a = family.patterns[i];
            const Graph& b = family.patterns[j];
            // a is redundant if it contains another pattern b (checking b
            // already rejects everything containing a).
            if (b.size() < a.size() || (b.size() == a.size() && b.edge_count() < a.edge_count()))
                redundant = contains_subgraph(a, b);
        }
        if (!redundant) out.push_back(family.patterns[i]);
    }
    return out;
}

bool passes_dimension_filters(const Graph& g, int d) {
    if (d < 3) throw std::invalid_argument("dimension filters require d >= 3");
    if (g.min_degree() < 2) return false;
    if (!is_biconnected(g)) return false;
    if (d + 1 <= g.size() && has_clique(g, d + 1)) return false;
    if (d <= g.size()) {
        auto cliques = cliques_of_size(g, d);
        if (cliques.size() < 2) return false;
    } else {
        return false;  // no d-clique can exist at all
    }
    for (const Graph& p : effective_forbidden_patterns(d))
        if (p.size() <= g.size() && contains_subgraph(g, p)) return false;
    return true;
}

}  // namespace tifs
