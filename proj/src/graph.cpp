#include "tifs/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "tifs/canonical.hpp"

namespace tifs {

namespace {

inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

}  // namespace

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph size must be between 1 and 64, got " + std::to_string(n));
    adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[static_cast<std::size_t>(u)] |= bit(v);
    adj_[static_cast<std::size_t>(v)] |= bit(u);
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<std::size_t>(u)] & bit(v)) != 0;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

int Graph::min_degree() const {
    int best = kMaxVertices;
    for (int v = 0; v < n_; ++v) best = std::min(best, std::popcount(adj_[static_cast<std::size_t>(v)]));
    return best;
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += std::popcount(adj_[static_cast<std::size_t>(v)]);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adj_[static_cast<std::size_t>(u)] & bit(v)) out.emplace_back(u, v);
    return out;
}

void Graph::set_label(int v, std::string label) {
    check_vertex(v);
    if (labels_.empty()) labels_.assign(static_cast<std::size_t>(n_), std::string());
    labels_[static_cast<std::size_t>(v)] = std::move(label);
}

std::string Graph::label(int v) const {
    check_vertex(v);
    if (!labels_.empty() && !labels_[static_cast<std::size_t>(v)].empty())
        return labels_[static_cast<std::size_t>(v)];
    return std::to_string(v);
}

Graph Graph::delete_vertex(int v) const {
    check_vertex(v);
    if (n_ == 1) throw std::invalid_argument("cannot delete the last vertex");
    return induced(vertex_mask() & ~bit(v));
}

Graph Graph::induced(std::uint64_t keep) const {
    keep &= vertex_mask();
    int m = std::popcount(keep);
    if (m < 1) throw std::invalid_argument("induced subgraph must keep at least one vertex");
    std::vector<int> map(static_cast<std::size_t>(n_), -1);
    int next = 0;
    for (int v = 0; v < n_; ++v)
        if (keep & bit(v)) map[static_cast<std::size_t>(v)] = next++;
    Graph out(m);
    for (int u = 0; u < n_; ++u) {
        if (!(keep & bit(u))) continue;
        std::uint64_t row = adj_[static_cast<std::size_t>(u)] & keep;
        for (int v : bits_of(row))
            if (v > u) out.add_edge(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]);
    }
    if (!labels_.empty())
        for (int v = 0; v < n_; ++v)
            if (keep & bit(v)) out.set_label(map[static_cast<std::size_t>(v)], labels_[static_cast<std::size_t>(v)]);
    return out;
}

Graph Graph::permuted(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
    Graph out(n_);
    for (int u = 0; u < n_; ++u)
        for (int v : bits_of(adj_[static_cast<std::size_t>(u)]))
            if (v > u) out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    if (!labels_.empty())
        for (int v = 0; v < n_; ++v) out.set_label(perm[static_cast<std::size_t>(v)], labels_[static_cast<std::size_t>(v)]);
    return out;
}

std::uint64_t Graph::vertex_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (bit(n_) - 1);
}

std::vector<int> bits_of(std::uint64_t mask) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(std::popcount(mask)));
    while (mask) {
        int v = std::countr_zero(mask);
        out.push_back(v);
        mask &= mask - 1;
    }
    return out;
}

bool is_connected(const Graph& g) {
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (int v : bits_of(frontier)) next |= g.neighbors(v);
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == g.vertex_mask();
}

namespace {

// Hopcroft-Tarjan articulation-point scan.
struct ArticulationScan {
    const Graph& g;
    std::vector<int> disc, low, parent;
    int timer = 0;
    bool has_cut = false;

    explicit ArticulationScan(const Graph& graph)
        : g(graph),
          disc(static_cast<std::size_t>(graph.size()), -1),
          low(static_cast<std::size_t>(graph.size()), -1),
          parent(static_cast<std::size_t>(graph.size()), -1) {}

    void dfs(int u) {
        disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
        int children = 0;
        for (int v : bits_of(g.neighbors(u))) {
            if (disc[static_cast<std::size_t>(v)] == -1) {
                ++children;
                parent[static_cast<std::size_t>(v)] = u;
                dfs(v);
                low[static_cast<std::size_t>(u)] =
                    std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(v)]);
                if (parent[static_cast<std::size_t>(u)] == -1 && children > 1) has_cut = true;
                if (parent[static_cast<std::size_t>(u)] != -1 &&
                    low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(u)])
                    has_cut = true;
            } else if (v != parent[static_cast<std::size_t>(u)]) {
                low[static_cast<std::size_t>(u)] =
                    std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(v)]);
            }
        }
    }
};

}  // namespace

bool is_biconnected(const Graph& g) {
    if (g.size() == 1) return true;
    if (!is_connected(g)) return false;
    if (g.size() == 2) return true;  // K2 by convention
    ArticulationScan scan(g);
    scan.dfs(0);
    return !scan.has_cut;
}

namespace {

void extend_cliques(const Graph& g, std::uint64_t current, std::uint64_t candidates, int remaining,
                    std::vector<std::uint64_t>& out, bool first_only, bool& found) {
    if (remaining == 0) {
        out.push_back(current);
        found = true;
        return;
    }
    if (std::popcount(candidates) < remaining) return;
    std::uint64_t cand = candidates;
    while (cand) {
        if (first_only && found) return;
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        // Only extend upward so every clique appears once.
        extend_cliques(g, current | (std::uint64_t{1} << v), candidates & g.neighbors(v) & ~((std::uint64_t{2} << v) - 1),
                       remaining - 1, out, first_only, found);
        // Prune: not enough vertices left even taking all of cand.
        if (std::popcount(cand) < remaining) return;
    }
}

}  // namespace

std::vector<std::uint64_t> cliques_of_size(const Graph& g, int k) {
    if (k < 1 || k > g.size()) throw std::invalid_argument("clique size out of range");
    std::vector<std::uint64_t> out;
    bool found = false;
    std::uint64_t all = g.vertex_mask();
    // Candidates restricted to v..n-1 at each step keeps masks ascending.
    std::uint64_t cand = all;
    while (cand) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        extend_cliques(g, std::uint64_t{1} << v, g.neighbors(v) & ~((std::uint64_t{2} << v) - 1), k - 1, out,
                       false, found);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool has_clique(const Graph& g, int k) {
    if (k < 1) return true;
    if (k > g.size()) return false;
    std::vector<std::uint64_t> out;
    bool found = false;
    std::uint64_t cand = g.vertex_mask();
    while (cand && !found) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        extend_cliques(g, std::uint64_t{1} << v, g.neighbors(v) & ~((std::uint64_t{2} << v) - 1), k - 1, out,
                       true, found);
    }
    return found;
}

int max_clique_size(const Graph& g) {
    int k = 1;
    while (k < g.size() && has_clique(g, k + 1)) ++k;
    return k;
}

namespace {

// Backtracking monomorphism search. Pattern vertices are matched in order of
// decreasing degree; candidate sets shrink by adjacency with mapped
// neighbours. Only pattern edges constrain (not-necessarily-induced).
struct MonoSearch {
    const Graph& g;
    const Graph& p;
    std::vector<int> order;           // pattern vertices in match order
    std::vector<int> image;           // pattern vertex -> g vertex or -1
    std::uint64_t used = 0;
    int pin = -1;
    long count = 0;
    bool stop_at_first = false;
    bool found = false;

    MonoSearch(const Graph& host, const Graph& pattern) : g(host), p(pattern) {
        order.resize(static_cast<std::size_t>(p.size()));
        for (int i = 0; i < p.size(); ++i) order[static_cast<std::size_t>(i)] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (p.degree(a) != p.degree(b)) return p.degree(a) > p.degree(b);
            return a < b;
        });
        image.assign(static_cast<std::size_t>(p.size()), -1);
    }

    void run(std::size_t depth) {
        if (stop_at_first && found) return;
        if (depth == order.size()) {
            if (pin >= 0 && !(used & (std::uint64_t{1} << pin))) return;
            ++count;
            found = true;
            return;
        }
        int pv = order[depth];
        std::uint64_t cand = g.vertex_mask() & ~used;
        for (int q : bits_of(p.neighbors(pv))) {
            int im = image[static_cast<std::size_t>(q)];
            if (im >= 0) cand &= g.neighbors(im);
        }
        for (int candidate : bits_of(cand)) {
            if (g.degree(candidate) < p.degree(pv)) continue;
            image[static_cast<std::size_t>(pv)] = candidate;
            used |= std::uint64_t{1} << candidate;
            run(depth + 1);
            used &= ~(std::uint64_t{1} << candidate);
            image[static_cast<std::size_t>(pv)] = -1;
            if (stop_at_first && found) return;
        }
    }
};

}  // namespace

bool contains_subgraph(const Graph& g, const Graph& pattern) {
    if (pattern.size() > g.size()) throw std::invalid_argument("pattern larger than host graph");
    MonoSearch search(g, pattern);
    search.stop_at_first = true;
    search.run(0);
    return search.found;
}

bool contains_subgraph_using(const Graph& g, const Graph& pattern, int pin) {
    if (pattern.size() > g.size()) throw std::invalid_argument("pattern larger than host graph");
    MonoSearch search(g, pattern);
    search.stop_at_first = true;
    search.pin = pin;
    search.run(0);
    return search.found;
}

long count_subgraph_embeddings(const Graph& g, const Graph& pattern) {
    if (pattern.size() > g.size()) throw std::invalid_argument("pattern larger than host graph");
    MonoSearch search(g, pattern);
    search.run(0);
    auto aut = canonical_form(pattern).automorphism_count;
    return static_cast<long>(search.count / static_cast<long>(aut));
}

}  // namespace tifs
