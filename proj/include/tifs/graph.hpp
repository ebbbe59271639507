#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tifs {

inline constexpr int kMaxVertices = 64;

// Undirected simple graph on 1..64 vertices. Vertices are 0..n-1 and each
// adjacency row is a single 64-bit mask, so neighbourhood intersections and
// clique tests are plain word operations. Adjacency means exclusiveness
// (orthogonality of the corresponding rays).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

    int size() const { return n_; }
    int edge_count() const;

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    std::uint64_t neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const;
    int min_degree() const;

    // Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool has_labels() const { return !labels_.empty(); }
    void set_label(int v, std::string label);
    std::string label(int v) const;  // vertex index as text when unlabeled
    const std::vector<std::string>& labels() const { return labels_; }

    // Induced subgraph on the other vertices, reindexed densely. Labels follow.
    Graph delete_vertex(int v) const;
    // Relabelling: vertex v of *this becomes perm[v] in the result.
    Graph permuted(std::span<const int> perm) const;
    // Induced subgraph on the vertices of `keep`, reindexed densely.
    Graph induced(std::uint64_t keep) const;

    std::uint64_t vertex_mask() const;
    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<std::string> labels_;  // empty, or one entry per vertex
};

bool is_connected(const Graph& g);
// Connected with no cut vertex. K2 and K1 count as biconnected.
bool is_biconnected(const Graph& g);

// Every k-subset of mutually adjacent vertices as a bitmask, in increasing
// numeric order of the mask. k must be in 1..n.
std::vector<std::uint64_t> cliques_of_size(const Graph& g, int k);
bool has_clique(const Graph& g, int k);
int max_clique_size(const Graph& g);

// Not-necessarily-induced embedding: some injective vertex map sends every
// pattern edge to an edge of g.
bool contains_subgraph(const Graph& g, const Graph& pattern);
// Same, but the embedding must cover vertex `pin` of g.
bool contains_subgraph_using(const Graph& g, const Graph& pattern, int pin);
// Number of distinct embeddings, counted modulo pattern automorphisms.
long count_subgraph_embeddings(const Graph& g, const Graph& pattern);

std::vector<int> bits_of(std::uint64_t mask);

}  // namespace tifs
