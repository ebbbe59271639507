#pragma once

// Shared named graphs for the test suites.

#include "tifs/construct.hpp"
#include "tifs/graph.hpp"

namespace fixtures {

inline tifs::Graph bug_graph() { return tifs::bug().graph; }

inline tifs::Graph cycle(int n) {
    tifs::Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

inline tifs::Graph path(int n) {
    tifs::Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline tifs::Graph complete(int n) {
    tifs::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline tifs::Graph edgeless(int n) { return tifs::Graph(n); }

// Two triangles sharing one vertex.
inline tifs::Graph bowtie() {
    return tifs::Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
}

// K4 minus one edge.
inline tifs::Graph diamond() {
    return tifs::Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

inline tifs::Graph petersen() {
    tifs::Graph g(10);
    for (int v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);          // outer cycle
        g.add_edge(5 + v, 5 + (v + 2) % 5);  // inner pentagram
        g.add_edge(v, 5 + v);                // spokes
    }
    return g;
}

}  // namespace fixtures
