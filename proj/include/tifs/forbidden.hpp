#pragma once

#include <vector>

#include "tifs/graph.hpp"

namespace tifs {

// Nonrealizable patterns for a given dimension, built by the two-dominating-
// vertex recursion from the bases: two isolated vertices (d=1, two distinct
// rays cannot exist on a 0-sphere) and the 3-vertex path (d=2). Each step
// adds two vertices adjacent to every prior vertex, in both variants (added
// pair mutually adjacent and not), deduplicated by canonical form. Patterns
// for dimension d have d+1 vertices.
struct ForbiddenFamily {
    int dimension = 0;
    std::vector<Graph> patterns;
};

ForbiddenFamily forbidden_family(int d);

// Subset of patterns minimal under subgraph containment; excluding these
// excludes the whole family.
std::vector<Graph> effective_forbidden_patterns(int d);

// Conjunction of the survivor conditions: biconnected, minimum degree >= 2,
// no forbidden pattern of dimension d as a subgraph, no K(d+1), and at least
// two d-cliques.
bool passes_dimension_filters(const Graph& g, int d);

}  // namespace tifs
