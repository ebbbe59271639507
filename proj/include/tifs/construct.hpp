#pragma once

#include <string>
#include <vector>

#include "tifs/graph.hpp"
#include "tifs/solver.hpp"

namespace tifs {

// Attachment state of a vertex added to the shared clique of the minimal
// construction: adjacent to the true vertex A, to the false vertex B, or to
// both.
enum class CliqueVertexState { AdjA, AdjB, AdjBoth };

const char* state_name(CliqueVertexState s);
CliqueVertexState state_from_name(std::string_view name);
// Comma-separated list, e.g. "A,B,BOTH"; empty string means no states.
std::vector<CliqueVertexState> states_from_string(std::string_view text);
std::string states_to_string(const std::vector<CliqueVertexState>& states);

struct DesignatedGraph {
    Graph graph;
    int a = 0;        // designated true vertex
    int b_or_c = 0;   // designated false vertex (TIFS) or forced-true vertex (TITS)
    Kind kind = Kind::TIFS;
    int d = 3;
    std::vector<CliqueVertexState> states;
};

// The 8-vertex, 11-edge Specker bug with designated pair (A, B):
// vertices A, v1..v6, B; edges A-v1, A-v2, triangles {v1,v3,v5} and
// {v2,v4,v6}, v3-v4, v5-B, v6-B.
DesignatedGraph bug();

// Minimal TIFS in dimension d: the bug plus d-3 mutually adjacent vertices,
// each adjacent to all of v1..v6 and to A and/or B per its state. For d >= 5
// the all-AdjA and all-AdjB multisets are rejected. Verified TIFS on
// construction.
DesignatedGraph minimal_tifs(int d, std::vector<CliqueVertexState> states);

// One graph per admissible state multiset; pairwise distinct under
// designated-pair-preserving isomorphism; size equals count_minimal_tifs(d).
std::vector<DesignatedGraph> enumerate_minimal_tifs(int d);

// (d-1)(d-2)/2 for d in {3,4}; two fewer for d >= 5.
long count_minimal_tifs(int d);
// Combinations with repetition of the three states, before any exclusion.
long count_state_multisets(int d);

// Minimal TITS with d+7 propositions: adds an auxiliary vertex (adjacent to
// A, the clique vertices, B, and C) and the target C (adjacent to the clique
// vertices, the auxiliary vertex, and B), so those d vertices form the third
// complete context that forces C true. Requires every clique vertex adjacent
// to both A and B. Verified TITS on construction.
DesignatedGraph tits_from_tifs(const DesignatedGraph& t);

// Reduction to the contained TIFS: remove C and every common neighbour of A
// and C, then return one designated TIFS per vertex B (adjacent to C but not
// to A) for which the property verifies. The reduced graph is checked at the
// dimension of its own largest complete context.
std::vector<DesignatedGraph> tifs_from_tits(const DesignatedGraph& t);

// Colour-respecting canonical bytes with the designated pair distinguished.
std::vector<std::uint8_t> designated_canonical_bytes(const Graph& g, int a, int b_or_c);

}  // namespace tifs
