#pragma once

#include <cstdint>
#include <vector>

#include "tifs/graph.hpp"

namespace tifs {

// Canonical labelling with exact automorphism data. Two graphs have equal
// bytes iff they are isomorphic; automorphism_count is the order of the
// automorphism group and generators generate it.
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;
    std::vector<int> labeling;  // input vertex -> canonical position
    std::uint64_t automorphism_count = 1;
    std::vector<int> orbit;     // smallest vertex of each vertex's orbit
    std::vector<std::vector<int>> generators;
};

CanonicalForm canonical_form(const Graph& g);

// Colour-respecting variant: only bijections preserving `color` are
// considered and the colour histogram is folded into bytes. Colours must be
// 0-based small integers.
CanonicalForm canonical_form_colored(const Graph& g, const std::vector<int>& color);

bool isomorphic(const Graph& a, const Graph& b);

// Canonically relabelled copy (labels dropped).
Graph canonical_copy(const Graph& g);

}  // namespace tifs
