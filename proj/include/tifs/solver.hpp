#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tifs/graph.hpp"

namespace tifs {

// Noncontextual truth assignment: no edge has both endpoints true
// (exclusiveness) and every d-clique has exactly one true vertex
// (completeness plus exclusiveness).
struct Assignment {
    int n = 0;
    std::uint64_t true_mask = 0;

    bool value(int v) const { return (true_mask >> v) & 1; }
    std::vector<bool> to_bools() const;
};

struct PartialAssignment {
    std::uint64_t set_true = 0;
    std::uint64_t set_false = 0;

    PartialAssignment& with_true(int v) {
        set_true |= std::uint64_t{1} << v;
        return *this;
    }
    PartialAssignment& with_false(int v) {
        set_false |= std::uint64_t{1} << v;
        return *this;
    }
};

// Complete backtracking with unit propagation over edges and d-cliques.
// Branches on the lowest-index undetermined vertex, true first.
std::optional<Assignment> find_assignment(const Graph& g, int d, const PartialAssignment& fixed = {});
std::uint64_t count_assignments(const Graph& g, int d, const PartialAssignment& fixed = {});

// True iff no valid assignment has a and b both true, and some valid
// assignment has a true. The first conjunct alone is the raw joint
// unsatisfiability test; both verdicts appear in certificates.
bool is_tifs(const Graph& g, int d, int a, int b);
bool is_tits(const Graph& g, int d, int a, int c);
bool is_true_iff_true(const Graph& g, int d, int a, int c);

// pre: is_tifs(g, d, a, b). Removing any vertex other than a, b must destroy
// the property (removing a or b destroys the designated pair by definition).
bool is_critical_tifs(const Graph& g, int d, int a, int b);

enum class Kind { TIFS, TITS, TRUE_IFF_TRUE, NONE };

const char* kind_name(Kind kind);
Kind kind_from_name(std::string_view name);

struct Classification {
    Kind kind = Kind::NONE;
    int a = -1;
    int b_or_c = -1;
    std::optional<Assignment> witness_sat;  // valid assignment with a true
    bool raw_step2_verdict = false;
    bool refuted_by_exhaustion = true;
};

// All positive verdicts: every ordered non-adjacent pair tested for TIFS and
// TITS, every unordered pair for true-iff-true. Deterministic order.
std::vector<Classification> classify_all_pairs(const Graph& g, int d);

}  // namespace tifs
