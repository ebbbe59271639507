#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tifs/graph.hpp"
#include "tifs/solver.hpp"

namespace tifs {

// One canonical-augmentation run: exactly one representative per isomorphism
// class of n-vertex graphs. With filters on, graphs containing a forbidden
// pattern of dimension d or a K(d+1) are pruned during augmentation
// (hereditary), and the survivors additionally pass the terminal dimension
// filters. Shards partition the augmentation tree at a fixed depth; their
// union covers it exactly once.
struct SearchSpec {
    int n = 1;
    int d = 3;
    bool apply_filters = true;
    int shard_index = 0;
    int shard_count = 1;
    int shard_depth = 0;  // 0 selects a default depth
    std::string checkpoint_path;
};

void generate(const SearchSpec& spec, const std::function<void(const Graph&)>& emit);
std::vector<Graph> generate_all(const SearchSpec& spec);

// Runs every shard (one thread each) and merges results in shard order, so
// the output is independent of scheduling. Checkpoint lines record finished
// shards as "n shard_index count graph6..."; completed shards are skipped on
// rerun.
std::vector<Graph> generate_parallel(int n, int d, bool filters, int workers,
                                     const std::string& checkpoint_path = "");

enum class RealizabilityCheck {
    FamilyMatch,      // designated-isomorphic to a constructed family member
    NumericWitness,   // descent produced vectors that verify faithfully
    Unconfirmed,      // no realization found; reported but not counted
};

struct TifsCertificate {
    Graph graph;
    std::string graph6;
    int d = 3;
    int a = 0;
    int b = 0;
    Assignment witness;
    bool raw_step2_verdict = true;
    RealizabilityCheck realizability = RealizabilityCheck::Unconfirmed;
    double witness_residual = 0.0;  // worst edge overlap of the numeric witness
    std::vector<std::uint8_t> designated_key;
};

struct SearchReport {
    int d = 3;
    int n_max = 0;
    int first_hit_n = -1;  // -1: no confirmed TIFS found up to n_max
    std::vector<TifsCertificate> tifs_found;    // confirmed, deduplicated, sorted by designated key
    std::vector<TifsCertificate> unconfirmed;   // assignment-level TIFS with no realization found
    int distinct_graphs = 0;                    // confirmed graphs ignoring the designated pair
    long graphs_emitted = 0;                    // filter survivors inspected
    std::map<int, long> emitted_per_n;
    bool incomplete = false;
    double seconds = 0.0;
};

// Runs the filtered enumeration for n = d+1 .. n_max, classifies every
// survivor, and confirms each assignment-level TIFS against a vector
// realization: the hereditary filters are necessary but not sufficient for
// realizability, and candidates whose rays would have to coincide must not
// count. The search stops at the first vertex count with a confirmed TIFS.
// A nonzero time budget turns an overrun into an incomplete report.
SearchReport search_minimal_tifs(int d, int n_max, int workers = 1, double time_budget_seconds = 0.0);

}  // namespace tifs
