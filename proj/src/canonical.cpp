#include "tifs/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <optional>
#include <stdexcept>

#include "tifs/graph_io.hpp"

namespace tifs {

namespace {

using Cells = std::vector<std::uint64_t>;

inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Equitable refinement of an ordered partition. Cells split by neighbour
// count into each splitter cell; sub-cells are ordered by count, so the
// procedure commutes with relabelling.
void refine(const Graph& g, Cells& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
            const std::uint64_t splitter = cells[s];
            for (std::size_t c = 0; c < cells.size() && !changed; ++c) {
                if (std::popcount(cells[c]) <= 1) continue;
                std::array<std::uint64_t, kMaxVertices + 1> buckets{};
                int lo = kMaxVertices + 1, hi = -1;
                for (int v : bits_of(cells[c])) {
                    int cnt = std::popcount(g.neighbors(v) & splitter);
                    buckets[static_cast<std::size_t>(cnt)] |= bit(v);
                    lo = std::min(lo, cnt);
                    hi = std::max(hi, cnt);
                }
                if (lo == hi) continue;
                Cells pieces;
                for (int cnt = lo; cnt <= hi; ++cnt)
                    if (buckets[static_cast<std::size_t>(cnt)]) pieces.push_back(buckets[static_cast<std::size_t>(cnt)]);
                cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
                changed = true;
            }
        }
    }
}

Cells individualized(const Cells& cells, std::size_t cell_idx, int v) {
    Cells out;
    out.reserve(cells.size() + 1);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i == cell_idx) {
            out.push_back(bit(v));
            std::uint64_t rest = cells[i] & ~bit(v);
            if (rest) out.push_back(rest);
        } else {
            out.push_back(cells[i]);
        }
    }
    return out;
}

int first_nonsingleton(const Cells& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (std::popcount(cells[i]) > 1) return static_cast<int>(i);
    return -1;
}

// Backtracking search for an automorphism of g mapping the src partition
// cell-by-cell onto the tgt partition. Both inputs must be refined.
std::optional<std::vector<int>> match_cells(const Graph& g, const Cells& src, const Cells& tgt) {
    if (src.size() != tgt.size()) return std::nullopt;
    for (std::size_t i = 0; i < src.size(); ++i)
        if (std::popcount(src[i]) != std::popcount(tgt[i])) return std::nullopt;
    int ci = first_nonsingleton(src);
    if (ci == -1) {
        std::vector<int> perm(static_cast<std::size_t>(g.size()));
        for (std::size_t i = 0; i < src.size(); ++i)
            perm[static_cast<std::size_t>(std::countr_zero(src[i]))] = std::countr_zero(tgt[i]);
        for (int u = 0; u < g.size(); ++u) {
            std::uint64_t mapped = 0;
            for (int v : bits_of(g.neighbors(u))) mapped |= bit(perm[static_cast<std::size_t>(v)]);
            if (mapped != g.neighbors(perm[static_cast<std::size_t>(u)])) return std::nullopt;
        }
        return perm;
    }
    int x = std::countr_zero(src[static_cast<std::size_t>(ci)]);
    for (int y : bits_of(tgt[static_cast<std::size_t>(ci)])) {
        Cells s2 = individualized(src, static_cast<std::size_t>(ci), x);
        Cells t2 = individualized(tgt, static_cast<std::size_t>(ci), y);
        refine(g, s2);
        refine(g, t2);
        if (auto m = match_cells(g, s2, t2)) return m;
    }
    return std::nullopt;
}

std::uint64_t apply_to_mask(const std::vector<int>& perm, std::uint64_t mask) {
    std::uint64_t out = 0;
    for (int v : bits_of(mask)) out |= bit(perm[static_cast<std::size_t>(v)]);
    return out;
}

struct AutChain {
    std::uint64_t order = 1;
    std::vector<std::vector<int>> generators;
};

// Orbit-stabilizer chain on the refined partition: at each level the first
// vertex of the first non-singleton cell is the base point, its orbit inside
// Aut(g, cells) found by explicit witness searches. The transversal
// witnesses generate the whole group.
AutChain automorphism_chain(const Graph& g, Cells cells) {
    AutChain out;
    refine(g, cells);
    while (true) {
        int ci = first_nonsingleton(cells);
        if (ci == -1) break;
        const std::uint64_t cell = cells[static_cast<std::size_t>(ci)];
        int v = std::countr_zero(cell);
        std::uint64_t reached = bit(v);
        std::vector<std::vector<int>> level_gens;
        Cells base = individualized(cells, static_cast<std::size_t>(ci), v);
        refine(g, base);
        for (int u : bits_of(cell)) {
            if (reached & bit(u)) continue;
            Cells tgt = individualized(cells, static_cast<std::size_t>(ci), u);
            refine(g, tgt);
            if (auto m = match_cells(g, base, tgt)) {
                level_gens.push_back(*m);
                out.generators.push_back(std::move(*m));
                bool grew = true;
                while (grew) {
                    grew = false;
                    for (const auto& gen : level_gens) {
                        std::uint64_t img = apply_to_mask(gen, reached);
                        if (img & ~reached) {
                            reached |= img;
                            grew = true;
                        }
                    }
                }
            }
        }
        out.order *= static_cast<std::uint64_t>(std::popcount(reached));
        cells = base;
    }
    return out;
}

// Minimal-string search over the individualization-refinement tree. Rows are
// stored bit-reversed so unsigned comparison equals lexicographic comparison
// of the adjacency bit string.
struct CanonSearch {
    const Graph& g;
    const std::vector<std::vector<int>>& gens;
    std::vector<std::uint64_t> best;
    std::vector<int> best_perm;
    bool have_best = false;

    CanonSearch(const Graph& graph, const std::vector<std::vector<int>>& generators)
        : g(graph), gens(generators) {}

    static std::uint64_t leading_mask(int k) {
        if (k <= 0) return 0;
        if (k >= 64) return ~std::uint64_t{0};
        return ~std::uint64_t{0} << (64 - k);
    }

    void run(const Cells& cells, std::vector<int>& prefix) {
        int k = 0;
        while (k < static_cast<int>(cells.size()) && std::popcount(cells[static_cast<std::size_t>(k)]) == 1) ++k;

        if (have_best && k > 0) {
            // Leading k canonical positions are fixed; compare that prefix.
            std::vector<int> pos_vertex(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) pos_vertex[static_cast<std::size_t>(i)] = std::countr_zero(cells[static_cast<std::size_t>(i)]);
            const std::uint64_t mask = leading_mask(k);
            for (int i = 0; i < k; ++i) {
                std::uint64_t row = 0;
                std::uint64_t nbrs = g.neighbors(pos_vertex[static_cast<std::size_t>(i)]);
                for (int j = 0; j < k; ++j)
                    if (nbrs & bit(pos_vertex[static_cast<std::size_t>(j)])) row |= bit(63 - j);
                std::uint64_t ref = best[static_cast<std::size_t>(i)] & mask;
                if (row > ref) return;
                if (row < ref) break;
            }
        }

        if (k == static_cast<int>(cells.size())) {
            std::vector<int> perm(static_cast<std::size_t>(g.size()));
            for (std::size_t i = 0; i < cells.size(); ++i)
                perm[static_cast<std::size_t>(std::countr_zero(cells[i]))] = static_cast<int>(i);
            std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.size()), 0);
            for (int v = 0; v < g.size(); ++v) {
                std::uint64_t row = 0;
                for (int w : bits_of(g.neighbors(v))) row |= bit(63 - perm[static_cast<std::size_t>(w)]);
                rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = row;
            }
            if (!have_best || rows < best) {
                best = std::move(rows);
                best_perm = std::move(perm);
                have_best = true;
            }
            return;
        }

        std::vector<const std::vector<int>*> fixed_gens;
        for (const auto& gen : gens) {
            bool fixes = true;
            for (int p : prefix)
                if (gen[static_cast<std::size_t>(p)] != p) {
                    fixes = false;
                    break;
                }
            if (fixes) fixed_gens.push_back(&gen);
        }

        std::uint64_t tried = 0;
        for (int v : bits_of(cells[static_cast<std::size_t>(k)])) {
            if (tried && !fixed_gens.empty()) {
                std::uint64_t closed = tried;
                bool grew = true;
                while (grew) {
                    grew = false;
                    for (const auto* gen : fixed_gens) {
                        std::uint64_t img = apply_to_mask(*gen, closed);
                        if (img & ~closed) {
                            closed |= img;
                            grew = true;
                        }
                    }
                }
                if (closed & bit(v)) continue;
            }
            tried |= bit(v);
            Cells next = individualized(cells, static_cast<std::size_t>(k), v);
            refine(g, next);
            prefix.push_back(v);
            run(next, prefix);
            prefix.pop_back();
        }
    }
};

CanonicalForm canonicalize(const Graph& g, Cells initial, std::vector<std::uint8_t> byte_prefix) {
    refine(g, initial);
    AutChain chain = automorphism_chain(g, initial);

    CanonSearch search(g, chain.generators);
    std::vector<int> prefix;
    search.run(initial, prefix);

    CanonicalForm out;
    out.labeling = search.best_perm;
    out.automorphism_count = chain.order;
    out.generators = std::move(chain.generators);

    out.orbit.resize(static_cast<std::size_t>(g.size()));
    for (int v = 0; v < g.size(); ++v) out.orbit[static_cast<std::size_t>(v)] = v;
    // Union-find over the generating set.
    std::vector<int> root(static_cast<std::size_t>(g.size()));
    for (int v = 0; v < g.size(); ++v) root[static_cast<std::size_t>(v)] = v;
    auto find = [&](int v) {
        while (root[static_cast<std::size_t>(v)] != v) {
            root[static_cast<std::size_t>(v)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(v)])];
            v = root[static_cast<std::size_t>(v)];
        }
        return v;
    };
    for (const auto& gen : out.generators)
        for (int v = 0; v < g.size(); ++v) {
            int a = find(v), b = find(gen[static_cast<std::size_t>(v)]);
            if (a != b) root[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
    for (int v = 0; v < g.size(); ++v) out.orbit[static_cast<std::size_t>(v)] = find(v);

    Graph canon = g.permuted(out.labeling);
    std::string g6 = to_graph6(canon);
    out.bytes = std::move(byte_prefix);
    out.bytes.insert(out.bytes.end(), g6.begin(), g6.end());
    return out;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    Cells initial{g.vertex_mask()};
    return canonicalize(g, std::move(initial), {});
}

CanonicalForm canonical_form_colored(const Graph& g, const std::vector<int>& color) {
    if (static_cast<int>(color.size()) != g.size()) throw std::invalid_argument("one colour per vertex required");
    int max_color = 0;
    for (int c : color) {
        if (c < 0 || c >= kMaxVertices) throw std::invalid_argument("colours must be small non-negative integers");
        max_color = std::max(max_color, c);
    }
    Cells initial;
    std::vector<std::uint8_t> prefix;
    prefix.push_back(static_cast<std::uint8_t>(max_color + 1));
    for (int c = 0; c <= max_color; ++c) {
        std::uint64_t cell = 0;
        for (int v = 0; v < g.size(); ++v)
            if (color[static_cast<std::size_t>(v)] == c) cell |= std::uint64_t{1} << v;
        prefix.push_back(static_cast<std::uint8_t>(std::popcount(cell)));
        if (cell) initial.push_back(cell);
    }
    return canonicalize(g, std::move(initial), std::move(prefix));
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a).bytes == canonical_form(b).bytes;
}

Graph canonical_copy(const Graph& g) {
    auto cf = canonical_form(g);
    Graph out(g.size());
    for (auto [u, v] : g.edges())
        out.add_edge(cf.labeling[static_cast<std::size_t>(u)], cf.labeling[static_cast<std::size_t>(v)]);
    return out;
}

}  // namespace tifs
