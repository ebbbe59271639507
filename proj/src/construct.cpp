#include "tifs/construct.hpp"

#include <algorithm>
#include <stdexcept>

#include "tifs/canonical.hpp"

namespace tifs {

namespace {

constexpr int kA = 0;
constexpr int kB = 7;

void verify_designated(DesignatedGraph& dg, const char* what) {
    bool ok = dg.kind == Kind::TIFS ? is_tifs(dg.graph, dg.d, dg.a, dg.b_or_c)
                                    : is_tits(dg.graph, dg.d, dg.a, dg.b_or_c);
    if (!ok) throw std::logic_error(std::string(what) + ": constructed graph failed its solver check");
}

}  // namespace

const char* state_name(CliqueVertexState s) {
    switch (s) {
        case CliqueVertexState::AdjA: return "A";
        case CliqueVertexState::AdjB: return "B";
        case CliqueVertexState::AdjBoth: return "BOTH";
    }
    return "BOTH";
}

CliqueVertexState state_from_name(std::string_view name) {
    if (name == "A" || name == "a") return CliqueVertexState::AdjA;
    if (name == "B" || name == "b") return CliqueVertexState::AdjB;
    if (name == "BOTH" || name == "both" || name == "AB" || name == "ab") return CliqueVertexState::AdjBoth;
    throw std::invalid_argument("unknown clique vertex state '" + std::string(name) + "' (expected A, B, or BOTH)");
}

std::vector<CliqueVertexState> states_from_string(std::string_view text) {
    std::vector<CliqueVertexState> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view piece = text.substr(pos, comma - pos);
        if (!piece.empty()) out.push_back(state_from_name(piece));
        pos = comma + 1;
    }
    return out;
}

std::string states_to_string(const std::vector<CliqueVertexState>& states) {
    std::string out;
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (i) out.push_back(',');
        out += state_name(states[i]);
    }
    return out;
}

DesignatedGraph bug() {
    Graph g = Graph::from_edges(8, {{kA, 1}, {kA, 2}, {1, 3}, {1, 5}, {3, 5}, {2, 4}, {2, 6}, {4, 6}, {3, 4}, {5, kB}, {6, kB}});
    g.set_label(kA, "A");
    for (int i = 1; i <= 6; ++i) g.set_label(i, "v" + std::to_string(i));
    g.set_label(kB, "B");
    DesignatedGraph out{std::move(g), kA, kB, Kind::TIFS, 3, {}};
    return out;
}

DesignatedGraph minimal_tifs(int d, std::vector<CliqueVertexState> states) {
    if (d < 3) throw std::invalid_argument("minimal_tifs requires d >= 3");
    if (static_cast<int>(states.size()) != d - 3)
        throw std::invalid_argument("minimal_tifs for d=" + std::to_string(d) + " needs exactly " +
                                    std::to_string(d - 3) + " clique vertex states, got " +
                                    std::to_string(states.size()));
    std::sort(states.begin(), states.end());
    if (d >= 5 && !states.empty()) {
        bool all_a = std::all_of(states.begin(), states.end(),
                                 [](CliqueVertexState s) { return s == CliqueVertexState::AdjA; });
        bool all_b = std::all_of(states.begin(), states.end(),
                                 [](CliqueVertexState s) { return s == CliqueVertexState::AdjB; });
        if (all_a || all_b)
            throw std::invalid_argument(
                "minimal_tifs: for d >= 5 the clique vertices must not all be adjacent only to A or only to B; "
                "both A and B need a neighbour among the vertices shared by the two complete contexts");
    }

    DesignatedGraph base = bug();
    int n = d + 5;
    Graph g(n);
    for (auto [u, v] : base.graph.edges()) g.add_edge(u, v);
    for (int v = 0; v < 8; ++v) g.set_label(v, base.graph.label(v));
    for (int k = 0; k < d - 3; ++k) {
        int w = 8 + k;
        g.set_label(w, "v" + std::to_string(7 + k));
        for (int i = 1; i <= 6; ++i) g.add_edge(w, i);
        for (int j = 0; j < k; ++j) g.add_edge(w, 8 + j);
        switch (states[static_cast<std::size_t>(k)]) {
            case CliqueVertexState::AdjA: g.add_edge(w, kA); break;
            case CliqueVertexState::AdjB: g.add_edge(w, kB); break;
            case CliqueVertexState::AdjBoth:
                g.add_edge(w, kA);
                g.add_edge(w, kB);
                break;
        }
    }
    DesignatedGraph out{std::move(g), kA, kB, Kind::TIFS, d, std::move(states)};
    verify_designated(out, "minimal_tifs");
    if (cliques_of_size(out.graph, d).size() != 2)
        throw std::logic_error("minimal_tifs: expected exactly two complete contexts");
    return out;
}

long count_state_multisets(int d) {
    if (d < 3) throw std::invalid_argument("count_state_multisets requires d >= 3");
    long k = d - 3;
    return (k + 1) * (k + 2) / 2;  // CR(3, k)
}

long count_minimal_tifs(int d) {
    if (d < 3) throw std::invalid_argument("count_minimal_tifs requires d >= 3");
    long base = static_cast<long>(d - 1) * (d - 2) / 2;
    return d <= 4 ? base : base - 2;
}

std::vector<DesignatedGraph> enumerate_minimal_tifs(int d) {
    if (d < 3) throw std::invalid_argument("enumerate_minimal_tifs requires d >= 3");
    std::vector<DesignatedGraph> out;
    std::vector<std::vector<std::uint8_t>> keys;
    int k = d - 3;
    for (int na = k; na >= 0; --na) {
        for (int nb = k - na; nb >= 0; --nb) {
            int nboth = k - na - nb;
            if (d >= 5 && k > 0 && (na == k || nb == k)) continue;
            std::vector<CliqueVertexState> states;
            states.insert(states.end(), static_cast<std::size_t>(na), CliqueVertexState::AdjA);
            states.insert(states.end(), static_cast<std::size_t>(nb), CliqueVertexState::AdjB);
            states.insert(states.end(), static_cast<std::size_t>(nboth), CliqueVertexState::AdjBoth);
            DesignatedGraph dg = minimal_tifs(d, std::move(states));
            auto key = designated_canonical_bytes(dg.graph, dg.a, dg.b_or_c);
            for (const auto& existing : keys)
                if (existing == key)
                    throw std::logic_error("enumerate_minimal_tifs: two state multisets collapsed to one graph");
            keys.push_back(std::move(key));
            out.push_back(std::move(dg));
        }
    }
    if (static_cast<long>(out.size()) != count_minimal_tifs(d))
        throw std::logic_error("enumerate_minimal_tifs: family size disagrees with the closed-form count");
    return out;
}

DesignatedGraph tits_from_tifs(const DesignatedGraph& t) {
    if (t.kind != Kind::TIFS) throw std::invalid_argument("tits_from_tifs expects a TIFS input");
    for (CliqueVertexState s : t.states)
        if (s != CliqueVertexState::AdjBoth)
            throw std::invalid_argument(
                "tits_from_tifs: every clique vertex must be adjacent to both A and B, otherwise the context "
                "{clique vertices, auxiliary, B, C} is not complete and C is never forced");
    const Graph& g = t.graph;
    int n = g.size();
    int aux = n, c = n + 1;
    Graph out(n + 2);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (int v = 0; v < n; ++v) out.set_label(v, g.label(v));
    out.set_label(aux, "v" + std::to_string(t.d + 4));
    out.set_label(c, "C");
    out.add_edge(aux, t.a);
    out.add_edge(aux, t.b_or_c);
    out.add_edge(aux, c);
    out.add_edge(c, t.b_or_c);
    for (int k = 0; k < t.d - 3; ++k) {
        out.add_edge(aux, 8 + k);
        out.add_edge(c, 8 + k);
    }
    DesignatedGraph result{std::move(out), t.a, c, Kind::TITS, t.d, t.states};
    verify_designated(result, "tits_from_tifs");
    if (cliques_of_size(result.graph, result.d).size() != 3)
        throw std::logic_error("tits_from_tifs: expected exactly three complete contexts");
    return result;
}

std::vector<DesignatedGraph> tifs_from_tits(const DesignatedGraph& t) {
    if (t.kind != Kind::TITS) throw std::invalid_argument("tifs_from_tits expects a TITS input");
    const Graph& g = t.graph;
    int a = t.a, c = t.b_or_c;
    if (a == c || g.has_edge(a, c)) throw std::invalid_argument("tifs_from_tits: designated pair must be distinct and non-exclusive");
    std::uint64_t common = g.neighbors(a) & g.neighbors(c);
    std::uint64_t removed = common | (std::uint64_t{1} << c);
    std::uint64_t keep = g.vertex_mask() & ~removed;
    Graph reduced = g.induced(keep);
    // Dense reindex map for surviving vertices.
    std::vector<int> map(static_cast<std::size_t>(g.size()), -1);
    int next = 0;
    for (int v = 0; v < g.size(); ++v)
        if (keep & (std::uint64_t{1} << v)) map[static_cast<std::size_t>(v)] = next++;
    int d_red = max_clique_size(reduced);
    std::vector<DesignatedGraph> out;
    if (d_red >= 3) {
        std::uint64_t candidates = g.neighbors(c) & ~g.neighbors(a) & keep;
        for (int b : bits_of(candidates)) {
            if (b == a) continue;
            int a2 = map[static_cast<std::size_t>(a)];
            int b2 = map[static_cast<std::size_t>(b)];
            if (is_tifs(reduced, d_red, a2, b2))
                out.push_back(DesignatedGraph{reduced, a2, b2, Kind::TIFS, d_red, {}});
        }
    }
    if (out.empty())
        throw std::runtime_error("tifs_from_tits: no vertex adjacent to C but not A yields a TIFS; "
                                 "the input is not a critical TITS of the expected shape");
    return out;
}

std::vector<std::uint8_t> designated_canonical_bytes(const Graph& g, int a, int b_or_c) {
    std::vector<int> color(static_cast<std::size_t>(g.size()), 2);
    color[static_cast<std::size_t>(a)] = 0;
    color[static_cast<std::size_t>(b_or_c)] = 1;
    return canonical_form_colored(g, color).bytes;
}

}  // namespace tifs
