#include "tifs/graph_io.hpp"

#include <array>
#include <bit>
#include <cctype>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

namespace tifs {

namespace {

constexpr int kG6Offset = 63;

void append_bits(std::string& out, const std::vector<int>& bits) {
    int acc = 0, filled = 0;
    for (int b : bits) {
        acc = (acc << 1) | b;
        if (++filled == 6) {
            out.push_back(static_cast<char>(acc + kG6Offset));
            acc = 0;
            filled = 0;
        }
    }
    if (filled > 0) {
        acc <<= (6 - filled);
        out.push_back(static_cast<char>(acc + kG6Offset));
    }
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.size();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Offset));
    } else {
        // 18-bit size form, per the published format.
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Offset));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Offset));
        out.push_back(static_cast<char>((n & 63) + kG6Offset));
    }
    std::vector<int> bits;
    bits.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? 1 : 0);
    append_bits(out, bits);
    return out;
}

Graph from_graph6(std::string_view text) {
    if (text.empty()) throw parse_error("empty graph6 input", 0);
    std::size_t pos = 0;
    auto need = [&](std::size_t i) -> int {
        if (i >= text.size()) throw parse_error("unexpected end of graph6 input", i);
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < kG6Offset || c > 126) throw parse_error("invalid graph6 character", i);
        return c - kG6Offset;
    };
    long n;
    if (static_cast<unsigned char>(text[0]) == 126) {
        if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126)
            throw parse_error("graph6 sizes beyond 64 vertices are not supported", 1);
        n = (static_cast<long>(need(1)) << 12) | (static_cast<long>(need(2)) << 6) | need(3);
        pos = 4;
    } else {
        n = need(0);
        pos = 1;
    }
    if (n < 1 || n > kMaxVertices) throw parse_error("graph6 vertex count out of supported range 1..64", 0);
    Graph g(static_cast<int>(n));
    const long nbits = n * (n - 1) / 2;
    const long nbytes = (nbits + 5) / 6;
    if (static_cast<long>(text.size()) - static_cast<long>(pos) < nbytes)
        throw parse_error("truncated graph6 adjacency data", text.size());
    if (static_cast<long>(text.size()) - static_cast<long>(pos) > nbytes)
        throw parse_error("trailing bytes after graph6 adjacency data", pos + static_cast<std::size_t>(nbytes));
    long bit_index = 0;
    for (long k = 0; k < nbytes; ++k) {
        int val = need(pos + static_cast<std::size_t>(k));
        for (int b = 5; b >= 0; --b) {
            int on = (val >> b) & 1;
            if (bit_index < nbits) {
                // bit order: columns j = 1..n-1, rows i = 0..j-1
                long idx = bit_index;
                long j = 1;
                while (idx >= j) idx -= j, ++j;
                if (on) g.add_edge(static_cast<int>(idx), static_cast<int>(j));
            } else if (on) {
                throw parse_error("nonzero padding bits in graph6 data", pos + static_cast<std::size_t>(k));
            }
            ++bit_index;
        }
    }
    return g;
}

namespace {

const std::array<const char*, 8> kContextPalette = {
    "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666",
};

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::string to_dot(const Graph& g, std::optional<int> context_dimension) {
    std::ostringstream os;
    os << "graph exclusivity {\n";
    os << "  layout=neato;\n";
    os << "  node [shape=circle fontsize=10];\n";
    for (int v = 0; v < g.size(); ++v)
        os << "  v" << v << " [label=\"" << dot_escape(g.label(v)) << "\"];\n";
    std::vector<std::uint64_t> contexts;
    if (context_dimension && *context_dimension >= 1 && *context_dimension <= g.size())
        contexts = cliques_of_size(g, *context_dimension);
    std::uint64_t context_edges_u[kMaxVertices] = {};
    for (std::size_t c = 0; c < contexts.size(); ++c) {
        const char* color = kContextPalette[c % kContextPalette.size()];
        auto members = bits_of(contexts[c]);
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                os << "  v" << members[i] << " -- v" << members[j] << " [color=\"" << color
                   << "\" penwidth=2.2];\n";
                context_edges_u[members[i]] |= std::uint64_t{1} << members[j];
            }
    }
    for (auto [u, v] : g.edges())
        if (!(context_edges_u[u] & (std::uint64_t{1} << v)))
            os << "  v" << u << " -- v" << v << " [color=gray50];\n";
    os << "}\n";
    return os.str();
}

Graph from_dot(std::string_view text) {
    // Accepts the subset emitted by to_dot: "vI [label=...]" and "vI -- vJ".
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, std::string>> labels;
    int max_vertex = -1;
    bool saw_header = false;

    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        const std::size_t base = pos;
        std::size_t p = 0;
        auto skip_ws = [&] {
            while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
        };
        auto read_vertex = [&]() -> int {
            if (p >= line.size() || line[p] != 'v') throw parse_error("expected vertex token in dot input", base + p);
            ++p;
            std::size_t start = p;
            while (p < line.size() && std::isdigit(static_cast<unsigned char>(line[p]))) ++p;
            if (p == start) throw parse_error("expected vertex number in dot input", base + p);
            return std::stoi(std::string(line.substr(start, p - start)));
        };
        skip_ws();
        if (p < line.size() && line.substr(p).starts_with("graph")) {
            saw_header = true;
        } else if (p < line.size() && line[p] == 'v') {
            int u = read_vertex();
            max_vertex = std::max(max_vertex, u);
            skip_ws();
            if (line.substr(p).starts_with("--")) {
                p += 2;
                skip_ws();
                int v = read_vertex();
                max_vertex = std::max(max_vertex, v);
                edges.emplace_back(u, v);
            } else if (line.substr(p).starts_with("[label=\"")) {
                p += 8;
                std::string label;
                while (p < line.size() && line[p] != '"') {
                    if (line[p] == '\\' && p + 1 < line.size()) ++p;
                    label.push_back(line[p]);
                    ++p;
                }
                if (p >= line.size()) throw parse_error("unterminated dot label", base + p);
                labels.emplace_back(u, label);
            }
        }
        pos = eol + 1;
    }
    if (!saw_header) throw parse_error("missing dot graph header", 0);
    if (max_vertex < 0) throw parse_error("no vertices in dot input", 0);
    Graph g(max_vertex + 1);
    for (auto [u, v] : edges)
        if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
    for (auto& [v, label] : labels) g.set_label(v, label);
    return g;
}

std::string to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.size();
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (g.has_labels()) {
        auto labels = nlohmann::json::array();
        for (int v = 0; v < g.size(); ++v) labels.push_back(g.label(v));
        j["labels"] = std::move(labels);
    }
    return j.dump();
}

Graph from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("invalid json: ") + e.what(), e.byte);
    }
    if (!j.contains("n") || !j["n"].is_number_integer()) throw parse_error("json graph requires integer field 'n'", 0);
    int n = j["n"].get<int>();
    if (n < 1 || n > kMaxVertices) throw parse_error("json graph size out of range 1..64", 0);
    Graph g(n);
    if (j.contains("edges")) {
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2) throw parse_error("json edge must be a pair", 0);
            int u = e[0].get<int>(), v = e[1].get<int>();
            if (u < 0 || u >= n || v < 0 || v >= n || u == v)
                throw parse_error("json edge endpoints out of range", 0);
            if (!g.has_edge(u, v)) g.add_edge(u, v);
        }
    }
    if (j.contains("labels")) {
        const auto& labels = j["labels"];
        if (!labels.is_array() || static_cast<int>(labels.size()) != n)
            throw parse_error("json labels must list one entry per vertex", 0);
        for (int v = 0; v < n; ++v) g.set_label(v, labels[static_cast<std::size_t>(v)].get<std::string>());
    }
    return g;
}

std::string serialize(const Graph& g, GraphFormat format, std::optional<int> context_dimension) {
    switch (format) {
        case GraphFormat::Graph6: return to_graph6(g);
        case GraphFormat::Dot: return to_dot(g, context_dimension);
        case GraphFormat::Json: return to_json(g);
    }
    throw std::logic_error("unknown graph format");
}

Graph parse(std::string_view text, GraphFormat format) {
    switch (format) {
        case GraphFormat::Graph6: return from_graph6(text);
        case GraphFormat::Dot: return from_dot(text);
        case GraphFormat::Json: return from_json(text);
    }
    throw std::logic_error("unknown graph format");
}

GraphFormat format_from_name(std::string_view name) {
    if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
    if (name == "dot") return GraphFormat::Dot;
    if (name == "json") return GraphFormat::Json;
    throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected graph6, dot, or json)");
}

}  // namespace tifs
