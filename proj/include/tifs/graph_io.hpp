#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tifs/graph.hpp"

namespace tifs {

// Parse failure with the byte offset of the offending input position.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

enum class GraphFormat { Graph6, Dot, Json };

std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

// DOT output draws each complete context (d-clique, when d is given) as one
// coloured clique, echoing how Greechie diagrams draw contexts as single
// smooth lines; edges outside every context stay grey.
std::string to_dot(const Graph& g, std::optional<int> context_dimension = std::nullopt);
Graph from_dot(std::string_view text);  // parses this tool's own DOT shape

std::string to_json(const Graph& g);
Graph from_json(std::string_view text);

std::string serialize(const Graph& g, GraphFormat format, std::optional<int> context_dimension = std::nullopt);
Graph parse(std::string_view text, GraphFormat format);

GraphFormat format_from_name(std::string_view name);  // "graph6" | "dot" | "json"

}  // namespace tifs
