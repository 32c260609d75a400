#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "istk/graph.hpp"

namespace istk {

enum class Format { Edgelist, Dimacs };

// "edgelist" or "dimacs"; throws BadSpec otherwise.
Format parse_format(std::string_view name);

// Edgelist: one "u v" pair of positive integers per line, '#' comments.
// Labels are renumbered to 1..n in ascending order and kept on the graph.
// DIMACS: "p edge n m" then "e u v" lines; 'c' lines are comments.
// Throws ParseError, NotSimple or Disconnected.
Graph parse_graph(std::istream& in, Format format);
Graph parse_graph(std::string_view text, Format format);
Graph read_graph_file(const std::string& path, Format format);

// Edge list in the graph's original labels. Throws ParseError on malformed
// lines and UnknownVertex on labels the graph does not have.
std::vector<Edge> parse_edges(std::istream& in, const Graph& graph);
std::vector<Edge> parse_edges(std::string_view text, const Graph& graph);

// "u v" lines with original labels.
std::string to_edgelist(const Graph& graph, std::span<const Edge> edges);
std::string to_edgelist(const Graph& graph);

}  // namespace istk
