#pragma once

#include <optional>
#include <span>
#include <string>

#include "istk/graph.hpp"
#include "istk/tree.hpp"

namespace istk {

inline constexpr int kDefaultOracleCap = 16;

struct OptResult {
    int opt = 0;
    SpanningTree witness;
};

// Maximum internal-vertex count over all spanning trees, by exhaustive
// include/exclude branching on edges. Throws TooLarge when n > cap.
OptResult opt_bruteforce(const Graph& graph, int cap = kDefaultOracleCap);

struct Verdict {
    bool accepted = false;
    std::string reason;
};

// Accepts iff `edges` is a spanning tree of `graph` with at least k internal
// vertices; structural problems are reported in `reason`.
Verdict verify_certificate(const Graph& graph, std::span<const Edge> edges, int k);

}  // namespace istk
