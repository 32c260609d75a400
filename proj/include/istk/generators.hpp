#pragma once

#include <cstdint>
#include <functional>
#include <string_view>

#include "istk/graph.hpp"

namespace istk {

// Specs: path:n, cycle:n, star:n (n vertices), doublestar:a,b (adjacent
// centers with a and b leaves), caterpillar:n,legs (spine of n vertices, each
// with `legs` pendants), gnp:n=N,m=M (uniform random labeled tree plus random
// extra edges). Deterministic in (spec, seed). Throws BadSpec.
Graph generate(std::string_view spec, std::uint64_t seed);

Graph random_connected(int n, int m, std::uint64_t seed);

// Calls `visit` once per connected graph on n vertices up to isomorphism
// (n <= 8).
void for_each_connected_graph(int n, const std::function<void(const Graph&)>& visit);

}  // namespace istk
