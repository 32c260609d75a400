#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "istk/graph.hpp"
#include "istk/local_search.hpp"
#include "istk/tree.hpp"

namespace istk {

// Independent leaf set L' with |L'| >= 2|N_G(L')| extracted from one
// component T0 of T - C(T), plus the partitions used to certify it.
struct ReducibleStructure {
    std::vector<Edge> critical;
    std::vector<Vertex> d_b;
    std::vector<Vertex> component;  // V(T0)
    std::vector<Vertex> x, y;       // leaves / internal vertices of T0
    std::vector<Vertex> x1, x2, x3;
    std::vector<Vertex> y1, y2, y3, y4;
    std::vector<Vertex> independent;  // L' = X2
};

// S, L with N_G(L) = S and each s owning two private neighbors in L.
struct ExpansionPair {
    std::vector<Vertex> s;
    std::vector<Vertex> l;
    std::vector<std::pair<Vertex, Vertex>> assignment;  // parallel to s
};

// Everything needed to replay or undo one graph reduction.
struct ReductionStep {
    std::shared_ptr<const Graph> source;
    ExpansionPair pair;
    std::vector<Vertex> attachment;    // N_G(S) \ L, source ids
    std::vector<Edge> bipartite_tree;  // spanning tree of the (S, L) bipartite subgraph
    std::optional<int> k_before, k_after;
    int reduced_order = 0;
    Vertex s_vertex = 0;  // v_S in the reduced graph
    Vertex l_vertex = 0;  // v_L in the reduced graph
    std::vector<Vertex> origin;  // reduced id -> source id, 0 for v_S and v_L
};

struct Reduction {
    Graph reduced;
    std::optional<int> k;
    ReductionStep step;
};

// S and L cover the whole graph; opt(G) = 2|S| - 1 and `witness` attains it.
struct DegenerateAnswer {
    int opt = 0;
    SpanningTree witness;
};

// Tree edges joining two internal vertices that no good edge crosses.
// Throws PreconditionViolation unless `tree` is maximal.
std::vector<Edge> critical_edges(const Graph& graph, const SpanningTree& tree);

// The D_B(T) vertices. Throws PreconditionViolation unless `tree` is maximal.
std::vector<Vertex> d_b_set(const Graph& graph, const SpanningTree& tree);

// Throws PreconditionViolation unless `tree` is maximal with more leaves than
// internal vertices and the graph has at least four vertices.
ReducibleStructure find_reducible(const Graph& graph, const SpanningTree& tree);

// Pairs (u, w) of D(T) \ D_B(T) in one component of T - C(T) whose tree path
// has no internal non-detachable vertex that every leaf reaches only through
// D(T). Empty on every maximal tree that is not a path.
std::vector<std::pair<Vertex, Vertex>> separation_violations(const Graph& graph, const SpanningTree& tree);

// Extracts an inclusion-minimal expansion pair from L'. Throws
// PreconditionViolation when L' is not independent, has an isolated vertex,
// or |L'| < 2|N_G(L')|.
ExpansionPair two_expansion(const Graph& graph, std::span<const Vertex> independent);

// Spanning tree of the (S, L) bipartite subgraph where every s is internal and
// exactly |S| - 1 vertices of L are internal. Throws InvalidPair.
std::vector<Edge> expansion_tree(const Graph& graph, const ExpansionPair& pair);

std::variant<Reduction, DegenerateAnswer> apply_reduction(const Graph& graph, std::optional<int> k,
                                                          const ExpansionPair& pair);

// Spanning tree of step.source with |I| >= |I(reduced)| + 2|S| - 2. Throws
// InvalidTree or LiftBoundViolated.
SpanningTree lift_tree(const ReductionStep& step, const SpanningTree& reduced);

// Lifts a tree of the last graph in `trace` back to the first source graph.
SpanningTree lift_through(const std::vector<ReductionStep>& trace, SpanningTree tree);

}  // namespace istk
