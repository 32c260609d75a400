#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "istk/graph.hpp"
#include "istk/tree.hpp"

namespace istk {

// Cotree edge joining leaf `leaf` to internal vertex `internal`. The leaf is
// always listed first.
struct GoodEdge {
    Vertex leaf = 0;
    Vertex internal = 0;

    friend auto operator<=>(const GoodEdge&, const GoodEdge&) = default;
};

// Tree edge crossed by a good edge, oriented so that `near` is the endpoint
// closer to the good edge's leaf.
struct CrossedEdge {
    Vertex near = 0;
    Vertex far = 0;

    friend auto operator<=>(const CrossedEdge&, const CrossedEdge&) = default;
};

enum class ExchangeRule { R1, R2a, R2b, R2c, R2d };

const char* to_string(ExchangeRule rule);

struct EdgeSwap {
    Edge removed;
    Edge added;

    friend bool operator==(const EdgeSwap&, const EdgeSwap&) = default;
};

// One application of an exchange rule. For R2b/R2c/R2d the mandated Rule-1
// follow-ups are part of the same step.
struct ExchangeStep {
    ExchangeRule rule = ExchangeRule::R1;
    EdgeSwap swap;
    std::vector<EdgeSwap> follow_ups;
    int internal_before = 0;
    int internal_after = 0;

    friend bool operator==(const ExchangeStep&, const ExchangeStep&) = default;
};

struct DetachableSets {
    std::vector<Vertex> degree_two;  // D2(T)
    std::vector<Vertex> all;         // D(T) = D2(T) + I3(T)
};

struct Rule2Candidate {
    ExchangeRule rule = ExchangeRule::R2a;
    GoodEdge good;
    CrossedEdge crossed;
    std::optional<Vertex> leaf_at_near;  // l_u for cases c and d
    std::optional<Vertex> leaf_at_far;   // l_v for cases b and d

    friend bool operator==(const Rule2Candidate&, const Rule2Candidate&) = default;
};

struct MaximalTree {
    SpanningTree tree;
    std::vector<ExchangeStep> steps;
};

// Per-tree bookkeeping shared by the exchange rules and the reducible
// structure extraction: good edges, the leaves that reach each internal vertex
// through a good edge, and the detachable sets.
class TreeAnalysis {
public:
    TreeAnalysis(const Graph& graph, const SpanningTree& tree);

    const Graph& graph() const { return *graph_; }
    const SpanningTree& tree() const { return *tree_; }

    // Sorted by (leaf, internal).
    const std::vector<GoodEdge>& good_edges() const { return good_; }
    // Leaves l with (l, v) a good edge, ascending. Empty for leaves.
    const std::vector<Vertex>& good_leaves(Vertex v) const { return good_leaves_[v]; }
    bool has_good_leaf_other_than(Vertex v, Vertex leaf) const;

    // First cotree edge (ascending) joining two leaves, when T is not a path.
    std::optional<Edge> leaf_pair() const { return leaf_pair_; }
    bool rule1_applicable() const { return leaf_pair_.has_value(); }

    bool in_d2(Vertex v) const { return d2_[v] != 0; }
    bool detachable(Vertex v) const { return tree_->is_branchpoint(v) || in_d2(v); }
    DetachableSets detachable_sets() const;

    // Rule-2 case test for good edge `good` and crossed edge (near, far);
    // nullopt when no case applies. Cases are tested in order a, b, c, d.
    std::optional<Rule2Candidate> match(GoodEdge good, CrossedEdge crossed) const;
    // Does the specific case and witness leaves recorded in `cand` hold?
    bool holds(const Rule2Candidate& cand) const;

private:
    void compute_d2();
    int path_sum(const std::vector<int>& prefix, const std::vector<int>& value, Vertex a, Vertex b) const;

    const Graph* graph_;
    const SpanningTree* tree_;
    std::vector<GoodEdge> good_;
    std::vector<std::vector<Vertex>> good_leaves_;
    std::optional<Edge> leaf_pair_;
    std::vector<char> d2_;
};

std::vector<GoodEdge> good_cotree_edges(const Graph& graph, const SpanningTree& tree);

// Edges of P_T(leaf, internal) in order from the leaf.
std::vector<CrossedEdge> crossed_edges(const SpanningTree& tree, GoodEdge good);

// Rule 1 on the cotree edge l1-l2. Throws NotApplicable or NoBranchpoint.
std::pair<SpanningTree, ExchangeStep> apply_rule1(const Graph& graph, const SpanningTree& tree, Vertex l1,
                                                  Vertex l2);

// Throws PreconditionViolation while Rule 1 is still applicable.
DetachableSets detachable(const Graph& graph, const SpanningTree& tree);

// First Rule-2 candidate in scan order, or nullopt. Paths have none.
// Throws PreconditionViolation while Rule 1 is still applicable.
std::optional<Rule2Candidate> find_rule2(const Graph& graph, const SpanningTree& tree);

// Throws StaleCandidate when `cand` does not describe a valid case on `tree`.
std::pair<SpanningTree, ExchangeStep> apply_rule2(const Graph& graph, const SpanningTree& tree,
                                                  const Rule2Candidate& cand);

// Applies the rules until neither is applicable. Paths are returned as-is.
MaximalTree make_maximal(const Graph& graph, SpanningTree start);

bool is_maximal(const Graph& graph, const SpanningTree& tree);

}  // namespace istk
