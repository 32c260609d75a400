#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "istk/exact_oracle.hpp"
#include "istk/graph.hpp"
#include "istk/local_search.hpp"
#include "istk/reducible.hpp"
#include "istk/tree.hpp"

namespace istk {

// A spanning tree of the original graph with `internal` >= k internal vertices.
struct Solved {
    SpanningTree certificate;
    int internal = 0;
};

// opt of the original graph computed exactly; `decision` is absent when no k
// was supplied.
struct Answered {
    std::optional<bool> decision;
    int opt = 0;
    std::string reason;
};

// Equivalent instance (graph, k) together with a maximal tree of it.
struct Kernel {
    Graph graph;
    std::optional<int> k;
    SpanningTree tree;
};

struct KernelOutcome {
    std::variant<Solved, Answered, Kernel> result;
    std::vector<ReductionStep> trace;
    int exchange_steps = 0;
    int rounds = 0;

    bool solved() const { return std::holds_alternative<Solved>(result); }
    bool answered() const { return std::holds_alternative<Answered>(result); }
    bool is_kernel() const { return std::holds_alternative<Kernel>(result); }
};

// Optional observers, called on the graph of the current round. Used by the
// test suites to check per-round guarantees on the real driver.
struct KernelHooks {
    std::function<void(const Graph&, const MaximalTree&)> on_maximal;
    std::function<void(const Graph&, const SpanningTree&, const ReducibleStructure&)> on_reducible;
    std::function<void(const Graph&, const ExpansionPair&)> on_pair;
};

// Alternates local search and reduction until a tree with at least n/2
// internal vertices exists. Without k the result is never Solved. Throws
// PreconditionViolation when k < 1.
KernelOutcome kernelize(const Graph& graph, std::optional<int> k, const KernelHooks& hooks = {});

// Same loop driven by a depth-first tree and L' = all leaves; kernels have at
// most 3k'-3 vertices.
KernelOutcome baseline_kernel_3k(const Graph& graph, int k);

struct DecisionResult {
    bool yes = false;
    std::optional<SpanningTree> certificate;
    KernelOutcome outcome;
};

// kernelize, then the exact oracle on the kernel. Throws TooLarge when the
// kernel exceeds the oracle cap.
DecisionResult solve_decision(const Graph& graph, int k, int cap = kDefaultOracleCap);

}  // namespace istk
