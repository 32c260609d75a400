#include "istk/kernelizer.hpp"

#include <string>
#include <utility>

#include "istk/error.hpp"

namespace istk {

namespace {

// State carried across rounds: the current graph, the shifted parameter and
// the reductions applied so far.
class Driver {
public:
    Driver(const Graph& graph, std::optional<int> k) : current_(graph), k_(k) {
        if (k && *k < 1) throw Error(ErrorCode::PreconditionViolation, "k must be positive");
    }

    const Graph& graph() const { return current_; }
    std::optional<int> k() const { return k_; }
    int order() const { return current_.order(); }

    SpanningTree lift(SpanningTree tree) const { return lift_through(outcome_trace_, std::move(tree)); }

    KernelOutcome finish(std::variant<Solved, Answered, Kernel> result) {
        return KernelOutcome{std::move(result), std::move(outcome_trace_), exchange_steps_, rounds_};
    }

    KernelOutcome solved(SpanningTree tree) {
        SpanningTree lifted = lift(std::move(tree));
        ensure(!k_ || lifted.internal_count() >= *original_k(), "certificate has too few internal vertices");
        int internal = lifted.internal_count();
        return finish(Solved{std::move(lifted), internal});
    }

    // Small graphs and degenerate reductions: opt of the current graph is
    // known exactly, so the original opt is that plus the accumulated offset.
    KernelOutcome exact(int opt, SpanningTree witness, const std::string& reason) {
        if (k_ && opt >= *k_) return solved(std::move(witness));
        std::optional<bool> decision;
        if (k_) decision = false;
        return finish(Answered{decision, opt + offset_, reason});
    }

    std::optional<int> original_k() const {
        if (!k_) return std::nullopt;
        return *k_ + offset_;
    }

    // Applies the reduction; returns an outcome when it was degenerate.
    std::optional<KernelOutcome> reduce(const ExpansionPair& pair) {
        auto result = apply_reduction(current_, k_, pair);
        if (auto* answer = std::get_if<DegenerateAnswer>(&result))
            return exact(answer->opt, std::move(answer->witness), "degenerate");
        auto& reduction = std::get<Reduction>(result);
        ensure(reduction.reduced.order() < current_.order(), "reduction did not shrink the graph");
        offset_ += 2 * static_cast<int>(pair.s.size()) - 2;
        k_ = reduction.k;
        current_ = std::move(reduction.reduced);
        outcome_trace_.push_back(std::move(reduction.step));
        return std::nullopt;
    }

    void count_round() { ++rounds_; }
    void count_steps(int steps) { exchange_steps_ += steps; }

private:
    Graph current_;
    std::optional<int> k_;
    int offset_ = 0;
    std::vector<ReductionStep> outcome_trace_;
    int exchange_steps_ = 0;
    int rounds_ = 0;
};

// Trees on at most three vertices are handled by the oracle, and k' <= 1 is
// met by any spanning tree of a graph with three or more vertices.
std::optional<KernelOutcome> settle_trivial(Driver& driver) {
    if (driver.order() <= 3) {
        OptResult r = opt_bruteforce(driver.graph());
        return driver.exact(r.opt, std::move(r.witness), "small graph");
    }
    if (driver.k() && *driver.k() <= 1) return driver.solved(bfs_tree(driver.graph()));
    return std::nullopt;
}

}  // namespace

KernelOutcome kernelize(const Graph& graph, std::optional<int> k, const KernelHooks& hooks) {
    Driver driver(graph, k);
    for (;;) {
        driver.count_round();
        if (auto done = settle_trivial(driver)) return std::move(*done);

        const Graph& g = driver.graph();
        const int n = g.order();
        MaximalTree maximal = make_maximal(g, bfs_tree(g));
        ensure(static_cast<int>(maximal.steps.size()) <= n - 2, "local search used more than n-2 steps");
        driver.count_steps(static_cast<int>(maximal.steps.size()));
        if (hooks.on_maximal) hooks.on_maximal(g, maximal);
        SpanningTree& tree = maximal.tree;

        if (2 * tree.internal_count() >= n) {
            if (!driver.k()) return driver.finish(Kernel{g, std::nullopt, std::move(tree)});
            SpanningTree lifted = driver.lift(tree);
            if (lifted.internal_count() >= *driver.original_k()) {
                int internal = lifted.internal_count();
                return driver.finish(Solved{std::move(lifted), internal});
            }
            ensure(n <= 2 * *driver.k() - 2, "kernel exceeds 2k'-2 vertices");
            std::optional<int> k_now = driver.k();
            return driver.finish(Kernel{g, k_now, std::move(tree)});
        }

        ReducibleStructure rs = find_reducible(g, tree);
        ensure(rs.independent.size() >= 2 * g.neighborhood(rs.independent).size(),
               "reducible structure violates |L'| >= 2|N(L')|");
        if (hooks.on_reducible) hooks.on_reducible(g, tree, rs);
        ExpansionPair pair = two_expansion(g, rs.independent);
        if (hooks.on_pair) hooks.on_pair(g, pair);
        if (auto done = driver.reduce(pair)) return std::move(*done);
    }
}

KernelOutcome baseline_kernel_3k(const Graph& graph, int k) {
    Driver driver(graph, k);
    for (;;) {
        driver.count_round();
        if (auto done = settle_trivial(driver)) return std::move(*done);

        const Graph& g = driver.graph();
        const int n = g.order();
        const int kk = *driver.k();
        // A depth-first tree can still have a leaf-leaf cotree edge at its
        // root; Rule 1 removes those so the leaves are independent.
        SpanningTree tree = dfs_tree(g);
        for (;;) {
            TreeAnalysis analysis(g, tree);
            auto pair = analysis.leaf_pair();
            if (!pair) break;
            tree = apply_rule1(g, tree, pair->u, pair->v).first;
            driver.count_steps(1);
        }

        if (tree.internal_count() >= kk) return driver.solved(std::move(tree));
        if (n <= 3 * kk - 3) return driver.finish(Kernel{g, kk, std::move(tree)});

        std::vector<Vertex> leaves = classify(tree).leaves;
        ExpansionPair pair = two_expansion(g, leaves);
        if (auto done = driver.reduce(pair)) return std::move(*done);
    }
}

DecisionResult solve_decision(const Graph& graph, int k, int cap) {
    KernelOutcome outcome = kernelize(graph, k);
    bool yes = false;
    std::optional<SpanningTree> certificate;
    if (auto* s = std::get_if<Solved>(&outcome.result)) {
        yes = true;
        certificate = s->certificate;
    } else if (auto* a = std::get_if<Answered>(&outcome.result)) {
        yes = a->decision.value_or(false);
    } else {
        const Kernel& kernel = std::get<Kernel>(outcome.result);
        OptResult r = opt_bruteforce(kernel.graph, cap);
        yes = r.opt >= *kernel.k;
        if (yes) certificate = lift_through(outcome.trace, std::move(r.witness));
    }
    if (certificate) ensure(certificate->internal_count() >= k, "lifted certificate is too small");
    return DecisionResult{yes, std::move(certificate), std::move(outcome)};
}

}  // namespace istk
