#include <doctest.h>

#include "istk/error.hpp"
#include "istk/generators.hpp"
#include "istk/kernelizer.hpp"
#include "support.hpp"

using namespace istk;
using namespace fixtures;

TEST_CASE("kernelize P4 with k = 2 is solved by the path") {
    Graph g = p4();
    KernelOutcome out = kernelize(g, 2);
    REQUIRE(out.solved());
    const auto& s = std::get<Solved>(out.result);
    CHECK(s.internal == 2);
    CHECK(s.certificate.is_path());
}

TEST_CASE("kernelize STAR4 with k = 2 answers NO") {
    KernelOutcome out = kernelize(star4(), 2);
    REQUIRE(out.answered());
    const auto& a = std::get<Answered>(out.result);
    CHECK(a.decision == std::optional<bool>(false));
    CHECK(a.opt == 1);
    CHECK(a.reason == "degenerate");
}

TEST_CASE("kernelize P4 with k = 3 returns P4 itself") {
    Graph g = p4();
    KernelOutcome out = kernelize(g, 3);
    REQUIRE(out.is_kernel());
    const auto& k = std::get<Kernel>(out.result);
    CHECK(k.graph.edges() == g.edges());
    CHECK(k.k == 3);
    CHECK(k.graph.order() <= 2 * 3 - 2);
    CHECK(out.trace.empty());
}

TEST_CASE("kernelize C5 with k = 3 is solved") {
    KernelOutcome out = kernelize(c5(), 3);
    REQUIRE(out.solved());
    CHECK(std::get<Solved>(out.result).internal == 3);
}

TEST_CASE("parameterless kernelize") {
    KernelOutcome out = kernelize(generate("caterpillar:6,2", 1), std::nullopt);
    REQUIRE(out.is_kernel());
    const auto& k = std::get<Kernel>(out.result);
    CHECK_FALSE(k.k.has_value());
    CHECK(2 * k.tree.internal_count() >= k.graph.order());
    CHECK(out.trace.size() == 6);

    KernelOutcome star = kernelize(star5(), std::nullopt);
    REQUIRE(star.answered());
    CHECK_FALSE(std::get<Answered>(star.result).decision.has_value());
    CHECK(std::get<Answered>(star.result).opt == 1);
}

TEST_CASE("reductions shrink the graph and shift k") {
    Graph g = generate("caterpillar:6,2", 1);
    KernelOutcome out = kernelize(g, 8);
    int previous = g.order();
    for (const auto& step : out.trace) {
        CHECK(step.reduced_order < previous);
        CHECK(*step.k_after == *step.k_before - 2 * static_cast<int>(step.pair.s.size()) + 2);
        previous = step.reduced_order;
    }
}

TEST_CASE("small graphs go to the oracle") {
    KernelOutcome out = kernelize(k3(), 1);
    CHECK(out.solved());
    out = kernelize(k3(), 2);
    REQUIRE(out.answered());
    CHECK(std::get<Answered>(out.result).opt == 1);
    out = kernelize(Graph(1, {}), std::nullopt);
    REQUIRE(out.answered());
    CHECK(std::get<Answered>(out.result).opt == 0);
}

TEST_CASE("k must be positive") {
    CHECK_THROWS_AS(kernelize(p4(), 0), Error);
}

TEST_CASE("baseline 3k kernel") {
    CHECK(baseline_kernel_3k(c5(), 3).solved());

    KernelOutcome star = baseline_kernel_3k(star4(), 2);
    REQUIRE(star.answered());
    CHECK(std::get<Answered>(star.result).decision == std::optional<bool>(false));
    CHECK(std::get<Answered>(star.result).opt == 1);

    KernelOutcome path = baseline_kernel_3k(p4(), 3);
    REQUIRE(path.is_kernel());
    CHECK(std::get<Kernel>(path.result).graph.order() <= 3 * 3 - 3);
}

TEST_CASE("baseline handles a leaf root adjacent to another leaf") {
    // The depth-first tree from 1 is 1-2-3-4 plus 3-5 and 1-5 is a cotree
    // edge between two leaves.
    Graph g = graph(5, {{1, 2}, {2, 3}, {3, 4}, {3, 5}, {1, 5}});
    KernelOutcome out = baseline_kernel_3k(g, 3);
    CHECK(out.solved());
}

TEST_CASE("solve_decision") {
    DecisionResult k4_yes = solve_decision(k4(), 2);
    CHECK(k4_yes.yes);
    REQUIRE(k4_yes.certificate);
    CHECK(k4_yes.certificate->is_path());
    CHECK(k4_yes.certificate->internal_count() == 2);
    CHECK_FALSE(solve_decision(star4(), 2).yes);
    CHECK_FALSE(solve_decision(p4(), 3).yes);
}

TEST_CASE("solve_decision reports oversized kernels") {
    // Parameter far above the optimum keeps a big kernel.
    Graph g = generate("gnp:n=40,m=60", 3);
    try {
        solve_decision(g, 39, 16);
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooLarge);
    }
}
