#include <doctest.h>

#include <map>

#include "istk/error.hpp"
#include "istk/generators.hpp"
#include "istk/local_search.hpp"
#include "support.hpp"

using namespace istk;
using namespace fixtures;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an istk::Error");
    return ErrorCode::InternalContradiction;
}

}  // namespace

TEST_CASE("good cotree edges") {
    Graph r = rule2a();
    CHECK(good_cotree_edges(r, tree_of(r, rule2a_tree())) == std::vector<GoodEdge>{{5, 2}});
    Graph p = p4();
    CHECK(good_cotree_edges(p, tree_of(p, p.edges())).empty());
    Graph d = dbgraph();
    CHECK(good_cotree_edges(d, tree_of(d, dbgraph_tree())) == std::vector<GoodEdge>{{1, 5}, {1, 6}});
}

TEST_CASE("crossed edges walk from the leaf") {
    Graph r = rule2a();
    CHECK(crossed_edges(tree_of(r, rule2a_tree()), {5, 2}) == std::vector<CrossedEdge>{{5, 4}, {4, 3}, {3, 2}});
    Graph d = dbgraph();
    CHECK(crossed_edges(tree_of(d, dbgraph_tree()), {1, 5}) == std::vector<CrossedEdge>{{1, 2}, {2, 4}, {4, 5}});

    // Shortest possible path: STARX plus pendant 5 on 2, tree {1-2,1-3,1-4,2-5}
    // has good edge (3,2) of length two.
    Graph g = graph(5, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 5}});
    SpanningTree t = tree_of(g, edges({{1, 2}, {1, 3}, {1, 4}, {2, 5}}));
    CHECK(good_cotree_edges(g, t) == std::vector<GoodEdge>{{3, 2}});
    CHECK(crossed_edges(t, {3, 2}) == std::vector<CrossedEdge>{{3, 1}, {1, 2}});
}

TEST_CASE("rule 1 on STARX") {
    Graph g = starx();
    SpanningTree star = tree_of(g, edges({{1, 2}, {1, 3}, {1, 4}}));
    auto [next, step] = apply_rule1(g, star, 2, 3);
    CHECK(step.rule == ExchangeRule::R1);
    CHECK(step.swap.added == Edge{2, 3});
    CHECK(step.swap.removed == Edge{1, 3});
    CHECK(next.is_path());
    CHECK(next.internal_count() == 2);
    CHECK(step.internal_before == 1);
    CHECK(step.internal_after == 2);
}

TEST_CASE("rule 1 on K4") {
    Graph g = k4();
    SpanningTree star = tree_of(g, edges({{1, 2}, {1, 3}, {1, 4}}));
    auto [next, step] = apply_rule1(g, star, 2, 3);
    CHECK(next.is_path());
    CHECK(next.internal_count() == 2);
    CHECK(step.internal_after >= step.internal_before + 1);
}

TEST_CASE("rule 1 errors") {
    Graph p = p4();
    SpanningTree pt = tree_of(p, p.edges());
    CHECK(code_of([&] { apply_rule1(p, pt, 1, 4); }) == ErrorCode::NotApplicable);
    CHECK(code_of([&] { apply_rule1(p, pt, 1, 2); }) == ErrorCode::NotApplicable);
    Graph c = c5();
    SpanningTree path = tree_of(c, edges({{1, 2}, {2, 3}, {3, 4}, {4, 5}}));
    CHECK(code_of([&] { apply_rule1(c, path, 1, 5); }) == ErrorCode::NoBranchpoint);
    Graph s = starx();
    SpanningTree st = tree_of(s, edges({{1, 2}, {1, 3}, {1, 4}}));
    CHECK(code_of([&] { apply_rule1(s, st, 2, 4); }) == ErrorCode::NotApplicable);
}

TEST_CASE("detachable sets") {
    Graph r = rule2a();
    auto d = detachable(r, tree_of(r, rule2a_tree()));
    CHECK(d.degree_two == std::vector<Vertex>{2});
    CHECK(d.all == std::vector<Vertex>{2, 3});

    Graph db = dbgraph();
    d = detachable(db, tree_of(db, dbgraph_tree()));
    CHECK(d.degree_two == std::vector<Vertex>{5, 6});
    CHECK(d.all == std::vector<Vertex>{2, 5, 6});

    Graph chord = graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}});
    d = detachable(chord, tree_of(chord, edges({{1, 2}, {2, 3}, {3, 4}, {4, 5}})));
    CHECK(d.degree_two.empty());
    CHECK(d.all.empty());

    Graph s = starx();
    SpanningTree st = tree_of(s, edges({{1, 2}, {1, 3}, {1, 4}}));
    CHECK(code_of([&] { detachable(s, st); }) == ErrorCode::PreconditionViolation);
    CHECK(code_of([&] { find_rule2(s, st); }) == ErrorCode::PreconditionViolation);
}

TEST_CASE("find_rule2") {
    Graph r = rule2a();
    auto cand = find_rule2(r, tree_of(r, rule2a_tree()));
    REQUIRE(cand.has_value());
    CHECK(cand->rule == ExchangeRule::R2a);
    CHECK(cand->good == GoodEdge{5, 2});
    CHECK(cand->crossed == CrossedEdge{3, 2});

    Graph db = dbgraph();
    CHECK_FALSE(find_rule2(db, tree_of(db, dbgraph_tree())).has_value());
    Graph p = p4();
    CHECK_FALSE(find_rule2(p, tree_of(p, p.edges())).has_value());
}

TEST_CASE("apply_rule2 case a on RULE2A") {
    Graph r = rule2a();
    SpanningTree t = tree_of(r, rule2a_tree());
    auto cand = find_rule2(r, t);
    REQUIRE(cand);
    auto [next, step] = apply_rule2(r, t, *cand);
    CHECK(next.edges() == edges({{1, 2}, {2, 5}, {3, 4}, {3, 6}, {4, 5}}));
    CHECK(next.is_path());
    CHECK(step.internal_before == 3);
    CHECK(step.internal_after == 4);
    CHECK(step.follow_ups.empty());

    CHECK(code_of([&] { apply_rule2(r, next, *cand); }) == ErrorCode::StaleCandidate);
}

TEST_CASE("make_maximal") {
    Graph s = starx();
    auto m = make_maximal(s, tree_of(s, edges({{1, 2}, {1, 3}, {1, 4}})));
    CHECK(m.steps.size() == 1);
    CHECK(m.steps[0].rule == ExchangeRule::R1);
    CHECK(m.tree.is_path());
    CHECK(m.tree.internal_count() == 2);

    Graph r = rule2a();
    m = make_maximal(r, tree_of(r, rule2a_tree()));
    CHECK(m.steps.size() == 1);
    CHECK(m.steps[0].rule == ExchangeRule::R2a);
    CHECK(m.tree.internal_count() == 4);
    CHECK(is_maximal(r, m.tree));

    Graph p = p4();
    m = make_maximal(p, tree_of(p, p.edges()));
    CHECK(m.steps.empty());

    Graph db = dbgraph();
    CHECK(is_maximal(db, tree_of(db, dbgraph_tree())));
}

TEST_CASE("exchange rules on the remaining cases") {
    // Rule 2 cases b, c and d all occur among small graphs; find a witness of
    // each by scanning bfs trees and check the step contract.
    std::map<ExchangeRule, int> seen;
    for (int n = 5; n <= 8; ++n) {
        for_each_connected_graph(n, [&](const Graph& g) {
            auto m = make_maximal(g, bfs_tree(g));
            for (const auto& step : m.steps) {
                ++seen[step.rule];
                CHECK(step.internal_after >= step.internal_before + 1);
                if (step.rule == ExchangeRule::R2b || step.rule == ExchangeRule::R2c) CHECK(step.follow_ups.size() == 1);
                if (step.rule == ExchangeRule::R2d) CHECK(step.follow_ups.size() >= 1);
            }
        });
    }
    MESSAGE("R1 " << seen[ExchangeRule::R1] << ", R2a " << seen[ExchangeRule::R2a] << ", R2b " << seen[ExchangeRule::R2b]
                  << ", R2c " << seen[ExchangeRule::R2c] << ", R2d " << seen[ExchangeRule::R2d]);
    CHECK(seen[ExchangeRule::R1] > 0);
    CHECK(seen[ExchangeRule::R2a] > 0);
}
