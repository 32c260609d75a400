#include "istk/local_search.hpp"

#include <algorithm>
#include <string>

#include "istk/error.hpp"

namespace istk {

const char* to_string(ExchangeRule rule) {
    switch (rule) {
        case ExchangeRule::R1: return "R1";
        case ExchangeRule::R2a: return "R2a";
        case ExchangeRule::R2b: return "R2b";
        case ExchangeRule::R2c: return "R2c";
        case ExchangeRule::R2d: return "R2d";
    }
    return "?";
}

TreeAnalysis::TreeAnalysis(const Graph& graph, const SpanningTree& tree)
    : graph_(&graph), tree_(&tree), good_leaves_(graph.order() + 1), d2_(graph.order() + 1, 0) {
    const int n = graph.order();
    for (Vertex l = 1; l <= n; ++l) {
        if (!tree.is_leaf(l)) continue;
        for (Vertex w : graph.neighbors(l)) {
            if (tree.is_internal(w) && !tree.has_edge(l, w)) {
                good_.push_back({l, w});
                good_leaves_[w].push_back(l);
            }
        }
    }
    // Leaves were visited in ascending order, so each list is already sorted.
    if (!tree.is_path()) {
        for (const auto& e : graph.edges()) {
            if (tree.is_leaf(e.u) && tree.is_leaf(e.v) && !tree.has_edge(e.u, e.v)) {
                leaf_pair_ = e;
                break;
            }
        }
    }
    compute_d2();
}

bool TreeAnalysis::has_good_leaf_other_than(Vertex v, Vertex leaf) const {
    for (Vertex l : good_leaves_[v])
        if (l != leaf) return true;
    return false;
}

int TreeAnalysis::path_sum(const std::vector<int>& prefix, const std::vector<int>& value, Vertex a,
                           Vertex b) const {
    Vertex top = tree_->lca(a, b);
    return prefix[a] + prefix[b] - 2 * prefix[top] + value[top];
}

// w in I2 is detachable when some good edge (l, w) has a branchpoint on its
// path, or a vertex on the path carrying a good edge from a leaf other than l.
// Both tests are root-prefix counts, so every good edge costs O(log n) plus
// the degree of its leaf.
void TreeAnalysis::compute_d2() {
    const SpanningTree& t = *tree_;
    const int n = t.order();
    std::vector<int> branch(n + 1, 0), multi(n + 1, 0), single(n + 1, 0);
    for (Vertex v = 1; v <= n; ++v) {
        branch[v] = t.is_branchpoint(v) ? 1 : 0;
        multi[v] = good_leaves_[v].size() >= 2 ? 1 : 0;
        single[v] = good_leaves_[v].size() == 1 ? 1 : 0;
    }
    auto prefix_of = [&](const std::vector<int>& value) {
        std::vector<int> prefix(n + 1, 0);
        for (Vertex v : t.preorder()) prefix[v] = value[v] + (t.parent(v) ? prefix[t.parent(v)] : 0);
        return prefix;
    };
    auto branch_prefix = prefix_of(branch);
    auto multi_prefix = prefix_of(multi);
    auto single_prefix = prefix_of(single);

    std::vector<Vertex> exclusive;  // vertices whose only good leaf is the current l
    Vertex current_leaf = 0;
    for (const auto& [l, w] : good_) {
        if (l != current_leaf) {
            current_leaf = l;
            exclusive.clear();
            for (Vertex x : graph_->neighbors(l))
                if (good_leaves_[x].size() == 1 && good_leaves_[x][0] == l) exclusive.push_back(x);
        }
        if (d2_[w] || t.degree(w) != 2) continue;
        if (path_sum(branch_prefix, branch, l, w) > 0) {
            d2_[w] = 1;
            continue;
        }
        int others = path_sum(multi_prefix, multi, l, w) + path_sum(single_prefix, single, l, w);
        for (Vertex x : exclusive)
            if (t.on_path(x, l, w)) --others;
        if (others > 0) d2_[w] = 1;
    }
}

DetachableSets TreeAnalysis::detachable_sets() const {
    DetachableSets sets;
    for (Vertex v = 1; v <= tree_->order(); ++v) {
        if (in_d2(v)) sets.degree_two.push_back(v);
        if (detachable(v)) sets.all.push_back(v);
    }
    return sets;
}

std::optional<Rule2Candidate> TreeAnalysis::match(GoodEdge good, CrossedEdge crossed) const {
    const SpanningTree& t = *tree_;
    const Vertex l = good.leaf, w = good.internal, u = crossed.near, v = crossed.far;
    const bool far_ok = v == w || t.is_branchpoint(v);

    auto first_leaf = [&](Vertex x, Vertex skip1, Vertex skip2) -> std::optional<Vertex> {
        for (Vertex leaf : good_leaves_[x])
            if (leaf != skip1 && leaf != skip2) return leaf;
        return std::nullopt;
    };

    if (t.is_branchpoint(u)) {
        if (far_ok) return Rule2Candidate{ExchangeRule::R2a, good, crossed, std::nullopt, std::nullopt};
        if (in_d2(v) && v != w) {
            if (auto lv = first_leaf(v, l, l)) return Rule2Candidate{ExchangeRule::R2b, good, crossed, std::nullopt, lv};
        }
        return std::nullopt;
    }
    if (!in_d2(u)) return std::nullopt;
    if (far_ok) {
        if (auto lu = first_leaf(u, l, l)) return Rule2Candidate{ExchangeRule::R2c, good, crossed, lu, std::nullopt};
        return std::nullopt;
    }
    if (in_d2(v) && v != w) {
        for (Vertex lu : good_leaves_[u]) {
            if (lu == l) continue;
            if (auto lv = first_leaf(v, l, lu)) return Rule2Candidate{ExchangeRule::R2d, good, crossed, lu, lv};
        }
    }
    return std::nullopt;
}

bool TreeAnalysis::holds(const Rule2Candidate& cand) const {
    const SpanningTree& t = *tree_;
    const Graph& g = *graph_;
    const Vertex l = cand.good.leaf, w = cand.good.internal, u = cand.crossed.near, v = cand.crossed.far;
    for (Vertex x : {l, w, u, v})
        if (!g.contains(x)) return false;
    if (!t.is_leaf(l) || !t.is_internal(w) || !g.adjacent(l, w) || t.has_edge(l, w)) return false;
    if (!t.has_edge(u, v) || u == l) return false;
    if (!t.on_path(u, l, w) || !t.on_path(v, l, w) || t.distance(l, v) != t.distance(l, u) + 1) return false;

    auto is_good_leaf = [&](std::optional<Vertex> leaf, Vertex at) {
        return leaf && std::binary_search(good_leaves_[at].begin(), good_leaves_[at].end(), *leaf);
    };
    const bool far_ok = v == w || t.is_branchpoint(v);
    switch (cand.rule) {
        case ExchangeRule::R2a:
            return t.is_branchpoint(u) && far_ok;
        case ExchangeRule::R2b:
            return t.is_branchpoint(u) && in_d2(v) && v != w && is_good_leaf(cand.leaf_at_far, v) &&
                   *cand.leaf_at_far != l;
        case ExchangeRule::R2c:
            return in_d2(u) && is_good_leaf(cand.leaf_at_near, u) && *cand.leaf_at_near != l && far_ok;
        case ExchangeRule::R2d:
            return in_d2(u) && in_d2(v) && v != w && is_good_leaf(cand.leaf_at_near, u) &&
                   is_good_leaf(cand.leaf_at_far, v) && *cand.leaf_at_near != l && *cand.leaf_at_far != l &&
                   *cand.leaf_at_far != *cand.leaf_at_near;
        case ExchangeRule::R1:
            return false;
    }
    return false;
}

std::vector<GoodEdge> good_cotree_edges(const Graph& graph, const SpanningTree& tree) {
    return TreeAnalysis(graph, tree).good_edges();
}

std::vector<CrossedEdge> crossed_edges(const SpanningTree& tree, GoodEdge good) {
    TreePath p = tree.path(good.leaf, good.internal);
    std::vector<CrossedEdge> out;
    out.reserve(p.size() - 1);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) out.push_back({p[i], p[i + 1]});
    return out;
}

namespace {

// The tree edge Rule 1 removes for cotree leaf pair (l1, l2): the first edge
// along P_T(l1, l2) whose endpoint nearer l1 is a branchpoint.
EdgeSwap rule1_swap(const SpanningTree& tree, Vertex l1, Vertex l2) {
    TreePath p = tree.path(l1, l2);
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (tree.is_branchpoint(p[i])) return {Edge::make(p[i], p[i + 1]), Edge::make(l1, l2)};
    throw Error(ErrorCode::NoBranchpoint, "no branchpoint on the tree path between the two leaves");
}

bool rule1_applies(const Graph& graph, const SpanningTree& tree, Vertex a, Vertex b) {
    return a != b && tree.is_leaf(a) && tree.is_leaf(b) && graph.adjacent(a, b) && !tree.has_edge(a, b) &&
           !tree.is_path();
}

}  // namespace

std::pair<SpanningTree, ExchangeStep> apply_rule1(const Graph& graph, const SpanningTree& tree, Vertex l1,
                                                  Vertex l2) {
    if (!graph.contains(l1) || !graph.contains(l2) || l1 == l2 || !tree.is_leaf(l1) || !tree.is_leaf(l2))
        throw Error(ErrorCode::NotApplicable, "rule 1 needs two distinct leaves");
    if (!graph.adjacent(l1, l2) || tree.has_edge(l1, l2))
        throw Error(ErrorCode::NotApplicable, "leaves are not joined by a cotree edge");
    if (tree.is_path()) throw Error(ErrorCode::NoBranchpoint, "tree is a path");

    ExchangeStep step;
    step.rule = ExchangeRule::R1;
    step.swap = rule1_swap(tree, l1, l2);
    step.internal_before = tree.internal_count();
    SpanningTree next = tree.exchange(step.swap.removed, step.swap.added);
    step.internal_after = next.internal_count();
    ensure(step.internal_after >= step.internal_before + 1, "rule 1 did not gain an internal vertex");
    return {std::move(next), std::move(step)};
}

DetachableSets detachable(const Graph& graph, const SpanningTree& tree) {
    TreeAnalysis analysis(graph, tree);
    if (analysis.rule1_applicable())
        throw Error(ErrorCode::PreconditionViolation, "rule 1 is still applicable");
    return analysis.detachable_sets();
}

namespace {

std::optional<Rule2Candidate> scan_rule2(const TreeAnalysis& analysis) {
    const SpanningTree& t = analysis.tree();
    if (t.is_path()) return std::nullopt;
    const int n = t.order();

    // Every case needs the near endpoint in I3 or D2 and strictly inside the
    // path; skip good edges whose path interior has no such vertex.
    std::vector<int> flag(n + 1, 0), prefix(n + 1, 0);
    for (Vertex v = 1; v <= n; ++v) flag[v] = analysis.detachable(v) ? 1 : 0;
    for (Vertex v : t.preorder()) prefix[v] = flag[v] + (t.parent(v) ? prefix[t.parent(v)] : 0);

    for (const GoodEdge& good : analysis.good_edges()) {
        Vertex top = t.lca(good.leaf, good.internal);
        int inside = prefix[good.leaf] + prefix[good.internal] - 2 * prefix[top] + flag[top] - flag[good.leaf] -
                     flag[good.internal];
        if (inside == 0) continue;
        TreePath p = t.path(good.leaf, good.internal);
        for (std::size_t i = 1; i + 1 < p.size(); ++i)
            if (auto cand = analysis.match(good, {p[i], p[i + 1]})) return cand;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Rule2Candidate> find_rule2(const Graph& graph, const SpanningTree& tree) {
    TreeAnalysis analysis(graph, tree);
    if (analysis.rule1_applicable())
        throw Error(ErrorCode::PreconditionViolation, "rule 1 is still applicable");
    return scan_rule2(analysis);
}

std::pair<SpanningTree, ExchangeStep> apply_rule2(const Graph& graph, const SpanningTree& tree,
                                                  const Rule2Candidate& cand) {
    {
        TreeAnalysis analysis(graph, tree);
        if (tree.is_path() || analysis.rule1_applicable() || !analysis.holds(cand))
            throw Error(ErrorCode::StaleCandidate, "candidate does not match the current tree");
    }
    const Vertex l = cand.good.leaf, w = cand.good.internal, u = cand.crossed.near, v = cand.crossed.far;

    ExchangeStep step;
    step.rule = cand.rule;
    step.swap = {Edge::make(u, v), Edge::make(l, w)};
    step.internal_before = tree.internal_count();
    SpanningTree current = tree.exchange(step.swap.removed, step.swap.added);

    auto follow_up = [&](Vertex leaf, Vertex x) {
        ensure(rule1_applies(graph, current, leaf, x), "rule 2 follow-up is not a rule 1 instance");
        EdgeSwap swap = rule1_swap(current, leaf, x);
        current = current.exchange(swap.removed, swap.added);
        step.follow_ups.push_back(swap);
    };

    switch (cand.rule) {
        case ExchangeRule::R2a: break;
        case ExchangeRule::R2b: follow_up(*cand.leaf_at_far, v); break;
        case ExchangeRule::R2c: follow_up(*cand.leaf_at_near, u); break;
        case ExchangeRule::R2d: {
            const Vertex lu = *cand.leaf_at_near, lv = *cand.leaf_at_far;
            ensure(current.is_leaf(lu) && current.is_leaf(u) && current.is_leaf(lv) && current.is_leaf(v),
                   "case d: l_u, u, l_v, v are not four leaves after the substitution");
            follow_up(lu, u);
            if (rule1_applies(graph, current, lv, v)) follow_up(lv, v);
            break;
        }
        case ExchangeRule::R1: throw Error(ErrorCode::StaleCandidate, "not a rule 2 candidate");
    }
    step.internal_after = current.internal_count();
    ensure(step.internal_after >= step.internal_before + 1, "rule 2 did not gain an internal vertex");
    return {std::move(current), std::move(step)};
}

MaximalTree make_maximal(const Graph& graph, SpanningTree start) {
    MaximalTree result{std::move(start), {}};
    const int n = graph.order();
    while (!result.tree.is_path()) {
        TreeAnalysis analysis(graph, result.tree);
        std::optional<std::pair<SpanningTree, ExchangeStep>> next;
        if (auto pair = analysis.leaf_pair()) {
            next = apply_rule1(graph, result.tree, pair->u, pair->v);
        } else if (auto cand = scan_rule2(analysis)) {
            next = apply_rule2(graph, result.tree, *cand);
        } else {
            break;
        }
        result.tree = std::move(next->first);
        result.steps.push_back(std::move(next->second));
        ensure(static_cast<int>(result.steps.size()) <= std::max(0, n - 2), "more than n-2 exchange steps");
    }
    return result;
}

bool is_maximal(const Graph& graph, const SpanningTree& tree) {
    if (tree.is_path()) return true;
    TreeAnalysis analysis(graph, tree);
    return !analysis.rule1_applicable() && !scan_rule2(analysis);
}

}  // namespace istk
