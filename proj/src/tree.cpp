#include "istk/tree.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>
#include <utility>

#include "istk/error.hpp"

namespace istk {

namespace {

struct DisjointSets {
    explicit DisjointSets(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
    std::vector<int> parent;
};

}  // namespace

SpanningTree::SpanningTree(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), adjacency_(n + 1), parent_(n + 1, 0), depth_(n + 1, 0),
      enter_(n + 1, 0), exit_(n + 1, 0) {
    std::sort(edges_.begin(), edges_.end());
    for (const auto& e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
    for (Vertex v = 1; v <= n_; ++v)
        if (degree(v) >= 2) ++internal_count_;

    // Iterative DFS from the root for preorder and entry/exit stamps.
    preorder_.reserve(n_);
    std::vector<std::pair<Vertex, std::size_t>> stack{{root(), 0}};
    int clock = 0;
    enter_[root()] = clock++;
    preorder_.push_back(root());
    while (!stack.empty()) {
        auto& [x, next] = stack.back();
        if (next < adjacency_[x].size()) {
            Vertex y = adjacency_[x][next++];
            if (y == parent_[x]) continue;
            parent_[y] = x;
            depth_[y] = depth_[x] + 1;
            enter_[y] = clock++;
            preorder_.push_back(y);
            stack.emplace_back(y, 0);
        } else {
            exit_[x] = clock++;
            stack.pop_back();
        }
    }

    int levels = 1;
    while ((1 << levels) < n_) ++levels;
    ancestor_.assign(levels, std::vector<Vertex>(n_ + 1, 0));
    for (Vertex v = 1; v <= n_; ++v) ancestor_[0][v] = parent_[v] == 0 ? v : parent_[v];
    for (int j = 1; j < levels; ++j)
        for (Vertex v = 1; v <= n_; ++v) ancestor_[j][v] = ancestor_[j - 1][ancestor_[j - 1][v]];
}

bool SpanningTree::has_edge(Vertex a, Vertex b) const {
    if (a < 1 || a > n_ || b < 1 || b > n_) return false;
    return parent_[a] == b || parent_[b] == a;
}

TreeRole SpanningTree::role(Vertex v) const {
    int d = degree(v);
    if (d <= 1) return TreeRole::Leaf;
    return d == 2 ? TreeRole::DegreeTwo : TreeRole::Branchpoint;
}

bool SpanningTree::is_path() const {
    for (Vertex v = 1; v <= n_; ++v)
        if (degree(v) >= 3) return false;
    return true;
}

Vertex SpanningTree::lca(Vertex a, Vertex b) const {
    if (depth_[a] < depth_[b]) std::swap(a, b);
    int lift = depth_[a] - depth_[b];
    for (int j = 0; lift > 0; ++j, lift >>= 1)
        if (lift & 1) a = ancestor_[j][a];
    if (a == b) return a;
    for (int j = static_cast<int>(ancestor_.size()) - 1; j >= 0; --j) {
        if (ancestor_[j][a] != ancestor_[j][b]) {
            a = ancestor_[j][a];
            b = ancestor_[j][b];
        }
    }
    return parent_[a];
}

bool SpanningTree::same_side(Edge e, Vertex side, Vertex x) const {
    Vertex child = parent_[e.u] == e.v ? e.u : e.v;
    return in_subtree(side, child) == in_subtree(x, child);
}

TreePath SpanningTree::path(Vertex from, Vertex to) const {
    Vertex top = lca(from, to);
    TreePath head, tail;
    for (Vertex x = from; x != top; x = parent_[x]) head.push_back(x);
    head.push_back(top);
    for (Vertex x = to; x != top; x = parent_[x]) tail.push_back(x);
    head.insert(head.end(), tail.rbegin(), tail.rend());
    return head;
}

SpanningTree SpanningTree::exchange(Edge removed, Edge added) const {
    removed = Edge::make(removed.u, removed.v);
    added = Edge::make(added.u, added.v);
    ensure(has_edge(removed.u, removed.v), "exchange removes a non-tree edge");
    ensure(!has_edge(added.u, added.v), "exchange adds an existing tree edge");
    ensure(on_path(removed.u, added.u, added.v) && on_path(removed.v, added.u, added.v),
           "removed edge is not on the cycle closed by the added edge");
    std::vector<Edge> next;
    next.reserve(edges_.size());
    for (const auto& e : edges_)
        if (e != removed) next.push_back(e);
    next.push_back(added);
    return SpanningTree(n_, std::move(next));
}

SpanningTree validate_spanning_tree(const Graph& graph, std::span<const Edge> candidate) {
    const int n = graph.order();
    std::vector<Edge> edges;
    edges.reserve(candidate.size());
    for (const auto& raw : candidate) {
        if (!graph.adjacent(raw.u, raw.v))
            throw Error(ErrorCode::NotSubgraph, "edge " + std::to_string(raw.u) + "-" + std::to_string(raw.v) +
                                                    " is not a graph edge");
        edges.push_back(Edge::make(raw.u, raw.v));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw Error(ErrorCode::NotTree, "repeated edge");
    DisjointSets sets(n);
    for (const auto& e : edges)
        if (!sets.unite(e.u, e.v)) throw Error(ErrorCode::NotTree, "edge set contains a cycle");
    if (static_cast<int>(edges.size()) != n - 1)
        throw Error(ErrorCode::NotSpanning, "forest has " + std::to_string(edges.size()) + " edges, need " +
                                                std::to_string(n - 1));
    return SpanningTree(n, std::move(edges));
}

TreePath tree_path(const SpanningTree& tree, Vertex u, Vertex v) {
    if (u < 1 || u > tree.order() || v < 1 || v > tree.order())
        throw Error(ErrorCode::UnknownVertex, "vertex outside 1.." + std::to_string(tree.order()));
    return tree.path(u, v);
}

Classification classify(const SpanningTree& tree) {
    Classification c;
    for (Vertex v = 1; v <= tree.order(); ++v) {
        switch (tree.role(v)) {
            case TreeRole::Leaf: c.leaves.push_back(v); break;
            case TreeRole::DegreeTwo: c.degree_two.push_back(v); break;
            case TreeRole::Branchpoint: c.branchpoints.push_back(v); break;
        }
    }
    return c;
}

bool leaf_identity_holds(const SpanningTree& tree) {
    if (tree.order() < 2) return true;
    int excess = 0;
    for (Vertex v = 1; v <= tree.order(); ++v)
        if (tree.is_branchpoint(v)) excess += tree.degree(v) - 2;
    return tree.leaf_count() - 2 == excess;
}

SpanningTree bfs_tree(const Graph& graph, Vertex root) {
    std::vector<char> seen(graph.order() + 1, 0);
    std::vector<Edge> edges;
    std::queue<Vertex> queue;
    queue.push(root);
    seen[root] = 1;
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop();
        for (Vertex y : graph.neighbors(x)) {
            if (seen[y]) continue;
            seen[y] = 1;
            edges.push_back(Edge::make(x, y));
            queue.push(y);
        }
    }
    return validate_spanning_tree(graph, edges);
}

SpanningTree dfs_tree(const Graph& graph, Vertex root) {
    std::vector<char> seen(graph.order() + 1, 0);
    std::vector<Edge> edges;
    std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
    seen[root] = 1;
    while (!stack.empty()) {
        auto& [x, next] = stack.back();
        auto around = graph.neighbors(x);
        if (next == around.size()) {
            stack.pop_back();
            continue;
        }
        Vertex y = around[next++];
        if (seen[y]) continue;
        seen[y] = 1;
        edges.push_back(Edge::make(x, y));
        stack.emplace_back(y, 0);
    }
    return validate_spanning_tree(graph, edges);
}

}  // namespace istk
