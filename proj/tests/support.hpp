#pragma once

// Fixtures and deliberately naive reference implementations. Nothing here
// shares code with the library beyond the Graph/SpanningTree value types.

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <optional>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "istk/graph.hpp"
#include "istk/tree.hpp"

namespace fixtures {

using istk::Edge;
using istk::Graph;
using istk::SpanningTree;
using istk::Vertex;

inline std::vector<Edge> edges(std::initializer_list<std::pair<int, int>> list) {
    std::vector<Edge> out;
    for (auto [a, b] : list) out.push_back(Edge::make(a, b));
    return out;
}

inline Graph graph(int n, std::initializer_list<std::pair<int, int>> list) { return Graph(n, edges(list)); }

inline Graph p4() { return graph(4, {{1, 2}, {2, 3}, {3, 4}}); }
inline Graph k3() { return graph(3, {{1, 2}, {1, 3}, {2, 3}}); }
inline Graph k4() { return graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}); }
inline Graph c5() { return graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}); }
inline Graph star4() { return graph(4, {{1, 2}, {1, 3}, {1, 4}}); }
inline Graph star5() { return graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}}); }
inline Graph starx() { return graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}}); }
inline Graph doublestar() { return graph(6, {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}}); }
inline Graph rule2a() { return graph(6, {{1, 2}, {2, 3}, {3, 6}, {3, 4}, {4, 5}, {2, 5}}); }
inline std::vector<Edge> rule2a_tree() { return edges({{1, 2}, {2, 3}, {3, 6}, {3, 4}, {4, 5}}); }
inline Graph dbgraph() { return graph(7, {{1, 2}, {2, 3}, {2, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 5}, {1, 6}}); }
inline std::vector<Edge> dbgraph_tree() { return edges({{1, 2}, {2, 3}, {2, 4}, {4, 5}, {5, 6}, {6, 7}}); }

inline SpanningTree tree_of(const Graph& g, const std::vector<Edge>& e) { return istk::validate_spanning_tree(g, e); }

}  // namespace fixtures

namespace naive {

using istk::Edge;
using istk::Graph;
using istk::SpanningTree;
using istk::Vertex;

inline int internal_count(int n, const std::vector<Edge>& tree) {
    std::vector<int> deg(n + 1, 0);
    for (const Edge& e : tree) ++deg[e.u], ++deg[e.v];
    return static_cast<int>(std::count_if(deg.begin() + 1, deg.end(), [](int d) { return d >= 2; }));
}

// Connected and n-1 edges, checked by BFS.
inline bool is_spanning_tree(int n, const std::vector<Edge>& tree) {
    if (static_cast<int>(tree.size()) != n - 1) return false;
    std::vector<std::vector<int>> adj(n + 1);
    for (const Edge& e : tree) adj[e.u].push_back(e.v), adj[e.v].push_back(e.u);
    std::vector<char> seen(n + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj[x])
            if (!seen[y]) seen[y] = 1, ++count, stack.push_back(y);
    }
    return count == n;
}

// Every (n-1)-subset of the edges; only for tiny graphs.
inline void for_each_spanning_tree(const Graph& g, const std::function<void(const std::vector<Edge>&)>& visit) {
    const auto& all = g.edges();
    const int n = g.order(), m = static_cast<int>(all.size());
    if (n == 1) {
        visit({});
        return;
    }
    std::vector<int> pick(n - 1);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == n - 1) {
            std::vector<Edge> tree;
            for (int i : pick) tree.push_back(all[i]);
            if (is_spanning_tree(n, tree)) visit(tree);
            return;
        }
        for (int i = start; i <= m - (n - 1 - depth); ++i) {
            pick[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

inline int opt(const Graph& g) {
    int best = 0;
    for_each_spanning_tree(g, [&](const std::vector<Edge>& t) { best = std::max(best, internal_count(g.order(), t)); });
    return best;
}

inline std::vector<Vertex> path(const SpanningTree& t, Vertex a, Vertex b) {
    const int n = t.order();
    std::vector<int> prev(n + 1, 0);
    std::queue<int> q;
    q.push(a);
    prev[a] = a;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (Vertex y : t.neighbors(x))
            if (!prev[y]) prev[y] = x, q.push(y);
    }
    std::vector<Vertex> out{b};
    while (out.back() != a) out.push_back(prev[out.back()]);
    std::reverse(out.begin(), out.end());
    return out;
}

inline std::vector<std::pair<Vertex, Vertex>> good_edges(const Graph& g, const SpanningTree& t) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const Edge& e : g.edges()) {
        if (t.has_edge(e.u, e.v)) continue;
        if (t.degree(e.u) == 1 && t.degree(e.v) >= 2) out.emplace_back(e.u, e.v);
        if (t.degree(e.v) == 1 && t.degree(e.u) >= 2) out.emplace_back(e.v, e.u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool leaf_leaf_cotree(const Graph& g, const SpanningTree& t) {
    for (const Edge& e : g.edges())
        if (!t.has_edge(e.u, e.v) && t.degree(e.u) == 1 && t.degree(e.v) == 1) return true;
    return false;
}

inline std::vector<Vertex> good_leaves(const Graph& g, const SpanningTree& t, Vertex v) {
    std::vector<Vertex> out;
    for (auto [l, w] : good_edges(g, t))
        if (w == v) out.push_back(l);
    return out;
}

// Detachable degree-two vertices, straight from the definition.
inline std::set<Vertex> d2(const Graph& g, const SpanningTree& t) {
    std::set<Vertex> out;
    for (auto [l, w] : good_edges(g, t)) {
        if (t.degree(w) != 2) continue;
        for (Vertex v : path(t, l, w)) {
            bool branch = t.degree(v) >= 3;
            bool other = false;
            for (Vertex x : good_leaves(g, t, v)) other = other || x != l;
            if (branch || other) out.insert(w);
        }
    }
    return out;
}

// Does any good edge / crossed edge pair match one of the four Rule-2 cases?
inline bool rule2_exists(const Graph& g, const SpanningTree& t) {
    auto dd = d2(g, t);
    auto is_d2 = [&](Vertex x) { return dd.count(x) > 0; };
    auto i3 = [&](Vertex x) { return t.degree(x) >= 3; };
    for (auto [l, w] : good_edges(g, t)) {
        auto p = path(t, l, w);
        for (std::size_t i = 1; i + 1 < p.size(); ++i) {
            Vertex u = p[i], v = p[i + 1];
            bool far = v == w || i3(v);
            auto lu = good_leaves(g, t, u);
            auto lv = good_leaves(g, t, v);
            auto has_other = [&](const std::vector<Vertex>& ls, Vertex a, Vertex b) {
                for (Vertex x : ls)
                    if (x != a && x != b) return true;
                return false;
            };
            if (i3(u) && far) return true;
            if (i3(u) && is_d2(v) && v != w && has_other(lv, l, l)) return true;
            if (is_d2(u) && has_other(lu, l, l) && far) return true;
            if (is_d2(u) && is_d2(v) && v != w)
                for (Vertex a : lu)
                    if (a != l && has_other(lv, l, a)) return true;
        }
    }
    return false;
}

inline bool maximal(const Graph& g, const SpanningTree& t) {
    if (t.is_path()) return true;
    return !leaf_leaf_cotree(g, t) && !rule2_exists(g, t);
}

// Side of `x` after deleting tree edge (a, b): true when x stays with a.
inline std::vector<char> side_of(const SpanningTree& t, Vertex a, Vertex b) {
    std::vector<char> mark(t.order() + 1, 0);
    std::vector<int> stack{a};
    mark[a] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (Vertex y : t.neighbors(x)) {
            if ((x == a && y == b) || mark[y]) continue;
            mark[y] = 1;
            stack.push_back(y);
        }
    }
    return mark;
}

// Critical edges by the component test: no good edge joins the two sides.
inline std::vector<Edge> critical(const Graph& g, const SpanningTree& t) {
    std::vector<Edge> out;
    auto good = good_edges(g, t);
    for (const Edge& e : t.edges()) {
        if (t.degree(e.u) < 2 || t.degree(e.v) < 2) continue;
        auto side = side_of(t, e.u, e.v);
        bool crossed = false;
        for (auto [l, w] : good) crossed = crossed || side[l] != side[w];
        if (!crossed) out.push_back(e);
    }
    return out;
}

// D_B by the component test on every tree edge between detachable vertices.
inline std::set<Vertex> d_b(const Graph& g, const SpanningTree& t) {
    auto dd = d2(g, t);
    auto detachable = [&](Vertex x) { return t.degree(x) >= 3 || dd.count(x) > 0; };
    auto good = good_edges(g, t);
    std::set<Vertex> out;
    for (const Edge& e : t.edges()) {
        if (!detachable(e.u) || !detachable(e.v)) continue;
        auto side = side_of(t, e.u, e.v);  // side[x] true: with e.u
        bool crossed = false;
        for (auto [l, w] : good) crossed = crossed || side[l] != side[w];
        if (!crossed) continue;
        for (auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
            if (!dd.count(x)) continue;
            auto ls = good_leaves(g, t, x);
            if (ls.size() != 1) continue;
            const Vertex l = ls[0];
            const bool x_side = x == e.u;
            if (static_cast<bool>(side[l]) != x_side) continue;
            for (auto [l2, w] : good)
                if (l2 == l && static_cast<bool>(side[w]) != x_side) out.insert(x);
        }
    }
    return out;
}

}  // namespace naive
