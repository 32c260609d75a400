#pragma once

#include <span>
#include <vector>

#include "istk/graph.hpp"

namespace istk {

using TreePath = std::vector<Vertex>;

enum class TreeRole { Leaf, DegreeTwo, Branchpoint };

// L(T), I2(T), I3(T), each ascending.
struct Classification {
    std::vector<Vertex> leaves;
    std::vector<Vertex> degree_two;
    std::vector<Vertex> branchpoints;
};

// A spanning tree of some Graph, rooted internally at vertex 1 so that paths,
// lowest common ancestors and side-of-edge queries are cheap. Instances are
// only produced by validate_spanning_tree() or by exchanging an edge of an
// existing tree, so the tree property always holds. The host graph is not
// stored; operations that need it take it as an argument.
class SpanningTree {
public:
    int order() const { return n_; }
    // Sorted ascending, n-1 entries.
    const std::vector<Edge>& edges() const { return edges_; }

    int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
    bool has_edge(Vertex a, Vertex b) const;

    // A lone vertex and both ends of a single edge count as leaves.
    bool is_leaf(Vertex v) const { return degree(v) <= 1; }
    bool is_internal(Vertex v) const { return degree(v) >= 2; }
    bool is_branchpoint(Vertex v) const { return degree(v) >= 3; }
    TreeRole role(Vertex v) const;

    int internal_count() const { return internal_count_; }
    int leaf_count() const { return n_ - internal_count_; }
    bool is_path() const;

    // Rooted view.
    Vertex root() const { return 1; }
    Vertex parent(Vertex v) const { return parent_[v]; }
    int depth(Vertex v) const { return depth_[v]; }
    // Vertices in DFS preorder from the root; parents precede children.
    const std::vector<Vertex>& preorder() const { return preorder_; }
    bool in_subtree(Vertex x, Vertex top) const { return enter_[top] <= enter_[x] && exit_[x] <= exit_[top]; }
    Vertex lca(Vertex a, Vertex b) const;
    int distance(Vertex a, Vertex b) const { return depth_[a] + depth_[b] - 2 * depth_[lca(a, b)]; }
    bool on_path(Vertex x, Vertex a, Vertex b) const { return distance(a, x) + distance(x, b) == distance(a, b); }
    // True when `x` lies on the same side as `side` after deleting tree edge e.
    bool same_side(Edge e, Vertex side, Vertex x) const;

    // Unchecked path walk; see tree_path() for the validated operation.
    TreePath path(Vertex from, Vertex to) const;

    // Replace tree edge `removed` by `added`; `removed` must lie on the tree
    // path between the endpoints of `added`.
    SpanningTree exchange(Edge removed, Edge added) const;

    friend SpanningTree validate_spanning_tree(const Graph& graph, std::span<const Edge> candidate);

private:
    SpanningTree(int n, std::vector<Edge> edges);

    int n_ = 0;
    int internal_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Vertex> parent_;
    std::vector<int> depth_;
    std::vector<int> enter_, exit_;
    std::vector<Vertex> preorder_;
    std::vector<std::vector<Vertex>> ancestor_;  // binary lifting table
};

// Throws NotSubgraph, NotTree or NotSpanning.
SpanningTree validate_spanning_tree(const Graph& graph, std::span<const Edge> candidate);

// The unique tree path from u to v. Throws UnknownVertex.
TreePath tree_path(const SpanningTree& tree, Vertex u, Vertex v);

Classification classify(const SpanningTree& tree);

// |L(T)| - 2 == sum over branchpoints of (d_T(v) - 2); defined for n >= 2.
bool leaf_identity_holds(const SpanningTree& tree);

SpanningTree bfs_tree(const Graph& graph, Vertex root = 1);
// Recursive-order depth-first search tree (neighbors ascending).
SpanningTree dfs_tree(const Graph& graph, Vertex root = 1);

}  // namespace istk
