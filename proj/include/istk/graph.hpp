#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace istk {

// Vertices are dense ids 1..n. Index 0 of every per-vertex array is unused.
using Vertex = int;
using Label = std::int64_t;

// Unordered vertex pair, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    static Edge make(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
    bool touches(Vertex x) const { return u == x || v == x; }
    Vertex other(Vertex x) const { return x == u ? v : u; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple connected undirected graph. Immutable after construction.
class Graph {
public:
    // Throws NotSimple on loops or duplicate edges and Disconnected when the
    // edge set does not connect all n vertices. `labels` defaults to 1..n.
    Graph(int n, std::vector<Edge> edges, std::vector<Label> labels = {});

    int order() const { return n_; }
    std::size_t size() const { return edges_.size(); }
    bool contains(Vertex v) const { return v >= 1 && v <= n_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
    bool adjacent(Vertex a, Vertex b) const;

    // Sorted ascending.
    const std::vector<Edge>& edges() const { return edges_; }

    Label label(Vertex v) const { return labels_[v]; }
    // labels()[v] for v in 1..n; entry 0 is unused.
    const std::vector<Label>& labels() const { return labels_; }

    // N_G(U): union of neighborhoods minus U itself, ascending.
    std::vector<Vertex> neighborhood(std::span<const Vertex> set) const;

    bool is_independent(std::span<const Vertex> set) const;

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Label> labels_;
};

}  // namespace istk
