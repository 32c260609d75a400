#include "istk/exact_oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "istk/error.hpp"

namespace istk {

namespace {

// Union-find with undo, no path compression.
class RollbackSets {
public:
    explicit RollbackSets(int n) : parent_(n + 1), size_(n + 1, 1) {
        for (int i = 0; i <= n; ++i) parent_[i] = i;
    }
    int find(int x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        history_.push_back(b);
    }
    void undo() {
        int b = history_.back();
        history_.pop_back();
        size_[parent_[b]] -= size_[b];
        parent_[b] = b;
    }

private:
    std::vector<int> parent_, size_;
    std::vector<int> history_;
};

class Search {
public:
    explicit Search(const Graph& graph)
        : graph_(graph), edges_(graph.edges()), n_(graph.order()), m_(static_cast<int>(edges_.size())),
          sets_(n_), degree_(n_ + 1, 0), potential_(n_ + 1, 0), chosen_(m_, 0) {}

    void run() { branch(0, 0); }

    int best() const { return best_; }
    const std::vector<Edge>& best_edges() const { return best_edges_; }

private:
    // Upper bound on the internal count of any completion: a vertex needs a
    // second usable edge to become internal, and every degree above two
    // forces an extra leaf.
    int bound(int from) {
        std::fill(potential_.begin(), potential_.end(), 0);
        for (int j = from; j < m_; ++j) {
            const Edge& e = edges_[j];
            if (sets_.find(e.u) == sets_.find(e.v)) continue;
            ++potential_[e.u];
            ++potential_[e.v];
        }
        int reachable = 0, excess = 0;
        for (Vertex v = 1; v <= n_; ++v) {
            if (degree_[v] + potential_[v] >= 2) ++reachable;
            excess += std::max(0, degree_[v] - 2);
        }
        return std::min(reachable, n_ - 2 - excess);
    }

    bool connectable(int from) const {
        std::vector<int> comp(n_ + 1);
        for (Vertex v = 1; v <= n_; ++v) comp[v] = sets_.find(v);
        std::vector<int> parent(n_ + 1);
        for (int i = 0; i <= n_; ++i) parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int pieces = 0;
        for (Vertex v = 1; v <= n_; ++v)
            if (comp[v] == v) ++pieces;
        for (int j = from; j < m_ && pieces > 1; ++j) {
            int a = find(comp[edges_[j].u]), b = find(comp[edges_[j].v]);
            if (a == b) continue;
            parent[a] = b;
            --pieces;
        }
        return pieces == 1;
    }

    void record() {
        int internal = 0;
        for (Vertex v = 1; v <= n_; ++v)
            if (degree_[v] >= 2) ++internal;
        if (internal <= best_) return;
        best_ = internal;
        best_edges_.clear();
        for (int j = 0; j < m_; ++j)
            if (chosen_[j]) best_edges_.push_back(edges_[j]);
    }

    void branch(int i, int taken) {
        if (best_ == n_ - 2) return;
        if (taken == n_ - 1) {
            record();
            return;
        }
        if (i == m_ || bound(i) <= best_) return;
        const Edge& e = edges_[i];
        if (sets_.find(e.u) != sets_.find(e.v)) {
            sets_.unite(e.u, e.v);
            ++degree_[e.u];
            ++degree_[e.v];
            chosen_[i] = 1;
            branch(i + 1, taken + 1);
            chosen_[i] = 0;
            --degree_[e.u];
            --degree_[e.v];
            sets_.undo();
            if (!connectable(i + 1)) return;
        }
        branch(i + 1, taken);
    }

    const Graph& graph_;
    const std::vector<Edge>& edges_;
    int n_, m_;
    RollbackSets sets_;
    std::vector<int> degree_, potential_;
    std::vector<char> chosen_;
    int best_ = -1;
    std::vector<Edge> best_edges_;
};

}  // namespace

OptResult opt_bruteforce(const Graph& graph, int cap) {
    if (graph.order() > cap)
        throw Error(ErrorCode::TooLarge, "graph has " + std::to_string(graph.order()) +
                                             " vertices, oracle cap is " + std::to_string(cap));
    if (graph.order() <= 2) return {0, validate_spanning_tree(graph, graph.edges())};
    Search search(graph);
    search.run();
    ensure(search.best() >= 1, "oracle found no spanning tree");
    return {search.best(), validate_spanning_tree(graph, search.best_edges())};
}

Verdict verify_certificate(const Graph& graph, std::span<const Edge> edges, int k) {
    for (const Edge& e : edges)
        if (!graph.contains(e.u) || !graph.contains(e.v))
            return {false, std::string(to_string(ErrorCode::UnknownVertex)) + ": edge endpoint outside the graph"};
    try {
        SpanningTree tree = validate_spanning_tree(graph, edges);
        if (tree.internal_count() < k)
            return {false, "tree has " + std::to_string(tree.internal_count()) + " internal vertices, need " +
                               std::to_string(k)};
        return {true, "valid spanning tree with " + std::to_string(tree.internal_count()) + " internal vertices"};
    } catch (const Error& e) {
        return {false, e.what()};
    }
}

}  // namespace istk
