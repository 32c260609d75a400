#include "istk/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "istk/error.hpp"

namespace istk {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::Io: return "IoError";
        case ErrorCode::NotSimple: return "NotSimple";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::NotSubgraph: return "NotSubgraph";
        case ErrorCode::NotTree: return "NotTree";
        case ErrorCode::NotSpanning: return "NotSpanning";
        case ErrorCode::NotApplicable: return "NotApplicable";
        case ErrorCode::NoBranchpoint: return "NoBranchpoint";
        case ErrorCode::PreconditionViolation: return "PreconditionViolation";
        case ErrorCode::StaleCandidate: return "StaleCandidate";
        case ErrorCode::InvalidPair: return "InvalidPair";
        case ErrorCode::InvalidTree: return "InvalidTree";
        case ErrorCode::LiftBoundViolated: return "LiftBoundViolated";
        case ErrorCode::InternalContradiction: return "InternalContradiction";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::BadSpec: return "BadSpec";
    }
    return "Unknown";
}

Graph::Graph(int n, std::vector<Edge> edges, std::vector<Label> labels)
    : n_(n), edges_(std::move(edges)), adjacency_(n + 1), labels_(std::move(labels)) {
    if (n < 1) throw Error(ErrorCode::NotSimple, "graph needs at least one vertex");
    if (labels_.empty()) {
        labels_.resize(n + 1);
        std::iota(labels_.begin(), labels_.end(), Label{0});
    }
    if (static_cast<int>(labels_.size()) != n + 1)
        throw Error(ErrorCode::NotSimple, "label table has wrong size");

    for (auto& e : edges_) {
        if (!contains(e.u) || !contains(e.v))
            throw Error(ErrorCode::UnknownVertex, "edge endpoint out of range");
        if (e.u == e.v)
            throw Error(ErrorCode::NotSimple, "self-loop at vertex " + std::to_string(labels_[e.u]));
        e = Edge::make(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw Error(ErrorCode::NotSimple, "duplicate edge " + std::to_string(labels_[dup->u]) + "-" +
                                              std::to_string(labels_[dup->v]));

    for (const auto& e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());

    std::vector<char> seen(n + 1, 0);
    std::vector<Vertex> stack{1};
    seen[1] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : adjacency_[x]) {
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    if (reached != n)
        throw Error(ErrorCode::Disconnected,
                    "only " + std::to_string(reached) + " of " + std::to_string(n) + " vertices reachable");
}

bool Graph::adjacent(Vertex a, Vertex b) const {
    if (!contains(a) || !contains(b)) return false;
    const auto& list = adjacency_[a].size() <= adjacency_[b].size() ? adjacency_[a] : adjacency_[b];
    Vertex target = &list == &adjacency_[a] ? b : a;
    return std::binary_search(list.begin(), list.end(), target);
}

std::vector<Vertex> Graph::neighborhood(std::span<const Vertex> set) const {
    std::vector<char> in_set(n_ + 1, 0), mark(n_ + 1, 0);
    for (Vertex v : set) in_set[v] = 1;
    std::vector<Vertex> out;
    for (Vertex v : set) {
        for (Vertex y : adjacency_[v]) {
            if (!in_set[y] && !mark[y]) {
                mark[y] = 1;
                out.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Graph::is_independent(std::span<const Vertex> set) const {
    std::vector<char> in_set(n_ + 1, 0);
    for (Vertex v : set) in_set[v] = 1;
    for (Vertex v : set)
        for (Vertex y : adjacency_[v])
            if (in_set[y]) return false;
    return true;
}

}  // namespace istk
