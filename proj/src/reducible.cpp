#include "istk/reducible.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <string>

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

void require_maximal(const Graph& graph, const SpanningTree& tree) {
    if (tree.order() != graph.order())
        throw Error(ErrorCode::PreconditionViolation, "tree and graph differ in order");
    if (!is_maximal(graph, tree)) throw Error(ErrorCode::PreconditionViolation, "spanning tree is not maximal");
}

// crossing[v] = number of good edges whose tree path uses the edge (v, parent(v)).
std::vector<int> crossing_counts(const TreeAnalysis& analysis) {
    const SpanningTree& t = analysis.tree();
    std::vector<int> count(t.order() + 1, 0);
    for (const auto& [l, w] : analysis.good_edges()) {
        ++count[l];
        ++count[w];
        count[t.lca(l, w)] -= 2;
    }
    const auto& order = t.preorder();
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (Vertex p = t.parent(*it)) count[p] += count[*it];
    return count;
}

int crossings_of(const SpanningTree& t, const std::vector<int>& crossing, Edge e) {
    return crossing[t.parent(e.u) == e.v ? e.u : e.v];
}

std::vector<Edge> critical_from(const TreeAnalysis& analysis, const std::vector<int>& crossing) {
    const SpanningTree& t = analysis.tree();
    std::vector<Edge> out;
    for (const Edge& e : t.edges())
        if (t.is_internal(e.u) && t.is_internal(e.v) && crossings_of(t, crossing, e) == 0) out.push_back(e);
    return out;
}

std::vector<Vertex> d_b_from(const TreeAnalysis& analysis, const std::vector<int>& crossing) {
    const SpanningTree& t = analysis.tree();
    const Graph& g = analysis.graph();
    std::vector<char> member(t.order() + 1, 0);

    // x qualifies through edge (x, y) when its only good edge is (l, x) and
    // some good edge (l, w) crosses (x, y) with x on the side of l.
    auto qualifies = [&](Edge e, Vertex x, Vertex y) {
        if (!analysis.in_d2(x) || analysis.good_leaves(x).size() != 1) return false;
        Vertex l = analysis.good_leaves(x).front();
        if (!t.same_side(e, x, l)) return false;
        for (Vertex w : g.neighbors(l))
            if (t.is_internal(w) && !t.has_edge(l, w) && t.same_side(e, y, w)) return true;
        return false;
    };

    for (const Edge& e : t.edges()) {
        if (!analysis.detachable(e.u) || !analysis.detachable(e.v)) continue;
        if (crossings_of(t, crossing, e) == 0) continue;
        if (qualifies(e, e.u, e.v)) member[e.u] = 1;
        if (qualifies(e, e.v, e.u)) member[e.v] = 1;
    }

    std::vector<Vertex> out;
    for (Vertex v = 1; v <= t.order(); ++v) {
        if (!member[v]) continue;
        int leaf_neighbors = 0;
        for (Vertex y : g.neighbors(v))
            if (t.is_leaf(y)) ++leaf_neighbors;
        ensure(leaf_neighbors == 1, "D_B vertex " + std::to_string(v) + " has " + std::to_string(leaf_neighbors) +
                                        " leaf neighbors");
        out.push_back(v);
    }
    return out;
}

// Component ids of T - C(T), indexed by vertex.
std::vector<int> split_at_critical(const SpanningTree& t, const std::vector<Edge>& critical) {
    DisjointSets sets(t.order());
    for (const Edge& e : t.edges())
        if (!std::binary_search(critical.begin(), critical.end(), e)) sets.unite(e.u, e.v);
    std::vector<int> comp(t.order() + 1, 0);
    for (Vertex v = 1; v <= t.order(); ++v) comp[v] = sets.find(v);
    return comp;
}

// reach[v]: some leaf reaches v along a tree path avoiding D(T).
std::vector<char> leaf_reachable_avoiding(const TreeAnalysis& analysis) {
    const SpanningTree& t = analysis.tree();
    const int n = t.order();
    DisjointSets sets(n);
    for (const Edge& e : t.edges())
        if (!analysis.detachable(e.u) && !analysis.detachable(e.v)) sets.unite(e.u, e.v);
    std::vector<char> root_has_leaf(n + 1, 0), reach(n + 1, 0);
    for (Vertex v = 1; v <= n; ++v)
        if (t.is_leaf(v)) root_has_leaf[sets.find(v)] = 1;
    for (Vertex v = 1; v <= n; ++v) reach[v] = !analysis.detachable(v) && root_has_leaf[sets.find(v)];
    return reach;
}

bool is_subset(const std::vector<Vertex>& small, const std::vector<Vertex>& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

std::vector<Edge> critical_edges(const Graph& graph, const SpanningTree& tree) {
    require_maximal(graph, tree);
    TreeAnalysis analysis(graph, tree);
    return critical_from(analysis, crossing_counts(analysis));
}

std::vector<Vertex> d_b_set(const Graph& graph, const SpanningTree& tree) {
    require_maximal(graph, tree);
    TreeAnalysis analysis(graph, tree);
    return d_b_from(analysis, crossing_counts(analysis));
}

ReducibleStructure find_reducible(const Graph& graph, const SpanningTree& tree) {
    if (graph.order() < 4) throw Error(ErrorCode::PreconditionViolation, "graph has fewer than four vertices");
    if (tree.leaf_count() <= tree.internal_count())
        throw Error(ErrorCode::PreconditionViolation, "tree has no more leaves than internal vertices");
    require_maximal(graph, tree);

    const int n = graph.order();
    TreeAnalysis analysis(graph, tree);
    auto crossing = crossing_counts(analysis);

    ReducibleStructure rs;
    rs.critical = critical_from(analysis, crossing);
    rs.d_b = d_b_from(analysis, crossing);
    std::vector<char> in_db(n + 1, 0);
    for (Vertex v : rs.d_b) {
        ensure(analysis.in_d2(v), "D_B vertex outside D2");
        in_db[v] = 1;
    }

    // Components in order of their lowest vertex; take the first with more
    // leaves than internal vertices.
    auto comp = split_at_critical(tree, rs.critical);
    std::vector<int> leaves(n + 1, 0), internal(n + 1, 0);
    for (Vertex v = 1; v <= n; ++v) (tree.is_leaf(v) ? leaves : internal)[comp[v]]++;
    int chosen = 0;
    for (Vertex v = 1; v <= n && !chosen; ++v)
        if (leaves[comp[v]] >= internal[comp[v]] + 1) chosen = comp[v];
    ensure(chosen != 0, "no component of T - C(T) has more leaves than internal vertices");

    auto reach = leaf_reachable_avoiding(analysis);
    for (Vertex v = 1; v <= n; ++v) {
        if (comp[v] != chosen) continue;
        rs.component.push_back(v);
        if (tree.is_leaf(v)) {
            rs.x.push_back(v);
            bool next_to_db = false;
            for (Vertex y : graph.neighbors(v)) next_to_db = next_to_db || in_db[y];
            if (next_to_db) {
                rs.x1.push_back(v);
            } else if (analysis.detachable(tree.neighbors(v).front())) {
                rs.x2.push_back(v);
            } else {
                rs.x3.push_back(v);
            }
        } else {
            rs.y.push_back(v);
            if (in_db[v]) {
                rs.y1.push_back(v);
            } else if (analysis.detachable(v)) {
                rs.y2.push_back(v);
            } else if (reach[v]) {
                rs.y3.push_back(v);
            } else {
                rs.y4.push_back(v);
            }
        }
    }
    rs.independent = rs.x2;

    auto size = [](const std::vector<Vertex>& s) { return static_cast<int>(s.size()); };
    ensure(graph.is_independent(rs.x), "leaves of T0 are not independent");
    ensure(size(rs.x1) <= size(rs.y1), "|X1| > |Y1|");
    ensure(size(rs.x3) <= size(rs.y3), "|X3| > |Y3|");
    ensure(size(rs.y4) >= size(rs.y2) - 1, "|Y4| < |Y2| - 1");
    auto around = graph.neighborhood(rs.x2);
    ensure(is_subset(around, rs.y2), "N_G(X2) is not contained in Y2");
    ensure(size(rs.x2) >= 2 * size(around), "|X2| < 2|N_G(X2)|");
    ensure(!rs.x2.empty(), "X2 is empty");
    return rs;
}

std::vector<std::pair<Vertex, Vertex>> separation_violations(const Graph& graph, const SpanningTree& tree) {
    require_maximal(graph, tree);
    TreeAnalysis analysis(graph, tree);
    auto crossing = crossing_counts(analysis);
    auto comp = split_at_critical(tree, critical_from(analysis, crossing));
    auto db = d_b_from(analysis, crossing);
    auto reach = leaf_reachable_avoiding(analysis);

    std::vector<Vertex> candidates;
    for (Vertex v = 1; v <= tree.order(); ++v)
        if (analysis.detachable(v) && !std::binary_search(db.begin(), db.end(), v)) candidates.push_back(v);

    std::vector<std::pair<Vertex, Vertex>> bad;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        for (std::size_t j = i + 1; j < candidates.size(); ++j) {
            Vertex u = candidates[i], w = candidates[j];
            if (comp[u] != comp[w]) continue;
            bool found = false;
            for (Vertex v : tree.path(u, w))
                found = found || (tree.is_internal(v) && !analysis.detachable(v) && !reach[v]);
            if (!found) bad.emplace_back(u, w);
        }
    }
    return bad;
}

namespace {

struct Extraction {
    std::vector<Vertex> s;
    std::vector<Vertex> l;
    std::vector<std::pair<Vertex, Vertex>> assignment;
};

// Largest (S, L) with L subset of `pool`, N_G(L) = S and a 2-expansion of S
// into L: match two copies of every neighbor into the pool, and while some
// copy stays unsaturated drop everything alternating-reachable from it.
std::optional<Extraction> extract(const Graph& graph, std::vector<Vertex> pool) {
    const int n = graph.order();
    std::sort(pool.begin(), pool.end());
    while (!pool.empty()) {
        auto side = graph.neighborhood(pool);
        if (side.empty()) return std::nullopt;

        std::vector<int> pos(n + 1, -1);
        for (std::size_t i = 0; i < pool.size(); ++i) pos[pool[i]] = static_cast<int>(i);
        std::vector<std::vector<int>> adj(side.size());
        for (std::size_t a = 0; a < side.size(); ++a)
            for (Vertex y : graph.neighbors(side[a]))
                if (pos[y] >= 0) adj[a].push_back(pos[y]);

        const int copies = static_cast<int>(2 * side.size());
        std::vector<int> match_copy(copies, -1), match_pool(pool.size(), -1), seen(pool.size(), -1);
        std::function<bool(int, int)> augment = [&](int c, int stamp) {
            for (int b : adj[c / 2]) {
                if (seen[b] == stamp) continue;
                seen[b] = stamp;
                if (match_pool[b] < 0 || augment(match_pool[b], stamp)) {
                    match_pool[b] = c;
                    match_copy[c] = b;
                    return true;
                }
            }
            return false;
        };
        bool saturated = true;
        for (int c = 0; c < copies; ++c) saturated = augment(c, c) && saturated;

        if (saturated) {
            Extraction out{side, pool, {}};
            for (std::size_t a = 0; a < side.size(); ++a) {
                Vertex first = pool[match_copy[2 * a]], second = pool[match_copy[2 * a + 1]];
                out.assignment.emplace_back(std::min(first, second), std::max(first, second));
            }
            return out;
        }

        std::vector<char> copy_reached(copies, 0), pool_reached(pool.size(), 0);
        std::queue<int> queue;
        for (int c = 0; c < copies; ++c) {
            if (match_copy[c] < 0) {
                copy_reached[c] = 1;
                queue.push(c);
            }
        }
        while (!queue.empty()) {
            int c = queue.front();
            queue.pop();
            for (int b : adj[c / 2]) {
                if (pool_reached[b]) continue;
                pool_reached[b] = 1;
                int mate = match_pool[b];
                ensure(mate >= 0, "augmenting path left after maximum matching");
                if (!copy_reached[mate]) {
                    copy_reached[mate] = 1;
                    queue.push(mate);
                }
            }
        }
        std::vector<Vertex> rest;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (!pool_reached[i]) rest.push_back(pool[i]);
        ensure(rest.size() < pool.size(), "expansion extraction made no progress");
        pool = std::move(rest);
    }
    return std::nullopt;
}

ExpansionPair to_pair(const Extraction& e) { return {e.s, e.l, e.assignment}; }

}  // namespace

ExpansionPair two_expansion(const Graph& graph, std::span<const Vertex> independent) {
    std::vector<Vertex> pool(independent.begin(), independent.end());
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    if (pool.empty()) throw Error(ErrorCode::PreconditionViolation, "empty vertex set");
    for (Vertex v : pool) {
        if (!graph.contains(v)) throw Error(ErrorCode::PreconditionViolation, "vertex out of range");
        if (graph.degree(v) == 0) throw Error(ErrorCode::PreconditionViolation, "isolated vertex");
    }
    if (!graph.is_independent(pool)) throw Error(ErrorCode::PreconditionViolation, "set is not independent");
    auto around = graph.neighborhood(pool);
    if (pool.size() < 2 * around.size())
        throw Error(ErrorCode::PreconditionViolation, "|L'| = " + std::to_string(pool.size()) + " < 2|N(L')| = " +
                                                          std::to_string(2 * around.size()));

    auto found = extract(graph, pool);
    ensure(found.has_value(), "no expansion pair found although |L'| >= 2|N(L')|");
    Extraction current = std::move(*found);

    // Shrink to an inclusion-minimal S: drop s whenever some pair avoids it.
    // Extraction keeps every valid sub-pair, so one pass suffices.
    const std::vector<Vertex> order = current.s;
    for (Vertex s : order) {
        if (!std::binary_search(current.s.begin(), current.s.end(), s)) continue;
        std::vector<Vertex> avoiding;
        for (Vertex l : current.l)
            if (!graph.adjacent(l, s)) avoiding.push_back(l);
        if (auto smaller = extract(graph, avoiding)) current = std::move(*smaller);
    }

    // A minimal pair has a connected bipartite subgraph; restrict to the
    // component of the lowest vertex otherwise.
    std::vector<Vertex> members = current.s;
    members.insert(members.end(), current.l.begin(), current.l.end());
    std::sort(members.begin(), members.end());
    DisjointSets sets(graph.order());
    std::vector<char> in_s(graph.order() + 1, 0);
    for (Vertex s : current.s) in_s[s] = 1;
    for (Vertex l : current.l)
        for (Vertex y : graph.neighbors(l))
            if (in_s[y]) sets.unite(l, y);
    int keep = sets.find(members.front());
    Extraction restricted;
    for (std::size_t i = 0; i < current.s.size(); ++i) {
        if (sets.find(current.s[i]) != keep) continue;
        restricted.s.push_back(current.s[i]);
        restricted.assignment.push_back(current.assignment[i]);
    }
    for (Vertex l : current.l)
        if (sets.find(l) == keep) restricted.l.push_back(l);

    ExpansionPair pair = to_pair(restricted);
    ensure(graph.neighborhood(pair.l) == pair.s, "N_G(L) != S");
    return pair;
}

std::vector<Edge> expansion_tree(const Graph& graph, const ExpansionPair& pair) {
    const int n = graph.order();
    const auto& S = pair.s;
    const auto& L = pair.l;
    auto invalid = [](const std::string& why) { return Error(ErrorCode::InvalidPair, why); };

    if (S.empty() || L.empty()) throw invalid("S and L must be nonempty");
    if (!std::is_sorted(S.begin(), S.end()) || !std::is_sorted(L.begin(), L.end()) ||
        std::adjacent_find(S.begin(), S.end()) != S.end() || std::adjacent_find(L.begin(), L.end()) != L.end())
        throw invalid("S and L must be ascending without repeats");
    for (Vertex v : S)
        if (!graph.contains(v)) throw invalid("vertex out of range");
    for (Vertex v : L)
        if (!graph.contains(v)) throw invalid("vertex out of range");
    if (pair.assignment.size() != S.size()) throw invalid("assignment does not cover S");
    if (graph.neighborhood(L) != S) throw invalid("N_G(L) != S");

    std::vector<int> s_index(n + 1, -1), owner(n + 1, -1);
    for (std::size_t i = 0; i < S.size(); ++i) s_index[S[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < S.size(); ++i) {
        auto [a, b] = pair.assignment[i];
        for (Vertex x : {a, b}) {
            if (!std::binary_search(L.begin(), L.end(), x) || !graph.adjacent(S[i], x))
                throw invalid("assigned vertex is not an L-neighbor of its owner");
            if (owner[x] >= 0) throw invalid("assigned vertices are not private");
            owner[x] = static_cast<int>(i);
        }
        if (a == b) throw invalid("assigned vertices must be distinct");
    }

    // Rainbow spanning tree on S: every l in L may join at most one pair of
    // S-vertices. An assigned l already hangs off its owner, so it can only
    // join the owner to another neighbor. Solved as the intersection of the
    // graphic matroid on S with the partition matroid on labels.
    struct Element {
        int label;  // index into L
        int a, b;   // indices into S
    };
    std::vector<Element> elements;
    for (std::size_t li = 0; li < L.size(); ++li) {
        std::vector<int> around;
        for (Vertex y : graph.neighbors(L[li])) around.push_back(s_index[y]);
        const int own = owner[L[li]];
        for (std::size_t i = 0; i < around.size(); ++i) {
            if (own >= 0) {
                if (around[i] != own) elements.push_back({static_cast<int>(li), own, around[i]});
                continue;
            }
            for (std::size_t j = i + 1; j < around.size(); ++j)
                elements.push_back({static_cast<int>(li), around[i], around[j]});
        }
    }

    const int r = static_cast<int>(S.size());
    const int m = static_cast<int>(elements.size());
    std::vector<char> chosen(m, 0);
    std::vector<int> label_holder(L.size(), -1);
    {
        DisjointSets sets(r);
        for (int e = 0; e < m; ++e) {
            if (label_holder[elements[e].label] >= 0) continue;
            if (!sets.unite(elements[e].a + 1, elements[e].b + 1)) continue;
            chosen[e] = 1;
            label_holder[elements[e].label] = e;
        }
    }
    auto chosen_count = [&] { return static_cast<int>(std::count(chosen.begin(), chosen.end(), 1)); };

    while (chosen_count() < r - 1) {
        // Forest adjacency over S for cycle queries.
        std::vector<std::vector<std::pair<int, int>>> forest(r);
        DisjointSets sets(r);
        for (int e = 0; e < m; ++e) {
            if (!chosen[e]) continue;
            forest[elements[e].a].emplace_back(elements[e].b, e);
            forest[elements[e].b].emplace_back(elements[e].a, e);
            sets.unite(elements[e].a + 1, elements[e].b + 1);
        }
        auto forest_path = [&](int from, int to) {
            std::vector<int> via(r, -2), prev(r, -1);
            std::vector<int> stack{from};
            via[from] = -1;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (auto [y, e] : forest[x]) {
                    if (via[y] != -2) continue;
                    via[y] = e;
                    prev[y] = x;
                    stack.push_back(y);
                }
            }
            std::vector<char> on(m, 0);
            for (int x = to; x != from; x = prev[x]) on[via[x]] = 1;
            return on;
        };

        std::vector<char> source(m, 0);
        std::vector<std::vector<char>> cycle(m);
        for (int e = 0; e < m; ++e) {
            if (chosen[e]) continue;
            if (sets.find(elements[e].a + 1) != sets.find(elements[e].b + 1)) {
                source[e] = 1;
            } else {
                cycle[e] = forest_path(elements[e].a, elements[e].b);
            }
        }

        std::vector<int> prev(m, -2);
        std::queue<int> queue;
        for (int e = 0; e < m; ++e) {
            if (source[e]) {
                prev[e] = -1;
                queue.push(e);
            }
        }
        int sink = -1;
        while (!queue.empty() && sink < 0) {
            int e = queue.front();
            queue.pop();
            if (!chosen[e]) {
                int holder = label_holder[elements[e].label];
                if (holder < 0) {
                    sink = e;
                } else if (prev[holder] == -2) {
                    prev[holder] = e;
                    queue.push(holder);
                }
                continue;
            }
            for (int y = 0; y < m; ++y) {
                if (chosen[y] || prev[y] != -2) continue;
                if (source[y] || cycle[y][e]) {
                    prev[y] = e;
                    queue.push(y);
                }
            }
        }
        if (sink < 0) break;
        for (int e = sink; e != -1; e = prev[e]) chosen[e] ^= 1;
        std::fill(label_holder.begin(), label_holder.end(), -1);
        for (int e = 0; e < m; ++e)
            if (chosen[e]) label_holder[elements[e].label] = e;
    }
    if (chosen_count() != r - 1)
        throw invalid("bipartite subgraph has no spanning tree with all of S and |S|-1 of L internal");

    std::vector<Edge> tree;
    for (std::size_t i = 0; i < S.size(); ++i) {
        tree.push_back(Edge::make(S[i], pair.assignment[i].first));
        tree.push_back(Edge::make(S[i], pair.assignment[i].second));
    }
    for (std::size_t li = 0; li < L.size(); ++li) {
        const Vertex l = L[li];
        const int e = label_holder[li];
        if (e >= 0) {
            const Element& el = elements[e];
            if (owner[l] >= 0) {
                tree.push_back(Edge::make(l, S[el.a == owner[l] ? el.b : el.a]));
            } else {
                tree.push_back(Edge::make(l, S[el.a]));
                tree.push_back(Edge::make(l, S[el.b]));
            }
        } else if (owner[l] < 0) {
            tree.push_back(Edge::make(l, graph.neighbors(l).front()));
        }
    }
    std::sort(tree.begin(), tree.end());

    ensure(tree.size() == S.size() + L.size() - 1, "bipartite tree has the wrong edge count");
    DisjointSets sets(n);
    std::vector<int> degree(n + 1, 0);
    for (const Edge& e : tree) {
        ensure(sets.unite(e.u, e.v), "bipartite tree has a cycle");
        ++degree[e.u];
        ++degree[e.v];
    }
    int internal_l = 0;
    for (Vertex s : S) ensure(degree[s] >= 2, "S-vertex is a leaf of the bipartite tree");
    for (Vertex l : L) internal_l += degree[l] >= 2 ? 1 : 0;
    ensure(internal_l == r - 1, "bipartite tree does not have |S|-1 internal L-vertices");
    return tree;
}

std::variant<Reduction, DegenerateAnswer> apply_reduction(const Graph& graph, std::optional<int> k,
                                                          const ExpansionPair& pair) {
    auto bipartite = expansion_tree(graph, pair);
    const int n = graph.order();
    const int s_size = static_cast<int>(pair.s.size());

    std::vector<char> removed(n + 1, 0);
    for (Vertex v : pair.s) removed[v] = 1;
    for (Vertex v : pair.l) removed[v] = 1;
    std::vector<Vertex> attachment;
    for (Vertex v : graph.neighborhood(pair.s))
        if (!removed[v]) attachment.push_back(v);

    if (attachment.empty()) {
        ensure(static_cast<int>(pair.s.size() + pair.l.size()) == n, "S and L do not cover a connected graph");
        SpanningTree witness = validate_spanning_tree(graph, bipartite);
        ensure(witness.internal_count() == 2 * s_size - 1, "degenerate witness has the wrong internal count");
        return DegenerateAnswer{2 * s_size - 1, std::move(witness)};
    }

    ReductionStep step;
    step.source = std::make_shared<const Graph>(graph);
    step.pair = pair;
    step.attachment = attachment;
    step.bipartite_tree = std::move(bipartite);
    step.k_before = k;
    if (k) step.k_after = *k - 2 * s_size + 2;

    std::vector<Vertex> renamed(n + 1, 0);
    step.origin.push_back(0);
    std::vector<Label> labels{0};
    Label top_label = 0;
    for (Vertex v = 1; v <= n; ++v) {
        top_label = std::max(top_label, graph.label(v));
        if (removed[v]) continue;
        renamed[v] = static_cast<Vertex>(step.origin.size());
        step.origin.push_back(v);
        labels.push_back(graph.label(v));
    }
    step.s_vertex = static_cast<Vertex>(step.origin.size());
    step.l_vertex = step.s_vertex + 1;
    step.origin.push_back(0);
    step.origin.push_back(0);
    labels.push_back(top_label + 1);
    labels.push_back(top_label + 2);
    step.reduced_order = step.l_vertex;

    std::vector<Edge> edges;
    for (const Edge& e : graph.edges())
        if (!removed[e.u] && !removed[e.v]) edges.push_back(Edge::make(renamed[e.u], renamed[e.v]));
    for (Vertex x : attachment) edges.push_back(Edge::make(renamed[x], step.s_vertex));
    edges.push_back(Edge::make(step.s_vertex, step.l_vertex));

    ensure(step.reduced_order <= n - 1, "reduction did not shrink the graph");
    try {
        Graph reduced(step.reduced_order, std::move(edges), std::move(labels));
        return Reduction{std::move(reduced), step.k_after, std::move(step)};
    } catch (const Error& e) {
        throw Error(ErrorCode::InternalContradiction, std::string("reduced graph is invalid: ") + e.what());
    }
}

SpanningTree lift_tree(const ReductionStep& step, const SpanningTree& reduced) {
    if (reduced.order() != step.reduced_order)
        throw Error(ErrorCode::InvalidTree, "tree does not belong to the reduced graph");
    if (!reduced.has_edge(step.s_vertex, step.l_vertex) || reduced.degree(step.l_vertex) != 1)
        throw Error(ErrorCode::InvalidTree, "v_L must hang off v_S");
    const Graph& source = *step.source;

    std::vector<Edge> edges = step.bipartite_tree;
    for (const Edge& e : reduced.edges()) {
        if (e.touches(step.l_vertex)) continue;
        if (e.touches(step.s_vertex)) {
            Vertex x = step.origin[e.other(step.s_vertex)];
            auto s = std::find_if(step.pair.s.begin(), step.pair.s.end(),
                                  [&](Vertex c) { return source.adjacent(c, x); });
            if (s == step.pair.s.end()) throw Error(ErrorCode::InvalidTree, "v_S neighbor has no S-neighbor");
            edges.push_back(Edge::make(*s, x));
        } else {
            edges.push_back(Edge::make(step.origin[e.u], step.origin[e.v]));
        }
    }

    std::optional<SpanningTree> lifted;
    try {
        lifted = validate_spanning_tree(source, edges);
    } catch (const Error& e) {
        throw Error(ErrorCode::InvalidTree, std::string("lifted edges do not form a spanning tree: ") + e.what());
    }
    const int bound = reduced.internal_count() + 2 * static_cast<int>(step.pair.s.size()) - 2;
    if (lifted->internal_count() < bound)
        throw Error(ErrorCode::LiftBoundViolated, "lifted tree has " + std::to_string(lifted->internal_count()) +
                                                      " internal vertices, expected at least " +
                                                      std::to_string(bound));
    return std::move(*lifted);
}

SpanningTree lift_through(const std::vector<ReductionStep>& trace, SpanningTree tree) {
    for (auto it = trace.rbegin(); it != trace.rend(); ++it) tree = lift_tree(*it, tree);
    return tree;
}

}  // namespace istk
