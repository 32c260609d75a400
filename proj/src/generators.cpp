#include "istk/generators.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "istk/error.hpp"

namespace istk {

namespace {

Error bad(std::string_view spec, const std::string& why) {
    return Error(ErrorCode::BadSpec, "'" + std::string(spec) + "': " + why);
}

std::vector<std::string_view> split_on(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        auto at = text.find(sep, start);
        parts.push_back(text.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
        if (at == std::string_view::npos) break;
        start = at + 1;
    }
    return parts;
}

int number(std::string_view spec, std::string_view word) {
    int value = 0;
    auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || end != word.data() + word.size() || value < 0)
        throw bad(spec, "expected a non-negative integer, got '" + std::string(word) + "'");
    return value;
}

// Positional or key=value arguments, in the order of `keys`.
std::vector<int> arguments(std::string_view spec, std::string_view text, std::vector<std::string_view> keys) {
    auto parts = split_on(text, ',');
    if (parts.size() != keys.size())
        throw bad(spec, "expected " + std::to_string(keys.size()) + " argument(s)");
    std::vector<int> values(keys.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        auto part = parts[i];
        if (auto eq = part.find('='); eq != std::string_view::npos) {
            auto key = part.substr(0, eq);
            auto it = std::find(keys.begin(), keys.end(), key);
            if (it == keys.end()) throw bad(spec, "unknown key '" + std::string(key) + "'");
            values[it - keys.begin()] = number(spec, part.substr(eq + 1));
        } else {
            values[i] = number(spec, part);
        }
    }
    return values;
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.push_back(Edge{v, v + 1});
    return Graph(n, std::move(edges));
}

}  // namespace

Graph random_connected(int n, int m, std::uint64_t seed) {
    const long long most = 1LL * n * (n - 1) / 2;
    if (n < 1 || m < n - 1 || m > most)
        throw Error(ErrorCode::BadSpec, "need n >= 1 and n-1 <= m <= n(n-1)/2");
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

    // Uniform labeled tree decoded from a random Pruefer sequence.
    std::set<Edge> edges;
    if (n == 2) edges.insert(Edge{1, 2});
    if (n >= 3) {
        std::vector<int> code(n - 2), degree(n + 1, 1);
        for (int& c : code) {
            c = pick(1, n);
            ++degree[c];
        }
        std::set<int> leaves;
        for (int v = 1; v <= n; ++v)
            if (degree[v] == 1) leaves.insert(v);
        for (int c : code) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.insert(Edge::make(leaf, c));
            if (--degree[c] == 1) leaves.insert(c);
        }
        edges.insert(Edge::make(*leaves.begin(), *std::next(leaves.begin())));
    }

    const long long extra = m - (n - 1);
    if (extra > most / 2) {
        std::vector<Edge> missing;
        for (Vertex a = 1; a <= n; ++a)
            for (Vertex b = a + 1; b <= n; ++b)
                if (!edges.count(Edge{a, b})) missing.push_back(Edge{a, b});
        std::shuffle(missing.begin(), missing.end(), rng);
        edges.insert(missing.begin(), missing.begin() + extra);
    } else {
        while (static_cast<long long>(edges.size()) < m) {
            int a = pick(1, n), b = pick(1, n);
            if (a != b) edges.insert(Edge::make(a, b));
        }
    }
    return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

Graph generate(std::string_view spec, std::uint64_t seed) {
    auto colon = spec.find(':');
    if (colon == std::string_view::npos) throw bad(spec, "expected kind:arguments");
    auto kind = spec.substr(0, colon);
    auto rest = spec.substr(colon + 1);

    if (kind == "path") {
        int n = arguments(spec, rest, {"n"})[0];
        if (n < 1) throw bad(spec, "path needs n >= 1");
        return path_graph(n);
    }
    if (kind == "cycle") {
        int n = arguments(spec, rest, {"n"})[0];
        if (n < 3) throw bad(spec, "cycle needs n >= 3");
        std::vector<Edge> edges;
        for (Vertex v = 1; v < n; ++v) edges.push_back(Edge{v, v + 1});
        edges.push_back(Edge{1, n});
        return Graph(n, std::move(edges));
    }
    if (kind == "star") {
        int n = arguments(spec, rest, {"n"})[0];
        if (n < 2) throw bad(spec, "star needs n >= 2");
        std::vector<Edge> edges;
        for (Vertex v = 2; v <= n; ++v) edges.push_back(Edge{1, v});
        return Graph(n, std::move(edges));
    }
    if (kind == "doublestar") {
        auto ab = arguments(spec, rest, {"a", "b"});
        std::vector<Edge> edges{{1, 2}};
        Vertex next = 3;
        for (int i = 0; i < ab[0]; ++i) edges.push_back(Edge{1, next++});
        for (int i = 0; i < ab[1]; ++i) edges.push_back(Edge{2, next++});
        return Graph(next - 1, std::move(edges));
    }
    if (kind == "caterpillar") {
        auto nl = arguments(spec, rest, {"n", "legs"});
        if (nl[0] < 1) throw bad(spec, "caterpillar needs a spine");
        std::vector<Edge> edges;
        for (Vertex v = 1; v < nl[0]; ++v) edges.push_back(Edge{v, v + 1});
        Vertex next = nl[0] + 1;
        for (Vertex v = 1; v <= nl[0]; ++v)
            for (int i = 0; i < nl[1]; ++i) edges.push_back(Edge{v, next++});
        if (next - 1 < 1) throw bad(spec, "empty caterpillar");
        return Graph(next - 1, std::move(edges));
    }
    if (kind == "gnp") {
        auto nm = arguments(spec, rest, {"n", "m"});
        try {
            return random_connected(nm[0], nm[1], seed);
        } catch (const Error& e) {
            throw bad(spec, e.what());
        }
    }
    throw bad(spec, "unknown generator '" + std::string(kind) + "'");
}

namespace {

using Code = std::uint32_t;

// Bit index of pair (a, b), a < b, vertices 0-based.
int pair_bit(int a, int b) { return b * (b - 1) / 2 + a; }

// Canonical code: stable color refinement orders the vertices into cells;
// the minimum adjacency code over orderings consistent with the cells is an
// isomorphism invariant.
Code canonical(int n, const std::vector<std::uint32_t>& adj) {
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = __builtin_popcount(adj[v]);
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s{color[v]};
            std::vector<int> around;
            for (int w = 0; w < n; ++w)
                if (adj[v] >> w & 1) around.push_back(color[w]);
            std::sort(around.begin(), around.end());
            s.insert(s.end(), around.begin(), around.end());
            sig[v] = {s, v};
        }
        std::map<std::vector<int>, int> rank;
        for (auto& [s, v] : sig) rank.emplace(s, 0);
        int r = 0;
        for (auto& [s, value] : rank) value = r++;
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v) next[v] = rank[sig[v].first];
        int before = static_cast<int>(std::set<int>(color.begin(), color.end()).size());
        color = next;
        if (r == before) break;
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return color[a] != color[b] ? color[a] < color[b] : a < b; });
    std::vector<std::pair<int, int>> cells;  // [begin, end) in order
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && color[order[j]] == color[order[i]]) ++j;
        cells.emplace_back(i, j);
        i = j;
    }

    Code best = ~Code{0};
    std::function<void(std::size_t)> permute = [&](std::size_t cell) {
        if (cell == cells.size()) {
            Code code = 0;
            for (int b = 1; b < n; ++b)
                for (int a = 0; a < b; ++a)
                    if (adj[order[a]] >> order[b] & 1) code |= Code{1} << pair_bit(a, b);
            best = std::min(best, code);
            return;
        }
        auto [lo, hi] = cells[cell];
        std::sort(order.begin() + lo, order.begin() + hi);
        do {
            permute(cell + 1);
        } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
    };
    permute(0);
    return best;
}

std::vector<std::uint32_t> decode(int n, Code code) {
    std::vector<std::uint32_t> adj(n, 0);
    for (int b = 1; b < n; ++b)
        for (int a = 0; a < b; ++a)
            if (code >> pair_bit(a, b) & 1) {
                adj[a] |= 1u << b;
                adj[b] |= 1u << a;
            }
    return adj;
}

std::vector<Code> connected_codes(int n) {
    if (n == 1) return {0};
    std::set<Code> out;
    for (Code smaller : connected_codes(n - 1)) {
        auto base = decode(n - 1, smaller);
        for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
            auto adj = base;
            adj.push_back(mask);
            for (int v = 0; v < n - 1; ++v)
                if (mask >> v & 1) adj[v] |= 1u << (n - 1);
            out.insert(canonical(n, adj));
        }
    }
    return {out.begin(), out.end()};
}

}  // namespace

void for_each_connected_graph(int n, const std::function<void(const Graph&)>& visit) {
    if (n < 1 || n > 8) throw Error(ErrorCode::BadSpec, "enumeration supports 1 <= n <= 8");
    for (Code code : connected_codes(n)) {
        auto adj = decode(n, code);
        std::vector<Edge> edges;
        for (int b = 1; b < n; ++b)
            for (int a = 0; a < b; ++a)
                if (adj[a] >> b & 1) edges.push_back(Edge{a + 1, b + 1});
        visit(Graph(n, std::move(edges)));
    }
}

}  // namespace istk
