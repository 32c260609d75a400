#include "istk/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>

#include "istk/error.hpp"

namespace istk {

namespace {

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) words.push_back(line.substr(i, j - i));
        i = j;
    }
    return words;
}

Label positive(std::string_view word, int line_no) {
    Label value = 0;
    auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || end != word.data() + word.size() || value < 1)
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line_no) + ": expected a positive integer, got '" + std::string(word) + "'");
    return value;
}

std::vector<std::pair<Label, Label>> read_pairs(std::istream& in) {
    std::vector<std::pair<Label, Label>> pairs;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto words = split(line);
        if (words.empty() || words.front().front() == '#') continue;
        if (words.size() != 2)
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected two vertex labels");
        pairs.emplace_back(positive(words[0], line_no), positive(words[1], line_no));
    }
    return pairs;
}

Graph parse_edgelist(std::istream& in) {
    auto pairs = read_pairs(in);
    if (pairs.empty()) throw Error(ErrorCode::ParseError, "no edges");
    std::vector<Label> labels;
    for (auto [a, b] : pairs) {
        labels.push_back(a);
        labels.push_back(b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    auto id = [&](Label x) {
        return static_cast<Vertex>(std::lower_bound(labels.begin(), labels.end(), x) - labels.begin()) + 1;
    };
    std::vector<Edge> edges;
    for (auto [a, b] : pairs) edges.push_back(Edge{id(a), id(b)});
    labels.insert(labels.begin(), 0);
    const int n = static_cast<int>(labels.size()) - 1;
    return Graph(n, std::move(edges), std::move(labels));
}

Graph parse_dimacs(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long n = -1, m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        auto words = split(line);
        if (words.empty() || words.front() == "c") continue;
        auto where = "line " + std::to_string(line_no) + ": ";
        if (words.front() == "p") {
            if (n >= 0) throw Error(ErrorCode::ParseError, where + "second problem line");
            if (words.size() != 4 || words[1] != "edge")
                throw Error(ErrorCode::ParseError, where + "expected 'p edge n m'");
            n = positive(words[2], line_no);
            auto [end, ec] = std::from_chars(words[3].data(), words[3].data() + words[3].size(), m);
            if (ec != std::errc() || end != words[3].data() + words[3].size() || m < 0)
                throw Error(ErrorCode::ParseError, where + "bad edge count");
        } else if (words.front() == "e") {
            if (n < 0) throw Error(ErrorCode::ParseError, where + "edge before problem line");
            if (words.size() != 3) throw Error(ErrorCode::ParseError, where + "expected 'e u v'");
            Label a = positive(words[1], line_no), b = positive(words[2], line_no);
            if (a > n || b > n) throw Error(ErrorCode::ParseError, where + "vertex exceeds n");
            edges.push_back(Edge{static_cast<Vertex>(a), static_cast<Vertex>(b)});
        } else {
            throw Error(ErrorCode::ParseError, where + "unknown line type '" + std::string(words.front()) + "'");
        }
    }
    if (n < 0) throw Error(ErrorCode::ParseError, "missing problem line");
    if (static_cast<long long>(edges.size()) != m)
        throw Error(ErrorCode::ParseError, "problem line announces " + std::to_string(m) + " edges, found " +
                                               std::to_string(edges.size()));
    return Graph(static_cast<int>(n), std::move(edges));
}

}  // namespace

Format parse_format(std::string_view name) {
    if (name == "edgelist") return Format::Edgelist;
    if (name == "dimacs") return Format::Dimacs;
    throw Error(ErrorCode::BadSpec, "unknown format '" + std::string(name) + "'");
}

Graph parse_graph(std::istream& in, Format format) {
    return format == Format::Edgelist ? parse_edgelist(in) : parse_dimacs(in);
}

Graph parse_graph(std::string_view text, Format format) {
    std::istringstream in{std::string(text)};
    return parse_graph(in, format);
}

Graph read_graph_file(const std::string& path, Format format) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
    return parse_graph(in, format);
}

std::vector<Edge> parse_edges(std::istream& in, const Graph& graph) {
    std::vector<Edge> edges;
    std::unordered_map<Label, Vertex> ids;
    for (Vertex v = 1; v <= graph.order(); ++v) ids.emplace(graph.label(v), v);
    auto id = [&](Label x) {
        auto it = ids.find(x);
        if (it == ids.end()) throw Error(ErrorCode::UnknownVertex, "label " + std::to_string(x) + " is not a vertex");
        return it->second;
    };
    for (auto [a, b] : read_pairs(in)) edges.push_back(Edge{id(a), id(b)});
    return edges;
}

std::vector<Edge> parse_edges(std::string_view text, const Graph& graph) {
    std::istringstream in{std::string(text)};
    return parse_edges(in, graph);
}

std::string to_edgelist(const Graph& graph, std::span<const Edge> edges) {
    std::string out;
    for (const Edge& e : edges)
        out += std::to_string(graph.label(e.u)) + " " + std::to_string(graph.label(e.v)) + "\n";
    return out;
}

std::string to_edgelist(const Graph& graph) { return to_edgelist(graph, graph.edges()); }

}  // namespace istk
