#include "istk/report.hpp"

#include "istk/io.hpp"

namespace istk {

using nlohmann::json;

namespace {

json labels_of(const Graph& graph, const std::vector<Vertex>& vertices) {
    json out = json::array();
    for (Vertex v : vertices) out.push_back(graph.label(v));
    return out;
}

json swap_json(const Graph& graph, const EdgeSwap& swap) {
    return {{"removed", {graph.label(swap.removed.u), graph.label(swap.removed.v)}},
            {"added", {graph.label(swap.added.u), graph.label(swap.added.v)}}};
}

}  // namespace

json edges_json(const Graph& graph, std::span<const Edge> edges) {
    json out = json::array();
    for (const Edge& e : edges) out.push_back({graph.label(e.u), graph.label(e.v)});
    return out;
}

json step_json(const ReductionStep& step) {
    const Graph& g = *step.source;
    json assignment = json::array();
    for (std::size_t i = 0; i < step.pair.s.size(); ++i)
        assignment.push_back({g.label(step.pair.s[i]), g.label(step.pair.assignment[i].first),
                              g.label(step.pair.assignment[i].second)});
    json out = {{"S", labels_of(g, step.pair.s)},
                {"L", labels_of(g, step.pair.l)},
                {"assignment", assignment},
                {"attachment", labels_of(g, step.attachment)},
                {"n_before", g.order()},
                {"n_after", step.reduced_order},
                {"k", nullptr},
                {"k_prime", nullptr}};
    if (step.k_before) out["k"] = *step.k_before;
    if (step.k_after) out["k_prime"] = *step.k_after;
    return out;
}

json exchange_json(const Graph& graph, const ExchangeStep& step) {
    json follow = json::array();
    for (const auto& f : step.follow_ups) follow.push_back(swap_json(graph, f));
    json out = swap_json(graph, step.swap);
    out["rule"] = to_string(step.rule);
    out["follow_ups"] = follow;
    out["internal_before"] = step.internal_before;
    out["internal_after"] = step.internal_after;
    return out;
}

json outcome_json(const Graph& original, std::optional<int> k, const KernelOutcome& outcome) {
    json out = {{"schema", kReportSchema},
                {"n", original.order()},
                {"m", original.size()},
                {"k", nullptr},
                {"exchange_steps", outcome.exchange_steps},
                {"reductions", outcome.trace.size()},
                {"rounds", outcome.rounds}};
    if (k) out["k"] = *k;
    json trace = json::array();
    for (const auto& step : outcome.trace) trace.push_back(step_json(step));
    out["trace"] = trace;

    if (const auto* s = std::get_if<Solved>(&outcome.result)) {
        out["outcome"] = "solved";
        out["internal"] = s->internal;
        out["certificate"] = edges_json(original, s->certificate.edges());
    } else if (const auto* a = std::get_if<Answered>(&outcome.result)) {
        out["outcome"] = "answered";
        out["decision"] = a->decision ? json(*a->decision) : json(nullptr);
        out["opt"] = a->opt;
        out["reason"] = a->reason;
    } else {
        const auto& kernel = std::get<Kernel>(outcome.result);
        out["outcome"] = "kernel";
        out["kernel"] = {{"n", kernel.graph.order()},
                         {"m", kernel.graph.size()},
                         {"k_prime", kernel.k ? json(*kernel.k) : json(nullptr)},
                         {"internal", kernel.tree.internal_count()},
                         {"edgelist", to_edgelist(kernel.graph)},
                         {"tree", edges_json(kernel.graph, kernel.tree.edges())}};
    }
    return out;
}

}  // namespace istk
