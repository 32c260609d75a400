#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "istk/graph.hpp"
#include "istk/kernelizer.hpp"
#include "istk/local_search.hpp"
#include "istk/reducible.hpp"

namespace istk {

inline constexpr int kReportSchema = 1;

// All vertices are written with the labels of the graph they belong to.
nlohmann::json edges_json(const Graph& graph, std::span<const Edge> edges);
nlohmann::json step_json(const ReductionStep& step);
nlohmann::json exchange_json(const Graph& graph, const ExchangeStep& step);
nlohmann::json outcome_json(const Graph& original, std::optional<int> k, const KernelOutcome& outcome);

}  // namespace istk
