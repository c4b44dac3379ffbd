#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "linkpred/graph.h"
#include "linkpred/score_map.h"

namespace linkpred {

/// Adamic-Adar: sum over common neighbors c of 1 / ln|N(c)|.
/// The all-pairs form stores every pair with at least one common neighbor.
ScoreMap AdamicAdar(const Graph& graph);
ScoreMap AdamicAdar(const Graph& graph, std::span<const NodePair> pairs);

struct KatzConfig {
  double beta = 0.05;
  /// Walk lengths 1..max_length are summed; longer walks are truncated.
  int max_length = 4;
  /// Warn when beta^L * walks_L exceeds this fraction of a pair's partial sum.
  /// Pairs first reached at length L are not counted.
  double truncation_tolerance = 1e-2;

  void Validate() const;
};

/// Truncated Katz: sum_{l=1..L} beta^l * (number of walks of length l from a to b).
/// Walks are counted by repeated sparse adjacency products. Warns when
/// beta * max_degree >= 1 (the untruncated series may diverge) or when the last
/// retained term is large relative to the partial sum.
ScoreMap Katz(const Graph& graph, const KatzConfig& config);
ScoreMap Katz(const Graph& graph, const KatzConfig& config, std::span<const NodePair> pairs);

/// Pairs at hop distance 1 or 2, sorted canonically.
std::vector<NodePair> TwoHopPairs(const Graph& graph);

}  // namespace linkpred
