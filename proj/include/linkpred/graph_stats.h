#pragma once

#include <cstddef>
#include <vector>

#include "linkpred/graph.h"

namespace linkpred {

/// Keeps the nodes whose degree in the union of all friendship snapshots is at
/// least `threshold`, re-indexed densely in their original relative order.
/// Throws EmptyResult when no node survives.
DualDataset FilterByAggregateDegree(const DualDataset& dataset, std::size_t threshold);

/// Share of friend pairs at t that interact at t + 1 (0 when there are no friend pairs).
double FractionFriendsInteracting(const DualDataset& dataset, std::size_t t);

/// Share of interactions at t + 1 whose endpoints are friends at t (0 when there are none).
double FractionInteractionsBetweenFriends(const DualDataset& dataset, std::size_t t);

struct FractionPoint {
  std::size_t t = 0;
  double friends_interacting = 0.0;
  double interactions_between_friends = 0.0;
};

/// Both fractions for t = 0 .. T-2. Requires at least two snapshots.
std::vector<FractionPoint> FractionSeries(const DualDataset& dataset);

}  // namespace linkpred
