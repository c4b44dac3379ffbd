#pragma once

#include <cstddef>
#include <cstdint>

#include "linkpred/graph.h"

namespace linkpred {

/// Coupled friendship / interaction generator.
///
/// Friendships start as a planted-partition graph and grow by a fixed number of
/// edges per snapshot. Interactions in snapshot tau + 1 are drawn independently
/// per pair with probability q_friend for pairs that are friends at tau and
/// q_nonfriend otherwise, raised by persistence_boost (capped at 1) for pairs
/// that interacted at tau. Snapshot 0 uses the friendships of snapshot 0.
struct SyntheticSpec {
  std::size_t nodes = 300;
  std::size_t snapshots = 9;
  std::size_t communities = 10;
  /// Mean friendship degree at snapshot 0.
  double initial_mean_degree = 16.0;
  /// Share of friendship edges drawn inside a community.
  double within_community_share = 0.8;
  /// New friendship edges per snapshot.
  std::size_t friendship_growth = 100;
  double q_friend = 0.05;
  double q_nonfriend = 0.001;
  double persistence_boost = 0.2;
  std::int64_t start = 0;
  std::int64_t interval = 90 * kSecondsPerDay;

  std::size_t InitialFriendships() const;
  void Validate() const;
};

DualDataset GenerateSynthetic(const SyntheticSpec& spec, std::uint64_t seed);

}  // namespace linkpred
