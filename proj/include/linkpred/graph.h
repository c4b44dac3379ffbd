#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "linkpred/node_pair.h"

namespace linkpred {

constexpr std::int64_t kSecondsPerDay = 86400;

/// Half-open time window [start, end) in seconds since epoch.
struct TimeWindow {
  std::int64_t start = 0;
  std::int64_t end = 0;

  bool Contains(std::int64_t ts) const { return ts >= start && ts < end; }
  friend bool operator==(const TimeWindow&, const TimeWindow&) = default;
};

/// Binary undirected graph of the edges active in one time window.
/// Edges are canonical, sorted, and unique.
class Snapshot {
 public:
  Snapshot() = default;
  /// Canonicalizes and deduplicates `edges`; self-loops are rejected.
  Snapshot(std::size_t index, TimeWindow window, std::vector<NodePair> edges);

  std::size_t index() const { return index_; }
  const TimeWindow& window() const { return window_; }
  std::span<const NodePair> edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool HasEdge(NodePair p) const;

  friend bool operator==(const Snapshot&, const Snapshot&) = default;

 private:
  std::size_t index_ = 0;
  TimeWindow window_;
  std::vector<NodePair> edges_;
};

enum class GraphKind { kFriendship, kInteraction };

std::string ToString(GraphKind kind);

struct SnapshotSequence {
  GraphKind kind = GraphKind::kInteraction;
  std::size_t node_count = 0;
  std::vector<Snapshot> snapshots;

  std::size_t size() const { return snapshots.size(); }
  const Snapshot& at(std::size_t t) const;

  /// Throws if windows are not consecutive, an edge references a node >= N, or
  /// (for friendships) an edge disappears between consecutive snapshots.
  void Validate() const;

  friend bool operator==(const SnapshotSequence&, const SnapshotSequence&) = default;
};

/// Friendship and interaction sequences over one node universe and one set of windows.
struct DualDataset {
  /// Original identifier of each dense NodeId.
  std::vector<std::string> node_names;
  SnapshotSequence friendships{GraphKind::kFriendship, 0, {}};
  SnapshotSequence interactions{GraphKind::kInteraction, 0, {}};

  std::size_t node_count() const { return node_names.size(); }
  std::size_t snapshot_count() const { return interactions.size(); }

  void Validate() const;

  friend bool operator==(const DualDataset&, const DualDataset&) = default;
};

/// Compressed adjacency of one snapshot, neighbors sorted ascending.
class Graph {
 public:
  Graph(std::size_t node_count, std::span<const NodePair> edges);
  Graph(std::size_t node_count, const Snapshot& snapshot)
      : Graph(node_count, snapshot.edges()) {}

  std::size_t node_count() const { return offsets_.size() - 1; }
  std::size_t edge_count() const { return neighbors_.size() / 2; }
  std::span<const NodeId> Neighbors(NodeId v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::size_t Degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t MaxDegree() const;
  bool HasEdge(NodeId a, NodeId b) const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> neighbors_;
};

}  // namespace linkpred
