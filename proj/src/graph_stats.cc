#include "linkpred/graph_stats.h"

#include <algorithm>
#include <limits>

namespace linkpred {
namespace {

std::vector<NodePair> Remap(std::span<const NodePair> edges, const std::vector<NodeId>& new_id) {
  constexpr NodeId kDropped = std::numeric_limits<NodeId>::max();
  std::vector<NodePair> out;
  for (const NodePair& e : edges) {
    const NodeId u = new_id[e.u], v = new_id[e.v];
    if (u != kDropped && v != kDropped) out.push_back(NodePair::Of(u, v));
  }
  return out;
}

SnapshotSequence RemapSequence(const SnapshotSequence& seq, const std::vector<NodeId>& new_id,
                               std::size_t kept) {
  SnapshotSequence out{seq.kind, kept, {}};
  for (const Snapshot& s : seq.snapshots) {
    out.snapshots.emplace_back(s.index(), s.window(), Remap(s.edges(), new_id));
  }
  return out;
}

void CheckTransition(const DualDataset& dataset, std::size_t t) {
  if (dataset.snapshot_count() < 2 || t + 1 >= dataset.snapshot_count()) {
    throw OutOfRange("transition t=" + std::to_string(t) + " needs snapshots t and t+1 (have " +
                     std::to_string(dataset.snapshot_count()) + ")");
  }
}

}  // namespace

DualDataset FilterByAggregateDegree(const DualDataset& dataset, std::size_t threshold) {
  const std::size_t n = dataset.node_count();
  std::vector<std::size_t> degree(n, 0);
  // Friendships accumulate, but take the union explicitly so the rule holds for
  // any friendship sequence.
  std::vector<NodePair> aggregate;
  for (const Snapshot& s : dataset.friendships.snapshots) {
    aggregate.insert(aggregate.end(), s.edges().begin(), s.edges().end());
  }
  std::sort(aggregate.begin(), aggregate.end());
  aggregate.erase(std::unique(aggregate.begin(), aggregate.end()), aggregate.end());
  for (const NodePair& e : aggregate) {
    ++degree[e.u];
    ++degree[e.v];
  }

  std::vector<NodeId> new_id(n, std::numeric_limits<NodeId>::max());
  DualDataset out;
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] >= threshold) {
      new_id[v] = static_cast<NodeId>(out.node_names.size());
      out.node_names.push_back(dataset.node_names[v]);
    }
  }
  if (out.node_names.empty()) {
    throw EmptyResult("no node has aggregate friendship degree >= " + std::to_string(threshold));
  }
  out.friendships = RemapSequence(dataset.friendships, new_id, out.node_count());
  out.interactions = RemapSequence(dataset.interactions, new_id, out.node_count());
  return out;
}

double FractionFriendsInteracting(const DualDataset& dataset, std::size_t t) {
  CheckTransition(dataset, t);
  const Snapshot& friends = dataset.friendships.snapshots[t];
  const Snapshot& next = dataset.interactions.snapshots[t + 1];
  if (friends.edge_count() == 0) return 0.0;
  std::size_t hits = 0;
  for (const NodePair& e : friends.edges()) hits += next.HasEdge(e) ? 1 : 0;
  return static_cast<double>(hits) / static_cast<double>(friends.edge_count());
}

double FractionInteractionsBetweenFriends(const DualDataset& dataset, std::size_t t) {
  CheckTransition(dataset, t);
  const Snapshot& friends = dataset.friendships.snapshots[t];
  const Snapshot& next = dataset.interactions.snapshots[t + 1];
  if (next.edge_count() == 0) return 0.0;
  std::size_t hits = 0;
  for (const NodePair& e : next.edges()) hits += friends.HasEdge(e) ? 1 : 0;
  return static_cast<double>(hits) / static_cast<double>(next.edge_count());
}

std::vector<FractionPoint> FractionSeries(const DualDataset& dataset) {
  if (dataset.snapshot_count() < 2) {
    throw InvalidArgument("fraction series needs at least two snapshots");
  }
  std::vector<FractionPoint> out;
  for (std::size_t t = 0; t + 1 < dataset.snapshot_count(); ++t) {
    out.push_back({t, FractionFriendsInteracting(dataset, t),
                   FractionInteractionsBetweenFriends(dataset, t)});
  }
  return out;
}

}  // namespace linkpred
