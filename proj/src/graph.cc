#include "linkpred/graph.h"

#include <algorithm>

namespace linkpred {

Snapshot::Snapshot(std::size_t index, TimeWindow window, std::vector<NodePair> edges)
    : index_(index), window_(window), edges_(std::move(edges)) {
  for (auto& e : edges_) e = NodePair::Of(e.u, e.v);
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Snapshot::HasEdge(NodePair p) const {
  return std::binary_search(edges_.begin(), edges_.end(), p);
}

std::string ToString(GraphKind kind) {
  return kind == GraphKind::kFriendship ? "friendship" : "interaction";
}

const Snapshot& SnapshotSequence::at(std::size_t t) const {
  if (t >= snapshots.size()) {
    throw OutOfRange("snapshot index " + std::to_string(t) + " out of range (have " +
                     std::to_string(snapshots.size()) + ")");
  }
  return snapshots[t];
}

void SnapshotSequence::Validate() const {
  for (std::size_t t = 0; t < snapshots.size(); ++t) {
    const Snapshot& s = snapshots[t];
    if (s.index() != t) throw InvalidArgument("snapshot ordinal mismatch at " + std::to_string(t));
    if (s.window().end <= s.window().start) throw InvalidArgument("empty snapshot window");
    if (t > 0 && snapshots[t - 1].window().end != s.window().start) {
      throw InvalidArgument("snapshot windows are not consecutive at " + std::to_string(t));
    }
    for (const NodePair& e : s.edges()) {
      if (e.v >= node_count) {
        throw InvalidArgument("edge references node " + std::to_string(e.v) +
                              " >= node count " + std::to_string(node_count));
      }
    }
    if (kind == GraphKind::kFriendship && t > 0) {
      const auto prev = snapshots[t - 1].edges();
      if (!std::includes(s.edges().begin(), s.edges().end(), prev.begin(), prev.end())) {
        throw InvalidArgument("friendship edges disappear between snapshots " +
                              std::to_string(t - 1) + " and " + std::to_string(t));
      }
    }
  }
}

void DualDataset::Validate() const {
  const std::size_t n = node_names.size();
  if (friendships.node_count != n || interactions.node_count != n) {
    throw InvalidArgument("sequences disagree with the node table size");
  }
  if (friendships.kind != GraphKind::kFriendship || interactions.kind != GraphKind::kInteraction) {
    throw InvalidArgument("sequence kinds are swapped");
  }
  if (friendships.size() != interactions.size()) {
    throw InvalidArgument("friendship and interaction snapshot counts differ");
  }
  for (std::size_t t = 0; t < friendships.size(); ++t) {
    if (!(friendships.snapshots[t].window() == interactions.snapshots[t].window())) {
      throw InvalidArgument("friendship and interaction windows differ at " + std::to_string(t));
    }
  }
  friendships.Validate();
  interactions.Validate();
}

Graph::Graph(std::size_t node_count, std::span<const NodePair> edges)
    : offsets_(node_count + 1, 0) {
  for (const NodePair& e : edges) {
    if (e.v >= node_count || e.u >= e.v) throw InvalidArgument("invalid edge for graph");
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < node_count; ++i) offsets_[i + 1] += offsets_[i];
  neighbors_.resize(offsets_.back());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const NodePair& e : edges) {
    neighbors_[cursor[e.u]++] = e.v;
    neighbors_[cursor[e.v]++] = e.u;
  }
  for (std::size_t i = 0; i < node_count; ++i) {
    auto first = neighbors_.begin() + offsets_[i];
    auto last = neighbors_.begin() + offsets_[i + 1];
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) throw InvalidArgument("duplicate edge in graph");
  }
}

std::size_t Graph::MaxDegree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v + 1 < offsets_.size(); ++v) {
    best = std::max(best, offsets_[v + 1] - offsets_[v]);
  }
  return best;
}

bool Graph::HasEdge(NodeId a, NodeId b) const {
  const auto n = Neighbors(a);
  return std::binary_search(n.begin(), n.end(), b);
}

}  // namespace linkpred
