#pragma once

#include <compare>
#include <cstdint>
#include <functional>

#include "linkpred/error.h"

namespace linkpred {

/// Dense node index, contiguous in [0, N) once a dataset is finalized.
using NodeId = std::uint32_t;

/// Unordered node pair stored canonically (u < v).
struct NodePair {
  NodeId u = 0;
  NodeId v = 0;

  /// Canonicalizes (a, b). Self-pairs are rejected.
  static NodePair Of(NodeId a, NodeId b) {
    if (a == b) throw InvalidArgument("self-pair is not a valid node pair");
    return a < b ? NodePair{a, b} : NodePair{b, a};
  }

  std::uint64_t key() const { return (std::uint64_t{u} << 32) | v; }

  friend auto operator<=>(const NodePair&, const NodePair&) = default;
};

/// Number of unordered pairs over n nodes.
constexpr std::uint64_t PairCount(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

}  // namespace linkpred

template <>
struct std::hash<linkpred::NodePair> {
  std::size_t operator()(const linkpred::NodePair& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.key());
  }
};
