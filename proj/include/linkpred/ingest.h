#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <string>

#include "linkpred/graph.h"

namespace linkpred {

struct IngestOptions {
  /// Start of the first window (seconds since epoch).
  std::int64_t start = 0;
  /// Ingestion horizon; windows that do not fit entirely before `end` are dropped.
  std::int64_t end = 0;
  /// Window length in seconds.
  std::int64_t interval = 90 * kSecondsPerDay;

  std::size_t WindowCount() const;
  void Validate() const;
};

struct IngestStats {
  std::size_t friendship_records = 0;
  std::size_t interaction_records = 0;
  /// Friendship records without a timestamp, placed in snapshot 0.
  std::size_t friendships_untimed = 0;
  /// Friendship records timestamped at or after the end of the last full window.
  std::size_t friendships_after_horizon = 0;
  /// Interactions outside every full window.
  std::size_t interactions_out_of_range = 0;
  std::size_t self_loops_dropped = 0;
};

/// Builds aligned friendship / interaction snapshot sequences from edge-list streams.
///
/// Record format: `<user_a> <user_b> [unix_timestamp]`, whitespace separated, `#`
/// comments. Friendships accumulate: a friendship timestamped in window w is
/// present in every snapshot >= w, and one without a timestamp (or `\N`) is
/// present from snapshot 0. Interactions are undirected and binarized per window.
/// Node ids follow first appearance, friendship file first.
DualDataset IngestEdgeStreams(std::istream& friendships, std::istream& interactions,
                              const IngestOptions& options, IngestStats* stats = nullptr,
                              const std::string& friendship_source = "friendships",
                              const std::string& interaction_source = "interactions");

DualDataset IngestEdges(const std::filesystem::path& friendship_file,
                        const std::filesystem::path& interaction_file,
                        const IngestOptions& options, IngestStats* stats = nullptr);

}  // namespace linkpred
