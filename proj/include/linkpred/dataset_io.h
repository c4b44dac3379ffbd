#pragma once

#include <filesystem>
#include <istream>
#include <ostream>

#include "linkpred/graph.h"

namespace linkpred {

// Line-oriented dataset format, version 1:
//
//   LPDS 1
//   nodes <N>
//   <id> <name>                      N lines, ids 0..N-1 in order
//   snapshots <T>
//   window <t> <start> <end>         T lines
//   F <t> <m>                        friendship edges of snapshot t, then m lines "u v"
//   I <t> <m>                        interaction edges of snapshot t, then m lines "u v"
//   end
//
// Names may not contain whitespace. Edge lines are canonical and sorted.
void WriteDataset(std::ostream& out, const DualDataset& dataset);
DualDataset ReadDataset(std::istream& in, const std::string& source = "dataset");

void SaveDataset(const std::filesystem::path& path, const DualDataset& dataset);
DualDataset LoadDataset(const std::filesystem::path& path);

/// Raw edge-list export in the ingest input format: each friendship once, stamped
/// with the start of the window it first appears in (untimed for snapshot 0), and
/// each interaction stamped with its window start.
void WriteEdgeStreams(std::ostream& friendships, std::ostream& interactions,
                      const DualDataset& dataset);
/// Writes friendships.txt and interactions.txt into `dir`.
void SaveEdgeFiles(const std::filesystem::path& dir, const DualDataset& dataset);

}  // namespace linkpred
