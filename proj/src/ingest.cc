#include "linkpred/ingest.h"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string_view>
#include <unordered_map>

namespace linkpred {
namespace {

struct Record {
  std::string_view a;
  std::string_view b;
  std::optional<std::int64_t> timestamp;
};

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

// Returns false for blank and comment lines.
bool ParseRecord(std::string_view line, const std::string& source, std::size_t line_no,
                 bool timestamp_required, Record* record) {
  const auto fields = SplitFields(line);
  if (fields.empty() || fields.front().front() == '#') return false;
  if (fields.size() < 2 || fields.size() > 3) {
    throw ParseError(source, line_no, "expected `<user_a> <user_b> [timestamp]`");
  }
  record->a = fields[0];
  record->b = fields[1];
  record->timestamp.reset();
  if (fields.size() == 3 && fields[2] != "\\N") {
    std::int64_t ts = 0;
    const auto [ptr, ec] = std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(), ts);
    if (ec != std::errc() || ptr != fields[2].data() + fields[2].size()) {
      throw ParseError(source, line_no, "invalid timestamp `" + std::string(fields[2]) + "`");
    }
    record->timestamp = ts;
  }
  if (timestamp_required && !record->timestamp) {
    throw ParseError(source, line_no, "interaction record without timestamp");
  }
  return true;
}

class NodeTable {
 public:
  NodeId Intern(std::string_view name) {
    auto it = ids_.find(std::string(name));
    if (it != ids_.end()) return it->second;
    const auto id = static_cast<NodeId>(names_.size());
    names_.emplace_back(name);
    ids_.emplace(names_.back(), id);
    return id;
  }
  std::vector<std::string> Release() { return std::move(names_); }

 private:
  std::unordered_map<std::string, NodeId> ids_;
  std::vector<std::string> names_;
};

template <class Fn>
void ForEachRecord(std::istream& in, const std::string& source, bool timestamp_required, Fn fn) {
  std::string line;
  std::size_t line_no = 0;
  Record record;
  while (std::getline(in, line)) {
    ++line_no;
    if (ParseRecord(line, source, line_no, timestamp_required, &record)) fn(record);
  }
  if (in.bad()) throw Error("read failure on " + source);
}

}  // namespace

std::size_t IngestOptions::WindowCount() const {
  return static_cast<std::size_t>((end - start) / interval);
}

void IngestOptions::Validate() const {
  if (interval <= 0) throw InvalidArgument("snapshot interval must be positive");
  if (start >= end) throw InvalidArgument("ingestion start must precede end");
  if (WindowCount() == 0) throw InvalidArgument("time range shorter than one interval");
}

DualDataset IngestEdgeStreams(std::istream& friendships, std::istream& interactions,
                              const IngestOptions& options, IngestStats* stats,
                              const std::string& friendship_source,
                              const std::string& interaction_source) {
  options.Validate();
  IngestStats local;
  IngestStats& st = stats ? *stats : local;
  st = IngestStats{};

  const std::size_t windows = options.WindowCount();
  const std::int64_t horizon = options.start + static_cast<std::int64_t>(windows) * options.interval;
  auto window_of = [&](std::int64_t ts) {
    return static_cast<std::size_t>((ts - options.start) / options.interval);
  };

  NodeTable nodes;
  std::vector<std::vector<NodePair>> friends_added(windows);
  std::vector<std::vector<NodePair>> interaction_edges(windows);

  ForEachRecord(friendships, friendship_source, false, [&](const Record& r) {
    ++st.friendship_records;
    const NodeId a = nodes.Intern(r.a);
    const NodeId b = nodes.Intern(r.b);
    if (a == b) {
      ++st.self_loops_dropped;
      return;
    }
    std::size_t w = 0;
    if (!r.timestamp) {
      ++st.friendships_untimed;
    } else if (*r.timestamp >= horizon) {
      ++st.friendships_after_horizon;
      return;
    } else if (*r.timestamp >= options.start) {
      w = window_of(*r.timestamp);
    }
    friends_added[w].push_back(NodePair::Of(a, b));
  });

  ForEachRecord(interactions, interaction_source, true, [&](const Record& r) {
    ++st.interaction_records;
    const NodeId a = nodes.Intern(r.a);
    const NodeId b = nodes.Intern(r.b);
    if (a == b) {
      ++st.self_loops_dropped;
      return;
    }
    if (*r.timestamp < options.start || *r.timestamp >= horizon) {
      ++st.interactions_out_of_range;
      return;
    }
    interaction_edges[window_of(*r.timestamp)].push_back(NodePair::Of(a, b));
  });

  DualDataset ds;
  ds.node_names = nodes.Release();
  const std::size_t n = ds.node_names.size();
  ds.friendships.node_count = n;
  ds.interactions.node_count = n;
  std::vector<NodePair> cumulative;
  for (std::size_t t = 0; t < windows; ++t) {
    const TimeWindow window{options.start + static_cast<std::int64_t>(t) * options.interval,
                            options.start + static_cast<std::int64_t>(t + 1) * options.interval};
    cumulative.insert(cumulative.end(), friends_added[t].begin(), friends_added[t].end());
    ds.friendships.snapshots.emplace_back(t, window, cumulative);
    // Keep the cumulative list deduplicated so it does not grow with repeats.
    const auto edges = ds.friendships.snapshots.back().edges();
    cumulative.assign(edges.begin(), edges.end());
    ds.interactions.snapshots.emplace_back(t, window, std::move(interaction_edges[t]));
  }
  return ds;
}

DualDataset IngestEdges(const std::filesystem::path& friendship_file,
                        const std::filesystem::path& interaction_file,
                        const IngestOptions& options, IngestStats* stats) {
  std::ifstream friends(friendship_file);
  if (!friends) throw Error("cannot open " + friendship_file.string());
  std::ifstream interactions(interaction_file);
  if (!interactions) throw Error("cannot open " + interaction_file.string());
  return IngestEdgeStreams(friends, interactions, options, stats, friendship_file.string(),
                           interaction_file.string());
}

}  // namespace linkpred
