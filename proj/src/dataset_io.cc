#include "linkpred/dataset_io.h"

#include <fstream>
#include <sstream>
#include <unordered_set>

namespace linkpred {
namespace {

constexpr const char* kMagic = "LPDS";
constexpr int kVersion = 1;

void WriteEdges(std::ostream& out, char tag, const Snapshot& s) {
  out << tag << ' ' << s.index() << ' ' << s.edge_count() << '\n';
  for (const NodePair& e : s.edges()) out << e.u << ' ' << e.v << '\n';
}

class LineReader {
 public:
  LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  std::istringstream Next(const char* expecting) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.front() != '#') return std::istringstream(line);
    }
    Fail(std::string("unexpected end of input, expecting ") + expecting);
  }

  template <class... T>
  void Expect(std::istringstream& in, const char* what, T&... values) {
    ((in >> values), ...);
    std::string rest;
    if (!in || (in >> rest)) Fail(std::string("malformed ") + what + " line");
  }

  [[noreturn]] void Fail(const std::string& what) const { throw ParseError(source_, line_no_, what); }

 private:
  std::istream& in_;
  std::string source_;
  std::size_t line_no_ = 0;
};

void ReadEdges(LineReader& reader, char tag, std::size_t t, std::size_t n, const TimeWindow& window,
               SnapshotSequence* seq) {
  auto header = reader.Next("edge block");
  char got_tag = 0;
  std::size_t got_t = 0, m = 0;
  reader.Expect(header, "edge block header", got_tag, got_t, m);
  if (got_tag != tag || got_t != t) reader.Fail(std::string("expected edge block ") + tag + " " + std::to_string(t));
  std::vector<NodePair> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto line = reader.Next("edge");
    NodeId u = 0, v = 0;
    reader.Expect(line, "edge", u, v);
    if (u >= v || v >= n) reader.Fail("edge is not canonical or out of range");
    if (!edges.empty() && !(edges.back() < NodePair{u, v})) reader.Fail("edges not sorted or duplicated");
    edges.push_back({u, v});
  }
  seq->snapshots.emplace_back(t, window, std::move(edges));
}

}  // namespace

void WriteDataset(std::ostream& out, const DualDataset& dataset) {
  dataset.Validate();
  out << kMagic << ' ' << kVersion << '\n';
  out << "nodes " << dataset.node_count() << '\n';
  for (std::size_t i = 0; i < dataset.node_count(); ++i) {
    const std::string& name = dataset.node_names[i];
    if (name.empty() || name.find_first_of(" \t\r\n") != std::string::npos) {
      throw InvalidArgument("node name `" + name + "` cannot be serialized");
    }
    out << i << ' ' << name << '\n';
  }
  const std::size_t T = dataset.snapshot_count();
  out << "snapshots " << T << '\n';
  for (std::size_t t = 0; t < T; ++t) {
    const TimeWindow& w = dataset.interactions.snapshots[t].window();
    out << "window " << t << ' ' << w.start << ' ' << w.end << '\n';
  }
  for (std::size_t t = 0; t < T; ++t) {
    WriteEdges(out, 'F', dataset.friendships.snapshots[t]);
    WriteEdges(out, 'I', dataset.interactions.snapshots[t]);
  }
  out << "end\n";
}

DualDataset ReadDataset(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  {
    auto line = reader.Next("header");
    std::string magic;
    int version = 0;
    reader.Expect(line, "header", magic, version);
    if (magic != kMagic) reader.Fail("not a dataset file (bad magic)");
    if (version != kVersion) reader.Fail("unsupported dataset version " + std::to_string(version));
  }
  DualDataset ds;
  std::string keyword;
  std::size_t n = 0;
  {
    auto line = reader.Next("node count");
    reader.Expect(line, "node count", keyword, n);
    if (keyword != "nodes") reader.Fail("expected `nodes`");
  }
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < n; ++i) {
    auto line = reader.Next("node");
    std::size_t id = 0;
    std::string name;
    reader.Expect(line, "node", id, name);
    if (id != i) reader.Fail("node ids must be contiguous");
    if (!seen.insert(name).second) reader.Fail("node identifier collision on `" + name + "`");
    ds.node_names.push_back(std::move(name));
  }
  std::size_t T = 0;
  {
    auto line = reader.Next("snapshot count");
    reader.Expect(line, "snapshot count", keyword, T);
    if (keyword != "snapshots") reader.Fail("expected `snapshots`");
  }
  std::vector<TimeWindow> windows;
  for (std::size_t t = 0; t < T; ++t) {
    auto line = reader.Next("window");
    std::size_t got_t = 0;
    TimeWindow w;
    reader.Expect(line, "window", keyword, got_t, w.start, w.end);
    if (keyword != "window" || got_t != t) reader.Fail("expected window " + std::to_string(t));
    windows.push_back(w);
  }
  ds.friendships = {GraphKind::kFriendship, n, {}};
  ds.interactions = {GraphKind::kInteraction, n, {}};
  for (std::size_t t = 0; t < T; ++t) {
    ReadEdges(reader, 'F', t, n, windows[t], &ds.friendships);
    ReadEdges(reader, 'I', t, n, windows[t], &ds.interactions);
  }
  {
    auto line = reader.Next("end marker");
    reader.Expect(line, "end marker", keyword);
    if (keyword != "end") reader.Fail("expected `end`");
  }
  try {
    ds.Validate();
  } catch (const InvalidArgument& e) {
    reader.Fail(e.what());
  }
  return ds;
}

void SaveDataset(const std::filesystem::path& path, const DualDataset& dataset) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  WriteDataset(out, dataset);
  if (!out) throw Error("write failure on " + path.string());
}

DualDataset LoadDataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return ReadDataset(in, path.string());
}

void WriteEdgeStreams(std::ostream& friendships, std::ostream& interactions,
                      const DualDataset& dataset) {
  friendships << "# user_a user_b [timestamp]\n";
  interactions << "# user_a user_b timestamp\n";
  const Snapshot* prev = nullptr;
  for (const Snapshot& s : dataset.friendships.snapshots) {
    for (const NodePair& e : s.edges()) {
      if (prev && prev->HasEdge(e)) continue;
      friendships << dataset.node_names[e.u] << ' ' << dataset.node_names[e.v];
      if (prev) friendships << ' ' << s.window().start;
      friendships << '\n';
    }
    prev = &s;
  }
  for (const Snapshot& s : dataset.interactions.snapshots) {
    for (const NodePair& e : s.edges()) {
      interactions << dataset.node_names[e.u] << ' ' << dataset.node_names[e.v] << ' '
                   << s.window().start << '\n';
    }
  }
}

void SaveEdgeFiles(const std::filesystem::path& dir, const DualDataset& dataset) {
  std::ofstream friendships(dir / "friendships.txt");
  std::ofstream interactions(dir / "interactions.txt");
  if (!friendships || !interactions) throw Error("cannot write edge files into " + dir.string());
  WriteEdgeStreams(friendships, interactions, dataset);
  if (!friendships || !interactions) throw Error("write failure in " + dir.string());
}

}  // namespace linkpred
