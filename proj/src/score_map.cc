#include "linkpred/score_map.h"

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>

namespace linkpred {

ScoreMap ScoreMap::FromEntries(std::size_t node_count, std::vector<Entry> entries) {
  for (auto& e : entries) e.pair = NodePair::Of(e.pair.u, e.pair.v);
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.pair < b.pair; });
  return FromSortedEntries(node_count, std::move(entries));
}

ScoreMap ScoreMap::FromSortedEntries(std::size_t node_count, std::vector<Entry> entries) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const NodePair& p = entries[i].pair;
    if (p.u >= p.v || p.v >= node_count) {
      throw InvalidArgument("score map pair (" + std::to_string(p.u) + "," + std::to_string(p.v) +
                            ") is not canonical or out of range");
    }
    if (i > 0 && !(entries[i - 1].pair < p)) {
      throw InvalidArgument("score map pairs are duplicated or unsorted");
    }
    if (!std::isfinite(entries[i].score)) throw InvalidArgument("non-finite score");
  }
  ScoreMap out(node_count);
  out.entries_ = std::move(entries);
  return out;
}

double ScoreMap::Get(NodePair pair) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), pair,
                             [](const Entry& e, const NodePair& p) { return e.pair < p; });
  return it != entries_.end() && it->pair == pair ? it->score : 0.0;
}

ScoreMap NormalizeScores(const ScoreMap& scores, NormalizeOptions options) {
  if (scores.empty()) throw InvalidArgument("cannot normalize an empty score map");
  double lo = scores.entries().front().score;
  double hi = lo;
  for (const auto& e : scores.entries()) {
    lo = std::min(lo, e.score);
    hi = std::max(hi, e.score);
  }
  if (options.include_implicit_zero && !scores.CoversAllPairs()) {
    lo = std::min(lo, 0.0);
    hi = std::max(hi, 0.0);
  }
  std::vector<ScoreMap::Entry> out(scores.entries().begin(), scores.entries().end());
  const double range = hi - lo;
  for (auto& e : out) e.score = range > 0.0 ? (e.score - lo) / range : 1.0;
  return ScoreMap::FromSortedEntries(scores.node_count(), std::move(out));
}

void WriteScoreMap(std::ostream& out, const ScoreMap& scores) {
  out << "# nodes " << scores.node_count() << '\n';
  char buf[64];
  for (const auto& e : scores.entries()) {
    std::snprintf(buf, sizeof(buf), "%.9g", e.score);
    out << e.pair.u << ' ' << e.pair.v << ' ' << buf << '\n';
  }
}

ScoreMap ReadScoreMap(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> node_count;
  std::vector<ScoreMap::Entry> entries;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (first == "#") {
      std::string key;
      std::size_t n = 0;
      if (fields >> key && key == "nodes" && fields >> n) node_count = n;
      continue;
    }
    if (first.front() == '#') continue;
    std::istringstream row(line);
    NodeId u = 0, v = 0;
    double s = 0.0;
    std::string rest;
    if (!(row >> u >> v >> s) || (row >> rest)) throw ParseError(source, line_no, "expected `u v score`");
    if (u == v) throw ParseError(source, line_no, "self-pair");
    entries.push_back({NodePair::Of(u, v), s});
  }
  if (!node_count) throw ParseError(source, line_no, "missing `# nodes N` header");
  try {
    return ScoreMap::FromEntries(*node_count, std::move(entries));
  } catch (const InvalidArgument& e) {
    throw ParseError(source, line_no, e.what());
  }
}

}  // namespace linkpred
