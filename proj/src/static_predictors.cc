#include "linkpred/static_predictors.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "linkpred/logging.h"

namespace linkpred {
namespace {

// Scratch row indexed by node, remembering which entries were touched.
class SparseRow {
 public:
  explicit SparseRow(std::size_t n) : value_(n, 0.0), touched_flag_(n, 0) {}

  void Add(NodeId i, double x) {
    if (!touched_flag_[i]) {
      touched_flag_[i] = 1;
      touched_.push_back(i);
    }
    value_[i] += x;
  }
  double operator[](NodeId i) const { return value_[i]; }
  std::vector<NodeId>& touched() { return touched_; }
  void SortTouched() { std::sort(touched_.begin(), touched_.end()); }
  void Clear() {
    for (NodeId i : touched_) {
      value_[i] = 0.0;
      touched_flag_[i] = 0;
    }
    touched_.clear();
  }

 private:
  std::vector<double> value_;
  std::vector<char> touched_flag_;
  std::vector<NodeId> touched_;
};

double AdamicAdarWeight(std::size_t degree) { return 1.0 / std::log(static_cast<double>(degree)); }

double AdamicAdarPair(const Graph& g, NodeId a, NodeId b) {
  const auto na = g.Neighbors(a), nb = g.Neighbors(b);
  double sum = 0.0;
  auto i = na.begin(), j = nb.begin();
  while (i != na.end() && j != nb.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      sum += AdamicAdarWeight(g.Degree(*i));
      ++i;
      ++j;
    }
  }
  return sum;
}

void CheckPairs(const Graph& g, std::span<const NodePair> pairs) {
  for (const NodePair& p : pairs) {
    if (p.u >= p.v || p.v >= g.node_count()) throw InvalidArgument("candidate pair out of range");
  }
}

// Sum of beta^l * walks_l(source, .) for l = 1..L, plus the last term, for every
// target reached. Walk counts stay exact in doubles up to 2^53.
class KatzRows {
 public:
  KatzRows(const Graph& g, const KatzConfig& config)
      : g_(g), config_(config), walks_(g.node_count()), next_(g.node_count()),
        sum_(g.node_count()), last_(g.node_count()) {}

  void Compute(NodeId source) {
    walks_.Clear();
    sum_.Clear();
    last_.Clear();
    walks_.Add(source, 1.0);
    double weight = 1.0;
    for (int l = 1; l <= config_.max_length; ++l) {
      weight *= config_.beta;
      next_.Clear();
      for (NodeId i : walks_.touched()) {
        const double w = walks_[i];
        if (w == 0.0) continue;
        for (NodeId j : g_.Neighbors(i)) next_.Add(j, w);
      }
      for (NodeId j : next_.touched()) {
        const double term = weight * next_[j];
        sum_.Add(j, term);
        if (l == config_.max_length) last_.Add(j, term);
      }
      std::swap(walks_, next_);
    }
    sum_.SortTouched();
  }

  std::span<const NodeId> targets() { return sum_.touched(); }
  double score(NodeId v) const { return sum_[v]; }

  void CheckTruncation(NodeId v) {
    const double s = sum_[v];
    if (s > last_[v] && last_[v] > config_.truncation_tolerance * s) ++truncation_violations_;
  }

  void ReportTruncation() const {
    if (truncation_violations_ > 0) {
      Warn("katz: last retained term exceeds " + std::to_string(config_.truncation_tolerance) +
           " of the partial sum for " + std::to_string(truncation_violations_) +
           " pairs; consider a smaller beta or a longer max_length");
    }
  }

 private:
  const Graph& g_;
  const KatzConfig& config_;
  SparseRow walks_, next_, sum_, last_;
  std::size_t truncation_violations_ = 0;
};

void CheckSpectralBound(const Graph& g, const KatzConfig& config) {
  const double bound = config.beta * static_cast<double>(g.MaxDegree());
  if (bound >= 1.0) {
    Warn("katz: beta * max_degree = " + std::to_string(bound) +
         " >= 1; the untruncated series is not guaranteed to converge");
  }
}

}  // namespace

ScoreMap AdamicAdar(const Graph& graph) {
  const std::size_t n = graph.node_count();
  SparseRow row(n);
  std::vector<ScoreMap::Entry> out;
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId c : graph.Neighbors(a)) {
      const double w = AdamicAdarWeight(graph.Degree(c));
      for (NodeId b : graph.Neighbors(c)) {
        if (b > a) row.Add(b, w);
      }
    }
    row.SortTouched();
    for (NodeId b : row.touched()) out.push_back({{a, b}, row[b]});
    row.Clear();
  }
  return ScoreMap::FromSortedEntries(n, std::move(out));
}

ScoreMap AdamicAdar(const Graph& graph, std::span<const NodePair> pairs) {
  CheckPairs(graph, pairs);
  std::vector<ScoreMap::Entry> out;
  for (const NodePair& p : pairs) {
    const double s = AdamicAdarPair(graph, p.u, p.v);
    if (s != 0.0) out.push_back({p, s});
  }
  return ScoreMap::FromEntries(graph.node_count(), std::move(out));
}

void KatzConfig::Validate() const {
  if (!(beta > 0.0 && beta < 1.0)) throw InvalidArgument("katz beta must lie in (0, 1)");
  if (max_length < 1) throw InvalidArgument("katz max_length must be >= 1");
  if (!(truncation_tolerance > 0.0)) throw InvalidArgument("katz truncation_tolerance must be > 0");
}

ScoreMap Katz(const Graph& graph, const KatzConfig& config) {
  config.Validate();
  CheckSpectralBound(graph, config);
  const std::size_t n = graph.node_count();
  KatzRows rows(graph, config);
  std::vector<ScoreMap::Entry> out;
  for (NodeId a = 0; a < n; ++a) {
    rows.Compute(a);
    for (NodeId b : rows.targets()) {
      if (b <= a) continue;
      rows.CheckTruncation(b);
      out.push_back({{a, b}, rows.score(b)});
    }
  }
  rows.ReportTruncation();
  return ScoreMap::FromSortedEntries(n, std::move(out));
}

ScoreMap Katz(const Graph& graph, const KatzConfig& config, std::span<const NodePair> pairs) {
  config.Validate();
  CheckPairs(graph, pairs);
  CheckSpectralBound(graph, config);
  std::vector<NodePair> sorted(pairs.begin(), pairs.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  KatzRows rows(graph, config);
  std::vector<ScoreMap::Entry> out;
  std::size_t i = 0;
  while (i < sorted.size()) {
    const NodeId a = sorted[i].u;
    rows.Compute(a);
    for (; i < sorted.size() && sorted[i].u == a; ++i) {
      const double s = rows.score(sorted[i].v);
      if (s == 0.0) continue;
      rows.CheckTruncation(sorted[i].v);
      out.push_back({sorted[i], s});
    }
  }
  rows.ReportTruncation();
  return ScoreMap::FromSortedEntries(graph.node_count(), std::move(out));
}

std::vector<NodePair> TwoHopPairs(const Graph& graph) {
  const std::size_t n = graph.node_count();
  SparseRow reach(n);
  std::vector<NodePair> out;
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId c : graph.Neighbors(a)) {
      if (c > a) reach.Add(c, 1.0);
      for (NodeId b : graph.Neighbors(c)) {
        if (b > a) reach.Add(b, 1.0);
      }
    }
    reach.SortTouched();
    for (NodeId b : reach.touched()) out.push_back({a, b});
    reach.Clear();
  }
  return out;
}

}  // namespace linkpred
