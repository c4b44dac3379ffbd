#include "linkpred/evaluation.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace linkpred {
namespace {

using Wide = unsigned __int128;

std::string FormatReal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

void RequireBothClasses(std::uint64_t positives, std::uint64_t negatives, const char* metric) {
  if (positives == 0 || negatives == 0) {
    throw UndefinedMetric(std::string(metric) + " is undefined without both positives and negatives (P=" +
                          std::to_string(positives) + ", N=" + std::to_string(negatives) + ")");
  }
}

RankedLabels LabelExplicit(const ScoreMap& scores, std::span<const NodePair> positives,
                           std::span<const NodePair> negatives) {
  std::vector<NodePair> pos(positives.begin(), positives.end());
  std::vector<NodePair> neg(negatives.begin(), negatives.end());
  std::sort(pos.begin(), pos.end());
  std::sort(neg.begin(), neg.end());
  std::vector<NodePair> both;
  std::set_intersection(pos.begin(), pos.end(), neg.begin(), neg.end(), std::back_inserter(both));
  if (!both.empty()) throw InvalidArgument("positive and negative pair sets overlap");
  RankedLabels labels;
  for (const NodePair& p : positives) labels.Add(scores.Get(p), true);
  for (const NodePair& p : negatives) labels.Add(scores.Get(p), false);
  return labels;
}

}  // namespace

bool PairSplit::IsPrevious(NodePair pair) const {
  return std::binary_search(previously_observed.begin(), previously_observed.end(), pair);
}

PairSplit SplitPairs(const SnapshotSequence& interactions, std::size_t t) {
  (void)interactions.at(t);
  PairSplit split{interactions.node_count, {}};
  for (std::size_t tau = 0; tau <= t; ++tau) {
    const auto edges = interactions.snapshots[tau].edges();
    split.previously_observed.insert(split.previously_observed.end(), edges.begin(), edges.end());
  }
  auto& prev = split.previously_observed;
  std::sort(prev.begin(), prev.end());
  prev.erase(std::unique(prev.begin(), prev.end()), prev.end());
  return split;
}

void RankedLabels::Add(double score, bool positive, std::uint64_t count) {
  if (count == 0) return;
  groups_.push_back({score, positive ? count : 0, positive ? 0 : count});
  (positive ? positives_ : negatives_) += count;
  collapsed_ = false;
}

void RankedLabels::Append(const RankedLabels& other) {
  for (const TieGroup& g : other.groups()) groups_.push_back(g);
  positives_ += other.positives_;
  negatives_ += other.negatives_;
  collapsed_ = false;
}

void RankedLabels::Collapse() const {
  if (collapsed_) return;
  std::sort(groups_.begin(), groups_.end(),
            [](const TieGroup& a, const TieGroup& b) { return a.score > b.score; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < groups_.size(); ++i) {
    if (out > 0 && groups_[out - 1].score == groups_[i].score) {
      groups_[out - 1].positives += groups_[i].positives;
      groups_[out - 1].negatives += groups_[i].negatives;
    } else {
      groups_[out++] = groups_[i];
    }
  }
  groups_.resize(out);
  collapsed_ = true;
}

std::span<const TieGroup> RankedLabels::groups() const {
  Collapse();
  return groups_;
}

double Auc(const RankedLabels& labels) {
  const std::uint64_t P = labels.positives(), N = labels.negatives();
  RequireBothClasses(P, N, "AUC");
  // Twice the Mann-Whitney count, kept integral so ties add exactly 1/2.
  Wide twice_wins = 0;
  std::uint64_t negatives_below = N;
  for (const TieGroup& g : labels.groups()) {
    negatives_below -= g.negatives;
    twice_wins += Wide{2} * g.positives * negatives_below + Wide{g.positives} * g.negatives;
  }
  return static_cast<double>(twice_wins) / (2.0 * static_cast<double>(P) * static_cast<double>(N));
}

double AveragePrecision(const RankedLabels& labels) {
  const std::uint64_t P = labels.positives(), N = labels.negatives();
  RequireBothClasses(P, N, "PRAUC");
  double weighted = 0.0;
  std::uint64_t seen_pos = 0, seen = 0;
  for (const TieGroup& g : labels.groups()) {
    seen_pos += g.positives;
    seen += g.positives + g.negatives;
    if (g.positives == 0) continue;
    const double precision = static_cast<double>(seen_pos) / static_cast<double>(seen);
    if (g.positives == P) return precision;
    weighted += static_cast<double>(g.positives) * precision;
  }
  return std::min(weighted / static_cast<double>(P), 1.0);
}

double Auc(const ScoreMap& scores, std::span<const NodePair> positives,
           std::span<const NodePair> negatives) {
  return Auc(LabelExplicit(scores, positives, negatives));
}

double Prauc(const ScoreMap& scores, std::span<const NodePair> positives,
             std::span<const NodePair> negatives) {
  return AveragePrecision(LabelExplicit(scores, positives, negatives));
}

double Gmauc(double prauc_new, double auc_prev, std::uint64_t p_new, std::uint64_t n_new) {
  if (!(prauc_new >= 0.0 && prauc_new <= 1.0) || !(auc_prev >= 0.0 && auc_prev <= 1.0)) {
    throw InvalidArgument("GMAUC inputs must lie in [0, 1]");
  }
  if (p_new + n_new == 0) throw UndefinedMetric("GMAUC needs at least one new pair");
  if (n_new == 0) throw UndefinedMetric("GMAUC chance correction undefined when every new pair is positive");
  const double r = static_cast<double>(p_new) / static_cast<double>(p_new + n_new);
  const double pr_term = std::max(0.0, (prauc_new - r) / (1.0 - r));
  const double auc_term = std::max(0.0, 2.0 * (auc_prev - 0.5));
  return std::sqrt(pr_term * auc_term);
}

StepLabels LabelPrediction(const ScoreMap& scores, const PairSplit& split,
                           const Snapshot& target) {
  if (scores.node_count() != split.node_count) {
    throw InvalidArgument("score map and pair split are over different node universes");
  }
  const auto prev = std::span<const NodePair>(split.previously_observed);
  const auto next = target.edges();
  for (const NodePair& e : next) {
    if (e.v >= split.node_count) throw InvalidArgument("target edge outside the node universe");
  }

  std::uint64_t p_prev = 0;
  {
    auto i = prev.begin();
    for (const NodePair& e : next) {
      while (i != prev.end() && *i < e) ++i;
      if (i != prev.end() && *i == e) ++p_prev;
    }
  }
  const std::uint64_t n_prev = prev.size() - p_prev;
  const std::uint64_t p_new = next.size() - p_prev;
  const std::uint64_t n_new = split.new_count() - p_new;

  StepLabels labels;
  std::uint64_t stored_new_pos = 0, stored_new_neg = 0, stored_prev_pos = 0, stored_prev_neg = 0;
  auto ip = prev.begin();
  auto it = next.begin();
  for (const auto& e : scores.entries()) {
    while (ip != prev.end() && *ip < e.pair) ++ip;
    while (it != next.end() && *it < e.pair) ++it;
    const bool is_prev = ip != prev.end() && *ip == e.pair;
    const bool positive = it != next.end() && *it == e.pair;
    if (is_prev) {
      labels.previous_pairs.Add(e.score, positive);
      ++(positive ? stored_prev_pos : stored_prev_neg);
    } else {
      labels.new_pairs.Add(e.score, positive);
      ++(positive ? stored_new_pos : stored_new_neg);
    }
  }
  labels.new_pairs.Add(0.0, true, p_new - stored_new_pos);
  labels.new_pairs.Add(0.0, false, n_new - stored_new_neg);
  labels.previous_pairs.Add(0.0, true, p_prev - stored_prev_pos);
  labels.previous_pairs.Add(0.0, false, n_prev - stored_prev_neg);
  return labels;
}

EvalReport ScoreLabels(const StepLabels& labels) {
  EvalReport r;
  r.p_new = labels.new_pairs.positives();
  r.n_new = labels.new_pairs.negatives();
  r.p_prev = labels.previous_pairs.positives();
  r.n_prev = labels.previous_pairs.negatives();
  r.prauc_new = AveragePrecision(labels.new_pairs);
  r.auc_prev = Auc(labels.previous_pairs);
  r.gmauc = Gmauc(r.prauc_new, r.auc_prev, r.p_new, r.n_new);
  return r;
}

EvalReport EvaluatePrediction(const ScoreMap& scores, const SnapshotSequence& interactions,
                              std::size_t t) {
  if (t + 1 >= interactions.size()) {
    throw OutOfRange("no target snapshot after t=" + std::to_string(t));
  }
  EvalReport r = ScoreLabels(LabelPrediction(scores, SplitPairs(interactions, t),
                                             interactions.snapshots[t + 1]));
  r.step = std::to_string(t);
  return r;
}

std::string ToString(Aggregation aggregation) {
  return aggregation == Aggregation::kMean ? "mean" : "pooled";
}

Aggregation ParseAggregation(const std::string& text) {
  if (text == "mean") return Aggregation::kMean;
  if (text == "pooled") return Aggregation::kPooled;
  throw InvalidArgument("unknown aggregation `" + text + "` (expected mean or pooled)");
}

EvalReport AggregateSteps(std::span<const EvalReport> steps, std::span<const StepLabels> labels,
                          Aggregation aggregation) {
  if (steps.empty()) throw InvalidArgument("nothing to aggregate");
  EvalReport out;
  out.predictor = steps.front().predictor;
  out.mode = steps.front().mode;
  out.alpha = steps.front().alpha;
  out.step = ToString(aggregation);
  if (aggregation == Aggregation::kPooled) {
    if (labels.size() != steps.size()) throw InvalidArgument("pooled aggregation needs every step's labels");
    StepLabels pooled;
    for (const StepLabels& l : labels) {
      pooled.new_pairs.Append(l.new_pairs);
      pooled.previous_pairs.Append(l.previous_pairs);
    }
    EvalReport metrics = ScoreLabels(pooled);
    out.prauc_new = metrics.prauc_new;
    out.auc_prev = metrics.auc_prev;
    out.gmauc = metrics.gmauc;
  } else {
    for (const EvalReport& s : steps) {
      out.prauc_new += s.prauc_new;
      out.auc_prev += s.auc_prev;
      out.gmauc += s.gmauc;
    }
    const double count = static_cast<double>(steps.size());
    out.prauc_new /= count;
    out.auc_prev /= count;
    out.gmauc /= count;
  }
  for (const EvalReport& s : steps) {
    out.p_new += s.p_new;
    out.n_new += s.n_new;
    out.p_prev += s.p_prev;
    out.n_prev += s.n_prev;
  }
  return out;
}

void WriteEvalCsvHeader(std::ostream& out) { out << kEvalCsvHeader << '\n'; }

void WriteEvalCsvRow(std::ostream& out, const EvalReport& r) {
  out << r.predictor << ',' << r.mode << ',' << FormatReal(r.alpha) << ',' << r.step << ','
      << FormatReal(r.prauc_new) << ',' << FormatReal(r.auc_prev) << ',' << FormatReal(r.gmauc) << ','
      << r.p_new << ',' << r.n_new << ',' << r.p_prev << ',' << r.n_prev << '\n';
}

}  // namespace linkpred
