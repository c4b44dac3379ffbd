#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "linkpred/graph.h"
#include "linkpred/score_map.h"

namespace linkpred {

/// Pairs that interacted in some snapshot <= t. Every other pair of the universe is new.
struct PairSplit {
  std::size_t node_count = 0;
  /// Sorted canonically.
  std::vector<NodePair> previously_observed;

  bool IsPrevious(NodePair pair) const;
  std::uint64_t previous_count() const { return previously_observed.size(); }
  std::uint64_t new_count() const { return PairCount(node_count) - previously_observed.size(); }
};

PairSplit SplitPairs(const SnapshotSequence& interactions, std::size_t t);

/// Items sharing one score value.
struct TieGroup {
  double score = 0.0;
  std::uint64_t positives = 0;
  std::uint64_t negatives = 0;
};

/// Labeled scores collapsed into tie groups ordered by descending score.
class RankedLabels {
 public:
  void Add(double score, bool positive, std::uint64_t count = 1);
  void Append(const RankedLabels& other);

  std::span<const TieGroup> groups() const;
  std::uint64_t positives() const { return positives_; }
  std::uint64_t negatives() const { return negatives_; }

 private:
  void Collapse() const;

  mutable std::vector<TieGroup> groups_;
  mutable bool collapsed_ = true;
  std::uint64_t positives_ = 0;
  std::uint64_t negatives_ = 0;
};

/// Mann-Whitney AUC with ties counted as 1/2.
double Auc(const RankedLabels& labels);
/// Average precision. Tied items form a single threshold step: every positive in
/// a tie group receives the precision measured at the end of the group.
double AveragePrecision(const RankedLabels& labels);

double Auc(const ScoreMap& scores, std::span<const NodePair> positives,
           std::span<const NodePair> negatives);
double Prauc(const ScoreMap& scores, std::span<const NodePair> positives,
             std::span<const NodePair> negatives);

/// sqrt(max(0, (prauc_new - r) / (1 - r)) * max(0, 2 * (auc_prev - 0.5))) with
/// r = p_new / (p_new + n_new), the PRAUC of a random ranking.
double Gmauc(double prauc_new, double auc_prev, std::uint64_t p_new, std::uint64_t n_new);

/// Labels of one prediction step, split into new and previously observed pairs.
/// Absent pairs of the score map enter as one group at score 0.
struct StepLabels {
  RankedLabels new_pairs;
  RankedLabels previous_pairs;
};

StepLabels LabelPrediction(const ScoreMap& scores, const PairSplit& split,
                           const Snapshot& target);

struct EvalReport {
  std::string predictor;
  std::string mode;
  double alpha = 0.0;
  /// Snapshot index t of the prediction (target is t + 1), or "mean" / "pooled".
  std::string step;
  double prauc_new = 0.0;
  double auc_prev = 0.0;
  double gmauc = 0.0;
  std::uint64_t p_new = 0;
  std::uint64_t n_new = 0;
  std::uint64_t p_prev = 0;
  std::uint64_t n_prev = 0;
};

/// PRAUC-new, AUC-previous and GMAUC of one step's labels.
EvalReport ScoreLabels(const StepLabels& labels);

/// Evaluates `scores` (a prediction made at t) against interactions at t + 1.
EvalReport EvaluatePrediction(const ScoreMap& scores, const SnapshotSequence& interactions,
                              std::size_t t);

enum class Aggregation { kMean, kPooled };
std::string ToString(Aggregation aggregation);
Aggregation ParseAggregation(const std::string& text);

/// Combines per-step results: kMean averages each metric over steps, kPooled
/// recomputes the metrics on the concatenated labels. Counts are summed.
EvalReport AggregateSteps(std::span<const EvalReport> steps,
                          std::span<const StepLabels> labels, Aggregation aggregation);

inline constexpr const char* kEvalCsvHeader =
    "predictor,mode,alpha,t,prauc_new,auc_prev,gmauc,p_new,n_new,p_prev,n_prev";

void WriteEvalCsvHeader(std::ostream& out);
void WriteEvalCsvRow(std::ostream& out, const EvalReport& report);

}  // namespace linkpred
