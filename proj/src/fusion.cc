#include "linkpred/fusion.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace linkpred {
namespace {

void CheckAlpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw InvalidArgument("fusion weight alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
}

// (1 - alpha) * s + alpha * f, clamped to the segment [s, f] so that rounding never
// leaves the hull of the inputs.
double Convex(double s, double f, double alpha) {
  const double v = (1.0 - alpha) * s + alpha * f;
  return std::clamp(v, std::min(s, f), std::max(s, f));
}

ScoreMap FriendIndicator(std::size_t node_count, const Snapshot& friends) {
  std::vector<ScoreMap::Entry> entries;
  entries.reserve(friends.edge_count());
  for (const NodePair& e : friends.edges()) entries.push_back({e, 1.0});
  return ScoreMap::FromSortedEntries(node_count, std::move(entries));
}

std::string AlphaText(double alpha) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", alpha);
  return buf;
}

}  // namespace

std::string ToString(FusionMode mode) {
  switch (mode) {
    case FusionMode::kNone:
      return "none";
    case FusionMode::kCurrentFriends:
      return "FR";
    case FusionMode::kPredictedAdamicAdar:
      return "AA";
    case FusionMode::kPredictedKatz:
      return "Katz";
  }
  return "?";
}

FusionMode ParseFusionMode(const std::string& text) {
  if (text == "none") return FusionMode::kNone;
  if (text == "FR" || text == "current") return FusionMode::kCurrentFriends;
  if (text == "AA" || text == "predicted-AA") return FusionMode::kPredictedAdamicAdar;
  if (text == "Katz" || text == "predicted-Katz") return FusionMode::kPredictedKatz;
  throw InvalidArgument("unknown fusion mode `" + text + "` (expected none, FR, AA or Katz)");
}

void FusionConfig::Validate() const { CheckAlpha(alpha); }

ScoreMap FuseCurrent(const ScoreMap& interaction, const Snapshot& friends, double alpha) {
  CheckAlpha(alpha);
  return CombineUnion(interaction, FriendIndicator(interaction.node_count(), friends),
                      [alpha](double s, double f) { return Convex(s, f, alpha); });
}

ScoreMap BuildAugmentedFriendship(const Snapshot& friends, const ScoreMap& predicted) {
  for (const auto& e : predicted.entries()) {
    if (!(e.score >= 0.0 && e.score <= 1.0)) {
      throw InvalidArgument("predicted friendship scores must be normalized to [0, 1]");
    }
  }
  return CombineUnion(predicted, FriendIndicator(predicted.node_count(), friends),
                      [](double p, double f) { return f == 1.0 ? 1.0 : p; });
}

ScoreMap FusePredicted(const ScoreMap& interaction, const ScoreMap& augmented, double alpha) {
  CheckAlpha(alpha);
  return CombineUnion(interaction, augmented,
                      [alpha](double s, double f) { return Convex(s, f, alpha); });
}

ScoreMap FriendshipMatrix(const DualDataset& dataset, std::size_t t, FusionMode mode,
                          const KatzConfig& katz) {
  const std::size_t n = dataset.node_count();
  const Snapshot& friends = dataset.friendships.at(t);
  switch (mode) {
    case FusionMode::kNone:
      return ScoreMap(n);
    case FusionMode::kCurrentFriends:
      return FriendIndicator(n, friends);
    case FusionMode::kPredictedAdamicAdar:
    case FusionMode::kPredictedKatz: {
      const Graph g(n, friends);
      ScoreMap predicted = mode == FusionMode::kPredictedAdamicAdar ? AdamicAdar(g) : Katz(g, katz);
      if (!predicted.empty()) {
        predicted = NormalizeScores(predicted, {.include_implicit_zero = true});
      }
      return BuildAugmentedFriendship(friends, predicted);
    }
  }
  return ScoreMap(n);
}

const AlphaEvaluation& GridSearchResult::best() const {
  for (const AlphaEvaluation& a : per_alpha) {
    if (a.alpha == best_alpha) return a;
  }
  throw Error("grid search result has no entry for its best alpha");
}

std::vector<double> DefaultAlphaGrid() {
  std::vector<double> grid;
  for (int i = 0; i <= 10; ++i) grid.push_back(i / 10.0);
  return grid;
}

GridSearchResult GridSearchAlpha(const PredictionSeries& predictions,
                                 std::span<const ScoreMap> friendship_matrices,
                                 const DualDataset& dataset, FusionMode mode,
                                 std::span<const double> grid, Aggregation aggregation) {
  if (grid.empty()) throw InvalidArgument("alpha grid is empty");
  for (double a : grid) CheckAlpha(a);
  const std::size_t steps = predictions.steps.size();
  if (steps == 0 || predictions.scores.size() != steps) {
    throw InvalidArgument("prediction series must hold one score map per step");
  }
  if (mode != FusionMode::kNone && friendship_matrices.size() != steps) {
    throw InvalidArgument("need one friendship matrix per step");
  }

  std::vector<PairSplit> splits;
  for (std::size_t t : predictions.steps) {
    if (t + 1 >= dataset.snapshot_count()) {
      throw OutOfRange("prediction step t=" + std::to_string(t) + " has no target snapshot");
    }
    splits.push_back(SplitPairs(dataset.interactions, t));
  }

  GridSearchResult result;
  for (double alpha : grid) {
    AlphaEvaluation eval;
    eval.alpha = alpha;
    std::vector<StepLabels> kept;
    for (std::size_t i = 0; i < steps; ++i) {
      const std::size_t t = predictions.steps[i];
      const std::string context = predictions.predictor + " mode=" + ToString(mode) +
                                  " alpha=" + AlphaText(alpha) + " t=" + std::to_string(t);
      try {
        const ScoreMap fused = mode == FusionMode::kNone
                                   ? predictions.scores[i]
                                   : FusePredicted(predictions.scores[i], friendship_matrices[i], alpha);
        StepLabels labels = LabelPrediction(fused, splits[i], dataset.interactions.snapshots[t + 1]);
        EvalReport report = ScoreLabels(labels);
        report.predictor = predictions.predictor;
        report.mode = ToString(mode);
        report.alpha = alpha;
        report.step = std::to_string(t);
        eval.steps.push_back(std::move(report));
        if (aggregation == Aggregation::kPooled) kept.push_back(std::move(labels));
      } catch (const UndefinedMetric& e) {
        throw UndefinedMetric(context + ": " + e.what());
      } catch (const Error& e) {
        throw Error(context + ": " + e.what());
      }
    }
    eval.aggregate = AggregateSteps(eval.steps, kept, aggregation);
    result.per_alpha.push_back(std::move(eval));
  }

  const AlphaEvaluation* best = &result.per_alpha.front();
  for (const AlphaEvaluation& a : result.per_alpha) {
    const double g = a.aggregate.gmauc, bg = best->aggregate.gmauc;
    if (g > bg || (g == bg && a.alpha < best->alpha)) best = &a;
  }
  result.best_alpha = best->alpha;
  return result;
}

GridSearchResult GridSearchAlpha(const PredictionSeries& predictions, const DualDataset& dataset,
                                 FusionMode mode, std::span<const double> grid,
                                 const KatzConfig& katz, Aggregation aggregation) {
  std::vector<ScoreMap> matrices;
  if (mode != FusionMode::kNone) {
    for (std::size_t t : predictions.steps) matrices.push_back(FriendshipMatrix(dataset, t, mode, katz));
  }
  return GridSearchAlpha(predictions, matrices, dataset, mode, grid, aggregation);
}

}  // namespace linkpred
