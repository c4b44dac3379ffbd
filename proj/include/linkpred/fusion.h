#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "linkpred/evaluation.h"
#include "linkpred/graph.h"
#include "linkpred/score_map.h"
#include "linkpred/static_predictors.h"

namespace linkpred {

enum class FusionMode {
  kNone,
  kCurrentFriends,
  kPredictedAdamicAdar,
  kPredictedKatz,
};

/// Short names used in reports: none, FR, AA, Katz.
std::string ToString(FusionMode mode);
FusionMode ParseFusionMode(const std::string& text);

struct FusionConfig {
  FusionMode mode = FusionMode::kNone;
  /// Weight on the friendship matrix; 1 - alpha goes to the interaction scores.
  double alpha = 0.0;
  void Validate() const;
};

/// (1 - alpha) * interaction + alpha * F, with F the binary friendship indicator.
ScoreMap FuseCurrent(const ScoreMap& interaction, const Snapshot& friends, double alpha);

/// 1 on friendship edges, the (normalized) predicted score elsewhere.
ScoreMap BuildAugmentedFriendship(const Snapshot& friends, const ScoreMap& predicted);

/// (1 - alpha) * interaction + alpha * augmented.
ScoreMap FusePredicted(const ScoreMap& interaction, const ScoreMap& augmented, double alpha);

/// Friendship matrix combined at step t for the given mode: the binary friendship
/// snapshot, or its augmentation with normalized AA / Katz predictions.
/// Empty for FusionMode::kNone.
ScoreMap FriendshipMatrix(const DualDataset& dataset, std::size_t t, FusionMode mode,
                          const KatzConfig& katz);

/// Interaction predictions of one predictor for a range of steps.
struct PredictionSeries {
  std::string predictor;
  std::vector<std::size_t> steps;
  std::vector<ScoreMap> scores;
};

struct AlphaEvaluation {
  double alpha = 0.0;
  std::vector<EvalReport> steps;
  EvalReport aggregate;
};

struct GridSearchResult {
  double best_alpha = 0.0;
  std::vector<AlphaEvaluation> per_alpha;

  const AlphaEvaluation& best() const;
};

/// The alpha grid 0.0, 0.1, ..., 1.0.
std::vector<double> DefaultAlphaGrid();

/// Fuses the predictions with `friendship_matrices` (one per step; ignored for
/// kNone) at each alpha, evaluates every step against the next interaction
/// snapshot, and picks the alpha with the highest aggregate GMAUC (ties toward
/// the smaller alpha).
GridSearchResult GridSearchAlpha(const PredictionSeries& predictions,
                                 std::span<const ScoreMap> friendship_matrices,
                                 const DualDataset& dataset, FusionMode mode,
                                 std::span<const double> grid,
                                 Aggregation aggregation = Aggregation::kMean);

/// Same, computing the friendship matrices from the dataset.
GridSearchResult GridSearchAlpha(const PredictionSeries& predictions,
                                 const DualDataset& dataset, FusionMode mode,
                                 std::span<const double> grid, const KatzConfig& katz,
                                 Aggregation aggregation = Aggregation::kMean);

}  // namespace linkpred
