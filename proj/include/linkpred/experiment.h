#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "linkpred/dynamic_predictors.h"
#include "linkpred/evaluation.h"
#include "linkpred/fusion.h"
#include "linkpred/graph.h"
#include "linkpred/ingest.h"
#include "linkpred/static_predictors.h"
#include "linkpred/synthetic.h"

namespace linkpred {

enum class PredictorKind { kEwma, kTsAdamicAdar, kTsKatz, kSbm };

/// Report names: EWMA, TS-AA, TS-Katz, DSBM.
std::string ToString(PredictorKind kind);
PredictorKind ParsePredictorKind(const std::string& text);

struct PredictorConfig {
  PredictorKind kind = PredictorKind::kEwma;
  EwmaConfig ewma;
  KatzConfig katz;
  SbmConfig sbm;
  CandidatePairs candidates = CandidatePairs::kTwoHopUnion;
};

/// Interaction scores of one predictor made at t for t + 1, on the [0, 1] scale
/// expected by fusion (TS-AA and TS-Katz are min-max normalized).
ScoreMap PredictInteractions(const DualDataset& dataset, const PredictorConfig& predictor,
                             std::size_t t);

PredictionSeries PredictSeries(const DualDataset& dataset, const PredictorConfig& predictor,
                               std::span<const std::size_t> steps);

struct DataSource {
  enum class Kind { kEdgeFiles, kDataset, kSynthetic };
  Kind kind = Kind::kSynthetic;
  std::filesystem::path friendships;
  std::filesystem::path interactions;
  std::filesystem::path dataset;
  IngestOptions ingest;
  SyntheticSpec synthetic;
  /// Applied after loading; 0 keeps every node.
  std::size_t degree_threshold = 0;
};

inline constexpr int kConfigVersion = 1;

struct ExperimentConfig {
  DataSource data;
  std::vector<PredictorConfig> predictors;
  std::vector<FusionMode> modes;
  std::vector<double> alpha_grid;
  Aggregation aggregation = Aggregation::kMean;
  /// Friendship link predictor settings for the predicted-friendship modes.
  KatzConfig friendship_katz;
  /// First prediction step t (needs t >= 0 history snapshots before it).
  std::size_t first_step = 1;
  /// Last prediction step; defaults to T - 2.
  std::optional<std::size_t> last_step;
  std::uint64_t seed = 1;
  std::filesystem::path output_dir = "out";

  void Validate() const;
  std::vector<std::size_t> Steps(std::size_t snapshot_count) const;
};

/// Parses the versioned JSON experiment schema (see README). Relative data paths
/// are resolved against `base_dir`.
ExperimentConfig ParseExperimentConfig(const nlohmann::json& json,
                                       const std::filesystem::path& base_dir = {});
ExperimentConfig LoadExperimentConfig(const std::filesystem::path& path);

/// Loads, ingests or generates the dataset and applies the degree filter.
DualDataset LoadExperimentData(const ExperimentConfig& config);

struct GridRun {
  std::string predictor;
  FusionMode mode = FusionMode::kNone;
  GridSearchResult result;
};

struct ExperimentResult {
  std::vector<std::size_t> steps;
  std::vector<GridRun> runs;
};

/// Scores every (predictor, fusion mode, alpha, step) and evaluates it. Mode kNone
/// is evaluated at alpha 0 only.
ExperimentResult RunExperiment(const ExperimentConfig& config, const DualDataset& dataset);

/// Per-step rows of every (predictor, mode, alpha).
void WriteStepCsv(std::ostream& out, const ExperimentResult& result);
/// Aggregated row of every (predictor, mode, alpha); t holds the aggregation name.
void WriteAlphaGridCsv(std::ostream& out, const ExperimentResult& result);
/// Best-alpha table: base predictors, then + FR, then + AA / + Katz.
void WriteSummary(std::ostream& out, const ExperimentResult& result,
                  const ExperimentConfig& config, const DualDataset& dataset);

void WriteFractionCsv(std::ostream& out, const DualDataset& dataset);

/// Runs the experiment and writes eval_steps.csv, eval_alpha.csv and summary.txt
/// into config.output_dir.
ExperimentResult RunSweep(const ExperimentConfig& config);

}  // namespace linkpred
