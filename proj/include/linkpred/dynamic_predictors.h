#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "linkpred/graph.h"
#include "linkpred/score_map.h"
#include "linkpred/static_predictors.h"

namespace linkpred {

struct EwmaConfig {
  /// Weight of the newest observation.
  double lambda = 0.5;
  void Validate() const;
};

/// S_0 = X_0, S_k = lambda * X_k + (1 - lambda) * S_{k-1}; returns the last S.
ScoreMap SmoothScores(std::span<const ScoreMap> history, const EwmaConfig& config);

/// EWMA of the binary interaction snapshots 0..t. Pairs never observed score 0.
ScoreMap EwmaScores(const SnapshotSequence& interactions, std::size_t t,
                    const EwmaConfig& config);

/// Which pairs the per-snapshot static scores of TS-AA / TS-Katz are computed on.
enum class CandidatePairs {
  /// Union over snapshots 0..t of the pairs within two hops in that snapshot.
  kTwoHopUnion,
  /// Every pair.
  kAll,
};

/// EWMA of the per-snapshot Adamic-Adar score maps of snapshots 0..t.
ScoreMap TsAdamicAdarScores(const SnapshotSequence& interactions, std::size_t t,
                            const EwmaConfig& ewma,
                            CandidatePairs candidates = CandidatePairs::kTwoHopUnion);

/// EWMA of the per-snapshot Katz score maps of snapshots 0..t.
ScoreMap TsKatzScores(const SnapshotSequence& interactions, std::size_t t,
                      const EwmaConfig& ewma, const KatzConfig& katz,
                      CandidatePairs candidates = CandidatePairs::kTwoHopUnion);

struct SbmConfig {
  std::size_t blocks = 10;
  /// Weight of the block density; 1 - mix goes to the EWMA score.
  double mix = 0.5;
  std::uint64_t seed = 1;
  void Validate(std::size_t node_count) const;
};

/// Simplified dynamic block-model predictor: the EWMA matrix W is partitioned by
/// spectral clustering, block-pair densities theta(g, h) are the mean of W over
/// all pairs between (or within) the blocks, and each pair scores
/// mix * theta(block(a), block(b)) + (1 - mix) * W(a, b).
ScoreMap SbmScores(const SnapshotSequence& interactions, std::size_t t,
                   const EwmaConfig& ewma, const SbmConfig& sbm);

}  // namespace linkpred
