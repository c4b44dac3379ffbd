#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "linkpred/score_map.h"

namespace linkpred {

struct Partition {
  /// Block of each node, in [0, block_count).
  std::vector<std::uint32_t> block_of;
  std::size_t block_count = 0;
};

/// Lloyd's k-means on the rows of `points` with k-means++ seeding.
/// Labels may leave clusters empty; callers decide how to handle that.
std::vector<std::uint32_t> KMeans(const Eigen::MatrixXd& points, std::size_t k,
                                  std::uint64_t seed, int max_iterations = 100);

/// Spectral partition of the weighted symmetric graph `weights` into at most k
/// blocks: rows of the eigenvectors for the k largest-magnitude eigenvalues are
/// clustered with k-means. Nodes without any weight embed at the origin. An empty
/// cluster triggers one re-seeded attempt; remaining empty clusters are dropped
/// (with a warning), so block_count may be smaller than k.
Partition SpectralPartition(const ScoreMap& weights, std::size_t k, std::uint64_t seed);

}  // namespace linkpred
