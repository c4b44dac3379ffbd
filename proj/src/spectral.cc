#include "linkpred/spectral.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "linkpred/logging.h"
#include "linkpred/random.h"

namespace linkpred {
namespace {

constexpr int kRestarts = 5;

struct Clustering {
  std::vector<std::uint32_t> labels;
  double inertia = std::numeric_limits<double>::infinity();
};

Eigen::MatrixXd SeedCenters(const Eigen::MatrixXd& points, std::size_t k, Rng& rng) {
  const Eigen::Index n = points.rows();
  Eigen::MatrixXd centers(static_cast<Eigen::Index>(k), points.cols());
  std::vector<char> chosen(n, 0);
  Eigen::Index first = static_cast<Eigen::Index>(rng.NextIndex(n));
  centers.row(0) = points.row(first);
  chosen[first] = 1;
  Eigen::VectorXd d2 = (points.rowwise() - centers.row(0)).rowwise().squaredNorm();
  for (std::size_t c = 1; c < k; ++c) {
    const double total = d2.sum();
    Eigen::Index pick = -1;
    if (total > 0.0) {
      double target = rng.NextDouble() * total;
      for (Eigen::Index i = 0; i < n; ++i) {
        target -= d2[i];
        if (target < 0.0 && d2[i] > 0.0) {
          pick = i;
          break;
        }
      }
      if (pick < 0) {
        for (Eigen::Index i = n - 1; i >= 0; --i) {
          if (d2[i] > 0.0) {
            pick = i;
            break;
          }
        }
      }
    } else {
      for (Eigen::Index i = 0; i < n && pick < 0; ++i) {
        if (!chosen[i]) pick = i;
      }
      if (pick < 0) pick = 0;
    }
    chosen[pick] = 1;
    centers.row(static_cast<Eigen::Index>(c)) = points.row(pick);
    d2 = d2.cwiseMin((points.rowwise() - centers.row(static_cast<Eigen::Index>(c))).rowwise().squaredNorm());
  }
  return centers;
}

Clustering Lloyd(const Eigen::MatrixXd& points, Eigen::MatrixXd centers, int max_iterations) {
  const Eigen::Index n = points.rows();
  const Eigen::Index k = centers.rows();
  Clustering result;
  result.labels.assign(n, 0);
  bool first = true;
  for (int iter = 0; iter < max_iterations; ++iter) {
    bool changed = false;
    double inertia = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      std::uint32_t best = 0;
      double best_d = std::numeric_limits<double>::infinity();
      for (Eigen::Index c = 0; c < k; ++c) {
        const double d = (points.row(i) - centers.row(c)).squaredNorm();
        if (d < best_d) {
          best_d = d;
          best = static_cast<std::uint32_t>(c);
        }
      }
      changed |= best != result.labels[i];
      result.labels[i] = best;
      inertia += best_d;
    }
    result.inertia = inertia;
    if (!changed && !first) break;
    first = false;
    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, points.cols());
    std::vector<std::size_t> counts(k, 0);
    for (Eigen::Index i = 0; i < n; ++i) {
      sums.row(result.labels[i]) += points.row(i);
      ++counts[result.labels[i]];
    }
    for (Eigen::Index c = 0; c < k; ++c) {
      if (counts[c] > 0) centers.row(c) = sums.row(c) / static_cast<double>(counts[c]);
    }
  }
  return result;
}

std::size_t CountEmpty(const std::vector<std::uint32_t>& labels, std::size_t k) {
  std::vector<char> used(k, 0);
  for (auto l : labels) used[l] = 1;
  return static_cast<std::size_t>(std::count(used.begin(), used.end(), 0));
}

}  // namespace

std::vector<std::uint32_t> KMeans(const Eigen::MatrixXd& points, std::size_t k,
                                  std::uint64_t seed, int max_iterations) {
  if (k == 0 || static_cast<Eigen::Index>(k) > points.rows()) {
    throw InvalidArgument("k-means needs 1 <= k <= number of points");
  }
  Rng rng(seed);
  Clustering best;
  for (int r = 0; r < kRestarts; ++r) {
    Clustering c = Lloyd(points, SeedCenters(points, k, rng), max_iterations);
    if (c.inertia < best.inertia) best = std::move(c);
  }
  return best.labels;
}

Partition SpectralPartition(const ScoreMap& weights, std::size_t k, std::uint64_t seed) {
  const std::size_t n = weights.node_count();
  if (k == 0 || k > n) throw InvalidArgument("block count must satisfy 1 <= k <= N");

  // Eigen-decompose only the nodes carrying weight; the rest embed at the origin.
  std::vector<int> active_index(n, -1);
  std::vector<NodeId> active;
  for (const auto& e : weights.entries()) {
    for (NodeId v : {e.pair.u, e.pair.v}) {
      if (active_index[v] < 0) {
        active_index[v] = 0;
        active.push_back(v);
      }
    }
  }
  std::sort(active.begin(), active.end());
  for (std::size_t i = 0; i < active.size(); ++i) active_index[active[i]] = static_cast<int>(i);

  const Eigen::Index m = static_cast<Eigen::Index>(active.size());
  const Eigen::Index dims = std::min<Eigen::Index>(static_cast<Eigen::Index>(k), m);
  Eigen::MatrixXd embedding = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), std::max<Eigen::Index>(dims, 1));
  if (m > 0) {
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(m, m);
    for (const auto& e : weights.entries()) {
      const int i = active_index[e.pair.u], j = active_index[e.pair.v];
      w(i, j) = e.score;
      w(j, i) = e.score;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(w);
    if (solver.info() != Eigen::Success) throw Error("eigen decomposition failed");
    std::vector<Eigen::Index> order(m);
    std::iota(order.begin(), order.end(), 0);
    const auto& values = solver.eigenvalues();
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
      return std::abs(values[a]) > std::abs(values[b]);
    });
    for (Eigen::Index d = 0; d < dims; ++d) {
      const auto vec = solver.eigenvectors().col(order[d]);
      for (Eigen::Index i = 0; i < m; ++i) embedding(active[i], d) = vec[i];
    }
  }

  std::vector<std::uint32_t> labels = KMeans(embedding, k, seed);
  if (CountEmpty(labels, k) > 0) {
    labels = KMeans(embedding, k, seed ^ 0x9e3779b97f4a7c15ULL);
  }
  const std::size_t empty = CountEmpty(labels, k);
  if (empty > 0) {
    Warn("spectral partition: " + std::to_string(empty) + " of " + std::to_string(k) +
         " blocks empty after re-seeding; using " + std::to_string(k - empty) + " blocks");
  }
  // Compact labels, numbering blocks by first appearance.
  std::vector<std::int64_t> remap(k, -1);
  Partition out;
  out.block_of.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto& r = remap[labels[v]];
    if (r < 0) r = static_cast<std::int64_t>(out.block_count++);
    out.block_of[v] = static_cast<std::uint32_t>(r);
  }
  return out;
}

}  // namespace linkpred
