#include "linkpred/dynamic_predictors.h"

#include <algorithm>
#include <vector>

#include "linkpred/spectral.h"

namespace linkpred {
namespace {

ScoreMap Indicator(const SnapshotSequence& seq, std::size_t t) {
  std::vector<ScoreMap::Entry> entries;
  entries.reserve(seq.at(t).edge_count());
  for (const NodePair& e : seq.at(t).edges()) entries.push_back({e, 1.0});
  return ScoreMap::FromSortedEntries(seq.node_count, std::move(entries));
}

void CheckStep(const SnapshotSequence& seq, std::size_t t) { (void)seq.at(t); }

}  // namespace

void EwmaConfig::Validate() const {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw InvalidArgument("EWMA lambda must lie in (0, 1]");
}

ScoreMap SmoothScores(std::span<const ScoreMap> history, const EwmaConfig& config) {
  config.Validate();
  if (history.empty()) throw InvalidArgument("EWMA needs at least one observation");
  const double lambda = config.lambda;
  ScoreMap state = history.front();
  for (std::size_t k = 1; k < history.size(); ++k) {
    state = CombineUnion(history[k], state, [lambda](double x, double s) {
      return lambda * x + (1.0 - lambda) * s;
    });
  }
  return state;
}

ScoreMap EwmaScores(const SnapshotSequence& interactions, std::size_t t,
                    const EwmaConfig& config) {
  CheckStep(interactions, t);
  std::vector<ScoreMap> history;
  for (std::size_t tau = 0; tau <= t; ++tau) history.push_back(Indicator(interactions, tau));
  return SmoothScores(history, config);
}

ScoreMap TsAdamicAdarScores(const SnapshotSequence& interactions, std::size_t t,
                            const EwmaConfig& ewma, CandidatePairs candidates) {
  CheckStep(interactions, t);
  ewma.Validate();
  // Adamic-Adar vanishes beyond two hops of its own snapshot, so the all-pairs
  // form already agrees with either candidate rule.
  (void)candidates;
  std::vector<ScoreMap> history;
  for (std::size_t tau = 0; tau <= t; ++tau) {
    history.push_back(AdamicAdar(Graph(interactions.node_count, interactions.at(tau))));
  }
  return SmoothScores(history, ewma);
}

ScoreMap TsKatzScores(const SnapshotSequence& interactions, std::size_t t,
                      const EwmaConfig& ewma, const KatzConfig& katz,
                      CandidatePairs candidates) {
  CheckStep(interactions, t);
  ewma.Validate();
  katz.Validate();
  std::vector<Graph> graphs;
  for (std::size_t tau = 0; tau <= t; ++tau) {
    graphs.emplace_back(interactions.node_count, interactions.at(tau));
  }
  std::vector<NodePair> pool;
  if (candidates == CandidatePairs::kTwoHopUnion) {
    for (const Graph& g : graphs) {
      const auto pairs = TwoHopPairs(g);
      pool.insert(pool.end(), pairs.begin(), pairs.end());
    }
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  }
  std::vector<ScoreMap> history;
  for (const Graph& g : graphs) {
    history.push_back(candidates == CandidatePairs::kAll ? Katz(g, katz) : Katz(g, katz, pool));
  }
  return SmoothScores(history, ewma);
}

void SbmConfig::Validate(std::size_t node_count) const {
  if (blocks < 1 || blocks > node_count) {
    throw InvalidArgument("block count must satisfy 1 <= k <= N (k=" + std::to_string(blocks) +
                          ", N=" + std::to_string(node_count) + ")");
  }
  if (!(mix >= 0.0 && mix <= 1.0)) throw InvalidArgument("block-model mix must lie in [0, 1]");
}

ScoreMap SbmScores(const SnapshotSequence& interactions, std::size_t t,
                   const EwmaConfig& ewma, const SbmConfig& sbm) {
  const std::size_t n = interactions.node_count;
  sbm.Validate(n);
  const ScoreMap w = EwmaScores(interactions, t, ewma);
  if (sbm.mix == 0.0) return w;

  const Partition part = SpectralPartition(w, sbm.blocks, sbm.seed);
  const std::size_t k = part.block_count;
  std::vector<std::size_t> size(k, 0);
  for (auto b : part.block_of) ++size[b];
  std::vector<double> sum(k * k, 0.0);
  for (const auto& e : w.entries()) {
    auto g = part.block_of[e.pair.u], h = part.block_of[e.pair.v];
    if (g > h) std::swap(g, h);
    sum[g * k + h] += e.score;
  }
  std::vector<double> theta(k * k, 0.0);
  for (std::size_t g = 0; g < k; ++g) {
    for (std::size_t h = g; h < k; ++h) {
      const double pairs = g == h ? static_cast<double>(PairCount(size[g]))
                                  : static_cast<double>(size[g]) * static_cast<double>(size[h]);
      const double density = pairs > 0.0 ? sum[g * k + h] / pairs : 0.0;
      theta[g * k + h] = density;
      theta[h * k + g] = density;
    }
  }

  std::vector<ScoreMap::Entry> out;
  auto it = w.entries().begin();
  const auto end = w.entries().end();
  for (NodeId a = 0; a < n; ++a) {
    const double* row = &theta[part.block_of[a] * k];
    for (NodeId b = a + 1; b < n; ++b) {
      double ws = 0.0;
      if (it != end && it->pair == NodePair{a, b}) {
        ws = it->score;
        ++it;
      }
      const double s = sbm.mix * row[part.block_of[b]] + (1.0 - sbm.mix) * ws;
      if (s != 0.0) out.push_back({{a, b}, s});
    }
  }
  return ScoreMap::FromSortedEntries(n, std::move(out));
}

}  // namespace linkpred
