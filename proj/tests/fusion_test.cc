#include <random>

#include <gtest/gtest.h>

#include "linkpred/dynamic_predictors.h"
#include "linkpred/fusion.h"
#include "linkpred/synthetic.h"
#include "oracles.h"

namespace linkpred {
namespace {

Snapshot Friends(std::vector<NodePair> edges) { return Snapshot(0, {0, 1}, std::move(edges)); }

ScoreMap RandomScores(std::size_t n, double density, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<ScoreMap::Entry> entries;
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b)
      if (u(rng) < density) entries.push_back({{a, b}, u(rng)});
  return ScoreMap::FromEntries(n, entries);
}

SnapshotSequence Sequence(GraphKind kind, std::size_t n, const std::vector<std::vector<NodePair>>& snaps) {
  SnapshotSequence seq{kind, n, {}};
  for (std::size_t t = 0; t < snaps.size(); ++t) {
    seq.snapshots.emplace_back(t, TimeWindow{static_cast<std::int64_t>(t), static_cast<std::int64_t>(t + 1)},
                               snaps[t]);
  }
  return seq;
}

TEST(FuseCurrent, Examples) {
  const auto s = ScoreMap::FromEntries(3, {{{0, 1}, 0.5}, {{1, 2}, 0.5}});
  const auto friends = Friends({{0, 1}});
  EXPECT_EQ(FuseCurrent(s, friends, 0.0), s);
  const auto fused = FuseCurrent(s, friends, 0.1);
  EXPECT_NEAR(fused.Get({0, 1}), 0.55, 1e-15);
  EXPECT_NEAR(fused.Get({1, 2}), 0.45, 1e-15);
  EXPECT_EQ(FuseCurrent(s, friends, 1.0).Get({0, 1}), 1.0);
  EXPECT_EQ(FuseCurrent(s, friends, 1.0).Get({1, 2}), 0.0);
  EXPECT_THROW(FuseCurrent(s, friends, 1.1), InvalidArgument);
  EXPECT_THROW(FuseCurrent(s, friends, -0.1), InvalidArgument);
}

TEST(FuseCurrent, BoundsIncreaseAndMonotonicity) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 15;
    const auto s = RandomScores(n, 0.4, rng);
    const auto friends = Friends(testing::RandomEdges(n, 0.3, rng));
    const double alpha = 0.05 + 0.9 * static_cast<double>(rng() % 1000) / 999.0;
    const auto fused = FuseCurrent(s, friends, alpha);
    for (NodeId a = 0; a < n; ++a) {
      for (NodeId b = a + 1; b < n; ++b) {
        const double before = s.Get({a, b}), after = fused.Get({a, b});
        EXPECT_GE(after, 0.0);
        EXPECT_LE(after, 1.0);
        if (friends.HasEdge({a, b})) {
          if (before < 1.0) {
            EXPECT_GT(after, before);
          }
          EXPECT_NEAR(after - (1.0 - alpha) * before, alpha, 1e-15);
        } else {
          EXPECT_NEAR(after, (1.0 - alpha) * before, 1e-15);
        }
      }
    }
    // Equal interaction scores: a friend pair never ranks below a non-friend pair.
    const auto flat = ScoreMap::FromEntries(n, {{{0, 1}, 0.3}, {{2, 3}, 0.3}});
    const auto f2 = FuseCurrent(flat, Friends({{0, 1}}), alpha);
    EXPECT_GE(f2.Get({0, 1}), f2.Get({2, 3}));
  }
}

TEST(Augmented, Rules) {
  const auto predicted = ScoreMap::FromEntries(4, {{{0, 1}, 0.2}, {{0, 2}, 0.3}});
  const auto aug = BuildAugmentedFriendship(Friends({{0, 1}, {2, 3}}), predicted);
  EXPECT_EQ(aug.Get({0, 1}), 1.0);
  EXPECT_EQ(aug.Get({2, 3}), 1.0);
  EXPECT_EQ(aug.Get({0, 2}), 0.3);
  EXPECT_EQ(aug.Get({1, 3}), 0.0);
  EXPECT_THROW(BuildAugmentedFriendship(Friends({}), ScoreMap::FromEntries(4, {{{0, 1}, 2.0}})),
               InvalidArgument);
}

TEST(FusePredicted, AgreesWithCurrentAndEndpoints) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 12;
    const auto s = RandomScores(n, 0.5, rng);
    const auto friends = Friends(testing::RandomEdges(n, 0.25, rng));
    const auto aug = BuildAugmentedFriendship(friends, RandomScores(n, 0.3, rng));
    const double alpha = static_cast<double>(rng() % 11) / 10.0;
    EXPECT_EQ(FusePredicted(s, aug, 0.0), s);
    EXPECT_EQ(FusePredicted(s, aug, 1.0), aug);
    EXPECT_EQ(FusePredicted(s, BuildAugmentedFriendship(friends, ScoreMap(n)), alpha),
              FuseCurrent(s, friends, alpha));
    const auto fp = FusePredicted(s, aug, alpha), fc = FuseCurrent(s, friends, alpha);
    for (const NodePair& e : friends.edges()) EXPECT_EQ(fp.Get(e), fc.Get(e));
  }
}

TEST(FriendshipMatrix, Modes) {
  DualDataset ds;
  ds.node_names = {"a", "b", "c", "d"};
  ds.friendships = Sequence(GraphKind::kFriendship, 4, {{{0, 1}, {1, 2}}, {{0, 1}, {1, 2}}});
  ds.interactions = Sequence(GraphKind::kInteraction, 4, {{}, {}});
  EXPECT_TRUE(FriendshipMatrix(ds, 0, FusionMode::kNone, {}).empty());
  const auto fr = FriendshipMatrix(ds, 0, FusionMode::kCurrentFriends, {});
  EXPECT_EQ(fr.size(), 2u);
  EXPECT_EQ(fr.Get({0, 1}), 1.0);
  const auto aa = FriendshipMatrix(ds, 0, FusionMode::kPredictedAdamicAdar, {});
  EXPECT_EQ(aa.Get({0, 1}), 1.0);
  EXPECT_EQ(aa.Get({0, 2}), 1.0);  // sole predicted pair normalizes to 1
  EXPECT_EQ(aa.Get({0, 3}), 0.0);
  const auto katz = FriendshipMatrix(ds, 0, FusionMode::kPredictedKatz, {0.1, 3});
  EXPECT_GT(katz.Get({0, 2}), 0.0);
  EXPECT_LE(katz.Get({0, 2}), 1.0);
  EXPECT_EQ(katz.Get({1, 2}), 1.0);
  EXPECT_EQ(ParseFusionMode("FR"), FusionMode::kCurrentFriends);
  EXPECT_EQ(ToString(ParseFusionMode("predicted-Katz")), "Katz");
  EXPECT_THROW(ParseFusionMode("both"), InvalidArgument);
}

PredictionSeries EwmaSeries(const DualDataset& ds, std::size_t first, std::size_t last) {
  PredictionSeries series{"EWMA", {}, {}};
  for (std::size_t t = first; t <= last; ++t) {
    series.steps.push_back(t);
    series.scores.push_back(EwmaScores(ds.interactions, t, {0.5}));
  }
  return series;
}

TEST(GridSearch, ZeroGridIsBaseline) {
  SyntheticSpec spec;
  spec.nodes = 80;
  spec.snapshots = 5;
  const auto ds = GenerateSynthetic(spec, 3);
  const auto series = EwmaSeries(ds, 1, 3);
  const std::vector<double> zero{0.0};
  const auto fr = GridSearchAlpha(series, ds, FusionMode::kCurrentFriends, zero, {});
  const auto none = GridSearchAlpha(series, ds, FusionMode::kNone, zero, {});
  EXPECT_EQ(fr.best_alpha, 0.0);
  ASSERT_EQ(fr.per_alpha.size(), 1u);
  for (std::size_t i = 0; i < fr.best().steps.size(); ++i) {
    const auto& a = fr.best().steps[i];
    const auto& b = none.best().steps[i];
    EXPECT_EQ(a.prauc_new, b.prauc_new);
    EXPECT_EQ(a.auc_prev, b.auc_prev);
    EXPECT_EQ(a.gmauc, b.gmauc);
  }
  EXPECT_EQ(fr.best().aggregate.gmauc, none.best().aggregate.gmauc);
}

TEST(GridSearch, FriendshipOracleIsOptimalAtFullWeight) {
  // Interactions at t + 1 copy friendships at t; predictions are noise.
  std::mt19937_64 rng(53);
  const std::size_t n = 40, T = 5;
  std::vector<std::vector<NodePair>> friends(T), inter(T);
  std::vector<NodePair> acc;
  for (std::size_t t = 0; t < T; ++t) {
    for (const NodePair& e : testing::RandomEdges(n, 0.03, rng)) acc.push_back(e);
    friends[t] = acc;
  }
  inter[0] = testing::RandomEdges(n, 0.05, rng);
  for (std::size_t t = 1; t < T; ++t) inter[t] = friends[t - 1];
  DualDataset ds;
  for (std::size_t v = 0; v < n; ++v) ds.node_names.push_back("v" + std::to_string(v));
  ds.friendships = Sequence(GraphKind::kFriendship, n, friends);
  ds.interactions = Sequence(GraphKind::kInteraction, n, inter);
  ds.Validate();

  PredictionSeries noise{"noise", {}, {}};
  for (std::size_t t = 1; t + 1 < T; ++t) {
    noise.steps.push_back(t);
    noise.scores.push_back(RandomScores(n, 1.0, rng));
  }
  const auto grid = DefaultAlphaGrid();
  const auto result = GridSearchAlpha(noise, ds, FusionMode::kCurrentFriends, grid, {});
  ASSERT_EQ(result.per_alpha.size(), 11u);
  const auto& full = result.per_alpha.back();
  EXPECT_EQ(full.alpha, 1.0);
  EXPECT_EQ(full.aggregate.gmauc, 1.0);
  for (const auto& a : result.per_alpha) EXPECT_LE(a.aggregate.gmauc, full.aggregate.gmauc);
  EXPECT_EQ(result.best().aggregate.gmauc, 1.0);
  EXPECT_LT(result.per_alpha.front().aggregate.gmauc, 0.5);
  // Every smaller alpha is strictly worse than the chosen one.
  for (const auto& a : result.per_alpha) {
    if (a.alpha < result.best_alpha) {
      EXPECT_LT(a.aggregate.gmauc, 1.0);
    }
  }
}

TEST(GridSearch, TiesGoToSmallerAlpha) {
  SyntheticSpec spec;
  spec.nodes = 60;
  spec.snapshots = 4;
  const auto ds = GenerateSynthetic(spec, 4);
  const auto series = EwmaSeries(ds, 1, 2);
  const std::vector<double> grid{0.7, 0.3, 0.3};
  // Mode none ignores alpha, so every grid point ties.
  const auto result = GridSearchAlpha(series, ds, FusionMode::kNone, std::vector<double>{0.0}, {});
  EXPECT_EQ(result.best_alpha, 0.0);
  const std::vector<ScoreMap> same(2, ScoreMap(ds.node_count()));
  const auto tied = GridSearchAlpha(series, same, ds, FusionMode::kCurrentFriends, grid);
  EXPECT_EQ(tied.best_alpha, 0.3);
}

TEST(GridSearch, Errors) {
  SyntheticSpec spec;
  spec.nodes = 40;
  spec.snapshots = 3;
  const auto ds = GenerateSynthetic(spec, 5);
  const auto series = EwmaSeries(ds, 1, 1);
  EXPECT_THROW(GridSearchAlpha(series, ds, FusionMode::kCurrentFriends, std::vector<double>{}, {}),
               InvalidArgument);
  EXPECT_THROW(GridSearchAlpha(series, ds, FusionMode::kCurrentFriends, std::vector<double>{1.5}, {}),
               InvalidArgument);
  const auto late = EwmaSeries(ds, 2, 2);
  EXPECT_THROW(GridSearchAlpha(late, ds, FusionMode::kCurrentFriends, DefaultAlphaGrid(), {}), OutOfRange);
}

}  // namespace
}  // namespace linkpred
