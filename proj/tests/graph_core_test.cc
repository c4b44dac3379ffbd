#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "linkpred/dataset_io.h"
#include "linkpred/graph_stats.h"
#include "linkpred/ingest.h"
#include "linkpred/synthetic.h"

namespace linkpred {
namespace {

constexpr std::int64_t kDay = kSecondsPerDay;

IngestOptions ThreeWindows() { return {0, 3 * 10 * kDay, 10 * kDay}; }

DualDataset Ingest(const std::string& friends, const std::string& interactions,
                   const IngestOptions& options = ThreeWindows(), IngestStats* stats = nullptr) {
  std::istringstream f(friends), i(interactions);
  return IngestEdgeStreams(f, i, options, stats);
}

NodePair Pair(const DualDataset& ds, const std::string& a, const std::string& b) {
  auto id = [&](const std::string& name) {
    for (NodeId v = 0; v < ds.node_count(); ++v) {
      if (ds.node_names[v] == name) return v;
    }
    ADD_FAILURE() << "unknown node " << name;
    return NodeId{0};
  };
  return NodePair::Of(id(a), id(b));
}

TEST(Ingest, FriendshipAccumulatesFromItsWindow) {
  const auto ds = Ingest("a b 100\n", "");
  ASSERT_EQ(ds.snapshot_count(), 3u);
  for (std::size_t t = 0; t < 3; ++t) {
    EXPECT_TRUE(ds.friendships.at(t).HasEdge(Pair(ds, "a", "b"))) << t;
  }
  const auto later = Ingest("a b 100\nc d " + std::to_string(15 * kDay) + "\n", "");
  EXPECT_FALSE(later.friendships.at(0).HasEdge(Pair(later, "c", "d")));
  EXPECT_TRUE(later.friendships.at(1).HasEdge(Pair(later, "c", "d")));
  EXPECT_TRUE(later.friendships.at(2).HasEdge(Pair(later, "c", "d")));
}

TEST(Ingest, UntimedFriendshipPresentFromSnapshotZero) {
  IngestStats stats;
  const auto ds = Ingest("a b\nc d \\N\n", "", ThreeWindows(), &stats);
  EXPECT_EQ(stats.friendships_untimed, 2u);
  EXPECT_TRUE(ds.friendships.at(0).HasEdge(Pair(ds, "a", "b")));
  EXPECT_TRUE(ds.friendships.at(0).HasEdge(Pair(ds, "c", "d")));
}

TEST(Ingest, InteractionOnlyInItsWindowAndUndirected) {
  const std::string t1 = std::to_string(12 * kDay);
  const auto ds = Ingest("", "b a " + t1 + "\na b " + t1 + "\n");
  EXPECT_EQ(ds.interactions.at(0).edge_count(), 0u);
  EXPECT_EQ(ds.interactions.at(1).edge_count(), 1u);
  EXPECT_TRUE(ds.interactions.at(1).HasEdge(Pair(ds, "a", "b")));
  EXPECT_EQ(ds.interactions.at(2).edge_count(), 0u);
}

TEST(Ingest, WindowCountFloorsAndDropsPartialWindow) {
  IngestStats stats;
  // 35 days at 10-day windows -> 3 windows; a post on day 32 falls in the dropped tail.
  const IngestOptions options{0, 35 * kDay, 10 * kDay};
  const auto ds = Ingest("", "a b " + std::to_string(32 * kDay) + "\na b -5\n", options, &stats);
  EXPECT_EQ(ds.snapshot_count(), 3u);
  EXPECT_EQ(stats.interactions_out_of_range, 2u);
  for (const auto& s : ds.interactions.snapshots) EXPECT_EQ(s.edge_count(), 0u);
  EXPECT_EQ(ds.interactions.at(2).window().end, 30 * kDay);
}

TEST(Ingest, NinetyDayWindowsFromTraceStart) {
  // 2006-09-01 .. 2009-01-22: nine full 90-day windows, the last ending in November 2008.
  const IngestOptions options{1157068800, 1232582400, 90 * kDay};
  EXPECT_EQ(options.WindowCount(), 9u);
  const std::int64_t last_end = options.start + 9 * options.interval;
  EXPECT_GE(last_end, 1225497600);  // 2008-11-01
  EXPECT_LT(last_end, 1228089600);  // 2008-12-01
}

TEST(Ingest, SelfPostsAndCommentsDropped) {
  IngestStats stats;
  const auto ds = Ingest("# header\n\na a 5\n", "# c\nb b 5\n", ThreeWindows(), &stats);
  EXPECT_EQ(stats.self_loops_dropped, 2u);
  EXPECT_EQ(ds.friendships.at(2).edge_count(), 0u);
}

TEST(Ingest, MalformedLineReportsLineNumber) {
  try {
    Ingest("a b 1\n# ok\nbad\n", "");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(Ingest("a b 1 2\n", ""), ParseError);
  EXPECT_THROW(Ingest("a b x1\n", ""), ParseError);
  EXPECT_THROW(Ingest("", "a b\n"), ParseError);  // interaction timestamp is mandatory
}

TEST(Ingest, RejectsBadRange) {
  EXPECT_THROW(Ingest("", "", {10, 5, 1}), InvalidArgument);
  EXPECT_THROW(Ingest("", "", {0, 10, 0}), InvalidArgument);
  EXPECT_THROW(Ingest("", "", {0, 10, 20}), InvalidArgument);
}

TEST(DatasetIo, RoundTripIsExact) {
  SyntheticSpec spec;
  spec.nodes = 60;
  spec.snapshots = 5;
  spec.friendship_growth = 20;
  spec.q_friend = 0.2;
  spec.q_nonfriend = 0.01;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const DualDataset ds = GenerateSynthetic(spec, seed);
    std::stringstream buf;
    WriteDataset(buf, ds);
    const DualDataset back = ReadDataset(buf);
    EXPECT_EQ(back, ds);
    std::stringstream again;
    WriteDataset(again, back);
    EXPECT_EQ(again.str(), buf.str());
  }
}

TEST(DatasetIo, RejectsCorruptInput) {
  std::istringstream bad_magic("XXXX 1\n");
  EXPECT_THROW(ReadDataset(bad_magic), ParseError);
  std::istringstream collision("LPDS 1\nnodes 2\n0 a\n1 a\nsnapshots 0\nend\n");
  EXPECT_THROW(ReadDataset(collision), ParseError);
  std::istringstream shrinking(
      "LPDS 1\nnodes 2\n0 a\n1 b\nsnapshots 2\nwindow 0 0 10\nwindow 1 10 20\n"
      "F 0 1\n0 1\nI 0 0\nF 1 0\nI 1 0\nend\n");
  EXPECT_THROW(ReadDataset(shrinking), ParseError);
}

DualDataset Star() {
  // Center 0 with five leaves.
  std::string friends;
  for (int leaf = 1; leaf <= 5; ++leaf) friends += "c l" + std::to_string(leaf) + "\n";
  return Ingest(friends, "c l1 3\nl1 l2 3\n");
}

TEST(FilterByAggregateDegree, ThresholdZeroIsIdentity) {
  const auto ds = Star();
  EXPECT_EQ(FilterByAggregateDegree(ds, 0), ds);
}

TEST(FilterByAggregateDegree, StarKeepsOnlyCenter) {
  const auto filtered = FilterByAggregateDegree(Star(), 2);
  ASSERT_EQ(filtered.node_count(), 1u);
  EXPECT_EQ(filtered.node_names[0], "c");
  for (std::size_t t = 0; t < filtered.snapshot_count(); ++t) {
    EXPECT_EQ(filtered.friendships.at(t).edge_count(), 0u);
    EXPECT_EQ(filtered.interactions.at(t).edge_count(), 0u);
  }
  filtered.Validate();
}

TEST(FilterByAggregateDegree, EmptyResultIsSignaled) {
  EXPECT_THROW(FilterByAggregateDegree(Star(), 6), EmptyResult);
}

TEST(FilterByAggregateDegree, KeepsExactlyNodesMeetingThreshold) {
  SyntheticSpec spec;
  spec.nodes = 120;
  spec.snapshots = 4;
  spec.friendship_growth = 30;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto ds = GenerateSynthetic(spec, seed);
    std::vector<std::size_t> degree(ds.node_count(), 0);
    for (const NodePair& e : ds.friendships.snapshots.back().edges()) {
      ++degree[e.u];
      ++degree[e.v];
    }
    std::vector<std::string> expected;
    for (NodeId v = 0; v < ds.node_count(); ++v) {
      if (degree[v] >= 17) expected.push_back(ds.node_names[v]);
    }
    const auto once = FilterByAggregateDegree(ds, 17);
    once.Validate();
    EXPECT_EQ(once.node_names, expected);
    std::size_t kept_edges = 0;
    for (const NodePair& e : ds.friendships.snapshots.back().edges()) {
      kept_edges += degree[e.u] >= 17 && degree[e.v] >= 17;
    }
    EXPECT_EQ(once.friendships.snapshots.back().edge_count(), kept_edges);
  }
}

TEST(FilterByAggregateDegree, IdempotentWhenSurvivorsKeepTheirDegree) {
  // Two 4-cliques joined by a bridge plus pendant nodes: at threshold 3 the
  // pendants go and every clique member still has degree >= 3.
  std::string friends;
  for (const char* block : {"a", "b"}) {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        friends += std::string(block) + std::to_string(i) + " " + block + std::to_string(j) + "\n";
  }
  friends += "a0 b0\na1 p1\nb2 p2\n";
  const auto ds = Ingest(friends, "a0 a1 3\np1 a1 3\n");
  const auto once = FilterByAggregateDegree(ds, 3);
  EXPECT_EQ(once.node_count(), 8u);
  EXPECT_EQ(FilterByAggregateDegree(once, 3), once);
}

TEST(FilterByAggregateDegree, SinglePassIsNotAlwaysIdempotent) {
  // Leaves are removed in one pass, which drops the center below the threshold.
  const auto once = FilterByAggregateDegree(Star(), 2);
  EXPECT_THROW(FilterByAggregateDegree(once, 2), EmptyResult);
}

TEST(Fractions, FriendsInteracting) {
  const auto ds = Ingest("a b\n", "a b " + std::to_string(15 * kDay) + "\n");
  EXPECT_DOUBLE_EQ(FractionFriendsInteracting(ds, 0), 1.0);
  const auto half = Ingest("a b\nc d\n", "a b " + std::to_string(15 * kDay) + "\n");
  EXPECT_DOUBLE_EQ(FractionFriendsInteracting(half, 0), 0.5);
  const auto none = Ingest("", "a b " + std::to_string(15 * kDay) + "\n");
  EXPECT_DOUBLE_EQ(FractionFriendsInteracting(none, 0), 0.0);
}

TEST(Fractions, InteractionsBetweenFriends) {
  const std::string t1 = std::to_string(15 * kDay);
  const auto one = Ingest("a b\n", "a b " + t1 + "\n");
  EXPECT_DOUBLE_EQ(FractionInteractionsBetweenFriends(one, 0), 1.0);
  const auto half = Ingest("a b\n", "a b " + t1 + "\nc d " + t1 + "\n");
  EXPECT_DOUBLE_EQ(FractionInteractionsBetweenFriends(half, 0), 0.5);
  EXPECT_DOUBLE_EQ(FractionInteractionsBetweenFriends(half, 1), 0.0);
}

TEST(Fractions, OutOfRange) {
  const auto ds = Ingest("a b\n", "");
  EXPECT_THROW(FractionFriendsInteracting(ds, 2), OutOfRange);
  EXPECT_THROW(FractionInteractionsBetweenFriends(ds, 5), OutOfRange);
}

// Fractions lie in [0, 1] and do not depend on node labels.
TEST(Fractions, BoundedAndRelabelInvariant) {
  SyntheticSpec spec;
  spec.nodes = 80;
  spec.snapshots = 5;
  spec.friendship_growth = 10;
  spec.q_friend = 0.1;
  spec.q_nonfriend = 0.01;
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto ds = GenerateSynthetic(spec, seed);
    std::vector<NodeId> perm(ds.node_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    DualDataset relabeled = ds;
    for (auto* seq : {&relabeled.friendships, &relabeled.interactions}) {
      for (auto& s : seq->snapshots) {
        std::vector<NodePair> edges;
        for (const NodePair& e : s.edges()) edges.push_back(NodePair::Of(perm[e.u], perm[e.v]));
        s = Snapshot(s.index(), s.window(), edges);
      }
    }
    relabeled.Validate();
    for (std::size_t t = 0; t + 1 < ds.snapshot_count(); ++t) {
      const double a = FractionFriendsInteracting(ds, t);
      const double b = FractionInteractionsBetweenFriends(ds, t);
      EXPECT_GE(a, 0.0);
      EXPECT_LE(a, 1.0);
      EXPECT_GE(b, 0.0);
      EXPECT_LE(b, 1.0);
      EXPECT_EQ(a, FractionFriendsInteracting(relabeled, t));
      EXPECT_EQ(b, FractionInteractionsBetweenFriends(relabeled, t));
    }
  }
}

TEST(Snapshot, CanonicalUniqueNoSelfLoops) {
  const Snapshot s(0, {0, 1}, {{3, 1}, {1, 3}, {0, 2}});
  ASSERT_EQ(s.edge_count(), 2u);
  EXPECT_EQ(s.edges()[0], (NodePair{0, 2}));
  EXPECT_EQ(s.edges()[1], (NodePair{1, 3}));
  EXPECT_THROW(Snapshot(0, {0, 1}, {{2, 2}}), InvalidArgument);
}

}  // namespace
}  // namespace linkpred
