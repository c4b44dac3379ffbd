#include "linkpred/synthetic.h"

#include <cmath>
#include <string>
#include <unordered_set>

#include "linkpred/random.h"

namespace linkpred {
namespace {

bool IsProbability(double p) { return p >= 0.0 && p <= 1.0; }

class FriendSampler {
 public:
  FriendSampler(const SyntheticSpec& spec, Rng& rng) : spec_(spec), rng_(rng) {}

  NodeId CommunityOf(NodeId v) const {
    return static_cast<NodeId>(std::uint64_t{v} * spec_.communities / spec_.nodes);
  }

  // Draws `count` edges not yet in `present`.
  std::vector<NodePair> Draw(std::size_t count, std::unordered_set<NodePair>& present) {
    std::vector<NodePair> out;
    const std::size_t max_attempts = 1000 * count + 1000;
    std::size_t attempts = 0;
    while (out.size() < count) {
      if (++attempts > max_attempts) {
        throw InvalidArgument("synthetic friendship sampler saturated; lower the edge counts");
      }
      const NodeId a = static_cast<NodeId>(rng_.NextIndex(spec_.nodes));
      NodeId b;
      if (rng_.Bernoulli(spec_.within_community_share)) {
        const NodeId c = CommunityOf(a);
        const std::uint64_t lo = (std::uint64_t{c} * spec_.nodes + spec_.communities - 1) / spec_.communities;
        const std::uint64_t hi = ((std::uint64_t{c} + 1) * spec_.nodes + spec_.communities - 1) / spec_.communities;
        b = static_cast<NodeId>(lo + rng_.NextIndex(hi - lo));
      } else {
        b = static_cast<NodeId>(rng_.NextIndex(spec_.nodes));
      }
      if (a == b) continue;
      const NodePair p = NodePair::Of(a, b);
      if (present.insert(p).second) out.push_back(p);
    }
    return out;
  }

 private:
  const SyntheticSpec& spec_;
  Rng& rng_;
};

}  // namespace

std::size_t SyntheticSpec::InitialFriendships() const {
  return static_cast<std::size_t>(std::llround(initial_mean_degree * static_cast<double>(nodes) / 2.0));
}

void SyntheticSpec::Validate() const {
  if (nodes < 2) throw InvalidArgument("synthetic data needs at least two nodes");
  if (snapshots < 1) throw InvalidArgument("synthetic data needs at least one snapshot");
  if (communities < 1 || communities > nodes) throw InvalidArgument("communities must lie in [1, nodes]");
  if (!(initial_mean_degree >= 0.0)) throw InvalidArgument("initial_mean_degree must be >= 0");
  if (interval <= 0) throw InvalidArgument("interval must be positive");
  for (double p : {within_community_share, q_friend, q_nonfriend, persistence_boost}) {
    if (!IsProbability(p)) throw InvalidArgument("synthetic probabilities must lie in [0, 1]");
  }
  if (q_friend < q_nonfriend) throw InvalidArgument("q_friend must be >= q_nonfriend");
  const std::uint64_t needed =
      InitialFriendships() + std::uint64_t{friendship_growth} * (snapshots - 1);
  if (needed > PairCount(nodes)) {
    throw InvalidArgument("friendship edges requested (" + std::to_string(needed) +
                          ") exceed the number of node pairs (" + std::to_string(PairCount(nodes)) + ")");
  }
}

DualDataset GenerateSynthetic(const SyntheticSpec& spec, std::uint64_t seed) {
  spec.Validate();
  Rng rng(seed);
  const std::size_t n = spec.nodes;
  DualDataset ds;
  for (std::size_t v = 0; v < n; ++v) ds.node_names.push_back("n" + std::to_string(v));
  ds.friendships = {GraphKind::kFriendship, n, {}};
  ds.interactions = {GraphKind::kInteraction, n, {}};

  FriendSampler sampler(spec, rng);
  std::unordered_set<NodePair> present;
  std::vector<NodePair> friends = sampler.Draw(spec.InitialFriendships(), present);

  std::vector<char> is_friend(n * n, 0), interacted(n * n, 0), next(n * n, 0);
  auto cell = [n](NodeId a, NodeId b) { return std::size_t{a} * n + b; };

  for (std::size_t tau = 0; tau < spec.snapshots; ++tau) {
    const TimeWindow window{spec.start + static_cast<std::int64_t>(tau) * spec.interval,
                            spec.start + static_cast<std::int64_t>(tau + 1) * spec.interval};
    if (tau > 0) {
      const auto added = sampler.Draw(spec.friendship_growth, present);
      friends.insert(friends.end(), added.begin(), added.end());
    }
    // Interactions at tau follow friendships at tau - 1 (tau itself for the first
    // snapshot); is_friend is only refreshed after the draw.
    if (tau == 0) {
      for (const NodePair& e : friends) is_friend[cell(e.u, e.v)] = 1;
    }
    const std::vector<char>& basis = is_friend;
    std::vector<NodePair> edges;
    for (NodeId a = 0; a < n; ++a) {
      for (NodeId b = a + 1; b < n; ++b) {
        double p = basis[cell(a, b)] ? spec.q_friend : spec.q_nonfriend;
        if (interacted[cell(a, b)]) p = std::min(1.0, p + spec.persistence_boost);
        const bool hit = rng.Bernoulli(p);
        next[cell(a, b)] = hit;
        if (hit) edges.push_back({a, b});
      }
    }
    std::swap(interacted, next);
    for (const NodePair& e : friends) is_friend[cell(e.u, e.v)] = 1;
    ds.friendships.snapshots.emplace_back(tau, window, friends);
    ds.interactions.snapshots.emplace_back(tau, window, std::move(edges));
  }
  return ds;
}

}  // namespace linkpred
