#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "linkpred/node_pair.h"

namespace linkpred {

/// Sparse symmetric score matrix over node pairs. Absent pairs score 0.
/// Entries are kept sorted by pair.
class ScoreMap {
 public:
  struct Entry {
    NodePair pair;
    double score = 0.0;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  explicit ScoreMap(std::size_t node_count = 0) : node_count_(node_count) {}

  /// Entries in any order; duplicates and out-of-range pairs are rejected.
  static ScoreMap FromEntries(std::size_t node_count, std::vector<Entry> entries);
  /// Entries already strictly increasing by pair (checked).
  static ScoreMap FromSortedEntries(std::size_t node_count, std::vector<Entry> entries);

  std::size_t node_count() const { return node_count_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::span<const Entry> entries() const { return entries_; }
  std::uint64_t pair_universe() const { return PairCount(node_count_); }
  bool CoversAllPairs() const { return entries_.size() == pair_universe(); }

  double Get(NodePair pair) const;

  friend bool operator==(const ScoreMap&, const ScoreMap&) = default;

 private:
  std::size_t node_count_ = 0;
  std::vector<Entry> entries_;
};

/// Merges the supports of `a` and `b` and stores combine(a(p), b(p)) for every
/// pair in the union, skipping results equal to 0.
template <class Combine>
ScoreMap CombineUnion(const ScoreMap& a, const ScoreMap& b, Combine combine) {
  if (a.node_count() != b.node_count()) {
    throw InvalidArgument("score maps are over different node universes");
  }
  std::vector<ScoreMap::Entry> out;
  out.reserve(std::max(a.size(), b.size()));
  auto ia = a.entries().begin(), ea = a.entries().end();
  auto ib = b.entries().begin(), eb = b.entries().end();
  auto emit = [&out](NodePair p, double s) {
    if (s != 0.0) out.push_back({p, s});
  };
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->pair < ib->pair)) {
      emit(ia->pair, combine(ia->score, 0.0));
      ++ia;
    } else if (ia == ea || ib->pair < ia->pair) {
      emit(ib->pair, combine(0.0, ib->score));
      ++ib;
    } else {
      emit(ia->pair, combine(ia->score, ib->score));
      ++ia;
      ++ib;
    }
  }
  return ScoreMap::FromSortedEntries(a.node_count(), std::move(out));
}

struct NormalizeOptions {
  /// Treat the implicit 0 of absent pairs as part of the score population, so
  /// the minimum is taken over stored values and 0 whenever some pair is absent.
  /// Keeps absent pairs strictly below every positive stored score.
  bool include_implicit_zero = false;
};

/// Affine min-max rescaling of stored values onto [0, 1]. When max == min every
/// stored value maps to 1. Throws InvalidArgument on an empty map.
ScoreMap NormalizeScores(const ScoreMap& scores, NormalizeOptions options = {});

/// Text export: one `u v score` line per stored pair, canonical order, scores
/// printed with 9 significant digits. A leading `# nodes N` comment records the universe.
void WriteScoreMap(std::ostream& out, const ScoreMap& scores);
ScoreMap ReadScoreMap(std::istream& in, const std::string& source = "scores");

}  // namespace linkpred
