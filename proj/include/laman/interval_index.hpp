#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "laman/graph.hpp"

namespace laman {

struct Interval {
  std::int32_t low = 0;
  std::int32_t high = 0;
  EdgeId owner = kNoEdge;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Segment tree over the integer points 1..n that reports, and removes,
/// intervals with exactly one endpoint inside a query window.
///
/// The tree is built over the n - 1 unit gaps (p, p + 1). An interval
/// [low, high] covers gaps low .. high - 1 and is stored at the canonical
/// nodes of that range. Every node keeps two sorted stores of its
/// intervals: by_high (ascending high) and by_low (descending low). Stabbing
/// the gap just left of d and draining by_high while high <= f yields the
/// intervals with low < d <= high <= f; stabbing the gap just right of f and
/// draining by_low while low >= d yields d <= low <= f < high. Erasure is
/// lazy, so erase is O(1) and every store entry is passed at most once.
///
/// Owners are edge ids; each owner may appear at most once.
class IntervalIndex {
 public:
  IntervalIndex() = default;
  /// Throws std::domain_error on endpoints outside [1, universe], low >= high,
  /// or a repeated owner.
  IntervalIndex(std::span<const Interval> intervals, std::int32_t universe);

  /// Intervals with low < d and d <= high <= f; each is removed before return.
  std::vector<Interval> query_left(std::int32_t d, std::int32_t f);
  /// Intervals with high > f and d <= low <= f; each is removed before return.
  std::vector<Interval> query_right(std::int32_t d, std::int32_t f);
  /// query_left and query_right into one buffer, appending.
  void query_crossing(std::int32_t d, std::int32_t f, std::vector<Interval>& out);

  /// True iff owner was present.
  bool erase(EdgeId owner);
  bool contains(EdgeId owner) const;

  std::size_t size() const { return live_; }
  std::int32_t universe() const { return universe_; }

  /// Nodes visited plus store entries passed since construction.
  std::uint64_t work() const { return work_; }

  /// Every live interval, in owner order. For tests.
  std::vector<Interval> live_intervals() const;

 private:
  // Stores are drained only from the front, so each is a sorted array of
  // slots with a cursor; erased intervals stay in place and are skipped.
  enum class Drain { by_high, by_low };

  // Drain state of one store: the key at the cursor (a sentinel once the
  // store is exhausted) sits next to the cursor, so a node whose head does
  // not qualify costs one record read.
  struct alignas(16) Head {
    std::int32_t key = 0;
    std::int32_t at = 0;
    std::int32_t end = 0;
  };

  template <class Visit>
  void visit_nodes(std::int32_t first_gap, std::int32_t last_gap, Visit&& visit) const;
  void drain(std::int32_t gap, std::int32_t bound, Drain which, std::vector<Interval>& out);

  std::int32_t universe_ = 0;
  std::int32_t gaps_ = 0;
  // Perfect binary tree in heap order; leaf for gap g is leaves_ + g - 1.
  std::int32_t leaves_ = 1;
  std::int32_t depth_ = 0;
  std::vector<Head> high_heads_;
  std::vector<Head> low_heads_;
  std::vector<std::int32_t> by_high_;
  std::vector<std::int32_t> by_low_;
  std::vector<std::int32_t> slot_of_owner_;
  std::vector<Interval> intervals_;
  std::vector<std::uint8_t> alive_;
  std::size_t live_ = 0;
  std::uint64_t work_ = 0;
};

}  // namespace laman
