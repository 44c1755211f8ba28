#include "laman/interval_index.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace laman {

namespace {
// Keys that never qualify for a by_high (key <= bound) or by_low (key >= bound) drain.
constexpr std::int32_t kHighSentinel = std::numeric_limits<std::int32_t>::max();
constexpr std::int32_t kLowSentinel = std::numeric_limits<std::int32_t>::min();
}  // namespace

IntervalIndex::IntervalIndex(std::span<const Interval> intervals, std::int32_t universe)
    : universe_(universe), gaps_(std::max(universe - 1, 0)), intervals_(intervals.begin(), intervals.end()) {
  const auto count = intervals_.size();
  EdgeId max_owner = -1;
  for (const Interval& iv : intervals_) {
    if (iv.low < 1 || iv.high > universe || iv.low >= iv.high) {
      throw std::domain_error("interval [" + std::to_string(iv.low) + "," + std::to_string(iv.high) +
                              "] is not a proper interval inside [1," + std::to_string(universe) + "]");
    }
    if (iv.owner < 0) throw std::domain_error("interval owner must be non-negative");
    max_owner = std::max(max_owner, iv.owner);
  }
  slot_of_owner_.assign(static_cast<std::size_t>(max_owner + 1), -1);
  for (std::size_t i = 0; i < count; ++i) {
    auto& slot = slot_of_owner_[intervals_[i].owner];
    if (slot != -1) throw std::domain_error("owner " + std::to_string(intervals_[i].owner) + " appears twice");
    slot = static_cast<std::int32_t>(i);
  }
  alive_.assign(count, 1);
  live_ = count;
  if (count == 0) return;

  while (leaves_ < gaps_) {
    leaves_ *= 2;
    ++depth_;
  }
  const std::size_t node_count = 2 * static_cast<std::size_t>(leaves_);
  std::vector<std::int32_t> fill(node_count, 0);
  std::vector<std::int64_t> canon_begin(count + 1, 0);
  std::vector<std::int32_t> canon;
  canon.reserve(count * static_cast<std::size_t>(depth_ + 1));
  for (std::size_t i = 0; i < count; ++i) {
    visit_nodes(intervals_[i].low, intervals_[i].high - 1, [&](std::int32_t node) {
      canon.push_back(node);
      ++fill[node];
    });
    canon_begin[i + 1] = static_cast<std::int64_t>(canon.size());
  }
  std::vector<std::int32_t> begin(node_count + 1, 0);
  for (std::size_t v = 0; v < node_count; ++v) begin[v + 1] = begin[v] + fill[v];
  by_high_.resize(canon.size());
  by_low_.resize(canon.size());

  // Slots in (key, owner) order via a stable counting sort over owner order;
  // placing them in that order leaves every store sorted.
  std::vector<std::int32_t> by_owner(count);
  std::iota(by_owner.begin(), by_owner.end(), 0);
  auto owner_less = [&](std::int32_t a, std::int32_t b) { return intervals_[a].owner < intervals_[b].owner; };
  if (!std::is_sorted(by_owner.begin(), by_owner.end(), owner_less)) std::sort(by_owner.begin(), by_owner.end(), owner_less);
  std::vector<std::int32_t> order(count);
  auto place = [&](std::vector<std::int32_t>& store, auto key_of) {
    std::vector<std::int32_t> start(static_cast<std::size_t>(universe_) + 2, 0);
    for (const Interval& iv : intervals_) ++start[key_of(iv) + 1];
    for (std::size_t k = 1; k < start.size(); ++k) start[k] += start[k - 1];
    for (std::int32_t i : by_owner) order[start[key_of(intervals_[i])]++] = i;
    std::copy(begin.begin(), begin.end() - 1, fill.begin());
    for (std::int32_t i : order) {
      for (auto k = canon_begin[i]; k < canon_begin[i + 1]; ++k) store[fill[canon[k]]++] = i;
    }
  };
  place(by_high_, [](const Interval& iv) { return iv.high; });
  // Descending low is ascending universe - low.
  place(by_low_, [this](const Interval& iv) { return universe_ - iv.low; });

  high_heads_.resize(node_count);
  low_heads_.resize(node_count);
  for (std::size_t v = 0; v < node_count; ++v) {
    const std::int32_t b = begin[v];
    const std::int32_t e = begin[v + 1];
    high_heads_[v] = {b < e ? intervals_[by_high_[b]].high : kHighSentinel, b, e};
    low_heads_[v] = {b < e ? intervals_[by_low_[b]].low : kLowSentinel, b, e};
  }
}

template <class Visit>
void IntervalIndex::visit_nodes(std::int32_t first_gap, std::int32_t last_gap, Visit&& visit) const {
  for (std::int32_t a = first_gap - 1 + leaves_, b = last_gap + leaves_; a < b; a /= 2, b /= 2) {
    if (a & 1) visit(a++);
    if (b & 1) visit(--b);
  }
}

bool IntervalIndex::erase(EdgeId owner) {
  if (!contains(owner)) return false;
  alive_[slot_of_owner_[owner]] = 0;
  --live_;
  return true;
}

bool IntervalIndex::contains(EdgeId owner) const {
  if (owner < 0 || owner >= static_cast<EdgeId>(slot_of_owner_.size())) return false;
  const std::int32_t slot = slot_of_owner_[owner];
  return slot >= 0 && alive_[slot];
}

void IntervalIndex::drain(std::int32_t gap, std::int32_t bound, Drain which, std::vector<Interval>& out) {
  if (live_ == 0) return;
  const bool by_high = which == Drain::by_high;
  const std::vector<std::int32_t>& store = by_high ? by_high_ : by_low_;
  std::vector<Head>& heads = by_high ? high_heads_ : low_heads_;
  const std::int32_t sentinel = by_high ? kHighSentinel : kLowSentinel;
  const std::int32_t leaf = leaves_ + gap - 1;
  for (std::int32_t level = depth_; level >= 0; --level) {
    Head& head = heads[static_cast<std::size_t>(leaf >> level)];
    ++work_;
    if (by_high ? head.key > bound : head.key < bound) continue;
    std::int32_t at = head.at;
    std::int32_t key = head.key;
    do {
      ++work_;
      const std::int32_t slot = store[at];
      if (alive_[slot]) {
        alive_[slot] = 0;
        --live_;
        out.push_back(intervals_[slot]);
      }
      if (++at < head.end) {
        const Interval& next = intervals_[store[at]];
        key = by_high ? next.high : next.low;
      } else {
        key = sentinel;
      }
    } while (by_high ? key <= bound : key >= bound);
    head.at = at;
    head.key = key;
  }
}

namespace {
void check_window(std::int32_t d, std::int32_t f, std::int32_t universe) {
  if (d < 1 || f < d || f > universe) {
    throw std::domain_error("query window [" + std::to_string(d) + "," + std::to_string(f) + "] outside [1," +
                            std::to_string(universe) + "]");
  }
}
}  // namespace

std::vector<Interval> IntervalIndex::query_left(std::int32_t d, std::int32_t f) {
  check_window(d, f, universe_);
  std::vector<Interval> out;
  if (d >= 2) drain(d - 1, f, Drain::by_high, out);
  return out;
}

std::vector<Interval> IntervalIndex::query_right(std::int32_t d, std::int32_t f) {
  check_window(d, f, universe_);
  std::vector<Interval> out;
  if (f <= gaps_) drain(f, d, Drain::by_low, out);
  return out;
}

void IntervalIndex::query_crossing(std::int32_t d, std::int32_t f, std::vector<Interval>& out) {
  check_window(d, f, universe_);
  if (d >= 2) drain(d - 1, f, Drain::by_high, out);
  if (f <= gaps_) drain(f, d, Drain::by_low, out);
}

std::vector<Interval> IntervalIndex::live_intervals() const {
  std::vector<Interval> out;
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (alive_[i]) out.push_back(intervals_[i]);
  }
  std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.owner < b.owner; });
  return out;
}

}  // namespace laman
