#include "laman/oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace laman {

namespace {

class PebbleGame {
 public:
  explicit PebbleGame(VertexId n)
      : pebbles_(static_cast<std::size_t>(n), 2),
        out_(static_cast<std::size_t>(n)),
        out_count_(static_cast<std::size_t>(n), 0),
        seen_(static_cast<std::size_t>(n), 0),
        via_(static_cast<std::size_t>(n), kNoVertex) {}

  bool accept(VertexId u, VertexId v) {
    while (pebbles_[u] + pebbles_[v] < 4) {
      VertexId target = pebbles_[u] < 2 ? u : v;
      if (!gather(target, u, v)) return false;
    }
    VertexId tail = pebbles_[u] > 0 ? u : v;
    VertexId head = tail == u ? v : u;
    --pebbles_[tail];
    add_out(tail, head);
    return true;
  }

  void check_invariant() const {
    for (std::size_t x = 0; x < pebbles_.size(); ++x) {
      if (pebbles_[x] + out_count_[x] != 2) {
        throw std::logic_error("pebble invariant broken at vertex " + std::to_string(x + 1));
      }
    }
  }

 private:
  void add_out(VertexId from, VertexId to) { out_[from][out_count_[from]++] = to; }
  void remove_out(VertexId from, VertexId to) {
    auto& o = out_[from];
    if (o[0] == to) o[0] = o[1];
    --out_count_[from];
  }

  // Depth-first search along out-edges from start for a free pebble, never
  // entering u or v; on success the path is reversed and the pebble moves to start.
  bool gather(VertexId start, VertexId u, VertexId v) {
    ++epoch_;
    seen_[u] = epoch_;
    seen_[v] = epoch_;
    stack_.clear();
    stack_.push_back(start);
    VertexId found = kNoVertex;
    while (!stack_.empty() && found == kNoVertex) {
      VertexId x = stack_.back();
      stack_.pop_back();
      std::array<VertexId, 2> next{};
      std::int32_t k = out_count_[x];
      std::copy_n(out_[x].begin(), k, next.begin());
      if (k == 2 && next[0] > next[1]) std::swap(next[0], next[1]);
      // Push in reverse so the smaller id is explored first.
      for (std::int32_t i = k - 1; i >= 0; --i) {
        VertexId y = next[i];
        if (seen_[y] == epoch_) continue;
        seen_[y] = epoch_;
        via_[y] = x;
        if (pebbles_[y] > 0) {
          found = y;
          break;
        }
        stack_.push_back(y);
      }
    }
    if (found == kNoVertex) return false;
    for (VertexId y = found; y != start; y = via_[y]) {
      VertexId x = via_[y];
      remove_out(x, y);
      add_out(y, x);
    }
    --pebbles_[found];
    ++pebbles_[start];
    return true;
  }

  std::vector<std::int32_t> pebbles_;
  std::vector<std::array<VertexId, 2>> out_;
  std::vector<std::int32_t> out_count_;
  std::vector<std::uint32_t> seen_;
  std::vector<VertexId> via_;
  std::vector<VertexId> stack_;
  std::uint32_t epoch_ = 0;
};

}  // namespace

Verdict pebble_verify(const Graph& g, bool check_invariant) {
  if (!count_check(g)) return Verdict::not_laman;
  PebbleGame game(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (!game.accept(e.u, e.v)) return Verdict::not_laman;
    if (check_invariant) game.check_invariant();
  }
  return Verdict::laman;
}

Verdict bruteforce_verify(const Graph& g) {
  const VertexId n = g.vertex_count();
  if (n > kBruteForceLimit) {
    throw std::invalid_argument("bruteforce_verify: n = " + std::to_string(n) + " exceeds " + std::to_string(kBruteForceLimit));
  }
  if (!count_check(g)) return Verdict::not_laman;
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    // Parallel edges count twice toward a subset's edge total.
    if (adj[e.u] & (1u << e.v)) return Verdict::not_laman;
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    const int k = std::popcount(mask);
    if (k < 2) continue;
    int twice = 0;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
      twice += std::popcount(adj[std::countr_zero(rest)] & mask);
    }
    if (twice / 2 > 2 * k - 3) return Verdict::not_laman;
  }
  return Verdict::laman;
}

}  // namespace laman
