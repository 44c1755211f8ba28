#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "laman/graph.hpp"
#include "laman/two_forest.hpp"

namespace laman {

enum class Verdict : std::uint8_t { laman, not_laman };

/// Edges deleted at one step of the alternating cut-deletion process.
struct DeletionGroup {
  std::int32_t step = 0;
  Color color = Color::red;
  /// Ascending by edge id; each oriented (DFS parent, DFS child) in its own color.
  std::vector<OrientedEdge> edges;
  friend bool operator==(const DeletionGroup&, const DeletionGroup&) = default;
};

/// Deletion groups by step, starting at step 2, and the edges left over.
struct DeletionSchedule {
  std::vector<DeletionGroup> groups;
  std::int64_t deleted_count = 0;
  std::vector<EdgeId> leftover_edges;
  friend bool operator==(const DeletionSchedule&, const DeletionSchedule&) = default;
};

/// Receives the progress of a decomposition run. All hooks are optional.
struct DecompositionObserver {
  /// One marked edge was removed and its cut queried; crossing holds the
  /// opposite-color edges reported (unsorted, in reporting order).
  std::function<void(std::int32_t step, const OrientedEdge& deleted, std::span<const EdgeId> crossing)> on_deletion;
  /// A whole step finished.
  std::function<void(const DeletionGroup& group)> on_step;
};

/// Fast decomposition using two interval indexes keyed by DFS discovery
/// times: black edges by red times and red edges by black times.
/// Runs in O(n log n). If work is non-null it receives the total index work.
DeletionSchedule decompose(const Graph& gstar, const TwoForest& forest, const DecompositionObserver* observer = nullptr,
                           std::uint64_t* work = nullptr);

/// Reference implementation that recomputes components by flood fill and
/// scans every live edge each step. O(n^2).
DeletionSchedule decompose_naive(const Graph& gstar, const TwoForest& forest);

Verdict verdict(const DeletionSchedule& s);

/// "step=<i> color=<R|B> deleted=u-v,..." with 1-based labels, one line per group.
std::string format_trace_line(const DeletionGroup& group);
void write_trace(std::ostream& out, const DeletionSchedule& s);

}  // namespace laman
