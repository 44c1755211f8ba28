#include "laman/decomposition.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "laman/interval_index.hpp"
#include "laman/union_find.hpp"

namespace laman {

namespace {

EdgeId require_added_copy(const Graph& gstar, const TwoForest& forest) {
  EdgeId copy = gstar.added_copy();
  if (copy == kNoEdge) throw std::domain_error("decompose: graph has no added copy");
  if (forest.vertex_count() != gstar.vertex_count() || static_cast<EdgeId>(forest.colors().size()) != gstar.edge_count()) {
    throw std::domain_error("decompose: forest does not belong to this graph");
  }
  return copy;
}

DeletionGroup make_group(std::int32_t step, Color c, std::vector<EdgeId>& ids, const TwoForest& forest) {
  std::sort(ids.begin(), ids.end());
  DeletionGroup g{step, c, {}};
  g.edges.reserve(ids.size());
  for (EdgeId e : ids) g.edges.push_back(forest.parent_of(c, e));
  return g;
}

void collect_leftovers(DeletionSchedule& s, const std::vector<std::uint8_t>& deleted) {
  for (std::size_t e = 0; e < deleted.size(); ++e) {
    if (!deleted[e]) s.leftover_edges.push_back(static_cast<EdgeId>(e));
  }
}

}  // namespace

DeletionSchedule decompose(const Graph& gstar, const TwoForest& forest, const DecompositionObserver* observer,
                           std::uint64_t* work) {
  const EdgeId copy = require_added_copy(gstar, forest);
  const std::int32_t n = gstar.vertex_count();

  // by_color[c] holds the edges of color c, keyed by discovery times of the other color.
  std::array<IntervalIndex, 2> by_color;
  for (Color c : {Color::red, Color::black}) {
    const Color key = opposite(c);
    std::vector<Interval> intervals;
    intervals.reserve(static_cast<std::size_t>(n));
    for (EdgeId e = 0; e < gstar.edge_count(); ++e) {
      if (forest.color_of(e) != c) continue;
      std::int32_t a = forest.discovery(key, gstar.edge(e).u);
      std::int32_t b = forest.discovery(key, gstar.edge(e).v);
      intervals.push_back({std::min(a, b), std::max(a, b), e});
    }
    by_color[index_of(c)] = IntervalIndex(intervals, n);
  }

  DeletionSchedule s;
  std::vector<std::uint8_t> deleted(static_cast<std::size_t>(gstar.edge_count()), 0);
  std::vector<EdgeId> marked{copy};
  std::vector<EdgeId> next;
  std::vector<Interval> reported;
  std::vector<EdgeId> crossing;
  Color c = forest.color_of(copy);
  std::int32_t step = 2;

  while (!marked.empty()) {
    DeletionGroup group = make_group(step, c, marked, forest);
    IntervalIndex& opposite_index = by_color[index_of(opposite(c))];
    next.clear();
    for (const OrientedEdge& oe : group.edges) {
      by_color[index_of(c)].erase(oe.id);
      deleted[oe.id] = 1;
      reported.clear();
      opposite_index.query_crossing(forest.discovery(c, oe.child), forest.finish(c, oe.child), reported);
      crossing.clear();
      for (const Interval& iv : reported) crossing.push_back(iv.owner);
      next.insert(next.end(), crossing.begin(), crossing.end());
      if (observer && observer->on_deletion) observer->on_deletion(step, oe, crossing);
    }
    s.deleted_count += static_cast<std::int64_t>(group.edges.size());
    if (observer && observer->on_step) observer->on_step(group);
    s.groups.push_back(std::move(group));
    marked.swap(next);
    c = opposite(c);
    ++step;
  }
  collect_leftovers(s, deleted);
  if (work) *work = by_color[0].work() + by_color[1].work();
  return s;
}

DeletionSchedule decompose_naive(const Graph& gstar, const TwoForest& forest) {
  const EdgeId copy = require_added_copy(gstar, forest);
  const std::int32_t n = gstar.vertex_count();

  DeletionSchedule s;
  std::vector<std::uint8_t> deleted(static_cast<std::size_t>(gstar.edge_count()), 0);
  std::vector<EdgeId> marked{copy};
  Color c = forest.color_of(copy);
  std::int32_t step = 2;
  while (!marked.empty()) {
    for (EdgeId e : marked) deleted[e] = 1;
    s.deleted_count += static_cast<std::int64_t>(marked.size());
    s.groups.push_back(make_group(step, c, marked, forest));

    // Components of the surviving color-c edges, then every surviving
    // opposite-color edge that joins two of them.
    UnionFind comps(n);
    for (EdgeId e = 0; e < gstar.edge_count(); ++e) {
      if (!deleted[e] && forest.color_of(e) == c) comps.unite(gstar.edge(e).u, gstar.edge(e).v);
    }
    std::vector<EdgeId> next;
    for (EdgeId e = 0; e < gstar.edge_count(); ++e) {
      if (!deleted[e] && forest.color_of(e) != c && !comps.same(gstar.edge(e).u, gstar.edge(e).v)) next.push_back(e);
    }
    marked.swap(next);
    c = opposite(c);
    ++step;
  }
  collect_leftovers(s, deleted);
  return s;
}

Verdict verdict(const DeletionSchedule& s) { return s.leftover_edges.empty() ? Verdict::laman : Verdict::not_laman; }

std::string format_trace_line(const DeletionGroup& group) {
  std::ostringstream out;
  out << "step=" << group.step << " color=" << color_letter(group.color) << " deleted=";
  for (std::size_t i = 0; i < group.edges.size(); ++i) {
    if (i) out << ',';
    out << group.edges[i].parent + 1 << '-' << group.edges[i].child + 1;
  }
  return out.str();
}

void write_trace(std::ostream& out, const DeletionSchedule& s) {
  for (const DeletionGroup& g : s.groups) out << format_trace_line(g) << '\n';
}

}  // namespace laman
