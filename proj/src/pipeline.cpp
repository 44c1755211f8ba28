#include "laman/pipeline.hpp"

#include <chrono>

namespace laman {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
}

}  // namespace

const char* stage_name(Stage s) {
  switch (s) {
    case Stage::count_check: return "count_check";
    case Stage::extraction: return "extraction";
    case Stage::decomposition: return "decomposition";
    case Stage::complete: return "complete";
  }
  return "?";
}

RunReport run_pipeline(const Graph& g, const RunOptions& options) {
  RunReport report;
  report.n = g.vertex_count();
  report.m = g.edge_count();
  if (!count_check(g)) return report;

  report.gstar = double_edge(g, 0);
  auto start = Clock::now();
  std::optional<TwoForest> forest =
      options.provider ? extract_two_trees(report.gstar, *options.provider) : extract_two_trees(report.gstar);
  report.timings.extract_ns = since(start);
  if (!forest) {
    report.stopped_at = Stage::extraction;
    return report;
  }

  start = Clock::now();
  report.schedule = decompose(report.gstar, *forest, options.observer);
  report.timings.decompose_ns = since(start);
  report.deleted = report.schedule->deleted_count;
  report.verdict = verdict(*report.schedule);
  if (report.verdict != Verdict::laman) {
    report.stopped_at = Stage::decomposition;
    return report;
  }
  report.stopped_at = Stage::complete;

  if (options.build_hierarchy) {
    start = Clock::now();
    report.hierarchy = reconstruct(*report.schedule, report.gstar);
    report.timings.reconstruct_ns = since(start);
    report.cross_edges = static_cast<std::int64_t>(report.hierarchy->cross_edges.size());
    start = Clock::now();
    report.validation = validate(*report.hierarchy, g);
    report.timings.validate_ns = since(start);
  }
  return report;
}

}  // namespace laman
