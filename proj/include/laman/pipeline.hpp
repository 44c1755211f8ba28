#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "laman/decomposition.hpp"
#include "laman/graph.hpp"
#include "laman/hierarchy.hpp"
#include "laman/two_forest.hpp"

namespace laman {

enum class Stage : std::uint8_t { count_check, extraction, decomposition, complete };

const char* stage_name(Stage s);

struct PhaseTimings {
  std::int64_t extract_ns = 0;
  std::int64_t decompose_ns = 0;
  std::int64_t reconstruct_ns = 0;
  std::int64_t validate_ns = 0;
};

struct RunOptions {
  bool build_hierarchy = false;
  const TwoTreeProvider* provider = nullptr;  // defaults to matroid union
  const DecompositionObserver* observer = nullptr;
};

/// Outcome of one recognition run. `stopped_at` names the stage that
/// rejected the graph, or `complete` when every edge of G* was deleted.
struct RunReport {
  std::string input_path;
  Verdict verdict = Verdict::not_laman;
  Stage stopped_at = Stage::count_check;
  PhaseTimings timings;
  VertexId n = 0;
  EdgeId m = 0;
  std::int64_t deleted = 0;
  std::int64_t cross_edges = 0;
  Graph gstar;
  std::optional<DeletionSchedule> schedule;
  std::optional<Hierarchy> hierarchy;
  std::optional<ValidationResult> validation;
};

RunReport run_pipeline(const Graph& g, const RunOptions& options = {});

}  // namespace laman
