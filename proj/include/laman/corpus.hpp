#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "laman/graph.hpp"

namespace laman {

/// Corpora use std::mt19937_64 (fully specified by the C++ standard) with
/// rejection-sampled bounded draws, so output is identical on every
/// platform. Per-item seeds are derived with the SplitMix64 finalizer.
class CorpusRng {
 public:
  explicit CorpusRng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [0, 1) with 53 random bits.
  double unit();

 private:
  std::mt19937_64 engine_;
};

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

struct GenSpec {
  VertexId n = 2;
  std::uint64_t seed = 0;
  double type2_probability = 0.5;
};

/// Random Laman graph by forward Henneberg steps from a single edge.
/// Type II splits an existing edge (replaced in place) with a new degree-3
/// vertex; type I attaches a new degree-2 vertex. Throws std::domain_error
/// for n < 2 or a probability outside [0, 1].
Graph generate_laman(const GenSpec& spec);

/// Over-braces a rigid subgraph: grows a rigid vertex set by repeatedly
/// adding vertices with two neighbours inside, adds an edge between two
/// non-adjacent members, and removes an edge outside the set so m stays
/// 2n - 3. The replacement takes the removed edge's slot. When no rigid set
/// grows from the start edge, the graph minus a degree-2 vertex serves as
/// the rigid set; failing that, a random rewire is tried. Every candidate is
/// confirmed NotLaman by the pebble game before it is returned.
///
/// Returns nullopt if no attempt succeeds within max_attempts (caller picks
/// another seed). Throws std::domain_error for n < 6 or m != 2n - 3.
std::optional<Graph> mutate_non_laman(const Graph& g, std::uint64_t seed, int max_attempts = 256);

struct ManifestRow {
  std::uint64_t seed = 0;
  VertexId n = 0;
  double type2_probability = 0;
  std::string path;
  bool expected_laman = true;
};

/// "seed,n,type2_probability,path,expected_verdict" header plus one line per row.
std::string format_manifest(const std::vector<ManifestRow>& rows);

}  // namespace laman
