#pragma once

#include "laman/decomposition.hpp"
#include "laman/graph.hpp"

namespace laman {

/// (2,3)-pebble game. Every vertex starts with two pebbles; an edge is
/// accepted once four pebbles sit on its endpoints, and is then oriented out
/// of the endpoint that spends one. O(n^2).
///
/// With check_invariant set, pebbles(v) + outdegree(v) == 2 is asserted for
/// every vertex after each accepted edge (std::logic_error on failure).
Verdict pebble_verify(const Graph& g, bool check_invariant = false);

inline constexpr VertexId kBruteForceLimit = 20;

/// Checks m == 2n - 3 and every vertex subset of size k >= 2 against the
/// 2k - 3 bound. Throws std::invalid_argument for n > kBruteForceLimit.
Verdict bruteforce_verify(const Graph& g);

}  // namespace laman
