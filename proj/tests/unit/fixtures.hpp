#pragma once

#include <string_view>

#include "laman/graph.hpp"

namespace fixtures {

inline constexpr std::string_view kTriangle = "3 3\n1 2\n1 3\n2 3\n";
inline constexpr std::string_view kSingleEdge = "2 1\n1 2\n";
inline constexpr std::string_view kK4 = "4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";
inline constexpr std::string_view kK4Plus = "6 9\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n4 5\n5 6\n6 1\n";
inline constexpr std::string_view kK33 = "6 9\n1 4\n1 5\n1 6\n2 4\n2 5\n2 6\n3 4\n3 5\n3 6\n";
// Triangle fan: vertex 1 joined to a path 2-3-4-5-6.
inline constexpr std::string_view kFan = "6 9\n1 2\n1 3\n1 4\n1 5\n1 6\n2 3\n3 4\n4 5\n5 6\n";

inline laman::Graph graph(std::string_view text) { return laman::parse_graph(text); }

}  // namespace fixtures
