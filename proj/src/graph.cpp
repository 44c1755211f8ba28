#include "laman/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>
#include <unordered_set>

namespace laman {

Graph::Graph(VertexId n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::vector<std::int64_t> degree(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw std::invalid_argument("edge " + std::to_string(i) + " has an endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("edge " + std::to_string(i) + " is a self-loop");
    if (e.is_added_copy) {
      if (added_copy_ != kNoEdge) throw std::invalid_argument("more than one added copy");
      added_copy_ = static_cast<EdgeId>(i);
    }
    ++degree[static_cast<std::size_t>(e.u)];
    ++degree[static_cast<std::size_t>(e.v)];
  }
  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (VertexId v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  incidence_.resize(2 * edges_.size());
  std::vector<std::int64_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    incidence_[fill[edges_[i].u]++] = static_cast<EdgeId>(i);
    incidence_[fill[edges_[i].v]++] = static_cast<EdgeId>(i);
  }
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Exactly two whitespace-separated integers, nothing else.
bool parse_pair(std::string_view s, long long& a, long long& b) {
  auto skip = [&](std::size_t i) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    return i;
  };
  const char* end = s.data() + s.size();
  std::size_t i = skip(0);
  auto r1 = std::from_chars(s.data() + i, end, a);
  if (r1.ec != std::errc{} || r1.ptr == s.data() + i) return false;
  i = static_cast<std::size_t>(r1.ptr - s.data());
  std::size_t j = skip(i);
  if (j == i) return false;
  auto r2 = std::from_chars(s.data() + j, end, b);
  if (r2.ec != std::errc{} || r2.ptr == s.data() + j) return false;
  return skip(static_cast<std::size_t>(r2.ptr - s.data())) == s.size();
}

}  // namespace

Graph parse_graph(std::string_view text) {
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;
  std::size_t line_no = 0;
  std::size_t last_line = 0;

  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    last_line = line_no;

    long long a = 0;
    long long b = 0;
    if (!parse_pair(line, a, b)) {
      throw ParseError(line_no, n < 0 ? "malformed header, expected \"n m\"" : "malformed edge line, expected \"u v\"");
    }
    if (n < 0) {
      if (a < 0 || b < 0) throw ParseError(line_no, "malformed header, negative count");
      if (a > (1LL << 30) || b > (1LL << 30)) throw ParseError(line_no, "malformed header, count too large");
      n = a;
      m = b;
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) throw ParseError(line_no, "more edge lines than declared");
    if (a < 1 || a > n || b < 1 || b > n) throw ParseError(line_no, "vertex label out of range [1, " + std::to_string(n) + "]");
    if (a == b) throw ParseError(line_no, "self-loop");
    auto lo = static_cast<std::uint64_t>(std::min(a, b));
    auto hi = static_cast<std::uint64_t>(std::max(a, b));
    if (!seen.insert((lo << 32) | hi).second) throw ParseError(line_no, "duplicate edge");
    edges.push_back({static_cast<VertexId>(a - 1), static_cast<VertexId>(b - 1), false});
  }
  if (n < 0) throw ParseError(line_no == 0 ? 1 : line_no, "missing header");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(last_line, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Graph(static_cast<VertexId>(n), std::move(edges));
}

Graph parse_graph(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_graph(std::string_view{text});
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_graph(in);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  std::size_t m = 0;
  for (const Edge& e : g.edges()) m += e.is_added_copy ? 0 : 1;
  out << g.vertex_count() << ' ' << m << '\n';
  for (const Edge& e : g.edges()) {
    if (!e.is_added_copy) out << e.u + 1 << ' ' << e.v + 1 << '\n';
  }
  return out.str();
}

bool count_check(const Graph& g) {
  return g.vertex_count() >= 2 &&
         static_cast<std::int64_t>(g.edge_count()) == 2 * static_cast<std::int64_t>(g.vertex_count()) - 3;
}

Graph double_edge(const Graph& g, EdgeId e) {
  if (e < 0 || e >= g.edge_count()) throw std::domain_error("double_edge: edge " + std::to_string(e) + " does not exist");
  if (g.added_copy() != kNoEdge) throw std::domain_error("double_edge: graph is already doubled");
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  Edge copy = g.edge(e);
  copy.is_added_copy = true;
  edges.push_back(copy);
  return Graph(g.vertex_count(), std::move(edges));
}

}  // namespace laman
