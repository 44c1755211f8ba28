#include "laman/corpus.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "laman/oracles.hpp"

namespace laman {

std::uint64_t CorpusRng::below(std::uint64_t bound) {
  if (bound == 0) throw std::domain_error("CorpusRng::below: empty range");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

double CorpusRng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Graph generate_laman(const GenSpec& spec) {
  if (spec.n < 2) throw std::domain_error("generate_laman: n must be at least 2");
  if (!(spec.type2_probability >= 0.0 && spec.type2_probability <= 1.0)) {
    throw std::domain_error("generate_laman: type2_probability must lie in [0, 1]");
  }
  CorpusRng rng(spec.seed);
  std::vector<Edge> edges;
  edges.reserve(2 * static_cast<std::size_t>(spec.n));
  edges.push_back({0, 1, false});
  for (VertexId w = 2; w < spec.n; ++w) {
    // Draw the step type first so the stream layout does not depend on w.
    const bool type2 = rng.unit() < spec.type2_probability && w >= 3;
    if (type2) {
      auto idx = static_cast<std::size_t>(rng.below(edges.size()));
      const VertexId a = edges[idx].u;
      const VertexId b = edges[idx].v;
      const VertexId lo = std::min(a, b);
      const VertexId hi = std::max(a, b);
      auto c = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(w - 2)));
      if (c >= lo) ++c;
      if (c >= hi) ++c;
      edges[idx] = {w, a, false};
      edges.push_back({w, b, false});
      edges.push_back({w, c, false});
    } else {
      auto a = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(w)));
      auto b = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(w - 1)));
      if (b >= a) ++b;
      edges.push_back({w, std::min(a, b), false});
      edges.push_back({w, std::max(a, b), false});
    }
  }
  return Graph(spec.n, std::move(edges));
}

std::optional<Graph> mutate_non_laman(const Graph& g, std::uint64_t seed, int max_attempts) {
  const VertexId n = g.vertex_count();
  if (n < 6) throw std::domain_error("mutate_non_laman: needs n >= 6");
  if (!count_check(g)) throw std::domain_error("mutate_non_laman: input must have 2n - 3 edges");

  auto key = [](VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
  };
  std::unordered_set<std::uint64_t> present;
  for (const Edge& e : g.edges()) present.insert(key(e.u, e.v));

  std::vector<VertexId> degree_two;
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) == 2) degree_two.push_back(v);
  }
  auto rewire = [&](EdgeId drop, VertexId x, VertexId y) -> std::optional<Graph> {
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    edges[static_cast<std::size_t>(drop)] = {x, y, false};
    Graph mutant(n, std::move(edges));
    if (pebble_verify(mutant) == Verdict::not_laman) return mutant;
    return std::nullopt;
  };
  // Uniform non-adjacent pair avoiding `skip`, by rejection (the graph is sparse).
  auto random_non_edge = [&](CorpusRng& rng, VertexId skip, VertexId& x, VertexId& y) {
    for (int tries = 0; tries < 1024; ++tries) {
      x = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(n)));
      y = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(n)));
      if (x != y && x != skip && y != skip && !present.count(key(x, y))) return true;
    }
    return false;
  };

  std::vector<std::uint8_t> in_set(static_cast<std::size_t>(n));
  std::vector<std::int32_t> inside_nbrs(static_cast<std::size_t>(n));
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    CorpusRng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    std::fill(in_set.begin(), in_set.end(), 0);
    std::fill(inside_nbrs.begin(), inside_nbrs.end(), 0);
    std::vector<VertexId> members;
    std::vector<VertexId> ready;
    auto add_member = [&](VertexId v) {
      in_set[v] = 1;
      members.push_back(v);
      for (EdgeId e : g.incident(v)) {
        VertexId w = g.edge(e).other(v);
        if (!in_set[w] && ++inside_nbrs[w] == 2) ready.push_back(w);
      }
    };
    const Edge& start = g.edge(static_cast<EdgeId>(rng.below(static_cast<std::uint64_t>(g.edge_count()))));
    add_member(start.u);
    add_member(start.v);

    VertexId x = kNoVertex;
    VertexId y = kNoVertex;
    while (!ready.empty() && x == kNoVertex) {
      auto pick = static_cast<std::size_t>(rng.below(ready.size()));
      std::swap(ready[pick], ready.back());
      VertexId w = ready.back();
      ready.pop_back();
      if (in_set[w]) continue;
      std::vector<VertexId> strangers;
      for (VertexId s : members) {
        if (!present.count(key(w, s))) strangers.push_back(s);
      }
      add_member(w);
      if (!strangers.empty()) {
        x = w;
        y = strangers[static_cast<std::size_t>(rng.below(strangers.size()))];
      }
    }
    if (x != kNoVertex && static_cast<VertexId>(members.size()) < n) {
      std::vector<EdgeId> outside;
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!in_set[g.edge(e).u] || !in_set[g.edge(e).v]) outside.push_back(e);
      }
      if (auto m = rewire(outside[static_cast<std::size_t>(rng.below(outside.size()))], x, y)) return m;
      continue;
    }

    // No rigid seed grew from the start edge (e.g. a triangle-free graph).
    // Removing a degree-2 vertex leaves a rigid set, which is then braced.
    if (!degree_two.empty()) {
      VertexId q = degree_two[static_cast<std::size_t>(rng.below(degree_two.size()))];
      EdgeId drop = g.incident(q)[static_cast<std::size_t>(rng.below(2))];
      if (random_non_edge(rng, q, x, y)) {
        if (auto m = rewire(drop, x, y)) return m;
      }
      continue;
    }
    if (random_non_edge(rng, kNoVertex, x, y)) {
      if (auto m = rewire(static_cast<EdgeId>(rng.below(static_cast<std::uint64_t>(g.edge_count()))), x, y)) return m;
    }
  }
  return std::nullopt;
}

std::string format_manifest(const std::vector<ManifestRow>& rows) {
  std::ostringstream out;
  out << "seed,n,type2_probability,path,expected_verdict\n";
  for (const ManifestRow& r : rows) {
    out << r.seed << ',' << r.n << ',' << std::setprecision(17) << r.type2_probability << ',' << r.path << ','
        << (r.expected_laman ? "Laman" : "NotLaman") << '\n';
  }
  return out.str();
}

}  // namespace laman
