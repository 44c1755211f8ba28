#include "laman/two_forest.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "laman/union_find.hpp"

namespace laman {

DfsNumbering dfs_number(const Graph& gstar, std::span<const Color> colors, Color c, VertexId root) {
  const VertexId n = gstar.vertex_count();
  DfsNumbering out;
  out.root = root;
  out.parent_edge.assign(static_cast<std::size_t>(n), kNoEdge);
  out.parent.assign(static_cast<std::size_t>(n), kNoVertex);
  out.discovery.assign(static_cast<std::size_t>(n), 0);
  out.finish.assign(static_cast<std::size_t>(n), 0);
  out.order.reserve(static_cast<std::size_t>(n));
  if (n == 0) return out;

  // Color-c neighbours of each vertex, ascending by neighbour id (ties by edge id).
  std::vector<std::int64_t> offset(static_cast<std::size_t>(n) + 1, 0);
  for (EdgeId e = 0; e < gstar.edge_count(); ++e) {
    if (colors[e] != c) continue;
    ++offset[gstar.edge(e).u + 1];
    ++offset[gstar.edge(e).v + 1];
  }
  for (VertexId v = 0; v < n; ++v) offset[v + 1] += offset[v];
  std::vector<std::pair<VertexId, EdgeId>> nbr(static_cast<std::size_t>(offset[n]));
  {
    std::vector<std::int64_t> fill(offset.begin(), offset.end() - 1);
    for (EdgeId e = 0; e < gstar.edge_count(); ++e) {
      if (colors[e] != c) continue;
      const Edge& ed = gstar.edge(e);
      nbr[fill[ed.u]++] = {ed.v, e};
      nbr[fill[ed.v]++] = {ed.u, e};
    }
  }
  for (VertexId v = 0; v < n; ++v) std::sort(nbr.begin() + offset[v], nbr.begin() + offset[v + 1]);

  std::vector<std::int64_t> cursor(offset.begin(), offset.end() - 1);
  std::vector<VertexId> stack;
  std::int32_t clock = 0;
  out.discovery[root] = ++clock;
  out.order.push_back(root);
  stack.push_back(root);
  while (!stack.empty()) {
    VertexId v = stack.back();
    if (cursor[v] == offset[v + 1]) {
      out.finish[v] = clock;
      stack.pop_back();
      continue;
    }
    auto [w, e] = nbr[static_cast<std::size_t>(cursor[v]++)];
    if (out.discovery[w] != 0) {
      if (e != out.parent_edge[v]) throw std::invalid_argument("color class contains a cycle");
      continue;
    }
    out.discovery[w] = ++clock;
    out.parent[w] = v;
    out.parent_edge[w] = e;
    out.order.push_back(w);
    stack.push_back(w);
  }
  if (clock != n) throw std::invalid_argument("color class does not span the graph");
  return out;
}

TwoForest TwoForest::from_coloring(const Graph& gstar, std::vector<Color> colors) {
  const VertexId n = gstar.vertex_count();
  if (static_cast<EdgeId>(colors.size()) != gstar.edge_count()) throw std::invalid_argument("coloring size mismatch");
  std::array<std::int64_t, 2> count{0, 0};
  for (Color c : colors) ++count[index_of(c)];
  if (n < 1 || count[0] != n - 1 || count[1] != n - 1) throw std::invalid_argument("each color class needs exactly n - 1 edges");

  TwoForest f;
  f.trees_[index_of(Color::red)] = dfs_number(gstar, colors, Color::red, 0);
  f.trees_[index_of(Color::black)] = dfs_number(gstar, colors, Color::black, 0);
  f.child_of_edge_.assign(colors.size(), kNoVertex);
  for (const DfsNumbering& t : f.trees_) {
    for (VertexId v = 0; v < n; ++v) {
      if (t.parent_edge[v] != kNoEdge) f.child_of_edge_[t.parent_edge[v]] = v;
    }
  }
  // n - 1 edges spanning n vertices leaves no room for unused edges.
  for (std::size_t e = 0; e < colors.size(); ++e) {
    if (f.child_of_edge_[e] == kNoVertex) throw std::invalid_argument("edge " + std::to_string(e) + " is not a tree edge");
  }
  f.colors_ = std::move(colors);
  return f;
}

OrientedEdge TwoForest::parent_of(Color c, EdgeId e) const {
  if (e < 0 || e >= static_cast<EdgeId>(colors_.size()) || colors_[e] != c) {
    throw std::domain_error("parent_of: edge " + std::to_string(e) + " is not of color " + color_letter(c));
  }
  VertexId child = child_of_edge_[e];
  return {e, trees_[index_of(c)].parent[child], child};
}

namespace {

constexpr int kUnassigned = -1;

// Two growing forests with rooted representations (parent, parent edge,
// depth) kept up to date under link and exchange operations. Components only
// ever merge, so connectivity is tracked with a union-find per forest.
class ForestPair {
 public:
  explicit ForestPair(const Graph& g) : g_(g), n_(g.vertex_count()), forest_of_(static_cast<std::size_t>(g.edge_count()), kUnassigned) {
    for (auto& f : forests_) {
      f.adj.assign(static_cast<std::size_t>(n_), {});
      f.parent.assign(static_cast<std::size_t>(n_), kNoVertex);
      f.parent_edge.assign(static_cast<std::size_t>(n_), kNoEdge);
      f.depth.assign(static_cast<std::size_t>(n_), 0);
      f.comps = UnionFind(n_);
    }
    mark_.assign(static_cast<std::size_t>(n_), 0);
    for (auto& j : jump_) {
      j.stamp.assign(static_cast<std::size_t>(n_), 0);
      j.up.assign(static_cast<std::size_t>(n_), kNoVertex);
    }
    label_stamp_.assign(static_cast<std::size_t>(g.edge_count()), 0);
    pred_.assign(static_cast<std::size_t>(g.edge_count()), kNoEdge);
  }

  bool insert(EdgeId e) {
    const Edge& ed = g_.edge(e);
    for (int t = 0; t < 2; ++t) {
      if (!forests_[t].comps.same(ed.u, ed.v)) {
        link(t, e);
        forest_of_[e] = t;
        return true;
      }
    }
    return augment(e);
  }

  std::vector<Color> coloring() const {
    std::vector<Color> out(forest_of_.size());
    for (std::size_t e = 0; e < out.size(); ++e) out[e] = forest_of_[e] == 0 ? Color::red : Color::black;
    return out;
  }

 private:
  struct Forest {
    std::vector<std::vector<EdgeId>> adj;
    std::vector<VertexId> parent;
    std::vector<EdgeId> parent_edge;
    std::vector<std::int32_t> depth;
    UnionFind comps;
  };
  // Per-search contraction of labeled tree edges: a vertex whose parent edge
  // is labeled points upward, so cycle walks skip already-labeled stretches.
  struct Jump {
    std::vector<std::uint32_t> stamp;
    std::vector<VertexId> up;
  };

  VertexId top(int t, VertexId v) {
    Jump& j = jump_[t];
    VertexId r = v;
    while (j.stamp[r] == search_) r = j.up[r];
    while (j.stamp[v] == search_) {
      VertexId next = j.up[v];
      j.up[v] = r;
      v = next;
    }
    return r;
  }

  bool augment(EdgeId e) {
    ++search_;
    struct Item {
      EdgeId edge;
      int target;
    };
    std::deque<Item> queue;
    label_stamp_[e] = search_;
    pred_[e] = kNoEdge;
    queue.push_back({e, 0});
    queue.push_back({e, 1});
    while (!queue.empty()) {
      auto [x, t] = queue.front();
      queue.pop_front();
      const Edge& ed = g_.edge(x);
      Forest& f = forests_[t];
      if (!f.comps.same(ed.u, ed.v)) {
        apply(x, t);
        return true;
      }
      VertexId a = top(t, ed.u);
      VertexId b = top(t, ed.v);
      while (a != b) {
        if (f.depth[a] < f.depth[b]) std::swap(a, b);
        EdgeId pe = f.parent_edge[a];
        if (label_stamp_[pe] != search_) {
          label_stamp_[pe] = search_;
          pred_[pe] = x;
          queue.push_back({pe, 1 - t});
        }
        jump_[t].stamp[a] = search_;
        jump_[t].up[a] = f.parent[a];
        a = top(t, f.parent[a]);
      }
    }
    return false;
  }

  // x goes into forest t as a link; then each predecessor takes the slot of
  // the edge it displaced.
  void apply(EdgeId x, int t) {
    int displaced_from = forest_of_[x];
    link(t, x);
    forest_of_[x] = t;
    EdgeId y = x;
    while (pred_[y] != kNoEdge) {
      EdgeId p = pred_[y];
      int from = forest_of_[p];
      exchange(displaced_from, y, p);
      forest_of_[p] = displaced_from;
      displaced_from = from;
      y = p;
    }
  }

  void add_adj(Forest& f, EdgeId e) {
    f.adj[g_.edge(e).u].push_back(e);
    f.adj[g_.edge(e).v].push_back(e);
  }

  void remove_adj(Forest& f, EdgeId e) {
    for (VertexId v : {g_.edge(e).u, g_.edge(e).v}) {
      auto& list = f.adj[v];
      auto it = std::find(list.begin(), list.end(), e);
      *it = list.back();
      list.pop_back();
    }
  }

  // Re-roots the tree containing start (already detached from any parent)
  // at start, hanging it below anchor through edge via.
  void reroot(Forest& f, VertexId start, VertexId anchor, EdgeId via) {
    f.parent[start] = anchor;
    f.parent_edge[start] = via;
    f.depth[start] = anchor == kNoVertex ? 0 : f.depth[anchor] + 1;
    stack_.clear();
    stack_.push_back(start);
    while (!stack_.empty()) {
      VertexId v = stack_.back();
      stack_.pop_back();
      for (EdgeId e : f.adj[v]) {
        if (e == f.parent_edge[v]) continue;
        VertexId w = g_.edge(e).other(v);
        f.parent[w] = v;
        f.parent_edge[w] = e;
        f.depth[w] = f.depth[v] + 1;
        stack_.push_back(w);
      }
    }
  }

  void link(int t, EdgeId e) {
    Forest& f = forests_[t];
    VertexId a = g_.edge(e).u;
    VertexId b = g_.edge(e).v;
    if (f.comps.size_of(a) > f.comps.size_of(b)) std::swap(a, b);
    reroot(f, a, b, e);
    add_adj(f, e);
    f.comps.unite(a, b);
  }

  // In forest t, replace tree edge out by non-tree edge in; out lies on the
  // cycle that in closes.
  void exchange(int t, EdgeId out, EdgeId in) {
    Forest& f = forests_[t];
    VertexId child = f.parent_edge[g_.edge(out).u] == out ? g_.edge(out).u : g_.edge(out).v;
    remove_adj(f, out);
    f.parent_edge[child] = kNoEdge;
    ++mark_epoch_;
    stack_.clear();
    stack_.push_back(child);
    mark_[child] = mark_epoch_;
    while (!stack_.empty()) {
      VertexId v = stack_.back();
      stack_.pop_back();
      for (EdgeId e : f.adj[v]) {
        VertexId w = g_.edge(e).other(v);
        if (mark_[w] != mark_epoch_) {
          mark_[w] = mark_epoch_;
          stack_.push_back(w);
        }
      }
    }
    VertexId inside = g_.edge(in).u;
    VertexId outside = g_.edge(in).v;
    if (mark_[inside] != mark_epoch_) std::swap(inside, outside);
    reroot(f, inside, outside, in);
    add_adj(f, in);
  }

  const Graph& g_;
  VertexId n_;
  std::array<Forest, 2> forests_;
  std::vector<int> forest_of_;
  std::array<Jump, 2> jump_;
  std::vector<std::uint32_t> label_stamp_;
  std::vector<EdgeId> pred_;
  std::uint32_t search_ = 0;
  std::vector<std::uint32_t> mark_;
  std::uint32_t mark_epoch_ = 0;
  std::vector<VertexId> stack_;
};

}  // namespace

std::optional<std::vector<Color>> MatroidUnionProvider::partition(const Graph& gstar) const {
  const VertexId n = gstar.vertex_count();
  if (n < 2 || static_cast<std::int64_t>(gstar.edge_count()) != 2 * static_cast<std::int64_t>(n) - 2) return std::nullopt;
  ForestPair forests(gstar);
  for (EdgeId e = 0; e < gstar.edge_count(); ++e) {
    if (!forests.insert(e)) return std::nullopt;
  }
  return forests.coloring();
}

std::optional<TwoForest> extract_two_trees(const Graph& gstar, const TwoTreeProvider& provider) {
  const VertexId n = gstar.vertex_count();
  if (n < 2 || static_cast<std::int64_t>(gstar.edge_count()) != 2 * static_cast<std::int64_t>(n) - 2) return std::nullopt;
  auto colors = provider.partition(gstar);
  if (!colors) return std::nullopt;
  EdgeId copy = gstar.added_copy();
  if (copy != kNoEdge && (*colors)[copy] != Color::black) {
    for (Color& c : *colors) c = opposite(c);
  }
  return TwoForest::from_coloring(gstar, std::move(*colors));
}

std::optional<TwoForest> extract_two_trees(const Graph& gstar) {
  static const MatroidUnionProvider provider;
  return extract_two_trees(gstar, provider);
}

}  // namespace laman
