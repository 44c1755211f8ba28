#include "laman/certificate.hpp"

#include <map>
#include "json.hpp"

namespace laman {

using nlohmann::ordered_json;

namespace {

const char* color_code(Color c) { return c == Color::red ? "R" : "B"; }

Color parse_color(const ordered_json& j) {
  const auto s = j.get<std::string>();
  if (s == "R") return Color::red;
  if (s == "B") return Color::black;
  throw CertificateError("unknown color \"" + s + "\"");
}

std::uint64_t pair_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

}  // namespace

std::string emit_certificate(const Hierarchy& h, const DeletionSchedule& schedule, const Graph& gstar) {
  const EdgeId copy = gstar.added_copy();
  if (copy == kNoEdge) throw std::domain_error("emit_certificate: graph has no added copy");
  ordered_json doc;
  doc["n"] = gstar.vertex_count();
  doc["m"] = gstar.edge_count() - 1;
  doc["doubled_edge"] = {gstar.edge(copy).u + 1, gstar.edge(copy).v + 1};

  ordered_json nodes = ordered_json::array();
  for (const HierarchyNode& node : h.nodes) {
    ordered_json jn;
    jn["id"] = node.id;
    jn["color"] = color_code(node.color);
    jn["level"] = node.level;
    jn["parent"] = node.parent == kNoNode ? ordered_json(nullptr) : ordered_json(node.parent);
    nodes.push_back(std::move(jn));
  }
  doc["nodes"] = std::move(nodes);

  ordered_json cross = ordered_json::array();
  for (const CrossEdge& x : h.cross_edges) {
    ordered_json jx;
    jx["edge"] = {x.u + 1, x.v + 1};
    jx["nodes"] = {x.a, x.b};
    cross.push_back(std::move(jx));
  }
  doc["cross_edges"] = std::move(cross);

  ordered_json alpha = ordered_json::object();
  for (std::size_t v = 0; v < h.alpha.size(); ++v) alpha[std::to_string(v + 1)] = h.alpha[v];
  doc["alpha"] = std::move(alpha);

  ordered_json groups = ordered_json::array();
  for (const DeletionGroup& g : schedule.groups) {
    ordered_json jg;
    jg["step"] = g.step;
    jg["color"] = color_code(g.color);
    ordered_json edges = ordered_json::array();
    for (const OrientedEdge& e : g.edges) edges.push_back({e.parent + 1, e.child + 1});
    jg["edges"] = std::move(edges);
    groups.push_back(std::move(jg));
  }
  doc["schedule"] = std::move(groups);
  return doc.dump(2) + "\n";
}

Certificate parse_certificate(std::string_view json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text.begin(), json_text.end());
  } catch (const ordered_json::parse_error& e) {
    throw CertificateError(std::string("invalid JSON: ") + e.what());
  }
  try {
    Certificate cert;
    cert.n = doc.at("n").get<VertexId>();
    cert.m = doc.at("m").get<EdgeId>();
    const auto& de = doc.at("doubled_edge");
    if (!de.is_array() || de.size() != 2) throw CertificateError("doubled_edge must be a pair");
    cert.doubled_u = de[0].get<VertexId>() - 1;
    cert.doubled_v = de[1].get<VertexId>() - 1;

    Hierarchy& h = cert.hierarchy;
    for (const auto& jn : doc.at("nodes")) {
      HierarchyNode node;
      node.id = jn.at("id").get<NodeId>();
      node.color = parse_color(jn.at("color"));
      node.level = jn.at("level").get<std::int32_t>();
      node.parent = jn.at("parent").is_null() ? kNoNode : jn.at("parent").get<NodeId>();
      if (node.parent == kNoNode) {
        if (h.root != kNoNode) throw CertificateError("more than one root");
        h.root = node.id;
      }
      h.nodes.push_back(std::move(node));
    }
    const auto count = static_cast<NodeId>(h.nodes.size());
    for (const HierarchyNode& node : h.nodes) {
      if (node.id != static_cast<NodeId>(&node - h.nodes.data())) throw CertificateError("node ids must be 0..k-1 in order");
      if (node.parent != kNoNode) {
        if (node.parent < 0 || node.parent >= count) throw CertificateError("parent id out of range");
        h.nodes[node.parent].children.push_back(node.id);
      }
    }

    std::map<std::uint64_t, EdgeId> edge_of_pair;
    EdgeId next_id = 0;
    for (const auto& jx : doc.at("cross_edges")) {
      CrossEdge x;
      const auto& e = jx.at("edge");
      const auto& nd = jx.at("nodes");
      if (e.size() != 2 || nd.size() != 2) throw CertificateError("cross edge needs an edge pair and a node pair");
      x.source_edge = next_id++;
      x.u = e[0].get<VertexId>() - 1;
      x.v = e[1].get<VertexId>() - 1;
      x.a = nd[0].get<NodeId>();
      x.b = nd[1].get<NodeId>();
      edge_of_pair.emplace(pair_key(x.u, x.v), x.source_edge);
      h.cross_edges.push_back(x);
    }

    const auto& alpha = doc.at("alpha");
    h.alpha.assign(static_cast<std::size_t>(std::max(cert.n, 0)), kNoNode);
    for (auto it = alpha.begin(); it != alpha.end(); ++it) {
      std::size_t pos = 0;
      long v = std::stol(it.key(), &pos);
      if (pos != it.key().size() || v < 1 || v > cert.n) throw CertificateError("alpha key \"" + it.key() + "\" is not a vertex");
      h.alpha[static_cast<std::size_t>(v - 1)] = it.value().get<NodeId>();
    }
    for (std::size_t v = 0; v < h.alpha.size(); ++v) {
      const NodeId leaf = h.alpha[v];
      if (leaf >= 0 && leaf < count && h.nodes[leaf].children.empty()) h.nodes[leaf].leaf_vertex = static_cast<VertexId>(v);
    }

    for (const auto& jg : doc.at("schedule")) {
      DeletionGroup g;
      g.step = jg.at("step").get<std::int32_t>();
      g.color = parse_color(jg.at("color"));
      for (const auto& je : jg.at("edges")) {
        if (je.size() != 2) throw CertificateError("schedule edge must be a pair");
        OrientedEdge oe;
        oe.parent = je[0].get<VertexId>() - 1;
        oe.child = je[1].get<VertexId>() - 1;
        if (g.step == 2) {
          oe.id = cert.m;
        } else {
          auto found = edge_of_pair.find(pair_key(oe.parent, oe.child));
          if (found == edge_of_pair.end()) throw CertificateError("schedule edge without a cross edge");
          oe.id = found->second;
        }
        g.edges.push_back(oe);
      }
      cert.schedule.deleted_count += static_cast<std::int64_t>(g.edges.size());
      cert.schedule.groups.push_back(std::move(g));
    }
    return cert;
  } catch (const ordered_json::exception& e) {
    throw CertificateError(std::string("malformed certificate: ") + e.what());
  } catch (const std::logic_error& e) {
    throw CertificateError(std::string("malformed certificate: ") + e.what());
  }
}

Graph certificate_graph(const Certificate& cert) {
  std::vector<Edge> edges;
  edges.reserve(cert.hierarchy.cross_edges.size());
  for (const CrossEdge& x : cert.hierarchy.cross_edges) edges.push_back({x.u, x.v, false});
  return Graph(cert.n, std::move(edges));
}

}  // namespace laman
