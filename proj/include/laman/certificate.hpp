#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "laman/decomposition.hpp"
#include "laman/hierarchy.hpp"

namespace laman {

/// Everything a certificate file carries.
///
/// Edge ids are not written explicitly: cross edges are emitted in edge-id
/// order, so the i-th cross edge of a complete certificate belongs to edge i.
/// The doubled copy has id m.
struct Certificate {
  VertexId n = 0;
  EdgeId m = 0;
  VertexId doubled_u = kNoVertex;
  VertexId doubled_v = kNoVertex;
  Hierarchy hierarchy;
  DeletionSchedule schedule;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical JSON: keys in fixed order, vertices 1-based, node ids 0-based.
std::string emit_certificate(const Hierarchy& h, const DeletionSchedule& schedule, const Graph& gstar);

/// Throws CertificateError on malformed documents. Structural validity of the
/// hierarchy is left to validate().
Certificate parse_certificate(std::string_view json_text);

/// The graph (undoubled) that a complete certificate describes, rebuilt from
/// its cross edges in edge-id order.
Graph certificate_graph(const Certificate& cert);

}  // namespace laman
