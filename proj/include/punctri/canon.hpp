#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "punctri/triangulation.hpp"

namespace punctri {

/// Bipartite vertex/face incidence graph B_T. Nodes 0..vertex_nodes-1 are
/// vertices of T, the next face_nodes nodes are its faces (in face order).
struct IncidenceGraph {
  int vertex_nodes = 0;
  int face_nodes = 0;
  std::vector<std::vector<int>> adjacency;

  int node_count() const { return vertex_nodes + face_nodes; }
  int edge_count() const { return 3 * face_nodes; }
  bool is_face_node(int node) const { return node >= vertex_nodes; }
};

IncidenceGraph incidence_graph(const Triangulation& t);

/// Isomorphism-class identity of a triangulation: its face list under the
/// canonical relabelling. Totally ordered, vertex count first.
struct CanonicalKey {
  int vertex_count = 0;
  std::vector<Face> faces;

  std::strong_ordering operator<=>(const CanonicalKey& other) const;
  bool operator==(const CanonicalKey& other) const = default;

  /// Byte serialisation; orders the same way as operator<=> for keys with
  /// fewer than 65536 vertices.
  std::string bytes() const;
  Triangulation to_triangulation(std::string label = {}) const;
};

struct CanonicalForm {
  CanonicalKey key;
  /// labeling[old vertex] = canonical vertex.
  std::vector<Vertex> labeling;
};

CanonicalForm canonical_form(const Triangulation& t);
CanonicalKey canonical_key(const Triangulation& t);

bool are_isomorphic(const Triangulation& a, const Triangulation& b);

struct Keyed {
  CanonicalKey key;
  Triangulation triangulation;
};

/// Canonical keys for a batch, computed in parallel; result order matches
/// the input.
std::vector<CanonicalKey> canonical_keys(std::span<const Triangulation> items);

/// One canonical representative per isomorphism class, sorted by key. The
/// representative carries the least label found among its class.
std::vector<Triangulation> dedupe(std::span<const Triangulation> items);

/// As dedupe, returning the keys alongside.
std::vector<Keyed> dedupe_keyed(std::span<const Triangulation> items);

}  // namespace punctri
