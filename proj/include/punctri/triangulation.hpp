#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace punctri {

using Vertex = std::int32_t;

/// Unordered vertex triple, always stored ascending.
using Face = std::array<Vertex, 3>;

/// Unordered vertex pair, always stored with first < second.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  Edge() = default;
  Edge(Vertex x, Vertex y) : a(x < y ? x : y), b(x < y ? y : x) {}

  bool has(Vertex v) const { return a == v || b == v; }
  Vertex other(Vertex v) const { return v == a ? b : a; }

  auto operator<=>(const Edge&) const = default;
};

Face make_face(Vertex x, Vertex y, Vertex z);

inline bool face_has(const Face& f, Vertex v) {
  return f[0] == v || f[1] == v || f[2] == v;
}

/// Which structural rule a rejected face list breaks first.
enum class Violation {
  VertexOutOfRange,
  DegenerateFace,
  DuplicateFace,
  IsolatedVertex,
  EdgeOverloaded,
  Disconnected,
  BrokenLink,
  Empty,
};

const char* to_string(Violation v);

class InvalidTriangulation : public std::runtime_error {
 public:
  InvalidTriangulation(Violation kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Violation kind() const { return kind_; }

 private:
  Violation kind_;
};

/// Neighbours of a vertex in the order induced by its incident faces.
/// `closed` is true for an interior vertex (the order is cyclic); for a
/// boundary vertex the order is a path whose endpoints are its boundary
/// neighbours.
struct VertexLink {
  std::vector<Vertex> order;
  bool closed = false;
};

/// A triangulated connected surface (closed or with boundary), given as a
/// pure face list over the dense vertex ids 0..vertex_count-1.
///
/// Values are immutable once built. Construction validates every surface
/// axiom, so holding a Triangulation means holding a valid one.
class Triangulation {
 public:
  /// Validates and builds. Faces are normalised (each triple sorted, the
  /// list sorted). Throws InvalidTriangulation naming the first broken rule.
  static Triangulation build(int vertex_count, std::vector<Face> faces,
                             std::string label = {});

  /// Non-throwing variant; returns the violation instead.
  static std::optional<Triangulation> try_build(int vertex_count,
                                                std::vector<Face> faces,
                                                std::string label = {},
                                                InvalidTriangulation* error = nullptr);

  int vertex_count() const { return vertex_count_; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int euler_characteristic() const { return vertex_count() - edge_count() + face_count(); }

  std::span<const Face> faces() const { return faces_; }
  std::span<const Edge> edges() const { return edges_; }
  const std::string& label() const { return label_; }
  Triangulation with_label(std::string label) const;

  /// Sorted neighbour list of v.
  std::span<const Vertex> neighbors(Vertex v) const { return neighbors_[v]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors_[v].size()); }
  /// Indices (into faces()) of faces containing v.
  std::span<const int> faces_at(Vertex v) const { return vertex_faces_[v]; }

  /// Index of the edge in edges(), or -1.
  int edge_index(Vertex x, Vertex y) const;
  bool has_edge(Vertex x, Vertex y) const { return edge_index(x, y) >= 0; }
  /// Index of the face in faces(), or -1.
  int face_index(const Face& f) const;
  bool has_face(const Face& f) const { return face_index(f) >= 0; }

  /// The one or two faces on edge `edge_id`; the second entry is -1 for a
  /// boundary edge.
  std::array<int, 2> edge_faces(int edge_id) const { return edge_faces_[edge_id]; }
  bool is_boundary_edge(int edge_id) const { return edge_faces_[edge_id][1] < 0; }
  bool is_boundary_vertex(Vertex v) const { return boundary_vertex_[v] != 0; }
  bool is_closed() const { return boundary_edge_count_ == 0; }
  int boundary_edge_count() const { return boundary_edge_count_; }

  /// Edge ids of the three sides of face `face_id`.
  const std::array<int, 3>& face_edges(int face_id) const { return face_edges_[face_id]; }

  /// Opposite vertex of `edge` in face `face_id`.
  Vertex third_vertex(int face_id, const Edge& edge) const;

  bool operator==(const Triangulation& other) const {
    return vertex_count_ == other.vertex_count_ && faces_ == other.faces_;
  }

 private:
  Triangulation() = default;

  int vertex_count_ = 0;
  std::vector<Face> faces_;
  std::string label_;
  std::vector<Edge> edges_;
  std::vector<std::array<int, 2>> edge_faces_;
  std::vector<std::array<int, 3>> face_edges_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<std::vector<int>> vertex_faces_;
  std::vector<char> boundary_vertex_;
  int boundary_edge_count_ = 0;
};

/// Topological type of a triangulation.
struct SurfaceClass {
  int euler_characteristic = 0;
  bool orientable = true;
  std::vector<std::vector<Vertex>> boundary_cycles;
  std::string name;

  bool closed() const { return boundary_cycles.empty(); }
  /// Euler characteristic after capping every boundary cycle with a disk.
  int closed_euler_characteristic() const {
    return euler_characteristic + static_cast<int>(boundary_cycles.size());
  }
  /// True when the capped-off surface is the sphere.
  bool caps_to_sphere() const { return orientable && closed_euler_characteristic() == 2; }

  /// Same surface: Euler characteristic, orientability and number of
  /// boundary cycles agree.
  bool same_type(const SurfaceClass& other) const;
};

/// Name of the closed surface with the given invariants: S<g> or N<k>.
std::string closed_surface_name(int euler_characteristic, bool orientable);

/// Parses S<g> / N<k>, with an optional "-D" suffix for the punctured
/// variant, into (closed Euler characteristic, orientable, punctured).
struct SurfaceName {
  int closed_euler_characteristic = 2;
  bool orientable = true;
  bool punctured = false;
};
SurfaceName parse_surface_name(const std::string& name);

SurfaceClass classify(const Triangulation& t);

/// Coherent-orientation test by propagation over the face adjacency graph.
bool is_orientable(const Triangulation& t);

VertexLink vertex_link(const Triangulation& t, Vertex v);

/// Cycles formed by the edges lying in exactly one face. Each cycle starts
/// at its smallest vertex and proceeds towards the smaller of its two
/// neighbours.
std::vector<std::vector<Vertex>> boundary_cycles(const Triangulation& t);

/// Applies a vertex relabelling; perm[old] = new.
Triangulation relabel(const Triangulation& t, std::span<const Vertex> perm);

}  // namespace punctri
