#pragma once

#include <stdexcept>
#include <vector>

#include "punctri/triangulation.hpp"

namespace punctri {

/// Corner <u, v, w>: the unordered pair of edges vu, vw at apex v.
struct Corner {
  Vertex u = 0;
  Vertex v = 0;
  Vertex w = 0;

  auto operator<=>(const Corner&) const = default;
};

/// Truncated corner <u, v]: boundary vertex v with interior neighbour u.
struct TruncatedCorner {
  Vertex u = 0;
  Vertex v = 0;
};

class TransformError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Every corner of T, one per unordered pair (u < w), ordered by apex.
std::vector<Corner> corners(const Triangulation& t);

/// Splits the corner: v keeps the faces on the link arc running from u to w
/// (in vertex_link order), a new vertex (id vertex_count) takes the faces on
/// the arc from w back to u, and the faces {v,new,u}, {v,new,w} are added.
Triangulation split_corner(const Triangulation& t, const Corner& c);

/// Splits a truncated corner of a bordered triangulation: v keeps the faces
/// on the link path from its first endpoint up to u, a new vertex takes the
/// rest, and the single face {u,v,new} is added.
Triangulation split_truncated_corner(const Triangulation& t, const TruncatedCorner& c);

enum class ShrinkFailure {
  None,
  MultiEdge,
  Topology,
  Degenerate,
};

const char* to_string(ShrinkFailure f);

class NotShrinkable : public std::runtime_error {
 public:
  NotShrinkable(ShrinkFailure why, const std::string& what)
      : std::runtime_error(what), why_(why) {}
  ShrinkFailure why() const { return why_; }

 private:
  ShrinkFailure why_;
};

struct ShrinkResult {
  std::optional<Triangulation> result;
  ShrinkFailure failure = ShrinkFailure::None;
};

/// Contracts edge {a,b} into its smaller endpoint; the larger id disappears
/// and ids above it shift down by one. Never throws for a present edge.
ShrinkResult try_shrink_edge(const Triangulation& t, const Edge& e);

/// As try_shrink_edge, but throws NotShrinkable on failure and
/// TransformError when e is not an edge.
Triangulation shrink_edge(const Triangulation& t, const Edge& e);

bool is_contractible(const Triangulation& t, const Edge& e);

/// Deletes v with its open star. Ids above v shift down by one. The result's
/// boundary is the link of v.
Triangulation remove_vertex(const Triangulation& t, Vertex v);

/// Deletes the interior of a face of a closed triangulation.
Triangulation remove_face(const Triangulation& t, const Face& f);

/// Deletes the open edge {a,b} and the interiors of its two faces; the new
/// boundary is the 4-cycle (a, x, b, y).
Triangulation remove_cable(const Triangulation& t, const Edge& e);

struct ClosedHole {
  Triangulation closed;
  Vertex center;
};

/// Cones the single boundary cycle off to a new vertex (id vertex_count).
ClosedHole close_hole(const Triangulation& t);

}  // namespace punctri
