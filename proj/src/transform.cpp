#include "punctri/transform.hpp"

#include <algorithm>
#include <string>

namespace punctri {

namespace {

std::string edge_str(const Edge& e) { return std::to_string(e.a) + "-" + std::to_string(e.b); }

// Faces of t except those containing `skip`, with every id above `skip`
// shifted down by one.
std::vector<Face> faces_without_vertex(const Triangulation& t, Vertex skip) {
  std::vector<Face> out;
  out.reserve(t.face_count());
  auto shift = [skip](Vertex x) { return x > skip ? x - 1 : x; };
  for (const Face& f : t.faces()) {
    if (face_has(f, skip)) continue;
    out.push_back(make_face(shift(f[0]), shift(f[1]), shift(f[2])));
  }
  return out;
}

}  // namespace

std::vector<Corner> corners(const Triangulation& t) {
  std::vector<Corner> out;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    const auto nbrs = t.neighbors(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) out.push_back({nbrs[i], v, nbrs[j]});
    }
  }
  return out;
}

Triangulation split_corner(const Triangulation& t, const Corner& c) {
  if (!t.is_closed()) throw TransformError("split_corner needs a closed triangulation");
  if (c.u == c.w || !t.has_edge(c.v, c.u) || !t.has_edge(c.v, c.w)) {
    throw TransformError("not a corner");
  }
  const auto link = vertex_link(t, c.v).order;
  const auto n = static_cast<int>(link.size());
  const auto iu = static_cast<int>(std::find(link.begin(), link.end(), c.u) - link.begin());
  const Vertex fresh = t.vertex_count();

  std::vector<Face> faces;
  faces.reserve(t.face_count() + 2);
  for (const Face& f : t.faces()) {
    if (!face_has(f, c.v)) faces.push_back(f);
  }
  // Walk the link cycle from u; faces before w stay at v, the rest move.
  Vertex owner = c.v;
  for (int k = 0; k < n; ++k) {
    const Vertex x = link[(iu + k) % n];
    const Vertex y = link[(iu + k + 1) % n];
    if (x == c.w) owner = fresh;
    faces.push_back(make_face(owner, x, y));
  }
  faces.push_back(make_face(c.v, fresh, c.u));
  faces.push_back(make_face(c.v, fresh, c.w));
  return Triangulation::build(t.vertex_count() + 1, std::move(faces), t.label());
}

Triangulation split_truncated_corner(const Triangulation& t, const TruncatedCorner& c) {
  if (t.is_closed()) throw TransformError("split_truncated_corner needs a bordered triangulation");
  if (!t.has_edge(c.u, c.v)) throw TransformError("uv is not an edge");
  if (!t.is_boundary_vertex(c.v)) throw TransformError("v is not a boundary vertex");
  if (t.is_boundary_vertex(c.u)) throw TransformError("u lies on the boundary");

  const auto link = vertex_link(t, c.v).order;
  const Vertex fresh = t.vertex_count();
  std::vector<Face> faces;
  faces.reserve(t.face_count() + 1);
  for (const Face& f : t.faces()) {
    if (!face_has(f, c.v)) faces.push_back(f);
  }
  Vertex owner = c.v;
  for (std::size_t k = 0; k + 1 < link.size(); ++k) {
    if (link[k] == c.u) owner = fresh;
    faces.push_back(make_face(owner, link[k], link[k + 1]));
  }
  faces.push_back(make_face(c.u, c.v, fresh));
  return Triangulation::build(t.vertex_count() + 1, std::move(faces), t.label());
}

const char* to_string(ShrinkFailure f) {
  switch (f) {
    case ShrinkFailure::None: return "none";
    case ShrinkFailure::MultiEdge: return "multi-edge";
    case ShrinkFailure::Topology: return "topology";
    case ShrinkFailure::Degenerate: return "degenerate";
  }
  return "unknown";
}

ShrinkResult try_shrink_edge(const Triangulation& t, const Edge& e) {
  const int id = t.edge_index(e.a, e.b);
  ShrinkResult out;
  if (id < 0) {
    out.failure = ShrinkFailure::Degenerate;
    return out;
  }

  // The endpoints may share exactly the apexes of the collapsing faces.
  const auto ef = t.edge_faces(id);
  std::vector<Vertex> apexes{t.third_vertex(ef[0], e)};
  if (ef[1] >= 0) apexes.push_back(t.third_vertex(ef[1], e));
  std::vector<Vertex> common;
  std::set_intersection(t.neighbors(e.a).begin(), t.neighbors(e.a).end(),
                        t.neighbors(e.b).begin(), t.neighbors(e.b).end(),
                        std::back_inserter(common));
  if (common.size() > apexes.size()) {
    out.failure = ShrinkFailure::MultiEdge;
    return out;
  }

  if (t.vertex_count() - 1 < 3) {
    out.failure = ShrinkFailure::Degenerate;
    return out;
  }
  std::vector<Face> faces;
  faces.reserve(t.face_count());
  auto image = [&](Vertex x) {
    if (x == e.b) x = e.a;
    return x > e.b ? x - 1 : x;
  };
  for (const Face& f : t.faces()) {
    if (face_has(f, e.a) && face_has(f, e.b)) continue;
    faces.push_back(make_face(image(f[0]), image(f[1]), image(f[2])));
  }
  auto result = Triangulation::try_build(t.vertex_count() - 1, std::move(faces), t.label());
  if (!result) {
    out.failure = ShrinkFailure::Degenerate;
    return out;
  }
  const SurfaceClass before = classify(t);
  const SurfaceClass after = classify(*result);
  if (!before.same_type(after)) {
    out.failure = ShrinkFailure::Topology;
    return out;
  }
  out.result = std::move(result);
  return out;
}

Triangulation shrink_edge(const Triangulation& t, const Edge& e) {
  if (!t.has_edge(e.a, e.b)) throw TransformError(edge_str(e) + " is not an edge");
  auto r = try_shrink_edge(t, e);
  if (!r.result) {
    throw NotShrinkable(r.failure,
                        "edge " + edge_str(e) + " is not shrinkable (" + to_string(r.failure) + ")");
  }
  return std::move(*r.result);
}

bool is_contractible(const Triangulation& t, const Edge& e) {
  return try_shrink_edge(t, e).result.has_value();
}

Triangulation remove_vertex(const Triangulation& t, Vertex v) {
  if (!t.is_closed()) throw TransformError("remove_vertex needs a closed triangulation");
  if (v < 0 || v >= t.vertex_count()) throw TransformError("no such vertex");
  return Triangulation::build(t.vertex_count() - 1, faces_without_vertex(t, v), t.label());
}

Triangulation remove_face(const Triangulation& t, const Face& f) {
  if (!t.is_closed()) throw TransformError("remove_face needs a closed triangulation");
  const Face key = make_face(f[0], f[1], f[2]);
  const int id = t.face_index(key);
  if (id < 0) throw TransformError("not a face");
  std::vector<Face> faces(t.faces().begin(), t.faces().end());
  faces.erase(faces.begin() + id);
  return Triangulation::build(t.vertex_count(), std::move(faces), t.label());
}

Triangulation remove_cable(const Triangulation& t, const Edge& e) {
  const int id = t.edge_index(e.a, e.b);
  if (id < 0) throw TransformError(edge_str(e) + " is not an edge");
  if (t.is_boundary_edge(id)) throw TransformError(edge_str(e) + " is a boundary edge");
  const auto ef = t.edge_faces(id);
  if (t.third_vertex(ef[0], e) == t.third_vertex(ef[1], e)) {
    throw TransformError("faces on " + edge_str(e) + " share their apex");
  }
  std::vector<Face> faces;
  faces.reserve(t.face_count() - 2);
  for (int i = 0; i < t.face_count(); ++i) {
    if (i != ef[0] && i != ef[1]) faces.push_back(t.faces()[i]);
  }
  return Triangulation::build(t.vertex_count(), std::move(faces), t.label());
}

ClosedHole close_hole(const Triangulation& t) {
  const auto cycles = boundary_cycles(t);
  if (cycles.size() != 1) {
    throw TransformError("close_hole needs exactly one boundary cycle, found " +
                         std::to_string(cycles.size()));
  }
  const auto& c = cycles.front();
  const Vertex center = t.vertex_count();
  std::vector<Face> faces(t.faces().begin(), t.faces().end());
  for (std::size_t k = 0; k < c.size(); ++k) {
    faces.push_back(make_face(center, c[k], c[(k + 1) % c.size()]));
  }
  return {Triangulation::build(t.vertex_count() + 1, std::move(faces), t.label()), center};
}

}  // namespace punctri
