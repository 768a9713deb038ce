#include "punctri/triangulation.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace punctri {

Face make_face(Vertex x, Vertex y, Vertex z) {
  Face f{x, y, z};
  std::sort(f.begin(), f.end());
  return f;
}

const char* to_string(Violation v) {
  switch (v) {
    case Violation::VertexOutOfRange: return "vertex-out-of-range";
    case Violation::DegenerateFace: return "degenerate-face";
    case Violation::DuplicateFace: return "duplicate-face";
    case Violation::IsolatedVertex: return "isolated-vertex";
    case Violation::EdgeOverloaded: return "edge-in-3-or-more-faces";
    case Violation::Disconnected: return "disconnected";
    case Violation::BrokenLink: return "broken-vertex-link";
    case Violation::Empty: return "empty";
  }
  return "unknown";
}

namespace {

std::string face_str(const Face& f) {
  std::ostringstream os;
  os << f[0] << ',' << f[1] << ',' << f[2];
  return os.str();
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[y] = x;
    return true;
  }
};

}  // namespace

std::optional<Triangulation> Triangulation::try_build(int vertex_count, std::vector<Face> faces,
                                                      std::string label,
                                                      InvalidTriangulation* error) {
  auto fail = [&](Violation kind, const std::string& msg) -> std::optional<Triangulation> {
    if (error) *error = InvalidTriangulation(kind, msg);
    return std::nullopt;
  };

  if (faces.empty() || vertex_count <= 0) return fail(Violation::Empty, "no faces");

  for (auto& f : faces) {
    for (Vertex v : f) {
      if (v < 0 || v >= vertex_count) {
        return fail(Violation::VertexOutOfRange,
                    "face " + face_str(f) + " references vertex " + std::to_string(v) +
                        " outside [0," + std::to_string(vertex_count) + ")");
      }
    }
    std::sort(f.begin(), f.end());
    if (f[0] == f[1] || f[1] == f[2]) {
      return fail(Violation::DegenerateFace, "face " + face_str(f) + " repeats a vertex");
    }
  }
  std::sort(faces.begin(), faces.end());
  if (auto it = std::adjacent_find(faces.begin(), faces.end()); it != faces.end()) {
    // Two distinct faces sharing two edges share all three vertices, so this
    // also covers the "faces meet in two edges" rule.
    return fail(Violation::DuplicateFace, "duplicate face " + face_str(*it));
  }

  Triangulation t;
  t.vertex_count_ = vertex_count;
  t.faces_ = std::move(faces);
  t.label_ = std::move(label);
  const int nf = t.face_count();

  t.vertex_faces_.assign(vertex_count, {});
  for (int i = 0; i < nf; ++i) {
    for (Vertex v : t.faces_[i]) t.vertex_faces_[v].push_back(i);
  }
  for (Vertex v = 0; v < vertex_count; ++v) {
    if (t.vertex_faces_[v].empty()) {
      return fail(Violation::IsolatedVertex, "vertex " + std::to_string(v) + " lies in no face");
    }
  }

  std::vector<std::pair<Edge, int>> incidences;
  incidences.reserve(3 * nf);
  for (int i = 0; i < nf; ++i) {
    const Face& f = t.faces_[i];
    incidences.emplace_back(Edge(f[0], f[1]), i);
    incidences.emplace_back(Edge(f[0], f[2]), i);
    incidences.emplace_back(Edge(f[1], f[2]), i);
  }
  std::sort(incidences.begin(), incidences.end());
  t.face_edges_.assign(nf, {-1, -1, -1});
  for (std::size_t i = 0; i < incidences.size();) {
    std::size_t j = i;
    while (j < incidences.size() && incidences[j].first == incidences[i].first) ++j;
    const Edge e = incidences[i].first;
    if (j - i > 2) {
      return fail(Violation::EdgeOverloaded, "edge " + std::to_string(e.a) + "-" +
                                                 std::to_string(e.b) + " lies in " +
                                                 std::to_string(j - i) + " faces");
    }
    const int id = static_cast<int>(t.edges_.size());
    for (std::size_t k = i; k < j; ++k) {
      auto& slots = t.face_edges_[incidences[k].second];
      *std::find(slots.begin(), slots.end(), -1) = id;
    }
    t.edges_.push_back(e);
    t.edge_faces_.push_back({incidences[i].second, j - i == 2 ? incidences[i + 1].second : -1});
    i = j;
  }

  DisjointSets components(nf);
  int merges = 0;
  for (const auto& ef : t.edge_faces_) {
    if (ef[1] >= 0 && components.unite(ef[0], ef[1])) ++merges;
  }
  if (merges != nf - 1) {
    return fail(Violation::Disconnected, "face adjacency graph is disconnected");
  }

  t.neighbors_.assign(vertex_count, {});
  t.boundary_vertex_.assign(vertex_count, 0);
  for (std::size_t i = 0; i < t.edges_.size(); ++i) {
    const Edge e = t.edges_[i];
    t.neighbors_[e.a].push_back(e.b);
    t.neighbors_[e.b].push_back(e.a);
    if (t.edge_faces_[i][1] < 0) {
      ++t.boundary_edge_count_;
      t.boundary_vertex_[e.a] = 1;
      t.boundary_vertex_[e.b] = 1;
    }
  }
  for (auto& n : t.neighbors_) std::sort(n.begin(), n.end());

  // Each link must be one cycle or one path: count the path ends, then make
  // sure a walk from one node reaches all of them.
  for (Vertex v = 0; v < vertex_count; ++v) {
    const auto& nbrs = t.neighbors_[v];
    int ends = 0;
    for (Vertex x : nbrs) {
      if (t.is_boundary_edge(t.edge_index(v, x))) ++ends;
    }
    auto broken = [&] {
      return fail(Violation::BrokenLink,
                  "link of vertex " + std::to_string(v) + " is not a single cycle or path");
    };
    if (ends != 0 && ends != 2) return broken();
    if (vertex_link(t, v).order.size() != nbrs.size()) return broken();
  }
  return t;
}

Triangulation Triangulation::build(int vertex_count, std::vector<Face> faces, std::string label) {
  InvalidTriangulation error(Violation::Empty, "");
  auto t = try_build(vertex_count, std::move(faces), std::move(label), &error);
  if (!t) throw error;
  return std::move(*t);
}

Triangulation Triangulation::with_label(std::string label) const {
  Triangulation copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

int Triangulation::edge_index(Vertex x, Vertex y) const {
  const Edge e(x, y);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

int Triangulation::face_index(const Face& f) const {
  auto it = std::lower_bound(faces_.begin(), faces_.end(), f);
  if (it == faces_.end() || *it != f) return -1;
  return static_cast<int>(it - faces_.begin());
}

Vertex Triangulation::third_vertex(int face_id, const Edge& edge) const {
  for (Vertex v : faces_[face_id]) {
    if (!edge.has(v)) return v;
  }
  return -1;
}

VertexLink vertex_link(const Triangulation& t, Vertex v) {
  VertexLink link;
  const auto nbrs = t.neighbors(v);
  if (nbrs.empty()) return link;

  // Link neighbours of x around v are the apexes of the faces on edge vx.
  auto link_next = [&](Vertex x) {
    const int e = t.edge_index(v, x);
    const Edge edge(v, x);
    const auto ef = t.edge_faces(e);
    std::array<Vertex, 2> out{t.third_vertex(ef[0], edge), ef[1] >= 0 ? t.third_vertex(ef[1], edge) : -1};
    return out;
  };

  Vertex start = -1;
  for (Vertex x : nbrs) {
    if (t.is_boundary_edge(t.edge_index(v, x))) {
      start = x;
      break;
    }
  }
  link.closed = start < 0;
  if (link.closed) start = nbrs.front();

  link.order.push_back(start);
  const auto first = link_next(start);
  Vertex cur = start;
  Vertex next = link.closed ? std::min(first[0], first[1]) : first[0];
  while (next >= 0 && next != start && link.order.size() <= nbrs.size()) {
    link.order.push_back(next);
    const auto n = link_next(next);
    const Vertex after = n[0] == cur ? n[1] : n[0];
    cur = next;
    next = after;
  }
  return link;
}

std::vector<std::vector<Vertex>> boundary_cycles(const Triangulation& t) {
  std::vector<std::vector<Vertex>> cycles;
  if (t.is_closed()) return cycles;

  std::vector<std::vector<Vertex>> bnbrs(t.vertex_count());
  for (int i = 0; i < t.edge_count(); ++i) {
    if (!t.is_boundary_edge(i)) continue;
    const Edge e = t.edges()[i];
    bnbrs[e.a].push_back(e.b);
    bnbrs[e.b].push_back(e.a);
  }
  std::vector<char> seen(t.vertex_count(), 0);
  for (Vertex s = 0; s < t.vertex_count(); ++s) {
    if (seen[s] || bnbrs[s].empty()) continue;
    std::vector<Vertex> cycle{s};
    seen[s] = 1;
    Vertex prev = s;
    Vertex cur = std::min(bnbrs[s][0], bnbrs[s][1]);
    while (cur != s) {
      cycle.push_back(cur);
      seen[cur] = 1;
      const Vertex next = bnbrs[cur][0] == prev ? bnbrs[cur][1] : bnbrs[cur][0];
      prev = cur;
      cur = next;
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

bool is_orientable(const Triangulation& t) {
  // orient[f] = +1 keeps the stored ascending order (f0,f1,f2), -1 flips it.
  const int nf = t.face_count();
  std::vector<int> orient(nf, 0);
  auto traverses = [&](int f, Vertex x, Vertex y) {
    // Does face f, in its chosen orientation, traverse x -> y?
    const Face& face = t.faces()[f];
    int ix = 0, iy = 0;
    for (int k = 0; k < 3; ++k) {
      if (face[k] == x) ix = k;
      if (face[k] == y) iy = k;
    }
    const bool forward = (ix + 1) % 3 == iy;
    return forward == (orient[f] > 0);
  };

  std::queue<int> queue;
  orient[0] = 1;
  queue.push(0);
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop();
    const Face& face = t.faces()[f];
    for (int k = 0; k < 3; ++k) {
      const Vertex x = face[k];
      const Vertex y = face[(k + 1) % 3];
      const auto ef = t.edge_faces(t.edge_index(x, y));
      const int g = ef[0] == f ? ef[1] : ef[0];
      if (g < 0) continue;
      const bool f_xy = traverses(f, x, y);
      if (orient[g] == 0) {
        orient[g] = 1;
        // Neighbour must run the shared edge the other way.
        if (traverses(g, x, y) == f_xy) orient[g] = -1;
        queue.push(g);
      } else if (traverses(g, x, y) == f_xy) {
        return false;
      }
    }
  }
  return true;
}

std::string closed_surface_name(int chi, bool orientable) {
  if (orientable) return "S" + std::to_string((2 - chi) / 2);
  return "N" + std::to_string(2 - chi);
}

SurfaceName parse_surface_name(const std::string& name) {
  SurfaceName out;
  std::string body = name;
  if (body.size() > 2 && body.compare(body.size() - 2, 2, "-D") == 0) {
    out.punctured = true;
    body.resize(body.size() - 2);
  }
  if (body.size() < 2 || (body[0] != 'S' && body[0] != 'N')) {
    throw std::invalid_argument("unknown surface name '" + name + "'");
  }
  int genus = 0;
  try {
    std::size_t used = 0;
    genus = std::stoi(body.substr(1), &used);
    if (used != body.size() - 1) throw std::invalid_argument(name);
  } catch (const std::exception&) {
    throw std::invalid_argument("unknown surface name '" + name + "'");
  }
  out.orientable = body[0] == 'S';
  if (genus < 0 || (!out.orientable && genus < 1)) {
    throw std::invalid_argument("unknown surface name '" + name + "'");
  }
  out.closed_euler_characteristic = out.orientable ? 2 - 2 * genus : 2 - genus;
  return out;
}

bool SurfaceClass::same_type(const SurfaceClass& other) const {
  if (euler_characteristic != other.euler_characteristic || orientable != other.orientable ||
      boundary_cycles.size() != other.boundary_cycles.size()) {
    return false;
  }
  return true;
}

SurfaceClass classify(const Triangulation& t) {
  SurfaceClass c;
  c.euler_characteristic = t.euler_characteristic();
  c.orientable = is_orientable(t);
  c.boundary_cycles = boundary_cycles(t);
  c.name = closed_surface_name(c.closed_euler_characteristic(), c.orientable);
  const auto holes = c.boundary_cycles.size();
  if (holes == 1) {
    c.name += "-D";
  } else if (holes > 1) {
    c.name += "-" + std::to_string(holes) + "D";
  }
  return c;
}

Triangulation relabel(const Triangulation& t, std::span<const Vertex> perm) {
  std::vector<Face> faces;
  faces.reserve(t.face_count());
  for (const Face& f : t.faces()) faces.push_back(make_face(perm[f[0]], perm[f[1]], perm[f[2]]));
  return Triangulation::build(t.vertex_count(), std::move(faces), t.label());
}

}  // namespace punctri
