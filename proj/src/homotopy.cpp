#include "punctri/homotopy.hpp"

#include <algorithm>
#include <numeric>

namespace punctri {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

std::array<int, 3> cycle_edge_ids(const Triangulation& t, const Cycle3& c) {
  std::array<int, 3> ids{t.edge_index(c[0], c[1]), t.edge_index(c[1], c[2]),
                         t.edge_index(c[0], c[2])};
  for (int id : ids) {
    if (id < 0) throw std::invalid_argument("not a 3-cycle of the edge graph");
  }
  if (c[0] == c[1] || c[1] == c[2] || c[0] == c[2]) {
    throw std::invalid_argument("not a 3-cycle of the edge graph");
  }
  return ids;
}

// Shared walk for cut_along and is_null_homotopic. Calls `visit` once per
// piece; stops early if `visit` returns true.
template <typename Visit>
void for_each_side(const Triangulation& t, const Cycle3& cycle, const std::array<int, 3>& cut,
                   Visit&& visit) {
  const int nf = t.face_count();
  std::vector<int> parent(nf);
  std::iota(parent.begin(), parent.end(), 0);
  for (int e = 0; e < t.edge_count(); ++e) {
    if (e == cut[0] || e == cut[1] || e == cut[2]) continue;
    const auto ef = t.edge_faces(e);
    if (ef[1] < 0) continue;
    const int x = find_root(parent, ef[0]);
    const int y = find_root(parent, ef[1]);
    if (x != y) parent[y] = x;
  }

  std::vector<std::vector<int>> groups(nf);
  for (int f = 0; f < nf; ++f) groups[find_root(parent, f)].push_back(f);

  std::vector<int> edge_hits(t.edge_count(), 0);
  std::vector<char> vertex_seen(t.vertex_count(), 0);
  for (const auto& group : groups) {
    if (group.empty()) continue;
    int own_vertices = 0;
    int own_edges = 0;
    int boundary = 0;
    int boundary_on_cut = 0;
    std::vector<int> touched_edges;
    std::vector<Vertex> touched_vertices;
    for (int f : group) {
      for (Vertex v : t.faces()[f]) {
        if (!vertex_seen[v]) {
          vertex_seen[v] = 1;
          touched_vertices.push_back(v);
          ++own_vertices;
        }
      }
      for (int e : t.face_edges(f)) {
        if (edge_hits[e]++ == 0) {
          touched_edges.push_back(e);
          ++own_edges;
        }
      }
    }
    int cut_edges_present = 0;
    for (int e : touched_edges) {
      const bool on_cut = e == cut[0] || e == cut[1] || e == cut[2];
      if (on_cut) ++cut_edges_present;
      if (edge_hits[e] == 1) {
        ++boundary;
        if (on_cut) ++boundary_on_cut;
      }
    }
    int cut_vertices_present = 0;
    for (Vertex v : cycle) {
      if (vertex_seen[v]) ++cut_vertices_present;
    }

    CutSide side;
    side.faces = static_cast<int>(group.size());
    side.own_euler_characteristic = own_vertices - own_edges + side.faces;
    side.euler_characteristic = (own_vertices + 3 - cut_vertices_present) -
                                (own_edges + 3 - cut_edges_present) + side.faces;
    side.bounded_by_cycle = boundary == 3 && boundary_on_cut == 3;

    for (int e : touched_edges) edge_hits[e] = 0;
    for (Vertex v : touched_vertices) vertex_seen[v] = 0;
    if (visit(side)) return;
  }
}

bool is_null_homotopic_ids(const Triangulation& t, const Cycle3& cycle,
                           const std::array<int, 3>& cut) {
  bool disk = false;
  for_each_side(t, cycle, cut, [&](const CutSide& side) {
    disk = side.bounded_by_cycle && side.own_euler_characteristic == 1;
    return disk;
  });
  return disk;
}

}  // namespace

std::vector<CutSide> cut_along(const Triangulation& t, const Cycle3& cycle) {
  std::vector<CutSide> sides;
  for_each_side(t, cycle, cycle_edge_ids(t, cycle), [&](const CutSide& side) {
    sides.push_back(side);
    return false;
  });
  return sides;
}

bool is_null_homotopic(const Triangulation& t, const Cycle3& cycle) {
  Cycle3 c = cycle;
  std::sort(c.begin(), c.end());
  const auto ids = cycle_edge_ids(t, c);
  if (t.has_face(c)) return true;
  return is_null_homotopic_ids(t, c, ids);
}

namespace {

template <typename Fn>
void for_each_three_cycle(const Triangulation& t, Fn&& fn) {
  for (const Edge& e : t.edges()) {
    const auto na = t.neighbors(e.a);
    const auto nb = t.neighbors(e.b);
    auto ia = std::upper_bound(na.begin(), na.end(), e.b);
    auto ib = std::upper_bound(nb.begin(), nb.end(), e.b);
    while (ia != na.end() && ib != nb.end()) {
      if (*ia < *ib) {
        ++ia;
      } else if (*ib < *ia) {
        ++ib;
      } else {
        fn(Cycle3{e.a, e.b, *ia});
        ++ia;
        ++ib;
      }
    }
  }
}

}  // namespace

std::vector<CycleVerdict> three_cycles(const Triangulation& t) {
  std::vector<CycleVerdict> out;
  for_each_three_cycle(t, [&](const Cycle3& c) {
    CycleVerdict v;
    v.cycle = c;
    v.facial = t.has_face(c);
    v.null_homotopic = v.facial || is_null_homotopic_ids(t, c, cycle_edge_ids(t, c));
    out.push_back(v);
  });
  std::sort(out.begin(), out.end(),
            [](const CycleVerdict& x, const CycleVerdict& y) { return x.cycle < y.cycle; });
  return out;
}

const char* to_string(RodMode m) { return m == RodMode::Literal ? "literal" : "agreement"; }

RodMode parse_rod_mode(const std::string& s) {
  if (s == "literal") return RodMode::Literal;
  if (s == "agreement") return RodMode::Agreement;
  throw std::invalid_argument("unknown mode '" + s + "'");
}

std::string describe_reasons(unsigned reasons) {
  if (reasons == 0) return "-";
  std::string out;
  auto add = [&](unsigned bit, const char* name) {
    if (!(reasons & bit)) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  add(kEssentialCycle, "essential-3-cycle");
  add(kBoundaryCycle, "boundary-3-cycle");
  add(kChord, "chord");
  add(kNonfacialCycle, "nonfacial-3-cycle");
  return out;
}

std::vector<EdgeClass> classify_edges(const Triangulation& t, RodMode mode) {
  const auto boundaries = boundary_cycles(t);
  if (mode == RodMode::Agreement &&
      t.euler_characteristic() + static_cast<int>(boundaries.size()) == 2) {
    throw ModeError("agreement mode needs a surface other than the sphere");
  }

  std::vector<EdgeClass> out(t.edge_count());
  for (int i = 0; i < t.edge_count(); ++i) out[i].edge = t.edges()[i];

  for (const auto& cycle : boundaries) {
    if (cycle.size() != 3) continue;
    for (int k = 0; k < 3; ++k) {
      out[t.edge_index(cycle[k], cycle[(k + 1) % 3])].reasons |= kBoundaryCycle;
    }
  }
  if (!t.is_closed()) {
    for (int i = 0; i < t.edge_count(); ++i) {
      const Edge e = t.edges()[i];
      if (!t.is_boundary_edge(i) && t.is_boundary_vertex(e.a) && t.is_boundary_vertex(e.b)) {
        out[i].reasons |= kChord;
      }
    }
  }

  const unsigned cycle_bit = mode == RodMode::Literal ? kNonfacialCycle : kEssentialCycle;
  for_each_three_cycle(t, [&](const Cycle3& c) {
    const std::array<int, 3> ids{t.edge_index(c[0], c[1]), t.edge_index(c[1], c[2]),
                                 t.edge_index(c[0], c[2])};
    if ((out[ids[0]].reasons & out[ids[1]].reasons & out[ids[2]].reasons) & cycle_bit) return;
    if (t.has_face(c)) return;
    if (mode == RodMode::Agreement && is_null_homotopic_ids(t, c, ids)) return;
    for (int id : ids) out[id].reasons |= cycle_bit;
  });
  return out;
}

std::vector<Edge> cables(const Triangulation& t, RodMode mode) {
  std::vector<Edge> out;
  for (const auto& ec : classify_edges(t, mode)) {
    if (ec.is_cable()) out.push_back(ec.edge);
  }
  return out;
}

CableSubgraph cable_subgraph(const Triangulation& t, RodMode mode) {
  CableSubgraph g;
  g.edges = cables(t, mode);
  for (const Edge& e : g.edges) {
    g.vertices.push_back(e.a);
    g.vertices.push_back(e.b);
  }
  std::sort(g.vertices.begin(), g.vertices.end());
  g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());
  return g;
}

bool is_irreducible(const Triangulation& t, RodMode mode) { return cables(t, mode).empty(); }

std::vector<Vertex> pylonic_vertices(std::span<const Edge> cable_set) {
  if (cable_set.empty()) return {};
  std::vector<Vertex> candidates{cable_set[0].a, cable_set[0].b};
  std::erase_if(candidates, [&](Vertex v) {
    return std::any_of(cable_set.begin(), cable_set.end(), [v](const Edge& e) { return !e.has(v); });
  });
  return candidates;
}

std::vector<Vertex> pylonic_vertices(const Triangulation& t) {
  if (!t.is_closed()) throw ModeError("pylonic vertices are defined on closed triangulations");
  const auto c = cables(t, RodMode::Agreement);
  return pylonic_vertices(c);
}

bool is_pylonic(const Triangulation& t) { return !pylonic_vertices(t).empty(); }

}  // namespace punctri
