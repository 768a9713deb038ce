#include <catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"
#include "punctri/triangulation.hpp"

using namespace punctri;

namespace {

Violation violation_of(int n, std::vector<Face> faces) {
  InvalidTriangulation error(Violation::Empty, "");
  REQUIRE_FALSE(Triangulation::try_build(n, std::move(faces), {}, &error));
  return error.kind();
}

}  // namespace

TEST_CASE("valid fixtures build") {
  const auto tet = fixtures::tetrahedron();
  CHECK(tet.vertex_count() == 4);
  CHECK(tet.edge_count() == 6);
  CHECK(tet.is_closed());
  const auto tri = fixtures::triangle();
  CHECK(tri.boundary_edge_count() == 3);
  CHECK_FALSE(tri.is_closed());
}

TEST_CASE("faces are normalised") {
  const auto t = Triangulation::build(4, {{3, 2, 1}, {0, 3, 2}, {1, 0, 3}, {2, 1, 0}});
  CHECK(t == fixtures::tetrahedron());
  CHECK(t.faces()[0] == Face{0, 1, 2});
}

TEST_CASE("build rejects broken face lists") {
  CHECK(violation_of(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {0, 1, 2}}) == Violation::DuplicateFace);
  CHECK(violation_of(3, {{0, 1, 3}}) == Violation::VertexOutOfRange);
  CHECK(violation_of(3, {{0, 1, 1}}) == Violation::DegenerateFace);
  CHECK(violation_of(4, {{0, 1, 2}}) == Violation::IsolatedVertex);
  CHECK(violation_of(5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}) == Violation::EdgeOverloaded);
  CHECK(violation_of(6, {{0, 1, 2}, {3, 4, 5}}) == Violation::Disconnected);
  // Faces 012 and 034 meet only at 0 (its link is two paths) but are joined
  // through 123 and 234.
  CHECK(violation_of(5, {{0, 1, 2}, {0, 3, 4}, {1, 2, 3}, {2, 3, 4}}) == Violation::BrokenLink);
  CHECK(violation_of(5, {{0, 1, 2}, {0, 3, 4}}) == Violation::Disconnected);
  CHECK(violation_of(0, {}) == Violation::Empty);
}

TEST_CASE("build error names the duplicate") {
  try {
    Triangulation::build(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {2, 1, 0}});
    FAIL("expected an exception");
  } catch (const InvalidTriangulation& e) {
    CHECK(e.kind() == Violation::DuplicateFace);
    CHECK(std::string(e.what()).find("0,1,2") != std::string::npos);
  }
}

TEST_CASE("classify fixtures") {
  auto tet = classify(fixtures::tetrahedron());
  CHECK(tet.euler_characteristic == 2);
  CHECK(tet.orientable);
  CHECK(tet.closed());
  CHECK(tet.name == "S0");

  auto tri = classify(fixtures::triangle());
  CHECK(tri.euler_characteristic == 1);
  CHECK(tri.boundary_cycles.size() == 1);
  CHECK(tri.boundary_cycles[0].size() == 3);
  CHECK(tri.name == "S0-D");

  auto k7 = classify(fixtures::k7_torus());
  CHECK(k7.euler_characteristic == 0);
  CHECK(k7.orientable);
  CHECK(k7.closed());
  CHECK(k7.name == "S1");

  auto mob = classify(fixtures::mobius5());
  CHECK(mob.euler_characteristic == 0);
  CHECK_FALSE(mob.orientable);
  CHECK(mob.name == "N1-D");
}

TEST_CASE("surface names") {
  CHECK(closed_surface_name(2, true) == "S0");
  CHECK(closed_surface_name(-2, true) == "S2");
  CHECK(closed_surface_name(1, false) == "N1");
  CHECK(closed_surface_name(0, false) == "N2");
  auto n = parse_surface_name("N2-D");
  CHECK(n.closed_euler_characteristic == 0);
  CHECK_FALSE(n.orientable);
  CHECK(n.punctured);
  CHECK(parse_surface_name("S1").closed_euler_characteristic == 0);
  CHECK_THROWS(parse_surface_name("T1"));
  CHECK_THROWS(parse_surface_name("N0"));
}

TEST_CASE("vertex links") {
  auto tet = vertex_link(fixtures::tetrahedron(), 0);
  CHECK(tet.closed);
  CHECK(tet.order == std::vector<Vertex>{1, 2, 3});

  auto tri = vertex_link(fixtures::triangle(), 0);
  CHECK_FALSE(tri.closed);
  CHECK(tri.order == std::vector<Vertex>{1, 2});

  auto k7 = vertex_link(fixtures::k7_torus(), 0);
  CHECK(k7.closed);
  CHECK(k7.order == std::vector<Vertex>{1, 3, 2, 6, 4, 5});

  // Boundary vertex: the path ends at its two boundary neighbours.
  const auto fan = fixtures::fan_disk();
  auto l = vertex_link(fan, 0);
  CHECK_FALSE(l.closed);
  REQUIRE(l.order.size() == 3);
  CHECK(l.order[1] == 3);
}

TEST_CASE("boundary cycles") {
  CHECK(boundary_cycles(fixtures::triangle()) == std::vector<std::vector<Vertex>>{{0, 1, 2}});
  CHECK(boundary_cycles(fixtures::tetrahedron()).empty());
  CHECK(boundary_cycles(fixtures::mobius5()) == std::vector<std::vector<Vertex>>{{0, 2, 4, 1, 3}});
}

TEST_CASE("closed links are cycles and bordered links are paths") {
  for (const auto& t : {fixtures::k7_torus(), fixtures::mobius5(), fixtures::fan_disk()}) {
    for (Vertex v = 0; v < t.vertex_count(); ++v) {
      const auto l = vertex_link(t, v);
      CHECK(l.closed == !t.is_boundary_vertex(v));
      CHECK(static_cast<int>(l.order.size()) == t.degree(v));
    }
  }
}

TEST_CASE("euler characteristic from scratch") {
  for (const auto& t : {fixtures::k7_torus(), fixtures::mobius5(), fixtures::bipyramid()}) {
    std::set<std::pair<Vertex, Vertex>> edges;
    for (const Face& f : t.faces()) {
      edges.insert({f[0], f[1]});
      edges.insert({f[0], f[2]});
      edges.insert({f[1], f[2]});
    }
    CHECK(t.euler_characteristic() ==
          t.vertex_count() - static_cast<int>(edges.size()) + t.face_count());
  }
}

TEST_CASE("orientability survives relabelling") {
  std::mt19937 rng(7);
  for (const auto& t : {fixtures::k7_torus(), fixtures::mobius5(), fixtures::bipyramid()}) {
    const bool expected = is_orientable(t);
    for (int k = 0; k < 50; ++k) {
      const auto perm = fixtures::random_permutation(t.vertex_count(), rng);
      const auto r = relabel(t, perm);
      CHECK(is_orientable(r) == expected);
      CHECK(classify(r).same_type(classify(t)));
    }
  }
}

TEST_CASE("edge and face lookups") {
  const auto t = fixtures::bipyramid();
  CHECK(t.has_edge(3, 0));
  CHECK_FALSE(t.has_edge(3, 4));
  CHECK(t.has_face({0, 1, 3}));
  CHECK_FALSE(t.has_face({0, 1, 2}));
  const int e = t.edge_index(0, 1);
  const auto ef = t.edge_faces(e);
  CHECK(t.third_vertex(ef[0], Edge(0, 1)) + t.third_vertex(ef[1], Edge(0, 1)) == 7);
}
