#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "punctri/canon.hpp"
#include "punctri/transform.hpp"

using namespace punctri;

TEST_CASE("corner split of the tetrahedron") {
  const auto t = split_corner(fixtures::tetrahedron(), {1, 0, 2});
  const auto expected =
      Triangulation::build(5, {{1, 2, 3}, {0, 1, 2}, {1, 3, 4}, {2, 3, 4}, {0, 1, 4}, {0, 2, 4}});
  CHECK(t == expected);
  CHECK(t.edge_count() == 9);
  CHECK(t.euler_characteristic() == 2);
}

TEST_CASE("all tetrahedron corner splits are isomorphic") {
  const auto tet = fixtures::tetrahedron();
  const auto cs = corners(tet);
  CHECK(cs.size() == 12);
  std::vector<Triangulation> splits;
  for (const auto& c : cs) splits.push_back(split_corner(tet, c));
  CHECK(dedupe(splits).size() == 1);
}

TEST_CASE("corner split rejects non-corners and bordered input") {
  CHECK_THROWS_AS(split_corner(fixtures::bipyramid(), {3, 0, 3}), TransformError);
  CHECK_THROWS_AS(split_corner(fixtures::bipyramid(), {3, 4, 0}), TransformError);
  CHECK_THROWS_AS(split_corner(fixtures::fan_disk(), {0, 3, 1}), TransformError);
}

TEST_CASE("split at consecutive link neighbours is a stellar subdivision") {
  const auto k7 = fixtures::k7_torus();
  for (const Face& f : k7.faces()) {
    const auto s = split_corner(k7, {f[1], f[0], f[2]});
    // Which of the two halves takes the single face depends on the link orientation.
    CHECK((s.degree(7) == 3 || s.degree(f[0]) == 3));
    std::vector<Face> stellar;
    for (const Face& g : k7.faces()) {
      if (g != f) stellar.push_back(g);
    }
    stellar.push_back({f[0], f[1], 7});
    stellar.push_back({f[0], f[2], 7});
    stellar.push_back({f[1], f[2], 7});
    CHECK(are_isomorphic(s, Triangulation::build(8, stellar)));
  }
}

TEST_CASE("truncated corner split of the fan disk") {
  const auto fan = fixtures::fan_disk();
  const auto t = split_truncated_corner(fan, {3, 0});
  CHECK(t.vertex_count() == 5);
  CHECK(t.face_count() == 4);
  const auto c = classify(t);
  CHECK(c.euler_characteristic == 1);
  REQUIRE(c.boundary_cycles.size() == 1);
  CHECK(c.boundary_cycles[0].size() == 4);
  const auto expected = Triangulation::build(5, {{0, 1, 3}, {1, 2, 3}, {2, 3, 4}, {0, 3, 4}});
  CHECK(are_isomorphic(t, expected));
  CHECK(are_isomorphic(shrink_edge(t, Edge(0, 4)), fan));
}

TEST_CASE("truncated corner split rejects bad corners") {
  const auto fan = fixtures::fan_disk();
  CHECK_THROWS_AS(split_truncated_corner(fan, {1, 0}), TransformError);
  CHECK_THROWS_AS(split_truncated_corner(fixtures::tetrahedron(), {1, 0}), TransformError);
}

TEST_CASE("truncated corner splits keep the surface") {
  const auto mob = remove_vertex(split_corner(fixtures::k7_torus(), {1, 0, 2}), 0);
  for (Vertex v = 0; v < mob.vertex_count(); ++v) {
    if (!mob.is_boundary_vertex(v)) continue;
    for (Vertex u : mob.neighbors(v)) {
      if (mob.is_boundary_vertex(u)) continue;
      const auto s = split_truncated_corner(mob, {u, v});
      CHECK(classify(s).same_type(classify(mob)));
      CHECK(s.vertex_count() == mob.vertex_count() + 1);
      CHECK(s.edge_count() == mob.edge_count() + 2);
      CHECK(s.face_count() == mob.face_count() + 1);
      CHECK(s.boundary_edge_count() == mob.boundary_edge_count() + 1);
    }
  }
}

TEST_CASE("shrinking undoes splitting") {
  const auto tet = fixtures::tetrahedron();
  const auto five = split_corner(tet, {1, 0, 2});
  CHECK(shrink_edge(five, Edge(0, 4)) == tet);
}

TEST_CASE("shrink failures") {
  const auto tet = fixtures::tetrahedron();
  for (const Edge& e : tet.edges()) {
    const auto r = try_shrink_edge(tet, e);
    CHECK_FALSE(r.result);
    CHECK(r.failure != ShrinkFailure::None);
    CHECK_THROWS_AS(shrink_edge(tet, e), NotShrinkable);
  }
  CHECK_THROWS_AS(shrink_edge(tet, Edge(0, 9)), TransformError);
  const auto r = try_shrink_edge(fixtures::bipyramid(), Edge(0, 1));
  CHECK(r.failure == ShrinkFailure::MultiEdge);
}

TEST_CASE("bipyramid contractions") {
  const auto bp = fixtures::bipyramid();
  CHECK(are_isomorphic(shrink_edge(bp, Edge(0, 3)), fixtures::tetrahedron()));
  CHECK(is_contractible(bp, Edge(0, 3)));
  CHECK_FALSE(is_contractible(bp, Edge(0, 1)));
  for (const Edge& e : fixtures::triangle().edges()) CHECK_FALSE(is_contractible(fixtures::triangle(), e));
}

TEST_CASE("boundary edge contraction collapses a single face") {
  const auto t = split_truncated_corner(fixtures::fan_disk(), {3, 0});
  const auto r = try_shrink_edge(t, Edge(0, 4));
  REQUIRE(r.result);
  CHECK(r.result->face_count() == t.face_count() - 1);
}

TEST_CASE("vertex removal") {
  CHECK(remove_vertex(fixtures::tetrahedron(), 0) == fixtures::triangle());
  const auto k7 = fixtures::k7_torus();
  for (Vertex v = 0; v < k7.vertex_count(); ++v) {
    const auto r = remove_vertex(k7, v);
    CHECK(r.vertex_count() == 6);
    CHECK(r.edge_count() == k7.edge_count() - k7.degree(v));
    CHECK(r.face_count() == k7.face_count() - k7.degree(v));
    CHECK(r.euler_characteristic() == k7.euler_characteristic() - 1);
    const auto c = classify(r);
    REQUIRE(c.boundary_cycles.size() == 1);
    CHECK(c.boundary_cycles[0].size() == 6);
    CHECK(are_isomorphic(close_hole(r).closed, k7));
  }
  CHECK_THROWS_AS(remove_vertex(fixtures::fan_disk(), 3), TransformError);
}

TEST_CASE("face removal") {
  const auto k7 = fixtures::k7_torus();
  const auto r = remove_face(k7, {0, 1, 3});
  CHECK(r.vertex_count() == 7);
  CHECK(r.face_count() == 13);
  CHECK(r.edge_count() == 21);
  CHECK(r.euler_characteristic() == -1);
  CHECK(boundary_cycles(r) == std::vector<std::vector<Vertex>>{{0, 1, 3}});
  const auto fan = remove_face(fixtures::tetrahedron(), {1, 2, 3});
  CHECK(are_isomorphic(fan, fixtures::fan_disk()));
  CHECK_THROWS_AS(remove_face(k7, {0, 1, 2}), TransformError);
}

TEST_CASE("cable removal") {
  const auto k7 = fixtures::k7_torus();
  const auto r = remove_cable(k7, Edge(0, 1));
  CHECK(r.vertex_count() == 7);
  CHECK(r.face_count() == 12);
  CHECK(r.edge_count() == 20);
  CHECK(r.euler_characteristic() == -1);
  const auto cycle = boundary_cycles(r);
  REQUIRE(cycle.size() == 1);
  // Faces on 0-1 are {0,1,3} and {0,1,5}.
  CHECK(cycle[0] == std::vector<Vertex>{0, 3, 1, 5});
  CHECK_THROWS_AS(remove_cable(fixtures::fan_disk(), Edge(0, 1)), TransformError);
}

TEST_CASE("closing holes") {
  const auto closed = close_hole(fixtures::triangle());
  CHECK(closed.center == 3);
  CHECK(closed.closed == fixtures::tetrahedron());
  CHECK(are_isomorphic(close_hole(fixtures::fan_disk()).closed, fixtures::bipyramid()));
  CHECK_THROWS_AS(close_hole(fixtures::tetrahedron()), TransformError);
}

TEST_CASE("split deltas and topology over many corners") {
  for (const auto& t : {fixtures::k7_torus(), fixtures::bipyramid(), fixtures::tetrahedron()}) {
    for (const auto& c : corners(t)) {
      const auto s = split_corner(t, c);
      CHECK(s.vertex_count() == t.vertex_count() + 1);
      CHECK(s.edge_count() == t.edge_count() + 3);
      CHECK(s.face_count() == t.face_count() + 2);
      CHECK(classify(s).same_type(classify(t)));
      CHECK(canonical_key(shrink_edge(s, Edge(c.v, t.vertex_count()))) == canonical_key(t));
    }
  }
}
