#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "punctri/triangulation.hpp"

namespace fixtures {

using punctri::Face;
using punctri::Triangulation;
using punctri::Vertex;

inline Triangulation tetrahedron() {
  return Triangulation::build(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, "tetrahedron");
}

inline Triangulation triangle() { return Triangulation::build(3, {{0, 1, 2}}, "triangle"); }

// Minimal torus: K7 with faces {i,i+1,i+3} and {i,i+2,i+3} mod 7.
inline Triangulation k7_torus() {
  std::vector<Face> faces;
  for (int i = 0; i < 7; ++i) {
    faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
    faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return Triangulation::build(7, faces, "k7_torus");
}

// Five-vertex Moebius band: faces {i,i+1,i+2} mod 5.
inline Triangulation mobius5() {
  std::vector<Face> faces;
  for (int i = 0; i < 5; ++i) faces.push_back({i, (i + 1) % 5, (i + 2) % 5});
  return Triangulation::build(5, faces, "mobius5");
}

// Poles 3 and 4 over the equator 0,1,2.
inline Triangulation bipyramid() {
  return Triangulation::build(
      5, {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}, {0, 1, 4}, {1, 2, 4}, {0, 2, 4}}, "bipyramid");
}

// Boundary 0,1,2 with interior centre 3.
inline Triangulation fan_disk() {
  return Triangulation::build(4, {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}}, "fan_disk");
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline std::set<Face> face_set(const Triangulation& t) { return {t.faces().begin(), t.faces().end()}; }

// Exhaustive isomorphism test: tries every bijection of the vertex sets.
inline bool brute_force_isomorphic(const Triangulation& a, const Triangulation& b) {
  if (a.vertex_count() != b.vertex_count() || a.face_count() != b.face_count()) return false;
  const auto target = face_set(b);
  std::vector<Vertex> perm(a.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const Face& f : a.faces()) {
      if (!target.contains(punctri::make_face(perm[f[0]], perm[f[1]], perm[f[2]]))) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace fixtures
