#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "punctri/triangulation.hpp"

namespace punctri {

/// A triangle of the edge graph G(T), ascending.
using Cycle3 = std::array<Vertex, 3>;

struct CycleVerdict {
  Cycle3 cycle{};
  bool facial = false;
  bool null_homotopic = false;
};

/// Every 3-cycle of G(T) in lexicographic order, flagged facial / null-homotopic.
std::vector<CycleVerdict> three_cycles(const Triangulation& t);

/// One piece of T cut along a 3-cycle C: the faces reachable from each other
/// without crossing an edge of C.
struct CutSide {
  int faces = 0;
  /// V - E + F of the piece, with C's three vertices and three edges counted
  /// in every piece.
  int euler_characteristic = 0;
  /// True when the piece's own boundary (edges in exactly one of its faces)
  /// is exactly the three edges of C.
  bool bounded_by_cycle = false;
  /// V - E + F over the piece's own vertices and edges.
  int own_euler_characteristic = 0;
};

std::vector<CutSide> cut_along(const Triangulation& t, const Cycle3& cycle);

/// Decides whether the 3-cycle bounds a disk made of faces of T.
/// Throws std::invalid_argument if `cycle` is not a 3-cycle of G(T).
bool is_null_homotopic(const Triangulation& t, const Cycle3& cycle);

enum class RodMode {
  /// Rod iff in a nonfacial 3-cycle, on a 3-edge boundary, or a chord.
  Literal,
  /// Rod iff in a non-null-homotopic 3-cycle, or a chord. Needs S != S0.
  Agreement,
};

const char* to_string(RodMode m);
RodMode parse_rod_mode(const std::string& s);

enum RodReason : unsigned {
  kEssentialCycle = 1u << 0,
  kBoundaryCycle = 1u << 1,
  kChord = 1u << 2,
  kNonfacialCycle = 1u << 3,
};

struct EdgeClass {
  Edge edge;
  unsigned reasons = 0;

  bool is_rod() const { return reasons != 0; }
  bool is_cable() const { return reasons == 0; }
};

std::string describe_reasons(unsigned reasons);

class ModeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One entry per edge of T, in edge order. Throws ModeError for Agreement
/// mode when T caps off to the sphere.
std::vector<EdgeClass> classify_edges(const Triangulation& t, RodMode mode);

std::vector<Edge> cables(const Triangulation& t, RodMode mode);

struct CableSubgraph {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};
CableSubgraph cable_subgraph(const Triangulation& t, RodMode mode);

bool is_irreducible(const Triangulation& t, RodMode mode);

/// Vertices incident with every cable (agreement mode); empty when there is
/// no cable. Requires a closed T that is not a sphere.
std::vector<Vertex> pylonic_vertices(const Triangulation& t);
std::vector<Vertex> pylonic_vertices(std::span<const Edge> cable_set);
bool is_pylonic(const Triangulation& t);

}  // namespace punctri
