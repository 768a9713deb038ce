#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "punctri/triangulation.hpp"

namespace punctri {

/// Target closed surface for the exhaustive search.
struct ClosedTarget {
  int euler_characteristic = 2;
  bool orientable = true;

  static ClosedTarget from_name(const std::string& name);
  std::string name() const { return closed_surface_name(euler_characteristic, orientable); }
};

struct EnumerateOptions {
  int max_vertices = 0;
  /// Drop reducible leaves before isomorph rejection.
  bool irreducible_only = false;
};

struct EnumerationStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t accepted_leaves = 0;
};

/// Every closed triangulation of `target` with at most max_vertices
/// vertices, one per isomorphism class, sorted by canonical key.
///
/// Grows a complex from the seed face {0,1,2}, always closing the
/// lexicographically least edge that lies in a single face. The closing face
/// takes an existing vertex or the next unused id. Partial complexes are
/// kept simplicial with every vertex link a disjoint union of paths (or one
/// full cycle), and pruned on the face count a closed surface of the target
/// type can reach. For orientable targets faces are oriented as they are
/// glued and incoherent gluings are cut.
std::vector<Triangulation> enumerate_closed(const ClosedTarget& target,
                                            const EnumerateOptions& options,
                                            EnumerationStats* stats = nullptr);

struct FilterReport {
  std::vector<Triangulation> kept;
  /// Labels (or indices) of inputs where the agreement-mode verdict and the
  /// literal no-contractible-edge verdict disagree.
  std::vector<std::string> discrepancies;
};

/// Keeps the triangulations all of whose edges lie in a non-null-homotopic
/// 3-cycle, and cross-checks each verdict against direct contraction of
/// every edge.
FilterReport irreducible_filter(std::span<const Triangulation> items);

/// True iff no edge of t can be contracted to a triangulation of the same
/// surface.
bool no_contractible_edge(const Triangulation& t);

}  // namespace punctri
