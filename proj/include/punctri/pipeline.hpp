#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "punctri/canon.hpp"
#include "punctri/triangulation.hpp"

namespace punctri {

class PipelineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PylonicHistogram {
  int none = 0;
  int one = 0;
  int two = 0;

  bool any_pylonic() const { return one + two > 0; }
};

/// Cable set and pylonic vertices of one closed triangulation (agreement mode).
struct CableProfile {
  std::vector<Edge> cables;
  std::vector<Vertex> pylonic;
};

CableProfile cable_profile(const Triangulation& t);

/// Representatives of the triangulations reachable from the irreducible
/// inputs by exactly n corner splittings, one per isomorphism class.
struct XiLevel {
  int n = 0;
  std::vector<Triangulation> members;
  std::vector<CableProfile> profiles;
  PylonicHistogram histogram;
};

/// Builds level 0 from irreducible inputs (deduplicated).
XiLevel make_base_level(std::span<const Triangulation> irreducibles);

/// Splits every corner of every member, then deduplicates.
XiLevel expand(const XiLevel& level);

/// Output of one removal stage: the irreducible bordered results, before
/// deduplication, and how many removals were attempted.
struct StageOutput {
  std::int64_t attempted = 0;
  std::vector<Triangulation> kept;
};

/// (i) every vertex of every irreducible closed triangulation.
StageOutput stage_remove_vertex(const XiLevel& base);
/// (ii) every pylonic vertex of every pylonic member of the given levels.
StageOutput stage_remove_pylonic(std::span<const XiLevel> levels);
/// (iii) both faces on the cable of each unique-cable member.
StageOutput stage_remove_cable_face(const XiLevel& level1);
/// (iv) a face whose sides carry the whole cable set (2 or 3 cables).
StageOutput stage_remove_cable_triangle(std::span<const XiLevel> levels);
/// (v) the cable itself, for each unique-cable member.
StageOutput stage_remove_unique_cable(const XiLevel& level1);

struct StageTally {
  std::int64_t attempted = 0;
  std::int64_t produced = 0;
  /// Classes in this stage's own output.
  int within_stage_distinct = 0;
  /// Classes not already produced by an earlier stage (in order i..v).
  int distinct = 0;
};

struct LevelSummary {
  int n = 0;
  int count = 0;
  PylonicHistogram pylonic;
};

struct StageReport {
  std::string surface;
  int input_count = 0;
  std::vector<LevelSummary> xi;
  std::array<StageTally, 5> stages{};
  int basis_count = 0;
  int merged_duplicates = 0;
  int k_effective = 0;
  int level_cap = 0;
  bool complete = true;
  int max_basis_vertices = 0;
};

inline constexpr std::array<const char*, 5> kStageNames{"i", "ii", "iii", "iv", "v"};

/// Safety cap on the number of splitting levels explored: 945 for the
/// torus, 376 for the projective plane, 1000 otherwise.
int default_level_cap(const std::string& surface);

struct BasisResult {
  std::vector<Triangulation> basis;
  StageReport report;
  std::vector<XiLevel> levels;
};

/// Irreducible triangulations of S - D from those of the closed surface S.
///
/// Levels 1 and 2 are always built; further levels are added while the
/// newest one still holds a pylonic member and level_cap allows. If the cap
/// stops the loop early the report is marked incomplete.
BasisResult punctured_basis(std::span<const Triangulation> inputs, int level_cap);

}  // namespace punctri
