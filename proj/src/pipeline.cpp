#include "punctri/pipeline.hpp"

#include <algorithm>
#include <set>

#include "punctri/homotopy.hpp"
#include "punctri/parallel.hpp"
#include "punctri/transform.hpp"

namespace punctri {

CableProfile cable_profile(const Triangulation& t) {
  CableProfile p;
  p.cables = cables(t, RodMode::Agreement);
  p.pylonic = pylonic_vertices(p.cables);
  return p;
}

namespace {

// Sphere levels have no cable profile (the agreement needs S != S0); they
// are left unprofiled.
void profile_level(XiLevel& level) {
  level.histogram = {};
  level.profiles.assign(level.members.size(), {});
  if (level.members.empty() || classify(level.members.front()).caps_to_sphere()) return;
  parallel_for(level.members.size(),
               [&](std::size_t i) { level.profiles[i] = cable_profile(level.members[i]); });
  for (const auto& p : level.profiles) {
    switch (p.pylonic.size()) {
      case 0: ++level.histogram.none; break;
      case 1: ++level.histogram.one; break;
      default: ++level.histogram.two; break;
    }
  }
}

std::string level_label(const std::string& surface, int n, std::size_t index) {
  return surface + "_xi" + std::to_string(n) + "_" + std::to_string(index);
}

// Runs `produce` for every item in parallel and concatenates the per-item
// outputs in item order.
template <typename Produce>
StageOutput collect(std::size_t items, Produce&& produce) {
  std::vector<StageOutput> parts(items);
  parallel_for(items, [&](std::size_t i) { produce(i, parts[i]); });
  StageOutput out;
  for (auto& part : parts) {
    out.attempted += part.attempted;
    for (auto& t : part.kept) out.kept.push_back(std::move(t));
  }
  return out;
}

void keep_if_irreducible(StageOutput& out, Triangulation candidate) {
  ++out.attempted;
  if (is_irreducible(candidate, RodMode::Agreement)) out.kept.push_back(std::move(candidate));
}

}  // namespace

XiLevel make_base_level(std::span<const Triangulation> irreducibles) {
  XiLevel level;
  level.n = 0;
  level.members = dedupe(irreducibles);
  profile_level(level);
  return level;
}

XiLevel expand(const XiLevel& level) {
  std::vector<std::vector<CanonicalKey>> keys(level.members.size());
  parallel_for(level.members.size(), [&](std::size_t i) {
    const Triangulation& t = level.members[i];
    for (const Corner& c : corners(t)) keys[i].push_back(canonical_key(split_corner(t, c)));
    std::sort(keys[i].begin(), keys[i].end());
    keys[i].erase(std::unique(keys[i].begin(), keys[i].end()), keys[i].end());
  });
  std::set<CanonicalKey> merged;
  for (auto& part : keys) {
    for (auto& k : part) merged.insert(std::move(k));
    part.clear();
  }

  XiLevel next;
  next.n = level.n + 1;
  const std::string surface =
      level.members.empty() ? std::string("T") : classify(level.members.front()).name;
  std::size_t index = 0;
  for (const auto& k : merged) next.members.push_back(k.to_triangulation(level_label(surface, next.n, index++)));
  profile_level(next);
  return next;
}

StageOutput stage_remove_vertex(const XiLevel& base) {
  return collect(base.members.size(), [&](std::size_t i, StageOutput& out) {
    const Triangulation& t = base.members[i];
    for (Vertex v = 0; v < t.vertex_count(); ++v) keep_if_irreducible(out, remove_vertex(t, v));
  });
}

StageOutput stage_remove_pylonic(std::span<const XiLevel> levels) {
  StageOutput all;
  for (const XiLevel& level : levels) {
    auto part = collect(level.members.size(), [&](std::size_t i, StageOutput& out) {
      for (Vertex v : level.profiles[i].pylonic) keep_if_irreducible(out, remove_vertex(level.members[i], v));
    });
    all.attempted += part.attempted;
    for (auto& t : part.kept) all.kept.push_back(std::move(t));
  }
  return all;
}

StageOutput stage_remove_cable_face(const XiLevel& level1) {
  return collect(level1.members.size(), [&](std::size_t i, StageOutput& out) {
    const auto& cable_set = level1.profiles[i].cables;
    if (cable_set.size() != 1) return;
    const Triangulation& t = level1.members[i];
    const Edge e = cable_set.front();
    for (int f : t.edge_faces(t.edge_index(e.a, e.b))) {
      if (f >= 0) keep_if_irreducible(out, remove_face(t, t.faces()[f]));
    }
  });
}

StageOutput stage_remove_cable_triangle(std::span<const XiLevel> levels) {
  StageOutput all;
  for (const XiLevel& level : levels) {
    auto part = collect(level.members.size(), [&](std::size_t i, StageOutput& out) {
      const auto& cable_set = level.profiles[i].cables;
      if (cable_set.size() != 2 && cable_set.size() != 3) return;
      const Triangulation& t = level.members[i];
      for (const Face& f : t.faces()) {
        const Edge sides[3] = {Edge(f[0], f[1]), Edge(f[0], f[2]), Edge(f[1], f[2])};
        const bool covers = std::all_of(cable_set.begin(), cable_set.end(), [&](const Edge& c) {
          return std::find(std::begin(sides), std::end(sides), c) != std::end(sides);
        });
        if (covers) keep_if_irreducible(out, remove_face(t, f));
      }
    });
    all.attempted += part.attempted;
    for (auto& t : part.kept) all.kept.push_back(std::move(t));
  }
  return all;
}

StageOutput stage_remove_unique_cable(const XiLevel& level1) {
  return collect(level1.members.size(), [&](std::size_t i, StageOutput& out) {
    const auto& cable_set = level1.profiles[i].cables;
    if (cable_set.size() != 1) return;
    keep_if_irreducible(out, remove_cable(level1.members[i], cable_set.front()));
  });
}

int default_level_cap(const std::string& surface) {
  if (surface == "S1") return 945;
  if (surface == "N1") return 376;
  return 1000;
}

BasisResult punctured_basis(std::span<const Triangulation> inputs, int level_cap) {
  if (inputs.empty()) throw PipelineError("no input triangulations");
  const SurfaceClass surface = classify(inputs.front());
  if (!surface.closed()) throw PipelineError("inputs must be closed triangulations");
  if (surface.caps_to_sphere()) throw PipelineError("the sphere has no punctured basis to compute");
  for (const Triangulation& t : inputs) {
    const SurfaceClass c = classify(t);
    if (c.name != surface.name) {
      throw PipelineError("mixed surfaces in input: " + surface.name + " and " + c.name);
    }
    if (!is_irreducible(t, RodMode::Agreement)) {
      throw PipelineError("input " + (t.label().empty() ? std::string("?") : t.label()) +
                          " is not irreducible");
    }
  }
  if (level_cap < 1) throw PipelineError("level cap must be at least 1");

  BasisResult result;
  StageReport& report = result.report;
  report.surface = surface.name;
  report.input_count = static_cast<int>(inputs.size());
  report.level_cap = level_cap;

  auto& levels = result.levels;
  levels.push_back(make_base_level(inputs));
  levels.push_back(expand(levels.back()));
  levels.push_back(expand(levels.back()));
  while (levels.back().histogram.any_pylonic() && levels.back().n < level_cap) {
    levels.push_back(expand(levels.back()));
  }
  report.complete = !levels.back().histogram.any_pylonic();
  for (const XiLevel& level : levels) {
    report.xi.push_back({level.n, static_cast<int>(level.members.size()), level.histogram});
    if (level.histogram.any_pylonic()) report.k_effective = level.n;
  }

  const std::span<const XiLevel> split_levels(levels.begin() + 1, levels.end());
  std::array<StageOutput, 5> outputs{
      stage_remove_vertex(levels[0]),
      stage_remove_pylonic(split_levels),
      stage_remove_cable_face(levels[1]),
      stage_remove_cable_triangle(split_levels.first(2)),
      stage_remove_unique_cable(levels[1]),
  };

  std::set<CanonicalKey> seen;
  std::vector<Triangulation> everything;
  for (std::size_t s = 0; s < outputs.size(); ++s) {
    StageTally& tally = report.stages[s];
    tally.attempted = outputs[s].attempted;
    tally.produced = static_cast<std::int64_t>(outputs[s].kept.size());
    const auto classes = dedupe_keyed(outputs[s].kept);
    tally.within_stage_distinct = static_cast<int>(classes.size());
    for (const auto& k : classes) {
      if (seen.insert(k.key).second) {
        ++tally.distinct;
        everything.push_back(k.triangulation);
      }
    }
  }

  result.basis = dedupe(everything);
  const std::string name = surface.name + "-D";
  for (std::size_t i = 0; i < result.basis.size(); ++i) {
    result.basis[i] = result.basis[i].with_label(name + "_" + std::to_string(i));
    report.max_basis_vertices = std::max(report.max_basis_vertices, result.basis[i].vertex_count());
  }
  report.basis_count = static_cast<int>(result.basis.size());
  int within = 0;
  for (const auto& tally : report.stages) within += tally.within_stage_distinct;
  report.merged_duplicates = within - report.basis_count;
  return result;
}

}  // namespace punctri
