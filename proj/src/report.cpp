#include "punctri/report.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace punctri {

std::string report_json(const StageReport& report) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["surface"] = report.surface;
  j["input_count"] = report.input_count;
  ordered_json xi = ordered_json::array();
  for (const auto& level : report.xi) {
    xi.push_back({{"n", level.n},
                  {"count", level.count},
                  {"pylonic",
                   {{"none", level.pylonic.none}, {"one", level.pylonic.one}, {"two", level.pylonic.two}}}});
  }
  j["xi"] = xi;
  ordered_json stages = ordered_json::object();
  for (std::size_t s = 0; s < report.stages.size(); ++s) {
    const StageTally& t = report.stages[s];
    stages[kStageNames[s]] = {{"attempted", t.attempted},
                              {"produced", t.produced},
                              {"within_stage_distinct", t.within_stage_distinct},
                              {"distinct", t.distinct}};
  }
  j["stages"] = stages;
  j["merged_duplicates"] = report.merged_duplicates;
  j["basis_count"] = report.basis_count;
  j["max_basis_vertices"] = report.max_basis_vertices;
  j["k_effective"] = report.k_effective;
  j["level_cap"] = report.level_cap;
  j["complete"] = report.complete;
  return j.dump(2) + "\n";
}

void save_report(const std::filesystem::path& path, const StageReport& report) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << report_json(report);
}

}  // namespace punctri
