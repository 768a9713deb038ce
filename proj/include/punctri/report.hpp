#pragma once

#include <filesystem>
#include <string>

#include "punctri/pipeline.hpp"

namespace punctri {

/// Pretty-printed JSON for a stage report (stable key order).
std::string report_json(const StageReport& report);
void save_report(const std::filesystem::path& path, const StageReport& report);

}  // namespace punctri
