#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "ventplan/plan.hpp"

namespace ventplan {

using ordered_json = nlohmann::ordered_json;

// Schema tags written into every file, bumped on breaking layout changes.
inline constexpr const char* kFloorPlanSchema = "floorplan/1";
inline constexpr const char* kDesignProgramSchema = "designprogram/1";

ordered_json floorplan_to_json(const FloorPlan& plan);
FloorPlan floorplan_from_json(const ordered_json& j);

ordered_json program_to_json(const DesignProgram& program);
DesignProgram program_from_json(const ordered_json& j);

// Canonical text form (2-space indent, trailing newline); save-then-load is an
// identity and load-then-save reproduces the file byte for byte.
std::string to_json_text(const ordered_json& j);

FloorPlan load_floorplan(const std::filesystem::path& path);
void save_floorplan(const FloorPlan& plan, const std::filesystem::path& path);

DesignProgram load_program(const std::filesystem::path& path);
void save_program(const DesignProgram& program, const std::filesystem::path& path);

ordered_json parse_json_file(const std::filesystem::path& path);

}  // namespace ventplan
