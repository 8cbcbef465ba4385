#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "ventplan/generator.hpp"
#include "ventplan/optimizer.hpp"
#include "ventplan/thermal.hpp"

namespace ventplan {

inline constexpr const char* kProjectSchema = "project/1";

// Everything a pipeline run needs, loaded from one JSON file. Paths are
// resolved against the project file's directory.
struct Project {
    std::filesystem::path root;
    std::filesystem::path program_path;
    std::filesystem::path weather_path;
    std::filesystem::path output_dir;
    std::uint64_t seed = 1;
    SearchConfig search;
    SweepConfig sweep;
    SimConfig sim;
    int jobs = 0;
};

Project project_from_json(const nlohmann::ordered_json& j,
                          const std::filesystem::path& base_dir);
nlohmann::ordered_json project_to_json(const Project& p);

// Loads and checks that the referenced program and weather files exist.
Project load_project(const std::filesystem::path& path);

}  // namespace ventplan
