#include "ventplan/project.hpp"

#include "ventplan/errors.hpp"
#include "ventplan/io_util.hpp"

namespace ventplan {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string string_field(const ordered_json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw ConfigError(std::string("missing field \"") + name + "\"");
    if (!it->is_string())
        throw ConfigError(std::string("field \"") + name + "\" must be a string");
    return it->get<std::string>();
}

template <typename T>
T get_or(const ordered_json& j, const char* name, T fallback) {
    auto it = j.find(name);
    if (it == j.end()) return fallback;
    if constexpr (std::is_same_v<T, bool>) {
        if (!it->is_boolean())
            throw ConfigError(std::string("field \"") + name + "\" must be a boolean");
    } else if constexpr (std::is_same_v<T, std::string>) {
        if (!it->is_string())
            throw ConfigError(std::string("field \"") + name + "\" must be a string");
    } else {
        if (!it->is_number())
            throw ConfigError(std::string("field \"") + name + "\" must be a number");
    }
    return it->get<T>();
}

}  // namespace

Project project_from_json(const ordered_json& j, const std::filesystem::path& base_dir) {
    if (!j.is_object()) throw ConfigError("project must be a JSON object");
    if (string_field(j, "schema") != kProjectSchema)
        throw ConfigError("schema mismatch: expected \"" + std::string(kProjectSchema) + "\"");

    Project p;
    p.root = base_dir;
    p.program_path = base_dir / string_field(j, "program");
    p.weather_path = base_dir / string_field(j, "weather");
    p.output_dir = base_dir / get_or<std::string>(j, "output_dir", std::string("out"));
    p.seed = get_or<std::uint64_t>(j, "seed", 1);
    p.jobs = get_or<int>(j, "jobs", 0);

    if (auto it = j.find("search"); it != j.end()) {
        if (!it->is_object()) throw ConfigError("field \"search\" must be an object");
        p.search.population_size = get_or(*it, "population_size", p.search.population_size);
        p.search.offspring_per_parent =
            get_or(*it, "offspring_per_parent", p.search.offspring_per_parent);
        p.search.generations = get_or(*it, "generations", p.search.generations);
        p.search.ls_moves_per_individual =
            get_or(*it, "ls_moves_per_individual", p.search.ls_moves_per_individual);
        p.search.target_count = get_or(*it, "target_count", p.search.target_count);
    }
    if (auto it = j.find("optimizer"); it != j.end()) {
        if (!it->is_object()) throw ConfigError("field \"optimizer\" must be an object");
        p.sweep.max_passes = get_or(*it, "max_passes", p.sweep.max_passes);
    }
    if (auto it = j.find("sim"); it != j.end()) {
        if (!it->is_object()) throw ConfigError("field \"sim\" must be an object");
        p.sim.substeps = get_or(*it, "substeps", p.sim.substeps);
        p.sim.warmup_hours = get_or(*it, "warmup_hours", p.sim.warmup_hours);
        p.sim.capacitance_multiplier =
            get_or(*it, "capacitance_multiplier", p.sim.capacitance_multiplier);
    }

    p.search.seed = p.seed;
    p.search.jobs = p.jobs;
    p.sweep.jobs = p.jobs;
    return p;
}

nlohmann::ordered_json project_to_json(const Project& p) {
    ordered_json j;
    j["schema"] = kProjectSchema;
    j["program"] = p.program_path.lexically_relative(p.root).generic_string();
    j["weather"] = p.weather_path.lexically_relative(p.root).generic_string();
    j["output_dir"] = p.output_dir.lexically_relative(p.root).generic_string();
    j["seed"] = p.seed;
    j["search"] = ordered_json{{"population_size", p.search.population_size},
                               {"offspring_per_parent", p.search.offspring_per_parent},
                               {"generations", p.search.generations},
                               {"ls_moves_per_individual", p.search.ls_moves_per_individual},
                               {"target_count", p.search.target_count}};
    j["optimizer"] = ordered_json{{"max_passes", p.sweep.max_passes}};
    j["sim"] = ordered_json{{"substeps", p.sim.substeps},
                            {"warmup_hours", p.sim.warmup_hours},
                            {"capacitance_multiplier", p.sim.capacitance_multiplier}};
    j["jobs"] = p.jobs;
    return j;
}

Project load_project(const std::filesystem::path& path) {
    ordered_json j;
    try {
        j = ordered_json::parse(read_text_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("cannot parse " + path.string() + ": " + e.what());
    }
    Project p;
    try {
        p = project_from_json(j, path.parent_path());
    } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    if (!std::filesystem::exists(p.program_path))
        throw ConfigError("program file not found: " + p.program_path.string());
    if (!std::filesystem::exists(p.weather_path))
        throw ConfigError("weather file not found: " + p.weather_path.string());
    return p;
}

}  // namespace ventplan
