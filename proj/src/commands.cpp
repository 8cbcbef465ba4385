#include "ventplan/commands.hpp"

#include <cstdio>
#include <ctime>
#include <sstream>

#include "ventplan/errors.hpp"
#include "ventplan/io_util.hpp"
#include "ventplan/plan_io.hpp"
#include "ventplan/svg.hpp"

namespace ventplan {

namespace {

using ordered_json = nlohmann::ordered_json;

std::filesystem::path plans_dir(const Project& p) { return p.output_dir / "plans"; }
std::filesystem::path optimized_dir(const Project& p) { return p.output_dir / "optimized"; }
std::filesystem::path compare_dir(const Project& p) { return p.output_dir / "compare"; }
std::filesystem::path svg_dir(const Project& p) { return p.output_dir / "svg"; }

// Timestamps live only here so every other artifact is reproducible.
void write_run_meta(const Project& p, const std::string& command) {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm);
    ordered_json j;
    j["schema"] = "runmeta/1";
    j["command"] = command;
    j["seed"] = p.seed;
    j["finished_at"] = stamp;
    write_text_atomic(p.output_dir / "run_meta.json", to_json_text(j));
}

std::string design_id(int index) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "design_%02d", index + 1);
    return buf;
}

ordered_json load_index(const std::filesystem::path& path, const char* schema,
                        const char* hint) {
    if (!std::filesystem::exists(path))
        throw ConfigError("index not found: " + path.string() + " (" + hint + ")");
    ordered_json j;
    try {
        j = ordered_json::parse(read_text_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("cannot parse " + path.string() + ": " + e.what());
    }
    if (!j.is_object() || j.value("schema", "") != schema)
        throw ConfigError(path.string() + ": expected schema \"" + schema + "\"");
    return j;
}

std::vector<std::pair<std::string, FloorPlan>> load_indexed_plans(
    const std::filesystem::path& dir, const char* schema, const char* hint) {
    ordered_json index = load_index(dir / "index.json", schema, hint);
    std::vector<std::pair<std::string, FloorPlan>> out;
    for (const auto& d : index.at("designs")) {
        std::string id = d.at("id").get<std::string>();
        std::string file = d.at("file").get<std::string>();
        out.emplace_back(id, load_floorplan(dir / file));
    }
    return out;
}

std::string fmt1(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

}  // namespace

GenerateOutput cmd_generate(const Project& project) {
    DesignProgram program = load_program(project.program_path);
    EpsapResult result = run_epsap(program, project.search);

    GenerateOutput out;
    out.generations_run = result.generations_run;

    ordered_json index;
    index["schema"] = "planindex/1";
    index["seed"] = project.seed;
    index["ranking"] = "total floor area ascending (most compact first)";
    index["designs"] = ordered_json::array();

    for (size_t i = 0; i < result.designs.size(); ++i) {
        const FloorPlan& plan = result.designs[i];
        std::string id = design_id(static_cast<int>(i));
        std::string file = id + ".json";
        save_floorplan(plan, plans_dir(project) / file);
        index["designs"].push_back(
            ordered_json{{"id", id},
                         {"file", file},
                         {"fingerprint", fingerprint(plan)},
                         {"design_penalty", design_penalty(plan, program).total},
                         {"floor_area", plan.total_floor_area()}});
        out.ids.push_back(id);
    }
    write_text_atomic(plans_dir(project) / "index.json", to_json_text(index));
    write_run_meta(project, "generate");
    return out;
}

OptimizeOutput cmd_optimize(const Project& project) {
    DesignProgram program = load_program(project.program_path);
    auto plans = load_indexed_plans(plans_dir(project), "planindex/1", "run generate first");

    WeatherYear weather = load_epw(project.weather_path);
    ConstructionSet constructions = builtin_constructions();
    OccupancyModel schedules = builtin_schedules();
    OptimizeContext ctx = make_optimize_context(program, weather, constructions, schedules);
    ctx.sim = project.sim;
    ctx.jobs = project.jobs;

    std::vector<OptimizedDesign> designs = optimize_designs(plans, ctx);

    ordered_json index;
    index["schema"] = "optindex/1";
    index["seed"] = project.seed;
    index["designs"] = ordered_json::array();

    std::ostringstream ranking;
    ranking << "rank,design,initial_penalty,final_penalty,accepted_steps,passes\n";

    OptimizeOutput out;
    for (const auto& d : designs) {
        std::string file = d.id + ".json";
        std::string trace_file = d.id + "_trace.json";
        save_floorplan(d.plan, optimized_dir(project) / file);
        write_text_atomic(optimized_dir(project) / trace_file, to_json_text(trace_to_json(d.trace)));
        index["designs"].push_back(ordered_json{{"id", d.id},
                                                {"file", file},
                                                {"rank", d.rank},
                                                {"initial_penalty", d.trace.initial_penalty},
                                                {"final_penalty", d.trace.final_penalty},
                                                {"trace", trace_file}});
        ranking << d.rank << ',' << d.id << ',' << fmt1(d.trace.initial_penalty) << ','
                << fmt1(d.trace.final_penalty) << ',' << d.trace.steps.size() << ','
                << d.trace.passes << '\n';
        out.ids.push_back(d.id);
    }
    write_text_atomic(optimized_dir(project) / "index.json", to_json_text(index));
    write_text_atomic(optimized_dir(project) / "ranking.csv", ranking.str());
    write_run_meta(project, "optimize");
    return out;
}

ScenarioMatrix cmd_compare(const Project& project, const std::string& scenario_filter) {
    DesignProgram program = load_program(project.program_path);
    auto plans =
        load_indexed_plans(optimized_dir(project), "optindex/1", "run optimize first");

    std::vector<VentilationScenario> scenarios = builtin_scenarios();
    if (!scenario_filter.empty()) {
        std::vector<VentilationScenario> kept;
        for (const auto& s : scenarios)
            if (s.sealed || s.name == scenario_filter) kept.push_back(s);
        if (kept.size() < 2)
            throw ConfigError("unknown scenario \"" + scenario_filter + "\"");
        scenarios = std::move(kept);
    }

    WeatherYear weather = load_epw(project.weather_path);
    ConstructionSet constructions = builtin_constructions();
    OccupancyModel schedules = builtin_schedules();
    OptimizeContext ctx = make_optimize_context(program, weather, constructions, schedules);
    ctx.sim = project.sim;
    ctx.jobs = project.jobs;

    ScenarioMatrix matrix = run_experiment(plans, scenarios, ctx);

    write_text_atomic(compare_dir(project) / "matrix.csv", matrix_to_csv(matrix));
    write_text_atomic(compare_dir(project) / "matrix.txt", matrix_to_text(matrix));

    std::ostringstream shares;
    shares << "design,scenario,benefit_share_may_to_october\n";
    for (size_t d = 0; d < matrix.design_ids.size(); ++d) {
        write_text_atomic(compare_dir(project) / ("daily_" + matrix.design_ids[d] + ".csv"),
                          daily_difference_csv(matrix, d));
        const auto& ref = matrix.cells[d][static_cast<size_t>(matrix.reference_column)];
        for (size_t s = 0; s < matrix.scenario_names.size(); ++s) {
            if (static_cast<int>(s) == matrix.reference_column) continue;
            auto diff = daily_difference_series(matrix.cells[d][s], ref);
            auto share = seasonal_benefit_share(diff, kMayThroughOctober);
            shares << matrix.design_ids[d] << ',' << matrix.scenario_names[s] << ',';
            if (share) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.4f", *share);
                shares << buf;
            } else {
                shares << "undefined";
            }
            shares << '\n';
        }
    }
    write_text_atomic(compare_dir(project) / "seasonal_shares.csv", shares.str());
    write_run_meta(project, "compare");
    return matrix;
}

int cmd_render(const Project& project) {
    DesignProgram program = load_program(project.program_path);
    int written = 0;

    if (std::filesystem::exists(plans_dir(project) / "index.json")) {
        auto plans = load_indexed_plans(plans_dir(project), "planindex/1", "run generate first");
        for (const auto& [id, plan] : plans) {
            SvgOptions opts;
            opts.design_id = id;
            opts.design_penalty = design_penalty(plan, program).total;
            write_text_atomic(svg_dir(project) / (id + ".svg"), render_svg(plan, opts));
            ++written;
        }
    }

    if (std::filesystem::exists(optimized_dir(project) / "index.json")) {
        ordered_json index =
            load_index(optimized_dir(project) / "index.json", "optindex/1", "run optimize first");
        for (const auto& d : index.at("designs")) {
            std::string id = d.at("id").get<std::string>();
            FloorPlan plan =
                load_floorplan(optimized_dir(project) / d.at("file").get<std::string>());
            SvgOptions opts;
            opts.design_id = id + " (optimized, rank " +
                             std::to_string(d.at("rank").get<int>()) + ")";
            opts.design_penalty = design_penalty(plan, program).total;
            opts.sealed_penalty = d.at("final_penalty").get<double>();
            write_text_atomic(svg_dir(project) / (id + "_optimized.svg"),
                              render_svg(plan, opts));
            ++written;
        }
    }

    if (written == 0)
        throw ConfigError("nothing to render under " + project.output_dir.string() +
                          " (run generate first)");
    write_run_meta(project, "render");
    return written;
}

void cmd_all(const Project& project, const std::string& scenario_filter) {
    cmd_generate(project);
    cmd_optimize(project);
    cmd_compare(project, scenario_filter);
    cmd_render(project);
    write_run_meta(project, "all");
}

}  // namespace ventplan
