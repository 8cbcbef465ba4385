#include <cstdio>
#include <exception>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ventplan/commands.hpp"
#include "ventplan/errors.hpp"

namespace {

struct Options {
    std::string project_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<int> jobs;
    std::string scenario;
};

ventplan::Project load(const Options& opt) {
    ventplan::Project p = ventplan::load_project(opt.project_path);
    if (!opt.out_dir.empty()) p.output_dir = opt.out_dir;
    if (opt.seed) {
        p.seed = *opt.seed;
        p.search.seed = *opt.seed;
    }
    if (opt.jobs) {
        p.jobs = *opt.jobs;
        p.search.jobs = *opt.jobs;
        p.sweep.jobs = *opt.jobs;
    }
    return p;
}

int run(const std::string& command, const Options& opt) {
    ventplan::Project project = load(opt);
    if (command == "generate") {
        auto out = ventplan::cmd_generate(project);
        std::printf("generated %zu plans in %d generations -> %s\n", out.ids.size(),
                    out.generations_run, (project.output_dir / "plans").c_str());
    } else if (command == "optimize") {
        auto out = ventplan::cmd_optimize(project);
        std::printf("optimized %zu plans -> %s\n", out.ids.size(),
                    (project.output_dir / "optimized").c_str());
    } else if (command == "compare") {
        auto matrix = ventplan::cmd_compare(project, opt.scenario);
        std::fputs(ventplan::matrix_to_text(matrix).c_str(), stdout);
        std::printf("reports -> %s\n", (project.output_dir / "compare").c_str());
    } else if (command == "render") {
        int n = ventplan::cmd_render(project);
        std::printf("rendered %d SVG files -> %s\n", n, (project.output_dir / "svg").c_str());
    } else if (command == "all") {
        ventplan::cmd_all(project, opt.scenario);
        std::printf("pipeline finished -> %s\n", project.output_dir.c_str());
    }
    return ventplan::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generative building design with natural ventilation analysis"};
    app.require_subcommand(1);

    Options opt;
    std::string command;
    for (const char* name : {"generate", "optimize", "compare", "render", "all"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--project", opt.project_path, "project JSON file")->required();
        sub->add_option("--out", opt.out_dir, "output directory override");
        sub->add_option("--seed", opt.seed, "RNG seed override");
        sub->add_option("--jobs", opt.jobs, "worker threads (0 = all, 1 = serial)");
        if (std::string(name) == "compare" || std::string(name) == "all")
            sub->add_option("--scenario", opt.scenario, "keep only this ventilation scenario");
        sub->callback([&command, name] { command = name; });
    }

    CLI11_PARSE(app, argc, argv);

    try {
        return run(command, opt);
    } catch (const ventplan::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return ventplan::kExitConfig;
    } catch (const ventplan::ParseError& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return ventplan::kExitConfig;
    } catch (const ventplan::InfeasibleProgramError& e) {
        std::fprintf(stderr, "infeasible program: %s\n", e.what());
        return ventplan::kExitInfeasible;
    } catch (const ventplan::SimulationError& e) {
        std::fprintf(stderr, "simulation error: %s\n", e.what());
        return ventplan::kExitSimulation;
    } catch (const ventplan::IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return ventplan::kExitIo;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
