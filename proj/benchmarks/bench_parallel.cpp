#include <benchmark/benchmark.h>

#include <cmath>

#include "ventplan/generator.hpp"
#include "ventplan/optimizer.hpp"
#include "ventplan/scenarios.hpp"

// Serial reference path (jobs=1) vs OpenMP (jobs=0) for the three hot loops:
// generator offspring, optimizer candidates, the design x scenario matrix.

namespace {

using namespace ventplan;

WeatherYear synthetic_weather() {
    WeatherYear wy;
    wy.location = {41.2, -8.6, 0.0, 70.0};
    wy.records.resize(8760);
    for (int h = 0; h < 8760; ++h) {
        int day = h / 24;
        double hour = h % 24;
        double seasonal = 14.0 + 6.0 * std::cos(2 * M_PI * (day - 200) / 365.0);
        double diurnal = 4.5 * std::cos(2 * M_PI * (hour - 15.0) / 24.0);
        auto& r = wy.records[h];
        r.dry_bulb = seasonal + diurnal;
        r.direct_normal = (hour >= 8 && hour <= 18) ? 450.0 : 0.0;
        r.diffuse_horizontal = (hour >= 7 && hour <= 19) ? 110.0 : 0.0;
        r.wind_speed = 3.0;
    }
    return wy;
}

FloorPlan bench_plan() {
    FloorPlan p;
    p.spaces = {
        {"hall", SpaceFunction::Hall, {0, 0, 2, 3}, 2.7},
        {"living_room", SpaceFunction::LivingRoom, {2, 0, 4, 3}, 2.7},
        {"kitchen", SpaceFunction::Kitchen, {0, 3, 3, 3}, 2.7},
        {"bedroom", SpaceFunction::Bedroom, {3, 3, 3, 3}, 2.7},
    };
    p.openings = {
        {"entry", OpeningKind::ExteriorDoor, "hall", Side::South, 0.6, 0.9, 2.0, 0.0, {}},
        {"win_living", OpeningKind::Window, "living_room", Side::South, 1.0, 1.8, 1.1, 0.9, {}},
        {"win_kitchen", OpeningKind::Window, "kitchen", Side::West, 1.0, 1.2, 1.1, 0.9, {}},
        {"win_bedroom", OpeningKind::Window, "bedroom", Side::East, 1.0, 1.2, 1.1, 0.9, {}},
        {"door_living", OpeningKind::InteriorDoor, "hall", Side::East, 1.0, 0.8, 2.0, 0.0,
         "living_room"},
        {"door_kitchen", OpeningKind::InteriorDoor, "kitchen", Side::South, 0.5, 0.8, 2.0, 0.0,
         "hall"},
        {"door_bedroom", OpeningKind::InteriorDoor, "bedroom", Side::West, 1.0, 0.8, 2.0, 0.0,
         "kitchen"},
    };
    return p;
}

DesignProgram bench_program() {
    DesignProgram p;
    p.required_spaces = {
        {SpaceFunction::Hall, 1, 4.0, 0.0},
        {SpaceFunction::LivingRoom, 1, 12.0, 1.2},
        {SpaceFunction::Kitchen, 1, 6.0, 0.9},
        {SpaceFunction::Bedroom, 1, 9.0, 1.0},
    };
    p.connectivity = {{SpaceFunction::Hall, SpaceFunction::LivingRoom},
                      {SpaceFunction::Hall, SpaceFunction::Kitchen},
                      {SpaceFunction::Hall, SpaceFunction::Bedroom}};
    p.max_construction_area = 60.0;
    return p;
}

struct Fixture {
    WeatherYear weather = synthetic_weather();
    DesignProgram program = bench_program();
    FloorPlan plan = bench_plan();
    ConstructionSet constructions = builtin_constructions();
    OccupancyModel schedules = builtin_schedules();

    OptimizeContext context() const {
        return make_optimize_context(program, weather, constructions, schedules);
    }
};

const Fixture& fixture() {
    static Fixture f;
    return f;
}

void BM_GeneratorOffspring(benchmark::State& state) {
    SearchConfig cfg;
    cfg.population_size = 8;
    cfg.offspring_per_parent = 4;
    cfg.generations = 60;
    cfg.ls_moves_per_individual = 300;
    cfg.seed = 11;
    cfg.target_count = 4;
    cfg.jobs = static_cast<int>(state.range(0));
    for (auto _ : state) {
        EpsapResult r = run_epsap(fixture().program, cfg);
        benchmark::DoNotOptimize(r.designs.size());
    }
}
BENCHMARK(BM_GeneratorOffspring)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_OptimizerCandidates(benchmark::State& state) {
    const Fixture& f = fixture();
    OptimizeContext ctx = f.context();
    DesignVariable orient;
    orient.kind = VariableKind::Orientation;
    for (int i = 0; i < 8; ++i) orient.candidates.push_back(45.0 * i);
    SweepConfig cfg;
    cfg.max_passes = 1;
    cfg.jobs = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto [best, trace] = sweep(
            f.plan, f.program, {orient},
            [&](const FloorPlan& p) { return sealed_penalty(p, ctx); }, cfg);
        benchmark::DoNotOptimize(trace.final_penalty);
    }
}
BENCHMARK(BM_OptimizerCandidates)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_ScenarioMatrix(benchmark::State& state) {
    const Fixture& f = fixture();
    OptimizeContext ctx = f.context();
    ctx.jobs = static_cast<int>(state.range(0));
    FloorPlan rotated = f.plan;
    rotated.orientation = 90.0;
    std::vector<std::pair<std::string, FloorPlan>> designs = {{"a", f.plan}, {"b", rotated}};
    auto scenarios = builtin_scenarios();
    for (auto _ : state) {
        ScenarioMatrix m = run_experiment(designs, scenarios, ctx);
        benchmark::DoNotOptimize(m.best_design);
    }
}
BENCHMARK(BM_ScenarioMatrix)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
