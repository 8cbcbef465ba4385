#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ventplan/comfort.hpp"
#include "ventplan/plan.hpp"
#include "ventplan/thermal.hpp"

namespace ventplan {

enum class VariableKind {
    Orientation,
    Reflection,
    OpeningOffset,
    OpeningWidth,
    OpeningHeight,
    InteriorWallPosition,
    OverhangDepth,
    FinDepth,
};

const char* to_string(VariableKind k);

struct DesignVariable {
    VariableKind kind = VariableKind::Orientation;
    std::string target;  // opening id, or "lower|upper" space pair for walls
    std::string sub;     // fins: "left"/"right"; walls: boundary axis "x"/"y"
    std::vector<double> candidates;
};

// The geometric degrees of freedom of a plan, in sweep order: orientation,
// reflection, window offset/width/height per opening id, movable interior
// walls, then shading depths. Every candidate, applied alone to this plan,
// passes validate().
std::vector<DesignVariable> extract_variables(const FloorPlan& plan,
                                              const DesignProgram& program);

double variable_value(const FloorPlan& plan, const DesignVariable& var);

// Plan with the variable set to `value`; nullopt when the geometry cannot
// absorb it (degenerate room, lost opening).
std::optional<FloorPlan> apply_variable(const FloorPlan& plan, const DesignVariable& var,
                                        double value);

struct TraceStep {
    VariableKind kind = VariableKind::Orientation;
    std::string target;
    std::string sub;
    double old_value = 0;
    double new_value = 0;
    double penalty_before = 0;
    double penalty_after = 0;
    int pass = 0;
};

struct OptimizationTrace {
    double initial_penalty = 0;
    double final_penalty = 0;
    std::vector<TraceStep> steps;
    int passes = 0;
};

using Evaluator = std::function<double(const FloorPlan&)>;

struct SweepConfig {
    int max_passes = 3;
    int jobs = 0;
};

// Greedy coordinate descent: per variable, evaluate all candidates and keep
// the best strictly improving one (ties keep the incumbent); full passes
// repeat until nothing is accepted or the pass cap is hit.
std::pair<FloorPlan, OptimizationTrace> sweep(const FloorPlan& plan,
                                              const DesignProgram& program,
                                              const std::vector<DesignVariable>& variables,
                                              const Evaluator& evaluator,
                                              const SweepConfig& cfg = {});

// Everything a sealed-mode annual evaluation needs.
struct OptimizeContext {
    const DesignProgram* program = nullptr;
    const WeatherYear* weather = nullptr;
    const ConstructionSet* constructions = nullptr;
    const OccupancyModel* schedules = nullptr;
    ComfortBand band;
    PenaltyWeights weights;
    SimConfig sim;
    int jobs = 0;
};

OptimizeContext make_optimize_context(const DesignProgram& program, const WeatherYear& weather,
                                      const ConstructionSet& constructions,
                                      const OccupancyModel& schedules);

// Annual comfort penalty with all envelope openings shut.
double sealed_penalty(const FloorPlan& plan, const OptimizeContext& ctx);

struct OptimizedDesign {
    std::string id;
    FloorPlan plan;
    OptimizationTrace trace;
    int rank = 0;  // 1 = best (lowest) sealed penalty
};

// Sweeps every design independently and ranks them by final sealed-mode
// penalty, ascending.
std::vector<OptimizedDesign> optimize_designs(
    const std::vector<std::pair<std::string, FloorPlan>>& plans, const OptimizeContext& ctx);

nlohmann::ordered_json trace_to_json(const OptimizationTrace& trace);

}  // namespace ventplan
