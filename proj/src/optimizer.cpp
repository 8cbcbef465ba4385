#include "ventplan/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ventplan/errors.hpp"
#include "ventplan/parallel.hpp"

namespace ventplan {

namespace {

double snap(double v) { return std::round(v * 10.0) / 10.0; }

std::vector<double> linspace_snapped(double lo, double hi, int n) {
    std::vector<double> out;
    if (hi < lo) return out;
    for (int i = 0; i < n; ++i) {
        double v = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
        v = snap(v);
        if (out.empty() || std::abs(out.back() - v) > 1e-9) out.push_back(v);
    }
    return out;
}

bool plan_valid(const FloorPlan& plan, const DesignProgram& program) {
    return validate(plan, program).empty();
}

// Movable boundary between two spaces sharing a full or partial edge.
struct SharedWall {
    std::string lower;  // space on the smaller-coordinate side
    std::string upper;
    std::string axis;  // "x" = vertical boundary, "y" = horizontal
    double coord = 0;
};

std::vector<SharedWall> shared_walls(const FloorPlan& plan) {
    std::vector<SharedWall> out;
    for (size_t i = 0; i < plan.spaces.size(); ++i) {
        for (size_t j = 0; j < plan.spaces.size(); ++j) {
            if (i == j) continue;
            const Space& a = plan.spaces[i];
            const Space& b = plan.spaces[j];
            if (shared_interval(a.rect, b.rect, Side::East).length() > kCoincidenceEps)
                out.push_back({a.id, b.id, "x", a.rect.right()});
            if (shared_interval(a.rect, b.rect, Side::North).length() > kCoincidenceEps)
                out.push_back({a.id, b.id, "y", a.rect.top()});
        }
    }
    std::sort(out.begin(), out.end(), [](const SharedWall& a, const SharedWall& b) {
        if (a.lower != b.lower) return a.lower < b.lower;
        if (a.upper != b.upper) return a.upper < b.upper;
        return a.axis < b.axis;
    });
    return out;
}

}  // namespace

const char* to_string(VariableKind k) {
    switch (k) {
        case VariableKind::Orientation: return "orientation";
        case VariableKind::Reflection: return "reflection";
        case VariableKind::OpeningOffset: return "opening_offset";
        case VariableKind::OpeningWidth: return "opening_width";
        case VariableKind::OpeningHeight: return "opening_height";
        case VariableKind::InteriorWallPosition: return "interior_wall_position";
        case VariableKind::OverhangDepth: return "overhang_depth";
        case VariableKind::FinDepth: return "fin_depth";
    }
    return "?";
}

double variable_value(const FloorPlan& plan, const DesignVariable& var) {
    switch (var.kind) {
        case VariableKind::Orientation:
            return plan.orientation;
        case VariableKind::Reflection:
            return plan.reflected ? 1.0 : 0.0;
        case VariableKind::OpeningOffset:
        case VariableKind::OpeningWidth:
        case VariableKind::OpeningHeight: {
            const Opening* op = plan.find_opening(var.target);
            if (!op) throw ConfigError("variable targets missing opening " + var.target);
            if (var.kind == VariableKind::OpeningOffset) return op->offset;
            if (var.kind == VariableKind::OpeningWidth) return op->width;
            return op->height;
        }
        case VariableKind::InteriorWallPosition: {
            auto bar = var.target.find('|');
            const Space* lower = plan.find_space(var.target.substr(0, bar));
            if (!lower) throw ConfigError("variable targets missing space in " + var.target);
            return var.sub == "x" ? lower->rect.right() : lower->rect.top();
        }
        case VariableKind::OverhangDepth:
        case VariableKind::FinDepth: {
            const ShadingDevice* dev = plan.find_shading(var.target);
            if (!dev) return 0.0;
            if (var.kind == VariableKind::OverhangDepth) return dev->overhang_depth;
            return var.sub == "left" ? dev->left_fin_depth : dev->right_fin_depth;
        }
    }
    return 0.0;
}

std::optional<FloorPlan> apply_variable(const FloorPlan& plan, const DesignVariable& var,
                                        double value) {
    FloorPlan out = plan;
    switch (var.kind) {
        case VariableKind::Orientation:
            out.orientation = wrap_degrees(value);
            return out;
        case VariableKind::Reflection:
            out.reflected = value != 0.0;
            return out;
        case VariableKind::OpeningOffset:
        case VariableKind::OpeningWidth:
        case VariableKind::OpeningHeight: {
            for (auto& op : out.openings) {
                if (op.id != var.target) continue;
                if (var.kind == VariableKind::OpeningOffset)
                    op.offset = value;
                else if (var.kind == VariableKind::OpeningWidth)
                    op.width = value;
                else
                    op.height = value;
                return out;
            }
            return std::nullopt;
        }
        case VariableKind::InteriorWallPosition: {
            auto bar = var.target.find('|');
            if (bar == std::string::npos) return std::nullopt;
            Space* lower = nullptr;
            Space* upper = nullptr;
            for (auto& s : out.spaces) {
                if (s.id == var.target.substr(0, bar)) lower = &s;
                if (s.id == var.target.substr(bar + 1)) upper = &s;
            }
            if (!lower || !upper) return std::nullopt;
            double v = snap(value);
            if (var.sub == "x") {
                double upper_right = upper->rect.right();
                if (v - lower->rect.x < 0.5 || upper_right - v < 0.5) return std::nullopt;
                lower->rect.w = v - lower->rect.x;
                upper->rect.x = v;
                upper->rect.w = upper_right - v;
            } else {
                double upper_top = upper->rect.top();
                if (v - lower->rect.y < 0.5 || upper_top - v < 0.5) return std::nullopt;
                lower->rect.h = v - lower->rect.y;
                upper->rect.y = v;
                upper->rect.h = upper_top - v;
            }
            return out;
        }
        case VariableKind::OverhangDepth:
        case VariableKind::FinDepth: {
            if (!out.find_opening(var.target)) return std::nullopt;
            ShadingDevice* dev = out.find_shading(var.target);
            if (!dev) {
                out.shading.push_back({var.target, 0, 0, 0});
                dev = &out.shading.back();
            }
            if (var.kind == VariableKind::OverhangDepth)
                dev->overhang_depth = value;
            else if (var.sub == "left")
                dev->left_fin_depth = value;
            else
                dev->right_fin_depth = value;
            return out;
        }
    }
    return std::nullopt;
}

std::vector<DesignVariable> extract_variables(const FloorPlan& plan,
                                              const DesignProgram& program) {
    std::vector<DesignVariable> vars;

    // Keep only candidates that, applied alone, leave the plan valid; drop
    // the variable entirely when nothing but the incumbent survives.
    auto add = [&](DesignVariable var) {
        double incumbent = variable_value(plan, var);
        std::vector<double> kept;
        bool any_new = false;
        for (double v : var.candidates) {
            if (std::abs(v - incumbent) < 1e-9) {
                kept.push_back(v);
                continue;
            }
            auto cand = apply_variable(plan, var, v);
            if (cand && plan_valid(*cand, program)) {
                kept.push_back(v);
                any_new = true;
            }
        }
        if (!any_new) return;
        var.candidates = std::move(kept);
        vars.push_back(std::move(var));
    };

    {
        DesignVariable v;
        v.kind = VariableKind::Orientation;
        for (int i = 0; i < 8; ++i) v.candidates.push_back(45.0 * i);
        add(std::move(v));
    }
    {
        DesignVariable v;
        v.kind = VariableKind::Reflection;
        v.candidates = {0.0, 1.0};
        add(std::move(v));
    }

    std::vector<const Opening*> windows;
    for (const auto& op : plan.openings)
        if (op.kind == OpeningKind::Window) windows.push_back(&op);
    std::sort(windows.begin(), windows.end(),
              [](const Opening* a, const Opening* b) { return a->id < b->id; });

    for (const Opening* op : windows) {
        const Space* host = plan.find_space(op->host_space);
        if (!host) continue;
        double wall = side_length(host->rect, op->wall_side);

        DesignVariable off;
        off.kind = VariableKind::OpeningOffset;
        off.target = op->id;
        off.candidates = linspace_snapped(0.0, wall - op->width, 5);
        add(std::move(off));

        double min_w = 0.4;
        if (const SpaceRequirement* req = program.requirement_for(host->function))
            if (req->min_window_width > 0) min_w = req->min_window_width;
        DesignVariable wid;
        wid.kind = VariableKind::OpeningWidth;
        wid.target = op->id;
        wid.candidates = linspace_snapped(min_w, wall - op->offset, 5);
        add(std::move(wid));

        DesignVariable hei;
        hei.kind = VariableKind::OpeningHeight;
        hei.target = op->id;
        hei.candidates = {0.9, 1.1, 1.3, 1.5};
        add(std::move(hei));
    }

    for (const auto& wall : shared_walls(plan)) {
        DesignVariable v;
        v.kind = VariableKind::InteriorWallPosition;
        v.target = wall.lower + "|" + wall.upper;
        v.sub = wall.axis;
        for (double shift : {-0.6, -0.3, 0.0, 0.3, 0.6}) v.candidates.push_back(snap(wall.coord + shift));
        add(std::move(v));
    }

    for (const Opening* op : windows) {
        DesignVariable over;
        over.kind = VariableKind::OverhangDepth;
        over.target = op->id;
        over.candidates = {0.0, 0.3, 0.6, 0.9};
        add(std::move(over));

        for (const char* side : {"left", "right"}) {
            DesignVariable fin;
            fin.kind = VariableKind::FinDepth;
            fin.target = op->id;
            fin.sub = side;
            fin.candidates = {0.0, 0.3, 0.6, 0.9};
            add(std::move(fin));
        }
    }

    return vars;
}

std::pair<FloorPlan, OptimizationTrace> sweep(const FloorPlan& plan,
                                              const DesignProgram& program,
                                              const std::vector<DesignVariable>& variables,
                                              const Evaluator& evaluator,
                                              const SweepConfig& cfg) {
    FloorPlan current = plan;
    OptimizationTrace trace;
    trace.initial_penalty = evaluator(current);
    double cur_p = trace.initial_penalty;

    for (int pass = 1; pass <= cfg.max_passes; ++pass) {
        bool accepted_any = false;
        for (const auto& var : variables) {
            double incumbent = variable_value(current, var);

            std::vector<FloorPlan> cands;
            std::vector<double> values;
            for (double v : var.candidates) {
                if (std::abs(v - incumbent) < 1e-9) continue;
                auto cand = apply_variable(current, var, v);
                if (!cand || !plan_valid(*cand, program)) continue;
                cands.push_back(std::move(*cand));
                values.push_back(v);
            }
            if (cands.empty()) continue;

            std::vector<double> scores(cands.size(),
                                       std::numeric_limits<double>::infinity());
            parallel_for(cands.size(), cfg.jobs,
                         [&](size_t i) { scores[i] = evaluator(cands[i]); });

            size_t best = cands.size();
            for (size_t i = 0; i < cands.size(); ++i)
                if (best == cands.size() || scores[i] < scores[best]) best = i;
            if (best == cands.size() || !(scores[best] < cur_p - 1e-9)) continue;

            TraceStep step;
            step.kind = var.kind;
            step.target = var.target;
            step.sub = var.sub;
            step.old_value = incumbent;
            step.new_value = values[best];
            step.penalty_before = cur_p;
            step.penalty_after = scores[best];
            step.pass = pass;
            trace.steps.push_back(step);

            current = std::move(cands[best]);
            cur_p = scores[best];
            accepted_any = true;
        }
        trace.passes = pass;
        if (!accepted_any) break;
    }

    trace.final_penalty = cur_p;
    return {std::move(current), std::move(trace)};
}

OptimizeContext make_optimize_context(const DesignProgram& program, const WeatherYear& weather,
                                      const ConstructionSet& constructions,
                                      const OccupancyModel& schedules) {
    OptimizeContext ctx;
    ctx.program = &program;
    ctx.weather = &weather;
    ctx.constructions = &constructions;
    ctx.schedules = &schedules;
    ctx.band = comfort_band(running_mean(weather.daily_mean_dry_bulb()));
    return ctx;
}

double sealed_penalty(const FloorPlan& plan, const OptimizeContext& ctx) {
    ThermalModel model = build_thermal_model(plan, *ctx.constructions, *ctx.schedules,
                                             ctx.sim.capacitance_multiplier);
    ZoneSeries series = simulate_year(model, *ctx.weather, nullptr, ctx.sim);
    return thermal_penalty(series, ctx.band, *ctx.schedules, ctx.weights).total;
}

std::vector<OptimizedDesign> optimize_designs(
    const std::vector<std::pair<std::string, FloorPlan>>& plans, const OptimizeContext& ctx) {
    std::vector<OptimizedDesign> out(plans.size());
    parallel_for(plans.size(), ctx.jobs, [&](size_t i) {
        auto vars = extract_variables(plans[i].second, *ctx.program);
        SweepConfig scfg;
        scfg.jobs = 1;  // designs already run in parallel
        auto [best, trace] = sweep(
            plans[i].second, *ctx.program, vars,
            [&](const FloorPlan& p) { return sealed_penalty(p, ctx); }, scfg);
        out[i] = {plans[i].first, std::move(best), std::move(trace), 0};
    });

    std::stable_sort(out.begin(), out.end(), [](const OptimizedDesign& a, const OptimizedDesign& b) {
        return a.trace.final_penalty < b.trace.final_penalty;
    });
    for (size_t i = 0; i < out.size(); ++i) out[i].rank = static_cast<int>(i) + 1;
    return out;
}

nlohmann::ordered_json trace_to_json(const OptimizationTrace& trace) {
    nlohmann::ordered_json j;
    j["schema"] = "trace/1";
    j["initial_penalty"] = trace.initial_penalty;
    j["final_penalty"] = trace.final_penalty;
    j["passes"] = trace.passes;
    j["steps"] = nlohmann::ordered_json::array();
    for (const auto& s : trace.steps) {
        j["steps"].push_back(nlohmann::ordered_json{{"kind", to_string(s.kind)},
                                                    {"target", s.target},
                                                    {"sub", s.sub},
                                                    {"old_value", s.old_value},
                                                    {"new_value", s.new_value},
                                                    {"penalty_before", s.penalty_before},
                                                    {"penalty_after", s.penalty_after},
                                                    {"pass", s.pass}});
    }
    return j;
}

}  // namespace ventplan
