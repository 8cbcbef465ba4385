#include "ventplan/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>
#include <sstream>

#include "ventplan/errors.hpp"
#include "ventplan/parallel.hpp"

namespace ventplan {

std::vector<VentilationScenario> builtin_scenarios() {
    std::vector<VentilationScenario> out;
    VentilationScenario ref;
    ref.name = "NoVent";
    ref.sealed = true;
    out.push_back(ref);
    out.push_back({"A", 0, 6, 22.0, true, false});
    out.push_back({"B", 1, 4, 22.0, true, false});
    out.push_back({"C", 2, 8, 22.0, true, false});
    out.push_back({"D", 6, 12, 22.0, true, false});
    return out;
}

double opening_modulation(const VentilationScenario& scenario, bool occupied, double t_in,
                          double t_out) {
    if (scenario.sealed) return 0.0;
    if (scenario.requires_occupancy && !occupied) return 0.0;
    if (t_in < scenario.indoor_threshold) return 0.0;
    if (!(t_out < t_in)) return 0.0;
    double dt = t_in - t_out;
    if (dt <= scenario.d1) return 0.0;
    if (dt >= scenario.d2) return 1.0;
    return (dt - scenario.d1) / (scenario.d2 - scenario.d1);
}

ScenarioControl::ScenarioControl(VentilationScenario scenario, const OccupancyModel* occupancy)
    : scenario_(std::move(scenario)), occupancy_(occupancy) {
    if (!occupancy_) throw ConfigError("scenario control needs an occupancy model");
}

double ScenarioControl::window_signal(SpaceFunction f, int, int slot, double t_in,
                                      double t_out) const {
    return opening_modulation(scenario_, occupancy_->occupied(f, slot), t_in, t_out);
}

std::string ScenarioControl::name() const { return scenario_.name; }

double ScenarioMatrix::penalty(size_t design, size_t scenario) const {
    return cells.at(design).at(scenario).total;
}

double ScenarioMatrix::improvement_pct(size_t design, size_t scenario) const {
    double ref = penalty(design, static_cast<size_t>(reference_column));
    if (ref == 0.0) return 0.0;
    return (ref - penalty(design, scenario)) / ref * 100.0;
}

ScenarioMatrix run_experiment(const std::vector<std::pair<std::string, FloorPlan>>& designs,
                              const std::vector<VentilationScenario>& scenarios,
                              const OptimizeContext& ctx) {
    if (designs.empty()) throw ConfigError("experiment needs at least one design");
    if (scenarios.empty()) throw ConfigError("experiment needs at least one scenario");

    ScenarioMatrix m;
    m.reference_column = -1;
    for (size_t s = 0; s < scenarios.size(); ++s) {
        m.scenario_names.push_back(scenarios[s].name);
        if (scenarios[s].sealed && m.reference_column < 0)
            m.reference_column = static_cast<int>(s);
    }
    if (m.reference_column < 0)
        throw ConfigError("experiment needs a sealed reference scenario");

    std::vector<ThermalModel> models;
    models.reserve(designs.size());
    for (const auto& [id, plan] : designs) {
        m.design_ids.push_back(id);
        models.push_back(build_thermal_model(plan, *ctx.constructions, *ctx.schedules,
                                             ctx.sim.capacitance_multiplier));
    }

    std::vector<std::unique_ptr<ScenarioControl>> controls(scenarios.size());
    for (size_t s = 0; s < scenarios.size(); ++s)
        if (!scenarios[s].sealed)
            controls[s] = std::make_unique<ScenarioControl>(scenarios[s], ctx.schedules);

    m.cells.assign(designs.size(), std::vector<PenaltyReport>(scenarios.size()));
    size_t n = designs.size() * scenarios.size();
    parallel_for(n, ctx.jobs, [&](size_t i) {
        size_t d = i / scenarios.size();
        size_t s = i % scenarios.size();
        ZoneSeries series = simulate_year(models[d], *ctx.weather, controls[s].get(), ctx.sim);
        m.cells[d][s] = thermal_penalty(series, ctx.band, *ctx.schedules, ctx.weights);
    });

    m.best_column.assign(designs.size(), 0);
    double global_best = std::numeric_limits<double>::infinity();
    for (size_t d = 0; d < designs.size(); ++d) {
        size_t best = 0;
        for (size_t s = 1; s < scenarios.size(); ++s)
            if (m.penalty(d, s) < m.penalty(d, best)) best = s;
        m.best_column[d] = static_cast<int>(best);
        if (m.penalty(d, best) < global_best) {
            global_best = m.penalty(d, best);
            m.best_design = static_cast<int>(d);
        }
    }
    return m;
}

std::vector<double> daily_difference_series(const PenaltyReport& scenario,
                                            const PenaltyReport& reference) {
    if (scenario.per_day.size() != reference.per_day.size())
        throw ConfigError("daily series cover different years");
    std::vector<double> out(scenario.per_day.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = scenario.per_day[i] - reference.per_day[i];
    return out;
}

int month_of_day(int day_index) {
    static const int lengths[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (day_index < 0 || day_index >= 365) throw ConfigError("day index outside 365-day year");
    int m = 0;
    int d = day_index;
    while (d >= lengths[m]) {
        d -= lengths[m];
        ++m;
    }
    return m + 1;
}

std::optional<double> seasonal_benefit_share(const std::vector<double>& daily_difference,
                                             const std::vector<int>& months) {
    double annual = 0;
    double in_months = 0;
    for (size_t i = 0; i < daily_difference.size(); ++i) {
        double benefit = std::max(0.0, -daily_difference[i]);
        annual += benefit;
        int month = month_of_day(static_cast<int>(i));
        if (std::find(months.begin(), months.end(), month) != months.end()) in_months += benefit;
    }
    if (annual <= 0.0) return std::nullopt;
    return in_months / annual;
}

std::string format_improvement(double pct) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f%%", pct);
    return buf;
}

namespace {

std::string fmt1(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

std::vector<double> column_means(const ScenarioMatrix& m) {
    std::vector<double> means(m.scenario_names.size(), 0.0);
    for (size_t d = 0; d < m.design_ids.size(); ++d)
        for (size_t s = 0; s < means.size(); ++s) means[s] += m.penalty(d, s);
    for (auto& v : means) v /= static_cast<double>(m.design_ids.size());
    return means;
}

}  // namespace

std::string matrix_to_csv(const ScenarioMatrix& m) {
    std::ostringstream out;
    out << "design";
    for (const auto& name : m.scenario_names) out << ',' << name;
    out << ",best_scenario,improvement_pct\n";

    for (size_t d = 0; d < m.design_ids.size(); ++d) {
        out << m.design_ids[d];
        for (size_t s = 0; s < m.scenario_names.size(); ++s) out << ',' << fmt1(m.penalty(d, s));
        size_t best = static_cast<size_t>(m.best_column[d]);
        out << ',' << m.scenario_names[best] << ',' << fmt1(m.improvement_pct(d, best)) << '\n';
    }

    auto means = column_means(m);
    size_t best = 0;
    for (size_t s = 1; s < means.size(); ++s)
        if (means[s] < means[best]) best = s;
    double ref = means[static_cast<size_t>(m.reference_column)];
    double imp = ref == 0.0 ? 0.0 : (ref - means[best]) / ref * 100.0;
    out << "Avg";
    for (double v : means) out << ',' << fmt1(v);
    out << ',' << m.scenario_names[best] << ',' << fmt1(imp) << '\n';
    return out.str();
}

std::string matrix_to_text(const ScenarioMatrix& m) {
    size_t id_width = 6;
    for (const auto& id : m.design_ids) id_width = std::max(id_width, id.size());

    std::ostringstream out;
    out << "Annual thermal penalty (weighted degree-hours) per ventilation scenario\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%-*s", static_cast<int>(id_width), "design");
    out << buf;
    for (const auto& name : m.scenario_names) {
        std::snprintf(buf, sizeof buf, " %12s", name.c_str());
        out << buf;
    }
    out << "         best\n";

    for (size_t d = 0; d < m.design_ids.size(); ++d) {
        std::snprintf(buf, sizeof buf, "%-*s", static_cast<int>(id_width),
                      m.design_ids[d].c_str());
        out << buf;
        size_t best = static_cast<size_t>(m.best_column[d]);
        for (size_t s = 0; s < m.scenario_names.size(); ++s) {
            std::snprintf(buf, sizeof buf, " %11.1f%c", m.penalty(d, s), s == best ? '*' : ' ');
            out << buf;
        }
        std::snprintf(buf, sizeof buf, " %4s %7s", m.scenario_names[best].c_str(),
                      format_improvement(m.improvement_pct(d, best)).c_str());
        out << buf << '\n';
    }

    auto means = column_means(m);
    std::snprintf(buf, sizeof buf, "%-*s", static_cast<int>(id_width), "Avg");
    out << buf;
    size_t best = 0;
    for (size_t s = 1; s < means.size(); ++s)
        if (means[s] < means[best]) best = s;
    for (size_t s = 0; s < means.size(); ++s) {
        std::snprintf(buf, sizeof buf, " %11.1f%c", means[s], s == best ? '*' : ' ');
        out << buf;
    }
    double ref = means[static_cast<size_t>(m.reference_column)];
    double imp = ref == 0.0 ? 0.0 : (ref - means[best]) / ref * 100.0;
    std::snprintf(buf, sizeof buf, " %4s %7s", m.scenario_names[best].c_str(),
                  format_improvement(imp).c_str());
    out << buf << '\n';

    out << "* lowest penalty in row";
    if (m.best_design >= 0)
        out << "; best design overall: " << m.design_ids[static_cast<size_t>(m.best_design)];
    out << '\n';
    return out.str();
}

std::string daily_difference_csv(const ScenarioMatrix& m, size_t design) {
    const auto& ref = m.cells.at(design).at(static_cast<size_t>(m.reference_column));
    std::ostringstream out;
    out << "day,scenario,signed_diff,normalized_diff\n";
    for (size_t s = 0; s < m.scenario_names.size(); ++s) {
        if (static_cast<int>(s) == m.reference_column) continue;
        auto diff = daily_difference_series(m.cells[design][s], ref);
        for (size_t day = 0; day < diff.size(); ++day) {
            double norm = ref.total > 0 ? diff[day] / ref.total : 0.0;
            char buf[96];
            std::snprintf(buf, sizeof buf, "%zu,%s,%.6f,%.8f\n", day + 1,
                          m.scenario_names[s].c_str(), diff[day], norm);
            out << buf;
        }
    }
    return out.str();
}

}  // namespace ventplan
