#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ventplan/comfort.hpp"
#include "ventplan/optimizer.hpp"
#include "ventplan/thermal.hpp"

namespace ventplan {

// Occupant window-opening behavior: a linear ramp on the indoor-outdoor
// temperature difference, gated by occupancy and an indoor threshold.
struct VentilationScenario {
    std::string name;
    double d1 = 0;  // K, difference where openings start to open
    double d2 = 6;  // K, difference where they are fully open
    double indoor_threshold = 22.0;  // °C
    bool requires_occupancy = true;
    bool sealed = false;  // reference case, envelope openings forced shut
};

// NoVent reference plus scenarios A (0,6), B (1,4), C (2,8), D (6,12).
std::vector<VentilationScenario> builtin_scenarios();

// Fraction open in [0,1]: zero unless the space is occupied (when required),
// the zone is at or above the indoor threshold and outdoor air is cooler;
// otherwise (dT-d1)/(d2-d1) clamped.
double opening_modulation(const VentilationScenario& scenario, bool occupied, double t_in,
                          double t_out);

class ScenarioControl : public VentControl {
  public:
    ScenarioControl(VentilationScenario scenario, const OccupancyModel* occupancy);

    double window_signal(SpaceFunction f, int instance, int slot, double t_in,
                         double t_out) const override;
    std::string name() const override;

  private:
    VentilationScenario scenario_;
    const OccupancyModel* occupancy_;
};

// Annual penalties for every design under every scenario, with daily series
// kept for the difference plots.
struct ScenarioMatrix {
    std::vector<std::string> design_ids;
    std::vector<std::string> scenario_names;
    int reference_column = 0;                    // the sealed scenario
    std::vector<std::vector<PenaltyReport>> cells;  // [design][scenario]
    std::vector<int> best_column;  // per design, lowest-penalty column
    int best_design = -1;          // row holding the matrix-wide minimum

    double penalty(size_t design, size_t scenario) const;
    // (reference - scenario) / reference * 100.
    double improvement_pct(size_t design, size_t scenario) const;
};

ScenarioMatrix run_experiment(const std::vector<std::pair<std::string, FloorPlan>>& designs,
                              const std::vector<VentilationScenario>& scenarios,
                              const OptimizeContext& ctx);

// Per-day scenario penalty minus reference penalty; negative means the
// ventilation scenario helped that day.
std::vector<double> daily_difference_series(const PenaltyReport& scenario,
                                            const PenaltyReport& reference);

// Month (1..12) of a 0-based day index in a 365-day year.
int month_of_day(int day_index);

inline const std::vector<int> kMayThroughOctober = {5, 6, 7, 8, 9, 10};

// Share of the annual benefit (benefit = max(0, -difference)) that falls in
// the given months; empty when the year has no benefit at all.
std::optional<double> seasonal_benefit_share(const std::vector<double>& daily_difference,
                                             const std::vector<int>& months);

std::string format_improvement(double pct);  // one decimal, e.g. "7.4%"

std::string matrix_to_csv(const ScenarioMatrix& m);
std::string matrix_to_text(const ScenarioMatrix& m);
// Long-format daily differences for one design: day, scenario, signed_diff,
// normalized_diff (signed over the reference annual total).
std::string daily_difference_csv(const ScenarioMatrix& m, size_t design);

}  // namespace ventplan
