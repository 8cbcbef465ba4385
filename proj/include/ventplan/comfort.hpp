#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ventplan/schedules.hpp"
#include "ventplan/thermal.hpp"

namespace ventplan {

// Daily adaptive comfort limits, °C.
struct ComfortBand {
    std::vector<double> t1;  // lower
    std::vector<double> t2;  // upper
};

// Adaptive band from the running-mean outdoor temperature: comfort centre
// 0.33·Trm + 18.8 with Trm clamped to [10, 30], band = centre ± half_width.
// Default half width 3 K (Category II).
ComfortBand comfort_band(const std::vector<double>& trm_series, double half_width = 3.0);

struct PenaltyWeights {
    double w1 = 1.0;  // per degree below the band
    double w2 = 1.0;  // per degree above the band
    double o = 1.0;   // occupied-hour factor
    double v = 0.3;   // unoccupied-hour factor
};

// Weighted excursion outside [t1, t2]; zero inside, edges inclusive.
double discomfort(double t, double t1, double t2, const PenaltyWeights& weights = {});

double occupancy_factor(const OccupancyModel& model, SpaceFunction f, int slot,
                        const PenaltyWeights& weights = {});

struct PenaltyReport {
    double total = 0;  // weighted degree-hours
    std::vector<std::pair<std::string, double>> per_space;
    std::vector<double> per_day;  // 365 values
};

// Annual occupancy-weighted degree-hours outside the adaptive band, summed
// over all zones and hours.
PenaltyReport thermal_penalty(const ZoneSeries& series, const ComfortBand& band,
                              const OccupancyModel& model, const PenaltyWeights& weights = {});

std::string penalty_report_to_csv(const PenaltyReport& report);
nlohmann::ordered_json penalty_report_to_json(const PenaltyReport& report);

}  // namespace ventplan
