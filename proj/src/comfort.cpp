#include "ventplan/comfort.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ventplan/errors.hpp"

namespace ventplan {

ComfortBand comfort_band(const std::vector<double>& trm_series, double half_width) {
    ComfortBand band;
    band.t1.reserve(trm_series.size());
    band.t2.reserve(trm_series.size());
    for (double trm : trm_series) {
        double centre = 0.33 * std::clamp(trm, 10.0, 30.0) + 18.8;
        band.t1.push_back(centre - half_width);
        band.t2.push_back(centre + half_width);
    }
    return band;
}

double discomfort(double t, double t1, double t2, const PenaltyWeights& weights) {
    if (t1 > t) return weights.w1 * (t1 - t);
    if (t > t2) return weights.w2 * (t - t2);
    return 0.0;
}

double occupancy_factor(const OccupancyModel& model, SpaceFunction f, int slot,
                        const PenaltyWeights& weights) {
    return model.occupied(f, slot) ? weights.o : weights.v;
}

PenaltyReport thermal_penalty(const ZoneSeries& series, const ComfortBand& band,
                              const OccupancyModel& model, const PenaltyWeights& weights) {
    size_t nz = series.zone_ids.size();
    size_t hours = nz ? series.air_temp[0].size() : 0;
    size_t days = hours / 24;
    if (band.t1.size() < days)
        throw SimulationError("comfort band covers " + std::to_string(band.t1.size()) +
                              " days, series needs " + std::to_string(days));

    PenaltyReport report;
    report.per_day.assign(days, 0.0);
    for (size_t z = 0; z < nz; ++z) {
        if (!model.by_function.count(series.functions[z]))
            throw SimulationError("no schedule for space " + series.zone_ids[z]);
        double space_total = 0;
        for (size_t h = 0; h < hours; ++h) {
            size_t d = h / 24;
            int slot = static_cast<int>(h % 24);
            double disc = discomfort(series.air_temp[z][h], band.t1[d], band.t2[d], weights);
            if (disc == 0) continue;
            double contrib = disc * occupancy_factor(model, series.functions[z], slot, weights);
            space_total += contrib;
            report.per_day[d] += contrib;
            report.total += contrib;
        }
        report.per_space.emplace_back(series.zone_ids[z], space_total);
    }
    return report;
}

std::string penalty_report_to_csv(const PenaltyReport& report) {
    std::string out = "day,penalty_degree_hours\n";
    char buf[64];
    for (size_t d = 0; d < report.per_day.size(); ++d) {
        std::snprintf(buf, sizeof(buf), "%zu,%.6f\n", d + 1, report.per_day[d]);
        out += buf;
    }
    return out;
}

nlohmann::ordered_json penalty_report_to_json(const PenaltyReport& report) {
    nlohmann::ordered_json j;
    j["schema"] = "penaltyreport/1";
    j["total"] = report.total;
    j["per_space"] = nlohmann::ordered_json::object();
    for (const auto& [id, val] : report.per_space) j["per_space"][id] = val;
    return j;
}

}  // namespace ventplan
