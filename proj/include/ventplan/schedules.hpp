#pragma once

#include <array>
#include <map>
#include <vector>

#include "ventplan/plan.hpp"

namespace ventplan {

// 24 daily slots; slot 0 covers 00:00-01:00 local standard time.
using DaySlots = std::array<bool, 24>;

struct FunctionSchedule {
    DaySlots occupied{};
    double activity_w_per_person = 0;
    // Occupants per instance of the function, in space-id order; the last
    // entry repeats when the plan holds more instances.
    std::vector<int> occupants_per_instance{1};
    DaySlots lighting{};
    double lighting_w_per_m2 = 0;
};

struct OccupancyModel {
    std::map<SpaceFunction, FunctionSchedule> by_function;

    bool occupied(SpaceFunction f, int slot) const;
    // Sensible internal gains, W, for one instance of the function.
    double internal_gains(SpaceFunction f, int instance, double floor_area, int slot) const;
};

// Residential schedule set used by the case study: morning/lunch/evening
// blocks in day spaces, permanently occupied bedrooms.
OccupancyModel builtin_schedules();

}  // namespace ventplan
