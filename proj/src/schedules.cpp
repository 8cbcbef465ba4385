#include "ventplan/schedules.hpp"

#include <initializer_list>

#include "ventplan/errors.hpp"

namespace ventplan {

namespace {

// Slots given 1-based (slot 1 = 00:00-01:00), as schedule tables are usually
// written.
DaySlots slots(std::initializer_list<int> one_based) {
    DaySlots s{};
    for (int i : one_based) s[i - 1] = true;
    return s;
}

DaySlots all_slots() {
    DaySlots s{};
    s.fill(true);
    return s;
}

}  // namespace

bool OccupancyModel::occupied(SpaceFunction f, int slot) const {
    auto it = by_function.find(f);
    if (it == by_function.end())
        throw SimulationError(std::string("no schedule for space function ") + to_string(f));
    return it->second.occupied[slot];
}

double OccupancyModel::internal_gains(SpaceFunction f, int instance, double floor_area,
                                      int slot) const {
    auto it = by_function.find(f);
    if (it == by_function.end())
        throw SimulationError(std::string("no schedule for space function ") + to_string(f));
    const FunctionSchedule& fs = it->second;
    double gains = 0;
    if (fs.occupied[slot]) {
        const auto& counts = fs.occupants_per_instance;
        int idx = instance < static_cast<int>(counts.size())
                      ? instance
                      : static_cast<int>(counts.size()) - 1;
        gains += counts[idx] * fs.activity_w_per_person;
    }
    if (fs.lighting[slot]) gains += fs.lighting_w_per_m2 * floor_area;
    return gains;
}

OccupancyModel builtin_schedules() {
    OccupancyModel m;

    // Day spaces share a morning hour, a lunch block and an evening block.
    DaySlots day_pattern = slots({8, 13, 14, 15, 19, 20, 21, 23});

    {
        FunctionSchedule s;
        s.occupied = day_pattern;
        s.activity_w_per_person = 190.0;
        s.occupants_per_instance = {2};
        s.lighting = day_pattern;
        s.lighting_w_per_m2 = 7.0;
        m.by_function[SpaceFunction::Hall] = s;
    }
    {
        FunctionSchedule s;
        s.occupied = slots({13, 14, 15, 19, 20, 21, 23});
        s.activity_w_per_person = 190.0;
        s.occupants_per_instance = {2};
        s.lighting = s.occupied;
        s.lighting_w_per_m2 = 7.0;
        m.by_function[SpaceFunction::Corridor] = s;
    }
    {
        FunctionSchedule s;
        s.occupied = day_pattern;
        s.activity_w_per_person = 190.0;
        s.occupants_per_instance = {2};
        s.lighting = day_pattern;
        s.lighting_w_per_m2 = 10.0;
        m.by_function[SpaceFunction::Kitchen] = s;
    }
    {
        FunctionSchedule s;
        s.occupied = slots({13, 14, 15, 19, 20, 21, 22, 23, 24});
        s.activity_w_per_person = 110.0;
        s.occupants_per_instance = {5};
        s.lighting = s.occupied;
        s.lighting_w_per_m2 = 10.0;
        m.by_function[SpaceFunction::LivingRoom] = s;
    }
    {
        FunctionSchedule s;
        s.occupied = all_slots();
        s.activity_w_per_person = 72.0;
        s.occupants_per_instance = {2, 2, 1};
        s.lighting = slots({13, 14, 15, 19, 20, 21, 22, 23, 24});
        s.lighting_w_per_m2 = 7.0;
        m.by_function[SpaceFunction::Bedroom] = s;
    }
    {
        FunctionSchedule s;
        s.occupied = day_pattern;
        s.activity_w_per_person = 207.0;
        s.occupants_per_instance = {1, 1};
        s.lighting = day_pattern;
        s.lighting_w_per_m2 = 7.0;
        m.by_function[SpaceFunction::Bathroom] = s;
    }

    return m;
}

}  // namespace ventplan
