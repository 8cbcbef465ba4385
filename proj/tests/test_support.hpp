#pragma once

// Shared fixtures for the unit tests: a small valid two-room plan with its
// program, plus synthetic weather years that keep simulations analysable.

#include <cmath>
#include <string>
#include <vector>

#include "ventplan/plan.hpp"
#include "ventplan/schedules.hpp"
#include "ventplan/weather.hpp"

namespace ventplan::testsupport {

// Hall (0,0,4,3) and bedroom (4,0,4,3) sharing the x=4 wall, entry door on
// the hall's south face, interior door through the shared wall, one south
// bedroom window. Satisfies two_room_program() with no violations.
inline FloorPlan two_room_plan() {
    FloorPlan plan;
    Space hall;
    hall.id = "hall_1";
    hall.function = SpaceFunction::Hall;
    hall.rect = {0, 0, 4, 3};
    Space bed;
    bed.id = "bedroom_1";
    bed.function = SpaceFunction::Bedroom;
    bed.rect = {4, 0, 4, 3};
    plan.spaces = {hall, bed};

    Opening entry;
    entry.id = "door_entry";
    entry.kind = OpeningKind::ExteriorDoor;
    entry.host_space = "hall_1";
    entry.wall_side = Side::South;
    entry.offset = 0.5;
    entry.width = 0.9;
    entry.height = 2.0;
    entry.sill = 0.0;

    Opening inner;
    inner.id = "door_hall_bed";
    inner.kind = OpeningKind::InteriorDoor;
    inner.host_space = "hall_1";
    inner.wall_side = Side::East;
    inner.offset = 1.0;
    inner.width = 0.9;
    inner.height = 2.0;
    inner.sill = 0.0;
    inner.links_to = "bedroom_1";

    Opening win;
    win.id = "win_bed";
    win.kind = OpeningKind::Window;
    win.host_space = "bedroom_1";
    win.wall_side = Side::South;
    win.offset = 1.4;
    win.width = 1.2;
    win.height = 1.1;
    win.sill = 0.9;

    plan.openings = {entry, inner, win};
    return plan;
}

inline DesignProgram two_room_program() {
    DesignProgram prog;
    SpaceRequirement hall;
    hall.function = SpaceFunction::Hall;
    hall.count = 1;
    hall.min_floor_area = 10.0;
    hall.min_window_width = 0.0;
    SpaceRequirement bed;
    bed.function = SpaceFunction::Bedroom;
    bed.count = 1;
    bed.min_floor_area = 10.0;
    bed.min_window_width = 1.0;
    prog.required_spaces = {hall, bed};
    prog.connectivity = {{SpaceFunction::Hall, SpaceFunction::Bedroom}};
    OrientationPreference pref;
    pref.function = SpaceFunction::Bedroom;
    pref.sector = CompassSector::S;
    prog.opening_orientation_prefs = {pref};
    prog.max_construction_area = 40.0;
    return prog;
}

// Flat weather year: constant dry bulb, optional constant irradiance.
inline WeatherYear constant_weather(double dry_bulb, double dni = 0.0, double dhi = 0.0) {
    WeatherYear w;
    w.location = {41.23, -8.68, 0.0, 73.0};
    w.records.resize(8760);
    for (auto& rec : w.records) {
        rec.dry_bulb = dry_bulb;
        rec.direct_normal = dni;
        rec.diffuse_horizontal = dhi;
        rec.wind_speed = 1.0;
    }
    return w;
}

// Sinusoidal year with a daily swing, no sun. mean +/- season_amp over the
// year, +/- daily_amp over each day.
inline WeatherYear sinusoid_weather(double mean, double season_amp, double daily_amp) {
    WeatherYear w;
    w.location = {41.23, -8.68, 0.0, 73.0};
    w.records.resize(8760);
    constexpr double kTau = 6.283185307179586;
    for (int h = 0; h < 8760; ++h) {
        int day = h / 24;
        double season = -std::cos(kTau * (day + 1) / 365.0);
        double diurnal = -std::cos(kTau * (h % 24) / 24.0);
        w.records[h].dry_bulb = mean + season_amp * season + daily_amp * diurnal;
        w.records[h].wind_speed = 1.0;
    }
    return w;
}

// Schedules that keep every zone at zero internal gain, for the functions
// used by two_room_plan().
inline OccupancyModel zero_gain_schedules() {
    OccupancyModel model;
    FunctionSchedule off;
    off.occupied.fill(false);
    off.activity_w_per_person = 0.0;
    off.occupants_per_instance = {0};
    off.lighting.fill(false);
    off.lighting_w_per_m2 = 0.0;
    for (auto f : {SpaceFunction::Hall, SpaceFunction::Corridor, SpaceFunction::Kitchen,
                   SpaceFunction::LivingRoom, SpaceFunction::Bedroom, SpaceFunction::Bathroom}) {
        model.by_function[f] = off;
    }
    return model;
}

// Constant band over 365 days.
inline std::vector<double> flat_trm(double value) { return std::vector<double>(365, value); }

}  // namespace ventplan::testsupport
