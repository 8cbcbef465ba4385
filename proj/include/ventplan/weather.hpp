#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "ventplan/plan.hpp"

namespace ventplan {

struct Location {
    double latitude = 0;   // degrees, north positive
    double longitude = 0;  // degrees, east positive
    double timezone = 0;   // hours from UTC
    double altitude = 0;   // m
};

struct WeatherRecord {
    double dry_bulb = 0;            // °C
    double direct_normal = 0;       // W/m²
    double diffuse_horizontal = 0;  // W/m²
    double wind_speed = 0;          // m/s
};

struct WeatherYear {
    Location location;
    std::vector<WeatherRecord> records;  // exactly 8760, hour 0 = Jan 1, 00:00-01:00

    std::vector<double> daily_mean_dry_bulb() const;  // 365 values
};

// EPW text: LOCATION header first, then any further header lines (skipped),
// then 8760 comma-separated data rows. Of each row we keep dry bulb (field 7),
// direct normal and diffuse horizontal irradiance (fields 15, 16) and wind
// speed (field 22), 1-based. Sentinel values (99.9 dry bulb, 9999 irradiance,
// 999 wind) repeat the previous hour's value.
WeatherYear parse_epw(std::istream& in);
WeatherYear load_epw(const std::filesystem::path& path);

// Exponentially weighted running mean of daily outdoor temperature. Day d
// uses rm(d) = (1-alpha)*daily(d-1) + alpha*rm(d-1); the first day is started
// from the standard 7-day weighted sum over the wrapped end of the year.
std::vector<double> running_mean(const std::vector<double>& daily_means, double alpha = 0.8);

struct SunPosition {
    double altitude = 0;  // degrees above horizon
    double azimuth = 0;   // degrees from North, clockwise
};

// `hour` is local standard time in hours (0..24, fractions allowed);
// day_of_year is 1-based. Includes the equation-of-time correction.
SunPosition sun_position(const Location& loc, int day_of_year, double hour);

// Total shortwave on a vertical wall: beam on the wall plane plus half the
// diffuse horizontal (isotropic sky). Ground reflection ignored.
double irradiance_on_wall(const WeatherRecord& rec, const SunPosition& sun,
                          double wall_azimuth);

// Beam irradiance alone, for shading; 0 when the sun is below the horizon or
// behind the wall.
double beam_on_wall(const WeatherRecord& rec, const SunPosition& sun, double wall_azimuth);

// Fraction of the direct beam blocked by an overhang plus fins around a
// window of the given size. Fins are named as seen from outside the wall.
double shading_fraction(const ShadingDevice& device, double window_width,
                        double window_height, const SunPosition& sun, double wall_azimuth);

}  // namespace ventplan
