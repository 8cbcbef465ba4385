#include "ventplan/weather.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <sstream>

#include "ventplan/errors.hpp"

namespace ventplan {

namespace {

constexpr int kHoursPerYear = 8760;
constexpr double kDeg = std::numbers::pi / 180.0;

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

double parse_number(const std::string& s, int line_no, const char* what) {
    try {
        size_t pos = 0;
        double v = std::stod(s, &pos);
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line_no, std::string("bad ") + what + " value \"" + s + "\"");
    }
}

bool is_sentinel(double v, double sentinel) { return std::abs(v - sentinel) < 1e-6; }

}  // namespace

std::vector<double> WeatherYear::daily_mean_dry_bulb() const {
    std::vector<double> out(365, 0.0);
    for (int d = 0; d < 365; ++d) {
        double sum = 0;
        for (int h = 0; h < 24; ++h) sum += records[d * 24 + h].dry_bulb;
        out[d] = sum / 24.0;
    }
    return out;
}

WeatherYear parse_epw(std::istream& in) {
    std::string line;
    int line_no = 0;

    if (!std::getline(in, line)) throw ParseError(1, "empty stream, expected LOCATION header");
    ++line_no;
    if (line.rfind("LOCATION", 0) != 0)
        throw ParseError(1, "first line must be a LOCATION header");
    auto fields = split_csv(line);
    if (fields.size() < 10)
        throw ParseError(1, "LOCATION header needs 10 fields, got " +
                                std::to_string(fields.size()));

    WeatherYear year;
    // Trailing four header fields: latitude, longitude, timezone, altitude.
    size_t n = fields.size();
    year.location.latitude = parse_number(fields[n - 4], 1, "latitude");
    year.location.longitude = parse_number(fields[n - 3], 1, "longitude");
    year.location.timezone = parse_number(fields[n - 2], 1, "timezone");
    year.location.altitude = parse_number(fields[n - 1], 1, "altitude");

    year.records.reserve(kHoursPerYear);
    WeatherRecord prev{0, 0, 0, 0};
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (!std::isdigit(static_cast<unsigned char>(line[0]))) {
            if (!year.records.empty())
                throw ParseError(line_no, "header line found after data rows");
            continue;  // remaining EPW header lines
        }
        auto f = split_csv(line);
        if (f.size() < 22)
            throw ParseError(line_no,
                             "data row needs at least 22 fields, got " + std::to_string(f.size()));
        if (year.records.size() >= kHoursPerYear)
            throw ParseError(line_no, "more than 8760 data rows");

        WeatherRecord rec;
        rec.dry_bulb = parse_number(f[6], line_no, "dry bulb");
        rec.direct_normal = parse_number(f[14], line_no, "direct normal irradiance");
        rec.diffuse_horizontal = parse_number(f[15], line_no, "diffuse horizontal irradiance");
        rec.wind_speed = parse_number(f[21], line_no, "wind speed");

        if (is_sentinel(rec.dry_bulb, 99.9)) rec.dry_bulb = prev.dry_bulb;
        if (is_sentinel(rec.direct_normal, 9999)) rec.direct_normal = prev.direct_normal;
        if (is_sentinel(rec.diffuse_horizontal, 9999))
            rec.diffuse_horizontal = prev.diffuse_horizontal;
        if (is_sentinel(rec.wind_speed, 999)) rec.wind_speed = prev.wind_speed;

        if (rec.dry_bulb < -60 || rec.dry_bulb > 60)
            throw ParseError(line_no, "dry bulb out of range [-60, 60]");
        if (rec.direct_normal < 0 || rec.diffuse_horizontal < 0 || rec.wind_speed < 0)
            throw ParseError(line_no, "negative irradiance or wind speed");

        prev = rec;
        year.records.push_back(rec);
    }
    if (year.records.size() != kHoursPerYear)
        throw ParseError(line_no, "expected 8760 data rows, got " +
                                      std::to_string(year.records.size()));
    return year;
}

WeatherYear load_epw(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    try {
        return parse_epw(in);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": ", e);
    }
}

std::vector<double> running_mean(const std::vector<double>& daily, double alpha) {
    if (daily.size() < 8) throw ConfigError("running_mean needs at least 8 daily values");
    if (!(alpha > 0 && alpha < 1)) throw ConfigError("running_mean alpha must be in (0,1)");
    size_t n = daily.size();
    std::vector<double> rm(n, 0.0);

    // Standard 7-day weighted start, wrapping into the end of the series.
    auto back = [&](size_t k) { return daily[(n - k) % n]; };
    rm[0] = (back(1) + 0.8 * back(2) + 0.6 * back(3) + 0.5 * back(4) + 0.4 * back(5) +
             0.3 * back(6) + 0.2 * back(7)) /
            3.8;
    for (size_t d = 1; d < n; ++d) rm[d] = (1 - alpha) * daily[d - 1] + alpha * rm[d - 1];
    return rm;
}

SunPosition sun_position(const Location& loc, int day_of_year, double hour) {
    double n = day_of_year;
    double decl = 23.45 * std::sin(kDeg * 360.0 * (284.0 + n) / 365.0);

    // Spencer series for the equation of time, minutes.
    double b = 2.0 * std::numbers::pi * (n - 1) / 365.0;
    double eot = 229.18 * (0.000075 + 0.001868 * std::cos(b) - 0.032077 * std::sin(b) -
                           0.014615 * std::cos(2 * b) - 0.04089 * std::sin(2 * b));

    double solar_time = hour + eot / 60.0 + (loc.longitude - 15.0 * loc.timezone) / 15.0;
    double hour_angle = 15.0 * (solar_time - 12.0);

    double phi = kDeg * loc.latitude;
    double d = kDeg * decl;
    double h = kDeg * hour_angle;

    double sin_alt = std::sin(phi) * std::sin(d) + std::cos(phi) * std::cos(d) * std::cos(h);
    sin_alt = std::clamp(sin_alt, -1.0, 1.0);

    SunPosition sun;
    sun.altitude = std::asin(sin_alt) / kDeg;
    double az_south = std::atan2(std::sin(h),
                                 std::cos(h) * std::sin(phi) - std::tan(d) * std::cos(phi));
    sun.azimuth = wrap_degrees(az_south / kDeg + 180.0);
    return sun;
}

namespace {

// cos of beam incidence on a vertical wall; <= 0 when the sun is behind it.
double cos_incidence(const SunPosition& sun, double wall_azimuth) {
    double gamma = kDeg * (sun.azimuth - wall_azimuth);
    return std::cos(kDeg * sun.altitude) * std::cos(gamma);
}

}  // namespace

double beam_on_wall(const WeatherRecord& rec, const SunPosition& sun, double wall_azimuth) {
    if (sun.altitude < 0) return 0.0;
    double ci = cos_incidence(sun, wall_azimuth);
    return ci > 0 ? rec.direct_normal * ci : 0.0;
}

double irradiance_on_wall(const WeatherRecord& rec, const SunPosition& sun,
                          double wall_azimuth) {
    return beam_on_wall(rec, sun, wall_azimuth) + 0.5 * rec.diffuse_horizontal;
}

double shading_fraction(const ShadingDevice& device, double window_width, double window_height,
                        const SunPosition& sun, double wall_azimuth) {
    if (window_width <= 0 || window_height <= 0) return 0.0;
    if (sun.altitude <= 0) return 0.0;
    double gamma = wrap_degrees(sun.azimuth - wall_azimuth);
    if (gamma >= 180.0) gamma -= 360.0;  // surface-solar azimuth in [-180, 180)
    if (std::abs(gamma) >= 90.0) return 0.0;

    double cg = std::cos(kDeg * gamma);
    double tan_profile = std::tan(kDeg * sun.altitude) / cg;
    double shadow_down = std::min(device.overhang_depth * tan_profile, window_height);

    // Only the fin on the sun side casts onto the glass; gamma > 0 puts the
    // sun on the viewer's left when facing the wall from outside.
    double fin_depth = gamma > 0 ? device.left_fin_depth : device.right_fin_depth;
    double shadow_across = std::min(fin_depth * std::abs(std::tan(kDeg * gamma)), window_width);

    double w = window_width, h = window_height;
    double blocked =
        shadow_down * w + shadow_across * h - shadow_down * shadow_across;  // rectangle union
    return std::clamp(blocked / (w * h), 0.0, 1.0);
}

}  // namespace ventplan
