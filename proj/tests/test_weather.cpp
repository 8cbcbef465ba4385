#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "ventplan/errors.hpp"
#include "ventplan/plan.hpp"
#include "ventplan/weather.hpp"

using namespace ventplan;

namespace {

// Minimal EPW text: LOCATION plus two filler header lines, then hourly rows
// with only the four parsed fields populated.
std::string epw_header() {
    return "LOCATION,TestCity,TST,TST,SRC,000000,41.23,-8.68,0.0,73.0\n"
           "DESIGN CONDITIONS,0\n"
           "DATA PERIODS,1,1,Data,Sunday,1/1,12/31\n";
}

std::string epw_row(double dry, double dni, double dhi, double wind) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "2020,1,1,1,0,0,%.2f,0,0,0,0,0,0,0,%.1f,%.1f,0,0,0,0,0,%.2f",
                  dry, dni, dhi, wind);
    return buf;
}

std::string synthetic_epw(int rows) {
    std::string text = epw_header();
    for (int h = 0; h < rows; ++h) {
        double dry = 10.0 + 5.0 * std::sin(h * 0.001);
        double dni = (h % 24 >= 8 && h % 24 <= 16) ? 500.0 : 0.0;
        text += epw_row(dry, dni, 80.0, 2.5);
        text += '\n';
    }
    return text;
}

}  // namespace

TEST_CASE("parse_epw reads location and hourly fields") {
    std::istringstream in(synthetic_epw(8760));
    WeatherYear w = parse_epw(in);
    CHECK(w.location.latitude == doctest::Approx(41.23));
    CHECK(w.location.longitude == doctest::Approx(-8.68));
    CHECK(w.location.timezone == doctest::Approx(0.0));
    CHECK(w.location.altitude == doctest::Approx(73.0));
    REQUIRE(w.records.size() == 8760);
    CHECK(w.records[0].dry_bulb == doctest::Approx(10.0).epsilon(1e-3));
    CHECK(w.records[0].direct_normal == doctest::Approx(0.0));
    CHECK(w.records[12].direct_normal == doctest::Approx(500.0));
    CHECK(w.records[12].diffuse_horizontal == doctest::Approx(80.0));
    CHECK(w.records[12].wind_speed == doctest::Approx(2.5));
}

TEST_CASE("a field value of 12.5 parses as 12.5 degrees") {
    std::string text = epw_header();
    text += epw_row(12.5, 0, 0, 1);
    text += '\n';
    for (int h = 1; h < 8760; ++h) text += epw_row(10, 0, 0, 1) + "\n";
    std::istringstream in(text);
    WeatherYear w = parse_epw(in);
    CHECK(w.records[0].dry_bulb == 12.5);
}

TEST_CASE("sentinel values repeat the previous hour") {
    std::string text = epw_header();
    text += epw_row(18.0, 300.0, 60.0, 3.0) + "\n";
    text += epw_row(99.9, 9999.0, 9999.0, 999.0) + "\n";
    for (int h = 2; h < 8760; ++h) text += epw_row(10, 0, 0, 1) + "\n";
    std::istringstream in(text);
    WeatherYear w = parse_epw(in);
    CHECK(w.records[1].dry_bulb == doctest::Approx(18.0));
    CHECK(w.records[1].direct_normal == doctest::Approx(300.0));
    CHECK(w.records[1].diffuse_horizontal == doctest::Approx(60.0));
    CHECK(w.records[1].wind_speed == doctest::Approx(3.0));
}

TEST_CASE("truncated year is rejected with the row count") {
    std::istringstream in(synthetic_epw(8759));
    try {
        parse_epw(in);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        std::string msg = e.what();
        CHECK(msg.find("8760") != std::string::npos);
        CHECK(msg.find("8759") != std::string::npos);
        // 3 header lines + 8759 rows.
        CHECK(e.line_number == 3 + 8759);
    }
}

TEST_CASE("parser errors carry line numbers") {
    SUBCASE("bad numeric field") {
        std::string text = epw_header();
        text += epw_row(10, 0, 0, 1) + "\n";
        text += "2020,1,1,2,0,0,abc,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1\n";
        std::istringstream in(text);
        try {
            parse_epw(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line_number == 5);
            CHECK(std::string(e.what()).find("dry bulb") != std::string::npos);
        }
    }
    SUBCASE("short row") {
        std::string text = epw_header();
        text += "2020,1,1,1,0,0,10\n";
        std::istringstream in(text);
        try {
            parse_epw(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line_number == 4);
            CHECK(std::string(e.what()).find("22") != std::string::npos);
        }
    }
    SUBCASE("header after data") {
        std::string text = epw_header();
        text += epw_row(10, 0, 0, 1) + "\n";
        text += "COMMENTS,stray\n";
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_epw(in), ParseError);
    }
    SUBCASE("missing LOCATION header") {
        std::istringstream in("DESIGN CONDITIONS,0\n");
        CHECK_THROWS_AS(parse_epw(in), ParseError);
    }
    SUBCASE("out of range dry bulb") {
        std::string text = epw_header();
        text += epw_row(75.0, 0, 0, 1) + "\n";
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_epw(in), ParseError);
    }
    SUBCASE("negative irradiance") {
        std::string text = epw_header();
        text += epw_row(10.0, -5.0, 0, 1) + "\n";
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_epw(in), ParseError);
    }
}

TEST_CASE("load_epw reports missing files as IO errors") {
    CHECK_THROWS_AS(load_epw("/nonexistent/file.epw"), IoError);
}

TEST_CASE("running mean of a constant series is that constant") {
    std::vector<double> daily(365, 20.0);
    auto rm = running_mean(daily);
    REQUIRE(rm.size() == 365);
    for (double v : rm) CHECK(v == doctest::Approx(20.0));
}

TEST_CASE("running mean blends yesterday at 0.2 with its own history at 0.8") {
    // Hold 20 through day d, spike day d to 25: next day reads 0.2*25 + 0.8*20.
    std::vector<double> daily(365, 20.0);
    daily[99] = 25.0;
    auto rm = running_mean(daily);
    CHECK(rm[99] == doctest::Approx(20.0));
    CHECK(rm[100] == doctest::Approx(0.2 * 25.0 + 0.8 * 20.0));
    CHECK(rm[101] == doctest::Approx(0.2 * 20.0 + 0.8 * 21.0));
}

TEST_CASE("running mean approaches a step monotonically") {
    std::vector<double> daily(365, 10.0);
    for (int d = 180; d < 365; ++d) daily[d] = 20.0;
    auto rm = running_mean(daily);
    for (int d = 182; d < 365; ++d) {
        CHECK(rm[d] >= rm[d - 1] - 1e-12);
        CHECK(rm[d] <= 20.0);
    }
    CHECK(rm[364] > 19.9);
}

TEST_CASE("running mean validates inputs") {
    CHECK_THROWS_AS(running_mean(std::vector<double>(5, 10.0)), ConfigError);
    CHECK_THROWS_AS(running_mean(std::vector<double>(365, 10.0), 1.5), ConfigError);
}

TEST_CASE("solar noon altitude at 41.23N near the solstice") {
    Location loc{41.23, -8.68, 0.0, 73.0};
    double best = -90;
    for (double h = 6; h <= 20; h += 0.05) {
        best = std::max(best, sun_position(loc, 172, h).altitude);
    }
    CHECK(std::abs(best - 72.2) < 1.0);
}

TEST_CASE("equator equinox noon sun is near the zenith") {
    Location loc{0.0, 0.0, 0.0, 0.0};
    double best = -90;
    double best_az = 0;
    for (double h = 6; h <= 18; h += 0.02) {
        auto s = sun_position(loc, 80, h);
        if (s.altitude > best) {
            best = s.altitude;
            best_az = s.azimuth;
        }
    }
    CHECK(std::abs(best - 90.0) < 1.0);
    (void)best_az;
}

TEST_CASE("midnight sun is below the horizon at mid latitudes") {
    Location loc{41.23, -8.68, 0.0, 73.0};
    CHECK(sun_position(loc, 172, 0.0).altitude < 0.0);
    CHECK(sun_position(loc, 355, 0.0).altitude < 0.0);
}

TEST_CASE("wall irradiance combines beam and isotropic diffuse") {
    WeatherRecord rec;
    rec.diffuse_horizontal = 100.0;
    rec.direct_normal = 600.0;

    SUBCASE("sun behind the wall leaves only diffuse") {
        SunPosition sun{30.0, 0.0};
        CHECK(irradiance_on_wall(rec, sun, 180.0) == doctest::Approx(50.0));
        CHECK(beam_on_wall(rec, sun, 180.0) == doctest::Approx(0.0));
    }
    SUBCASE("grazing sun square onto the wall passes the full beam") {
        rec.direct_normal = 800.0;
        SunPosition sun{0.0, 180.0};
        CHECK(irradiance_on_wall(rec, sun, 180.0) == doctest::Approx(800.0 + 50.0));
    }
    SUBCASE("sun below the horizon contributes no beam") {
        SunPosition sun{-5.0, 180.0};
        CHECK(beam_on_wall(rec, sun, 180.0) == doctest::Approx(0.0));
        CHECK(irradiance_on_wall(rec, sun, 180.0) == doctest::Approx(50.0));
    }
    SUBCASE("oblique incidence follows the cosine") {
        SunPosition sun{60.0, 180.0};
        double expect = 600.0 * std::cos(60.0 * M_PI / 180.0) + 50.0;
        CHECK(irradiance_on_wall(rec, sun, 180.0) == doctest::Approx(expect));
    }
}

TEST_CASE("shading fraction of the direct beam") {
    SunPosition sun{60.0, 180.0};  // profile angle 60 on a south wall

    SUBCASE("no device blocks nothing") {
        ShadingDevice none;
        CHECK(shading_fraction(none, 1.0, 1.2, sun, 180.0) == doctest::Approx(0.0));
    }
    SUBCASE("half meter overhang at a 60 degree profile") {
        ShadingDevice dev;
        dev.overhang_depth = 0.5;
        double shadow = 0.5 * std::tan(60.0 * M_PI / 180.0);  // 0.866 m
        CHECK(shading_fraction(dev, 1.0, 1.2, sun, 180.0) ==
              doctest::Approx(shadow / 1.2).epsilon(1e-3));
    }
    SUBCASE("deep overhang saturates at one") {
        ShadingDevice dev;
        dev.overhang_depth = 3.0;
        CHECK(shading_fraction(dev, 1.0, 1.2, sun, 180.0) == doctest::Approx(1.0));
    }
    SUBCASE("fins act only on the sun side") {
        ShadingDevice left_only;
        left_only.left_fin_depth = 0.4;
        ShadingDevice right_only;
        right_only.right_fin_depth = 0.4;
        SunPosition sun_east{40.0, 150.0};  // hits a south wall from the east
        SunPosition sun_west{40.0, 210.0};
        double f_le = shading_fraction(left_only, 1.0, 1.2, sun_east, 180.0);
        double f_lw = shading_fraction(left_only, 1.0, 1.2, sun_west, 180.0);
        double f_re = shading_fraction(right_only, 1.0, 1.2, sun_east, 180.0);
        double f_rw = shading_fraction(right_only, 1.0, 1.2, sun_west, 180.0);
        // Exactly one fin shades for each sun side.
        CHECK(((f_le > 0.0) != (f_re > 0.0)));
        CHECK(((f_lw > 0.0) != (f_rw > 0.0)));
        CHECK(((f_le > 0.0) != (f_lw > 0.0)));
    }
    SUBCASE("sun behind the wall needs no shading") {
        ShadingDevice dev;
        dev.overhang_depth = 1.0;
        SunPosition behind{30.0, 0.0};
        CHECK(shading_fraction(dev, 1.0, 1.2, behind, 180.0) == doctest::Approx(0.0));
    }
}

TEST_CASE("year of wall irradiance stays within physical bounds") {
    std::istringstream in(synthetic_epw(8760));
    WeatherYear w = parse_epw(in);
    for (int h = 0; h < 8760; h += 7) {
        const auto& rec = w.records[h];
        SunPosition sun = sun_position(w.location, h / 24 + 1, h % 24 + 0.5);
        for (double az : {0.0, 90.0, 180.0, 270.0}) {
            double g = irradiance_on_wall(rec, sun, az);
            CHECK(g >= 0.5 * rec.diffuse_horizontal - 1e-9);
            CHECK(g <= rec.direct_normal + 0.5 * rec.diffuse_horizontal + 1e-9);
        }
    }
}
