#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "test_support.hpp"
#include "ventplan/errors.hpp"
#include "ventplan/io_util.hpp"
#include "ventplan/plan.hpp"
#include "ventplan/plan_io.hpp"

using namespace ventplan;
using testsupport::two_room_plan;
using testsupport::two_room_program;

namespace {

bool has_kind(const std::vector<Violation>& vs, ViolationKind k) {
    return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.kind == k; });
}

const Violation* find_kind(const std::vector<Violation>& vs, ViolationKind k) {
    for (const auto& v : vs)
        if (v.kind == k) return &v;
    return nullptr;
}

}  // namespace

TEST_CASE("reference two-room plan validates cleanly") {
    CHECK(validate(two_room_plan(), two_room_program()).empty());
    CHECK(two_room_plan().total_floor_area() == doctest::Approx(24.0));
}

TEST_CASE("envelope of a single space has one segment per side") {
    FloorPlan plan;
    Space s;
    s.id = "hall_1";
    s.function = SpaceFunction::Hall;
    s.rect = {0, 0, 5, 4};
    plan.spaces = {s};
    auto segs = envelope_sides(plan);
    REQUIRE(segs.size() == 4);
    for (Side side : kAllSides) {
        auto it = std::find_if(segs.begin(), segs.end(),
                               [&](const EnvelopeSegment& e) { return e.side == side; });
        REQUIRE(it != segs.end());
        CHECK(it->span.length() == doctest::Approx(side_length(s.rect, side)));
        CHECK(it->azimuth_world == doctest::Approx(side_local_azimuth(side)));
    }
}

TEST_CASE("orientation rotates envelope azimuths") {
    FloorPlan plan;
    Space s;
    s.id = "hall_1";
    s.function = SpaceFunction::Hall;
    s.rect = {0, 0, 5, 4};
    plan.spaces = {s};
    plan.orientation = 90.0;
    auto segs = envelope_sides(plan);
    auto north = std::find_if(segs.begin(), segs.end(),
                              [](const EnvelopeSegment& e) { return e.side == Side::North; });
    REQUIRE(north != segs.end());
    // Plan-local north faces world east once the plan is rotated 90 degrees.
    CHECK(north->azimuth_world == doctest::Approx(90.0));
}

TEST_CASE("reflection mirrors azimuths before rotation") {
    FloorPlan plan = two_room_plan();
    plan.reflected = true;
    CHECK(plan.world_azimuth(Side::East) == doctest::Approx(270.0));
    CHECK(plan.world_azimuth(Side::West) == doctest::Approx(90.0));
    CHECK(plan.world_azimuth(Side::North) == doctest::Approx(0.0));
    plan.orientation = 45.0;
    CHECK(plan.world_azimuth(Side::East) == doctest::Approx(315.0));
}

TEST_CASE("shared walls drop out of the envelope") {
    auto segs = envelope_sides(two_room_plan());
    double total = 0;
    for (const auto& seg : segs) {
        total += seg.span.length();
        // Nothing on the shared x=4 line: hall east and bedroom west are
        // interior faces.
        const auto& plan = two_room_plan();
        const Rect& r = plan.spaces[seg.space_index].rect;
        bool hall_east = seg.space_index == 0 && seg.side == Side::East;
        bool bed_west = seg.space_index == 1 && seg.side == Side::West;
        CHECK_FALSE(hall_east);
        CHECK_FALSE(bed_west);
        (void)r;
    }
    // Union outline is 8x3.
    CHECK(total == doctest::Approx(22.0));
}

TEST_CASE("validate flags each violation kind") {
    auto program = two_room_program();

    SUBCASE("missing space") {
        FloorPlan plan = two_room_plan();
        plan.spaces.pop_back();  // drop the bedroom
        plan.openings.clear();
        auto vs = validate(plan, program);
        CHECK(has_kind(vs, ViolationKind::MissingSpace));
    }
    SUBCASE("overlap magnitude is the overlap area") {
        FloorPlan plan = two_room_plan();
        plan.spaces[1].rect.x = 2.0;  // bedroom now overlaps the hall by 2x3
        plan.openings.clear();
        auto vs = validate(plan, program);
        const Violation* v = find_kind(vs, ViolationKind::Overlap);
        REQUIRE(v != nullptr);
        CHECK(v->magnitude == doctest::Approx(6.0));
    }
    SUBCASE("area deficit magnitude") {
        FloorPlan plan = two_room_plan();
        plan.spaces[1].rect = {4, 0, 4, 2};  // 8 m² against a 10.5 minimum
        program.required_spaces[1].min_floor_area = 10.5;
        // Width shrank, keep openings on walls.
        plan.openings[1].offset = 0.5;
        auto vs = validate(plan, program);
        const Violation* v = find_kind(vs, ViolationKind::AreaDeficit);
        REQUIRE(v != nullptr);
        CHECK(v->magnitude == doctest::Approx(2.5));
    }
    SUBCASE("window width deficit") {
        FloorPlan plan = two_room_plan();
        plan.openings[2].width = 0.6;  // program wants 1.0 in the bedroom
        auto vs = validate(plan, program);
        const Violation* v = find_kind(vs, ViolationKind::WindowWidthDeficit);
        REQUIRE(v != nullptr);
        CHECK(v->magnitude == doctest::Approx(0.4));
    }
    SUBCASE("missing connectivity and unreachable space") {
        FloorPlan plan = two_room_plan();
        plan.openings.erase(plan.openings.begin() + 1);  // interior door
        auto vs = validate(plan, program);
        CHECK(has_kind(vs, ViolationKind::MissingConnectivity));
        CHECK(has_kind(vs, ViolationKind::UnreachableSpace));
    }
    SUBCASE("orientation mismatch") {
        FloorPlan plan = two_room_plan();
        plan.orientation = 180.0;  // bedroom window now faces world north
        auto vs = validate(plan, program);
        CHECK(has_kind(vs, ViolationKind::OrientationMismatch));
    }
    SUBCASE("over construction area") {
        FloorPlan plan = two_room_plan();
        program.max_construction_area = 20.0;  // plan covers 24
        auto vs = validate(plan, program);
        const Violation* v = find_kind(vs, ViolationKind::OverArea);
        REQUIRE(v != nullptr);
        CHECK(v->magnitude == doctest::Approx(4.0));
    }
    SUBCASE("invalid opening placement") {
        FloorPlan plan = two_room_plan();
        plan.openings[2].offset = 3.5;  // runs past the bedroom's south wall
        auto vs = validate(plan, program);
        CHECK(has_kind(vs, ViolationKind::InvalidOpening));
    }
}

TEST_CASE("opening_validly_placed checks wall spans") {
    FloorPlan plan = two_room_plan();
    CHECK(opening_validly_placed(plan, plan.openings[0]));
    CHECK(opening_validly_placed(plan, plan.openings[1]));
    CHECK(opening_validly_placed(plan, plan.openings[2]));

    Opening off_wall = plan.openings[2];
    off_wall.offset = 3.5;  // 3.5 + 1.2 > 4 m wall
    CHECK_FALSE(opening_validly_placed(plan, off_wall));

    // The hall's east side is interior, so an exterior door there is invalid.
    Opening buried = plan.openings[0];
    buried.wall_side = Side::East;
    buried.offset = 0.5;
    CHECK_FALSE(opening_validly_placed(plan, buried));

    // An interior door somewhere without a shared wall is invalid.
    Opening detached = plan.openings[1];
    detached.wall_side = Side::West;
    CHECK_FALSE(opening_validly_placed(plan, detached));
}

TEST_CASE("azimuth sector wedges are half-open 45 degree spans") {
    CHECK(azimuth_in_sector(180.0, CompassSector::S));
    CHECK(azimuth_in_sector(157.5, CompassSector::S));
    CHECK_FALSE(azimuth_in_sector(202.5, CompassSector::S));
    CHECK(azimuth_in_sector(202.5, CompassSector::SW));
    // North wraps across 0.
    CHECK(azimuth_in_sector(350.0, CompassSector::N));
    CHECK(azimuth_in_sector(0.0, CompassSector::N));
    CHECK(azimuth_in_sector(22.4, CompassSector::N));
    CHECK_FALSE(azimuth_in_sector(22.5, CompassSector::N));
    CHECK(sector_center_azimuth(CompassSector::S) == doctest::Approx(180.0));
    CHECK(sector_center_azimuth(CompassSector::N) == doctest::Approx(0.0));
}

TEST_CASE("floor plan json round trip preserves every field") {
    FloorPlan plan = two_room_plan();
    plan.orientation = 45.0;
    plan.reflected = true;
    ShadingDevice dev;
    dev.opening = "win_bed";
    dev.overhang_depth = 0.6;
    dev.left_fin_depth = 0.3;
    plan.shading = {dev};

    FloorPlan back = floorplan_from_json(floorplan_to_json(plan));
    CHECK(back.orientation == plan.orientation);
    CHECK(back.reflected == plan.reflected);
    REQUIRE(back.spaces.size() == plan.spaces.size());
    for (size_t i = 0; i < plan.spaces.size(); ++i) {
        CHECK(back.spaces[i].id == plan.spaces[i].id);
        CHECK(back.spaces[i].function == plan.spaces[i].function);
        CHECK(back.spaces[i].rect.x == plan.spaces[i].rect.x);
        CHECK(back.spaces[i].rect.w == plan.spaces[i].rect.w);
        CHECK(back.spaces[i].ceiling_height == plan.spaces[i].ceiling_height);
    }
    REQUIRE(back.openings.size() == plan.openings.size());
    for (size_t i = 0; i < plan.openings.size(); ++i) {
        CHECK(back.openings[i].id == plan.openings[i].id);
        CHECK(back.openings[i].kind == plan.openings[i].kind);
        CHECK(back.openings[i].wall_side == plan.openings[i].wall_side);
        CHECK(back.openings[i].offset == plan.openings[i].offset);
        CHECK(back.openings[i].width == plan.openings[i].width);
        CHECK(back.openings[i].height == plan.openings[i].height);
        CHECK(back.openings[i].sill == plan.openings[i].sill);
        CHECK(back.openings[i].links_to == plan.openings[i].links_to);
    }
    REQUIRE(back.shading.size() == 1);
    CHECK(back.shading[0].opening == "win_bed");
    CHECK(back.shading[0].overhang_depth == 0.6);
    CHECK(back.shading[0].left_fin_depth == 0.3);
    CHECK(back.shading[0].right_fin_depth == 0.0);
}

TEST_CASE("saved plan files are byte stable") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "ventplan_plan_io_test";
    fs::create_directories(dir);
    fs::path p1 = dir / "a.json";
    fs::path p2 = dir / "b.json";

    FloorPlan plan = two_room_plan();
    plan.orientation = 135.0;
    save_floorplan(plan, p1);
    FloorPlan loaded = load_floorplan(p1);
    save_floorplan(loaded, p2);
    CHECK(read_text_file(p1) == read_text_file(p2));
    CHECK(read_text_file(p1).back() == '\n');
    fs::remove_all(dir);
}

TEST_CASE("loading errors carry path and type") {
    CHECK_THROWS_AS(load_floorplan("/nonexistent/floorplan.json"), IoError);

    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "ventplan_plan_io_bad";
    fs::create_directories(dir);
    fs::path bad = dir / "bad.json";
    std::ofstream(bad) << "{\"schema\": \"something/9\"}";
    CHECK_THROWS_AS(load_floorplan(bad), ConfigError);
    fs::path garbage = dir / "garbage.json";
    std::ofstream(garbage) << "not json at all";
    CHECK_THROWS_AS(load_floorplan(garbage), ConfigError);
    fs::remove_all(dir);
}

TEST_CASE("design program json round trip") {
    DesignProgram prog = two_room_program();
    DesignProgram back = program_from_json(program_to_json(prog));
    REQUIRE(back.required_spaces.size() == 2);
    CHECK(back.required_spaces[1].function == SpaceFunction::Bedroom);
    CHECK(back.required_spaces[1].min_floor_area == 10.0);
    CHECK(back.required_spaces[1].min_window_width == 1.0);
    REQUIRE(back.connectivity.size() == 1);
    CHECK(back.connectivity[0].first == SpaceFunction::Hall);
    REQUIRE(back.opening_orientation_prefs.size() == 1);
    CHECK(back.opening_orientation_prefs[0].sector == CompassSector::S);
    CHECK(back.max_construction_area == 40.0);
    CHECK(back.min_total_area() == doctest::Approx(20.0));
}
