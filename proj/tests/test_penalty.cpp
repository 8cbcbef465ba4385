#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "ventplan/penalty.hpp"

using namespace ventplan;
using testsupport::two_room_plan;
using testsupport::two_room_program;

TEST_CASE("satisfying plan scores zero") {
    DesignPenalty p = design_penalty(two_room_plan(), two_room_program());
    CHECK(p.total == 0.0);
    CHECK(p.overlap_area == 0.0);
    CHECK(p.connectivity_count == 0.0);
}

TEST_CASE("six square meters of overlap at unit weight costs six") {
    FloorPlan plan = two_room_plan();
    plan.spaces[1].rect.x = 2.0;  // 2x3 overlap with the hall
    plan.openings.clear();
    DesignWeights w;
    w.overlap = 1.0;
    w.connectivity = 0.0;  // openings were removed, silence those terms
    w.orientation = 0.0;
    w.window_width = 0.0;
    DesignPenalty p = design_penalty(plan, two_room_program(), w);
    CHECK(p.overlap_area == doctest::Approx(6.0));
    CHECK(p.total == doctest::Approx(6.0));
}

TEST_CASE("accumulate_penalty sorts magnitudes into buckets and weights the total") {
    std::vector<Violation> vs;
    vs.push_back({ViolationKind::Overlap, "a/b", 0.6, ""});
    vs.push_back({ViolationKind::AreaDeficit, "bedroom_1", 2.5, ""});
    vs.push_back({ViolationKind::MissingConnectivity, "hall-bedroom", 1.0, ""});
    vs.push_back({ViolationKind::UnreachableSpace, "bedroom_1", 1.0, ""});
    vs.push_back({ViolationKind::WindowWidthDeficit, "win_bed", 0.4, ""});
    vs.push_back({ViolationKind::OrientationMismatch, "bedroom_1", 1.0, ""});
    vs.push_back({ViolationKind::OverArea, "plan", 4.0, ""});

    DesignPenalty p = accumulate_penalty(vs);
    CHECK(p.overlap_area == doctest::Approx(0.6));
    CHECK(p.connectivity_count == doctest::Approx(2.0));
    CHECK(p.area_deficit == doctest::Approx(2.5));
    CHECK(p.window_width_deficit == doctest::Approx(0.4));
    CHECK(p.orientation_count == doctest::Approx(1.0));
    CHECK(p.over_area == doctest::Approx(4.0));
    // Default weights: overlap and topology 10x, the rest 1x.
    CHECK(p.total == doctest::Approx(10 * 0.6 + 10 * 2.0 + 2.5 + 0.4 + 1.0 + 4.0));
}

TEST_CASE("missing spaces and invalid openings count as topology failures") {
    std::vector<Violation> vs;
    vs.push_back({ViolationKind::MissingSpace, "bathroom", 1.0, ""});
    vs.push_back({ViolationKind::InvalidOpening, "win_x", 1.0, ""});
    DesignPenalty p = accumulate_penalty(vs);
    CHECK(p.connectivity_count == doctest::Approx(2.0));
    CHECK(p.total == doctest::Approx(20.0));
}

TEST_CASE("penalty scales linearly in the weights") {
    FloorPlan plan = two_room_plan();
    plan.spaces[1].rect = {4, 0, 4, 2};  // area deficit against min 10
    plan.openings[1].offset = 0.5;
    auto program = two_room_program();

    DesignWeights w2;
    w2.overlap *= 2;
    w2.connectivity *= 2;
    w2.area *= 2;
    w2.window_width *= 2;
    w2.orientation *= 2;
    w2.over_area *= 2;
    double p1 = design_penalty(plan, program).total;
    double p2 = design_penalty(plan, program, w2).total;
    CHECK(p1 > 0.0);
    CHECK(p2 == doctest::Approx(2.0 * p1));
}

TEST_CASE("zero total exactly when validation is clean") {
    auto program = two_room_program();
    FloorPlan good = two_room_plan();
    CHECK(validate(good, program).empty());
    CHECK(design_penalty(good, program).total == 0.0);

    FloorPlan bad = two_room_plan();
    bad.openings[2].width = 0.5;
    CHECK_FALSE(validate(bad, program).empty());
    CHECK(design_penalty(bad, program).total > 0.0);
}
