#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ventplan/geometry.hpp"
#include "ventplan/rng.hpp"

using namespace ventplan;

TEST_CASE("overlap_area on axis-aligned rectangles") {
    Rect a{0, 0, 4, 3};
    CHECK(overlap_area(a, Rect{2, 0, 4, 3}) == doctest::Approx(6.0));
    CHECK(overlap_area(a, a) == doctest::Approx(12.0));
    CHECK(overlap_area(a, Rect{10, 10, 2, 2}) == doctest::Approx(0.0));
    // Touching edges share no area.
    CHECK(overlap_area(a, Rect{4, 0, 3, 3}) == doctest::Approx(0.0));
}

TEST_CASE("shared_wall_length counts only touching colinear edges") {
    Rect a{0, 0, 4, 3};
    CHECK(shared_wall_length(a, Rect{4, 0, 3, 3}) == doctest::Approx(3.0));
    CHECK(shared_wall_length(a, Rect{4, 2, 3, 3}) == doctest::Approx(1.0));
    CHECK(shared_wall_length(a, Rect{5, 0, 3, 3}) == doctest::Approx(0.0));
    // Corner contact has zero-length shared wall.
    CHECK(shared_wall_length(a, Rect{4, 3, 2, 2}) == doctest::Approx(0.0));
    // Vertical stacking shares the horizontal edge.
    CHECK(shared_wall_length(a, Rect{1, 3, 2, 2}) == doctest::Approx(2.0));
}

TEST_CASE("overlap and shared wall are symmetric and non-negative") {
    Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        Rect a{rng.uniform(0, 10), rng.uniform(0, 10), rng.uniform(0.5, 6), rng.uniform(0.5, 6)};
        Rect b{rng.uniform(0, 10), rng.uniform(0, 10), rng.uniform(0.5, 6), rng.uniform(0.5, 6)};
        double oab = overlap_area(a, b);
        CHECK(oab >= 0.0);
        CHECK(oab == doctest::Approx(overlap_area(b, a)));
        CHECK(oab <= std::min(a.area(), b.area()) + 1e-9);
        double wab = shared_wall_length(a, b);
        CHECK(wab >= 0.0);
        CHECK(wab == doctest::Approx(shared_wall_length(b, a)));
    }
}

TEST_CASE("side helpers") {
    Rect r{1, 2, 4, 3};
    CHECK(side_length(r, Side::North) == doctest::Approx(4.0));
    CHECK(side_length(r, Side::East) == doctest::Approx(3.0));
    CHECK(side_coord(r, Side::North) == doctest::Approx(5.0));
    CHECK(side_coord(r, Side::South) == doctest::Approx(2.0));
    CHECK(side_coord(r, Side::East) == doctest::Approx(5.0));
    CHECK(side_coord(r, Side::West) == doctest::Approx(1.0));
    auto span_n = side_span(r, Side::North);
    CHECK(span_n.lo == doctest::Approx(1.0));
    CHECK(span_n.hi == doctest::Approx(5.0));
    auto span_e = side_span(r, Side::East);
    CHECK(span_e.lo == doctest::Approx(2.0));
    CHECK(span_e.hi == doctest::Approx(5.0));
    CHECK(opposite(Side::North) == Side::South);
    CHECK(opposite(Side::East) == Side::West);
}

TEST_CASE("local azimuth per side, plan north up") {
    CHECK(side_local_azimuth(Side::North) == doctest::Approx(0.0));
    CHECK(side_local_azimuth(Side::East) == doctest::Approx(90.0));
    CHECK(side_local_azimuth(Side::South) == doctest::Approx(180.0));
    CHECK(side_local_azimuth(Side::West) == doctest::Approx(270.0));
}

TEST_CASE("wrap_degrees maps into [0, 360)") {
    CHECK(wrap_degrees(0.0) == doctest::Approx(0.0));
    CHECK(wrap_degrees(360.0) == doctest::Approx(0.0));
    CHECK(wrap_degrees(-45.0) == doctest::Approx(315.0));
    CHECK(wrap_degrees(725.0) == doctest::Approx(5.0));
    CHECK(wrap_degrees(-720.0) == doctest::Approx(0.0));
}

TEST_CASE("shared_interval tolerates coincidence noise") {
    Rect a{0, 0, 4, 3};
    // A wall misaligned by far less than the coincidence epsilon still abuts.
    Rect near{4 + kCoincidenceEps / 10, 0, 3, 3};
    CHECK(shared_wall_length(a, near) == doctest::Approx(3.0));
    Rect apart{4.01, 0, 3, 3};
    CHECK(shared_wall_length(a, apart) == doctest::Approx(0.0));
}
