#pragma once

#include <algorithm>
#include <cmath>

namespace ventplan {

// Coordinate tolerance for wall coincidence tests, in meters.
inline constexpr double kCoincidenceEps = 1e-6;

// Axis-aligned rectangle, lower-left corner + extent, meters.
struct Rect {
    double x = 0.0;
    double y = 0.0;
    double w = 0.0;
    double h = 0.0;

    double right() const { return x + w; }
    double top() const { return y + h; }
    double area() const { return w * h; }
    double cx() const { return x + 0.5 * w; }
    double cy() const { return y + 0.5 * h; }
};

// Plan-local wall side of a rectangular space.
enum class Side { North, South, East, West };

inline constexpr Side kAllSides[4] = {Side::North, Side::South, Side::East, Side::West};

// Outward normal direction of a side, degrees clockwise from plan-local north.
inline double side_local_azimuth(Side s) {
    switch (s) {
        case Side::North: return 0.0;
        case Side::South: return 180.0;
        case Side::East: return 90.0;
        case Side::West: return 270.0;
    }
    return 0.0;
}

inline double side_length(const Rect& r, Side s) {
    return (s == Side::North || s == Side::South) ? r.w : r.h;
}

// 1-D interval along a wall. For N/S walls the axis is x, measured from the
// west end; for E/W walls it is y, measured from the south end.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double length() const { return hi - lo; }
};

// Interval a side spans along its wall axis, in absolute plan coordinates.
inline Interval side_span(const Rect& r, Side s) {
    if (s == Side::North || s == Side::South) return {r.x, r.right()};
    return {r.y, r.top()};
}

// Fixed coordinate of a side (y for N/S, x for E/W).
inline double side_coord(const Rect& r, Side s) {
    switch (s) {
        case Side::North: return r.top();
        case Side::South: return r.y;
        case Side::East: return r.right();
        case Side::West: return r.x;
    }
    return 0.0;
}

inline Side opposite(Side s) {
    switch (s) {
        case Side::North: return Side::South;
        case Side::South: return Side::North;
        case Side::East: return Side::West;
        case Side::West: return Side::East;
    }
    return Side::North;
}

inline double overlap_area(const Rect& a, const Rect& b) {
    double ox = std::min(a.right(), b.right()) - std::max(a.x, b.x);
    double oy = std::min(a.top(), b.top()) - std::max(a.y, b.y);
    if (ox <= 0.0 || oy <= 0.0) return 0.0;
    return ox * oy;
}

// Coincident boundary interval on side `s` of `a` against `b`, or a
// zero-length interval when the walls do not touch.
inline Interval shared_interval(const Rect& a, const Rect& b, Side s) {
    if (std::abs(side_coord(a, s) - side_coord(b, opposite(s))) > kCoincidenceEps) return {0.0, 0.0};
    Interval ia = side_span(a, s);
    Interval ib = side_span(b, opposite(s));
    double lo = std::max(ia.lo, ib.lo);
    double hi = std::min(ia.hi, ib.hi);
    if (hi - lo <= kCoincidenceEps) return {0.0, 0.0};
    return {lo, hi};
}

inline double shared_wall_length(const Rect& a, const Rect& b) {
    double total = 0.0;
    for (Side s : kAllSides) total += shared_interval(a, b, s).length();
    return total;
}

// Wrap an angle into [0, 360).
inline double wrap_degrees(double deg) {
    double d = std::fmod(deg, 360.0);
    if (d < 0.0) d += 360.0;
    return d;
}

}  // namespace ventplan
