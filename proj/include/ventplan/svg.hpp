#pragma once

#include <optional>
#include <string>

#include "ventplan/plan.hpp"

namespace ventplan {

struct SvgOptions {
    double scale = 40;   // px per metre
    double margin = 30;  // px around the drawing
    std::string design_id;
    std::optional<double> design_penalty;   // geometric constraint penalty
    std::optional<double> sealed_penalty;   // annual degree-hours, sealed
};

// To-scale top view: one labeled rect per space, openings as wall gaps
// (windows double-stroked), shading dashed, North arrow top right rotated
// with the plan orientation, header with the design id and penalties.
std::string render_svg(const FloorPlan& plan, const SvgOptions& opts = {});

}  // namespace ventplan
