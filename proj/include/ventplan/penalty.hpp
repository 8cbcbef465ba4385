#pragma once

#include <vector>

#include "ventplan/plan.hpp"

namespace ventplan {

struct DesignWeights {
    double overlap = 10.0;       // per m² of pairwise overlap
    double connectivity = 10.0;  // per missing space, invalid opening, missing
                                 // door link or unreachable space
    double area = 1.0;           // per m² of floor-area deficit
    double window_width = 1.0;   // per m of window-width deficit
    double orientation = 1.0;    // per space lacking a preferred-facing window
    double over_area = 1.0;      // per m² above the construction limit
};

struct DesignPenalty {
    double overlap_area = 0;        // m²
    double connectivity_count = 0;  // hard topological failures
    double area_deficit = 0;        // m²
    double window_width_deficit = 0;  // m
    double orientation_count = 0;
    double over_area = 0;  // m²
    double total = 0;
};

DesignPenalty accumulate_penalty(const std::vector<Violation>& violations,
                                 const DesignWeights& weights = {});

// Zero total exactly when validate() returns no violations.
DesignPenalty design_penalty(const FloorPlan& plan, const DesignProgram& program,
                             const DesignWeights& weights = {});

}  // namespace ventplan
