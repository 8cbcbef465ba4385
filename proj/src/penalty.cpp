#include "ventplan/penalty.hpp"

namespace ventplan {

DesignPenalty accumulate_penalty(const std::vector<Violation>& violations,
                                 const DesignWeights& weights) {
    DesignPenalty p;
    for (const auto& v : violations) {
        switch (v.kind) {
            case ViolationKind::Overlap:
                p.overlap_area += v.magnitude;
                break;
            case ViolationKind::MissingSpace:
            case ViolationKind::InvalidOpening:
            case ViolationKind::MissingConnectivity:
            case ViolationKind::UnreachableSpace:
                p.connectivity_count += v.magnitude;
                break;
            case ViolationKind::AreaDeficit:
                p.area_deficit += v.magnitude;
                break;
            case ViolationKind::WindowWidthDeficit:
                p.window_width_deficit += v.magnitude;
                break;
            case ViolationKind::OrientationMismatch:
                p.orientation_count += v.magnitude;
                break;
            case ViolationKind::OverArea:
                p.over_area += v.magnitude;
                break;
        }
    }
    p.total = weights.overlap * p.overlap_area + weights.connectivity * p.connectivity_count +
              weights.area * p.area_deficit + weights.window_width * p.window_width_deficit +
              weights.orientation * p.orientation_count + weights.over_area * p.over_area;
    return p;
}

DesignPenalty design_penalty(const FloorPlan& plan, const DesignProgram& program,
                             const DesignWeights& weights) {
    return accumulate_penalty(validate(plan, program), weights);
}

}  // namespace ventplan
