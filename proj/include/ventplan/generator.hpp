#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ventplan/penalty.hpp"
#include "ventplan/plan.hpp"
#include "ventplan/rng.hpp"

namespace ventplan {

struct SearchConfig {
    int population_size = 32;
    int offspring_per_parent = 4;
    int generations = 300;
    int ls_moves_per_individual = 500;
    std::uint64_t seed = 0;
    int target_count = 8;
    int jobs = 0;  // 0 = all hardware threads, 1 = serial reference path
};

// Square site the search places rooms on, sized from the construction bound.
double site_side(const DesignProgram& program);

// Random initial population: required space counts and sizes honoured,
// openings roughed in (geometry is repaired later by search). Throws when the
// program cannot fit its own minimum areas.
std::vector<FloorPlan> seed_population(const DesignProgram& program, const SearchConfig& cfg);

// First-improvement hill climb over the move repertoire (translate, resize,
// swap, align edge, slide/resize/relocate opening). Never returns a plan
// worse than the input.
FloorPlan local_search(const FloorPlan& plan, const DesignProgram& program, int moves,
                       Rng& rng);

// Geometry key for distinctness: space rects normalised to the layout's
// bounding-box origin, quantised to 0.1 m and sorted.
std::string fingerprint(const FloorPlan& plan);

struct EpsapResult {
    std::vector<FloorPlan> designs;  // zero-penalty, distinct, compactness-ranked
    std::vector<double> best_penalty_by_generation;
    int generations_run = 0;
    bool reached_target = false;
};

// (mu+lambda) evolution strategy with self-adaptive mutation step and local
// search on every offspring; stops early once enough distinct zero-penalty
// designs are archived. Throws when the target count is not reached.
EpsapResult run_epsap(const DesignProgram& program, const SearchConfig& cfg);

}  // namespace ventplan
