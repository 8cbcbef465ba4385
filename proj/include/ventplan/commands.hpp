#pragma once

#include <string>
#include <vector>

#include "ventplan/project.hpp"
#include "ventplan/scenarios.hpp"

namespace ventplan {

// Output layout under project.output_dir: plans/, optimized/, compare/,
// svg/, plus a run_meta.json sidecar holding the only timestamps.

struct GenerateOutput {
    std::vector<std::string> ids;  // compactness order
    int generations_run = 0;
};

// Evolve distinct constraint-free plans and write plans/design_NN.json plus
// an index with fingerprints and penalties.
GenerateOutput cmd_generate(const Project& project);

struct OptimizeOutput {
    std::vector<std::string> ids;  // rank order, best first
};

// Sweep every generated plan in sealed mode; write optimized plans, traces
// and ranking.csv.
OptimizeOutput cmd_optimize(const Project& project);

// Run the ventilation scenario matrix over the optimized plans; write the
// matrix as CSV and aligned text, daily difference series and seasonal
// benefit shares. `scenario_filter` keeps only the named scenario (the
// sealed reference always stays).
ScenarioMatrix cmd_compare(const Project& project, const std::string& scenario_filter = "");

// Render every plan found under plans/ and optimized/ to svg/. Returns the
// number of files written.
int cmd_render(const Project& project);

void cmd_all(const Project& project, const std::string& scenario_filter = "");

}  // namespace ventplan
