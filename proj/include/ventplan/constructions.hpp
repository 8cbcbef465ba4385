#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ventplan {

struct ConstructionLayer {
    std::string material;
    double thickness = 0;      // m
    double conductivity = 0;   // W/(m K)
    double density = 0;        // kg/m³
    double specific_heat = 0;  // J/(kg K)
    double thermal_absorptance = 0.9;
    double solar_absorptance = 0.7;
    double visible_absorptance = 0.7;
};

enum class ElementKind {
    ExteriorWall,
    InteriorWall,
    CeilingSlab,
    Roof,
    ExteriorDoor,
    InteriorDoor,
    Window,
};

const char* to_string(ElementKind k);

struct Construction {
    ElementKind kind = ElementKind::ExteriorWall;
    std::vector<ConstructionLayer> layers;  // outside to inside; empty for glazing

    // Glazing-only properties.
    double glazing_u = 0;
    double g_value = 0;
    double visible_transmittance = 0;

    // Set when the layer set cannot reproduce the reference U-value; wins
    // over the computed one.
    std::optional<double> stated_u;

    double u() const;  // effective U-value, W/(m² K)
};

// Series resistance with standard surface films; r_si/r_se default to the
// vertical-wall values 0.13/0.04.
double u_value(const std::vector<ConstructionLayer>& layers, double r_si = 0.13,
               double r_se = 0.04);

// Surface film resistances appropriate for the element kind.
std::pair<double, double> film_resistances(ElementKind kind);

using ConstructionSet = std::map<ElementKind, Construction>;

// The built-in residential construction set used by the case study.
ConstructionSet builtin_constructions();

}  // namespace ventplan
