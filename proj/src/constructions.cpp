#include "ventplan/constructions.hpp"

#include <cmath>

#include "ventplan/errors.hpp"

namespace ventplan {

const char* to_string(ElementKind k) {
    switch (k) {
        case ElementKind::ExteriorWall: return "exterior_wall";
        case ElementKind::InteriorWall: return "interior_wall";
        case ElementKind::CeilingSlab: return "ceiling_slab";
        case ElementKind::Roof: return "roof";
        case ElementKind::ExteriorDoor: return "exterior_door";
        case ElementKind::InteriorDoor: return "interior_door";
        case ElementKind::Window: return "window";
    }
    return "?";
}

double u_value(const std::vector<ConstructionLayer>& layers, double r_si, double r_se) {
    if (layers.empty()) throw ConfigError("u_value needs at least one layer");
    double r = r_si + r_se;
    for (const auto& l : layers) {
        if (l.conductivity <= 0)
            throw ConfigError("non-positive conductivity in layer \"" + l.material + "\"");
        if (l.thickness <= 0)
            throw ConfigError("non-positive thickness in layer \"" + l.material + "\"");
        r += l.thickness / l.conductivity;
    }
    return 1.0 / r;
}

std::pair<double, double> film_resistances(ElementKind kind) {
    switch (kind) {
        case ElementKind::Roof:
        case ElementKind::CeilingSlab:
            return {0.10, 0.04};
        case ElementKind::InteriorWall:
        case ElementKind::InteriorDoor:
            return {0.13, 0.13};
        default:
            return {0.13, 0.04};
    }
}

double Construction::u() const {
    if (stated_u) return *stated_u;
    if (kind == ElementKind::Window) return glazing_u;
    auto [rsi, rse] = film_resistances(kind);
    return u_value(layers, rsi, rse);
}

namespace {

ConstructionLayer layer(const char* name, double t, double k, double rho, double cp,
                        double solar_abs = 0.7) {
    ConstructionLayer l;
    l.material = name;
    l.thickness = t;
    l.conductivity = k;
    l.density = rho;
    l.specific_heat = cp;
    l.thermal_absorptance = 0.9;
    l.solar_absorptance = solar_abs;
    l.visible_absorptance = solar_abs;
    return l;
}

}  // namespace

ConstructionSet builtin_constructions() {
    ConstructionSet set;

    {
        Construction c;
        c.kind = ElementKind::ExteriorWall;  // reference U 0.43
        c.layers = {
            layer("exterior plaster", 0.02, 0.43, 1250.0, 1088.0, 0.5),
            layer("dense brick", 0.11, 1.25, 2082.4, 920.5, 0.7),
            layer("insulation board", 0.08, 0.04, 32.0, 836.8, 0.6),
            layer("concrete block", 0.15, 1.73, 2242.6, 836.8, 0.65),
            layer("gypsum plaster", 0.02, 0.22, 950.0, 840.0, 0.5),
        };
        set[c.kind] = c;
    }
    {
        Construction c;
        c.kind = ElementKind::InteriorWall;  // reference U 2.17
        c.layers = {
            layer("gypsum plaster", 0.02, 0.22, 950.0, 840.0, 0.5),
            layer("concrete block", 0.07, 1.73, 2242.6, 836.8, 0.65),
            layer("gypsum plaster", 0.02, 0.22, 950.0, 840.0, 0.5),
        };
        set[c.kind] = c;
    }
    {
        Construction c;
        c.kind = ElementKind::CeilingSlab;  // reference U 2.60
        c.layers = {
            layer("heavyweight concrete", 0.20, 1.73, 2242.6, 836.8, 0.65),
            layer("hardwood floor", 0.03, 0.20, 720.8, 1255.2, 0.6),
        };
        set[c.kind] = c;
    }
    {
        Construction c;
        c.kind = ElementKind::Roof;  // reference U 0.37
        c.layers = {
            layer("slag topping", 0.015, 1.44, 1121.3, 1673.6, 0.85),
            layer("felt membrane", 0.01, 0.19, 1121.3, 1673.6, 0.85),
            layer("dense insulation", 0.10, 0.04, 91.3, 836.8, 0.6),
            layer("heavyweight concrete", 0.20, 1.73, 2242.6, 836.8, 0.65),
            layer("gypsum plaster", 0.02, 0.22, 950.0, 840.0, 0.5),
        };
        set[c.kind] = c;
    }
    {
        Construction c;
        c.kind = ElementKind::ExteriorDoor;  // reference U 2.86
        c.layers = {
            layer("insulation core", 0.01, 0.04, 32.0, 836.8, 0.6),
            layer("hardwood leaf", 0.01, 0.16, 720.8, 1255.2, 0.6),
        };
        // The thin layer set lands far from the reference value, so the
        // reference wins.
        c.stated_u = 2.86;
        set[c.kind] = c;
    }
    {
        Construction c;
        c.kind = ElementKind::InteriorDoor;  // reference U 1.36
        c.layers = {
            layer("hardwood skin", 0.005, 0.16, 720.8, 1255.2, 0.6),
            layer("chipboard core", 0.03, 0.07, 800.0, 1300.0, 0.6),
            layer("hardwood skin", 0.005, 0.16, 720.8, 1255.2, 0.6),
        };
        set[c.kind] = c;
    }
    {
        Construction c;
        c.kind = ElementKind::Window;  // double glazing
        c.glazing_u = 2.60;
        c.g_value = 0.63;
        c.visible_transmittance = 0.70;
        set[c.kind] = c;
    }

    return set;
}

}  // namespace ventplan
