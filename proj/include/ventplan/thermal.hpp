#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ventplan/constructions.hpp"
#include "ventplan/plan.hpp"
#include "ventplan/schedules.hpp"
#include "ventplan/weather.hpp"

namespace ventplan {

inline constexpr double kAirDensity = 1.2;     // kg/m³
inline constexpr double kAirSpecificHeat = 1005.0;  // J/(kg K)
// Lumped multiplier standing in for furniture and envelope mass around the
// air node.
inline constexpr double kCapacitanceMultiplier = 15.0;
inline constexpr double kCrackAch = 0.4;
inline constexpr double kDischargeCoefficient = 0.6;
inline constexpr double kGravity = 9.81;

inline constexpr int kOutdoorNode = -1;
inline constexpr int kGroundNode = -2;
// Soil in series with the ground slab, m²K/W. Stands in for the stabilised
// earth under a slab on grade.
inline constexpr double kSoilResistance = 3.5;

// One heat-conducting element of a zone boundary. `other_zone` points at the
// coupled zone, the outdoors, or the ground under the slab.
struct ThermalSurface {
    double area = 0;  // m², net of any openings it hosts
    ElementKind element = ElementKind::ExteriorWall;
    double azimuth_world = 0;
    int other_zone = kOutdoorNode;
    // Windows keep their geometry for solar gain and shading.
    double window_width = 0;
    double window_height = 0;
    ShadingDevice shading_device;
    std::string opening_id;
};

struct Zone {
    std::string space_id;
    SpaceFunction function = SpaceFunction::Hall;
    int function_instance = 0;  // position among same-function zones, id order
    double floor_area = 0;      // m²
    double volume = 0;          // m³
    double capacitance = 0;     // J/K
    std::vector<ThermalSurface> surfaces;
};

enum class LinkKind { Crack, Window, Door };

struct AirLink {
    LinkKind kind = LinkKind::Crack;
    int zone_a = 0;
    int zone_b = kOutdoorNode;
    double open_area = 0;       // m² fully open
    double opening_height = 0;  // m, stack height
    double fixed_flow = 0;      // m³/s, cracks only
    double modulation = 0;      // fraction of open_area active this hour
    OpeningKind source_kind = OpeningKind::Window;
    std::string opening_id;
};

struct ThermalModel {
    std::vector<Zone> zones;
    std::vector<AirLink> links;
    ConstructionSet constructions;
    OccupancyModel occupancy;

    int zone_index(const std::string& space_id) const;
};

// Per-hour window-opening policy. Returns the opening fraction in [0,1],
// decided at the start of the hour; must only open when outdoor air is
// cooler than the zone.
class VentControl {
  public:
    virtual ~VentControl() = default;
    virtual double window_signal(SpaceFunction f, int instance, int slot, double t_in,
                                 double t_out) const = 0;
    virtual std::string name() const = 0;
};

struct SimConfig {
    int substeps = 1;        // per-hour integration substeps
    int warmup_hours = 168;  // pre-roll over the tail of the year
    // Zone heat capacity as a multiple of the air capacity. The default suits
    // lightweight interiors; masonry buildings sit around 50-60.
    double capacitance_multiplier = kCapacitanceMultiplier;
};

struct ZoneSeries {
    std::vector<std::string> zone_ids;
    std::vector<SpaceFunction> functions;
    std::vector<int> function_instances;
    std::vector<std::vector<double>> air_temp;  // [zone][8760] °C
    std::vector<std::vector<double>> ach;       // [zone][8760] outdoor air changes
};

// Zones, conduction surfaces and air links for a validated plan. Throws when
// the plan has overlapping spaces or mis-placed openings.
ThermalModel build_thermal_model(const FloorPlan& plan, const ConstructionSet& constructions,
                                 const OccupancyModel& schedules,
                                 double capacitance_multiplier = kCapacitanceMultiplier);

// Stack-driven exchange through an opening between `t_a` and `t_b` sides,
// m³/s; cracks return their fixed flow scaled by modulation.
double ventilation_flow(const AirLink& link, double t_a, double t_b);

// Daily soil temperature under the slab: annual mean plus a damped trailing
// mean of outdoor air, so the ground lags the seasons by about a month.
std::vector<double> ground_temperature_series(const WeatherYear& weather);

// Hourly march over the weather year. Null control = sealed envelope
// (windows shut, interior doors ajar at 10%).
ZoneSeries simulate_year(const ThermalModel& model, const WeatherYear& weather,
                         const VentControl* control, const SimConfig& cfg = {});

std::string zone_series_to_csv(const ZoneSeries& series);

}  // namespace ventplan
