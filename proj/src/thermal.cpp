#include "ventplan/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>

#include "ventplan/errors.hpp"
#include "ventplan/penalty.hpp"

namespace ventplan {

namespace {

constexpr int kHoursPerYear = 8760;
// Interior doors stay ajar at this fraction even in sealed mode.
constexpr double kDoorAjar = 0.1;

}  // namespace

int ThermalModel::zone_index(const std::string& space_id) const {
    for (size_t i = 0; i < zones.size(); ++i)
        if (zones[i].space_id == space_id) return static_cast<int>(i);
    return -1;
}

double ventilation_flow(const AirLink& link, double t_a, double t_b) {
    if (link.kind == LinkKind::Crack) return link.fixed_flow * link.modulation;
    if (link.modulation <= 0) return 0.0;
    double dt = std::abs(t_a - t_b);
    if (dt <= 0) return 0.0;
    double t_mean_k = 0.5 * (t_a + t_b) + 273.15;
    double area = link.modulation * link.open_area;
    return (1.0 / 3.0) * kDischargeCoefficient * area *
           std::sqrt(kGravity * link.opening_height * dt / t_mean_k);
}

std::vector<double> ground_temperature_series(const WeatherYear& weather) {
    auto daily = weather.daily_mean_dry_bulb();
    int n = static_cast<int>(daily.size());
    double annual = std::accumulate(daily.begin(), daily.end(), 0.0) / n;
    constexpr int kTrailDays = 60;
    constexpr double kDamping = 0.6;
    std::vector<double> ground(n, annual);
    for (int d = 0; d < n; ++d) {
        double sum = 0;
        for (int k = 1; k <= kTrailDays; ++k) sum += daily[((d - k) % n + n) % n];
        ground[d] = annual + kDamping * (sum / kTrailDays - annual);
    }
    return ground;
}

ThermalModel build_thermal_model(const FloorPlan& plan, const ConstructionSet& constructions,
                                 const OccupancyModel& schedules,
                                 double capacitance_multiplier) {
    if (capacitance_multiplier < 1.0)
        throw SimulationError("capacitance multiplier must be at least 1");
    for (size_t i = 0; i < plan.spaces.size(); ++i) {
        for (size_t j = i + 1; j < plan.spaces.size(); ++j) {
            if (overlap_area(plan.spaces[i].rect, plan.spaces[j].rect) > kCoincidenceEps)
                throw SimulationError("plan rejected: spaces " + plan.spaces[i].id + " and " +
                                      plan.spaces[j].id + " overlap");
        }
    }
    std::set<std::string> seen_ids;
    for (const auto& op : plan.openings) {
        if (!seen_ids.insert(op.id).second)
            throw SimulationError("plan rejected: duplicate opening id " + op.id);
        if (!opening_validly_placed(plan, op))
            throw SimulationError("plan rejected: opening " + op.id + " is invalidly placed");
    }
    for (ElementKind k :
         {ElementKind::ExteriorWall, ElementKind::InteriorWall, ElementKind::CeilingSlab,
          ElementKind::Roof, ElementKind::ExteriorDoor, ElementKind::InteriorDoor,
          ElementKind::Window}) {
        if (!constructions.count(k))
            throw SimulationError(std::string("construction set lacks ") + to_string(k));
    }

    ThermalModel model;
    model.constructions = constructions;
    model.occupancy = schedules;

    std::map<SpaceFunction, std::vector<std::string>> ids_by_function;
    for (const auto& s : plan.spaces) ids_by_function[s.function].push_back(s.id);
    for (auto& [f, ids] : ids_by_function) std::sort(ids.begin(), ids.end());

    for (const auto& s : plan.spaces) {
        Zone z;
        z.space_id = s.id;
        z.function = s.function;
        const auto& ids = ids_by_function[s.function];
        z.function_instance =
            static_cast<int>(std::find(ids.begin(), ids.end(), s.id) - ids.begin());
        z.floor_area = s.rect.area();
        z.volume = z.floor_area * s.ceiling_height;
        z.capacitance = capacitance_multiplier * kAirDensity * kAirSpecificHeat * z.volume;
        model.zones.push_back(std::move(z));
    }

    // Envelope: opaque wall pieces net of their openings, plus the openings
    // themselves as conducting surfaces.
    auto envelope = envelope_sides(plan);
    for (const auto& seg : envelope) {
        const Space& host = plan.spaces[seg.space_index];
        double gross = seg.span.length() * host.ceiling_height;
        double openings_area = 0;
        for (const auto& op : plan.openings) {
            if (op.host_space != host.id || op.wall_side != seg.side) continue;
            if (op.kind == OpeningKind::InteriorDoor) continue;
            Interval span = side_span(host.rect, op.wall_side);
            double lo = span.lo + op.offset;
            if (lo >= seg.span.lo - kCoincidenceEps &&
                lo + op.width <= seg.span.hi + kCoincidenceEps)
                openings_area += op.width * op.height;
        }
        ThermalSurface surf;
        surf.area = std::max(0.0, gross - openings_area);
        surf.element = ElementKind::ExteriorWall;
        surf.azimuth_world = seg.azimuth_world;
        surf.other_zone = kOutdoorNode;
        if (surf.area > kCoincidenceEps)
            model.zones[seg.space_index].surfaces.push_back(surf);
    }

    for (const auto& op : plan.openings) {
        int zi = model.zone_index(op.host_space);
        double az = plan.world_azimuth(op.wall_side);
        if (op.kind == OpeningKind::Window) {
            ThermalSurface surf;
            surf.area = op.width * op.height;
            surf.element = ElementKind::Window;
            surf.azimuth_world = az;
            surf.other_zone = kOutdoorNode;
            surf.window_width = op.width;
            surf.window_height = op.height;
            surf.opening_id = op.id;
            if (const ShadingDevice* dev = plan.find_shading(op.id)) surf.shading_device = *dev;
            model.zones[zi].surfaces.push_back(surf);

            AirLink link;
            link.kind = LinkKind::Window;
            link.zone_a = zi;
            link.zone_b = kOutdoorNode;
            link.open_area = op.width * op.height;
            link.opening_height = op.height;
            link.source_kind = OpeningKind::Window;
            link.opening_id = op.id;
            model.links.push_back(link);
        } else if (op.kind == OpeningKind::ExteriorDoor) {
            ThermalSurface surf;
            surf.area = op.width * op.height;
            surf.element = ElementKind::ExteriorDoor;
            surf.azimuth_world = az;
            surf.other_zone = kOutdoorNode;
            surf.opening_id = op.id;
            model.zones[zi].surfaces.push_back(surf);

            // Envelope link that stays shut in every mode; infiltration is
            // covered by the crack flow.
            AirLink link;
            link.kind = LinkKind::Window;
            link.zone_a = zi;
            link.zone_b = kOutdoorNode;
            link.open_area = op.width * op.height;
            link.opening_height = op.height;
            link.source_kind = OpeningKind::ExteriorDoor;
            link.opening_id = op.id;
            model.links.push_back(link);
        } else {
            int zj = model.zone_index(*op.links_to);
            ThermalSurface panel;
            panel.area = op.width * op.height;
            panel.element = ElementKind::InteriorDoor;
            panel.opening_id = op.id;
            panel.other_zone = zj;
            model.zones[zi].surfaces.push_back(panel);
            panel.other_zone = zi;
            model.zones[zj].surfaces.push_back(panel);

            AirLink link;
            link.kind = LinkKind::Door;
            link.zone_a = zi;
            link.zone_b = zj;
            link.open_area = op.width * op.height;
            link.opening_height = op.height;
            link.source_kind = OpeningKind::InteriorDoor;
            link.opening_id = op.id;
            model.links.push_back(link);
        }
    }

    // Shared interior walls, one aggregate surface per space pair, net of the
    // doors that connect the pair.
    for (size_t i = 0; i < plan.spaces.size(); ++i) {
        for (size_t j = i + 1; j < plan.spaces.size(); ++j) {
            const Space& a = plan.spaces[i];
            const Space& b = plan.spaces[j];
            double shared_len = shared_wall_length(a.rect, b.rect);
            if (shared_len <= kCoincidenceEps) continue;
            double height = std::min(a.ceiling_height, b.ceiling_height);
            double area = shared_len * height;
            for (const auto& op : plan.openings) {
                if (op.kind != OpeningKind::InteriorDoor || !op.links_to) continue;
                if ((op.host_space == a.id && *op.links_to == b.id) ||
                    (op.host_space == b.id && *op.links_to == a.id))
                    area -= op.width * op.height;
            }
            if (area <= kCoincidenceEps) continue;
            ThermalSurface wall;
            wall.area = area;
            wall.element = ElementKind::InteriorWall;
            wall.other_zone = static_cast<int>(j);
            model.zones[i].surfaces.push_back(wall);
            wall.other_zone = static_cast<int>(i);
            model.zones[j].surfaces.push_back(wall);
        }
    }

    // The roof closes the envelope above, the slab on grade below. One crack
    // per zone covers background infiltration.
    for (size_t i = 0; i < model.zones.size(); ++i) {
        Zone& z = model.zones[i];
        ThermalSurface roof;
        roof.area = z.floor_area;
        roof.element = ElementKind::Roof;
        roof.other_zone = kOutdoorNode;
        z.surfaces.push_back(roof);

        ThermalSurface slab;
        slab.area = z.floor_area;
        slab.element = ElementKind::CeilingSlab;
        slab.other_zone = kGroundNode;
        z.surfaces.push_back(slab);

        AirLink crack;
        crack.kind = LinkKind::Crack;
        crack.zone_a = static_cast<int>(i);
        crack.zone_b = kOutdoorNode;
        crack.fixed_flow = z.volume * kCrackAch / 3600.0;
        crack.modulation = 1.0;
        model.links.push_back(crack);
    }

    return model;
}

ZoneSeries simulate_year(const ThermalModel& model, const WeatherYear& weather,
                         const VentControl* control, const SimConfig& cfg) {
    if (cfg.substeps < 1) throw ConfigError("substeps must be >= 1");
    const size_t nz = model.zones.size();
    if (nz == 0) throw SimulationError("model has no zones");

    std::map<ElementKind, double> u_by_element;
    for (const auto& [k, c] : model.constructions) u_by_element[k] = c.u();
    double window_g = model.constructions.at(ElementKind::Window).g_value;

    // Internal gains repeat daily per zone.
    std::vector<std::array<double, 24>> gains_by_slot(nz);
    for (size_t z = 0; z < nz; ++z) {
        for (int slot = 0; slot < 24; ++slot) {
            gains_by_slot[z][slot] = model.occupancy.internal_gains(
                model.zones[z].function, model.zones[z].function_instance,
                model.zones[z].floor_area, slot);
        }
    }

    ZoneSeries series;
    for (const auto& z : model.zones) {
        series.zone_ids.push_back(z.space_id);
        series.functions.push_back(z.function);
        series.function_instances.push_back(z.function_instance);
    }
    series.air_temp.assign(nz, std::vector<double>(kHoursPerYear, 0.0));
    series.ach.assign(nz, std::vector<double>(kHoursPerYear, 0.0));

    std::vector<double> t_ground = ground_temperature_series(weather);
    std::vector<double> temp(nz, weather.records[0].dry_bulb);
    std::vector<double> next(nz, 0.0);
    std::vector<AirLink> links = model.links;
    std::vector<double> zone_gains(nz, 0.0);

    double dt = 3600.0 / cfg.substeps;

    auto step_hour = [&](int h, bool record) {
        const WeatherRecord& rec = weather.records[h];
        int slot = h % 24;
        int day = h / 24;
        SunPosition sun = sun_position(weather.location, day % 365 + 1, slot + 0.5);
        double t_out = rec.dry_bulb;

        // Opening modulation decided once per hour, on start-of-hour state.
        for (auto& link : links) {
            switch (link.kind) {
                case LinkKind::Crack:
                    link.modulation = 1.0;
                    break;
                case LinkKind::Window: {
                    if (!control || link.source_kind == OpeningKind::ExteriorDoor) {
                        link.modulation = 0.0;
                        break;
                    }
                    const Zone& z = model.zones[link.zone_a];
                    double sig = control->window_signal(z.function, z.function_instance, slot,
                                                        temp[link.zone_a], t_out);
                    if (sig > 0 && t_out >= temp[link.zone_a])
                        throw SimulationError(
                            "vent control opened a window without outdoor air cooler than zone " +
                            z.space_id);
                    link.modulation = std::clamp(sig, 0.0, 1.0);
                    break;
                }
                case LinkKind::Door: {
                    double sig = kDoorAjar;
                    if (control) {
                        const Zone& za = model.zones[link.zone_a];
                        const Zone& zb = model.zones[link.zone_b];
                        double sa = control->window_signal(za.function, za.function_instance,
                                                           slot, temp[link.zone_a], t_out);
                        double sb = control->window_signal(zb.function, zb.function_instance,
                                                           slot, temp[link.zone_b], t_out);
                        sig = std::max({kDoorAjar, sa, sb});
                    }
                    link.modulation = std::clamp(sig, 0.0, 1.0);
                    break;
                }
            }
        }

        // Hour-constant gains: schedule loads plus transmitted solar.
        for (size_t z = 0; z < nz; ++z) {
            double g = gains_by_slot[z][slot];
            for (const auto& surf : model.zones[z].surfaces) {
                if (surf.element != ElementKind::Window) continue;
                double beam = beam_on_wall(rec, sun, surf.azimuth_world);
                if (beam > 0) {
                    beam *= 1.0 - shading_fraction(surf.shading_device, surf.window_width,
                                                   surf.window_height, sun, surf.azimuth_world);
                }
                double irr = beam + 0.5 * rec.diffuse_horizontal;
                g += irr * window_g * surf.area;
            }
            zone_gains[z] = g;
        }

        std::vector<double> outdoor_air(nz, 0.0);  // m³ over the hour
        for (int sub = 0; sub < cfg.substeps; ++sub) {
            std::vector<double> k_tot(nz, 0.0);
            std::vector<double> k_times_t(nz, 0.0);

            for (size_t z = 0; z < nz; ++z) {
                for (const auto& surf : model.zones[z].surfaces) {
                    double ua;
                    double t_nb;
                    if (surf.other_zone == kGroundNode) {
                        ua = surf.area / (1.0 / u_by_element.at(surf.element) + kSoilResistance);
                        t_nb = t_ground[day % 365];
                    } else {
                        ua = u_by_element.at(surf.element) * surf.area;
                        t_nb = surf.other_zone == kOutdoorNode
                                   ? t_out
                                   : temp[static_cast<size_t>(surf.other_zone)];
                    }
                    k_tot[z] += ua;
                    k_times_t[z] += ua * t_nb;
                }
            }
            for (const auto& link : links) {
                double t_a = temp[link.zone_a];
                double t_b = link.zone_b == kOutdoorNode ? t_out : temp[link.zone_b];
                double q = ventilation_flow(link, t_a, t_b);
                if (q <= 0) continue;
                double k = kAirDensity * kAirSpecificHeat * q;
                k_tot[link.zone_a] += k;
                k_times_t[link.zone_a] += k * t_b;
                if (link.zone_b != kOutdoorNode) {
                    k_tot[link.zone_b] += k;
                    k_times_t[link.zone_b] += k * t_a;
                } else {
                    outdoor_air[link.zone_a] += q * dt;
                }
            }

            for (size_t z = 0; z < nz; ++z) {
                double c = model.zones[z].capacitance;
                if (k_tot[z] <= 1e-12) {
                    next[z] = temp[z] + zone_gains[z] * dt / c;
                    continue;
                }
                double t_eq = (k_times_t[z] + zone_gains[z]) / k_tot[z];
                next[z] = t_eq + (temp[z] - t_eq) * std::exp(-dt * k_tot[z] / c);
            }
            temp = next;
        }

        if (record) {
            for (size_t z = 0; z < nz; ++z) {
                series.air_temp[z][h] = temp[z];
                series.ach[z][h] = outdoor_air[z] / model.zones[z].volume;
            }
        }
    };

    int warmup = std::min(cfg.warmup_hours, kHoursPerYear);
    for (int h = kHoursPerYear - warmup; h < kHoursPerYear; ++h) step_hour(h, false);
    for (int h = 0; h < kHoursPerYear; ++h) step_hour(h, true);

    return series;
}

std::string zone_series_to_csv(const ZoneSeries& series) {
    std::string out = "zone_id,hour_of_year,air_temp_C,ach\n";
    char buf[128];
    for (size_t z = 0; z < series.zone_ids.size(); ++z) {
        for (int h = 0; h < kHoursPerYear; ++h) {
            std::snprintf(buf, sizeof(buf), "%s,%d,%.3f,%.4f\n", series.zone_ids[z].c_str(),
                          h + 1, series.air_temp[z][h], series.ach[z][h]);
            out += buf;
        }
    }
    return out;
}

}  // namespace ventplan
