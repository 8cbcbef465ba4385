#include "ventplan/plan.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>

namespace ventplan {

const char* to_string(SpaceFunction f) {
    switch (f) {
        case SpaceFunction::Hall: return "hall";
        case SpaceFunction::Corridor: return "corridor";
        case SpaceFunction::Kitchen: return "kitchen";
        case SpaceFunction::LivingRoom: return "living_room";
        case SpaceFunction::Bedroom: return "bedroom";
        case SpaceFunction::Bathroom: return "bathroom";
    }
    return "?";
}

const char* to_string(OpeningKind k) {
    switch (k) {
        case OpeningKind::Window: return "window";
        case OpeningKind::InteriorDoor: return "interior_door";
        case OpeningKind::ExteriorDoor: return "exterior_door";
    }
    return "?";
}

const char* to_string(Side s) {
    switch (s) {
        case Side::North: return "N";
        case Side::South: return "S";
        case Side::East: return "E";
        case Side::West: return "W";
    }
    return "?";
}

const char* to_string(CompassSector c) {
    switch (c) {
        case CompassSector::N: return "N";
        case CompassSector::NE: return "NE";
        case CompassSector::E: return "E";
        case CompassSector::SE: return "SE";
        case CompassSector::S: return "S";
        case CompassSector::SW: return "SW";
        case CompassSector::W: return "W";
        case CompassSector::NW: return "NW";
    }
    return "?";
}

std::optional<SpaceFunction> space_function_from_string(const std::string& s) {
    if (s == "hall") return SpaceFunction::Hall;
    if (s == "corridor") return SpaceFunction::Corridor;
    if (s == "kitchen") return SpaceFunction::Kitchen;
    if (s == "living_room") return SpaceFunction::LivingRoom;
    if (s == "bedroom") return SpaceFunction::Bedroom;
    if (s == "bathroom") return SpaceFunction::Bathroom;
    return std::nullopt;
}

std::optional<OpeningKind> opening_kind_from_string(const std::string& s) {
    if (s == "window") return OpeningKind::Window;
    if (s == "interior_door") return OpeningKind::InteriorDoor;
    if (s == "exterior_door") return OpeningKind::ExteriorDoor;
    return std::nullopt;
}

std::optional<Side> side_from_string(const std::string& s) {
    if (s == "N") return Side::North;
    if (s == "S") return Side::South;
    if (s == "E") return Side::East;
    if (s == "W") return Side::West;
    return std::nullopt;
}

std::optional<CompassSector> compass_sector_from_string(const std::string& s) {
    if (s == "N") return CompassSector::N;
    if (s == "NE") return CompassSector::NE;
    if (s == "E") return CompassSector::E;
    if (s == "SE") return CompassSector::SE;
    if (s == "S") return CompassSector::S;
    if (s == "SW") return CompassSector::SW;
    if (s == "W") return CompassSector::W;
    if (s == "NW") return CompassSector::NW;
    return std::nullopt;
}

const Space* FloorPlan::find_space(const std::string& id) const {
    for (const auto& s : spaces)
        if (s.id == id) return &s;
    return nullptr;
}

const Opening* FloorPlan::find_opening(const std::string& id) const {
    for (const auto& o : openings)
        if (o.id == id) return &o;
    return nullptr;
}

const ShadingDevice* FloorPlan::find_shading(const std::string& opening_id) const {
    for (const auto& d : shading)
        if (d.opening == opening_id) return &d;
    return nullptr;
}

ShadingDevice* FloorPlan::find_shading(const std::string& opening_id) {
    for (auto& d : shading)
        if (d.opening == opening_id) return &d;
    return nullptr;
}

double FloorPlan::total_floor_area() const {
    double a = 0;
    for (const auto& s : spaces) a += s.rect.area();
    return a;
}

const SpaceRequirement* DesignProgram::requirement_for(SpaceFunction f) const {
    for (const auto& r : required_spaces)
        if (r.function == f) return &r;
    return nullptr;
}

double DesignProgram::min_total_area() const {
    double a = 0;
    for (const auto& r : required_spaces) a += r.count * r.min_floor_area;
    return a;
}

double sector_center_azimuth(CompassSector sector) {
    return 45.0 * static_cast<double>(sector);
}

bool azimuth_in_sector(double azimuth_deg, CompassSector sector) {
    double center = sector_center_azimuth(sector);
    double delta = wrap_degrees(azimuth_deg - center);
    if (delta >= 180.0) delta -= 360.0;  // now in [-180, 180)
    return delta >= -22.5 && delta < 22.5;
}

namespace {

// Remove `cut` from each interval in `pieces`, keeping what is left over.
void subtract_interval(std::vector<Interval>& pieces, const Interval& cut) {
    std::vector<Interval> out;
    out.reserve(pieces.size() + 1);
    for (const auto& p : pieces) {
        double lo = std::max(p.lo, cut.lo);
        double hi = std::min(p.hi, cut.hi);
        if (hi - lo <= kCoincidenceEps) {
            out.push_back(p);
            continue;
        }
        if (lo - p.lo > kCoincidenceEps) out.push_back({p.lo, lo});
        if (p.hi - hi > kCoincidenceEps) out.push_back({hi, p.hi});
    }
    pieces = std::move(out);
}

// Exterior wall pieces of one side of one space, in absolute plan coordinates.
std::vector<Interval> envelope_pieces(const FloorPlan& plan, std::size_t space_index, Side side) {
    const Rect& r = plan.spaces[space_index].rect;
    std::vector<Interval> pieces{side_span(r, side)};
    for (std::size_t j = 0; j < plan.spaces.size() && !pieces.empty(); ++j) {
        if (j == space_index) continue;
        Interval shared = shared_interval(r, plan.spaces[j].rect, side);
        if (shared.length() > kCoincidenceEps) subtract_interval(pieces, shared);
    }
    return pieces;
}

// True when [lo,hi] lies inside one of the intervals (within tolerance).
bool contained_in_any(const std::vector<Interval>& pieces, double lo, double hi) {
    for (const auto& p : pieces)
        if (lo >= p.lo - kCoincidenceEps && hi <= p.hi + kCoincidenceEps) return true;
    return false;
}

}  // namespace

std::vector<EnvelopeSegment> envelope_sides(const FloorPlan& plan) {
    std::vector<EnvelopeSegment> segs;
    for (std::size_t i = 0; i < plan.spaces.size(); ++i) {
        for (Side side : kAllSides) {
            for (const auto& piece : envelope_pieces(plan, i, side)) {
                segs.push_back({i, side, piece, plan.world_azimuth(side)});
            }
        }
    }
    return segs;
}

bool opening_validly_placed(const FloorPlan& plan, const Opening& op) {
    const Space* host = plan.find_space(op.host_space);
    if (!host) return false;
    if (op.width <= kCoincidenceEps || op.height <= kCoincidenceEps) return false;
    if (op.sill < -kCoincidenceEps) return false;
    if (op.sill + op.height > host->ceiling_height + kCoincidenceEps) return false;

    double wall_len = side_length(host->rect, op.wall_side);
    if (op.offset < -kCoincidenceEps) return false;
    if (op.offset + op.width > wall_len + kCoincidenceEps) return false;

    Interval span = side_span(host->rect, op.wall_side);
    double lo = span.lo + op.offset;
    double hi = lo + op.width;

    std::size_t host_index = 0;
    for (std::size_t i = 0; i < plan.spaces.size(); ++i)
        if (&plan.spaces[i] == host) host_index = i;

    if (op.kind == OpeningKind::InteriorDoor) {
        if (!op.links_to || *op.links_to == op.host_space) return false;
        const Space* other = plan.find_space(*op.links_to);
        if (!other) return false;
        Interval shared = shared_interval(host->rect, other->rect, op.wall_side);
        if (shared.length() <= kCoincidenceEps) return false;
        return lo >= shared.lo - kCoincidenceEps && hi <= shared.hi + kCoincidenceEps;
    }

    // Windows and exterior doors must sit fully on the plan envelope.
    return contained_in_any(envelope_pieces(plan, host_index, op.wall_side), lo, hi);
}

const char* to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::MissingSpace: return "missing_space";
        case ViolationKind::Overlap: return "overlap";
        case ViolationKind::AreaDeficit: return "area_deficit";
        case ViolationKind::WindowWidthDeficit: return "window_width_deficit";
        case ViolationKind::MissingConnectivity: return "missing_connectivity";
        case ViolationKind::OrientationMismatch: return "orientation_mismatch";
        case ViolationKind::OverArea: return "over_area";
        case ViolationKind::InvalidOpening: return "invalid_opening";
        case ViolationKind::UnreachableSpace: return "unreachable_space";
    }
    return "?";
}

std::vector<Violation> validate(const FloorPlan& plan, const DesignProgram& program) {
    std::vector<Violation> out;

    std::map<SpaceFunction, std::vector<const Space*>> by_function;
    for (const auto& s : plan.spaces) by_function[s.function].push_back(&s);

    for (const auto& req : program.required_spaces) {
        int have = 0;
        auto it = by_function.find(req.function);
        if (it != by_function.end()) have = static_cast<int>(it->second.size());
        if (have < req.count) {
            out.push_back({ViolationKind::MissingSpace, to_string(req.function),
                           static_cast<double>(req.count - have),
                           "need " + std::to_string(req.count) + ", have " + std::to_string(have)});
        }
    }

    for (std::size_t i = 0; i < plan.spaces.size(); ++i) {
        for (std::size_t j = i + 1; j < plan.spaces.size(); ++j) {
            double a = overlap_area(plan.spaces[i].rect, plan.spaces[j].rect);
            if (a > kCoincidenceEps) {
                out.push_back({ViolationKind::Overlap,
                               plan.spaces[i].id + "+" + plan.spaces[j].id, a, ""});
            }
        }
    }

    // Openings checked once; placement results reused below.
    std::map<std::string, bool> opening_ok;
    std::set<std::string> opening_ids;
    for (const auto& op : plan.openings) {
        bool ok = opening_validly_placed(plan, op) && !opening_ids.count(op.id);
        opening_ids.insert(op.id);
        opening_ok[op.id] = ok;
        if (!ok) out.push_back({ViolationKind::InvalidOpening, op.id, 1.0, ""});
    }

    for (const auto& req : program.required_spaces) {
        auto it = by_function.find(req.function);
        if (it == by_function.end()) continue;
        for (const Space* s : it->second) {
            double deficit = req.min_floor_area - s->rect.area();
            if (deficit > kCoincidenceEps)
                out.push_back({ViolationKind::AreaDeficit, s->id, deficit, ""});
            if (req.min_window_width > 0) {
                double window_width = 0;
                for (const auto& op : plan.openings) {
                    if (op.kind == OpeningKind::Window && op.host_space == s->id &&
                        opening_ok[op.id])
                        window_width += op.width;
                }
                double wdef = req.min_window_width - window_width;
                if (wdef > kCoincidenceEps)
                    out.push_back({ViolationKind::WindowWidthDeficit, s->id, wdef, ""});
            }
        }
    }

    // Interior-door adjacency between two named spaces, in either direction.
    auto connected = [&](const std::string& a, const std::string& b) {
        for (const auto& op : plan.openings) {
            if (op.kind != OpeningKind::InteriorDoor || !opening_ok.at(op.id)) continue;
            if (!op.links_to) continue;
            if ((op.host_space == a && *op.links_to == b) ||
                (op.host_space == b && *op.links_to == a))
                return true;
        }
        return false;
    };

    for (const auto& [from, to] : program.connectivity) {
        auto it = by_function.find(to);
        if (it == by_function.end()) continue;
        auto from_it = by_function.find(from);
        for (const Space* s : it->second) {
            bool ok = false;
            if (from_it != by_function.end()) {
                for (const Space* f : from_it->second) {
                    if (connected(f->id, s->id)) {
                        ok = true;
                        break;
                    }
                }
            }
            if (!ok) {
                out.push_back({ViolationKind::MissingConnectivity, s->id, 1.0,
                               std::string("no door to a ") + to_string(from)});
            }
        }
    }

    for (const auto& pref : program.opening_orientation_prefs) {
        auto it = by_function.find(pref.function);
        if (it == by_function.end()) continue;
        for (const Space* s : it->second) {
            bool ok = false;
            for (const auto& op : plan.openings) {
                if (op.kind != OpeningKind::Window || op.host_space != s->id ||
                    !opening_ok.at(op.id))
                    continue;
                if (azimuth_in_sector(plan.world_azimuth(op.wall_side), pref.sector)) {
                    ok = true;
                    break;
                }
            }
            if (!ok) {
                out.push_back({ViolationKind::OrientationMismatch, s->id, 1.0,
                               std::string("no window facing ") + to_string(pref.sector)});
            }
        }
    }

    if (program.max_construction_area > 0) {
        double excess = plan.total_floor_area() - program.max_construction_area;
        if (excess > kCoincidenceEps)
            out.push_back({ViolationKind::OverArea, "plan", excess, ""});
    }

    // Breadth-first walk from the halls through valid interior doors.
    std::set<std::string> reached;
    std::deque<std::string> frontier;
    for (const auto& s : plan.spaces) {
        if (s.function == SpaceFunction::Hall) {
            reached.insert(s.id);
            frontier.push_back(s.id);
        }
    }
    while (!frontier.empty()) {
        std::string cur = frontier.front();
        frontier.pop_front();
        for (const auto& op : plan.openings) {
            if (op.kind != OpeningKind::InteriorDoor || !opening_ok.at(op.id) || !op.links_to)
                continue;
            std::string next;
            if (op.host_space == cur)
                next = *op.links_to;
            else if (*op.links_to == cur)
                next = op.host_space;
            else
                continue;
            if (reached.insert(next).second) frontier.push_back(next);
        }
    }
    for (const auto& s : plan.spaces) {
        if (!reached.count(s.id))
            out.push_back({ViolationKind::UnreachableSpace, s.id, 1.0, ""});
    }

    return out;
}

}  // namespace ventplan
