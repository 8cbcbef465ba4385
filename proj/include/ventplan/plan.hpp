#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ventplan/geometry.hpp"

namespace ventplan {

enum class SpaceFunction { Hall, Corridor, Kitchen, LivingRoom, Bedroom, Bathroom };

enum class OpeningKind { Window, InteriorDoor, ExteriorDoor };

// 45-degree compass wedge, e.g. S covers world azimuths [157.5, 202.5).
enum class CompassSector { N, NE, E, SE, S, SW, W, NW };

const char* to_string(SpaceFunction f);
const char* to_string(OpeningKind k);
const char* to_string(Side s);
const char* to_string(CompassSector c);

std::optional<SpaceFunction> space_function_from_string(const std::string& s);
std::optional<OpeningKind> opening_kind_from_string(const std::string& s);
std::optional<Side> side_from_string(const std::string& s);
std::optional<CompassSector> compass_sector_from_string(const std::string& s);

struct Space {
    std::string id;
    SpaceFunction function = SpaceFunction::Hall;
    Rect rect;
    double ceiling_height = 2.7;  // default when the program does not specify one
};

// Openings sit on a plan-local wall side of their host space. `offset` runs
// along the wall axis: from the west end on N/S walls, from the south end on
// E/W walls. Interior doors name the space they lead to in `links_to`.
struct Opening {
    std::string id;
    OpeningKind kind = OpeningKind::Window;
    std::string host_space;
    Side wall_side = Side::South;
    double offset = 0.0;
    double width = 1.0;
    double height = 1.1;
    double sill = 0.9;
    std::optional<std::string> links_to;
};

struct ShadingDevice {
    std::string opening;
    double overhang_depth = 0.0;
    double left_fin_depth = 0.0;
    double right_fin_depth = 0.0;
};

// `orientation` rotates the whole plan clockwise from North; `reflected`
// mirrors it about the plan y-axis (applied before the rotation).
struct FloorPlan {
    std::vector<Space> spaces;
    std::vector<Opening> openings;
    std::vector<ShadingDevice> shading;
    double orientation = 0.0;
    bool reflected = false;

    const Space* find_space(const std::string& id) const;
    const Opening* find_opening(const std::string& id) const;
    const ShadingDevice* find_shading(const std::string& opening_id) const;
    ShadingDevice* find_shading(const std::string& opening_id);

    // World azimuth of the outward normal of a plan-local side.
    double world_azimuth(Side s) const {
        double local = side_local_azimuth(s);
        if (reflected) local = wrap_degrees(360.0 - local);
        return wrap_degrees(local + orientation);
    }

    double total_floor_area() const;
};

struct SpaceRequirement {
    SpaceFunction function = SpaceFunction::Hall;
    int count = 1;
    double min_floor_area = 1.0;
    double min_window_width = 0.0;  // 0 = no window required
};

struct OrientationPreference {
    SpaceFunction function = SpaceFunction::LivingRoom;
    CompassSector sector = CompassSector::S;
};

struct DesignProgram {
    std::vector<SpaceRequirement> required_spaces;
    // Each space of the second function must share a valid interior door with
    // some space of the first function.
    std::vector<std::pair<SpaceFunction, SpaceFunction>> connectivity;
    std::vector<OrientationPreference> opening_orientation_prefs;
    double max_construction_area = 0.0;

    const SpaceRequirement* requirement_for(SpaceFunction f) const;
    double min_total_area() const;
};

// One exterior wall piece of one space, with its world-frame facing.
struct EnvelopeSegment {
    std::size_t space_index = 0;
    Side side = Side::North;
    Interval span;  // along the wall axis, absolute plan coordinates
    double azimuth_world = 0.0;
};

// Every wall piece not shared with another space, after applying the plan's
// reflection and orientation to the facing directions.
std::vector<EnvelopeSegment> envelope_sides(const FloorPlan& plan);

enum class ViolationKind {
    MissingSpace,
    Overlap,
    AreaDeficit,
    WindowWidthDeficit,
    MissingConnectivity,
    OrientationMismatch,
    OverArea,
    InvalidOpening,
    UnreachableSpace,
};

const char* to_string(ViolationKind k);

struct Violation {
    ViolationKind kind = ViolationKind::MissingSpace;
    std::string subject;   // space/opening/function the entry refers to
    double magnitude = 0;  // m², meters or count depending on kind
    std::string detail;
};

// Empty report iff the plan satisfies every program requirement and every
// geometric invariant (no overlaps, openings validly placed, all spaces
// reachable from the hall through interior doors).
std::vector<Violation> validate(const FloorPlan& plan, const DesignProgram& program);

// True when the opening's span lies on its host wall and, for envelope kinds,
// entirely on the plan envelope; for interior doors, entirely on a shared
// wall piece with its linked space.
bool opening_validly_placed(const FloorPlan& plan, const Opening& op);

// Azimuth wedge test for orientation preferences.
bool azimuth_in_sector(double azimuth_deg, CompassSector sector);

double sector_center_azimuth(CompassSector sector);

}  // namespace ventplan
