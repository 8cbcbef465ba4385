#include "ventplan/plan_io.hpp"

#include "ventplan/errors.hpp"
#include "ventplan/io_util.hpp"

namespace ventplan {

namespace {

const ordered_json& field(const ordered_json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw ConfigError(std::string("missing field \"") + name + "\"");
    return *it;
}

double number_field(const ordered_json& j, const char* name) {
    const auto& v = field(j, name);
    if (!v.is_number()) throw ConfigError(std::string("field \"") + name + "\" must be a number");
    return v.get<double>();
}

std::string string_field(const ordered_json& j, const char* name) {
    const auto& v = field(j, name);
    if (!v.is_string()) throw ConfigError(std::string("field \"") + name + "\" must be a string");
    return v.get<std::string>();
}

void check_schema(const ordered_json& j, const char* expected) {
    std::string got = string_field(j, "schema");
    if (got != expected)
        throw ConfigError("schema mismatch: expected \"" + std::string(expected) + "\", got \"" +
                          got + "\"");
}

ordered_json rect_to_json(const Rect& r) {
    return ordered_json{{"x", r.x}, {"y", r.y}, {"w", r.w}, {"h", r.h}};
}

Rect rect_from_json(const ordered_json& j) {
    return {number_field(j, "x"), number_field(j, "y"), number_field(j, "w"),
            number_field(j, "h")};
}

}  // namespace

ordered_json floorplan_to_json(const FloorPlan& plan) {
    ordered_json j;
    j["schema"] = kFloorPlanSchema;
    j["orientation"] = plan.orientation;
    j["reflected"] = plan.reflected;
    j["spaces"] = ordered_json::array();
    for (const auto& s : plan.spaces) {
        j["spaces"].push_back(ordered_json{{"id", s.id},
                                           {"function", to_string(s.function)},
                                           {"rect", rect_to_json(s.rect)},
                                           {"ceiling_height", s.ceiling_height}});
    }
    j["openings"] = ordered_json::array();
    for (const auto& o : plan.openings) {
        ordered_json jo{{"id", o.id},
                        {"kind", to_string(o.kind)},
                        {"host_space", o.host_space},
                        {"wall_side", to_string(o.wall_side)},
                        {"offset", o.offset},
                        {"width", o.width},
                        {"height", o.height},
                        {"sill", o.sill}};
        jo["links_to"] = o.links_to ? ordered_json(*o.links_to) : ordered_json(nullptr);
        j["openings"].push_back(std::move(jo));
    }
    j["shading"] = ordered_json::array();
    for (const auto& d : plan.shading) {
        j["shading"].push_back(ordered_json{{"opening", d.opening},
                                            {"overhang_depth", d.overhang_depth},
                                            {"left_fin_depth", d.left_fin_depth},
                                            {"right_fin_depth", d.right_fin_depth}});
    }
    return j;
}

FloorPlan floorplan_from_json(const ordered_json& j) {
    check_schema(j, kFloorPlanSchema);
    FloorPlan plan;
    plan.orientation = number_field(j, "orientation");
    const auto& refl = field(j, "reflected");
    if (!refl.is_boolean()) throw ConfigError("field \"reflected\" must be a boolean");
    plan.reflected = refl.get<bool>();

    for (const auto& js : field(j, "spaces")) {
        Space s;
        s.id = string_field(js, "id");
        auto fn = space_function_from_string(string_field(js, "function"));
        if (!fn) throw ConfigError("unknown space function in space \"" + s.id + "\"");
        s.function = *fn;
        s.rect = rect_from_json(field(js, "rect"));
        s.ceiling_height = number_field(js, "ceiling_height");
        if (s.rect.w <= 0 || s.rect.h <= 0 || s.ceiling_height <= 0)
            throw ConfigError("non-positive dimension in space \"" + s.id + "\"");
        plan.spaces.push_back(std::move(s));
    }
    for (const auto& jo : field(j, "openings")) {
        Opening o;
        o.id = string_field(jo, "id");
        auto kind = opening_kind_from_string(string_field(jo, "kind"));
        if (!kind) throw ConfigError("unknown opening kind in opening \"" + o.id + "\"");
        o.kind = *kind;
        o.host_space = string_field(jo, "host_space");
        auto side = side_from_string(string_field(jo, "wall_side"));
        if (!side) throw ConfigError("unknown wall_side in opening \"" + o.id + "\"");
        o.wall_side = *side;
        o.offset = number_field(jo, "offset");
        o.width = number_field(jo, "width");
        o.height = number_field(jo, "height");
        o.sill = number_field(jo, "sill");
        const auto& links = field(jo, "links_to");
        if (links.is_string())
            o.links_to = links.get<std::string>();
        else if (!links.is_null())
            throw ConfigError("field \"links_to\" must be a string or null in opening \"" + o.id +
                              "\"");
        plan.openings.push_back(std::move(o));
    }
    for (const auto& jd : field(j, "shading")) {
        ShadingDevice d;
        d.opening = string_field(jd, "opening");
        d.overhang_depth = number_field(jd, "overhang_depth");
        d.left_fin_depth = number_field(jd, "left_fin_depth");
        d.right_fin_depth = number_field(jd, "right_fin_depth");
        if (d.overhang_depth < 0 || d.left_fin_depth < 0 || d.right_fin_depth < 0)
            throw ConfigError("negative shading depth for opening \"" + d.opening + "\"");
        plan.shading.push_back(std::move(d));
    }
    return plan;
}

ordered_json program_to_json(const DesignProgram& program) {
    ordered_json j;
    j["schema"] = kDesignProgramSchema;
    j["required_spaces"] = ordered_json::array();
    for (const auto& r : program.required_spaces) {
        j["required_spaces"].push_back(ordered_json{{"function", to_string(r.function)},
                                                    {"count", r.count},
                                                    {"min_floor_area", r.min_floor_area},
                                                    {"min_window_width", r.min_window_width}});
    }
    j["connectivity"] = ordered_json::array();
    for (const auto& [from, to] : program.connectivity)
        j["connectivity"].push_back(ordered_json::array({to_string(from), to_string(to)}));
    j["opening_orientation_prefs"] = ordered_json::array();
    for (const auto& p : program.opening_orientation_prefs) {
        j["opening_orientation_prefs"].push_back(
            ordered_json{{"function", to_string(p.function)}, {"sector", to_string(p.sector)}});
    }
    j["max_construction_area"] = program.max_construction_area;
    return j;
}

DesignProgram program_from_json(const ordered_json& j) {
    check_schema(j, kDesignProgramSchema);
    DesignProgram program;
    for (const auto& jr : field(j, "required_spaces")) {
        SpaceRequirement r;
        auto fn = space_function_from_string(string_field(jr, "function"));
        if (!fn) throw ConfigError("unknown space function in required_spaces");
        r.function = *fn;
        r.count = static_cast<int>(number_field(jr, "count"));
        r.min_floor_area = number_field(jr, "min_floor_area");
        r.min_window_width = number_field(jr, "min_window_width");
        if (r.count < 1) throw ConfigError("requirement count must be >= 1");
        if (r.min_floor_area <= 0) throw ConfigError("min_floor_area must be positive");
        if (r.min_window_width < 0) throw ConfigError("min_window_width must be >= 0");
        program.required_spaces.push_back(r);
    }
    for (const auto& jc : field(j, "connectivity")) {
        if (!jc.is_array() || jc.size() != 2)
            throw ConfigError("connectivity entries must be [from, to] pairs");
        auto from = space_function_from_string(jc[0].get<std::string>());
        auto to = space_function_from_string(jc[1].get<std::string>());
        if (!from || !to) throw ConfigError("unknown space function in connectivity");
        program.connectivity.emplace_back(*from, *to);
    }
    for (const auto& jp : field(j, "opening_orientation_prefs")) {
        OrientationPreference p;
        auto fn = space_function_from_string(string_field(jp, "function"));
        if (!fn) throw ConfigError("unknown space function in opening_orientation_prefs");
        p.function = *fn;
        auto sec = compass_sector_from_string(string_field(jp, "sector"));
        if (!sec) throw ConfigError("unknown compass sector in opening_orientation_prefs");
        p.sector = *sec;
        program.opening_orientation_prefs.push_back(p);
    }
    program.max_construction_area = number_field(j, "max_construction_area");
    if (program.max_construction_area <= 0)
        throw ConfigError("max_construction_area must be positive");
    return program;
}

std::string to_json_text(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json parse_json_file(const std::filesystem::path& path) {
    std::string text = read_text_file(path);
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

FloorPlan load_floorplan(const std::filesystem::path& path) {
    try {
        return floorplan_from_json(parse_json_file(path));
    } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

void save_floorplan(const FloorPlan& plan, const std::filesystem::path& path) {
    write_text_atomic(path, to_json_text(floorplan_to_json(plan)));
}

DesignProgram load_program(const std::filesystem::path& path) {
    try {
        return program_from_json(parse_json_file(path));
    } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

void save_program(const DesignProgram& program, const std::filesystem::path& path) {
    write_text_atomic(path, to_json_text(program_to_json(program)));
}

}  // namespace ventplan
