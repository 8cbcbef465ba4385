#include "ventplan/generator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>

#include "ventplan/errors.hpp"
#include "ventplan/parallel.hpp"

namespace ventplan {

namespace {

// All search geometry lives on a 0.1 m grid so that edges can actually
// coincide and fingerprints are stable.
double snap(double v) { return std::round(v * 10.0) / 10.0; }
double snap_up(double v) { return std::ceil(v * 10.0 - 1e-9) / 10.0; }

std::string make_space_id(SpaceFunction f, int index, int count) {
    std::string base = to_string(f);
    if (count <= 1) return base;
    return base + "_" + std::to_string(index + 1);
}

const OrientationPreference* pref_for(const DesignProgram& program, SpaceFunction f) {
    for (const auto& p : program.opening_orientation_prefs)
        if (p.function == f) return &p;
    return nullptr;
}

struct MoveContext {
    const DesignProgram* program;
    double site;
};

void clamp_space(Rect& r, double site) {
    r.w = std::min(r.w, site);
    r.h = std::min(r.h, site);
    r.x = snap(std::clamp(r.x, 0.0, site - r.w));
    r.y = snap(std::clamp(r.y, 0.0, site - r.h));
}

bool move_translate(FloorPlan& plan, const MoveContext& ctx, Rng& rng, double scale) {
    if (plan.spaces.empty()) return false;
    Space& s = plan.spaces[rng.index(plan.spaces.size())];
    double dx = snap(rng.normal() * scale);
    double dy = snap(rng.normal() * scale);
    if (dx == 0 && dy == 0) dx = rng.bernoulli(0.5) ? 0.1 : -0.1;
    s.rect.x += dx;
    s.rect.y += dy;
    clamp_space(s.rect, ctx.site);
    return true;
}

bool move_resize(FloorPlan& plan, const MoveContext& ctx, Rng& rng, double scale) {
    if (plan.spaces.empty()) return false;
    Space& s = plan.spaces[rng.index(plan.spaces.size())];
    double delta = snap(rng.normal() * scale * 0.5);
    if (delta == 0) delta = rng.bernoulli(0.5) ? 0.1 : -0.1;
    double& dim = rng.bernoulli(0.5) ? s.rect.w : s.rect.h;
    dim = snap(std::clamp(dim + delta, 0.5, ctx.site));
    clamp_space(s.rect, ctx.site);
    return true;
}

bool move_swap(FloorPlan& plan, const MoveContext& ctx, Rng& rng) {
    if (plan.spaces.size() < 2) return false;
    size_t a = rng.index(plan.spaces.size());
    size_t b = rng.index(plan.spaces.size() - 1);
    if (b >= a) ++b;
    std::swap(plan.spaces[a].rect.x, plan.spaces[b].rect.x);
    std::swap(plan.spaces[a].rect.y, plan.spaces[b].rect.y);
    clamp_space(plan.spaces[a].rect, ctx.site);
    clamp_space(plan.spaces[b].rect, ctx.site);
    return true;
}

// Flush `a` against side `s` of `b`, lateral position chosen so the walls
// share at least a door-sized run when the rooms allow it.
void abut_rect(Rect& a, const Rect& b, Side s, double lateral) {
    switch (s) {
        case Side::East: a.x = b.right(); break;
        case Side::West: a.x = b.x - a.w; break;
        case Side::North: a.y = b.top(); break;
        case Side::South: a.y = b.y - a.h; break;
    }
    if (s == Side::East || s == Side::West) {
        double need = std::min({0.9, a.h, b.h});
        double lo = b.y - a.h + need;
        double hi = b.top() - need;
        a.y = lo + lateral * std::max(0.0, hi - lo);
    } else {
        double need = std::min({0.9, a.w, b.w});
        double lo = b.x - a.w + need;
        double hi = b.right() - need;
        a.x = lo + lateral * std::max(0.0, hi - lo);
    }
    a.x = snap(a.x);
    a.y = snap(a.y);
}

// Drop the door linking `host` and `other` (either hosting direction) onto
// their longest shared wall run, centred. Leaves it alone when the rooms do
// not touch.
void settle_door_between(FloorPlan& plan, const std::string& host_id,
                         const std::string& other_id) {
    for (auto& op : plan.openings) {
        if (op.kind != OpeningKind::InteriorDoor || !op.links_to) continue;
        bool forward = op.host_space == host_id && *op.links_to == other_id;
        bool backward = op.host_space == other_id && *op.links_to == host_id;
        if (!forward && !backward) continue;
        const Space* h = plan.find_space(op.host_space);
        const Space* o = plan.find_space(*op.links_to);
        if (!h || !o) continue;
        Side best_side = op.wall_side;
        Interval best_iv{0, 0};
        for (Side s : kAllSides) {
            Interval iv = shared_interval(h->rect, o->rect, s);
            if (iv.length() > best_iv.length()) {
                best_iv = iv;
                best_side = s;
            }
        }
        if (best_iv.length() < op.width - kCoincidenceEps) continue;
        Interval span = side_span(h->rect, best_side);
        double lo = best_iv.lo + (best_iv.length() - op.width) / 2;
        op.wall_side = best_side;
        op.offset = snap(std::clamp(lo - span.lo, 0.0,
                                    side_length(h->rect, best_side) - op.width));
    }
}

bool move_align_edge(FloorPlan& plan, const MoveContext& ctx, Rng& rng) {
    if (plan.spaces.size() < 2) return false;

    // Mostly: grab a door and pull its host flush against the linked space,
    // re-seating the door on the new party wall. This is the move that turns
    // a scattered layout into a connected one.
    if (!plan.openings.empty() && rng.bernoulli(0.6)) {
        std::vector<size_t> doors;
        for (size_t i = 0; i < plan.openings.size(); ++i)
            if (plan.openings[i].kind == OpeningKind::InteriorDoor &&
                plan.openings[i].links_to)
                doors.push_back(i);
        if (!doors.empty()) {
            Opening& op = plan.openings[doors[rng.index(doors.size())]];
            Space* host = nullptr;
            const Space* other = nullptr;
            for (auto& s : plan.spaces) {
                if (s.id == op.host_space) host = &s;
                if (s.id == *op.links_to) other = &s;
            }
            if (host && other && host != other) {
                abut_rect(host->rect, other->rect, kAllSides[rng.index(4)], rng.uniform());
                clamp_space(host->rect, ctx.site);
                settle_door_between(plan, host->id, other->id);
                return true;
            }
        }
    }

    size_t ia = rng.index(plan.spaces.size());
    size_t ib = rng.index(plan.spaces.size() - 1);
    if (ib >= ia) ++ib;
    Rect& a = plan.spaces[ia].rect;
    const Rect& b = plan.spaces[ib].rect;
    switch (rng.index(8)) {
        case 0: abut_rect(a, b, Side::East, rng.uniform()); break;
        case 1: abut_rect(a, b, Side::West, rng.uniform()); break;
        case 2: abut_rect(a, b, Side::North, rng.uniform()); break;
        case 3: abut_rect(a, b, Side::South, rng.uniform()); break;
        case 4: a.x = b.x; break;             // align west edges
        case 5: a.x = b.right() - a.w; break; // align east edges
        case 6: a.y = b.y; break;             // align south edges
        default: a.y = b.top() - a.h; break;  // align north edges
    }
    a.x = snap(a.x);
    a.y = snap(a.y);
    clamp_space(a, ctx.site);
    settle_door_between(plan, plan.spaces[ia].id, plan.spaces[ib].id);
    return true;
}

bool move_slide_opening(FloorPlan& plan, Rng& rng, double scale) {
    if (plan.openings.empty()) return false;
    Opening& op = plan.openings[rng.index(plan.openings.size())];
    const Space* host = plan.find_space(op.host_space);
    if (!host) return false;
    double len = side_length(host->rect, op.wall_side);
    if (len <= op.width) return false;
    double delta = snap(rng.normal() * scale);
    if (delta == 0) delta = rng.bernoulli(0.5) ? 0.1 : -0.1;
    op.offset = snap(std::clamp(op.offset + delta, 0.0, len - op.width));
    return true;
}

bool move_resize_opening(FloorPlan& plan, Rng& rng, double scale) {
    if (plan.openings.empty()) return false;
    Opening& op = plan.openings[rng.index(plan.openings.size())];
    const Space* host = plan.find_space(op.host_space);
    if (!host) return false;
    double len = side_length(host->rect, op.wall_side);
    double min_w = op.kind == OpeningKind::Window ? 0.4 : 0.7;
    double max_w = len - op.offset;
    if (max_w < min_w) return false;
    double delta = snap(rng.normal() * scale * 0.5);
    if (delta == 0) delta = rng.bernoulli(0.5) ? 0.1 : -0.1;
    op.width = snap(std::clamp(op.width + delta, min_w, max_w));
    return true;
}

// Drop the opening onto a wall stretch where it can actually be valid: an
// envelope piece for windows and entry doors, a party-wall piece for
// interior doors.
bool move_relocate_opening(FloorPlan& plan, const MoveContext& ctx, Rng& rng) {
    if (plan.openings.empty()) return false;
    Opening& op = plan.openings[rng.index(plan.openings.size())];
    const Space* host = plan.find_space(op.host_space);
    if (!host) return false;

    if (op.kind == OpeningKind::InteriorDoor) {
        if (!op.links_to) return false;
        const Space* other = plan.find_space(*op.links_to);
        if (!other) return false;
        struct Cand {
            Side side;
            Interval iv;
        };
        std::vector<Cand> cands;
        for (Side s : kAllSides) {
            Interval iv = shared_interval(host->rect, other->rect, s);
            if (iv.length() >= op.width - kCoincidenceEps) cands.push_back({s, iv});
        }
        if (cands.empty()) {
            // No fit anywhere; shove the door to a random wall and let the
            // penalty keep pressure on.
            op.wall_side = kAllSides[rng.index(4)];
            op.offset = 0;
            return true;
        }
        const Cand& c = cands[rng.index(cands.size())];
        Interval span = side_span(host->rect, c.side);
        double lo = c.iv.lo + rng.uniform() * (c.iv.length() - op.width);
        op.wall_side = c.side;
        op.offset = snap(std::clamp(lo - span.lo, 0.0, side_length(host->rect, c.side) - op.width));
        return true;
    }

    // Envelope openings: pick among this host's exterior wall pieces.
    auto segs = envelope_sides(plan);
    size_t host_index = 0;
    for (size_t i = 0; i < plan.spaces.size(); ++i)
        if (&plan.spaces[i] == host) host_index = i;
    std::vector<EnvelopeSegment> mine;
    for (const auto& seg : segs)
        if (seg.space_index == host_index && seg.span.length() >= op.width - kCoincidenceEps)
            mine.push_back(seg);
    if (mine.empty()) return false;

    // Windows lean toward the program's preferred facing when one exists.
    if (op.kind == OpeningKind::Window) {
        if (const auto* pref = pref_for(*ctx.program, host->function)) {
            std::vector<EnvelopeSegment> facing;
            for (const auto& seg : mine)
                if (azimuth_in_sector(seg.azimuth_world, pref->sector)) facing.push_back(seg);
            if (!facing.empty() && rng.bernoulli(0.7)) mine = facing;
        }
    }

    const auto& seg = mine[rng.index(mine.size())];
    Interval span = side_span(host->rect, seg.side);
    double lo = seg.span.lo + rng.uniform() * (seg.span.length() - op.width);
    op.wall_side = seg.side;
    op.offset = snap(std::clamp(lo - span.lo, 0.0, side_length(host->rect, seg.side) - op.width));
    return true;
}

bool apply_random_move(FloorPlan& plan, int kind, const MoveContext& ctx, Rng& rng,
                       double scale) {
    switch (kind) {
        case 0: return move_translate(plan, ctx, rng, scale);
        case 1: return move_resize(plan, ctx, rng, scale);
        case 2: return move_swap(plan, ctx, rng);
        case 3: return move_align_edge(plan, ctx, rng);
        case 4: return move_slide_opening(plan, rng, scale);
        case 5: return move_resize_opening(plan, rng, scale);
        default: return move_relocate_opening(plan, ctx, rng);
    }
}

FloorPlan random_plan(const DesignProgram& program, double site, Rng& rng) {
    FloorPlan plan;
    plan.orientation = 45.0 * rng.index(8);
    plan.reflected = rng.bernoulli(0.5);

    for (const auto& req : program.required_spaces) {
        for (int k = 0; k < req.count; ++k) {
            double area = req.min_floor_area * rng.uniform(1.0, 1.25);
            double aspect = rng.uniform(0.7, 1.5);
            Space s;
            s.id = make_space_id(req.function, k, req.count);
            s.function = req.function;
            s.rect.w = snap_up(std::sqrt(area * aspect));
            s.rect.h = snap_up(area / s.rect.w);
            plan.spaces.push_back(std::move(s));
        }
    }

    // Grow the layout as an attachment chain: every space lands flush
    // against the space it must connect to (per the connectivity list), so
    // seeds start out adjacent and search only has to repair the details.
    std::map<SpaceFunction, SpaceFunction> anchor_fn;
    for (const auto& [from, to] : program.connectivity) anchor_fn.emplace(to, from);

    std::vector<size_t> placed;
    std::map<std::string, std::string> anchor_of;  // space id -> anchor space id
    auto overlaps_placed = [&](const Rect& r, size_t self) {
        for (size_t j : placed)
            if (j != self && overlap_area(r, plan.spaces[j].rect) > 1e-9) return true;
        return false;
    };

    std::vector<size_t> pending(plan.spaces.size());
    for (size_t i = 0; i < pending.size(); ++i) pending[i] = i;

    while (!pending.empty()) {
        size_t taken = pending.size();
        for (size_t pi = 0; pi < pending.size();) {
            size_t i = pending[pi];
            Space& s = plan.spaces[i];

            if (placed.empty()) {
                s.rect.x = snap((site - s.rect.w) / 2);
                s.rect.y = snap((site - s.rect.h) / 2);
                placed.push_back(i);
                pending.erase(pending.begin() + pi);
                continue;
            }

            // Anchor instances: spaces of the required partner function, or
            // any placed space when the program names none.
            std::vector<size_t> anchors;
            auto it = anchor_fn.find(s.function);
            if (it != anchor_fn.end()) {
                for (size_t j : placed)
                    if (plan.spaces[j].function == it->second) anchors.push_back(j);
                if (anchors.empty()) {
                    ++pi;  // wait for the anchor function to be placed
                    continue;
                }
            } else {
                anchors = placed;
            }

            size_t ai = anchors[rng.index(anchors.size())];
            Rect best = s.rect;
            bool found = false;
            for (int attempt = 0; attempt < 24 && !found; ++attempt) {
                Rect cand = s.rect;
                abut_rect(cand, plan.spaces[ai].rect, kAllSides[rng.index(4)], rng.uniform());
                clamp_space(cand, site);
                best = cand;
                found = !overlaps_placed(cand, i);
            }
            s.rect = best;  // overlap, if any, is left for search to fix
            anchor_of[s.id] = plan.spaces[ai].id;
            placed.push_back(i);
            pending.erase(pending.begin() + pi);
        }
        if (pending.size() == taken) {
            // Connectivity cycle; place the stragglers against anything.
            size_t i = pending.front();
            Space& s = plan.spaces[i];
            size_t ai = placed[rng.index(placed.size())];
            Rect cand = s.rect;
            abut_rect(cand, plan.spaces[ai].rect, kAllSides[rng.index(4)], rng.uniform());
            clamp_space(cand, site);
            s.rect = cand;
            anchor_of[s.id] = plan.spaces[ai].id;
            placed.push_back(i);
            pending.erase(pending.begin());
        }
    }

    int next_window = 1, next_door = 1;

    // Entry door goes to the hall when the program has one, on an exterior
    // wall piece if the hall has any left.
    {
        size_t host_index = 0;
        for (size_t i = 0; i < plan.spaces.size(); ++i)
            if (plan.spaces[i].function == SpaceFunction::Hall) {
                host_index = i;
                break;
            }
        const Space& entry_host = plan.spaces[host_index];
        Opening door;
        door.id = "entry";
        door.kind = OpeningKind::ExteriorDoor;
        door.host_space = entry_host.id;
        door.width = 0.9;
        door.height = 2.0;
        door.sill = 0.0;

        auto entry_segments = envelope_sides(plan);
        std::vector<const EnvelopeSegment*> mine;
        for (const auto& seg : entry_segments)
            if (seg.space_index == host_index && seg.span.length() >= door.width) mine.push_back(&seg);
        if (!mine.empty()) {
            const EnvelopeSegment* seg = mine[rng.index(mine.size())];
            Interval span = side_span(entry_host.rect, seg->side);
            door.wall_side = seg->side;
            double lo = seg->span.lo + rng.uniform() * (seg->span.length() - door.width);
            door.offset = snap(std::clamp(lo - span.lo, 0.0,
                                          side_length(entry_host.rect, seg->side) - door.width));
        } else {
            door.wall_side = kAllSides[rng.index(4)];
            double len = side_length(entry_host.rect, door.wall_side);
            door.offset = snap(rng.uniform(0.0, std::max(0.0, len - door.width)));
        }
        plan.openings.push_back(std::move(door));
    }

    auto segments = envelope_sides(plan);
    for (size_t si = 0; si < plan.spaces.size(); ++si) {
        const Space& s = plan.spaces[si];
        const SpaceRequirement* req = program.requirement_for(s.function);
        if (!req || req->min_window_width <= 0) continue;
        Opening win;
        win.id = "win_" + std::to_string(next_window++);
        win.kind = OpeningKind::Window;
        win.host_space = s.id;
        win.height = 1.1;
        win.sill = 0.9;
        double want = std::max(0.4, req->min_window_width);

        std::vector<const EnvelopeSegment*> mine;
        for (const auto& seg : segments)
            if (seg.space_index == si && seg.span.length() >= want - kCoincidenceEps)
                mine.push_back(&seg);
        if (const auto* pref = pref_for(program, s.function)) {
            std::vector<const EnvelopeSegment*> facing;
            for (const auto* seg : mine)
                if (azimuth_in_sector(seg->azimuth_world, pref->sector)) facing.push_back(seg);
            if (!facing.empty()) mine = std::move(facing);
        }

        if (!mine.empty()) {
            const EnvelopeSegment* seg = mine[rng.index(mine.size())];
            Interval span = side_span(s.rect, seg->side);
            win.wall_side = seg->side;
            win.width = snap_up(std::min(want, seg->span.length()));
            double lo = seg->span.lo + rng.uniform() * (seg->span.length() - win.width);
            win.offset =
                snap(std::clamp(lo - span.lo, 0.0, side_length(s.rect, seg->side) - win.width));
        } else {
            // Boxed-in room; park the window anywhere and let search free it.
            Side side = kAllSides[rng.index(4)];
            win.wall_side = side;
            double len = side_length(s.rect, side);
            win.width = snap_up(std::min(want, std::max(0.4, len - 0.2)));
            win.offset = snap(rng.uniform(0.0, std::max(0.0, len - win.width)));
        }
        plan.openings.push_back(std::move(win));
    }

    // One door per connectivity requirement, preferring the anchor this
    // space was grown from, then settled onto the actual party wall.
    for (const auto& [from, to] : program.connectivity) {
        for (const auto& s : plan.spaces) {
            if (s.function != to) continue;
            const Space* partner = nullptr;
            auto anchored = anchor_of.find(s.id);
            if (anchored != anchor_of.end()) {
                const Space* a = plan.find_space(anchored->second);
                if (a && a->function == from) partner = a;
            }
            if (!partner) {
                double best = 0;
                for (const auto& f : plan.spaces) {
                    if (f.function != from || f.id == s.id) continue;
                    double dx = f.rect.cx() - s.rect.cx();
                    double dy = f.rect.cy() - s.rect.cy();
                    double d2 = dx * dx + dy * dy;
                    if (!partner || d2 < best) {
                        partner = &f;
                        best = d2;
                    }
                }
            }
            if (!partner) continue;
            Opening door;
            door.id = "door_" + std::to_string(next_door++);
            door.kind = OpeningKind::InteriorDoor;
            door.host_space = s.id;
            door.links_to = partner->id;
            door.width = 0.8;
            door.height = 2.0;
            door.sill = 0.0;
            double dx = partner->rect.cx() - s.rect.cx();
            double dy = partner->rect.cy() - s.rect.cy();
            if (std::abs(dx) >= std::abs(dy))
                door.wall_side = dx >= 0 ? Side::East : Side::West;
            else
                door.wall_side = dy >= 0 ? Side::North : Side::South;
            double len = side_length(s.rect, door.wall_side);
            door.offset = snap(std::max(0.0, len / 2 - door.width / 2));
            plan.openings.push_back(std::move(door));
            settle_door_between(plan, s.id, partner->id);
        }
    }

    return plan;
}

struct Individual {
    FloorPlan plan;
    double sigma = 1.0;
    double penalty = 0;
};

int genome_length(const FloorPlan& plan) {
    return 4 * static_cast<int>(plan.spaces.size()) +
           2 * static_cast<int>(plan.openings.size()) + 2;
}

FloorPlan mutate(const FloorPlan& parent, const MoveContext& ctx, Rng& rng, double sigma) {
    FloorPlan m = parent;
    int ops = 1 + static_cast<int>(rng.index(2));
    for (int i = 0; i < ops; ++i) {
        double r = rng.uniform();
        if (r < 0.35)
            apply_random_move(m, 0, ctx, rng, sigma);
        else if (r < 0.60)
            apply_random_move(m, 1, ctx, rng, sigma);
        else if (r < 0.75)
            apply_random_move(m, 6, ctx, rng, sigma);
        else if (r < 0.85)
            apply_random_move(m, 3, ctx, rng, sigma);
        else if (r < 0.93)
            m.orientation = 45.0 * rng.index(8);
        else
            m.reflected = !m.reflected;
    }
    return m;
}

}  // namespace

double site_side(const DesignProgram& program) {
    return snap_up(2.0 * std::sqrt(std::max(1.0, program.max_construction_area)));
}

std::vector<FloorPlan> seed_population(const DesignProgram& program, const SearchConfig& cfg) {
    if (cfg.population_size < 1 || cfg.offspring_per_parent < 1 || cfg.generations < 1 ||
        cfg.ls_moves_per_individual < 1 || cfg.target_count < 1)
        throw ConfigError("search config counts must all be >= 1");
    if (program.required_spaces.empty())
        throw ConfigError("program has no required spaces");
    if (program.min_total_area() > program.max_construction_area)
        throw InfeasibleProgramError(
            "program infeasible: minimum floor areas need " +
            std::to_string(program.min_total_area()) + " m2 but the construction limit is " +
            std::to_string(program.max_construction_area) + " m2");

    double site = site_side(program);
    std::vector<FloorPlan> out;
    out.reserve(cfg.population_size);
    for (int i = 0; i < cfg.population_size; ++i) {
        Rng rng = Rng::fork(cfg.seed, 0, static_cast<std::uint64_t>(i));
        out.push_back(random_plan(program, site, rng));
    }
    return out;
}

FloorPlan local_search(const FloorPlan& plan, const DesignProgram& program, int moves,
                       Rng& rng) {
    MoveContext ctx{&program, site_side(program)};
    FloorPlan cur = plan;
    double cur_p = design_penalty(cur, program).total;
    for (int m = 0; m < moves && cur_p > 0; ++m) {
        int kind = static_cast<int>(rng.index(7));
        FloorPlan cand = cur;
        if (!apply_random_move(cand, kind, ctx, rng, 0.6)) continue;
        double p = design_penalty(cand, program).total;
        if (p < cur_p - 1e-12) {
            cur = std::move(cand);
            cur_p = p;
        }
    }
    return cur;
}

std::string fingerprint(const FloorPlan& plan) {
    if (plan.spaces.empty()) return "";
    double minx = plan.spaces[0].rect.x, miny = plan.spaces[0].rect.y;
    for (const auto& s : plan.spaces) {
        minx = std::min(minx, s.rect.x);
        miny = std::min(miny, s.rect.y);
    }
    std::vector<std::array<long, 4>> cells;
    for (const auto& s : plan.spaces) {
        cells.push_back({std::lround((s.rect.x - minx) * 10), std::lround((s.rect.y - miny) * 10),
                         std::lround(s.rect.w * 10), std::lround(s.rect.h * 10)});
    }
    std::sort(cells.begin(), cells.end());
    std::string fp;
    for (const auto& c : cells) {
        fp += std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) +
              "," + std::to_string(c[3]) + ";";
    }
    return fp;
}

EpsapResult run_epsap(const DesignProgram& program, const SearchConfig& cfg) {
    MoveContext ctx{&program, site_side(program)};
    auto seeds = seed_population(program, cfg);

    double tau = 1.0 / std::sqrt(2.0 * genome_length(seeds[0]));

    std::vector<Individual> pop(seeds.size());
    for (size_t i = 0; i < seeds.size(); ++i) {
        pop[i].plan = std::move(seeds[i]);
        pop[i].sigma = 1.0;
        pop[i].penalty = design_penalty(pop[i].plan, program).total;
    }

    std::vector<std::pair<std::string, FloorPlan>> archive;
    std::set<std::string> archived;
    auto try_archive = [&](const Individual& ind) {
        if (ind.penalty > 0) return;
        std::string fp = fingerprint(ind.plan);
        if (archived.insert(fp).second) archive.emplace_back(fp, ind.plan);
    };
    for (const auto& ind : pop) try_archive(ind);

    EpsapResult result;
    int mu = cfg.population_size;
    int lambda = mu * cfg.offspring_per_parent;
    int immigrants = std::max(1, mu / 8);

    for (int gen = 1; gen <= cfg.generations; ++gen) {
        if (static_cast<int>(archive.size()) >= cfg.target_count) {
            result.reached_target = true;
            break;
        }

        std::vector<Individual> offspring(lambda);
        parallel_for(static_cast<size_t>(lambda), cfg.jobs, [&](size_t i) {
            const Individual& parent = pop[i / cfg.offspring_per_parent];
            Rng rng = Rng::fork(cfg.seed, static_cast<std::uint64_t>(gen),
                                static_cast<std::uint64_t>(i));
            Individual child;
            child.sigma = std::clamp(parent.sigma * std::exp(tau * rng.normal()), 0.05, 4.0);
            child.plan = mutate(parent.plan, ctx, rng, child.sigma);
            child.plan = local_search(child.plan, program, cfg.ls_moves_per_individual, rng);
            child.penalty = design_penalty(child.plan, program).total;
            offspring[i] = std::move(child);
        });

        for (const auto& child : offspring) try_archive(child);

        // (mu+lambda) truncation; parents listed first so ties keep elders.
        std::vector<Individual> pool;
        pool.reserve(pop.size() + offspring.size());
        for (auto& p : pop) pool.push_back(std::move(p));
        for (auto& c : offspring) pool.push_back(std::move(c));
        std::stable_sort(pool.begin(), pool.end(),
                         [](const Individual& a, const Individual& b) {
                             return a.penalty < b.penalty;
                         });
        pool.resize(mu);
        pop = std::move(pool);

        // Fresh blood at the tail keeps the archive growing once the
        // population has converged.
        for (int k = 0; k < immigrants && k < mu; ++k) {
            Rng rng = Rng::fork(cfg.seed, static_cast<std::uint64_t>(gen),
                                static_cast<std::uint64_t>(lambda + k));
            Individual imm;
            imm.plan = random_plan(program, ctx.site, rng);
            imm.plan = local_search(imm.plan, program, cfg.ls_moves_per_individual, rng);
            imm.sigma = 1.0;
            imm.penalty = design_penalty(imm.plan, program).total;
            try_archive(imm);
            pop[mu - 1 - k] = std::move(imm);
        }

        double best = pop[0].penalty;
        for (const auto& ind : pop) best = std::min(best, ind.penalty);
        if (!result.best_penalty_by_generation.empty() &&
            best > result.best_penalty_by_generation.back() + 1e-12)
            throw SimulationError("elitism violated: best penalty increased");
        result.best_penalty_by_generation.push_back(best);
        result.generations_run = gen;
    }
    if (static_cast<int>(archive.size()) >= cfg.target_count) result.reached_target = true;

    if (!result.reached_target)
        throw InfeasibleProgramError(
            "generator archived " + std::to_string(archive.size()) + " distinct zero-penalty designs, target " +
            std::to_string(cfg.target_count) + ", after " +
            std::to_string(result.generations_run) + " generations");

    // Compactness ranking: smallest total floor area first.
    std::stable_sort(archive.begin(), archive.end(),
                     [](const auto& a, const auto& b) {
                         double fa = a.second.total_floor_area();
                         double fb = b.second.total_floor_area();
                         if (fa != fb) return fa < fb;
                         return a.first < b.first;
                     });
    archive.resize(cfg.target_count);
    for (auto& [fp, plan] : archive) result.designs.push_back(std::move(plan));
    return result;
}

}  // namespace ventplan
