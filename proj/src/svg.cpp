#include "ventplan/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace ventplan {

namespace {

constexpr double kHeaderHeight = 48;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

std::string pretty_function(SpaceFunction f) {
    std::string s = to_string(f);
    std::replace(s.begin(), s.end(), '_', ' ');
    return s;
}

struct Mapper {
    double minx = 0, maxx = 0, maxy = 0;
    double scale = 40, margin = 30;
    bool reflected = false;

    double x(double wx) const {
        double local = reflected ? maxx - wx : wx - minx;
        return margin + local * scale;
    }
    double y(double wy) const { return kHeaderHeight + margin + (maxy - wy) * scale; }
};

struct Segment {
    double x1, y1, x2, y2;
};

// Opening footprint on its host wall, plan coordinates.
Segment opening_segment(const Space& host, const Opening& op) {
    Interval span = side_span(host.rect, op.wall_side);
    double lo = span.lo + op.offset;
    double hi = lo + op.width;
    double c = side_coord(host.rect, op.wall_side);
    if (op.wall_side == Side::North || op.wall_side == Side::South) return {lo, c, hi, c};
    return {c, lo, c, hi};
}

// Unit outward normal of a wall side, plan coordinates.
void outward(Side s, double& nx, double& ny) {
    nx = 0;
    ny = 0;
    switch (s) {
        case Side::North: ny = 1; return;
        case Side::South: ny = -1; return;
        case Side::East: nx = 1; return;
        case Side::West: nx = -1; return;
    }
}

void line(std::ostringstream& out, const Mapper& m, const Segment& s, const char* style) {
    out << "  <line x1=\"" << fmt(m.x(s.x1)) << "\" y1=\"" << fmt(m.y(s.y1)) << "\" x2=\""
        << fmt(m.x(s.x2)) << "\" y2=\"" << fmt(m.y(s.y2)) << "\" " << style << "/>\n";
}

}  // namespace

std::string render_svg(const FloorPlan& plan, const SvgOptions& opts) {
    Mapper m;
    m.scale = opts.scale;
    m.margin = opts.margin;
    m.reflected = plan.reflected;

    double miny = 0;
    if (!plan.spaces.empty()) {
        m.minx = plan.spaces[0].rect.x;
        m.maxx = plan.spaces[0].rect.right();
        miny = plan.spaces[0].rect.y;
        m.maxy = plan.spaces[0].rect.top();
        for (const auto& s : plan.spaces) {
            m.minx = std::min(m.minx, s.rect.x);
            m.maxx = std::max(m.maxx, s.rect.right());
            miny = std::min(miny, s.rect.y);
            m.maxy = std::max(m.maxy, s.rect.top());
        }
    } else {
        m.maxx = 1;
        m.maxy = 1;
    }

    double width = 2 * m.margin + (m.maxx - m.minx) * m.scale;
    double height = kHeaderHeight + 2 * m.margin + (m.maxy - miny) * m.scale;
    width = std::max(width, 320.0);

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
        << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    std::string title = opts.design_id.empty() ? "floor plan" : opts.design_id;
    out << "  <text x=\"" << fmt(m.margin) << "\" y=\"22\" font-family=\"sans-serif\" "
           "font-size=\"15\" font-weight=\"bold\">"
        << title << "</text>\n";
    std::string sub;
    if (opts.design_penalty) sub += "constraint penalty " + fmt(*opts.design_penalty);
    if (opts.sealed_penalty) {
        if (!sub.empty()) sub += ", ";
        sub += "sealed penalty " + fmt(*opts.sealed_penalty) + " degree-hours";
    }
    if (!sub.empty())
        out << "  <text x=\"" << fmt(m.margin)
            << "\" y=\"40\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#444\">" << sub
            << "</text>\n";

    for (const auto& s : plan.spaces) {
        double x0 = m.x(s.rect.x);
        double x1 = m.x(s.rect.right());
        if (x1 < x0) std::swap(x0, x1);
        double y0 = m.y(s.rect.top());
        double y1 = m.y(s.rect.y);
        out << "  <rect class=\"space\" x=\"" << fmt(x0) << "\" y=\"" << fmt(y0) << "\" width=\""
            << fmt(x1 - x0) << "\" height=\"" << fmt(y1 - y0)
            << "\" fill=\"#f4f1ea\" stroke=\"#222\" stroke-width=\"3\"/>\n";
        double cx = (x0 + x1) / 2;
        double cy = (y0 + y1) / 2;
        out << "  <text x=\"" << fmt(cx) << "\" y=\"" << fmt(cy - 2)
            << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">"
            << pretty_function(s.function) << "</text>\n";
        out << "  <text x=\"" << fmt(cx) << "\" y=\"" << fmt(cy + 11)
            << "\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#555\" "
               "text-anchor=\"middle\">"
            << fmt(s.rect.area()) << " m2</text>\n";
    }

    for (const auto& op : plan.openings) {
        const Space* host = plan.find_space(op.host_space);
        if (!host) continue;
        Segment seg = opening_segment(*host, op);
        // Gap: paint over the wall stroke.
        line(out, m, seg, "stroke=\"#f4f1ea\" stroke-width=\"5\"");
        if (op.kind == OpeningKind::Window) {
            double nx, ny;
            outward(op.wall_side, nx, ny);
            if (plan.reflected) nx = -nx;
            double offs = 1.6 / m.scale;  // px to metres
            Segment a{seg.x1 + nx * offs, seg.y1 + ny * offs, seg.x2 + nx * offs,
                      seg.y2 + ny * offs};
            Segment b{seg.x1 - nx * offs, seg.y1 - ny * offs, seg.x2 - nx * offs,
                      seg.y2 - ny * offs};
            line(out, m, a, "class=\"window\" stroke=\"#222\" stroke-width=\"1\"");
            line(out, m, b, "class=\"window\" stroke=\"#222\" stroke-width=\"1\"");
        }
    }

    for (const auto& dev : plan.shading) {
        const Opening* op = plan.find_opening(dev.opening);
        if (!op) continue;
        const Space* host = plan.find_space(op->host_space);
        if (!host) continue;
        Segment seg = opening_segment(*host, *op);
        double nx, ny;
        outward(op->wall_side, nx, ny);
        const char* style = "class=\"shading\" fill=\"none\" stroke=\"#a33\" "
                            "stroke-width=\"1.2\" stroke-dasharray=\"5,3\"";
        auto dashed_rect = [&](double wx0, double wy0, double wx1, double wy1) {
            double x0 = m.x(wx0), x1 = m.x(wx1);
            if (x1 < x0) std::swap(x0, x1);
            double y0 = m.y(std::max(wy0, wy1));
            double y1 = m.y(std::min(wy0, wy1));
            out << "  <rect x=\"" << fmt(x0) << "\" y=\"" << fmt(y0) << "\" width=\""
                << fmt(x1 - x0) << "\" height=\"" << fmt(y1 - y0) << "\" " << style << "/>\n";
        };
        if (dev.overhang_depth > 0)
            dashed_rect(seg.x1, seg.y1, seg.x2 + nx * dev.overhang_depth,
                        seg.y2 + ny * dev.overhang_depth);
        // Fin handedness follows the view from outside the wall.
        double lx, ly;  // "left" end of the segment seen from outside
        bool left_at_end2;
        switch (op->wall_side) {
            case Side::North: left_at_end2 = true; break;   // east end
            case Side::South: left_at_end2 = false; break;  // west end
            case Side::East: left_at_end2 = true; break;    // north end
            case Side::West: left_at_end2 = false; break;   // south end
            default: left_at_end2 = false; break;
        }
        if (dev.left_fin_depth > 0) {
            lx = left_at_end2 ? seg.x2 : seg.x1;
            ly = left_at_end2 ? seg.y2 : seg.y1;
            line(out, m,
                 {lx, ly, lx + nx * dev.left_fin_depth, ly + ny * dev.left_fin_depth},
                 style);
        }
        if (dev.right_fin_depth > 0) {
            lx = left_at_end2 ? seg.x1 : seg.x2;
            ly = left_at_end2 ? seg.y1 : seg.y2;
            line(out, m,
                 {lx, ly, lx + nx * dev.right_fin_depth, ly + ny * dev.right_fin_depth},
                 style);
        }
    }

    // North arrow, top right, rotated so it points at world north while the
    // drawing stays in plan-local axes.
    double ax = width - 34;
    double ay = 26;
    out << "  <g class=\"north-arrow\" transform=\"translate(" << fmt(ax) << ' ' << fmt(ay)
        << ") rotate(" << fmt(-plan.orientation) << ")\">\n";
    out << "    <line x1=\"0\" y1=\"14\" x2=\"0\" y2=\"-10\" stroke=\"#222\" "
           "stroke-width=\"2\"/>\n";
    out << "    <path d=\"M -5 -6 L 0 -16 L 5 -6 Z\" fill=\"#222\"/>\n";
    out << "    <text x=\"0\" y=\"26\" font-family=\"sans-serif\" font-size=\"11\" "
           "text-anchor=\"middle\">N</text>\n";
    out << "  </g>\n";

    out << "</svg>\n";
    return out.str();
}

}  // namespace ventplan
