#include "tropaz/svg.hpp"

#include <cstdio>
#include <sstream>

namespace tropaz {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

double qd(const Rational& r) { return r.convert_to<double>(); }

struct SvgDoc {
    std::ostringstream body;
    double min_x, min_y, width, height;

    SvgDoc(double x0, double y0, double w, double h) : min_x(x0), min_y(y0), width(w), height(h) {}

    // SVG y-axis points down; flip so the math orientation reads naturally.
    double fy(double y) const { return min_y + height - (y - min_y); }

    void line(double x1, double y1, double x2, double y2, const std::string& stroke,
              double width_px) {
        body << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(fy(y1)) << "\" x2=\"" << fmt(x2)
             << "\" y2=\"" << fmt(fy(y2)) << "\" stroke=\"" << stroke << "\" stroke-width=\""
             << fmt(width_px) << "\"/>\n";
    }
    void circle(double x, double y, double r, const std::string& fill) {
        body << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(fy(y)) << "\" r=\"" << fmt(r)
             << "\" fill=\"" << fill << "\"/>\n";
    }
    void rect(double x, double y, double w, double h, const std::string& fill) {
        body << "<rect x=\"" << fmt(x) << "\" y=\"" << fmt(fy(y + h)) << "\" width=\"" << fmt(w)
             << "\" height=\"" << fmt(h) << "\" fill=\"" << fill << "\"/>\n";
    }

    std::string str() const {
        std::ostringstream out;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
            << fmt(min_x) << " " << fmt(min_y) << " " << fmt(width) << " " << fmt(height)
            << "\">\n"
            << body.str() << "</svg>\n";
        return out.str();
    }
};

const char* type_color(EdgeType t) {
    switch (t) {
        case EdgeType::West: return "#d95f02";
        case EdgeType::South: return "#1b9e77";
        case EdgeType::East: return "#7570b3";
        case EdgeType::North: return "#e7298a";
    }
    return "#000000";
}

} // namespace

std::string render_subdivision_svg(const Subdivision& sub) {
    double pad = 0.5;
    SvgDoc doc(-sub.ell - pad, -pad, sub.ell + 2 * pad, sub.k + 2 * pad);
    for (const SubEdge& e : sub.edges)
        doc.line(e.u.x, e.u.y, e.v.x, e.v.y, e.boundary() ? "#888888" : "#000000", 0.03);
    for (long x = -sub.ell; x <= 0; ++x)
        for (long y = 0; y <= sub.k; ++y) {
            bool vertex = sub.is_vertex({x, y});
            doc.circle(static_cast<double>(x), static_cast<double>(y), 0.07,
                       vertex ? "#000000" : "#cc0000");
        }
    return doc.str();
}

std::string render_curve_svg(const TropicalCurve& curve) {
    // Viewport: bounding box of the vertices padded by 1.5 on each side;
    // leaves are clipped at the viewport boundary.
    double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
    bool first = true;
    for (const CurveVertex& v : curve.vertices) {
        double x = qd(v.pos.x), y = qd(v.pos.y);
        if (first || x < lo_x) lo_x = x;
        if (first || x > hi_x) hi_x = x;
        if (first || y < lo_y) lo_y = y;
        if (first || y > hi_y) hi_y = y;
        first = false;
    }
    double pad = 1.5;
    SvgDoc doc(lo_x - pad, lo_y - pad, hi_x - lo_x + 2 * pad, hi_y - lo_y + 2 * pad);
    for (const CurveLeaf& leaf : curve.leaves) {
        const Vec2Q& p = curve.vertices[leaf.vertex].pos;
        double len = pad * 2;
        doc.line(qd(p.x), qd(p.y), qd(p.x) - leaf.eta_in.x * len, qd(p.y) - leaf.eta_in.y * len,
                 "#555555", 0.04);
    }
    for (const CurveEdge& e : curve.edges) {
        const Vec2Q& a = curve.vertices[e.v_from].pos;
        const Vec2Q& b = curve.vertices[e.v_to].pos;
        doc.line(qd(a.x), qd(a.y), qd(b.x), qd(b.y), "#000000", 0.05);
    }
    for (const CurveVertex& v : curve.vertices) doc.circle(qd(v.pos.x), qd(v.pos.y), 0.08, "#000000");
    return doc.str();
}

std::string render_arctic_svg(const ActionContext& ctx, const ArcticCurveGeometry& geom) {
    double w = 1.0 / ctx.ell(), h = 1.0 / ctx.k();
    double pad = 0.1 * (w + h);
    SvgDoc doc(-w - pad, -h - pad, w + 2 * pad, h + 2 * pad);
    doc.rect(-w, -h, w, h, "#f5f5f5");
    doc.line(-w, -h, 0, -h, "#000000", 0.004);
    doc.line(0, -h, 0, 0, "#000000", 0.004);
    doc.line(0, 0, -w, 0, "#000000", 0.004);
    doc.line(-w, 0, -w, -h, "#000000", 0.004);
    for (const ArcticSegment& s : geom.segments) {
        if (s.degenerate) {
            doc.circle(qd(s.p0.x), qd(s.p0.y), 0.006, "#cc0000");
            continue;
        }
        doc.line(qd(s.p0.x), qd(s.p0.y), qd(s.p1.x), qd(s.p1.y), "#cc0000", 0.006);
    }
    for (const Vec2Q& p : geom.psi) doc.circle(qd(p.x), qd(p.y), 0.008, "#000000");
    return doc.str();
}

std::string render_limitshape_svg(const ActionContext& ctx, int rows, int cols) {
    double w = 1.0 / ctx.ell(), h = 1.0 / ctx.k();
    SvgDoc doc(-w, -h, w, h);
    // Height range for the grayscale: h in [0, 1 + something small]; compute range.
    std::vector<std::vector<double>> values(rows, std::vector<double>(cols));
    double lo = 0, hi = 0;
    bool first = true;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            Rational u = Rational(-(2 * c + 1)) / (2 * cols * ctx.ell());
            Rational v = Rational(-(2 * r + 1)) / (2 * rows * ctx.k());
            double value = qd(limit_shape(ctx, u, v));
            values[r][c] = value;
            if (first || value < lo) lo = value;
            if (first || value > hi) hi = value;
            first = false;
        }
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            double t = hi > lo ? (values[r][c] - lo) / (hi - lo) : 0.5;
            int g = static_cast<int>(240 - 200 * t);
            char color[8];
            std::snprintf(color, sizeof(color), "#%02x%02x%02x", g, g, g);
            doc.rect(-w + c * (w / cols), -h + (rows - 1 - r) * (h / rows), w / cols, h / rows,
                     color);
        }
    return doc.str();
}

std::string render_sample_svg(const AztecGraph& graph, const std::vector<int>& cover,
                              const ActionContext* ctx) {
    double n2 = 2.0 * graph.n;
    double pad = 1.0;
    SvgDoc doc(-pad, -pad, n2 + 2 * pad, n2 + 2 * pad);
    for (int e : cover) {
        const AztecEdge& edge = graph.edges[e];
        double wx = 2.0 * edge.x + 1, wy = 2.0 * edge.y + 2;
        double bx, by;
        switch (edge.type) {
            case EdgeType::West: bx = 2.0 * edge.x; by = 2.0 * edge.y + 1; break;
            case EdgeType::South: bx = 2.0 * edge.x; by = 2.0 * edge.y + 3; break;
            case EdgeType::East: bx = 2.0 * edge.x + 2; by = 2.0 * edge.y + 3; break;
            default: bx = 2.0 * edge.x + 2; by = 2.0 * edge.y + 1; break;
        }
        doc.line(wx, wy, bx, by, type_color(edge.type), 0.5);
    }
    if (ctx) {
        // Overlay the tropical arctic segments, mapped to the face plane via
        // (u, v) -> (-2 u ell n, -2 v k n).
        ArcticCurveGeometry geom = arctic_curve(*ctx);
        double sx = -2.0 * ctx->ell() * graph.n;
        double sy = -2.0 * ctx->k() * graph.n;
        for (const ArcticSegment& s : geom.segments) {
            if (s.degenerate) continue;
            doc.line(qd(s.p0.x) * sx, qd(s.p0.y) * sy, qd(s.p1.x) * sx, qd(s.p1.y) * sy,
                     "#000000", 0.25);
        }
    }
    return doc.str();
}

} // namespace tropaz
