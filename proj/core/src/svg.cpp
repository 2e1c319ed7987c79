#include "penrose/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace penrose {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

// A tiny SVG writer with a y-up user coordinate system.
class Canvas {
public:
    Canvas(double x0, double y0, double x1, double y1, int widthPx)
        : x0_(x0), y1_(y1), scale_(widthPx / (x1 - x0)), width_(widthPx),
          height_(int(std::lround(widthPx * (y1 - y0) / (x1 - x0)))) {}

    std::string px(double x) const { return fmt((x - x0_) * scale_); }
    std::string py(double y) const { return fmt((y1_ - y) * scale_); }

    void polygon(const std::vector<std::pair<double, double>>& pts, const std::string& fill,
                 const std::string& stroke, double strokeWidth) {
        body_ << "<polygon points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) body_ << ' ';
            body_ << px(pts[i].first) << ',' << py(pts[i].second);
        }
        body_ << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\""
              << fmt(strokeWidth * scale_) << "\"/>\n";
    }

    void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& stroke,
                  double strokeWidth) {
        body_ << "<polyline points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) body_ << ' ';
            body_ << px(pts[i].first) << ',' << py(pts[i].second);
        }
        body_ << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
              << fmt(strokeWidth * scale_) << "\"/>\n";
    }

    void line(double ax, double ay, double bx, double by, const std::string& stroke,
              double strokeWidth) {
        body_ << "<line x1=\"" << px(ax) << "\" y1=\"" << py(ay) << "\" x2=\"" << px(bx)
              << "\" y2=\"" << py(by) << "\" stroke=\"" << stroke << "\" stroke-width=\""
              << fmt(strokeWidth * scale_) << "\"/>\n";
    }

    void circle(double x, double y, double rUser, const std::string& fill) {
        body_ << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\""
              << fmt(rUser * scale_) << "\" fill=\"" << fill << "\"/>\n";
    }

    std::string str() const {
        std::ostringstream out;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_ << "\" height=\""
            << height_ << "\" viewBox=\"0 0 " << width_ << ' ' << height_ << "\">\n"
            << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
            << body_.str() << "</svg>\n";
        return out.str();
    }

private:
    double x0_, y1_, scale_;
    int width_, height_;
    std::ostringstream body_;
};

// Deterministic distinct colors: evenly spaced hues at fixed saturation.
std::string tileColor(int i, int count) {
    double h = 360.0 * i / count, s = 0.55, l = 0.72;
    double c = (1 - std::fabs(2 * l - 1)) * s;
    double hp = h / 60.0;
    double x = c * (1 - std::fabs(std::fmod(hp, 2.0) - 1));
    double r = 0, g = 0, b = 0;
    if (hp < 1) { r = c; g = x; }
    else if (hp < 2) { r = x; g = c; }
    else if (hp < 3) { g = c; b = x; }
    else if (hp < 4) { g = x; b = c; }
    else if (hp < 5) { r = x; b = c; }
    else { r = c; b = x; }
    double m = l - c / 2;
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", int(std::lround(255 * (r + m))),
                  int(std::lround(255 * (g + m))), int(std::lround(255 * (b + m))));
    return buf;
}

// The tile's vertices shifted so its centroid falls into [0, 1)^2.
std::vector<std::pair<double, double>> unitCellLift(const std::vector<GoldenPoint>& raw) {
    double cx = 0, cy = 0;
    for (const auto& v : raw) {
        cx += v.x.approx();
        cy += v.y.approx();
    }
    cx /= raw.size();
    cy /= raw.size();
    double sx = std::floor(cx), sy = std::floor(cy);
    std::vector<std::pair<double, double>> out;
    for (const auto& v : raw) out.push_back({v.x.approx() - sx, v.y.approx() - sy});
    return out;
}

}  // namespace

std::string renderTorusPartition(const PolygonSet& partition) {
    Canvas c(-0.05, -0.05, 1.05, 1.05, 800);
    for (int i = 1; i <= 26; ++i) {
        c.polygon(unitCellLift(partition.raw[i]), tileColor(i - 1, 26), "black", 0.0012);
    }
    return c.str();
}

std::string renderGraphWindow(const PolygonSet& partition, const TypeTable& table, int window) {
    Canvas c(-window - 1.0, -window - 1.0, window + 1.0, window + 1.0, 900);
    for (long x = -window; x <= window; ++x) {
        for (long y = -window; y <= window; ++y) {
            if (!inHalfPlaneH(x, y)) continue;
            int t = classify(partition, x, y);
            for (const auto& e : table[t].edges) {
                // Draw each undirected edge once, from its canonical endpoint.
                if (e.first < 0 || (e.first == 0 && e.second < 0)) continue;
                c.line((double)x, (double)y, (double)(x + e.first), (double)(y + e.second),
                       "#334455", 0.06);
            }
        }
    }
    c.circle(0, 0, 0.3, "#cc2222");
    return c.str();
}

std::string renderDynPolyOverlay(const PolygonSet& partition, const PolygonSet& dyn) {
    Canvas c(-0.05, -0.05, 1.05, 1.05, 800);
    for (int i = 1; i <= 26; ++i) {
        c.polygon(unitCellLift(partition.raw[i]), "#e8ecf2", "#99a4b2", 0.0012);
    }
    for (std::size_t j = 0; j < dyn.raw.size(); ++j) {
        c.polygon(unitCellLift(dyn.raw[j]), "#2d3f55", "black", 0.0008);
    }
    return c.str();
}

std::string renderGeneShadow(const PolygonSet& partition, const TypeTable& table,
                             const std::vector<std::pair<long, long>>& centers,
                             const std::vector<ShadowTriple>& triples, int j) {
    // Reconstruct the core arc: three steps out of the center on each branch.
    auto walk = [&](LatticePoint start, int branch, LatticePoint stop, int cap) {
        std::vector<std::pair<double, double>> pts{{(double)start.first, (double)start.second}};
        auto steps = strandOrbit(partition, table, start, branch, cap);
        LatticePoint cur = start;
        for (const auto& s : steps) {
            cur = {cur.first + s.edge.first, cur.second + s.edge.second};
            pts.push_back({(double)cur.first, (double)cur.second});
            if (cur == stop) break;
        }
        return pts;
    };

    LatticePoint g = centers[j];
    const ShadowTriple& tri = triples[j];

    double minX = 1e9, minY = 1e9, maxX = -1e9, maxY = -1e9;
    auto extend = [&](const std::vector<std::pair<double, double>>& pts) {
        for (auto& p : pts) {
            minX = std::min(minX, p.first);
            maxX = std::max(maxX, p.first);
            minY = std::min(minY, p.second);
            maxY = std::max(maxY, p.second);
        }
    };

    const LatticePoint kNoStop{1000000000, 1000000000};
    auto core0 = walk(g, 0, kNoStop, 3);
    auto core1 = walk(g, 1, kNoStop, 3);
    // Shadow strand: from its center out to each stored endpoint.  Branch
    // assignment varies, so try both and keep the one that reaches.
    auto reach = [&](LatticePoint stop) {
        for (int branch : {0, 1}) {
            auto pts = walk(tri.center, branch, stop, 400);
            if (!pts.empty() && pts.back().first == (double)stop.first &&
                pts.back().second == (double)stop.second) {
                return pts;
            }
        }
        return std::vector<std::pair<double, double>>{};
    };
    auto sh1 = reach(tri.end1);
    auto sh2 = reach(tri.end2);
    extend(core0);
    extend(core1);
    extend(sh1);
    extend(sh2);

    double pad = 2.0;
    Canvas c(minX - pad, minY - pad, maxX + pad, maxY + pad, 900);
    double w = (maxX - minX + 2 * pad) / 400.0;
    if (!sh1.empty()) c.polyline(sh1, "#7f9cc4", 2 * w);
    if (!sh2.empty()) c.polyline(sh2, "#7f9cc4", 2 * w);
    c.polyline(core0, "#20304a", 3 * w);
    c.polyline(core1, "#20304a", 3 * w);
    c.circle((double)g.first, (double)g.second, 3 * w, "#cc2222");
    c.circle((double)tri.center.first, (double)tri.center.second, 3 * w, "#cc8822");
    return c.str();
}

}  // namespace penrose
