#include "pdlab/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace pdlab {

namespace {

struct Mapper {
    const Window& w;
    double s;
    double px(double x) const { return (x - w.x0) * s; }
    double py(double y) const { return (w.y1 - y) * s; } // flip y for screen coords
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

void open_doc(std::ostringstream& os, const Window& w, double scale) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w.width() * scale)
       << "\" height=\"" << num(w.height() * scale) << "\" viewBox=\"0 0 "
       << num(w.width() * scale) << ' ' << num(w.height() * scale) << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << num(w.width() * scale) << "\" height=\""
       << num(w.height() * scale) << "\" fill=\"white\" stroke=\"#444\"/>\n";
}

} // namespace

std::string render_svg_frame(const Window& window, double scale) {
    std::ostringstream os;
    open_doc(os, window, scale);
    os << "</svg>\n";
    return os.str();
}

std::string render_svg(const Triangulation& tri, const SvgOptions& opt) {
    const Window& w = tri.points->window;
    const Mapper m{w, opt.scale};
    std::ostringstream os;
    open_doc(os, w, opt.scale);

    if (opt.clusters) {
        const BoxGrid& grid = opt.clusters->grid;
        os << "<g fill=\"#f4d1d1\" stroke=\"#b22\" stroke-width=\"0.8\">\n";
        for (const auto& c : opt.clusters->clusters)
            for (const GridSite& z : c.sites) {
                const Rect b = grid.box_rect(z);
                os << "<rect x=\"" << num(m.px(b.x0)) << "\" y=\"" << num(m.py(b.y1))
                   << "\" width=\"" << num((b.x1 - b.x0) * opt.scale) << "\" height=\""
                   << num((b.y1 - b.y0) * opt.scale) << "\"/>\n";
            }
        os << "</g>\n";
    }

    // Delaunay edges, solid.
    os << "<g stroke=\"#222\" stroke-width=\"1\">\n";
    for (std::size_t u = 0; u < tri.graph.adjacency.size(); ++u) {
        for (int v : tri.graph.adjacency[u]) {
            if (v < int(u)) continue;
            const Vec2 a = tri.point(int(u)), b = tri.point(v);
            os << "<line x1=\"" << num(m.px(a.x)) << "\" y1=\"" << num(m.py(a.y)) << "\" x2=\""
               << num(m.px(b.x)) << "\" y2=\"" << num(m.py(b.y)) << "\"/>\n";
        }
    }
    os << "</g>\n";

    if (opt.voronoi) {
        // Dual edges: circumcenter to circumcenter; hull edges get a clipped
        // outward ray along the perpendicular bisector.
        os << "<g stroke=\"#1a6\" stroke-width=\"0.8\" stroke-dasharray=\"4,3\" fill=\"none\">\n";
        for (std::size_t t = 0; t < tri.triangles.size(); ++t) {
            for (int k = 0; k < 3; ++k) {
                const int nb = tri.neighbors[t][std::size_t(k)];
                const Vec2 c1 = tri.circumdisks[t].center;
                if (nb >= 0) {
                    if (nb < int(t)) continue;
                    const Vec2 c2 = tri.circumdisks[std::size_t(nb)].center;
                    os << "<line x1=\"" << num(m.px(c1.x)) << "\" y1=\"" << num(m.py(c1.y))
                       << "\" x2=\"" << num(m.px(c2.x)) << "\" y2=\"" << num(m.py(c2.y))
                       << "\"/>\n";
                } else {
                    const auto& tv = tri.triangles[t];
                    const Vec2 a = tri.point(tv[std::size_t((k + 1) % 3)]);
                    const Vec2 b = tri.point(tv[std::size_t((k + 2) % 3)]);
                    Vec2 n{b.y - a.y, a.x - b.x}; // outward normal of CCW hull edge a->b
                    const double len = std::sqrt(norm2(n));
                    if (len == 0) continue;
                    n = (1.0 / len) * n;
                    const double reach = w.width() + w.height();
                    const Vec2 c2 = c1 + reach * n;
                    os << "<line x1=\"" << num(m.px(c1.x)) << "\" y1=\"" << num(m.py(c1.y))
                       << "\" x2=\"" << num(m.px(c2.x)) << "\" y2=\"" << num(m.py(c2.y))
                       << "\"/>\n";
                }
            }
        }
        os << "</g>\n";
    }

    if (opt.circumcircles) {
        os << "<g stroke=\"#99c\" stroke-width=\"0.6\" fill=\"none\">\n";
        for (std::size_t t = 0; t < tri.circumdisks.size(); ++t) {
            const Circumdisk& d = tri.circumdisks[t];
            os << "<circle cx=\"" << num(m.px(d.center.x)) << "\" cy=\"" << num(m.py(d.center.y))
               << "\" r=\"" << num(std::sqrt(d.r2) * opt.scale) << "\"/>\n";
        }
        os << "</g>\n";
    }

    for (const auto& path : opt.paths) {
        os << "<polyline fill=\"none\" stroke=\"#d40\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < path.size(); ++i) {
            const Vec2 p = tri.point(path[i]);
            os << (i ? " " : "") << num(m.px(p.x)) << ',' << num(m.py(p.y));
        }
        os << "\"/>\n";
    }

    os << "<g fill=\"#037\">\n";
    for (std::size_t i = 0; i < tri.points->size(); ++i) {
        const Vec2 p = tri.points->points[i];
        os << "<circle cx=\"" << num(m.px(p.x)) << "\" cy=\"" << num(m.py(p.y))
           << "\" r=\"1.6\"/>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

} // namespace pdlab
