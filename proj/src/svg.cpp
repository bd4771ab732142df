#include "bookcross/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace bookcross {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kRing = 46.0;   // radial step per tree depth
constexpr double kMargin = 40.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

struct Point {
    double x = 0, y = 0;
};

} // namespace

std::string render_sunburst(const Graph& g, const BookEmbedding& emb,
                            const CrossingReport& report) {
    if (static_cast<int>(emb.order.size()) != g.vertex_count() ||
        static_cast<int>(emb.page.size()) != g.edge_count())
        throw std::invalid_argument("layout does not cover the graph");

    int n = g.vertex_count();
    TwoCore core = two_core(g);

    std::vector<std::vector<int>> children(n);
    std::vector<int> depth(n, 0);
    for (int v = 0; v < n; ++v)
        if (core.parent[v] >= 0) children[core.parent[v]].push_back(v);

    // anchors sit on the circle: core vertices plus the roots of tree-only
    // components, in layout order
    std::vector<int> anchors;
    for (int v : emb.order)
        if (core.in_core(v) || core.parent[v] == -1) anchors.push_back(v);

    std::vector<int> leaves(n, 1);
    {
        // leaf counts bottom-up (children point away from the core)
        std::vector<int> order_by_depth;
        std::vector<int> stack = anchors;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            order_by_depth.push_back(v);
            for (int c : children[v]) {
                depth[c] = depth[v] + 1;
                stack.push_back(c);
            }
        }
        for (auto it = order_by_depth.rbegin(); it != order_by_depth.rend(); ++it) {
            int v = *it;
            if (!children[v].empty()) {
                leaves[v] = 0;
                for (int c : children[v]) leaves[v] += leaves[c];
            }
        }
    }

    int max_depth = 0;
    for (int v = 0; v < n; ++v) max_depth = std::max(max_depth, depth[v]);

    double r0 = std::max(120.0, 24.0 * anchors.size() / (2 * kPi) * 2);
    double extent = r0 + max_depth * kRing + kMargin + r0 * 0.6; // outer arcs bulge
    double cx = extent, cy = extent;
    auto polar = [&](double r, double theta) {
        return Point{cx + r * std::cos(theta), cy + r * std::sin(theta)};
    };

    int a_count = std::max<int>(1, static_cast<int>(anchors.size()));
    std::vector<double> angle(n, 0.0);
    std::vector<Point> at(n);
    for (size_t i = 0; i < anchors.size(); ++i) {
        int v = anchors[i];
        angle[v] = 2 * kPi * static_cast<double>(i) / a_count - kPi / 2;
        at[v] = polar(r0, angle[v]);
    }

    // pendant trees: wedge per subtree, width proportional to leaf count
    {
        struct Item {
            int v;
            double lo, hi;
        };
        std::vector<Item> stack;
        for (size_t i = 0; i < anchors.size(); ++i) {
            int v = anchors[i];
            double width = 2 * kPi / a_count;
            double lo = angle[v] - width / 2, hi = angle[v] + width / 2;
            double total = 0;
            for (int c : children[v]) total += leaves[c];
            double cursor = lo;
            for (int c : children[v]) {
                double span = (hi - lo) * leaves[c] / total;
                stack.push_back({c, cursor, cursor + span});
                cursor += span;
            }
        }
        while (!stack.empty()) {
            Item it = stack.back();
            stack.pop_back();
            angle[it.v] = (it.lo + it.hi) / 2;
            at[it.v] = polar(r0 + depth[it.v] * kRing, angle[it.v]);
            double total = 0;
            for (int c : children[it.v]) total += leaves[c];
            double cursor = it.lo;
            for (int c : children[it.v]) {
                double span = (it.hi - it.lo) * leaves[c] / total;
                stack.push_back({c, cursor, cursor + span});
                cursor += span;
            }
        }
    }

    std::ostringstream svg;
    double size = 2 * extent;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(size)
        << "\" height=\"" << num(size) << "\" viewBox=\"0 0 " << num(size) << " " << num(size)
        << "\">\n";
    svg << "<!-- crossings: " << report.crossings
        << " crossed_edges: " << report.crossed_count << " -->\n";
    svg << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"" << num(r0)
        << "\" fill=\"none\" stroke=\"#dddddd\" stroke-dasharray=\"4 4\"/>\n";

    // edges: tree edges radial, core page-0 chords inside, page-1 arcs outside
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        bool core_edge = core.in_core(u) && core.in_core(v);
        if (!core_edge) {
            svg << "<line x1=\"" << num(at[u].x) << "\" y1=\"" << num(at[u].y) << "\" x2=\""
                << num(at[v].x) << "\" y2=\"" << num(at[v].y)
                << "\" stroke=\"#777777\" stroke-width=\"1\"/>\n";
            continue;
        }
        if (emb.page[e] == 0) {
            svg << "<line x1=\"" << num(at[u].x) << "\" y1=\"" << num(at[u].y) << "\" x2=\""
                << num(at[v].x) << "\" y2=\"" << num(at[v].y)
                << "\" stroke=\"#2166ac\" stroke-width=\"1.5\"/>\n";
        } else {
            // outside the circle: quadratic arc over the shorter side
            double a1 = angle[u], a2 = angle[v];
            double d = std::fmod(a2 - a1 + 4 * kPi, 2 * kPi);
            double mid = d <= kPi ? a1 + d / 2 : a2 + (2 * kPi - d) / 2;
            double span = std::min(d, 2 * kPi - d);
            Point c = polar(r0 * (1.15 + 0.5 * span / kPi), mid);
            svg << "<path d=\"M " << num(at[u].x) << " " << num(at[u].y) << " Q " << num(c.x)
                << " " << num(c.y) << " " << num(at[v].x) << " " << num(at[v].y)
                << "\" fill=\"none\" stroke=\"#b2182b\" stroke-width=\"1.5\" "
                   "stroke-dasharray=\"6 3\"/>\n";
        }
    }

    for (int v = 0; v < n; ++v) {
        bool on_circle = core.in_core(v);
        svg << "<circle cx=\"" << num(at[v].x) << "\" cy=\"" << num(at[v].y) << "\" r=\""
            << (on_circle ? "4" : "3") << "\" fill=\"" << (on_circle ? "#08306b" : "#555555")
            << "\"/>\n";
        svg << "<text x=\"" << num(at[v].x + 6) << "\" y=\"" << num(at[v].y - 6)
            << "\" font-size=\"10\" font-family=\"sans-serif\">" << g.label(v) << "</text>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

} // namespace bookcross
