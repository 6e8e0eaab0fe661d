#include "levy/render.hpp"

#include <string>
#include <vector>

#include "levy/lattice.hpp"

namespace levy {

namespace {

struct Bounds {
    Dyadic min_x, max_x, min_y, max_y;
    bool initialized = false;

    void include(const DyadicPoint& p) {
        if (!initialized) {
            min_x = max_x = p.x;
            min_y = max_y = p.y;
            initialized = true;
            return;
        }
        if (p.x < min_x) min_x = p.x;
        if (p.x > max_x) max_x = p.x;
        if (p.y < min_y) min_y = p.y;
        if (p.y > max_y) max_y = p.y;
    }
};

constexpr const char* kUnoccupiedFill = "#f0f0f0";
constexpr const char* kOccupiedFill = "#27496d";
constexpr const char* kCoveredFill = "#c0392b";

void collect(const LatticeTriangle& t, int remaining, std::vector<LatticeTriangle>& out) {
    if (remaining == 0) {
        out.push_back(t);
        return;
    }
    const auto [first, second] = subdivide(t);
    collect(first, remaining - 1, out);
    collect(second, remaining - 1, out);
}

}  // namespace

std::string render_svg(int depth, RenderClassification classification, int depth_limit) {
    const OccupancySet occ = iterate(depth, depth_limit);

    // Star order, depth first, first child first: the fixed enumeration
    // order keeps the output byte-stable.
    std::vector<LatticeTriangle> triangles;
    triangles.reserve(static_cast<std::size_t>(15) << depth);
    for (const LatticeTriangle& root : star(base_triangle()).slots)
        collect(root, depth, triangles);

    Bounds bounds;
    for (const auto& t : triangles) {
        bounds.include(t.left);
        bounds.include(t.top);
        bounds.include(t.right);
    }
    const Dyadic margin(1, 2);  // 1/4
    const Dyadic width = bounds.max_x - bounds.min_x + margin + margin;
    const Dyadic height = bounds.max_y - bounds.min_y + margin + margin;
    const Dyadic left = bounds.min_x - margin;
    const Dyadic top = bounds.max_y + margin;

    // SVG y grows downward; emit (x - left, top - y) so the picture keeps
    // the mathematical orientation. All coordinates are exact decimals.
    const auto point = [&](const DyadicPoint& p) {
        return (p.x - left).to_decimal_string() + "," + (top - p.y).to_decimal_string();
    };

    const Dyadic stroke_width(1, depth / 2 + 5);

    std::string svg;
    svg.reserve(triangles.size() * 96 + 512);
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"900\" viewBox=\"0 0 ";
    svg += width.to_decimal_string();
    svg += " ";
    svg += height.to_decimal_string();
    svg += "\">\n";
    svg += "<g stroke=\"#b0b0b0\" stroke-width=\"";
    svg += stroke_width.to_decimal_string();
    svg += "\" stroke-linejoin=\"round\">\n";

    for (const auto& t : triangles) {
        const bool occupied = occ.contains(t);
        const char* fill = kUnoccupiedFill;
        if (occupied) {
            fill = kOccupiedFill;
            if (classification == RenderClassification::kByClass &&
                neighborhood_type(t, occ) == kCoveredType)
                fill = kCoveredFill;
        }
        svg += "<polygon points=\"";
        svg += point(t.left);
        svg += " ";
        svg += point(t.top);
        svg += " ";
        svg += point(t.right);
        svg += "\" fill=\"";
        svg += fill;
        svg += "\"/>\n";
    }

    svg += "</g>\n</svg>\n";
    return svg;
}

}  // namespace levy
