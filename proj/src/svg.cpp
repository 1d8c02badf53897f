#include "homeo/svg.hpp"

#include <cstdio>
#include <numbers>
#include <sstream>
#include <vector>

namespace homeo {

namespace {

constexpr int kSpokes = 24;
constexpr int kCircles = 16;
constexpr int kSpokeSamples = 96;
constexpr int kCircleSamples = 256;
constexpr double kScale = 200.0;
constexpr double kMargin = 20.0;

std::string coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string to_svg_xy(PlanePoint p) {
    return coord(kMargin + kScale * (1.0 + p.x)) + "," + coord(kMargin + kScale * (1.0 - p.y));
}

std::string polyline(const std::vector<PlanePoint>& pts, const char* stroke, double width, bool closed) {
    std::string out = closed ? "<polygon" : "<polyline";
    out += " fill=\"none\" stroke=\"";
    out += stroke;
    out += "\" stroke-width=\"" + coord(width) + "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out += ' ';
        out += to_svg_xy(pts[i]);
    }
    return out + "\"/>\n";
}

std::vector<std::vector<PlanePoint>> spokes() {
    std::vector<std::vector<PlanePoint>> out;
    for (int k = 0; k < kSpokes; ++k) {
        const double ang = 2.0 * std::numbers::pi * k / kSpokes;
        std::vector<PlanePoint> line;
        for (int i = 0; i <= kSpokeSamples; ++i) line.push_back(from_polar({static_cast<double>(i) / kSpokeSamples, ang}));
        out.push_back(std::move(line));
    }
    return out;
}

std::vector<std::vector<PlanePoint>> circles() {
    std::vector<std::vector<PlanePoint>> out;
    for (int k = 1; k <= kCircles; ++k) {
        const double r = static_cast<double>(k) / kCircles;
        std::vector<PlanePoint> ring;
        for (int i = 0; i < kCircleSamples; ++i) ring.push_back(from_polar({r, 2.0 * std::numbers::pi * i / kCircleSamples}));
        out.push_back(std::move(ring));
    }
    return out;
}

}  // namespace

std::string deformation_grid_svg(const PlaneMap& map, std::span<const DiscHighlight> highlights) {
    const double size = 2.0 * (kScale + kMargin);
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << coord(size) << "\" height=\"" << coord(size)
       << "\" viewBox=\"0 0 " << coord(size) << ' ' << coord(size) << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const auto source_spokes = spokes();
    const auto source_circles = circles();

    os << "<g id=\"source-grid\">\n";
    for (const auto& s : source_spokes) os << polyline(s, "#c8c8c8", 0.8, false);
    for (const auto& c : source_circles) os << polyline(c, "#c8c8c8", 0.8, true);
    os << "</g>\n";

    os << "<g id=\"image-grid\">\n";
    auto mapped = [&](const std::vector<PlanePoint>& pts) {
        std::vector<PlanePoint> out;
        out.reserve(pts.size());
        for (const auto& p : pts) out.push_back(map(p));
        return out;
    };
    for (const auto& s : source_spokes) os << polyline(mapped(s), "#202020", 0.8, false);
    for (const auto& c : source_circles) os << polyline(mapped(c), "#202020", 0.8, true);
    os << "</g>\n";

    os << "<g id=\"highlights\">\n";
    for (const auto& h : highlights) {
        os << "<circle cx=\"" << coord(kMargin + kScale * (1.0 + h.center.x)) << "\" cy=\""
           << coord(kMargin + kScale * (1.0 - h.center.y)) << "\" r=\"" << coord(kScale * h.radius)
           << "\" fill=\"" << h.color << "\" fill-opacity=\"0.25\" stroke=\"" << h.color << "\" stroke-width=\"1.5\"/>\n";
    }
    os << "</g>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace homeo
