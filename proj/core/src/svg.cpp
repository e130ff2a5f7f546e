#include "mixedtoric/svg.hpp"

#include <algorithm>
#include <sstream>

namespace mixedtoric {

namespace {

struct Canvas {
    std::ostringstream os;
    double w, h;
    Canvas(double width, double height) : w(width), h(height) {
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
           << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h
           << "\">\n";
    }
    void line(double x1, double y1, double x2, double y2, const std::string& stroke,
              double width = 1.0) {
        os << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
           << "\" y2=\"" << y2 << "\" stroke=\"" << stroke << "\" stroke-width=\""
           << width << "\"/>\n";
    }
    void circle(double cx, double cy, double r, const std::string& fill) {
        os << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r
           << "\" fill=\"" << fill << "\"/>\n";
    }
    void text(double x, double y, const std::string& s) {
        os << "  <text x=\"" << x << "\" y=\"" << y
           << "\" font-size=\"12\" font-family=\"sans-serif\">" << s
           << "</text>\n";
    }
    std::string finish() {
        os << "</svg>\n";
        return os.str();
    }
};

}  // namespace

std::string newton_svg(const NewtonPolyhedron& np) {
    int max_x = 1, max_y = 1;
    for (const auto& s : np.support) {
        max_x = std::max(max_x, s.point[0]);
        max_y = std::max(max_y, s.point[1]);
    }
    max_x += 1;
    max_y += 1;
    const double cell = 40.0, margin = 30.0;
    Canvas cv(margin * 2 + cell * max_x, margin * 2 + cell * max_y);
    auto X = [&](double x) { return margin + cell * x; };
    auto Y = [&](double y) { return cv.h - margin - cell * y; };

    for (int x = 0; x <= max_x; ++x)
        cv.line(X(x), Y(0), X(x), Y(max_y), "#dddddd");
    for (int y = 0; y <= max_y; ++y)
        cv.line(X(0), Y(y), X(max_x), Y(y), "#dddddd");

    for (std::size_t i = 0; i + 1 < np.hull_vertices.size(); ++i) {
        const auto &a = np.hull_vertices[i], &b = np.hull_vertices[i + 1];
        cv.line(X(a[0]), Y(a[1]), X(b[0]), Y(b[1]), "#333333", 2.0);
    }
    // non-compact rays up and right from the end vertices
    if (!np.hull_vertices.empty()) {
        const auto& top = np.hull_vertices.front();
        const auto& right = np.hull_vertices.back();
        cv.line(X(top[0]), Y(top[1]), X(top[0]), Y(max_y), "#333333", 2.0);
        cv.line(X(right[0]), Y(right[1]), X(max_x), Y(right[1]), "#333333", 2.0);
    }
    for (const auto& s : np.support)
        cv.circle(X(s.point[0]), Y(s.point[1]), 4, "#000000");
    for (const auto& e : np.compact_edges) {
        double mx = 0.5 * (e.from[0] + e.to[0]), my = 0.5 * (e.from[1] + e.to[1]);
        std::ostringstream label;
        label << "(" << e.normal.entries[0] << "," << e.normal.entries[1] << ")";
        cv.text(X(mx) + 6, Y(my) - 6, label.str());
    }
    return cv.finish();
}

std::string fan_svg(const Fan2& fan) {
    const double size = 320.0, margin = 30.0, len = size - 2 * margin;
    Canvas cv(size, size);
    auto X = [&](double x) { return margin + x; };
    auto Y = [&](double y) { return size - margin - y; };

    cv.line(X(0), Y(0), X(len), Y(0), "#999999");
    cv.line(X(0), Y(0), X(0), Y(len), "#999999");
    for (const auto& r : fan.rays) {
        double norm = std::max(std::abs(double(r.x)), std::abs(double(r.y)));
        double dx = len * r.x / norm * 0.9, dy = len * r.y / norm * 0.9;
        cv.line(X(0), Y(0), X(dx), Y(dy), "#1f77b4", 2.0);
        std::ostringstream label;
        label << "(" << r.x << "," << r.y << ")";
        cv.text(X(dx) + 4, Y(dy) - 4, label.str());
    }
    return cv.finish();
}

}  // namespace mixedtoric
