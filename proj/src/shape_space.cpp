#include "wkit/shape_space.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

namespace wkit {

HalfDisk::HalfDisk(double s) : center_x_(s), radius_(s / 2.0) {
    if (!(s > 0.0) || !std::isfinite(s)) throw InputError("half-disk needs s > 0");
}

std::string_view to_string(ShapeClass c) {
    switch (c) {
    case ShapeClass::interior: return "interior";
    case ShapeClass::isosceles_limit: return "isosceles_limit";
    case ShapeClass::equilateral_tangent: return "equilateral_tangent";
    }
    return "unknown";
}

ShapePoint shape_point(const Triangle& t) {
    const double a = t.a(), b = t.b(), c = t.c();
    return {(a * a + b * b + c * c) / 2.0, 2.0 * area_heron(t)};
}

ShapeCircle circle_of(const Triangle& t) {
    return {t.a() * t.a() + t.b() * t.b(), t.a() * t.b()};
}

HalfDisk halfdisk_of(const Triangle& t) { return HalfDisk(t.a() * t.a() + t.b() * t.b()); }

double circle_residual(const ShapePoint& p, const ShapeCircle& c) {
    const double dx = p.x - c.center_x;
    return dx * dx + p.y * p.y - c.radius * c.radius;
}

bool halfdisk_contains(const ShapePoint& p, const HalfDisk& d, double tol) {
    if (!(p.x > 0.0 && p.y > 0.0)) return false;
    const double dx = p.x - d.center_x();
    return dx * dx + p.y * p.y <= d.radius() * d.radius() + tol;
}

TangentLine tangent_line() {
    // sin(ΩOT) = ΩT/ΩO = (s/2)/s
    const double sine = 0.5;
    const double angle = std::asin(sine);
    return {1.0 / std::numbers::sqrt3, angle, sine};
}

double tangent_line_slope() { return tangent_line().slope; }

ShapePoint tangent_point(const HalfDisk& d) {
    // |OT| = s·cos(π/6) along the direction of angle π/6
    const double s = d.center_x();
    return {0.75 * s, std::numbers::sqrt3 / 4.0 * s};
}

ShapeClass classify(const Triangle& t, double tol) {
    const ShapePoint p = shape_point(t);
    const double slope = tangent_line_slope();
    if (std::abs(p.y / p.x - slope) <= tol * slope) return ShapeClass::equilateral_tangent;

    const HalfDisk d = halfdisk_of(t);
    const double r2 = d.radius() * d.radius();
    if (std::abs(circle_residual(p, d.boundary())) <= tol * r2) return ShapeClass::isosceles_limit;
    return ShapeClass::interior;
}

std::vector<FigureRow> emit_figure(double s, const FigureOptions& opts) {
    const HalfDisk d(s);
    if (opts.samples < 2) throw InputError("figure needs at least 2 samples");
    const std::size_t n = opts.samples;
    const double pi = std::numbers::pi;
    std::vector<FigureRow> rows;

    for (std::size_t k = 0; k < n; ++k) {
        const double theta = pi * static_cast<double>(k) / static_cast<double>(n - 1);
        rows.push_back({"boundary", d.center_x() + d.radius() * std::cos(theta),
                        d.radius() * std::sin(theta)});
    }

    // O to the far edge of D, passing through T
    const double slope = tangent_line_slope();
    const double x_end = d.center_x() + d.radius();
    for (std::size_t k = 0; k < n; ++k) {
        const double x = x_end * static_cast<double>(k) / static_cast<double>(n - 1);
        rows.push_back({"tangent", x, slope * x});
    }

    const ShapePoint tp = tangent_point(d);
    rows.push_back({"T", tp.x, tp.y});
    rows.push_back({"omega", d.center_x(), 0.0});

    // a = √s·cos φ, b = √s·sin φ for φ up to π/4; the last circle is a = b
    const double root_s = std::sqrt(s);
    for (std::size_t j = 1; j <= opts.circles; ++j) {
        const double phi = pi / 4.0 * static_cast<double>(j) / static_cast<double>(opts.circles);
        const double a = root_s * std::cos(phi);
        const double b = root_s * std::sin(phi);
        const std::string name = "circle:" + format_shortest(a) + ":" + format_shortest(b);
        // γ strictly inside (0, π) keeps every sample a genuine triangle
        for (std::size_t k = 0; k < n; ++k) {
            const double gamma = pi * (static_cast<double>(k) + 0.5) / static_cast<double>(n);
            rows.push_back({name, s - a * b * std::cos(gamma), a * b * std::sin(gamma)});
        }
    }
    return rows;
}

std::string format_shortest(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string figure_to_csv(const std::vector<FigureRow>& rows) {
    std::string out = "series,x,y\n";
    for (const auto& r : rows) {
        out += r.series;
        out += ',';
        out += format_shortest(r.x);
        out += ',';
        out += format_shortest(r.y);
        out += '\n';
    }
    return out;
}

} // namespace wkit
