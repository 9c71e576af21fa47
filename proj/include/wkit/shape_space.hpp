#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "wkit/weitzenboeck.hpp"

namespace wkit {

/// A triangle seen in the shape plane: x = I/2 with I = a² + b² + c², y = 2Δ.
struct ShapePoint {
    double x = 0.0;
    double y = 0.0;
};

/// Circle (x − (a²+b²))² + y² = (ab)² carrying every triangle with the two
/// given sides.
struct ShapeCircle {
    double center_x = 0.0;
    double radius = 0.0;
};

/// Region reachable by triangles with a² + b² = s: center (s, 0), radius s/2.
class HalfDisk {
public:
    /// Throws InputError for s <= 0.
    explicit HalfDisk(double s);

    double center_x() const noexcept { return center_x_; }
    double radius() const noexcept { return radius_; }

    /// Boundary half-circle, the locus of triangles with a = b.
    ShapeCircle boundary() const { return {center_x_, radius_}; }

private:
    double center_x_;
    double radius_;
};

enum class ShapeClass { interior, isosceles_limit, equilateral_tangent };

std::string_view to_string(ShapeClass c);

/// Tangent from the origin to a half-disk: the angle ΩOT, its sine ΩT/ΩO
/// and the slope of OT. Independent of s.
struct TangentLine {
    double slope;
    double angle;
    double sine;
};

ShapePoint shape_point(const Triangle& t);

/// Circle for sides a and b of t.
ShapeCircle circle_of(const Triangle& t);

/// Half-disk for s = a² + b² of t.
HalfDisk halfdisk_of(const Triangle& t);

/// (x − center)² + y² − radius². Zero iff p is on the circle.
double circle_residual(const ShapePoint& p, const ShapeCircle& c);

/// Open-quadrant point inside the closed half-disk, with tol added to r².
bool halfdisk_contains(const ShapePoint& p, const HalfDisk& d, double tol = 0.0);

TangentLine tangent_line();
double tangent_line_slope();

/// T = (3s/4, √3·s/4).
ShapePoint tangent_point(const HalfDisk& d);

/// tol is relative: slope match for the equilateral case, boundary residual
/// against r² for the isosceles limit. Equilateral takes precedence.
ShapeClass classify(const Triangle& t, double tol = 1e-9);

/// Rows of the shape-plane figure for a fixed s.
struct FigureRow {
    std::string series;
    double x;
    double y;
};

struct FigureOptions {
    std::size_t samples = 100;
    std::size_t circles = 4;
};

/// Boundary of D, the tangent OT, T, Ω and sampled per-(a,b) triangle
/// circles with a² + b² = s. Per-circle rows are actual triangles.
std::vector<FigureRow> emit_figure(double s, const FigureOptions& opts = {});

/// CSV with header `series,x,y`, numbers in shortest round-trip form.
std::string figure_to_csv(const std::vector<FigureRow>& rows);

/// Shortest decimal that parses back to the same double.
std::string format_shortest(double x);

} // namespace wkit
