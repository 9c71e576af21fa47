#pragma once

#include <istream>
#include <span>
#include <variant>
#include <vector>

#include "wkit/vector.hpp"

namespace wkit {

/// Unit-speed tolerance for closed-form jets.
inline constexpr double kAnalyticSpeedTol = 1e-12;
/// Unit-speed tolerance for jets estimated from samples.
inline constexpr double kSampledSpeedTol = 1e-6;

/// First and second derivative of a space curve at parameter t.
struct CurveJet {
    double t = 0.0;
    Vector d1 = Vector::zero(3);
    Vector d2 = Vector::zero(3);
    double unit_speed_residual = 0.0; // |‖d1‖ − 1|
};

/// Builds a jet and records its unit-speed residual. Both derivatives must
/// be three-dimensional.
CurveJet make_jet(double t, Vector d1, Vector d2);

/// K = ‖d1 × d2‖, valid only for unit speed. Throws UnitSpeedError when
/// the residual exceeds tol.
double curvature(const CurveJet& j, double tol = kAnalyticSpeedTol);

/// 2√3K = 1 + ‖r̈‖² + ‖ṙ − r̈‖² − 2‖ṙ − R(r̈)‖², R rotating by π/3 in the
/// plane of ṙ, r̈ oriented from r̈ to ṙ.
struct CurveReport {
    double curvature = 0.0;
    double rhs_bound = 0.0;       // 1 + ‖r̈‖² + ‖ṙ − r̈‖²
    double defect = 0.0;          // intrinsic, u = ṙ and v = −r̈
    double defect_explicit = 0.0; // 2‖ṙ − R(r̈)‖² from the rotation
    double residual = 0.0;        // 2√3K − rhs_bound + defect_explicit
    bool bound_holds = false;     // 2√3K <= rhs_bound (1e-9 relative slack)
};

CurveReport curve_report(const CurveJet& j, double tol = kAnalyticSpeedTol);

struct CurveSample {
    double t;
    Vector position;
};

/// Central-difference jet at interior sample i. Requires at least three
/// samples with uniform spacing (1e-9 relative). The unit-speed residual is
/// stored, not enforced.
CurveJet jet_from_samples(std::span<const CurveSample> samples, std::size_t i);

/// Reads `t,x,y,z` CSV with strictly increasing, uniformly spaced t.
std::vector<CurveSample> read_curve_csv(std::istream& in);

struct Circle {
    double radius;
};
struct Helix {
    double a;
    double b;
};
struct Line {
    Vector direction = Vector{1.0, 0.0, 0.0};
};
using CurveKind = std::variant<Circle, Helix, Line>;

/// Throws InputError for a nonpositive radius, a = b = 0 or a non-unit
/// direction.
void validate(const CurveKind& kind);

/// Closed-form unit-speed position.
Vector curve_position(const CurveKind& kind, double t);

/// Closed-form unit-speed jet.
CurveJet builtin_curve(const CurveKind& kind, double t);

/// Exact curvature of a builtin curve.
double builtin_curvature(const CurveKind& kind);

} // namespace wkit
