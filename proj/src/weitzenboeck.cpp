#include "wkit/weitzenboeck.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

namespace wkit {

namespace {

const double kRoot3 = std::sqrt(3.0);

void require_finite(const Vector& u) {
    for (double x : u.coords())
        if (std::isnan(x)) throw InputError("NaN coordinate");
}

} // namespace

Triangle::Triangle(double a, double b, double c) : a_(a), b_(b), c_(c) {
    for (double s : {a, b, c})
        if (!std::isfinite(s) || s <= 0.0) throw InputError("triangle sides must be positive and finite");
    if (!(a + b > c && b + c > a && c + a > b)) throw InputError("triangle inequality violated");
}

double lhs_sum(const Vector& u, const Vector& v) {
    return norm_sq(u) + norm_sq(v) + norm_sq(u + v);
}

double defect_intrinsic(const Vector& u, const Vector& v) {
    return 2.0 * (norm_sq(u) + norm_sq(v) + inner(u, v) - kRoot3 * wedge(u, v));
}

double defect_explicit(const Vector& u, const Vector& v) {
    require_same_dim(u, v);
    if (norm_sq(v) == 0.0) return 2.0 * norm_sq(u);
    return 2.0 * norm_sq(u + rotate_pi3(u, v));
}

IdentityReport verify_identity(const Vector& u, const Vector& v, double tol) {
    require_finite(u);
    require_finite(v);
    IdentityReport r;
    r.lhs = lhs_sum(u, v);
    r.wedge_term = 2.0 * kRoot3 * wedge(u, v);
    r.defect_intrinsic = defect_intrinsic(u, v);
    r.defect_explicit = defect_explicit(u, v);
    r.residual = r.lhs - r.wedge_term - r.defect_explicit;
    r.equality_case = r.defect_explicit <= tol * std::max(1.0, r.lhs);
    return r;
}

QSqrt3 verify_exact(const RationalVector& u, const RationalVector& v) {
    require_same_dim(u, v);
    if (u.dim() != 2) throw InputError("exact verification needs planar vectors");

    const Rational lhs = norm_sq(u) + norm_sq(v) + norm_sq(u + v);
    const Rational w = wedge_signed(u, v);
    const Rational abs_w = w.sign() < 0 ? -w : w;

    // R′(v) with ⟨u, R′(v)⟩ = −|w|; for w = 0 the first basis vector that is
    // not parallel to v fixes the plane orientation.
    std::array<Rational, 2> conormal{Rational(0), Rational(0)};
    if (w.sign() > 0) {
        conormal = {-v[1], v[0]};
    } else if (w.sign() < 0) {
        conormal = {v[1], -v[0]};
    } else if (!v[1].is_zero()) {
        conormal = v[1].sign() > 0 ? std::array{v[1], -v[0]} : std::array{-v[1], v[0]};
    } else {
        conormal = {Rational(0), v[0].sign() >= 0 ? v[0] : -v[0]};
    }

    // u + R(v) = (u + v/2) + (√3/2)·R′(v), coordinates in Q[√3]
    const Rational half(1, 2);
    QSqrt3 shifted_sq;
    for (std::size_t i = 0; i < 2; ++i) {
        const QSqrt3 coord(u[i] + half * v[i], half * conormal[i]);
        shifted_sq += coord * coord;
    }

    const QSqrt3 two(Rational(2));
    return QSqrt3(lhs) - two * QSqrt3::sqrt3() * QSqrt3(abs_w) - two * shifted_sq;
}

double area_heron(const Triangle& t) {
    std::array<double, 3> s{t.a(), t.b(), t.c()};
    std::sort(s.begin(), s.end(), std::greater<>());
    const double x = s[0], y = s[1], z = s[2];
    const double radicand = (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z));
    if (radicand < -1e-12 * (4.0 * x * x * y * y))
        throw InputError("inconsistent triangle sides");
    return 0.25 * std::sqrt(std::max(0.0, radicand));
}

double triangle_defect(const Triangle& t) {
    const double a = t.a(), b = t.b(), c = t.c();
    return (a * a + b * b + c * c) - 4.0 * kRoot3 * area_heron(t);
}

std::pair<Vector, Vector> triangle_to_vectors(const Triangle& t) {
    const double a = t.a(), b = t.b(), c = t.c();
    const double cx = (b * b + c * c - a * a) / (2.0 * c);
    const double cy = 2.0 * area_heron(t) / c;
    return {Vector{c, 0.0}, Vector{cx - c, cy}};
}

} // namespace wkit
