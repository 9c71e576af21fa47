#pragma once

#include <utility>

#include "wkit/euclid.hpp"
#include "wkit/exact_field.hpp"
#include "wkit/vector.hpp"

namespace wkit {

/// Side lengths of a nondegenerate triangle. c is the base side (opposite
/// the angle γ) wherever the roles of the sides matter.
class Triangle {
public:
    /// Throws InputError unless all sides are finite, positive and satisfy
    /// the strict triangle inequality.
    Triangle(double a, double b, double c);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double c() const noexcept { return c_; }

private:
    double a_, b_, c_;
};

/// Both sides of ‖u‖² + ‖v‖² + ‖u+v‖² = 2√3·u∧v + 2‖u + R(v)‖², with the
/// defect evaluated along two independent routes.
struct IdentityReport {
    double lhs = 0.0;
    double wedge_term = 0.0;       // 2√3·u∧v
    double defect_intrinsic = 0.0; // no rotation constructed
    double defect_explicit = 0.0;  // 2‖u + R(v)‖²
    double residual = 0.0;         // lhs − wedge_term − defect_explicit
    bool equality_case = false;
};

/// ‖u‖² + ‖v‖² + ‖u+v‖².
double lhs_sum(const Vector& u, const Vector& v);

/// 2(‖u‖² + ‖v‖² + ⟨u,v⟩ − √3·u∧v), coordinate free.
double defect_intrinsic(const Vector& u, const Vector& v);

/// 2‖u + R(v)‖² with R the π/3 rotation of the plane oriented from u to v.
/// For v = 0 this is 2‖u‖².
double defect_explicit(const Vector& u, const Vector& v);

/// equality_case holds iff defect_explicit <= tol·max(1, lhs).
IdentityReport verify_identity(const Vector& u, const Vector& v, double tol = 1e-9);

/// lhs − 2√3·|u∧v| − 2‖u + R(v)‖² evaluated in Q[√3] for planar rational
/// vectors. Exactly zero for every input; anything else is a bug.
QSqrt3 verify_exact(const RationalVector& u, const RationalVector& v);

/// Δ from a² b² = ((a² + b² − c²)/2)² + (2Δ)², evaluated in Kahan's
/// cancellation-free factored form.
double area_heron(const Triangle& t);

/// (a² + b² + c²) − 4√3·Δ.
double triangle_defect(const Triangle& t);

/// u = AB, v = BC for A = (0,0), B = (c,0) and C in the upper half plane
/// with |BC| = a, |CA| = b.
std::pair<Vector, Vector> triangle_to_vectors(const Triangle& t);

} // namespace wkit
