#pragma once

#include "wkit/vector.hpp"

namespace wkit {

/// Relative rejection threshold below which u and v count as collinear.
inline constexpr double kCollinearTol = 1e-12;

/// Unsigned determinant of (u, v) in the plane they span, i.e.
/// √(‖u‖²‖v‖² − ⟨u,v⟩²). Zero when u and v are collinear.
///
/// Evaluated as the root of the sum of squared 2×2 minors (Lagrange
/// identity), which keeps full relative accuracy near collinearity.
double wedge(const Vector& u, const Vector& v);

/// Gram-determinant form √max(0, ‖u‖²‖v‖² − ⟨u,v⟩²). Loses about half the
/// digits for near-collinear pairs; kept as a cross-check for wedge().
double wedge_gram(const Vector& u, const Vector& v);

/// Signed planar determinant u₀v₁ − u₁v₀.
template <class T>
T wedge_signed(const Vec<T>& u, const Vec<T>& v) {
    require_same_dim(u, v);
    if (u.dim() != 2) throw InputError("signed wedge needs planar vectors");
    return u[0] * v[1] - u[1] * v[0];
}

/// v together with its quarter-turn image R′(v) in the plane oriented from
/// u to v. `conormal` satisfies ⟨conormal, v⟩ = 0, ‖conormal‖ = ‖v‖ and
/// ⟨u, conormal⟩ = −(u∧v).
struct SpanFrame {
    Vector anchor;
    Vector conormal;
    bool degenerate = false;
};

/// Builds R′(v). For collinear u, v (including u = 0) any plane containing
/// v is admissible; the first basis vector not parallel to v is used.
/// Throws InputError for v = 0.
SpanFrame perp_rotate(const Vector& u, const Vector& v);

/// R(v) = ½v + (√3/2)R′(v): v rotated by π/3 in the plane oriented from u
/// to v.
Vector rotate_pi3(const Vector& u, const Vector& v);

} // namespace wkit
