#include "wkit/euclid.hpp"

#include <algorithm>
#include <cmath>

namespace wkit {

namespace {

// a·b − c·d with a single rounding error (Kahan).
double diff_of_products(double a, double b, double c, double d) {
    const double cd = c * d;
    const double err = std::fma(-c, d, cd);
    return std::fma(a, b, -cd) + err;
}

// |a·b − c·d|, independent of the order of the two products so that
// wedge(u, v) and wedge(v, u) agree bit for bit.
double minor(double a, double b, double c, double d) {
    return a * b >= c * d ? diff_of_products(a, b, c, d) : diff_of_products(c, d, a, b);
}

// x − (⟨x,v⟩/‖v‖²)·v, applied twice so the result is orthogonal to v to
// working precision even when x is nearly parallel to v.
std::vector<double> reject(std::span<const double> x, const Vector& v, double vv) {
    std::vector<double> w(x.begin(), x.end());
    for (int pass = 0; pass < 2; ++pass) {
        double xv = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i) xv += w[i] * v[i];
        const double alpha = xv / vv;
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::fma(-alpha, v[i], w[i]);
    }
    return w;
}

double norm_of(const std::vector<double>& w) {
    double s = 0.0;
    for (double x : w) s += x * x;
    return std::sqrt(s);
}

Vector rescaled(std::vector<double> w, double factor) {
    for (auto& x : w) x *= factor;
    return Vector(std::move(w));
}

} // namespace

double wedge(const Vector& u, const Vector& v) {
    require_same_dim(u, v);
    double sum = 0.0;
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = i + 1; j < u.dim(); ++j) {
            const double m = minor(u[i], v[j], u[j], v[i]);
            sum += m * m;
        }
    return std::sqrt(sum);
}

double wedge_gram(const Vector& u, const Vector& v) {
    const double uv = inner(u, v);
    return std::sqrt(std::max(0.0, norm_sq(u) * norm_sq(v) - uv * uv));
}

SpanFrame perp_rotate(const Vector& u, const Vector& v) {
    require_same_dim(u, v);
    const double vv = norm_sq(v);
    if (vv == 0.0) throw InputError("rotation of the zero vector is undefined");
    const double vnorm = std::sqrt(vv);

    auto w = reject(u.coords(), v, vv);
    const double wnorm = norm_of(w);
    if (wnorm > kCollinearTol * norm(u)) {
        // R′(v) points away from the component of u orthogonal to v
        return {v, rescaled(std::move(w), -vnorm / wnorm), false};
    }

    // Collinear: any plane through v will do. Take the first basis vector
    // with a usable component orthogonal to v.
    for (std::size_t k = 0; k < v.dim(); ++k) {
        std::vector<double> e(v.dim(), 0.0);
        e[k] = 1.0;
        auto r = reject(e, v, vv);
        const double rnorm = norm_of(r);
        if (rnorm >= 1e-6) return {v, rescaled(std::move(r), vnorm / rnorm), true};
    }
    // Some basis vector has |e_k·v̂| ≤ 1/√n, so the loop always returns.
    throw InputError("no admissible rotation plane");
}

Vector rotate_pi3(const Vector& u, const Vector& v) {
    const SpanFrame frame = perp_rotate(u, v);
    static const double kHalfRoot3 = std::sqrt(3.0) / 2.0;
    return 0.5 * v + kHalfRoot3 * frame.conormal;
}

} // namespace wkit
