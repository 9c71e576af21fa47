#include "wkit/curve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "wkit/euclid.hpp"

namespace wkit {

namespace {

const double kRoot3 = std::sqrt(3.0);

Vector cross(const Vector& u, const Vector& v) {
    return Vector{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};

double parse_field(const std::string& field, std::size_t row) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(field, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    while (used < field.size() && std::isspace(static_cast<unsigned char>(field[used]))) ++used;
    if (used == 0 || used != field.size() || !std::isfinite(value))
        throw InputError("malformed number '" + field + "' at row " + std::to_string(row));
    return value;
}

} // namespace

CurveJet make_jet(double t, Vector d1, Vector d2) {
    if (d1.dim() != 3 || d2.dim() != 3) throw InputError("curve jets are three-dimensional");
    const double residual = std::abs(norm(d1) - 1.0);
    return {t, std::move(d1), std::move(d2), residual};
}

double curvature(const CurveJet& j, double tol) {
    if (j.unit_speed_residual > tol)
        throw UnitSpeedError("unit-speed violated at t=" + std::to_string(j.t));
    return norm(cross(j.d1, j.d2));
}

CurveReport curve_report(const CurveJet& j, double tol) {
    CurveReport r;
    r.curvature = curvature(j, tol);
    r.rhs_bound = 1.0 + norm_sq(j.d2) + norm_sq(j.d1 - j.d2);

    // Identity applied to u = ṙ, v = −r̈: ⟨u,v⟩ = −⟨ṙ,r̈⟩ and u∧v = K.
    r.defect = 2.0 * (norm_sq(j.d1) + norm_sq(j.d2) - inner(j.d1, j.d2) - kRoot3 * r.curvature);

    // The plane oriented from r̈ to ṙ is the plane oriented from −ṙ to r̈,
    // so R(r̈) = rotate_pi3(−ṙ, r̈).
    if (norm_sq(j.d2) == 0.0)
        r.defect_explicit = 2.0 * norm_sq(j.d1);
    else
        r.defect_explicit = 2.0 * norm_sq(j.d1 - rotate_pi3(-j.d1, j.d2));

    r.residual = 2.0 * kRoot3 * r.curvature - r.rhs_bound + r.defect_explicit;
    r.bound_holds = 2.0 * kRoot3 * r.curvature <= r.rhs_bound + 1e-9 * std::max(1.0, r.rhs_bound);
    return r;
}

CurveJet jet_from_samples(std::span<const CurveSample> samples, std::size_t i) {
    if (samples.size() < 3) throw InputError("need at least 3 curve samples");
    if (i < 1 || i + 1 >= samples.size()) throw InputError("jet index must be interior");

    const double h = samples[i].t - samples[i - 1].t;
    const double h_next = samples[i + 1].t - samples[i].t;
    if (!(h > 0.0) || std::abs(h_next - h) > 1e-9 * h)
        throw InputError("curve samples must be uniformly spaced");

    const Vector& prev = samples[i - 1].position;
    const Vector& mid = samples[i].position;
    const Vector& next = samples[i + 1].position;
    Vector d1 = (1.0 / (2.0 * h)) * (next - prev);
    Vector d2 = (1.0 / (h * h)) * ((next - mid) - (mid - prev));
    return make_jet(samples[i].t, std::move(d1), std::move(d2));
}

std::vector<CurveSample> read_curve_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw InputError("empty curve file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "t,x,y,z") throw InputError("curve file header must be 't,x,y,z'");

    std::vector<CurveSample> out;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<double> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(parse_field(field, row));
        if (fields.size() != 4)
            throw InputError("expected 4 columns at row " + std::to_string(row));
        if (!out.empty() && !(fields[0] > out.back().t))
            throw InputError("t must be strictly increasing at row " + std::to_string(row));
        out.push_back({fields[0], Vector{fields[1], fields[2], fields[3]}});
    }
    if (out.size() < 3) throw InputError("need at least 3 curve samples");

    const double h = out[1].t - out[0].t;
    for (std::size_t k = 1; k < out.size(); ++k)
        if (std::abs((out[k].t - out[k - 1].t) - h) > 1e-9 * h)
            throw InputError("non-uniform spacing at row " + std::to_string(k + 1));
    return out;
}

void validate(const CurveKind& kind) {
    std::visit(overloaded{
                   [](const Circle& c) {
                       if (!(c.radius > 0.0) || !std::isfinite(c.radius))
                           throw InputError("circle radius must be positive");
                   },
                   [](const Helix& h) {
                       if (!std::isfinite(h.a) || !std::isfinite(h.b) || (h.a == 0.0 && h.b == 0.0))
                           throw InputError("helix needs (a, b) != (0, 0)");
                   },
                   [](const Line& l) {
                       if (l.direction.dim() != 3 || std::abs(norm(l.direction) - 1.0) > kAnalyticSpeedTol)
                           throw InputError("line direction must be a 3D unit vector");
                   },
               },
               kind);
}

Vector curve_position(const CurveKind& kind, double t) {
    validate(kind);
    return std::visit(overloaded{
                          [t](const Circle& c) {
                              const double rho = c.radius;
                              return Vector{rho * std::cos(t / rho), rho * std::sin(t / rho), 0.0};
                          },
                          [t](const Helix& h) {
                              const double w = 1.0 / std::hypot(h.a, h.b);
                              return Vector{h.a * std::cos(w * t), h.a * std::sin(w * t), h.b * w * t};
                          },
                          [t](const Line& l) { return t * l.direction; },
                      },
                      kind);
}

CurveJet builtin_curve(const CurveKind& kind, double t) {
    validate(kind);
    return std::visit(
        overloaded{
            [t](const Circle& c) {
                const double rho = c.radius;
                const double cs = std::cos(t / rho), sn = std::sin(t / rho);
                return make_jet(t, Vector{-sn, cs, 0.0}, Vector{-cs / rho, -sn / rho, 0.0});
            },
            [t](const Helix& h) {
                const double w = 1.0 / std::hypot(h.a, h.b);
                const double cs = std::cos(w * t), sn = std::sin(w * t);
                return make_jet(t, Vector{-h.a * w * sn, h.a * w * cs, h.b * w},
                                Vector{-h.a * w * w * cs, -h.a * w * w * sn, 0.0});
            },
            [t](const Line& l) { return make_jet(t, l.direction, Vector::zero(3)); },
        },
        kind);
}

double builtin_curvature(const CurveKind& kind) {
    validate(kind);
    return std::visit(overloaded{
                          [](const Circle& c) { return 1.0 / c.radius; },
                          [](const Helix& h) { return std::abs(h.a) / (h.a * h.a + h.b * h.b); },
                          [](const Line&) { return 0.0; },
                      },
                      kind);
}

} // namespace wkit
