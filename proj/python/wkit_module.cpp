#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "wkit/curve.hpp"
#include "wkit/error.hpp"
#include "wkit/shape_space.hpp"
#include "wkit/sweep.hpp"
#include "wkit/weitzenboeck.hpp"

namespace py = pybind11;
using namespace wkit;

namespace {

Vector to_vector(const std::vector<double>& xs) { return Vector(xs); }

std::vector<double> to_list(const Vector& v) { return {v.coords().begin(), v.coords().end()}; }

RationalVector to_rational(const std::vector<std::string>& xs) {
    std::vector<Rational> out;
    for (const auto& x : xs) out.push_back(Rational::parse(x));
    return RationalVector(std::move(out));
}

CurveKind curve_kind(const std::string& kind, const std::vector<double>& params) {
    CurveKind out;
    if (kind == "circle" && params.size() == 1) out = Circle{params[0]};
    else if (kind == "helix" && params.size() == 2) out = Helix{params[0], params[1]};
    else if (kind == "line" && params.empty()) out = Line{};
    else if (kind == "line" && params.size() == 3) out = Line{Vector(params)};
    else throw InputError("unknown curve '" + kind + "'");
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Ionescu-Weitzenboeck defect toolkit";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

    py::class_<IdentityReport>(m, "IdentityReport")
        .def_readonly("lhs", &IdentityReport::lhs)
        .def_readonly("wedge_term", &IdentityReport::wedge_term)
        .def_readonly("defect_intrinsic", &IdentityReport::defect_intrinsic)
        .def_readonly("defect_explicit", &IdentityReport::defect_explicit)
        .def_readonly("residual", &IdentityReport::residual)
        .def_readonly("equality_case", &IdentityReport::equality_case);

    m.def("wedge", [](const std::vector<double>& u, const std::vector<double>& v) {
        return wedge(to_vector(u), to_vector(v));
    });
    m.def("rotate_pi3", [](const std::vector<double>& u, const std::vector<double>& v) {
        return to_list(rotate_pi3(to_vector(u), to_vector(v)));
    });
    m.def("lhs_sum", [](const std::vector<double>& u, const std::vector<double>& v) {
        return lhs_sum(to_vector(u), to_vector(v));
    });
    m.def("defect_intrinsic", [](const std::vector<double>& u, const std::vector<double>& v) {
        return defect_intrinsic(to_vector(u), to_vector(v));
    });
    m.def("defect_explicit", [](const std::vector<double>& u, const std::vector<double>& v) {
        return defect_explicit(to_vector(u), to_vector(v));
    });
    m.def(
        "verify_identity",
        [](const std::vector<double>& u, const std::vector<double>& v, double tol) {
            return verify_identity(to_vector(u), to_vector(v), tol);
        },
        py::arg("u"), py::arg("v"), py::arg("tol") = 1e-9);
    m.def(
        "verify_exact",
        [](const std::vector<std::string>& u, const std::vector<std::string>& v) {
            const QSqrt3 r = verify_exact(to_rational(u), to_rational(v));
            return py::make_tuple(r.rat_part().to_string(), r.root_part().to_string());
        },
        "Residual in Q[sqrt 3] as (rational part, sqrt 3 part) strings; inputs like '3/4'.");

    m.def("area_heron", [](double a, double b, double c) { return area_heron(Triangle(a, b, c)); });
    m.def("triangle_defect", [](double a, double b, double c) { return triangle_defect(Triangle(a, b, c)); });
    m.def("triangle_to_vectors", [](double a, double b, double c) {
        const auto [u, v] = triangle_to_vectors(Triangle(a, b, c));
        return py::make_tuple(to_list(u), to_list(v));
    });

    m.def("shape_point", [](double a, double b, double c) {
        const ShapePoint p = shape_point(Triangle(a, b, c));
        return py::make_tuple(p.x, p.y);
    });
    m.def(
        "classify",
        [](double a, double b, double c, double tol) {
            return std::string(to_string(classify(Triangle(a, b, c), tol)));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("tol") = 1e-9);
    m.def("tangent_line_slope", &tangent_line_slope);
    m.def("tangent_point", [](double s) {
        const ShapePoint t = tangent_point(HalfDisk(s));
        return py::make_tuple(t.x, t.y);
    });
    m.def(
        "figure_csv",
        [](double s, std::size_t samples, std::size_t circles) {
            return figure_to_csv(emit_figure(s, {samples, circles}));
        },
        py::arg("s"), py::arg("samples") = 100, py::arg("circles") = 4);

    m.def(
        "curve_identity",
        [](const std::string& kind, const std::vector<double>& params, double t) {
            const CurveReport r = curve_report(builtin_curve(curve_kind(kind, params), t));
            py::dict d;
            d["curvature"] = r.curvature;
            d["rhs_bound"] = r.rhs_bound;
            d["defect"] = r.defect;
            d["defect_explicit"] = r.defect_explicit;
            d["residual"] = r.residual;
            d["bound_holds"] = r.bound_holds;
            return d;
        },
        py::arg("kind"), py::arg("params"), py::arg("t"));

    m.def(
        "sweep",
        [](std::size_t count, std::uint64_t seed, double tol, bool exact) {
            const SweepConfig cfg{seed, count, tol, 1};
            py::dict d;
            if (exact) {
                const ExactSweepSummary s = run_exact_sweep(cfg);
                d["count"] = s.count;
                d["nonzero"] = s.nonzero;
                d["pass"] = s.pass;
            } else {
                const SweepSummary s = run_sweep(cfg);
                d["count"] = s.count;
                d["max_residual"] = s.max_residual;
                d["max_oracle_gap"] = s.max_oracle_gap;
                d["max_negative_defect"] = s.max_negative_defect;
                d["pass"] = s.pass;
            }
            return d;
        },
        py::arg("count") = 1000, py::arg("seed") = 0, py::arg("tol") = 1e-9, py::arg("exact") = false);
}
