import math

import pytest

import wkit

ROOT3 = math.sqrt(3.0)


def test_triangle_defect():
    assert wkit.triangle_defect(3, 4, 5) == pytest.approx(50 - 24 * ROOT3, rel=1e-14)
    assert abs(wkit.triangle_defect(1, 1, 1)) < 1e-14
    assert wkit.area_heron(3, 4, 5) == pytest.approx(6.0, rel=1e-15)


def test_invalid_triangle_raises():
    with pytest.raises(ValueError, match="triangle inequality violated"):
        wkit.triangle_defect(1, 1, 3)


def test_identity_report():
    r = wkit.verify_identity([1, 0], [0, 1])
    assert r.lhs == 4.0
    assert r.defect_explicit == pytest.approx(4 - 2 * ROOT3, rel=1e-14)
    assert abs(r.residual) < 1e-14
    assert not r.equality_case
    assert wkit.verify_identity([1, 0], [-0.5, ROOT3 / 2]).equality_case


def test_exact_residual_is_zero():
    assert wkit.verify_exact(["3", "4"], ["-2", "5"]) == ("0", "0")
    assert wkit.verify_exact(["1/3", "-7/2"], ["5/9", "11"]) == ("0", "0")


def test_shape_space():
    assert wkit.shape_point(3, 4, 5) == pytest.approx((25.0, 12.0))
    assert wkit.classify(1, 1, 1) == "equilateral_tangent"
    assert wkit.classify(2, 2, 3) == "isosceles_limit"
    assert wkit.classify(3, 4, 5) == "interior"
    assert wkit.tangent_point(2.0) == pytest.approx((1.5, ROOT3 / 2), abs=1e-12)
    assert abs(wkit.tangent_line_slope() - 0.5773502691896258) <= 1e-15
    csv = wkit.figure_csv(2.0, samples=10, circles=2)
    assert csv.startswith("series,x,y\n")
    assert "\nT,1.5," in csv


def test_curve_identity():
    r = wkit.curve_identity("circle", [2.0], 0.0)
    assert r["curvature"] == pytest.approx(0.5)
    assert r["defect"] == pytest.approx(2.5 - ROOT3, rel=1e-14)
    assert abs(r["residual"]) < 1e-12
    assert r["bound_holds"]


def test_sweep():
    s = wkit.sweep(count=500, seed=3)
    assert s["pass"] and s["max_residual"] < 1e-9
    assert wkit.sweep(count=50, exact=True)["nonzero"] == 0
