import math

import numpy as np
import pytest

import pycrofton as pc


def test_exact_gamma():
    g = pc.gamma(1)  # Gamma(1/2)
    assert g.rational == "1"
    assert g.pi_half_exponent == 1
    assert math.isclose(float(g), math.sqrt(math.pi))
    assert str(pc.gamma(10)) == "24"


def test_gamma_pole_raises():
    with pytest.raises(Exception):
        pc.gamma(0)


def test_lemmas_hold():
    assert pc.lemma61(3, 5, 4).holds()
    assert pc.lemma62(4).holds()
    assert pc.lemma63(8, 1, 4, 1).holds()
    assert pc.lemma64(5, 3, 2).holds()


def test_sphere_constants():
    assert math.isclose(float(pc.omega(3)), 4 * math.pi)
    assert math.isclose(float(pc.kappa_ball(2)), math.pi)


def test_cube_measures():
    cube = pc.Polytope.catalog("cube", 3)
    assert cube.face_counts() == [8, 12, 6, 1]
    assert math.isclose(cube.measure(3).value(), 1.0)
    assert math.isclose(cube.measure(2).value(), 6.0)
    assert math.isclose(cube.measure(0).value(), 4 * math.pi)


def test_boxed_measure_is_additive():
    sq = pc.Polytope.catalog("cube", 2)
    inf = float("inf")
    left = sq.measure(1, box=([-inf, -inf], [0.3, inf])).value()
    right = sq.measure(1, box=([0.3, -inf], [inf, inf])).value()
    assert math.isclose(left + right, sq.measure(1).value(), rel_tol=1e-12)


def test_hull_from_points():
    pts = np.array([[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1], [0.1, 0.1, 0.1]], dtype=float)
    p = pc.Polytope.build(pts)
    assert p.vertices.shape == (4, 3)
    assert math.isclose(p.measure(3).value(), 1 / 6)


def test_degenerate_body_rejected():
    pts = np.array([[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0]], dtype=float)
    with pytest.raises(pc.DegenerateError):
        pc.Polytope.build(pts)


def test_coefficient_table():
    t = pc.coefficients("cor_s3", n=3, k=2, j=1, s=3)
    assert t["formula"] == "cor_s3"
    assert any(e["value"] == "1/3" for e in t["entries"])
    assert pc.coefficients_csv("cor_i0", n=3, k=2, j=1, s=2).startswith("formula,")
    assert "thm_j_eq_k" in pc.formulas()


def test_precondition_error():
    with pytest.raises(pc.PreconditionError):
        pc.coefficients("thm_local_general", n=3, k=1, j=0, s=1)


def test_verify_small_run():
    cube = pc.Polytope.catalog("cube", 3)
    rep = pc.verify("thm_j_eq_k", cube, k=2, j=2, samples=20000, seed=3)
    assert rep["pass"]
    assert rep["samples"] == 20000
    again = pc.verify("thm_j_eq_k", cube, k=2, j=2, samples=20000, seed=3)
    assert again["lhs"] == rep["lhs"]


def test_identity_suite():
    rows = pc.identities("gamma")
    assert rows and all(r["pass"] for r in rows)
