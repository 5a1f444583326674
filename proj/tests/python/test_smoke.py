import math

import pytest

import pytsol


def test_metric_helpers():
    assert pytsol.mink_dot((1, 2, 3), (4, 5, 6)) == pytest.approx(4 + 10 - 18)
    assert pytsol.mink_cross((1, 2, 2), (0, 1, 1)) == pytest.approx((0.0, -1.0, -1.0))
    a, b, c = (1, 2, 2), (0, 1, 1), (3, 0, 1)
    assert pytsol.triple(a, b, c) == pytest.approx(pytsol.mink_dot(pytsol.mink_cross(a, b), c))
    assert pytsol.causal_character((0, 0, 1)) == "timelike"
    assert pytsol.causal_character((1, 0, 1)) == "lightlike"


def test_catalog_listing():
    names = pytsol.list_families()
    assert len(names) == 13
    assert "IntroX" in names and "Thm4A2" in names
    schema = pytsol.family_schema("Gr1Cosh")
    assert "a" in schema["params"]


def test_residual_small_on_catalog_family():
    fam = pytsol.make_family("IntroX")
    rep = fam.residual_grid(25, 25)
    assert rep["max"] < 1e-9
    bad = fam.residual_grid(25, 25, v=(0, 1, 0))
    assert bad["max"] > 1e-3


def test_integrate_matches_closed_form():
    sol = pytsol.integrate("eq32", init=(0, 0), range=(0, 1), tol=1e-12)
    assert sol.stop == "reached-end"
    assert sol.eval(1.0) == pytest.approx(-math.log(math.cos(1.0)), abs=1e-8)


def test_classification_of_known_patch():
    rep = pytsol.make_family("IntroY").classify()
    assert rep["label"] == "Thm4-Candidate"
    vx, vy, vz = rep["velocity"]
    n = math.sqrt(vx * vx + vy * vy + vz * vz)
    assert abs(abs(vx) / n - 1) < 1e-6 and abs(vy / n) < 1e-6 and abs(vz / n) < 1e-6
    assert rep["max_residual"] < 1e-6


def test_error_translation():
    with pytest.raises(pytsol.TsolError):
        pytsol.make_family("NoSuchFamily")
