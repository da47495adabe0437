import math

import pytest

import radii


def test_parabolic_h2_value():
    res = radii.compute_radius("parabolic", "h2", 1, 1, 2)
    assert abs(res["radius"] - 0.0990195) < 1e-6
    assert res["flagged"] and not res["sharp_claimed"]


def test_closed_form_anchor():
    res = radii.compute_radius("starlike", "h3", 0, None, 0, alpha=0.0)
    assert abs(res["radius"] - math.sqrt(math.sqrt(17) - 4)) < 1e-12
    assert radii.theorem_coefficients("starlike", "h3", 0, None, 0, alpha=0.0) == pytest.approx(
        [-1, 0, 7, 0, 9, 0, 1], abs=1e-15
    )


def test_regions():
    names = radii.region_names()
    assert len(names) == 10 and names[0] == "starlike"
    assert radii.contains("lemniscate", 1 + 0j)
    assert not radii.contains("parabolic", 0j)
    assert radii.delta("sine") == pytest.approx(math.sin(1))
    assert radii.inclusion_radius("parabolic", 1.0) == 0.5
    assert radii.boundary_point("sine", 0.0) == pytest.approx(1 + math.sin(1))


def test_bounds():
    assert radii.mccarty_upper(1, 0, 0.5) == pytest.approx(4 / 3)
    low = radii.mccarty_lower(1, 0, 0.5)
    assert low["branch"] == "small" and low["value"] == pytest.approx(-4 / 3)
    assert radii.lemma2_condition(0, 0.1) > 0
    assert radii.disc_bound("h3", 0, None, 0, 0.5) == pytest.approx(32 / 15)


def test_sharpness_residual():
    rho = radii.compute_radius("sine", "h1", 1, 1, 2)["radius"]
    assert radii.sharpness_residual("sine", "h1", 1, 1, 2, rho) < 1e-8


def test_verification_suites():
    assert radii.verify_lemmas(1000, 42)["passed"]
    assert not radii.verify_lemmas(10000, 7, scale=0.5)["passed"]
    cross = radii.verify_crosscheck(5, 1)
    assert cross["passed"] and cross["flagged"]
    tight = radii.verify_tightness("parabolic", "h2", 1, 1, 2)
    assert tight["passed"] and len(tight["skipped"]) == 1


def test_errors_are_value_errors():
    with pytest.raises(ValueError, match=r"n=\|3c-q\|"):
        radii.compute_radius("starlike", "h2", 0, 1, 0, alpha=0.0)
    with pytest.raises(radii.RadiiError):
        radii.compute_radius("starlike", "h3", 0, None, 0)
