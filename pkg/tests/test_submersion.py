"""Deformed scalar curvature, calibration and positivity roots."""

import random
from dataclasses import replace
from fractions import Fraction as F

import pytest

from collapse_spectra.errors import InconsistentModelError
from collapse_spectra.exactnum import QuadSurd, make_algebraic
from collapse_spectra.spectra import FlatTorus, Sphere
from collapse_spectra.submersion import (
    ALWAYS_POSITIVE,
    NEVER_POSITIVE,
    SubmersionModel,
    calibrate_a_norm,
    hopf_complex_model,
    hopf_octonionic_model,
    hopf_quaternionic_model,
    scal_at_usq,
    scal_positivity_root,
    scal_t,
)

UNIT_GRAM = ((F(1), F(0)), (F(0), F(1)))


def product_model(**overrides):
    """Round two-sphere times flat two-torus."""
    fields = dict(
        name="s2-x-t2",
        fiber_dim=2,
        base_dim=2,
        scal_fiber=F(2),
        scal_base=F(0),
        a_norm_sq=F(0),
        fiber_spectrum=Sphere(2),
        base_spectrum=FlatTorus(UNIT_GRAM),
        is_product=True,
        is_homogeneous_fibration=True,
    )
    fields.update(overrides)
    return SubmersionModel(**fields)


def test_scal_at_one_recovers_round_spheres():
    assert scal_t(hopf_complex_model(1), F(1)) == 6
    assert scal_t(hopf_quaternionic_model(1), F(1)) == 42
    assert scal_t(hopf_octonionic_model(), F(1)) == 210


def test_scal_homothety_scaling():
    model = hopf_quaternionic_model(1)
    rng = random.Random(3)
    for _ in range(10):
        alpha = F(rng.randint(1, 12), rng.randint(1, 12))
        t = F(rng.randint(1, 30), rng.randint(1, 30))
        rescaled = replace(
            model,
            scal_fiber=model.scal_fiber / alpha,
            scal_base=model.scal_base / alpha,
            a_norm_sq=model.a_norm_sq / alpha,
        )
        assert scal_t(rescaled, t) == scal_t(model, t) / alpha


@pytest.mark.parametrize(
    "scal_fiber,scal_base,total,expected",
    [(0, 8, 6, 2), (6, 48, 42, 12), (42, 224, 210, 56)],
)
def test_calibration_examples(scal_fiber, scal_base, total, expected):
    assert calibrate_a_norm(F(scal_fiber), F(scal_base), F(total)) == expected


def test_calibration_rejects_negative_norm():
    with pytest.raises(InconsistentModelError):
        calibrate_a_norm(F(0), F(1), F(2))


def test_calibration_round_trip():
    rng = random.Random(11)
    for _ in range(20):
        scal_fiber = F(rng.randint(0, 40), rng.randint(1, 4))
        scal_base = F(rng.randint(0, 60), rng.randint(1, 4))
        total = scal_fiber + scal_base - F(rng.randint(0, 30), rng.randint(1, 4))
        a_norm = calibrate_a_norm(scal_fiber, scal_base, total)
        assert scal_fiber / 1 + scal_base - a_norm == total


def test_scal_strictly_decreasing_when_fiber_curved():
    model = hopf_quaternionic_model(1)
    rng = random.Random(5)
    for _ in range(25):
        t1 = F(rng.randint(1, 200), 100)
        t2 = t1 + F(rng.randint(1, 50), 100)
        assert scal_t(model, t1) > scal_t(model, t2)


def test_scal_divergence_witness():
    model = hopf_quaternionic_model(1)
    a, b, c = model.scal_fiber, model.scal_base, model.a_norm_sq
    for big in (10, 100, 10**4, 10**8):
        u = a / (big + abs(b) + c + 1)
        assert scal_at_usq(model, u) > big


# -- positivity roots ----------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 6))
def test_complex_family_root_is_rational(n):
    result = scal_positivity_root(hopf_complex_model(n))
    assert result.kind == "root"
    assert result.u_max == F(2 * n + 2)


@pytest.mark.parametrize("n", range(1, 6))
def test_quaternionic_family_root_matches_table(n):
    result = scal_positivity_root(hopf_quaternionic_model(n))
    table = make_algebraic(
        F(2 * n + 4, 3), F(1, 6 * n), 18 * n + 16 * (n * n + 2 * n) ** 2
    )
    assert result.u_max == table
    assert abs(result.s_max_float - float(table) ** 0.5) < 1e-12


def test_octonionic_root_matches_table():
    result = scal_positivity_root(hopf_octonionic_model())
    assert result.u_max == QuadSurd(F(2), F(1, 2), 19)
    assert abs(result.s_max_float - (2 + 19**0.5 / 2) ** 0.5) < 1e-12


def test_hopf_families_positive_at_round_scale():
    for model in (hopf_complex_model(2), hopf_quaternionic_model(3), hopf_octonionic_model()):
        result = scal_positivity_root(model)
        assert result.s_max_float > 1
        m = model.total_dim
        assert scal_t(model, F(1)) == m * (m - 1)


def test_positivity_sentinels():
    assert scal_positivity_root(product_model()).kind == ALWAYS_POSITIVE
    flat = product_model(
        name="torus-fibration",
        scal_fiber=F(0),
        fiber_spectrum=FlatTorus(UNIT_GRAM),
    )
    assert scal_positivity_root(flat).kind == NEVER_POSITIVE
    sinking = product_model(name="negative-base", scal_base=F(-5), is_product=True)
    root = scal_positivity_root(sinking)
    assert root.kind == "root" and root.u_max == F(2, 5)


def test_model_invariants():
    with pytest.raises(InconsistentModelError):
        product_model(a_norm_sq=F(1))  # product forces zero integrability norm
    with pytest.raises(InconsistentModelError):
        SubmersionModel(
            name="too-small",
            fiber_dim=1,
            base_dim=1,
            scal_fiber=F(0),
            scal_base=F(0),
            a_norm_sq=F(0),
            fiber_spectrum=Sphere(1),
            base_spectrum=Sphere(1),
        )
