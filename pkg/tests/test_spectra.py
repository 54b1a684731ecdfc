"""Catalog spectra against enumeration oracles and structural invariants."""

import math
import random
from fractions import Fraction as F

import pytest

import oracles
from collapse_spectra.errors import SpectrumExhaustedError
from collapse_spectra.exactnum import Exact, pi2_times
from collapse_spectra.spectra import (
    ComplexProjective,
    EigenvalueEntry,
    Explicit,
    FlatTorus,
    QuaternionicProjective,
    SO3,
    Sphere,
    counting_below,
    cp_multiplicity,
    eigenvalues_below,
    hp_multiplicity,
    spectrum_of,
    sphere_multiplicity,
)

UNIT_GRAM = ((F(1), F(0)), (F(0), F(1)))


def entries(descriptor, bound, include_zero=True):
    return [
        (e.value, e.multiplicity)
        for e in spectrum_of(descriptor).entries_up_to(bound, include_zero=include_zero)
    ]


# -- frozen catalog values ---------------------------------------------------


def test_round_two_sphere_first_entries():
    assert entries(Sphere(2), 7) == [(Exact(F(0)), 1), (Exact(F(2)), 3), (Exact(F(6)), 5)]


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_sphere_constant_eigenfunction(n):
    first = spectrum_of(Sphere(n, F(3, 2))).entry(0)
    assert first.value == 0 and first.multiplicity == 1


def test_eigenvalues_below_strictness():
    stream = spectrum_of(Sphere(2))
    assert [(e.value, e.multiplicity) for e in eigenvalues_below(stream, 7)] == [
        (Exact(F(2)), 3),
        (Exact(F(6)), 5),
    ]
    assert eigenvalues_below(spectrum_of(Sphere(2)), 6, strict=True)[-1].value == 2
    assert eigenvalues_below(spectrum_of(Sphere(2)), 6, strict=False)[-1].value == 6
    assert eigenvalues_below(spectrum_of(Sphere(2)), 0) == []


def test_counting_below_examples():
    assert counting_below(spectrum_of(Sphere(2)), 7) == 8
    assert counting_below(spectrum_of(Sphere(3)), F(7, 2)) == 4
    assert counting_below(spectrum_of(Sphere(2)), F(1, 10**6)) == 0


def test_flat_torus_counting_example():
    stream = spectrum_of(FlatTorus(UNIT_GRAM))
    got = [(e.value, e.multiplicity) for e in eigenvalues_below(stream, pi2_times(20))]
    assert got == [(pi2_times(4), 4), (pi2_times(8), 4), (pi2_times(16), 4)]


def test_cp1_matches_half_radius_two_sphere():
    cp = spectrum_of(ComplexProjective(1))
    sphere = spectrum_of(Sphere(2, F(1, 2)))
    for i in range(10):
        a, b = cp.entry(i), sphere.entry(i)
        assert a.value == b.value and a.multiplicity == b.multiplicity


def test_hp1_matches_half_radius_four_sphere():
    hp = spectrum_of(QuaternionicProjective(1))
    sphere = spectrum_of(Sphere(4, F(1, 2)))
    for i in range(10):
        a, b = hp.entry(i), sphere.entry(i)
        assert a.value == b.value and a.multiplicity == b.multiplicity


def test_so3_is_even_part_of_three_sphere():
    so3 = spectrum_of(SO3())
    for i in range(8):
        entry = so3.entry(i)
        k = 2 * i
        assert entry.value == k * (k + 2)
        assert entry.multiplicity == (k + 1) ** 2


# -- oracle equivalence -------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_sphere_multiplicities_against_enumeration(n):
    for k in range(11):
        assert sphere_multiplicity(n, k) == oracles.sphere_harmonic_dim(n, k)


@pytest.mark.parametrize("n", [1, 2])
def test_cp_multiplicities_against_enumeration(n):
    for k in range(7):
        assert cp_multiplicity(n, k) == oracles.circle_invariant_harmonic_dim(n, k)


@pytest.mark.parametrize("n,k", [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3)])
def test_cp_multiplicities_against_laplacian_rank(n, k):
    assert cp_multiplicity(n, k) == oracles.circle_invariant_harmonic_dim_by_rank(n, k)


@pytest.mark.parametrize("n", [1, 2])
def test_hp_multiplicities_against_enumeration(n):
    for k in range(7):
        assert hp_multiplicity(n, k) == oracles.sp1_invariant_harmonic_dim(n, k)


@pytest.mark.parametrize("n", [1, 2])
def test_sp1_weight_bookkeeping(n):
    for degree in range(0, 7):
        assert oracles.sp1_weight_bookkeeping_consistent(n, degree)


def test_flat_torus_counts_against_sweep_oracle():
    rng = random.Random(20240817)
    gram_choices = [
        UNIT_GRAM,
        ((F(2), F(0)), (F(0), F(1))),
        ((F(1), F(1, 2)), (F(1, 2), F(1))),
    ]
    for trial in range(20):
        gram = gram_choices[trial % len(gram_choices)]
        stream = spectrum_of(FlatTorus(gram))
        if trial % 2 == 0:
            coeff = F(rng.randint(1, 400), rng.randint(1, 4))
            bound = pi2_times(coeff)
            expected = oracles.torus_counting_oracle(gram, F(0), coeff, strict=True)
        else:
            bound = F(rng.randint(10, 900), rng.randint(1, 7))
            expected = oracles.torus_counting_oracle(gram, bound, F(0), strict=True)
        assert counting_below(stream, bound) == expected


# -- structural invariants ----------------------------------------------------

CATALOG = [
    Sphere(1),
    Sphere(2),
    Sphere(3, F(2)),
    Sphere(4, F(1, 2)),
    FlatTorus(UNIT_GRAM),
    FlatTorus(((F(1), F(1, 2)), (F(1, 2), F(2)))),
    ComplexProjective(1),
    ComplexProjective(2),
    QuaternionicProjective(1),
    QuaternionicProjective(2),
    SO3(),
    SO3(F(1, 2)),
]


@pytest.mark.parametrize("descriptor", CATALOG, ids=str)
def test_streams_strictly_increasing(descriptor):
    stream = spectrum_of(descriptor)
    values = []
    for i in range(50):
        entry = stream.entry(i)
        assert entry.multiplicity >= 1
        values.append(entry.value)
    assert all((b - a).sign() > 0 for a, b in zip(values, values[1:]))
    assert values[0] == 0 and stream.entry(0).multiplicity == 1


@pytest.mark.parametrize(
    "quotient,total",
    [
        (ComplexProjective(1), Sphere(3)),
        (ComplexProjective(2), Sphere(5)),
        (QuaternionicProjective(1), Sphere(7)),
        (QuaternionicProjective(2), Sphere(11)),
        (SO3(), Sphere(3)),
    ],
    ids=str,
)
def test_quotient_spectra_included_in_sphere(quotient, total):
    q = spectrum_of(quotient)
    top = q.entry(29).value
    sphere_values = {
        e.value for e in spectrum_of(total).entries_up_to(top, strict=False, include_zero=True)
    }
    for i in range(30):
        assert q.entry(i).value in sphere_values


@pytest.mark.parametrize("n", [2, 3, 4])
def test_weyl_growth_sanity(n):
    ball = math.pi ** (n / 2) / math.gamma(n / 2 + 1)
    volume = 2 * math.pi ** ((n + 1) / 2) / math.gamma((n + 1) / 2)
    weyl = ball * volume / (2 * math.pi) ** n
    stream = spectrum_of(Sphere(n))
    for bound in (100, 200, 400):
        ratio = counting_below(stream, bound) / (weyl * bound ** (n / 2))
        assert 0.5 <= ratio <= 2.0


def test_sphere_scale_covariance():
    rng = random.Random(7)
    for _ in range(5):
        r = F(rng.randint(1, 9), rng.randint(1, 9))
        n = rng.randint(1, 4)
        scaled = spectrum_of(Sphere(n, r))
        unit = spectrum_of(Sphere(n))
        for i in range(20):
            a, b = scaled.entry(i), unit.entry(i)
            assert a.value * (r * r) == b.value
            assert a.multiplicity == b.multiplicity


# -- explicit streams ----------------------------------------------------------


def explicit_stream():
    return Explicit(
        entries=(
            EigenvalueEntry(Exact(F(0)), 1),
            EigenvalueEntry(Exact(F(3)), 2),
            EigenvalueEntry(Exact(F(5)), 4),
        ),
        valid_below=Exact(F(10)),
    )


def test_explicit_stream_within_bound():
    stream = spectrum_of(explicit_stream())
    assert counting_below(stream, 10) == 6
    assert counting_below(spectrum_of(explicit_stream()), 4) == 2


def test_explicit_stream_exhaustion():
    stream = spectrum_of(explicit_stream())
    with pytest.raises(SpectrumExhaustedError) as err:
        eigenvalues_below(stream, 11)
    assert "10" in str(err.value)


def test_explicit_stream_validation():
    with pytest.raises(ValueError):
        Explicit(entries=(EigenvalueEntry(Exact(F(1)), 1),), valid_below=Exact(F(5)))
    with pytest.raises(ValueError):
        Explicit(
            entries=(
                EigenvalueEntry(Exact(F(0)), 1),
                EigenvalueEntry(Exact(F(0)), 2),
            ),
            valid_below=Exact(F(5)),
        )


def test_descriptor_validation():
    with pytest.raises(ValueError):
        Sphere(0)
    with pytest.raises(ValueError):
        Sphere(2, F(-1))
    with pytest.raises(ValueError):
        FlatTorus(((F(1), F(2)), (F(2), F(1))))  # not positive definite
    with pytest.raises(ValueError):
        FlatTorus(((F(1), F(2)), (F(1), F(1))))  # not symmetric
