"""Exact scalar tower: pi^2 enclosure, surds, quotient roots, gap rationals."""

from fractions import Fraction as F

import pytest

from collapse_spectra.errors import ExactArithmeticError
from collapse_spectra.exactnum import (
    Exact,
    PiQuotient,
    QuadSurd,
    compare_values,
    format_exact,
    format_value,
    make_algebraic,
    parse_exact,
    parse_fraction,
    pi2_enclosure,
    pi2_times,
    positive_quadratic_root,
    rational_between,
    sqrt_exact,
)


def test_pi2_enclosure_brackets_reference_digits():
    lo, hi = pi2_enclosure(F(1, 10**18))
    assert lo < F("9.8696044010893587")
    assert hi > F("9.8696044010893586")
    assert hi - lo <= F(1, 10**18)


def test_exact_ordering_mixed():
    four_pi2 = pi2_times(4)
    assert four_pi2 > 39
    assert four_pi2 < 40
    assert pi2_times(1) > F(98, 10)
    assert pi2_times(1) < F(99, 10)
    assert Exact(F(2), F(-1, 6)) > 0  # 2 - pi^2/6 ~ 0.355
    assert Exact(F(1), F(-1, 6)) < 0


def test_exact_arithmetic_and_equality():
    x = Exact(F(3), F(2))
    y = x - Exact(F(1), F(2))
    assert y == 2 and y.is_rational()
    assert x * F(1, 2) == Exact(F(3, 2), F(1))
    assert (x / 2) * 2 == x
    assert hash(Exact(F(5))) == hash(F(5))
    with pytest.raises(ExactArithmeticError):
        _ = pi2_times(1) * pi2_times(1)
    with pytest.raises(ExactArithmeticError):
        _ = Exact(F(1)) / pi2_times(1)


@pytest.mark.parametrize("text", ["3/2", "-5", "pi2*4", "pi2", "-pi2", "2-pi2*1/6", "1/3+pi2*7/2"])
def test_format_parse_round_trip(text):
    value = parse_exact(text)
    assert parse_exact(format_exact(value)) == value


@pytest.mark.parametrize("bad", ["1.5", "1e3", "nan", "3/0", "pi", "2pi2"])
def test_parse_rejects_inexact(bad):
    with pytest.raises(ExactArithmeticError):
        parse_exact(bad)


def test_parse_fraction_strict():
    assert parse_fraction("-7/3") == F(-7, 3)
    with pytest.raises(ExactArithmeticError):
        parse_fraction("0.25")


def test_surd_canonicalization():
    assert make_algebraic(0, 1, 72) == QuadSurd(F(0), F(6), 2)
    assert make_algebraic(0, F(1, 112), 59584) == QuadSurd(F(0), F(1, 2), 19)
    assert sqrt_exact(F(9, 4)) == F(3, 2)
    assert sqrt_exact(F(2, 3)) == QuadSurd(F(0), F(1, 3), 6)
    assert make_algebraic(2, 0, 5) == F(2)


def test_surd_signs_and_order():
    root2 = sqrt_exact(2)
    assert root2 > F(14, 10)
    assert root2 < F(15, 10)
    assert (-root2 + 2) > 0
    assert (root2 - 2) < 0
    assert root2 * root2 == 2
    u = QuadSurd(F(-2), F(3, 2), 2)  # (3*sqrt(2) - 4)/2
    assert u * u * 2 + u * 8 - 1 == 0


def test_surd_division():
    u = QuadSurd(F(-2), F(3, 2), 2)
    assert (1 / u) * u == 1
    third = u / 3
    assert third * 3 == u


def test_pi_quotient_order():
    u = PiQuotient(F(2), pi2_times(12))  # 1/(6 pi^2) ~ 0.016886
    assert u.compare_fraction(F(1, 59)) < 0
    assert u.compare_fraction(F(1, 60)) > 0
    assert 0.0168 < float(u) < 0.0169


def test_positive_quadratic_root_branches():
    # crossing quadratic 12 u^2 + 48 u - 6 = 0 -> u = (3 sqrt 2 - 4)/2
    root = positive_quadratic_root(F(12), Exact(F(48)), F(-6))
    assert root == QuadSurd(F(-2), F(3, 2), 2)
    # linear rational: 12 u - 6 = 0
    assert positive_quadratic_root(F(0), Exact(F(12)), F(-6)) == F(1, 2)
    # linear with pi^2 coefficient
    root = positive_quadratic_root(F(0), pi2_times(12), F(-2))
    assert isinstance(root, PiQuotient) and root.num == 2
    # no positive root
    assert positive_quadratic_root(F(2), Exact(F(8)), F(0)) is None
    with pytest.raises(ExactArithmeticError):
        positive_quadratic_root(F(2), pi2_times(1), F(-1))


def test_compare_values_heterogeneous():
    surd = QuadSurd(F(-2), F(3, 2), 2)  # ~ 0.1213
    quot = PiQuotient(F(2), pi2_times(12))  # ~ 0.0169
    assert compare_values(quot, surd) < 0
    assert compare_values(surd, F(1, 8)) < 0
    assert compare_values(surd, F(12, 100)) > 0
    assert compare_values(pi2_times(1), F(10)) < 0


def test_rational_between():
    a = QuadSurd(F(-8), F(1, 2), 258)  # ~ 0.0312
    b = QuadSurd(F(-2), F(3, 2), 2)  # ~ 0.1213
    mid = rational_between(a, b)
    assert compare_values(a, mid) < 0 < compare_values(b, mid)
    mid2 = rational_between(F(0), PiQuotient(F(2), pi2_times(12)))
    assert 0 < mid2
    with pytest.raises(ValueError):
        rational_between(b, a)


def test_format_value():
    assert format_value(F(3, 2)) == "3/2"
    assert format_value(QuadSurd(F(2), F(1, 2), 19)) == "2+1/2*sqrt(19)"
    assert format_value(PiQuotient(F(2), pi2_times(12))) == "2/(pi2*12)"
