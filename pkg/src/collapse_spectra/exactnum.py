"""Exact scalars for spectral crossing arithmetic.

Every comparison that decides a degeneracy, a Morse count or a certificate
in this package is a strict inequality between numbers of one of three
shapes:

* ``r + s*pi^2``        rational r, s (flat-torus eigenvalues carry pi^2),
* ``p + q*sqrt(d)``     quadratic surds (crossing roots, s_max values),
* ``w / (r + s*pi^2)``  crossing roots of linear threshold equations over
                        flat bases.

Floats never decide anything.  Rational parts compare exactly, sqrt(d) by
squaring, and pi^2 through a certified rational enclosure (Machin's
arctangent series with the alternating-series remainder as an explicit
error bound) that is refined until the comparison separates.  A rational
can never equal pi^2 or a surd with square-free radicand >= 2, so the
refinement loops terminate.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Union

from .errors import ExactArithmeticError

Rational = Union[int, Fraction]

PI2_FLOAT = math.pi * math.pi


def _bracket_atan_inv(x: int, terms: int) -> tuple[Fraction, Fraction]:
    """Rational lower/upper bounds for arctan(1/x), x >= 2."""
    total = Fraction(0)
    sign = 1
    for k in range(terms):
        total += Fraction(sign, (2 * k + 1) * x ** (2 * k + 1))
        sign = -sign
    tail = Fraction(1, (2 * terms + 1) * x ** (2 * terms + 1))
    # Alternating series with strictly decreasing terms: the truncation
    # error has the sign of the first omitted term and smaller magnitude.
    if sign > 0:
        return total, total + tail
    return total - tail, total


class _Pi2Enclosure:
    """Shrinking rational interval around pi^2, refined on demand."""

    def __init__(self) -> None:
        self._terms = 8
        self._recompute()

    def _recompute(self) -> None:
        a_lo, a_hi = _bracket_atan_inv(5, self._terms)
        b_lo, b_hi = _bracket_atan_inv(239, max(2, self._terms // 2))
        pi_lo = 16 * a_lo - 4 * b_hi
        pi_hi = 16 * a_hi - 4 * b_lo
        self.lo = pi_lo * pi_lo
        self.hi = pi_hi * pi_hi

    def refine(self) -> None:
        self._terms *= 2
        self._recompute()

    def narrow_to(self, width: Fraction) -> tuple[Fraction, Fraction]:
        while self.hi - self.lo > width:
            self.refine()
        return self.lo, self.hi

    def compare(self, q: Fraction) -> int:
        """Sign of pi^2 - q for rational q."""
        for _ in range(64):
            if q < self.lo:
                return 1
            if q > self.hi:
                return -1
            self.refine()
        raise ExactArithmeticError(
            "pi^2 enclosure failed to separate a rational operand"
        )


_PI2 = _Pi2Enclosure()


def pi2_enclosure(width: Fraction | None = None) -> tuple[Fraction, Fraction]:
    """Current (or width-constrained) certified rational bounds for pi^2."""
    if width is not None:
        return _PI2.narrow_to(Fraction(width))
    return _PI2.lo, _PI2.hi


def _fmt_frac(x: Fraction) -> str:
    return str(x)


_FRACTION_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def parse_fraction(text: str) -> Fraction:
    """Parse 'p' or 'p/q' exactly; anything else (decimals, floats) is rejected."""
    text = text.strip()
    if not _FRACTION_RE.match(text):
        raise ExactArithmeticError(f"not an exact rational: {text!r}")
    return Fraction(text)


@dataclass(frozen=True)
class Exact:
    """Exact scalar rat + pi2 * pi^2 with rational coefficients."""

    rat: Fraction = Fraction(0)
    pi2: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "rat", Fraction(self.rat))
        object.__setattr__(self, "pi2", Fraction(self.pi2))

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.rat == 0 and self.pi2 == 0

    def is_rational(self) -> bool:
        return self.pi2 == 0

    def sign(self) -> int:
        if self.pi2 == 0:
            return (self.rat > 0) - (self.rat < 0)
        if self.rat == 0:
            return 1 if self.pi2 > 0 else -1
        if self.rat > 0 and self.pi2 > 0:
            return 1
        if self.rat < 0 and self.pi2 < 0:
            return -1
        # Opposite signs: value sign = sign(pi2) * sign(pi^2 - (-rat/pi2)).
        q = -self.rat / self.pi2
        factor = 1 if self.pi2 > 0 else -1
        return factor * _PI2.compare(q)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = as_exact(other)
        return Exact(self.rat + other.rat, self.pi2 + other.pi2)

    __radd__ = __add__

    def __sub__(self, other):
        other = as_exact(other)
        return Exact(self.rat - other.rat, self.pi2 - other.pi2)

    def __rsub__(self, other):
        return as_exact(other) - self

    def __neg__(self):
        return Exact(-self.rat, -self.pi2)

    def __mul__(self, other):
        other = as_exact(other)
        if self.pi2 != 0 and other.pi2 != 0:
            raise ExactArithmeticError(
                "product would leave the rational + rational*pi^2 lattice"
            )
        if other.pi2 == 0:
            return Exact(self.rat * other.rat, self.pi2 * other.rat)
        return Exact(self.rat * other.rat, self.rat * other.pi2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_exact(other)
        if other.pi2 != 0:
            raise ExactArithmeticError("division by a pi^2-carrying scalar")
        if other.rat == 0:
            raise ZeroDivisionError("exact division by zero")
        return Exact(self.rat / other.rat, self.pi2 / other.rat)

    # -- order --------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.pi2 == 0 and self.rat == other
        if isinstance(other, Exact):
            return self.rat == other.rat and self.pi2 == other.pi2
        return NotImplemented

    def __hash__(self):
        if self.pi2 == 0:
            return hash(self.rat)
        return hash((self.rat, self.pi2))

    def __lt__(self, other):
        return (self - as_exact(other)).sign() < 0

    def __le__(self, other):
        return (self - as_exact(other)).sign() <= 0

    def __gt__(self, other):
        return (self - as_exact(other)).sign() > 0

    def __ge__(self, other):
        return (self - as_exact(other)).sign() >= 0

    # -- conversions --------------------------------------------------------

    def __float__(self) -> float:
        return float(self.rat) + float(self.pi2) * PI2_FLOAT

    def __str__(self) -> str:
        return format_exact(self)

    def __repr__(self) -> str:
        return f"Exact({format_exact(self)!r})"

    def enclosure(self, width: Fraction) -> tuple[Fraction, Fraction]:
        if self.pi2 == 0:
            return self.rat, self.rat
        lo, hi = _PI2.narrow_to(width / abs(self.pi2))
        if self.pi2 > 0:
            return self.rat + self.pi2 * lo, self.rat + self.pi2 * hi
        return self.rat + self.pi2 * hi, self.rat + self.pi2 * lo


def as_exact(x) -> Exact:
    if isinstance(x, Exact):
        return x
    if isinstance(x, (int, Fraction)):
        return Exact(Fraction(x), Fraction(0))
    raise TypeError(f"cannot interpret {type(x).__name__} as an exact scalar")


def pi2_times(coeff: Rational) -> Exact:
    return Exact(Fraction(0), Fraction(coeff))


def format_exact(x: Exact) -> str:
    """Serialize, e.g. '3/2', 'pi2*4', '2-pi2*1/6'."""
    if x.pi2 == 0:
        return _fmt_frac(x.rat)
    mag = abs(x.pi2)
    pi_part = "pi2" if mag == 1 else f"pi2*{_fmt_frac(mag)}"
    if x.rat == 0:
        return pi_part if x.pi2 > 0 else "-" + pi_part
    joiner = "+" if x.pi2 > 0 else "-"
    return f"{_fmt_frac(x.rat)}{joiner}{pi_part}"


def parse_exact(text: str) -> Exact:
    """Inverse of :func:`format_exact` (also accepts plain rationals)."""
    s = text.strip().replace(" ", "")
    if "pi2" not in s:
        return Exact(parse_fraction(s), Fraction(0))
    # Split a trailing pi2 term off an optional leading rational.
    m = re.match(r"^(?P<rat>[+-]?\d+(?:/\d+)?)?(?P<sign>[+-]?)pi2(\*(?P<mul>[+-]?\d+(?:/\d+)?))?$", s)
    if not m:
        raise ExactArithmeticError(f"not an exact scalar: {text!r}")
    rat = parse_fraction(m.group("rat")) if m.group("rat") else Fraction(0)
    coeff = parse_fraction(m.group("mul")) if m.group("mul") else Fraction(1)
    if m.group("sign") == "-":
        coeff = -coeff
    elif m.group("sign") == "" and m.group("rat"):
        raise ExactArithmeticError(f"not an exact scalar: {text!r}")
    return Exact(rat, coeff)


# ---------------------------------------------------------------------------
# Quadratic surds
# ---------------------------------------------------------------------------


def _square_free(n: int) -> tuple[int, int]:
    """n = s^2 * d with d square-free; returns (s, d)."""
    if n == 0:
        return 0, 1
    root = isqrt(n)
    if root * root == n:
        return root, 1
    s, d = 1, n
    f = 2
    while f * f <= d:
        ff = f * f
        while d % ff == 0:
            d //= ff
            s *= f
        f += 1 if f == 2 else 2
    return s, d


@dataclass(frozen=True)
class QuadSurd:
    """base + coeff*sqrt(radicand), coeff != 0, radicand square-free >= 2."""

    base: Fraction
    coeff: Fraction
    radicand: int

    def sign(self) -> int:
        p, q, d = self.base, self.coeff, self.radicand
        if p == 0:
            return 1 if q > 0 else -1
        if p > 0 and q > 0:
            return 1
        if p < 0 and q < 0:
            return -1
        lhs, rhs = p * p, q * q * d
        if lhs == rhs:  # p = -q*sqrt(d) would make sqrt(d) rational
            raise ExactArithmeticError("degenerate surd comparison")
        if p > 0:
            return 1 if lhs > rhs else -1
        return 1 if rhs > lhs else -1

    # -- arithmetic (same radicand, or rational operands) --------------------

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        if isinstance(other, QuadSurd):
            if other.radicand != self.radicand:
                raise ExactArithmeticError(
                    "arithmetic across distinct radicands is not supported"
                )
            return other.base, other.coeff
        raise TypeError(f"unsupported operand {type(other).__name__}")

    def __add__(self, other):
        ob, oc = self._coerce(other)
        return _surd_or_fraction(self.base + ob, self.coeff + oc, self.radicand)

    __radd__ = __add__

    def __sub__(self, other):
        ob, oc = self._coerce(other)
        return _surd_or_fraction(self.base - ob, self.coeff - oc, self.radicand)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return QuadSurd(-self.base, -self.coeff, self.radicand)

    def __mul__(self, other):
        ob, oc = self._coerce(other)
        return _surd_or_fraction(
            self.base * ob + self.coeff * oc * self.radicand,
            self.base * oc + self.coeff * ob,
            self.radicand,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError
            return QuadSurd(self.base / other, self.coeff / other, self.radicand)
        ob, oc = self._coerce(other)
        norm = ob * ob - oc * oc * self.radicand
        if norm == 0:
            raise ZeroDivisionError("division by zero surd")
        conj = _surd_or_fraction(ob, -oc, self.radicand)
        return (self * conj) / norm

    def __rtruediv__(self, other):
        norm = self.base * self.base - self.coeff * self.coeff * self.radicand
        if norm == 0:
            raise ZeroDivisionError
        conj = QuadSurd(self.base, -self.coeff, self.radicand)
        return (conj * other) / norm

    # -- order ---------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return False  # coeff != 0 and radicand irrational
        if isinstance(other, QuadSurd):
            return (
                self.base == other.base
                and self.coeff == other.coeff
                and self.radicand == other.radicand
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.base, self.coeff, self.radicand))

    def _diff_sign(self, other) -> int:
        diff = self - other
        if isinstance(diff, Fraction):
            return (diff > 0) - (diff < 0)
        return diff.sign()

    def __lt__(self, other):
        return self._diff_sign(other) < 0

    def __le__(self, other):
        return self._diff_sign(other) <= 0

    def __gt__(self, other):
        return self._diff_sign(other) > 0

    def __ge__(self, other):
        return self._diff_sign(other) >= 0

    # -- conversions ----------------------------------------------------------

    def __float__(self) -> float:
        return float(self.base) + float(self.coeff) * math.sqrt(self.radicand)

    def __str__(self) -> str:
        if self.coeff == 1:
            tail = f"sqrt({self.radicand})"
        elif self.coeff == -1:
            tail = f"-sqrt({self.radicand})"
        else:
            tail = f"{_fmt_frac(self.coeff)}*sqrt({self.radicand})"
        if self.base == 0:
            return tail
        joiner = "+" if self.coeff > 0 else ""
        return f"{_fmt_frac(self.base)}{joiner}{tail}"

    def __repr__(self) -> str:
        return f"QuadSurd({self})"

    def enclosure(self, width: Fraction) -> tuple[Fraction, Fraction]:
        if self.coeff == 0:
            return self.base, self.base
        lo, hi = _sqrt_enclosure(self.radicand, width / abs(self.coeff))
        if self.coeff > 0:
            return self.base + self.coeff * lo, self.base + self.coeff * hi
        return self.base + self.coeff * hi, self.base + self.coeff * lo


def _surd_or_fraction(base: Fraction, coeff: Fraction, radicand: int):
    if coeff == 0:
        return base
    if radicand == 1:
        return base + coeff
    return QuadSurd(base, coeff, radicand)


def make_algebraic(base: Rational, coeff: Rational, radicand: Rational):
    """base + coeff*sqrt(radicand) in canonical form (Fraction or QuadSurd)."""
    base, coeff, radicand = Fraction(base), Fraction(coeff), Fraction(radicand)
    if radicand < 0:
        raise ExactArithmeticError("negative radicand")
    if coeff == 0 or radicand == 0:
        return base
    whole = radicand.numerator * radicand.denominator
    s, d = _square_free(whole)
    eff = coeff * Fraction(s, radicand.denominator)
    if d == 1:
        return base + eff
    return QuadSurd(base, eff, d)


def sqrt_exact(x: Rational):
    """Exact square root of a non-negative rational (Fraction or QuadSurd)."""
    return make_algebraic(0, 1, x)


_SQRT_CACHE: dict[int, tuple[Fraction, Fraction]] = {}


def _sqrt_enclosure(d: int, width: Fraction) -> tuple[Fraction, Fraction]:
    lo, hi = _SQRT_CACHE.get(d, (Fraction(isqrt(d)), Fraction(isqrt(d) + 1)))
    while hi - lo > width:
        mid = (lo + hi) / 2
        if mid * mid <= d:
            lo = mid
        else:
            hi = mid
    _SQRT_CACHE[d] = (lo, hi)
    return lo, hi


# ---------------------------------------------------------------------------
# Rationals over pi^2 denominators
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PiQuotient:
    """num / den with rational num != 0 and positive den = r + s*pi^2, s != 0."""

    num: Fraction
    den: Exact

    def __post_init__(self):
        if self.den.pi2 == 0:
            raise ExactArithmeticError("PiQuotient denominator must carry pi^2")
        if self.den.sign() < 0:
            object.__setattr__(self, "num", -self.num)
            object.__setattr__(self, "den", -self.den)

    def sign(self) -> int:
        return (self.num > 0) - (self.num < 0)

    def compare_fraction(self, w: Rational) -> int:
        """Sign of self - w."""
        return (as_exact(self.num) - self.den * Fraction(w)).sign()

    def __float__(self) -> float:
        return float(self.num) / float(self.den)

    def __str__(self) -> str:
        return f"{_fmt_frac(self.num)}/({format_exact(self.den)})"

    def __repr__(self) -> str:
        return f"PiQuotient({self})"

    def enclosure(self, width: Fraction) -> tuple[Fraction, Fraction]:
        probe = width
        for _ in range(200):
            dlo, dhi = self.den.enclosure(probe)
            if dlo <= 0:
                probe /= 4
                continue
            if self.num >= 0:
                lo, hi = self.num / dhi, self.num / dlo
            else:
                lo, hi = self.num / dlo, self.num / dhi
            if hi - lo <= width:
                return lo, hi
            probe /= 4
        raise ExactArithmeticError("PiQuotient enclosure did not converge")


# ---------------------------------------------------------------------------
# Generic comparisons, enclosures and gap rationals
# ---------------------------------------------------------------------------

ExactValue = Union[Fraction, int, Exact, QuadSurd, PiQuotient]


def value_enclosure(x: ExactValue, width: Fraction) -> tuple[Fraction, Fraction]:
    if isinstance(x, (int, Fraction)):
        f = Fraction(x)
        return f, f
    return x.enclosure(width)


def value_float(x: ExactValue) -> float:
    if isinstance(x, (int, Fraction)):
        return float(x)
    return float(x)


def compare_values(x: ExactValue, y: ExactValue) -> int:
    """Sign of x - y for any mix of supported exact kinds."""
    if isinstance(x, int):
        x = Fraction(x)
    if isinstance(y, int):
        y = Fraction(y)
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        return (x > y) - (x < y)
    if isinstance(x, Exact) and isinstance(y, (Fraction, Exact)):
        return (x - y).sign()
    if isinstance(y, Exact) and isinstance(x, Fraction):
        return -(y - x).sign()
    if isinstance(x, QuadSurd) and isinstance(y, (Fraction, QuadSurd)):
        if not isinstance(y, QuadSurd) or y.radicand == x.radicand:
            return x._diff_sign(y)
    if isinstance(y, QuadSurd) and isinstance(x, Fraction):
        return -y._diff_sign(x)
    if isinstance(x, PiQuotient) and isinstance(y, Fraction):
        return x.compare_fraction(y)
    if isinstance(y, PiQuotient) and isinstance(x, Fraction):
        return -y.compare_fraction(x)
    # Heterogeneous kinds: separate certified enclosures.  Values of
    # different kinds here are never equal (rational vs quadratic
    # irrational vs element of Q(pi^2) \ Q), so this terminates.
    width = Fraction(1, 16)
    for _ in range(80):
        xlo, xhi = value_enclosure(x, width)
        ylo, yhi = value_enclosure(y, width)
        if xhi < ylo:
            return -1
        if yhi < xlo:
            return 1
        width /= 16
    raise ExactArithmeticError("could not separate exact values; equal operands?")


def rational_between(lo: ExactValue, hi: ExactValue) -> Fraction:
    """A rational strictly between lo < hi, kept as simple as possible."""
    if compare_values(lo, hi) >= 0:
        raise ValueError("rational_between requires lo < hi")
    width = Fraction(1, 16)
    for _ in range(200):
        llo, lhi = value_enclosure(lo, width)
        hlo, hhi = value_enclosure(hi, width)
        if lhi < hlo:
            raw = (lhi + hlo) / 2
            # Prefer a small denominator if it stays strictly inside.
            for digits in (1, 2, 3, 6, 12):
                cand = raw.limit_denominator(10**digits)
                if compare_values(lo, cand) < 0 and compare_values(cand, hi) < 0:
                    return cand
            return raw
        width /= 16
    raise ExactArithmeticError("rational_between did not separate its arguments")


def format_value(x: ExactValue) -> str:
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return _fmt_frac(x)
    return str(x)


# ---------------------------------------------------------------------------
# Quadratic root extraction
# ---------------------------------------------------------------------------


def positive_quadratic_root(
    quad: Fraction, lin: Exact, const: Fraction
) -> ExactValue | None:
    """Unique positive root u of quad*u^2 + lin*u + const = 0, if any.

    quad and const are rational; lin may carry pi^2 only when quad == 0
    (otherwise the root leaves the supported towers).  With const <= 0 at
    most one positive root exists; two positive roots raise.
    """
    quad, const = Fraction(quad), Fraction(const)
    lin = as_exact(lin)
    if quad == 0:
        if lin.is_zero():
            return None
        if lin.pi2 == 0:
            if lin.rat == 0:
                return None
            u = -const / lin.rat
            return u if u > 0 else None
        num, den = -const, lin
        if den.sign() < 0:
            num, den = -num, -den
        if num <= 0:
            return None
        return PiQuotient(num, den)
    if lin.pi2 != 0:
        raise ExactArithmeticError(
            "quadratic crossing with a pi^2-carrying eigenvalue is outside "
            "the supported exact towers"
        )
    b = lin.rat
    disc = b * b - 4 * quad * const
    if disc < 0:
        return None
    root_disc = sqrt_exact(disc)
    candidates = []
    for sgn in (1, -1):
        if isinstance(root_disc, Fraction):
            u = (-b + sgn * root_disc) / (2 * quad)
            if u > 0:
                candidates.append(u)
        else:
            u = (root_disc * sgn + (-b)) / (2 * quad)
            val = u if isinstance(u, QuadSurd) else Fraction(u)
            if compare_values(val, Fraction(0)) > 0:
                candidates.append(val)
    if not candidates:
        return None
    if len(candidates) == 2 and compare_values(candidates[0], candidates[1]) != 0:
        raise ExactArithmeticError("quadratic has two positive roots")
    return candidates[0]
