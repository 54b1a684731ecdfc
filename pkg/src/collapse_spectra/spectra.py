"""Closed-form Laplace-Beltrami spectra for the catalog spaces.

Each catalog space yields a lazily generated, strictly increasing stream of
(eigenvalue, multiplicity) pairs with exact values: rationals for spheres
and the projective spaces, rational multiples of pi^2 for flat tori.

Multiplicities:

* Sphere(n, r): degree-k harmonic polynomials, C(n+k, k) - C(n+k-2, k-2),
  eigenvalue k(k+n-1)/r^2.
* ComplexProjective(n): circle-invariant harmonics of the round S^(2n+1).
  Invariant harmonics of degree 2k are exactly the harmonic polynomials of
  bidegree (k, k) in (z, conj z), giving C(n+k, n)^2 - C(n+k-1, n)^2 at
  eigenvalue 4k(k+n).
* QuaternionicProjective(n): Sp(1)-invariant harmonics of the round
  S^(4n+3).  Complexified, the right Sp(1)-action turns C^(2n+2) into
  2(n+1) copies of the standard SU(2)-module; the trivial multiplicity in
  a degree-2k symmetric power is (weight-0 count) - (weight-2 count), and
  invariant harmonics are the degree-2k invariants minus the degree-(2k-2)
  ones, at eigenvalue 4k(k+2n+1).
* SO3(r): antipodal-invariant (even-degree) harmonics of S^3.

These normalizations make the projective-space streams the fiber-constant
part of the corresponding round-sphere streams, which is what the crossing
analysis consumes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt
from typing import Iterator, Union

from .errors import ModelSchemaError, SpectrumExhaustedError
from .exactnum import Exact, as_exact, pi2_times

# ---------------------------------------------------------------------------
# Entries and descriptors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EigenvalueEntry:
    value: Exact
    multiplicity: int

    def __post_init__(self):
        object.__setattr__(self, "value", as_exact(self.value))
        if self.value.sign() < 0:
            raise ValueError("eigenvalues must be non-negative")
        if self.multiplicity < 1:
            raise ValueError("multiplicities must be positive")


@dataclass(frozen=True)
class Sphere:
    n: int
    radius: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "radius", Fraction(self.radius))
        if self.n < 1:
            raise ValueError("sphere dimension must be >= 1")
        if self.radius <= 0:
            raise ValueError("sphere radius must be positive")

    @property
    def dim(self) -> int:
        return self.n


@dataclass(frozen=True)
class FlatTorus:
    gram: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", rows)
        d = len(rows)
        if d < 1 or any(len(row) != d for row in rows):
            raise ValueError("gram matrix must be square")
        for i in range(d):
            for j in range(d):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("gram matrix must be symmetric")
        for k in range(1, d + 1):
            if _det([row[:k] for row in rows[:k]]) <= 0:
                raise ValueError("gram matrix must be positive definite")

    @property
    def dim(self) -> int:
        return len(self.gram)


@dataclass(frozen=True)
class ComplexProjective:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("complex projective index must be >= 1")

    @property
    def dim(self) -> int:
        return 2 * self.n


@dataclass(frozen=True)
class QuaternionicProjective:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("quaternionic projective index must be >= 1")

    @property
    def dim(self) -> int:
        return 4 * self.n


@dataclass(frozen=True)
class SO3:
    radius: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "radius", Fraction(self.radius))
        if self.radius <= 0:
            raise ValueError("scale must be positive")

    @property
    def dim(self) -> int:
        return 3


@dataclass(frozen=True)
class Explicit:
    entries: tuple[EigenvalueEntry, ...]
    valid_below: Exact

    def __post_init__(self):
        entries = tuple(
            e if isinstance(e, EigenvalueEntry) else EigenvalueEntry(*e)
            for e in self.entries
        )
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "valid_below", as_exact(self.valid_below))
        if not entries or not entries[0].value.is_zero():
            raise ValueError("explicit spectra must start at eigenvalue 0")
        for prev, cur in zip(entries, entries[1:]):
            if not (prev.value - cur.value).sign() < 0:
                raise ValueError("explicit spectra must be strictly increasing")
        if self.valid_below.sign() <= 0:
            raise ValueError("validity bound must be positive")

    @property
    def dim(self) -> int | None:
        return None


SpaceDescriptor = Union[
    Sphere, FlatTorus, ComplexProjective, QuaternionicProjective, SO3, Explicit
]


def _det(rows) -> Fraction:
    d = len(rows)
    if d == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j in range(d):
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        total += (-1) ** j * Fraction(rows[0][j]) * _det(minor)
    return total


# ---------------------------------------------------------------------------
# Multiplicity combinatorics
# ---------------------------------------------------------------------------


def sphere_multiplicity(n: int, k: int) -> int:
    """Dimension of degree-k harmonics on S^n."""
    low = comb(n + k - 2, k - 2) if k >= 2 else 0
    return comb(n + k, k) - low


def cp_multiplicity(n: int, k: int) -> int:
    """Circle-invariant harmonics of degree 2k on S^(2n+1): bidegree (k, k)."""
    if k == 0:
        return 1
    return comb(n + k, n) ** 2 - comb(n + k - 1, n) ** 2


def hp_multiplicity(n: int, k: int) -> int:
    """Sp(1)-invariant harmonics of degree 2k on S^(4n+3)."""
    return _sp1_invariant_polys(n, k) - (_sp1_invariant_polys(n, k - 1) if k else 0)


def _sp1_invariant_polys(n: int, k: int) -> int:
    """SU(2)-trivial multiplicity in degree-2k polynomials on H^(n+1).

    With 2(n+1) weight(+1) and 2(n+1) weight(-1) complex variables, the
    weight-2j monomial count in degree 2k is C(k+j+N-1, N-1)*C(k-j+N-1, N-1)
    for N = 2(n+1); the trivial multiplicity is weight-0 minus weight-2.
    """
    big = 2 * (n + 1)
    d0 = comb(k + big - 1, big - 1) ** 2
    d2 = comb(k + big, big - 1) * comb(k + big - 2, big - 1) if k >= 1 else 0
    return d0 - d2


# ---------------------------------------------------------------------------
# Streams
# ---------------------------------------------------------------------------


class SpectrumStream:
    """Memoizing view of the increasing (eigenvalue, multiplicity) sequence.

    Entry lists handed out are immutable; the internal cache is single-owner
    mutable state, so concurrent scans should each call spectrum_of anew.
    """

    def __init__(self, descriptor: SpaceDescriptor):
        self.descriptor = descriptor
        self._entries: list[EigenvalueEntry] = []
        self._gen: Iterator[EigenvalueEntry] = _entry_generator(descriptor)
        self.valid_below: Exact | None = (
            descriptor.valid_below if isinstance(descriptor, Explicit) else None
        )

    def _check_level(self, bound: Exact) -> None:
        if self.valid_below is not None and (bound - self.valid_below).sign() > 0:
            raise SpectrumExhaustedError(self.valid_below)

    def _extend_past(self, bound: Exact) -> None:
        """Cache every entry with value <= bound (plus one sentinel beyond)."""
        while not self._entries or (self._entries[-1].value - bound).sign() <= 0:
            try:
                self._entries.append(next(self._gen))
            except StopIteration:
                if self.valid_below is not None:
                    if (bound - self.valid_below).sign() <= 0:
                        return  # declared range covers the request
                    raise SpectrumExhaustedError(self.valid_below) from None
                raise AssertionError("catalog stream terminated unexpectedly")

    def entries_up_to(
        self, bound, strict: bool = True, include_zero: bool = False
    ) -> list[EigenvalueEntry]:
        """Entries with value < bound (strict) or <= bound, zero optional."""
        bound = as_exact(bound)
        self._check_level(bound)
        if bound.sign() >= 0:
            self._extend_past(bound)
        out = []
        for entry in self._entries:
            rel = (entry.value - bound).sign()
            if rel > 0 or (strict and rel == 0):
                break
            if entry.value.is_zero() and not include_zero:
                continue
            out.append(entry)
        return out

    def entry(self, index: int) -> EigenvalueEntry:
        """The index-th distinct eigenvalue (0 is the constant eigenvalue)."""
        while len(self._entries) <= index:
            try:
                self._entries.append(next(self._gen))
            except StopIteration:
                raise SpectrumExhaustedError(self.valid_below) from None
        return self._entries[index]

    def first_positive(self) -> EigenvalueEntry:
        return self.entry(1)


def spectrum_of(space: SpaceDescriptor) -> SpectrumStream:
    """Fresh stream over the exact spectrum of a catalog space."""
    if not isinstance(
        space, (Sphere, FlatTorus, ComplexProjective, QuaternionicProjective, SO3, Explicit)
    ):
        raise ModelSchemaError(f"unknown space descriptor {space!r}")
    return SpectrumStream(space)


def _entry_generator(space: SpaceDescriptor) -> Iterator[EigenvalueEntry]:
    if isinstance(space, Sphere):
        return _sphere_entries(space.n, space.radius)
    if isinstance(space, SO3):
        return _so3_entries(space.radius)
    if isinstance(space, ComplexProjective):
        return _cp_entries(space.n)
    if isinstance(space, QuaternionicProjective):
        return _hp_entries(space.n)
    if isinstance(space, FlatTorus):
        return _torus_entries(space.gram)
    if isinstance(space, Explicit):
        return iter(space.entries)
    raise ModelSchemaError(f"unknown space descriptor {space!r}")


def _sphere_entries(n: int, radius: Fraction) -> Iterator[EigenvalueEntry]:
    scale = radius * radius
    for k in itertools.count():
        value = Fraction(k * (k + n - 1)) / scale
        yield EigenvalueEntry(Exact(value), sphere_multiplicity(n, k))


def _so3_entries(radius: Fraction) -> Iterator[EigenvalueEntry]:
    scale = radius * radius
    for k in itertools.count(step=2):
        value = Fraction(k * (k + 2)) / scale
        yield EigenvalueEntry(Exact(value), sphere_multiplicity(3, k))


def _cp_entries(n: int) -> Iterator[EigenvalueEntry]:
    for k in itertools.count():
        yield EigenvalueEntry(Exact(Fraction(4 * k * (k + n))), cp_multiplicity(n, k))


def _hp_entries(n: int) -> Iterator[EigenvalueEntry]:
    for k in itertools.count():
        yield EigenvalueEntry(
            Exact(Fraction(4 * k * (k + 2 * n + 1))), hp_multiplicity(n, k)
        )


def _invert(gram: tuple[tuple[Fraction, ...], ...]) -> list[list[Fraction]]:
    d = len(gram)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(d)] for i, row in enumerate(gram)]
    for col in range(d):
        pivot = next(r for r in range(col, d) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(d):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[d:] for row in aug]


def _isqrt_floor_fraction(f: Fraction) -> int:
    """Largest integer n >= 0 with n^2 <= f."""
    if f < 0:
        return -1
    n = isqrt(f.numerator // f.denominator)
    while (n + 1) * (n + 1) <= f:
        n += 1
    while n * n > f:
        n -= 1
    return n


def _torus_entries(gram) -> Iterator[EigenvalueEntry]:
    """Dual-lattice norms in increasing order, complete shell by shell.

    Eigenvalues are 4*pi^2 * v^T G^{-1} v over integer v.  A growing bound B
    on the dual form is swept with the box |v_i| <= sqrt(B * G_ii), which is
    exact: v^T Q v <= B forces v_i^2 <= B * (Q^{-1})_ii.
    """
    dual = _invert(gram)
    d = len(gram)

    def q_of(v) -> Fraction:
        return sum(dual[i][j] * v[i] * v[j] for i in range(d) for j in range(d))

    bound = max(dual[i][i] for i in range(d))
    previous = Fraction(-1)
    while True:
        limits = [_isqrt_floor_fraction(bound * gram[i][i]) for i in range(d)]
        counts: dict[Fraction, int] = {}
        for v in itertools.product(*(range(-m, m + 1) for m in limits)):
            value = q_of(v)
            if value <= bound:
                counts[value] = counts.get(value, 0) + 1
        for value in sorted(counts):
            if value > previous:
                yield EigenvalueEntry(pi2_times(4 * value), counts[value])
        previous = bound
        bound *= 4


# ---------------------------------------------------------------------------
# Counting primitives
# ---------------------------------------------------------------------------


def eigenvalues_below(
    stream: SpectrumStream, bound, strict: bool = True
) -> list[EigenvalueEntry]:
    """Entries with 0 < value < bound (strict) or 0 < value <= bound."""
    return stream.entries_up_to(bound, strict=strict, include_zero=False)


def counting_below(stream: SpectrumStream, bound, strict: bool = True) -> int:
    """Total multiplicity of positive eigenvalues under the bound."""
    return sum(e.multiplicity for e in eigenvalues_below(stream, bound, strict))
