"""Spectrum of the fiber-shrunk Laplacian.

Shrinking totally geodesic fibers by t^2 turns the Laplacian into
Delta_t = Delta_M + (1/t^2 - 1) * Delta_v, so every eigenvalue is of the
candidate form mu + (1/t^2 - 1) * phi with mu from the total space and phi
from the fiber.  Two pieces are computable from model data alone:

* the base spectrum, which sits inside Spec(Delta_t) for every t (lifts of
  base eigenfunctions are constant along the fibers) and is exactly the
  t-independent part, and
* the full spectrum of product fibrations, where Delta_t splits as
  Delta_F / t^2 (+) Delta_B and every candidate combination is realized.

For non-product fibrations the engine never invents the remaining
combinations; which ones occur depends on global geometry that the model
does not carry.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotAProductError
from .exactnum import Exact, as_exact
from .spectra import SpectrumStream, spectrum_of
from .submersion import SubmersionModel


@dataclass(frozen=True)
class VariationEigenvalue:
    """One candidate eigenvalue mu + (1/t^2 - 1) phi of the shrunk Laplacian."""

    mu_index: int
    phi_index: int
    mu: Exact
    phi: Exact
    is_constant: bool

    def value_at(self, t: Fraction) -> Exact:
        return component_eigenvalue(self.mu, self.phi, t)


def component_eigenvalue(mu, phi, t: Fraction) -> Exact:
    """Exact value of mu + (1/t^2 - 1) * phi at fiber scale t > 0."""
    t = Fraction(t)
    if t <= 0:
        raise ValueError("t must be positive")
    mu, phi = as_exact(mu), as_exact(phi)
    if mu.sign() < 0 or phi.sign() < 0:
        raise ValueError("eigenvalues must be non-negative")
    return mu + phi * (Fraction(1) / (t * t) - 1)


def base_spectrum_in_variation(model: SubmersionModel) -> SpectrumStream:
    """The t-independent (constant-eigenvalue) part of the shrunk spectrum.

    For totally geodesic fibers the lifted base eigenvalues stay eigenvalues
    of Delta_t for every t > 0, and they are precisely the eigenvalues that
    do not move under the deformation.
    """
    return spectrum_of(model.base_spectrum)


@dataclass(frozen=True)
class ProductEntry:
    """Merged eigenvalue of a product fibration with its realizing pairs.

    witnesses lists every (fiber index j, base index i) with
    phi_j / t^2 + mu_i equal to the merged value; the multiplicity is the
    sum of the corresponding fiber x base multiplicity products.
    """

    value: Exact
    multiplicity: int
    witnesses: tuple[tuple[int, int], ...]


def product_candidate(
    model: SubmersionModel, total_index: int, fiber_index: int
) -> VariationEigenvalue:
    """Candidate eigenvalue of a product model from spectrum indices.

    total_index picks mu_k from the undeformed product spectrum (t = 1),
    fiber_index picks phi_j from the fiber; the candidate is constant in t
    exactly when fiber_index = 0 and mu_k is a base eigenvalue.
    """
    if not model.is_product:
        raise NotAProductError(model.name)
    bound = Fraction(1)
    while True:
        entries = product_spectrum_below_usq(model, Fraction(1), bound, strict=False)
        if len(entries) > total_index:
            break
        bound *= 4
    mu = entries[total_index].value
    phi = spectrum_of(model.fiber_spectrum).entry(fiber_index).value
    base = spectrum_of(model.base_spectrum)
    is_constant = fiber_index == 0 and any(
        e.value == mu for e in base.entries_up_to(mu, strict=False, include_zero=True)
    )
    return VariationEigenvalue(
        mu_index=total_index,
        phi_index=fiber_index,
        mu=mu,
        phi=phi,
        is_constant=is_constant,
    )


def product_spectrum_below(
    model: SubmersionModel, t: Fraction, bound, strict: bool = True
) -> list[ProductEntry]:
    """All eigenvalues (with multiplicity) of a shrunk product below bound.

    Requires the product flag: only then is Delta_t = Delta_F / t^2 (+)
    Delta_B, making the full spectrum the sum set of the two factors.
    """
    if not model.is_product:
        raise NotAProductError(model.name)
    t = Fraction(t)
    if t <= 0:
        raise ValueError("t must be positive")
    return product_spectrum_below_usq(model, t * t, bound, strict)


def product_spectrum_below_usq(
    model: SubmersionModel, u: Fraction, bound, strict: bool = True
) -> list[ProductEntry]:
    """Product enumeration parameterized by u = t^2.

    Exact side-of-crossing evaluations happen at rational u even when the
    crossing scale t itself is irrational, so this variant is the one the
    certification layer calls.
    """
    bound = as_exact(bound)
    inv_u = Fraction(1) / Fraction(u)
    fiber = spectrum_of(model.fiber_spectrum)
    base = spectrum_of(model.base_spectrum)
    merged: dict[Exact, tuple[int, list[tuple[int, int]]]] = {}
    fiber_entries = fiber.entries_up_to(bound / inv_u, strict=strict, include_zero=True)
    for j, fe in enumerate(fiber_entries):
        shifted = fe.value * inv_u
        remainder = bound - shifted
        base_entries = base.entries_up_to(remainder, strict=strict, include_zero=True)
        for i, be in enumerate(base_entries):
            value = shifted + be.value
            mult = fe.multiplicity * be.multiplicity
            if value in merged:
                old_mult, wits = merged[value]
                wits.append((j, i))
                merged[value] = (old_mult + mult, wits)
            else:
                merged[value] = (mult, [(j, i)])
    out = [
        ProductEntry(value, mult, tuple(wits))
        for value, (mult, wits) in merged.items()
    ]
    out.sort(key=lambda e: e.value)
    return out
