"""Submersion models and the scalar curvature of the fiber-shrinking family.

A model records the constant curvature data of one fibration F -> M -> B
with totally geodesic fibers: fiber and base scalar curvatures, the squared
Hilbert-Schmidt norm of the horizontal-distribution integrability tensor,
and descriptors for the fiber and base spectra.  Shrinking the fibers by
t^2 deforms the scalar curvature to

    scal(g_t) = a / t^2 + b - c * t^2,

with a = scal_F, b = scal_B and c = ||A||^2.  Everything downstream (the
crossing solver, the counting functions, the certificates) consumes only
this coefficient triple and the two spectra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import InconsistentModelError
from .exactnum import Exact, QuadSurd, positive_quadratic_root, value_float
from .spectra import (
    ComplexProjective,
    QuaternionicProjective,
    SpaceDescriptor,
    Sphere,
    spectrum_of,
)


@dataclass(frozen=True)
class DeformedScal:
    """Coefficients of scal(g_t) = fiber/t^2 + base - collapse*t^2."""

    fiber: Fraction
    base: Fraction
    collapse: Fraction

    def __post_init__(self):
        object.__setattr__(self, "fiber", Fraction(self.fiber))
        object.__setattr__(self, "base", Fraction(self.base))
        object.__setattr__(self, "collapse", Fraction(self.collapse))

    def at_usq(self, u: Fraction) -> Fraction:
        """Value at t with t^2 = u (u > 0 rational)."""
        u = Fraction(u)
        if u <= 0:
            raise ValueError("t^2 must be positive")
        return self.fiber / u + self.base - self.collapse * u

    def at(self, t: Fraction) -> Fraction:
        t = Fraction(t)
        if t <= 0:
            raise ValueError("t must be positive")
        return self.at_usq(t * t)

    @property
    def depends_on_t(self) -> bool:
        return self.fiber != 0 or self.collapse != 0


@dataclass(frozen=True)
class SubmersionModel:
    name: str
    fiber_dim: int
    base_dim: int
    scal_fiber: Fraction
    scal_base: Fraction
    a_norm_sq: Fraction
    fiber_spectrum: SpaceDescriptor
    base_spectrum: SpaceDescriptor
    is_product: bool = False
    is_homogeneous_fibration: bool = False
    ric_fiber_lower: Optional[Fraction] = None
    ric_total_lower_at_tau: Optional[Fraction] = None
    tau: Optional[Fraction] = None

    def __post_init__(self):
        for attr in ("scal_fiber", "scal_base", "a_norm_sq"):
            object.__setattr__(self, attr, Fraction(getattr(self, attr)))
        for attr in ("ric_fiber_lower", "ric_total_lower_at_tau", "tau"):
            val = getattr(self, attr)
            if val is not None:
                object.__setattr__(self, attr, Fraction(val))
        if self.fiber_dim < 1 or self.base_dim < 1:
            raise InconsistentModelError("fiber and base dimensions must be >= 1")
        if self.total_dim < 3:
            raise InconsistentModelError(
                "total dimension must be >= 3 for the conformal variational setup"
            )
        if self.a_norm_sq < 0:
            raise InconsistentModelError("||A||^2 must be non-negative")
        if self.is_product and self.a_norm_sq != 0:
            raise InconsistentModelError("product models require ||A||^2 = 0")

    @property
    def total_dim(self) -> int:
        return self.fiber_dim + self.base_dim

    @property
    def deformed_scal(self) -> DeformedScal:
        return DeformedScal(self.scal_fiber, self.scal_base, self.a_norm_sq)

    def base_stream(self):
        return spectrum_of(self.base_spectrum)

    def fiber_stream(self):
        return spectrum_of(self.fiber_spectrum)


def scal_t(model: SubmersionModel, t: Fraction) -> Fraction:
    """Scalar curvature of the deformed metric at fiber scale t > 0."""
    return model.deformed_scal.at(t)


def scal_at_usq(model: SubmersionModel, u: Fraction) -> Fraction:
    """Scalar curvature as a function of u = t^2 (exact in rational u)."""
    return model.deformed_scal.at_usq(u)


def calibrate_a_norm(
    scal_fiber: Fraction, scal_base: Fraction, scal_total_at_one: Fraction
) -> Fraction:
    """Recover ||A||^2 from the t = 1 scalar curvature identity."""
    a_norm_sq = Fraction(scal_fiber) + Fraction(scal_base) - Fraction(scal_total_at_one)
    if a_norm_sq < 0:
        raise InconsistentModelError(
            "inconsistent-model: scal_F + scal_B - scal(M, g_1) = "
            f"{a_norm_sq} < 0 contradicts ||A||^2 >= 0"
        )
    return a_norm_sq


ALWAYS_POSITIVE = "always-positive"
NEVER_POSITIVE = "never-positive"


@dataclass(frozen=True)
class PositivityRoot:
    """Largest fiber scale keeping scal(g_s) positive, as an exact root.

    kind is "root" with u_max = s_max^2 the positive root of
    collapse*u^2 - base*u - fiber = 0, or one of the sentinels when the
    sign of scal(g_s) does not change on (0, oo).
    """

    kind: str
    u_max: Union[Fraction, QuadSurd, None] = None
    coefficients: Optional[tuple[Fraction, Fraction, Fraction]] = None

    @property
    def s_max_float(self) -> Optional[float]:
        if self.u_max is None:
            return None
        return value_float(self.u_max) ** 0.5


def scal_positivity_root(model: SubmersionModel) -> PositivityRoot:
    """Solve scal(g_s) = 0 for the positivity range 0 < s < s_max."""
    a, b, c = model.scal_fiber, model.scal_base, model.a_norm_sq
    if a <= 0 and b <= 0:
        return PositivityRoot(NEVER_POSITIVE)
    if c == 0 and b >= 0:
        return PositivityRoot(ALWAYS_POSITIVE)
    # c > 0, or (c = 0 and b < 0 with a > 0): positivity fails for large s.
    coeffs = (c, -b, -a)
    root = positive_quadratic_root(Fraction(c), Exact(Fraction(-b)), Fraction(-a))
    if root is None:
        return PositivityRoot(NEVER_POSITIVE)
    return PositivityRoot("root", u_max=root, coefficients=coeffs)


# ---------------------------------------------------------------------------
# Bundled sphere-fiber families (unit round total space at s = 1)
# ---------------------------------------------------------------------------


def _round_total_scal(m: int) -> Fraction:
    return Fraction(m * (m - 1))


def hopf_complex_model(n: int) -> SubmersionModel:
    """Circle fibers over the complex projective base, unit round at t = 1."""
    scal_fiber = Fraction(0)
    scal_base = Fraction(4 * n * (n + 1))
    m = 2 * n + 1
    a_norm_sq = calibrate_a_norm(scal_fiber, scal_base, _round_total_scal(m))
    return SubmersionModel(
        name=f"complex-hopf-n{n}",
        fiber_dim=1,
        base_dim=2 * n,
        scal_fiber=scal_fiber,
        scal_base=scal_base,
        a_norm_sq=a_norm_sq,
        fiber_spectrum=Sphere(1),
        base_spectrum=ComplexProjective(n),
        is_homogeneous_fibration=True,
    )


def hopf_quaternionic_model(n: int) -> SubmersionModel:
    """S^3 fibers over the quaternionic projective base (diagonal scaling)."""
    scal_fiber = Fraction(6)
    scal_base = Fraction(16 * n * (n + 2))
    m = 4 * n + 3
    a_norm_sq = calibrate_a_norm(scal_fiber, scal_base, _round_total_scal(m))
    return SubmersionModel(
        name=f"quaternionic-hopf-n{n}",
        fiber_dim=3,
        base_dim=4 * n,
        scal_fiber=scal_fiber,
        scal_base=scal_base,
        a_norm_sq=a_norm_sq,
        fiber_spectrum=Sphere(3),
        base_spectrum=QuaternionicProjective(n),
        is_homogeneous_fibration=True,
        ric_fiber_lower=Fraction(2),
        ric_total_lower_at_tau=Fraction(m - 1),
        tau=Fraction(1),
    )


def hopf_octonionic_model() -> SubmersionModel:
    """S^7 fibers over the half-radius round 8-sphere."""
    scal_fiber = Fraction(42)
    scal_base = Fraction(224)
    a_norm_sq = calibrate_a_norm(scal_fiber, scal_base, _round_total_scal(15))
    return SubmersionModel(
        name="octonionic-hopf",
        fiber_dim=7,
        base_dim=8,
        scal_fiber=scal_fiber,
        scal_base=scal_base,
        a_norm_sq=a_norm_sq,
        fiber_spectrum=Sphere(7),
        base_spectrum=Sphere(8, Fraction(1, 2)),
        is_homogeneous_fibration=True,
    )
