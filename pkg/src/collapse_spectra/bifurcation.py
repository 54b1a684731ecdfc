"""Degeneracy crossings, index counting and bifurcation certification.

A fiber scale t is a degeneracy value when scal(g_t)/(m-1) is an
eigenvalue of the shrunk Laplacian.  The computable crossings are those
through base eigenvalues eta: in u = t^2 they solve

    c*u^2 + ((m-1)*eta - b)*u - a = 0,

whose unique positive root is kept as an exact descriptor.  Because the
threshold scal(g_t)/(m-1) is strictly decreasing in t whenever the family
actually depends on t, enumerating all base eigenvalues up to the
threshold at t_min proves completeness of the returned crossing list on
[t_min, t_max]; nothing is sampled.

Two certification routes are implemented:

* equivariant: for homogeneous fibrations with positively curved fibers of
  dimension >= 2, the count of fiber-constant negative directions drops by
  mul(eta) across every base crossing, so the symmetry types on the two
  sides differ and the crossing is a bifurcation value;
* Morse index: for products the index is computed by full enumeration and
  its jump checked exactly; for pinched non-product models a certificate
  bounds the smallest non-constant candidate eigenvalue away from the
  threshold on (0, t*), so base crossings there change the index.

All side-of-crossing evaluations happen at exact rational points chosen
strictly inside the gaps between consecutive roots, never at floated
t_q +- eps.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Union

from .errors import (
    HypothesisViolationError,
    NoWitnessError,
    NotAProductError,
)
from .exactnum import (
    Exact,
    ExactValue,
    PiQuotient,
    QuadSurd,
    as_exact,
    compare_values,
    positive_quadratic_root,
    rational_between,
    sqrt_exact,
    value_enclosure,
    value_float,
)
from .spectra import EigenvalueEntry, counting_below, eigenvalues_below, spectrum_of
from .submersion import SubmersionModel, scal_at_usq
from .variation import product_spectrum_below_usq, product_spectrum_below


# ---------------------------------------------------------------------------
# Threshold
# ---------------------------------------------------------------------------


def threshold(model: SubmersionModel, t: Fraction) -> Fraction:
    """scal(g_t)/(m-1): the level a Laplace eigenvalue must cross."""
    t = Fraction(t)
    if t <= 0:
        raise ValueError("t must be positive")
    return threshold_at_usq(model, t * t)


def threshold_at_usq(model: SubmersionModel, u: Fraction) -> Fraction:
    return scal_at_usq(model, u) / (model.total_dim - 1)


# ---------------------------------------------------------------------------
# Degeneracy records
# ---------------------------------------------------------------------------

EQUIVARIANT = "equivariant"
MORSE_INDEX = "morse-index"
UNCERTIFIED = "none"


@dataclass(frozen=True)
class DegeneracyRecord:
    """One crossing of the threshold through a base eigenvalue.

    coefficients is the exact triple (c, (m-1)*eta - b, -a) of the crossing
    quadratic in u = t^2; u_root its unique positive root; trivial_drop the
    jump of the fiber-constant negative count across the crossing, equal to
    the base multiplicity of eta.
    """

    coefficients: tuple[Fraction, Exact, Fraction]
    u_root: ExactValue
    t_approx: float
    eigenvalue: Exact
    base_multiplicity: int
    trivial_drop: int
    certified_by: str = UNCERTIFIED

    def quadratic_residual_is_zero(self) -> bool:
        """Substitute the stored root back into the stored quadratic."""
        quad, lin, const = self.coefficients
        u = self.u_root
        if isinstance(u, Fraction):
            return (as_exact(quad * u * u + const) + lin * u).is_zero()
        if isinstance(u, QuadSurd):
            if lin.pi2 != 0:
                return False
            value = u * u * quad + u * lin.rat + const
            return isinstance(value, Fraction) and value == 0
        if isinstance(u, PiQuotient):
            # quad == 0 on this branch: lin*(num/den) + const == 0 iff
            # lin*num + const*den == 0 exactly.
            if quad != 0:
                return False
            return (lin * u.num + u.den * const).is_zero()
        raise TypeError(f"unsupported root type {type(u).__name__}")


@dataclass(frozen=True)
class DegeneracyScan:
    """Crossing records on an interval, sorted by increasing t."""

    records: tuple[DegeneracyRecord, ...]
    scal_independent: bool = False


def verify_crossing(model: SubmersionModel, record: DegeneracyRecord) -> bool:
    """Recompute scal(g_t)/(m-1) at the stored root, in the root's own field,
    and compare it with the crossed eigenvalue exactly."""
    a, b, c = model.scal_fiber, model.scal_base, model.a_norm_sq
    u = record.u_root
    target = record.eigenvalue * (model.total_dim - 1)
    if isinstance(u, Fraction):
        return as_exact(a / u + b - c * u) == target
    if isinstance(u, QuadSurd):
        total = (1 / u) * a + b - u * c
        return isinstance(total, Fraction) and as_exact(total) == target
    if isinstance(u, PiQuotient):
        if c != 0:
            return False
        # a/u = a * den / num stays in the pi^2 lattice
        return u.den * (a / u.num) + b == target
    raise TypeError(f"unsupported root type {type(u).__name__}")


def _crossing_record(
    model: SubmersionModel, entry: EigenvalueEntry, certified_by: str = UNCERTIFIED
) -> Optional[DegeneracyRecord]:
    """Solve threshold(t) = eta exactly; None when no positive root exists."""
    m1 = model.total_dim - 1
    quad = model.a_norm_sq
    lin = entry.value * m1 - model.scal_base
    const = -model.scal_fiber
    root = positive_quadratic_root(quad, lin, const)
    if root is None:
        return None
    return DegeneracyRecord(
        coefficients=(quad, lin, const),
        u_root=root,
        t_approx=value_float(root) ** 0.5,
        eigenvalue=entry.value,
        base_multiplicity=entry.multiplicity,
        trivial_drop=entry.multiplicity,
        certified_by=certified_by,
    )


def degeneracy_values(
    model: SubmersionModel, t_min: Fraction, t_max: Fraction
) -> DegeneracyScan:
    """All threshold crossings through base eigenvalues in [t_min, t_max].

    Completeness: the threshold is strictly decreasing in t (unless the
    family is scal-independent, which returns the rigid flag), so every
    crossing in range has eta <= threshold(t_min); that finite sweep of the
    base spectrum is exhaustive.
    """
    t_min, t_max = Fraction(t_min), Fraction(t_max)
    if not 0 < t_min < t_max:
        raise ValueError("need 0 < t_min < t_max")
    scal = model.deformed_scal
    if not scal.depends_on_t:
        return DegeneracyScan(records=(), scal_independent=True)
    u_min, u_max = t_min * t_min, t_max * t_max
    top = threshold_at_usq(model, u_min)
    if top <= 0:
        return DegeneracyScan(records=())
    stream = model.base_stream()
    records = []
    for entry in eigenvalues_below(stream, top, strict=False):
        record = _crossing_record(model, entry)
        if record is None:
            continue
        if (
            compare_values(record.u_root, u_min) >= 0
            and compare_values(record.u_root, u_max) <= 0
        ):
            records.append(record)
    records.sort(key=lambda r: r.eigenvalue, reverse=True)  # increasing t
    return DegeneracyScan(records=tuple(records))


def smallest_degeneracies(model: SubmersionModel, count: int) -> DegeneracyScan:
    """The count first crossings (smallest eigenvalues, largest t).

    Emitted with strictly decreasing t and non-decreasing eta; the shrinking
    of t across the list witnesses the accumulation of crossings at 0.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if not model.deformed_scal.depends_on_t:
        return DegeneracyScan(records=(), scal_independent=True)
    stream = model.base_stream()
    records = []
    index = 1
    while len(records) < count:
        entry = stream.entry(index)
        index += 1
        record = _crossing_record(model, entry)
        if record is not None:
            records.append(record)
        elif model.scal_fiber == 0 and model.a_norm_sq > 0:
            # Bounded threshold: eta above sup threshold never crosses, and
            # neither does any larger eta.
            sup = model.scal_base / (model.total_dim - 1)
            if (entry.value - sup).sign() >= 0:
                break
    if len(records) < count:
        raise HypothesisViolationError(
            "threshold is bounded; only "
            f"{len(records)} crossings exist, {count} requested"
        )
    return DegeneracyScan(records=tuple(records))


# ---------------------------------------------------------------------------
# Counting
# ---------------------------------------------------------------------------


def trivial_count(model: SubmersionModel, t: Fraction, strict: bool = True) -> int:
    """Base-eigenvalue multiplicity below the threshold at t.

    For homogeneous fibrations this is the number of copies of the trivial
    representation inside the negative eigenspaces of the second-variation
    operator (fiber-constant eigenfunctions are exactly the invariant
    ones); for any totally geodesic fibration it is a lower bound for the
    Morse index, since lifted base eigenvalues stay in the spectrum.
    """
    t = Fraction(t)
    if t <= 0:
        raise ValueError("t must be positive")
    return trivial_count_at_usq(model, t * t, strict)


def trivial_count_at_usq(
    model: SubmersionModel, u: Fraction, strict: bool = True
) -> int:
    level = threshold_at_usq(model, u)
    if level <= 0:
        return 0
    return counting_below(model.base_stream(), level, strict=strict)


def morse_index_product(
    model: SubmersionModel, t: Fraction, strict: bool = True
) -> int:
    """Morse index by full product enumeration (products only)."""
    if not model.is_product:
        raise NotAProductError(model.name)
    t = Fraction(t)
    if t <= 0:
        raise ValueError("t must be positive")
    return morse_index_product_at_usq(model, t * t, strict)


def morse_index_product_at_usq(
    model: SubmersionModel, u: Fraction, strict: bool = True
) -> int:
    if not model.is_product:
        raise NotAProductError(model.name)
    level = threshold_at_usq(model, u)
    if level <= 0:
        return 0
    entries = product_spectrum_below_usq(model, u, level, strict=strict)
    return sum(e.multiplicity for e in entries if e.value.sign() > 0)


# ---------------------------------------------------------------------------
# Gap points between crossings
# ---------------------------------------------------------------------------


def _crossing_above(
    model: SubmersionModel, record: DegeneracyRecord
) -> Optional[ExactValue]:
    """Root of the nearest crossing at larger t (next smaller eigenvalue)."""
    entries = eigenvalues_below(model.base_stream(), record.eigenvalue, strict=True)
    for entry in reversed(entries):
        neighbour = _crossing_record(model, entry)
        if neighbour is not None:
            return neighbour.u_root
    return None


def _crossing_below(
    model: SubmersionModel, record: DegeneracyRecord
) -> Optional[ExactValue]:
    """Root of the nearest crossing at smaller t (next larger eigenvalue)."""
    stream = model.base_stream()
    skip = len(
        stream.entries_up_to(record.eigenvalue, strict=False, include_zero=True)
    )
    sup = model.scal_base / (model.total_dim - 1)
    for index in range(skip, skip + 4096):
        entry = stream.entry(index)
        neighbour = _crossing_record(model, entry)
        if neighbour is not None:
            return neighbour.u_root
        if model.scal_fiber == 0 and (entry.value - sup).sign() >= 0:
            return None  # bounded threshold: larger eigenvalues never cross
    raise HypothesisViolationError("could not locate the neighbouring crossing")


def crossing_gap_points(
    model: SubmersionModel, records: tuple[DegeneracyRecord, ...]
) -> list[Fraction]:
    """Rational u values strictly inside the n+1 gaps around n crossings.

    records must be sorted by increasing t.  Point i lies strictly between
    crossing i-1 and crossing i, where the outer neighbours are the true
    adjacent crossings of the model (not the scan bounds), so each count
    evaluated at these points is the exact one-sided value at the crossing.
    """
    if not records:
        return []
    roots = [r.u_root for r in records]
    below = _crossing_below(model, records[0])
    points = [rational_between(below if below is not None else Fraction(0), roots[0])]
    for lo, hi in zip(roots, roots[1:]):
        points.append(rational_between(lo, hi))
    above = _crossing_above(model, records[-1])
    if above is None:
        points.append(_rational_above(roots[-1]))
    else:
        points.append(rational_between(roots[-1], above))
    return points


def _rational_above(x: ExactValue) -> Fraction:
    _, hi = value_enclosure(x, Fraction(1, 1024))
    if compare_values(hi, x) > 0:
        return hi
    return hi + Fraction(1, 1024)


# ---------------------------------------------------------------------------
# Equivariant certification
# ---------------------------------------------------------------------------


def equivariant_bifurcation_report(
    model: SubmersionModel,
    t_min: Optional[Fraction] = None,
    t_max: Optional[Fraction] = None,
    count: Optional[int] = None,
) -> DegeneracyScan:
    """Certify base crossings by the symmetry-type jump.

    Every located crossing drops the fiber-constant negative count by
    mul(eta) >= 1, so the negative-space representations on the two sides
    cannot be isomorphic and the crossing is a bifurcation value.  Families
    with t-independent scalar curvature return the empty rigid scan (the
    negative control); other violations of the hypotheses raise.
    """
    if not model.deformed_scal.depends_on_t:
        return DegeneracyScan(records=(), scal_independent=True)
    if not model.is_homogeneous_fibration:
        raise HypothesisViolationError(
            "equivariant criterion requires a homogeneous fibration"
        )
    if model.scal_fiber <= 0:
        raise HypothesisViolationError("fiber scalar curvature must be positive")
    if model.fiber_dim < 2:
        raise HypothesisViolationError("fiber dimension >= 2 required")
    if count is not None:
        scan = smallest_degeneracies(model, count)
    else:
        if t_min is None or t_max is None:
            raise ValueError("provide either count or both t_min and t_max")
        scan = degeneracy_values(model, t_min, t_max)
    records = tuple(replace(r, certified_by=EQUIVARIANT) for r in scan.records)
    return DegeneracyScan(records=records, scal_independent=scan.scal_independent)


# ---------------------------------------------------------------------------
# Morse certification for products
# ---------------------------------------------------------------------------


def certify_product_records(
    model: SubmersionModel, scan: DegeneracyScan
) -> DegeneracyScan:
    """Tag product crossings whose full Morse index provably jumps.

    The index is enumerated exactly at rational points in the adjacent
    gaps; a nonzero change certifies the crossing by the Morse-index
    criterion.  Records whose index change vanishes (compensation) stay
    uncertified.
    """
    if not model.is_product:
        raise NotAProductError(model.name)
    if not scan.records:
        return scan
    points = crossing_gap_points(model, scan.records)
    certified = []
    for i, record in enumerate(scan.records):
        below = morse_index_product_at_usq(model, points[i])
        above = morse_index_product_at_usq(model, points[i + 1])
        tag = MORSE_INDEX if below != above else UNCERTIFIED
        certified.append(replace(record, certified_by=tag))
    return DegeneracyScan(records=tuple(certified), scal_independent=False)


# ---------------------------------------------------------------------------
# Pinching certificate
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InequalityCheck:
    name: str
    lhs: Fraction
    relation: str
    rhs: Fraction
    satisfied: bool

    def render(self) -> str:
        mark = "ok" if self.satisfied else "FALSE"
        return f"{self.name}: {self.lhs} {self.relation} {self.rhs} [{mark}]"


@dataclass(frozen=True)
class Certificate:
    """Outcome of the curvature-pinching certification.

    On pass, every base crossing with t < t_star changes the Morse index:
    the smallest non-constant candidate eigenvalue stays strictly above the
    threshold there, so no compensation can occur.
    """

    k1: Fraction
    k2: Fraction
    tau: Fraction
    fiber_dim: int
    total_dim: int
    checks: tuple[InequalityCheck, ...]
    fiber_gap: InequalityCheck
    base_gap: InequalityCheck
    phi1: Fraction
    mu1: Fraction
    phi1_source: str
    mu1_source: str
    verdict: bool
    failed: Optional[str]
    t_star_sq: Optional[Fraction]

    @property
    def t_star(self) -> Union[Fraction, QuadSurd, None]:
        if self.t_star_sq is None:
            return None
        return sqrt_exact(self.t_star_sq)

    @property
    def t_star_float(self) -> Optional[float]:
        if self.t_star_sq is None:
            return None
        return float(self.t_star_sq) ** 0.5

    def min_nonconstant_candidate(self, t: Fraction) -> Fraction:
        """mu_1 + (tau^2/t^2 - 1) * phi_1 / tau^2, the floor of moving eigenvalues."""
        t = Fraction(t)
        if t <= 0:
            raise ValueError("t must be positive")
        tau_sq = self.tau * self.tau
        return self.mu1 + (tau_sq / (t * t) - 1) * self.phi1 / tau_sq

    def all_checks(self) -> tuple[InequalityCheck, ...]:
        return self.checks + (self.fiber_gap, self.base_gap)


def pinching_certificate(
    model: SubmersionModel,
    k1: Fraction,
    k2: Fraction,
    tau: Fraction,
    mu1: Optional[Fraction] = None,
    phi1: Optional[Fraction] = None,
) -> Certificate:
    """Evaluate the two curvature pinching systems and compute t_star.

    phi1 defaults to the first positive fiber eigenvalue (or the Ricci
    eigenvalue bound l*k1 when the spectrum is unusable); mu1 to the first
    positive eigenvalue of the shrunk metric at tau for products, else the
    bound m*k2.  All comparisons are exact.
    """
    k1, k2, tau = Fraction(k1), Fraction(k2), Fraction(tau)
    l, m = model.fiber_dim, model.total_dim
    if l < 2:
        raise HypothesisViolationError("fiber dimension >= 2 required")
    if k1 <= 0 or k2 <= 0 or tau <= 0:
        raise HypothesisViolationError("pinching constants k1, k2, tau must be positive")
    if model.ric_fiber_lower is None:
        raise HypothesisViolationError("fiber Ricci lower bound required")
    if model.ric_total_lower_at_tau is None:
        raise HypothesisViolationError("total-space Ricci lower bound at tau required")
    if model.tau is not None and model.tau != tau:
        raise HypothesisViolationError(
            f"total-space Ricci bound is declared at tau = {model.tau}, not {tau}"
        )

    checks = (
        InequalityCheck(
            "Ric_F >= (l-1)*k1",
            model.ric_fiber_lower,
            ">=",
            (l - 1) * k1,
            model.ric_fiber_lower >= (l - 1) * k1,
        ),
        InequalityCheck(
            "scal_F < l*(m-1)*k1",
            model.scal_fiber,
            "<",
            l * (m - 1) * k1,
            model.scal_fiber < l * (m - 1) * k1,
        ),
        InequalityCheck(
            "Ric_M(g_tau) >= (m-1)*k2",
            model.ric_total_lower_at_tau,
            ">=",
            (m - 1) * k2,
            model.ric_total_lower_at_tau >= (m - 1) * k2,
        ),
        InequalityCheck(
            "scal_B <= m*(m-1)*k2",
            model.scal_base,
            "<=",
            m * (m - 1) * k2,
            model.scal_base <= m * (m - 1) * k2,
        ),
    )

    phi1_eff, phi1_source = _effective_phi1(model, k1, phi1)
    mu1_eff, mu1_source = _effective_mu1(model, k2, tau, mu1)

    fiber_gap = InequalityCheck(
        "scal_F < (m-1)*phi1",
        model.scal_fiber,
        "<",
        (m - 1) * phi1_eff,
        model.scal_fiber < (m - 1) * phi1_eff,
    )
    base_gap = InequalityCheck(
        "scal_B <= (m-1)*mu1",
        model.scal_base,
        "<=",
        (m - 1) * mu1_eff,
        model.scal_base <= (m - 1) * mu1_eff,
    )

    failed = next(
        (c.name for c in checks + (fiber_gap, base_gap) if not c.satisfied), None
    )
    verdict = failed is None
    t_star_sq = None
    if verdict:
        ratio = model.scal_fiber / ((m - 1) * phi1_eff)
        t_star_sq = tau * tau * (1 - ratio)
        if t_star_sq > tau * tau:  # scal_F < 0 would overshoot the declared range
            t_star_sq = tau * tau

    return Certificate(
        k1=k1,
        k2=k2,
        tau=tau,
        fiber_dim=l,
        total_dim=m,
        checks=checks,
        fiber_gap=fiber_gap,
        base_gap=base_gap,
        phi1=phi1_eff,
        mu1=mu1_eff,
        phi1_source=phi1_source,
        mu1_source=mu1_source,
        verdict=verdict,
        failed=failed,
        t_star_sq=t_star_sq,
    )


def _effective_phi1(model, k1, phi1) -> tuple[Fraction, str]:
    if phi1 is not None:
        return Fraction(phi1), "given"
    entry = spectrum_of(model.fiber_spectrum).first_positive()
    if entry.value.is_rational():
        return entry.value.rat, "spectrum"
    if model.scal_fiber == 0:
        # Only the ratio scal_F/phi1 enters t_star; with scal_F = 0 the
        # Lichnerowicz bound is a safe rational stand-in.
        return Fraction(model.fiber_dim) * k1, "lichnerowicz"
    raise HypothesisViolationError(
        "fiber spectrum carries pi^2 but the fiber scalar curvature is nonzero"
    )


def _effective_mu1(model, k2, tau, mu1) -> tuple[Fraction, str]:
    if mu1 is not None:
        return Fraction(mu1), "given"
    if model.is_product:
        bound = Fraction(1)
        while True:
            entries = product_spectrum_below(model, tau, bound, strict=True)
            positive = [e for e in entries if e.value.sign() > 0]
            if positive:
                first = positive[0].value
                if first.is_rational():
                    return first.rat, "spectrum"
                break
            bound *= 4
    return Fraction(model.total_dim) * k2, "lichnerowicz"


# ---------------------------------------------------------------------------
# Multiplicity report
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MultiplicityEntry:
    record: DegeneracyRecord
    witness_count: int
    witness_usq: Fraction
    conclusion: str


@dataclass(frozen=True)
class MultiplicityReport:
    model_name: str
    t_min: Fraction
    t_max: Fraction
    route: str
    entries: tuple[MultiplicityEntry, ...]
    uncertified: tuple[DegeneracyRecord, ...]
    scal_independent: bool
    certificate: Optional[Certificate] = None


def multiplicity_report(
    model: SubmersionModel,
    t_min: Fraction,
    t_max: Fraction,
    pinching: Optional[tuple[Fraction, Fraction]] = None,
) -> MultiplicityReport:
    """Certified bifurcation values with positive-index witnesses.

    Each certified crossing t_q is reported with an exactly evaluated index
    witness N > 0 on the collapse side, yielding at least 3 constant scalar
    curvature metrics in the conformal classes of fiber scales arbitrarily
    close to t_q.  The certified set accumulates at 0 as the scan interval
    is extended; an empty certified list makes no claim.
    """
    t_min, t_max = Fraction(t_min), Fraction(t_max)
    scan = degeneracy_values(model, t_min, t_max)
    if scan.scal_independent:
        return MultiplicityReport(
            model.name, t_min, t_max, "none", (), (), scal_independent=True
        )

    certificate = None
    if (
        model.is_homogeneous_fibration
        and model.scal_fiber > 0
        and model.fiber_dim >= 2
    ):
        route = EQUIVARIANT
        scan = DegeneracyScan(
            tuple(replace(r, certified_by=EQUIVARIANT) for r in scan.records)
        )
    elif model.is_product:
        route = "morse-index-product"
        scan = certify_product_records(model, scan)
    elif pinching is not None:
        route = "pinching"
        k1, k2 = pinching
        certificate = pinching_certificate(model, k1, k2, model.tau or Fraction(1))
        if certificate.verdict:
            tagged = []
            for record in scan.records:
                inside = compare_values(record.u_root, certificate.t_star_sq) < 0
                tagged.append(
                    replace(record, certified_by=MORSE_INDEX if inside else UNCERTIFIED)
                )
            scan = DegeneracyScan(tuple(tagged))
    else:
        route = "none"

    certified = [r for r in scan.records if r.certified_by != UNCERTIFIED]
    uncertified = tuple(r for r in scan.records if r.certified_by == UNCERTIFIED)
    if not certified:
        return MultiplicityReport(
            model.name, t_min, t_max, route, (), uncertified, False, certificate
        )

    points = crossing_gap_points(model, tuple(certified))
    entries = []
    for i, record in enumerate(certified):
        u_w = points[i]  # collapse side of the crossing
        if model.is_product:
            witness = morse_index_product_at_usq(model, u_w)
        else:
            witness = trivial_count_at_usq(model, u_w)
        if witness < 1:
            raise NoWitnessError(
                f"index positivity near t ~ {record.t_approx:.6g} could not be "
                "certified from model data"
            )
        entries.append(
            MultiplicityEntry(
                record=record,
                witness_count=witness,
                witness_usq=u_w,
                conclusion=(
                    "at least 3 constant-scalar-curvature metrics in the "
                    f"conformal class for t arbitrarily close to {record.t_approx:.6g}"
                ),
            )
        )
    return MultiplicityReport(
        model.name,
        t_min,
        t_max,
        route,
        tuple(entries),
        uncertified,
        False,
        certificate,
    )
