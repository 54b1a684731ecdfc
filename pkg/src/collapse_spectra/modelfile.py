"""JSON ingestion for submersion models.

The document shape is:

    {
      "name": "quaternionic-hopf",
      "fiber": {"space": {...}, "dim": 3, "scal": 6, "ricLower": 2},
      "base":  {"space": {...}, "dim": 4, "scal": 48},
      "aNormSq": "12"            -- or instead:  "calibrate": {"totalScalAtOne": 42},
      "flags": {"product": false, "homogeneous": true},
      "pinching": {"k1": 1, "k2": 1, "tau": 1, "ricMLowerAtTau": 6}   -- optional
    }

Every scalar is an exact rational: a JSON integer or a string "p/q".
JSON floats (and decimal strings) are rejected outright so that no
inexact value can leak into the crossing arithmetic.  Space descriptors:

    {"type": "sphere", "n": 2, "radius": "1/2"}
    {"type": "flat-torus", "gram": [[1, 0], [0, 1]]}
    {"type": "complex-projective", "n": 1}
    {"type": "quaternionic-projective", "n": 1}
    {"type": "so3", "radius": 1}
    {"type": "explicit", "entries": [["0", 1], ["pi2*4", 4]], "validBelow": "pi2*8"}

Explicit spectrum entries may carry the symbolic pi^2 unit ("pi2*4" for
4*pi^2); all other scalars are plain rationals.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .errors import ExactArithmeticError, ModelSchemaError
from .exactnum import Exact, parse_exact, parse_fraction
from .spectra import (
    ComplexProjective,
    EigenvalueEntry,
    Explicit,
    FlatTorus,
    QuaternionicProjective,
    SO3,
    SpaceDescriptor,
    Sphere,
)
from .submersion import SubmersionModel, calibrate_a_norm


@dataclass(frozen=True)
class PinchingData:
    """Pinching constants carried by the model file for certification runs."""

    k1: Fraction
    k2: Fraction
    tau: Fraction


@dataclass(frozen=True)
class LoadedModel:
    model: SubmersionModel
    pinching: Optional[PinchingData]


def _fail(where: str, message: str) -> ModelSchemaError:
    return ModelSchemaError(f"model schema violation at {where}: {message}")


def _require_keys(obj: dict, where: str, required: set[str], optional: set[str] = frozenset()):
    if not isinstance(obj, dict):
        raise _fail(where, "expected an object")
    keys = set(obj)
    missing = required - keys
    if missing:
        raise _fail(where, f"missing keys {sorted(missing)}")
    unknown = keys - required - optional
    if unknown:
        raise _fail(where, f"unknown keys {sorted(unknown)}")


def _scalar(value, where: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise _fail(where, f"floats are rejected, use integers or 'p/q' strings: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return parse_fraction(value)
        except ExactArithmeticError as exc:
            raise _fail(where, str(exc)) from None
    raise _fail(where, f"expected an exact rational, got {type(value).__name__}")


def _exact_scalar(value, where: str) -> Exact:
    if isinstance(value, str) and "pi2" in value:
        try:
            return parse_exact(value)
        except ExactArithmeticError as exc:
            raise _fail(where, str(exc)) from None
    return Exact(_scalar(value, where))


def _positive_int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise _fail(where, f"expected a positive integer, got {value!r}")
    return value


def _space(obj, where: str) -> SpaceDescriptor:
    if not isinstance(obj, dict) or "type" not in obj:
        raise _fail(where, "space descriptor needs a 'type' field")
    kind = obj["type"]
    try:
        if kind == "sphere":
            _require_keys(obj, where, {"type", "n"}, {"radius"})
            return Sphere(
                _positive_int(obj["n"], where),
                _scalar(obj.get("radius", 1), where + ".radius"),
            )
        if kind == "flat-torus":
            _require_keys(obj, where, {"type", "gram"})
            gram = obj["gram"]
            if not isinstance(gram, list) or not all(isinstance(r, list) for r in gram):
                raise _fail(where, "gram must be a list of rows")
            rows = tuple(
                tuple(_scalar(x, f"{where}.gram[{i}][{j}]") for j, x in enumerate(row))
                for i, row in enumerate(gram)
            )
            return FlatTorus(rows)
        if kind == "complex-projective":
            _require_keys(obj, where, {"type", "n"})
            return ComplexProjective(_positive_int(obj["n"], where))
        if kind == "quaternionic-projective":
            _require_keys(obj, where, {"type", "n"})
            return QuaternionicProjective(_positive_int(obj["n"], where))
        if kind == "so3":
            _require_keys(obj, where, {"type"}, {"radius"})
            return SO3(_scalar(obj.get("radius", 1), where + ".radius"))
        if kind == "explicit":
            _require_keys(obj, where, {"type", "entries", "validBelow"})
            entries = []
            for i, pair in enumerate(obj["entries"]):
                if not isinstance(pair, list) or len(pair) != 2:
                    raise _fail(where, f"entry {i} must be a [value, multiplicity] pair")
                entries.append(
                    EigenvalueEntry(
                        _exact_scalar(pair[0], f"{where}.entries[{i}]"),
                        _positive_int(pair[1], f"{where}.entries[{i}]"),
                    )
                )
            return Explicit(tuple(entries), _exact_scalar(obj["validBelow"], where))
    except ValueError as exc:
        raise _fail(where, str(exc)) from None
    raise _fail(where, f"unknown space type {kind!r}")


def parse_model(document: dict, source: str = "<memory>") -> LoadedModel:
    _require_keys(
        document,
        source,
        {"name", "fiber", "base", "flags"},
        {"aNormSq", "calibrate", "pinching"},
    )
    if ("aNormSq" in document) == ("calibrate" in document):
        raise _fail(source, "exactly one of 'aNormSq' and 'calibrate' must be present")
    name = document["name"]
    if not isinstance(name, str) or not name:
        raise _fail(source, "'name' must be a non-empty string")

    fiber = document["fiber"]
    _require_keys(fiber, f"{source}.fiber", {"space", "dim", "scal"}, {"ricLower"})
    base = document["base"]
    _require_keys(base, f"{source}.base", {"space", "dim", "scal"})
    flags = document["flags"]
    _require_keys(flags, f"{source}.flags", {"product", "homogeneous"})
    for key in ("product", "homogeneous"):
        if not isinstance(flags[key], bool):
            raise _fail(f"{source}.flags.{key}", "expected a boolean")

    fiber_space = _space(fiber["space"], f"{source}.fiber.space")
    base_space = _space(base["space"], f"{source}.base.space")
    fiber_dim = _positive_int(fiber["dim"], f"{source}.fiber.dim")
    base_dim = _positive_int(base["dim"], f"{source}.base.dim")
    for declared, space, where in (
        (fiber_dim, fiber_space, f"{source}.fiber"),
        (base_dim, base_space, f"{source}.base"),
    ):
        if space.dim is not None and space.dim != declared:
            raise _fail(where, f"declared dim {declared} != descriptor dim {space.dim}")

    scal_fiber = _scalar(fiber["scal"], f"{source}.fiber.scal")
    scal_base = _scalar(base["scal"], f"{source}.base.scal")
    if "aNormSq" in document:
        a_norm_sq = _scalar(document["aNormSq"], f"{source}.aNormSq")
    else:
        calibrate = document["calibrate"]
        _require_keys(calibrate, f"{source}.calibrate", {"totalScalAtOne"})
        a_norm_sq = calibrate_a_norm(
            scal_fiber,
            scal_base,
            _scalar(calibrate["totalScalAtOne"], f"{source}.calibrate.totalScalAtOne"),
        )

    pinching = None
    ric_total = None
    tau = None
    if "pinching" in document:
        block = document["pinching"]
        _require_keys(
            block, f"{source}.pinching", {"k1", "k2", "tau", "ricMLowerAtTau"}
        )
        pinching = PinchingData(
            k1=_scalar(block["k1"], f"{source}.pinching.k1"),
            k2=_scalar(block["k2"], f"{source}.pinching.k2"),
            tau=_scalar(block["tau"], f"{source}.pinching.tau"),
        )
        ric_total = _scalar(block["ricMLowerAtTau"], f"{source}.pinching.ricMLowerAtTau")
        tau = pinching.tau

    model = SubmersionModel(
        name=name,
        fiber_dim=fiber_dim,
        base_dim=base_dim,
        scal_fiber=scal_fiber,
        scal_base=scal_base,
        a_norm_sq=a_norm_sq,
        fiber_spectrum=fiber_space,
        base_spectrum=base_space,
        is_product=flags["product"],
        is_homogeneous_fibration=flags["homogeneous"],
        ric_fiber_lower=(
            _scalar(fiber["ricLower"], f"{source}.fiber.ricLower")
            if "ricLower" in fiber
            else None
        ),
        ric_total_lower_at_tau=ric_total,
        tau=tau,
    )
    return LoadedModel(model=model, pinching=pinching)


def load_model(path) -> LoadedModel:
    """Parse a model file; raises ModelSchemaError on any violation."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ModelSchemaError(f"cannot read model file {path}: {exc}") from None
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelSchemaError(f"malformed JSON in {path}: {exc}") from None
    return parse_model(document, source=str(path))


def bundled_model_path(name: str) -> Path:
    """Path of one of the models shipped with the package."""
    return Path(__file__).parent / "models" / f"{name}.json"
