"""Model-file schema: bundled files, exactness guards, rejection paths."""

from fractions import Fraction as F

import pytest

from collapse_spectra.errors import InconsistentModelError, ModelSchemaError
from collapse_spectra.exactnum import pi2_times
from collapse_spectra.modelfile import bundled_model_path, load_model, parse_model
from collapse_spectra.spectra import Explicit, FlatTorus, QuaternionicProjective

BUNDLED = ["complex-hopf", "quaternionic-hopf", "s2-x-t2", "torus-fibration", "s2-x-s2"]


@pytest.mark.parametrize("name", BUNDLED)
def test_bundled_models_load(name):
    loaded = load_model(bundled_model_path(name))
    assert loaded.model.name == name


def test_quaternionic_calibration_and_pinching():
    loaded = load_model(bundled_model_path("quaternionic-hopf"))
    model = loaded.model
    assert model.a_norm_sq == 12
    assert isinstance(model.base_spectrum, QuaternionicProjective)
    assert model.ric_fiber_lower == 2
    assert loaded.pinching.k2 == 1 and loaded.pinching.tau == 1


def test_s2xs2_fractional_constant():
    loaded = load_model(bundled_model_path("s2-x-s2"))
    assert loaded.pinching.k2 == F(1, 3)
    assert loaded.model.is_product


def test_torus_fibration_shape():
    model = load_model(bundled_model_path("torus-fibration")).model
    assert isinstance(model.fiber_spectrum, FlatTorus)
    assert model.scal_fiber == 0 and model.a_norm_sq == 0


def base_document():
    return {
        "name": "toy",
        "fiber": {"space": {"type": "sphere", "n": 2}, "dim": 2, "scal": 2},
        "base": {"space": {"type": "sphere", "n": 2}, "dim": 2, "scal": 2},
        "aNormSq": 0,
        "flags": {"product": True, "homogeneous": True},
    }


def test_parse_minimal_document():
    loaded = parse_model(base_document())
    assert loaded.model.total_dim == 4
    assert loaded.pinching is None


@pytest.mark.parametrize(
    "mutate,exception",
    [
        (lambda d: d["fiber"].update(scal=1.5), ModelSchemaError),
        (lambda d: d["fiber"].update(scal="0.25"), ModelSchemaError),
        (lambda d: d.update(calibrate={"totalScalAtOne": 4}), ModelSchemaError),
        (lambda d: d.pop("aNormSq"), ModelSchemaError),
        (lambda d: d.update(surprise=1), ModelSchemaError),
        (lambda d: d.pop("flags"), ModelSchemaError),
        (lambda d: d["flags"].update(product="yes"), ModelSchemaError),
        (lambda d: d["fiber"].update(dim=3), ModelSchemaError),
        (
            lambda d: d["base"].update(
                space={"type": "flat-torus", "gram": [[1, 2], [2, 1]]}
            ),
            ModelSchemaError,
        ),
        (lambda d: d.update(aNormSq=5), InconsistentModelError),
        (lambda d: d["fiber"].update(space={"type": "klein"}), ModelSchemaError),
    ],
)
def test_rejection_paths(mutate, exception):
    document = base_document()
    mutate(document)
    with pytest.raises(exception):
        parse_model(document)


def test_calibration_failure_is_inconsistent_model():
    document = base_document()
    del document["aNormSq"]
    document["calibrate"] = {"totalScalAtOne": 100}
    with pytest.raises(InconsistentModelError):
        parse_model(document)


def test_explicit_space_with_pi2_entries():
    document = base_document()
    document["base"] = {
        "space": {
            "type": "explicit",
            "entries": [["0", 1], ["pi2*4", 4], ["pi2*8", 4]],
            "validBelow": "pi2*12",
        },
        "dim": 2,
        "scal": 0,
    }
    loaded = parse_model(document)
    space = loaded.model.base_spectrum
    assert isinstance(space, Explicit)
    assert space.entries[1].value == pi2_times(4)
    assert space.valid_below == pi2_times(12)


def test_malformed_json_file(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ModelSchemaError):
        load_model(bad)
    with pytest.raises(ModelSchemaError):
        load_model(tmp_path / "missing.json")


def test_round_trip_documents_match_bundled(tmp_path):
    source = bundled_model_path("s2-x-t2")
    copy = tmp_path / "copy.json"
    copy.write_text(source.read_text())
    a = load_model(source)
    b = load_model(copy)
    assert a.model == b.model
