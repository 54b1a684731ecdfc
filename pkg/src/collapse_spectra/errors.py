"""Exception hierarchy shared across the package."""


class CollapseSpectraError(Exception):
    """Base class for all package errors."""


class ExactArithmeticError(CollapseSpectraError):
    """An exact operation would leave the supported number towers."""


class SpectrumExhaustedError(CollapseSpectraError):
    """An explicit spectrum was queried beyond its declared validity bound."""

    def __init__(self, valid_below):
        self.valid_below = valid_below
        super().__init__(
            f"spectrum-exhausted: explicit spectrum only valid below {valid_below}"
        )


class NotAProductError(CollapseSpectraError):
    """Full deformed-spectrum enumeration requested for a non-product model."""

    def __init__(self, name=""):
        super().__init__(
            "not-a-product: the deformed spectrum of a non-product fibration "
            "cannot be enumerated from model data alone"
            + (f" (model {name!r})" if name else "")
        )


class HypothesisViolationError(CollapseSpectraError):
    """A theorem hypothesis needed by the requested certification fails."""

    def __init__(self, hypothesis):
        self.hypothesis = hypothesis
        super().__init__(f"hypothesis-violation: {hypothesis}")


class NoWitnessError(CollapseSpectraError):
    """Positivity of the Morse index could not be certified from model data."""

    def __init__(self, detail):
        super().__init__(f"no-witness: {detail}")


class InconsistentModelError(CollapseSpectraError):
    """Declared curvature data violate the submersion scalar-curvature identity."""


class ModelSchemaError(CollapseSpectraError):
    """A model file does not conform to the documented JSON schema."""
