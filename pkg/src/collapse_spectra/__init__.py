"""Exact spectral analysis of fiber-shrinking submersion metric families.

The package locates the fiber scales at which the constant-scalar-curvature
family g_t degenerates (the threshold scal(g_t)/(m-1) crosses a Laplace
eigenvalue), certifies which crossings are bifurcation values, and reports
the resulting multiplicity of solutions in the conformal classes.  All
crossing arithmetic is exact: rationals, rational multiples of pi^2, and
quadratic surds.
"""

from .bifurcation import (
    Certificate,
    DegeneracyRecord,
    DegeneracyScan,
    InequalityCheck,
    MultiplicityEntry,
    MultiplicityReport,
    certify_product_records,
    crossing_gap_points,
    degeneracy_values,
    equivariant_bifurcation_report,
    morse_index_product,
    multiplicity_report,
    pinching_certificate,
    smallest_degeneracies,
    threshold,
    trivial_count,
    verify_crossing,
)
from .errors import (
    CollapseSpectraError,
    ExactArithmeticError,
    HypothesisViolationError,
    InconsistentModelError,
    ModelSchemaError,
    NotAProductError,
    NoWitnessError,
    SpectrumExhaustedError,
)
from .exactnum import Exact, PiQuotient, QuadSurd, pi2_times, sqrt_exact
from .modelfile import LoadedModel, PinchingData, bundled_model_path, load_model
from .spectra import (
    ComplexProjective,
    EigenvalueEntry,
    Explicit,
    FlatTorus,
    QuaternionicProjective,
    SO3,
    SpectrumStream,
    Sphere,
    counting_below,
    eigenvalues_below,
    spectrum_of,
)
from .submersion import (
    DeformedScal,
    PositivityRoot,
    SubmersionModel,
    calibrate_a_norm,
    hopf_complex_model,
    hopf_octonionic_model,
    hopf_quaternionic_model,
    scal_positivity_root,
    scal_t,
)
from .variation import (
    ProductEntry,
    VariationEigenvalue,
    base_spectrum_in_variation,
    component_eigenvalue,
    product_candidate,
    product_spectrum_below,
    product_spectrum_below_usq,
)

__version__ = "0.1.0"
