"""odestab: parametric second-order ODE simulation with certified
Lipschitz stability bounds.

The package integrates problems x'' = f(t, x, x') by state augmentation,
evaluates closed-form deviation bounds for perturbed problems, ships
three application families (cocoercive operator systems, RLC circuits,
linear control systems), and runs perturbation sweeps that certify the
empirical deviations against the bounds.
"""

from .bounds import (
    BoundCoefficients,
    LipschitzData,
    PerovInput,
    cocoercive_coefficients,
    lcs_constants,
    lemma_gap,
    main_coefficients,
    perov_bound,
    rlc_coefficients,
    velocity_bound,
)
from .errors import (
    BadInitialError,
    ConfigError,
    DegenerateBoxError,
    DimMismatchError,
    GridMismatchError,
    HypothesisViolationError,
    InvalidAlphaError,
    NonfiniteStateError,
    OdeStabError,
)
from .harness import (
    LipschitzEstimate,
    SamplingBox,
    SweepReport,
    SweepRow,
    Verdict,
    certify,
    estimate_lipschitz,
    report_csv,
    report_json,
    sweep,
)
from .models import (
    CocoerciveModel,
    LCSModel,
    ObservationSpec,
    ParametricFamily,
    RLCModel,
    RLCVariant,
    cocoercive_family,
    default_cocoercive_model,
    default_rlc_model,
    family_from_config,
    green_kernel,
    lcs_family,
    observe,
    psd_modulus,
    rlc_family,
    rlc_integral_residual,
    section5_model,
    series_rlc_model,
    validate_cocoercivity,
    validate_model_config,
)
from .ode import (
    DeviationResult,
    FirstOrderIVP,
    NormKind,
    SecondOrderIVP,
    Trajectory,
    augment,
    deviation,
    integrate,
    trajectory_csv,
)
from .repro import load_default_config, run_fig3

__version__ = "0.1.0"
