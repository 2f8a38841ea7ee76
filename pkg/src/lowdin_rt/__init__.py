"""Löwdin symmetric orthogonalization as a bridge between the resource theories
of coherence and superposition."""
from ._config import backend
from .errors import *  # noqa: F401,F403
from .gram import (
    EigenSystem,
    GramMatrix,
    UniformOverlap,
    identity_gram,
    matrix_inv_sqrt,
    matrix_sqrt,
    spectral_decompose,
    uniform_gram,
    uniform_spectrum,
    validate,
)
from .states import (
    CoherentState,
    DensityCoefficients,
    SuperpositionState,
    make_coherent,
    make_superposition,
    pure_density,
    s_inner,
    sorted_probs,
)
from .lso import LowdinMap, UniformClosedForm, backward, build, forward, uniform_g, uniform_mu_kappa
from .golden import GoldenSpec, golden_from_coherent, golden_minus_2d, golden_plus, maximally_coherent
from .transform import (
    TransformReport,
    distill_coherence_prob,
    majorizes,
    max_coherence_transform_prob,
    superposition_distill,
    superposition_transform,
)
from .measures import (
    SweepRow,
    l1_measure,
    l1_of_state,
    l1_pair_qubit,
    rel_entropy_coherence,
    sweep_l1,
    zero_coherence_overlap,
)

__version__ = "0.1.0"
