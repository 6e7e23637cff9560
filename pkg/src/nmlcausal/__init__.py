"""Causal model selection for variable pairs by NML codelength.

Each of four models (independent, X -> Y, Y -> X, confounded) is scored by
its stochastic complexity in bits; the shortest description wins.  Discrete,
continuous and mixed pairs are supported.
"""

from .codelengths import ModelScore, model_codelengths, select
from .continuous import DEFAULT_BINS, cont, disc, grid_min, grid_scores, l_c2d, scale_to_unit
from .datagen import ScenarioSpec, generate, non_cyclic_direct
from .discrete import (
    CausalModel,
    JointCounts,
    ModelInapplicableError,
    codelength_confounded,
    codelength_directed,
    codelength_indep,
)
from .estimator import CausalPairSelector
from .function_search import init_function, optimize_function
from .nml import categorical_nll, log_multinomial_complexity, log_star, sc_categorical
from .report import Report, __version__
from .selector import InferenceResult, delta_confidence, infer, infer_continuous, infer_discrete, infer_mixed

__all__ = [
    "CausalModel",
    "CausalPairSelector",
    "DEFAULT_BINS",
    "InferenceResult",
    "JointCounts",
    "ModelInapplicableError",
    "ModelScore",
    "Report",
    "ScenarioSpec",
    "categorical_nll",
    "codelength_confounded",
    "codelength_directed",
    "codelength_indep",
    "cont",
    "delta_confidence",
    "disc",
    "generate",
    "grid_min",
    "grid_scores",
    "infer",
    "infer_continuous",
    "infer_discrete",
    "infer_mixed",
    "init_function",
    "l_c2d",
    "log_multinomial_complexity",
    "log_star",
    "model_codelengths",
    "non_cyclic_direct",
    "optimize_function",
    "sc_categorical",
    "scale_to_unit",
    "select",
    "__version__",
]
