"""Certified convergence and precompactness checks in sequence spaces.

Elements of l_p, c_0, c and l_2 are finite prefixes with symbolic tail
envelopes; families and sets are decided from coordinate behaviour plus
uniform smallness of the remainders R_K.
"""

__version__ = "0.1.0"

from .spaces import (
    DEFAULT_SLACK,
    Geometric,
    Interval,
    NormInterval,
    Power,
    SeqElement,
    SpaceKind,
    TailModel,
    ValidationError,
    Zero,
    coordinate,
    norm_bounds,
    tail_norm_bounds,
    unit_vector,
    zero_element,
)
from .basis import (
    BasisDescriptor,
    apply_R,
    apply_S,
    estimate_operator_norm,
    expand,
    reconstruct,
    rotation_basis,
    standard_basis,
    y_norm,
)
from .convergence import (
    Alternating,
    BasisShift,
    Constant,
    CoordinateEnvelope,
    FiniteFamily,
    GeometricRamp,
    PlateauShift,
    check_condition1,
    check_condition2,
    decide_c,
    decide_c0,
    decide_convergence,
    decide_hilbert,
    decide_lp,
    direct_norm_check,
)
from .compactness import (
    Ball,
    BasisVectors,
    FiniteSet,
    HilbertCube,
    check_bounded,
    check_precompact,
    check_uniform_tail_set,
)
from .verdict import Verdict

__all__ = [
    "__version__",
    "DEFAULT_SLACK",
    "Geometric",
    "Interval",
    "NormInterval",
    "Power",
    "SeqElement",
    "SpaceKind",
    "TailModel",
    "ValidationError",
    "Zero",
    "coordinate",
    "norm_bounds",
    "tail_norm_bounds",
    "unit_vector",
    "zero_element",
    "BasisDescriptor",
    "apply_R",
    "apply_S",
    "estimate_operator_norm",
    "expand",
    "reconstruct",
    "rotation_basis",
    "standard_basis",
    "y_norm",
    "Alternating",
    "BasisShift",
    "Constant",
    "CoordinateEnvelope",
    "FiniteFamily",
    "GeometricRamp",
    "PlateauShift",
    "check_condition1",
    "check_condition2",
    "decide_c",
    "decide_c0",
    "decide_convergence",
    "decide_hilbert",
    "decide_lp",
    "direct_norm_check",
    "Ball",
    "BasisVectors",
    "FiniteSet",
    "HilbertCube",
    "check_bounded",
    "check_precompact",
    "check_uniform_tail_set",
    "Verdict",
]
