"""Tensor-train approximation of univariate functions on [0, 1).

A function f on [0, 1) is identified with a (d+1)-way tensor by expanding
the argument in base b: the first d axes carry the digits, the last axis
carries the remainder through a polynomial leaf space. The tensor is stored
and manipulated in the tensor-train format, which makes ranks, complexity
measures and convergence experiments directly observable.
"""

from .grids import (
    Grid,
    MultiIndexPoint,
    LeafIndex,
    encode_point,
    decode_point,
    leaf_restriction,
    lp_norm_from_leaves,
)
from .basis import PolyBasis
from .train import TensorTrain, RankProfile, add, scale, orthogonalize, tt_round, ranks
from .encoders import (
    PiecewisePolynomial,
    WaveletSpec,
    encode_polynomial,
    encode_fixed_knot_spline,
    encode_free_knot_spline,
    encode_dilated,
    n_term_wavelet,
    encode_sawtooth,
    sawtooth_function,
    haar_mother,
    hat_mother,
)
from .interpolation import (
    Interpolator,
    interpolate_unit,
    tensor_interpolate,
    reinterpolate,
    chebyshev_truncate,
)
from .complexity import ComplexityReport, complexity, audit_bounds, default_audit_sweep
from .analysis import (
    StudyConfig,
    ErrorRecord,
    lp_error,
    rank_span_oracle,
    greedy_badic_knots,
    study_sobolev,
    study_analytic,
    study_adaptive,
    study_sawtooth,
)

__all__ = [
    "Grid",
    "MultiIndexPoint",
    "LeafIndex",
    "encode_point",
    "decode_point",
    "leaf_restriction",
    "lp_norm_from_leaves",
    "PolyBasis",
    "TensorTrain",
    "RankProfile",
    "add",
    "scale",
    "orthogonalize",
    "tt_round",
    "ranks",
    "PiecewisePolynomial",
    "WaveletSpec",
    "encode_polynomial",
    "encode_fixed_knot_spline",
    "encode_free_knot_spline",
    "encode_dilated",
    "n_term_wavelet",
    "encode_sawtooth",
    "sawtooth_function",
    "haar_mother",
    "hat_mother",
    "Interpolator",
    "interpolate_unit",
    "tensor_interpolate",
    "reinterpolate",
    "chebyshev_truncate",
    "ComplexityReport",
    "complexity",
    "audit_bounds",
    "default_audit_sweep",
    "StudyConfig",
    "ErrorRecord",
    "lp_error",
    "rank_span_oracle",
    "greedy_badic_knots",
    "study_sobolev",
    "study_analytic",
    "study_adaptive",
    "study_sawtooth",
]

__version__ = "0.1.0"
