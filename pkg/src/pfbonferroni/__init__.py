"""Picture fuzzy interactional Bonferroni means over strict t-norms.

The package is layered: :mod:`~pfbonferroni.tnorms` (strict t-norm families
and their additive generators), :mod:`~pfbonferroni.pfn` (picture fuzzy
numbers and their order), :mod:`~pfbonferroni.algebra` (operations induced
by a t-norm), :mod:`~pfbonferroni.bonferroni` (the aggregation operators),
:mod:`~pfbonferroni.mcdm` (ranking and sweeps) and :mod:`~pfbonferroni.io`
(problem files and reports).
"""

__version__ = "0.1.0"

from .algebra import pfn_add, pfn_mul, pfn_power, pfn_prod, pfn_scalar, pfn_sum, weighted_product, weighted_sum
from .bonferroni import (
    BonferroniParams,
    WeightVector,
    crisp_bm,
    normalized_coefficients,
    pfibm,
    pfibm_by_definition,
    pfinwbm,
    pfinwbm_by_definition,
    pfiwbm,
    pfiwbm_by_definition,
)
from .exceptions import (
    DegenerateProblem,
    DegenerateWeight,
    DomainError,
    EmptyInput,
    InvalidPFN,
    InvalidWeights,
    LengthMismatch,
    OutOfDomainGamma,
    ParseError,
    PictureFuzzyError,
    TooFewElements,
)
from .mcdm import Criterion, DecisionProblem, RankingResult, normalize, rank, sweep_gamma, sweep_pq
from .pfn import PFN, Ordering, accuracy1, accuracy2, compare, complement, make_pfn, refusal, score, sort_desc
from .tnorms import Family, TNormSpec, validate_spec

__all__ = [name for name in dir() if not name.startswith("_")]
