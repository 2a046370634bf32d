"""Interactional Bonferroni means of picture fuzzy numbers.

Three aggregators share one skeleton: every ordered pair ``i != j`` yields a
pair term ``x_i^p (x) x_j^q``, the pair terms are combined with a weighted
generator-space sum, and the result is raised to ``1 / (p + q)``.

* :func:`pfibm` uses the uniform coefficient ``1 / (n (n - 1))``;
* :func:`pfiwbm` first scales each input by its weight, ``w_i . x_i``, then
  proceeds as :func:`pfibm` (it is not idempotent);
* :func:`pfinwbm` uses the coefficient ``w_i w_j / (1 - w_i)``.

The ``*_by_definition`` functions evaluate the same operators by literal
composition of the binary PFN operations (sum, product, scalar multiple,
power), folding left over the pairs.  They are
slower and exist to cross-check the closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Tuple, Union

from .algebra import pfn_add, pfn_mul, pfn_power, pfn_scalar, weighted_product, weighted_sum
from .exceptions import DegenerateWeight, DomainError, InvalidWeights, LengthMismatch, TooFewElements
from .pfn import PFN
from .tnorms import TNormSpec

WEIGHT_SUM_TOLERANCE = 1e-9


@dataclass(frozen=True)
class BonferroniParams:
    p: float = 1.0
    q: float = 1.0

    def __post_init__(self):
        for name in ("p", "q"):
            value = float(getattr(self, name))
            if not (value > 0 and math.isfinite(value)):
                raise DomainError(f"{name} must be a positive real, got {value!r}")
            object.__setattr__(self, name, value)


ParamsLike = Union[BonferroniParams, Tuple[float, float]]


def as_params(params: ParamsLike) -> BonferroniParams:
    if isinstance(params, BonferroniParams):
        return params
    p, q = params
    return BonferroniParams(p, q)


@dataclass(frozen=True)
class WeightVector:
    """Criterion weights in ``(0, 1]`` summing to one."""

    weights: Tuple[float, ...]

    def __post_init__(self):
        try:
            ws = tuple(float(w) for w in self.weights)
        except (TypeError, ValueError):
            raise InvalidWeights(f"weights must be real numbers, got {self.weights!r}") from None
        if not ws:
            raise InvalidWeights("weight vector is empty")
        for k, w in enumerate(ws):
            if not (0.0 < w <= 1.0):
                raise InvalidWeights(f"weight {k} = {w!r} is outside (0, 1]")
        total = math.fsum(ws)
        if abs(total - 1.0) > WEIGHT_SUM_TOLERANCE:
            raise InvalidWeights(f"weights sum to {total!r}, expected 1")
        object.__setattr__(self, "weights", ws)

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, k):
        return self.weights[k]


def as_weights(omega, n: int) -> WeightVector:
    if not isinstance(omega, WeightVector):
        omega = WeightVector(tuple(omega))
    if len(omega) != n:
        raise LengthMismatch(f"{len(omega)} weights for {n} arguments")
    return omega


def _check_arity(xs) -> list:
    xs = list(xs)
    if len(xs) < 2:
        raise TooFewElements(f"a Bonferroni mean needs at least 2 arguments, got {len(xs)}")
    return xs


def crisp_bm(p: float, q: float, xs: Sequence[float]) -> float:
    """Classical Bonferroni mean of non-negative reals."""
    xs = [float(x) for x in _check_arity(xs)]
    p, q = float(p), float(q)
    if p < 0 or q < 0 or not p + q > 0:
        raise DomainError(f"need p, q >= 0 with p + q > 0, got p={p!r}, q={q!r}")
    if any(x < 0 for x in xs):
        raise DomainError("crisp Bonferroni mean needs non-negative arguments")
    n = len(xs)
    total = math.fsum(xs[i] ** p * xs[j] ** q for i in range(n) for j in range(n) if i != j)
    return (total / (n * (n - 1))) ** (1.0 / (p + q))


def pair_term(spec: TNormSpec, params: ParamsLike, a: PFN, b: PFN) -> PFN:
    """``a^p (x) b^q`` evaluated in one generator-space pass."""
    params = as_params(params)
    return weighted_product(spec, (params.p, params.q), (a, b))


def normalized_coefficients(omega) -> list:
    """Matrix of ``w_i w_j / (1 - w_i)`` with zero diagonal; entries sum to one."""
    ws = list(omega)
    for k, w in enumerate(ws):
        if w >= 1.0:
            raise DegenerateWeight(f"weight {k} equals 1; the normalized coefficient divides by 1 - w")
    n = len(ws)
    return [[0.0 if i == j else ws[i] * ws[j] / (1.0 - ws[i]) for j in range(n)] for i in range(n)]


def _skeleton(spec, params, xs, coef) -> PFN:
    n = len(xs)
    weights, terms = [], []
    for i in range(n):
        for j in range(n):
            if i != j:
                weights.append(coef[i][j])
                terms.append(pair_term(spec, params, xs[i], xs[j]))
    inner = weighted_sum(spec, weights, terms)
    return pfn_power(spec, inner, 1.0 / (params.p + params.q))


def _uniform(n):
    c = 1.0 / (n * (n - 1))
    return [[c] * n for _ in range(n)]


def pfibm(spec: TNormSpec, params: ParamsLike, xs: Sequence[PFN]) -> PFN:
    xs = _check_arity(xs)
    return _skeleton(spec, as_params(params), xs, _uniform(len(xs)))


def pfiwbm(spec: TNormSpec, params: ParamsLike, omega, xs: Sequence[PFN]) -> PFN:
    xs = _check_arity(xs)
    omega = as_weights(omega, len(xs))
    scaled = [pfn_scalar(spec, w, a) for w, a in zip(omega, xs)]
    return _skeleton(spec, as_params(params), scaled, _uniform(len(xs)))


def pfinwbm(spec: TNormSpec, params: ParamsLike, omega, xs: Sequence[PFN]) -> PFN:
    xs = _check_arity(xs)
    omega = as_weights(omega, len(xs))
    return _skeleton(spec, as_params(params), xs, normalized_coefficients(omega))


# -- definition-level oracles ------------------------------------------------


def _fold_by_definition(spec, params, xs, coef, outer):
    acc = None
    n = len(xs)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            term = pfn_mul(spec, pfn_power(spec, xs[i], params.p), pfn_power(spec, xs[j], params.q))
            if coef is not None:
                term = pfn_scalar(spec, coef[i][j], term)
            acc = term if acc is None else pfn_add(spec, acc, term)
    if outer is not None:
        acc = pfn_scalar(spec, outer, acc)
    return pfn_power(spec, acc, 1.0 / (params.p + params.q))


def pfibm_by_definition(spec: TNormSpec, params: ParamsLike, xs: Sequence[PFN]) -> PFN:
    xs = _check_arity(xs)
    n = len(xs)
    return _fold_by_definition(spec, as_params(params), xs, None, 1.0 / (n * (n - 1)))


def pfiwbm_by_definition(spec: TNormSpec, params: ParamsLike, omega, xs: Sequence[PFN]) -> PFN:
    xs = _check_arity(xs)
    omega = as_weights(omega, len(xs))
    n = len(xs)
    scaled = [pfn_scalar(spec, w, a) for w, a in zip(omega, xs)]
    return _fold_by_definition(spec, as_params(params), scaled, None, 1.0 / (n * (n - 1)))


def pfinwbm_by_definition(spec: TNormSpec, params: ParamsLike, omega, xs: Sequence[PFN]) -> PFN:
    xs = _check_arity(xs)
    omega = as_weights(omega, len(xs))
    return _fold_by_definition(spec, as_params(params), xs, normalized_coefficients(omega), None)
