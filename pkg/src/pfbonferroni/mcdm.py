"""Decision problems, ranking and parameter sweeps.

A :class:`DecisionProblem` holds ``m`` alternatives rated on ``n`` weighted
criteria with picture fuzzy numbers.  :func:`rank` normalizes cost columns,
aggregates each row with the normalized weighted interactional Bonferroni
mean and orders the results by score, then first and second accuracy.
The sweep functions repeat :func:`rank` over grids of ``(p, q)`` or ``gamma``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .bonferroni import BonferroniParams, WeightVector, as_params, pfinwbm
from .exceptions import DegenerateProblem, DomainError, InvalidPFN, LengthMismatch, OutOfDomainGamma
from .pfn import PFN, complement, score, sort_desc
from .tnorms import Family, TNormSpec, validate_spec


class Orientation(str, enum.Enum):
    BENEFIT = "benefit"
    COST = "cost"


@dataclass(frozen=True)
class Criterion:
    name: str
    orientation: Orientation = Orientation.BENEFIT

    def __post_init__(self):
        try:
            kind = Orientation(str(getattr(self.orientation, "value", self.orientation)).strip().lower())
        except ValueError:
            raise DomainError(
                f"criterion {self.name!r}: orientation must be 'benefit' or 'cost', got {self.orientation!r}"
            ) from None
        object.__setattr__(self, "name", str(self.name))
        object.__setattr__(self, "orientation", kind)


@dataclass(frozen=True)
class DecisionProblem:
    """An ``m x n`` picture fuzzy decision matrix with criterion weights.

    ``matrix[i][j]`` rates alternative ``i`` on criterion ``j``.  Plain
    ``(mu, eta, nu)`` triples are accepted and converted; a bad cell raises
    :class:`InvalidPFN` naming its row and column.
    """

    alternatives: Tuple[str, ...]
    criteria: Tuple[Criterion, ...]
    matrix: Tuple[Tuple[PFN, ...], ...]
    weights: WeightVector

    def __post_init__(self):
        alternatives = tuple(str(a) for a in self.alternatives)
        criteria = tuple(c if isinstance(c, Criterion) else Criterion(*_criterion_args(c)) for c in self.criteria)
        if not alternatives:
            raise DegenerateProblem("a decision problem needs at least one alternative")
        if len(criteria) < 2:
            raise DegenerateProblem(f"a decision problem needs at least 2 criteria, got {len(criteria)}")
        if len(set(alternatives)) != len(alternatives):
            raise DegenerateProblem("alternative names must be unique")
        if len(set(c.name for c in criteria)) != len(criteria):
            raise DegenerateProblem("criterion names must be unique")
        rows = list(self.matrix)
        if len(rows) != len(alternatives):
            raise LengthMismatch(f"matrix has {len(rows)} rows for {len(alternatives)} alternatives")
        matrix = []
        for i, row in enumerate(rows):
            row = list(row)
            if len(row) != len(criteria):
                raise LengthMismatch(
                    f"row {i} ({alternatives[i]}) has {len(row)} cells for {len(criteria)} criteria"
                )
            matrix.append(tuple(_cell(cell, i, j, alternatives, criteria) for j, cell in enumerate(row)))
        weights = self.weights if isinstance(self.weights, WeightVector) else WeightVector(tuple(self.weights))
        if len(weights) != len(criteria):
            raise LengthMismatch(f"{len(weights)} weights for {len(criteria)} criteria")
        object.__setattr__(self, "alternatives", alternatives)
        object.__setattr__(self, "criteria", criteria)
        object.__setattr__(self, "matrix", tuple(matrix))
        object.__setattr__(self, "weights", weights)

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.alternatives), len(self.criteria)


def _criterion_args(c):
    if isinstance(c, str):
        return (c,)
    if isinstance(c, dict):
        return c["name"], c.get("type", c.get("orientation", "benefit"))
    return tuple(c)


def _cell(cell, i, j, alternatives, criteria) -> PFN:
    where = f"matrix[{i}][{j}] ({alternatives[i]}, {criteria[j].name})"
    if isinstance(cell, PFN):
        return cell
    try:
        mu, eta, nu = cell
    except (TypeError, ValueError):
        raise InvalidPFN(f"expected [mu, eta, nu], got {cell!r}", location=where) from None
    try:
        return PFN(mu, eta, nu)
    except InvalidPFN as exc:
        raise InvalidPFN(str(exc), location=where) from None


def normalize(problem: DecisionProblem) -> DecisionProblem:
    """Complement every cost column so that all criteria read as benefits."""
    cost = [c.orientation is Orientation.COST for c in problem.criteria]
    if not any(cost):
        return problem
    matrix = tuple(
        tuple(complement(cell) if cost[j] else cell for j, cell in enumerate(row)) for row in problem.matrix
    )
    criteria = tuple(Criterion(c.name, Orientation.BENEFIT) for c in problem.criteria)
    return DecisionProblem(problem.alternatives, criteria, matrix, problem.weights)


@dataclass(frozen=True)
class RankingResult:
    alternatives: Tuple[str, ...]
    aggregated: Tuple[PFN, ...]
    scores: Tuple[float, ...]
    order: Tuple[int, ...]
    """Alternative indices from best to worst."""
    ranks: Tuple[int, ...] = field(init=False)
    """1-based rank position of each alternative, in input order."""

    def __post_init__(self):
        ranks = [0] * len(self.order)
        for position, i in enumerate(self.order, start=1):
            ranks[i] = position
        object.__setattr__(self, "ranks", tuple(ranks))

    @property
    def best(self) -> str:
        return self.alternatives[self.order[0]]

    def ordered_names(self) -> List[str]:
        return [self.alternatives[i] for i in self.order]

    def chain(self, sep: str = " ≻ ") -> str:
        return sep.join(self.ordered_names())


def rank(problem: DecisionProblem, spec: TNormSpec, params=BonferroniParams()) -> RankingResult:
    if len(problem.criteria) < 2:
        raise DegenerateProblem("ranking needs at least 2 criteria")
    params = as_params(params)
    problem = normalize(problem)
    aggregated = tuple(pfinwbm(spec, params, problem.weights, row) for row in problem.matrix)
    return RankingResult(
        alternatives=problem.alternatives,
        aggregated=aggregated,
        scores=tuple(score(r) for r in aggregated),
        order=tuple(sort_desc(aggregated)),
    )


def inclusive_grid(start: float, stop: float, step: float) -> List[float]:
    """``start, start + step, ...`` up to and including ``stop``.

    Points are computed as ``start + k * step`` so that rounding does not
    accumulate, and ``stop`` is kept when it is reached within 1e-9 steps.
    """
    start, stop, step = float(start), float(stop), float(step)
    if not all(math.isfinite(v) for v in (start, stop, step)):
        raise DomainError("grid bounds must be finite")
    if step <= 0:
        raise DomainError(f"grid step must be positive, got {step!r}")
    if stop < start:
        raise DomainError(f"grid stop {stop!r} is below start {start!r}")
    count = int(math.floor((stop - start) / step + 1e-9))
    points = [start + k * step for k in range(count + 1)]
    return [round(v, 12) for v in points]


@dataclass(frozen=True)
class SweepRow:
    family: str
    gamma: Optional[float]
    p: float
    q: float
    alternative: str
    score: Optional[float]
    rank: Optional[int]
    note: str = ""


@dataclass(frozen=True)
class SweepResult:
    """Long-format sweep output in grid order.

    A grid point that could not be evaluated contributes a single row with
    no alternative, score or rank and an explanatory ``note``.
    """

    rows: Tuple[SweepRow, ...]

    @property
    def evaluated(self) -> List[SweepRow]:
        return [r for r in self.rows if r.score is not None]

    @property
    def skipped(self) -> List[SweepRow]:
        return [r for r in self.rows if r.score is None]


def _nonempty(grid, what) -> List[float]:
    grid = [float(v) for v in grid]
    if not grid:
        raise DomainError(f"{what} grid is empty")
    return grid


def _rows_for(result: RankingResult, spec: TNormSpec, params: BonferroniParams) -> List[SweepRow]:
    return [
        SweepRow(spec.family.value, spec.gamma, params.p, params.q, name, result.scores[i], result.ranks[i])
        for i, name in enumerate(result.alternatives)
    ]


def _map(fn, items, executor):
    return list(executor.map(fn, items)) if executor is not None else [fn(x) for x in items]


def sweep_pq(
    problem: DecisionProblem,
    spec: TNormSpec,
    p_grid: Sequence[float],
    q_grid: Sequence[float],
    executor=None,
) -> SweepResult:
    """Rank once per ``(p, q)``; rows come out p-major, then q, then alternative.

    ``executor`` may be any :class:`concurrent.futures.Executor`; results are
    collected in grid order regardless of completion order.
    """
    points = [BonferroniParams(p, q) for p in _nonempty(p_grid, "p") for q in _nonempty(q_grid, "q")]
    results = _map(lambda params: rank(problem, spec, params), points, executor)
    rows = [row for params, result in zip(points, results) for row in _rows_for(result, spec, params)]
    return SweepResult(tuple(rows))


def sweep_gamma(
    problem: DecisionProblem,
    family,
    gamma_grid: Sequence[float],
    params=BonferroniParams(),
    executor=None,
) -> SweepResult:
    """Rank once per ``gamma``.  Out-of-domain values are skipped and reported."""
    family = Family.parse(family)
    params = as_params(params)
    points = []
    for gamma in _nonempty(gamma_grid, "gamma"):
        try:
            points.append(validate_spec(family, gamma))
        except OutOfDomainGamma as exc:
            points.append(SweepRow(family.value, gamma, params.p, params.q, "", None, None, f"skipped: {exc}"))
    specs = [s for s in points if isinstance(s, TNormSpec)]
    results = iter(_map(lambda spec: rank(problem, spec, params), specs, executor))
    rows = []
    for point in points:
        if isinstance(point, SweepRow):
            rows.append(point)
        else:
            rows.extend(_rows_for(next(results), point, params))
    return SweepResult(tuple(rows))
