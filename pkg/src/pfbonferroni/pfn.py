"""Picture fuzzy numbers, their score/accuracy functions and the total order."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Tuple

from .exceptions import InvalidPFN

# Slack allowed on mu + eta + nu <= 1 before a triple is rejected.
SUM_TOLERANCE = 1e-9
# Order keys are rounded to this many decimals before comparison.
ORDER_DECIMALS = 12


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class PFN:
    """A picture fuzzy number ``<mu, eta, nu>``.

    ``mu``, ``eta`` and ``nu`` are the positive, neutral and negative
    membership degrees.  They must lie in ``[0, 1]`` and sum to at most one;
    a sum exceeding one by no more than :data:`SUM_TOLERANCE` (floating-point
    residue from upstream arithmetic) is rescaled to sum to exactly one.

    The refusal degree ``1 - mu - eta - nu`` is kept alongside the three
    fields.  Results of the algebra set it directly, so that complements such
    as ``1 - nu`` stay accurate even when ``nu`` itself has rounded to 1.
    """

    mu: float
    eta: float
    nu: float

    def __post_init__(self):
        parts = []
        for name in ("mu", "eta", "nu"):
            raw = getattr(self, name)
            try:
                value = float(raw)
            except (TypeError, ValueError):
                raise InvalidPFN(f"{name}={raw!r} is not a real number") from None
            if math.isnan(value) or not 0.0 <= value <= 1.0:
                raise InvalidPFN(f"{name}={value!r} is outside [0, 1]")
            parts.append(value)
        total = math.fsum(parts)
        if total > 1.0 + SUM_TOLERANCE:
            raise InvalidPFN(f"mu + eta + nu = {total!r} exceeds 1")
        if total > 1.0:
            parts = [v / total for v in parts]
            total = 1.0
        for name, value in zip(("mu", "eta", "nu"), parts):
            object.__setattr__(self, name, value)
        object.__setattr__(self, "_refusal", max(0.0, 1.0 - total))
        object.__setattr__(self, "_wide", None)

    def __reduce__(self):
        # the extra-precision parts are a cache and are not pickled
        return _from_parts, (self.mu, self.eta, self.nu, self._refusal)

    def __iter__(self):
        yield self.mu
        yield self.eta
        yield self.nu

    def __str__(self):
        return format_pfn(self)

    @property
    def refusal(self) -> float:
        return refusal(self)

    @property
    def score(self) -> float:
        return score(self)

    def as_list(self) -> list:
        return [self.mu, self.eta, self.nu]


def make_pfn(mu, eta, nu) -> PFN:
    return PFN(mu, eta, nu)


def _clamp(v: float) -> float:
    if -SUM_TOLERANCE <= v < 0.0:
        return 0.0
    if 1.0 < v <= 1.0 + SUM_TOLERANCE:
        return 1.0
    return v


def _from_parts(mu: float, eta: float, nu: float, refusal: float = None, wide=None) -> PFN:
    # Internal constructor for computed results: rounding residue below
    # SUM_TOLERANCE outside [0, 1] is clamped before validation.  A known
    # refusal degree replaces the one recomputed from the rounded fields, and
    # ``wide`` keeps the unrounded (mu, eta, nu, refusal) of a result that was
    # computed with extra precision, for use by later operations.
    a = PFN(_clamp(mu), _clamp(eta), _clamp(nu))
    if refusal is not None:
        object.__setattr__(a, "_refusal", min(1.0, max(0.0, refusal)))
    object.__setattr__(a, "_wide", wide)
    return a


def score(a: PFN) -> float:
    return a.mu - a.nu


def accuracy1(a: PFN) -> float:
    return a.mu + a.nu


def accuracy2(a: PFN) -> float:
    # fsum is correctly rounded, so the value does not depend on the order of the parts
    return math.fsum((a.mu, a.eta, a.nu))


def refusal(a: PFN) -> float:
    return 1.0 - accuracy2(a)


def order_key(a) -> Tuple[float, float, float]:
    """``(score, accuracy1, accuracy2)`` rounded for comparison.

    Accepts any ``(mu, eta, nu)`` triple, not only validated PFNs, so that
    bound triples can be placed in the same order.
    """
    mu, eta, nu = a
    return (
        round(mu - nu, ORDER_DECIMALS),
        round(mu + nu, ORDER_DECIMALS),
        round(math.fsum((mu, eta, nu)), ORDER_DECIMALS),
    )


def compare(a, b) -> Ordering:
    """Lexicographic comparison on score, then first and second accuracy."""
    ka, kb = order_key(a), order_key(b)
    if ka < kb:
        return Ordering.LESS
    if ka > kb:
        return Ordering.GREATER
    return Ordering.EQUAL


def complement(a: PFN) -> PFN:
    return PFN(a.nu, a.eta, a.mu)


def sort_desc(items: Iterable[PFN]) -> list:
    """Indices of ``items`` from best to worst; exact ties keep input order."""
    items = list(items)
    return sorted(range(len(items)), key=lambda i: tuple(-k for k in order_key(items[i])))


def format_pfn(a, digits: int = 4) -> str:
    mu, eta, nu = a
    return f"⟨{mu:.{digits}f}, {eta:.{digits}f}, {nu:.{digits}f}⟩"
