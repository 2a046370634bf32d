"""Closed operations on picture fuzzy numbers induced by a strict t-norm.

All four operations (sum, product, scalar multiple, power) and their n-ary
forms are evaluated in generator space: each component is ``g^-1`` (or
``h^-1``) of a weighted sum of generator values.  Evaluation is in floats;
when a component comes out as a difference that cancels most of its digits,
the operation is repeated with the wide arithmetic of :mod:`.tnorms`.  There
a difference that still cancels is rebuilt to first order from the small
input part (a neutral or refusal degree) responsible for it, so that parts
many thousands of orders of magnitude apart stay resolved.  The binary-fold
versions are only used as test oracles.
"""

from __future__ import annotations

import math
from typing import Sequence

from .exceptions import DomainError, EmptyInput, LengthMismatch
from .pfn import PFN, _from_parts
from .tnorms import FLOAT, INF, WIDE, TNormSpec, _gen_pair, _inv_pair


def _positive(lam: float, what: str = "lambda") -> float:
    lam = float(lam)
    if not (lam > 0 and math.isfinite(lam)):
        raise DomainError(f"{what} must be a positive real, got {lam!r}")
    return lam


def pfn_add(spec: TNormSpec, a: PFN, b: PFN) -> PFN:
    return weighted_sum(spec, (1.0, 1.0), (a, b))


def pfn_mul(spec: TNormSpec, a: PFN, b: PFN) -> PFN:
    return weighted_product(spec, (1.0, 1.0), (a, b))


def pfn_scalar(spec: TNormSpec, lam: float, a: PFN) -> PFN:
    """``lam . a`` for ``lam > 0``."""
    return weighted_sum(spec, (_positive(lam),), (a,))


def pfn_power(spec: TNormSpec, a: PFN, lam: float) -> PFN:
    """``a ^ lam`` for ``lam > 0``."""
    return weighted_product(spec, (_positive(lam),), (a,))


def pfn_sum(spec: TNormSpec, xs: Sequence[PFN]) -> PFN:
    xs = list(xs)
    return weighted_sum(spec, [1.0] * len(xs), xs)


def pfn_prod(spec: TNormSpec, xs: Sequence[PFN]) -> PFN:
    xs = list(xs)
    return weighted_product(spec, [1.0] * len(xs), xs)


def _check_weighted(weights, xs):
    weights = [float(w) for w in weights]
    xs = list(xs)
    if not xs:
        raise EmptyInput("at least one PFN is required")
    if len(weights) != len(xs):
        raise LengthMismatch(f"{len(weights)} weights for {len(xs)} PFNs")
    for w in weights:
        _positive(w, "weight")
    return weights, xs


# A float evaluation is redone with wide arithmetic when a difference of two
# inverse-generator values keeps less than this fraction of their magnitude,
# or when an intermediate value leaves the range of floats.  A wide evaluation
# is redone with more digits until this many digits survive every difference.
CANCELLATION_LIMIT = 1e-3
SURVIVING_DIGITS = 25


class _LostPrecision(Exception):
    pass


def _g(spec, x, xc, m):
    value = _gen_pair(spec, x, xc, m)
    if m is FLOAT and value == INF and x > 0:
        raise _LostPrecision
    return value


def _inv(spec, y, m):
    value, comp = _inv_pair(spec, y, m)
    if m is FLOAT and y != INF and (value == 0.0 or (comp == 0.0 and y > 0)):
        raise _LostPrecision
    return y, value, comp


def _cancelled(m, d, base):
    if m is FLOAT:
        return d < CANCELLATION_LIMIT * base
    return d < m.num(10) ** (SURVIVING_DIGITS - m.digits) * base


def _slope(f, x, xc, m):
    # central difference of f(x, 1 - x) with a step far below min(x, 1 - x)
    s = min(x, xc) * m.num(10) ** (-(m.digits // 3))
    if not s > 0:
        raise _LostPrecision
    return (f(x - s, xc + s) - f(x + s, xc - s)) / (2 * s)


def _midpoint(f, x, xc, h, m):
    # f(x) - f(x + h) ~ -f'(x + h/2) h; trusted when the slopes at both ends
    # agree, which bounds the neglected curvature term
    mid = _slope(f, x + h / 2, xc - h / 2, m)
    ends = _slope(f, x, xc, m), _slope(f, x + h, xc - h, m)
    if not mid > 0 or abs(ends[0] - ends[1]) > m.num(10) ** (-(m.digits // 3)) * mid:
        raise _LostPrecision
    return mid * h


def _gen_drop(spec, m, x, xc, h):
    """``g(x) - g(x + h)`` for ``h >= 0`` without cancelling when ``h`` is tiny."""
    if h == 0:
        return m.zero
    high, low = _gen_pair(spec, x, xc, m), _gen_pair(spec, x + h, xc - h, m)
    d = high - low
    if high == m.inf or not _cancelled(m, d, high):
        return d
    return _midpoint(lambda u, uc: _gen_pair(spec, u, uc, m), x, xc, h, m)


def _inv_drop(spec, m, y, d):
    """``g^-1(y) - g^-1(y + d)`` for ``d >= 0``, the same way."""
    if d == 0 or y == m.inf:
        return m.zero
    _, hi, hi_c = _inv(spec, y, m)
    _, lo, lo_c = _inv(spec, y + d, m)
    base, diff = (hi, hi - lo) if hi <= 0.5 else (lo_c, lo_c - hi_c)
    if d == m.inf or not _cancelled(m, diff, base):
        return diff
    k = 0 if hi <= 0.5 else 1
    sign = 1 if k == 0 else -1
    return _midpoint(lambda u, _: sign * _inv_pair(spec, u, m)[k], y, m.inf, d, m)


def _diff(m, upper, lower, zero, linear):
    # g^-1(y_upper) - g^-1(y_lower) for y_upper <= y_lower, from whichever of
    # the values or their complements loses less to cancellation; ``zero``
    # flags a difference that vanishes because the matching inputs do.  When
    # too few digits survive, ``linear`` rebuilds the difference from the
    # small input part that caused it.
    _, hi, hi_c = upper
    _, lo, lo_c = lower
    if zero:
        return m.zero
    base, d = (hi, hi - lo) if hi <= 0.5 else (lo_c, lo_c - hi_c)
    if _cancelled(m, d, base):
        if m is FLOAT:
            raise _LostPrecision
        try:
            d = linear()
        except _LostPrecision:
            if m is not WIDE[-1]:
                raise
    return d if d > 0 else m.zero


def _zero_parts(xs):
    parts = [a._wide or (a.mu, a.eta, a.nu, a._refusal) for a in xs]
    return all(p[1] == 0 for p in parts), all(p[3] == 0 for p in parts)


def _parts(a: PFN, m):
    if m is not FLOAT and a._wide is not None:
        return a._wide
    return a.mu, a.eta, a.nu, a._refusal


def _drops(spec, m, weights, rows):
    # sum of w * (g(x) - g(x + h)) over (x, 1 - x, h) rows
    return m.fsum(w * _gen_drop(spec, m, x, xc, h) for w, (x, xc, h) in zip(weights, rows))


def _sum_parts(spec, weights, xs, m):
    parts = [_parts(a, m) for a in xs]
    pos, hes, neg = [], [], []
    for w, (mu, eta, nu, r) in zip(weights, parts):
        pos.append(w * _g(spec, m.fsum((eta, nu, r)), mu, m))
        hes.append(w * _g(spec, m.fsum((eta, nu)), m.fsum((mu, r)), m))
        neg.append(w * _g(spec, nu, m.fsum((mu, eta, r)), m))
    # 1 - mu, eta + nu and nu
    ys = m.fsum(pos), m.fsum(hes), m.fsum(neg)
    pos, hes, neg = (_inv(spec, y, m) for y in ys)
    no_eta, no_refusal = _zero_parts(xs)

    def eta_linear():
        rows = [(nu, m.fsum((mu, eta, r)), eta) for mu, eta, nu, r in parts]
        return _inv_drop(spec, m, ys[1], _drops(spec, m, weights, rows))

    def refusal_linear():
        rows = [(m.fsum((eta, nu)), m.fsum((mu, r)), r) for mu, eta, nu, r in parts]
        return _inv_drop(spec, m, ys[0], _drops(spec, m, weights, rows))

    eta = _diff(m, hes, neg, no_eta, eta_linear)
    refusal = _diff(m, pos, hes, no_refusal, refusal_linear)
    return pos[2], eta, neg[1], refusal


def _product_parts(spec, weights, xs, m):
    parts = [_parts(a, m) for a in xs]
    pos, hes, neg = [], [], []
    for w, (mu, eta, nu, r) in zip(weights, parts):
        pos.append(w * _g(spec, mu, m.fsum((eta, nu, r)), m))
        hes.append(w * _g(spec, m.fsum((mu, eta)), m.fsum((nu, r)), m))
        neg.append(w * _g(spec, m.fsum((mu, eta, r)), nu, m))
    # mu, mu + eta and 1 - nu
    ys = m.fsum(pos), m.fsum(hes), m.fsum(neg)
    pos, hes, neg = (_inv(spec, y, m) for y in ys)
    no_eta, no_refusal = _zero_parts(xs)

    def eta_linear():
        rows = [(mu, m.fsum((eta, nu, r)), eta) for mu, eta, nu, r in parts]
        return _inv_drop(spec, m, ys[1], _drops(spec, m, weights, rows))

    def refusal_linear():
        rows = [(m.fsum((mu, eta)), m.fsum((nu, r)), r) for mu, eta, nu, r in parts]
        return _inv_drop(spec, m, ys[2], _drops(spec, m, weights, rows))

    eta = _diff(m, hes, pos, no_eta, eta_linear)
    refusal = _diff(m, neg, hes, no_refusal, refusal_linear)
    return pos[1], eta, neg[2], refusal


def _evaluate(parts, spec, weights, xs) -> PFN:
    if not any(a._wide is not None for a in xs):
        try:
            return _from_parts(*parts(spec, weights, xs, FLOAT))
        except _LostPrecision:
            pass
    for m in WIDE:
        try:
            wide = parts(spec, weights, xs, m)
        except _LostPrecision:
            continue
        return _from_parts(*(float(v) for v in wide), wide=wide)


def weighted_sum(spec: TNormSpec, weights: Sequence[float], xs: Sequence[PFN]) -> PFN:
    """``w_1 . x_1 (+) ... (+) w_n . x_n`` in a single generator-space pass."""
    weights, xs = _check_weighted(weights, xs)
    return _evaluate(_sum_parts, spec, weights, xs)


def weighted_product(spec: TNormSpec, weights: Sequence[float], xs: Sequence[PFN]) -> PFN:
    """``x_1 ^ w_1 (x) ... (x) x_n ^ w_n`` in a single generator-space pass."""
    weights, xs = _check_weighted(weights, xs)
    return _evaluate(_product_parts, spec, weights, xs)
