"""Strict t-norms evaluated through their additive generators.

Every strict t-norm ``T`` has a continuous, strictly decreasing additive
generator ``g: [0, 1] -> [0, inf]`` with ``g(1) = 0`` and ``g(0) = inf`` so that
``T(x, y) = g^-1(g(x) + g(y))``.  The dual t-conorm is generated by the
co-generator ``h(x) = g(1 - x)``.  All PFN operations in this package reduce to
``g^-1(sum of lambda_i * g(x_i))`` expressions, so generators are the only
family-specific code.

Generator values live in the extended half line ``[0, inf]`` and are plain
Python floats: ``math.inf`` is a first-class value, sums involving ``inf``
saturate to ``inf`` and ``lam * inf == inf`` for ``lam > 0``.  Values at or
above :data:`SATURATION` count as ``inf``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Optional

import mpmath

from .exceptions import DomainError, OutOfDomainGamma

INF = math.inf
# Generator values at or above this are treated as +inf.
SATURATION = 1e300


class Family(str, enum.Enum):
    PRODUCT = "product"
    SCHWEIZER_SKLAR = "schweizer-sklar"
    HAMACHER = "hamacher"
    FRANK = "frank"
    DOMBI = "dombi"
    ACZEL_ALSINA = "aczel-alsina"

    @classmethod
    def parse(cls, value: "Family | str") -> "Family":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().replace("_", "-")
        aliases = {"ss": "schweizer-sklar", "aa": "aczel-alsina", "einstein": "hamacher"}
        key = aliases.get(key, key)
        try:
            return cls(key)
        except ValueError:
            names = ", ".join(f.value for f in cls)
            raise DomainError(f"unknown t-norm family {value!r}; expected one of {names}") from None


_DOMAINS = {
    Family.SCHWEIZER_SKLAR: "(-inf, 0)",
    Family.HAMACHER: "(0, +inf)",
    Family.FRANK: "(0, 1) U (1, +inf)",
    Family.DOMBI: "(0, +inf)",
    Family.ACZEL_ALSINA: "(0, +inf)",
}


def _gamma_ok(family: Family, gamma: float) -> bool:
    if not math.isfinite(gamma):
        return False
    if family is Family.SCHWEIZER_SKLAR:
        return gamma < 0
    if family is Family.FRANK:
        return gamma > 0 and gamma != 1
    return gamma > 0


@dataclass(frozen=True)
class TNormSpec:
    """A strict t-norm family together with its parameter.

    ``gamma`` is ``None`` for the product t-norm, which has no parameter.
    Instances are validated on construction; use :func:`validate_spec` to
    build one from loosely typed input.
    """

    family: Family
    gamma: Optional[float] = None

    def __post_init__(self):
        family = Family.parse(self.family)
        object.__setattr__(self, "family", family)
        if family is Family.PRODUCT:
            object.__setattr__(self, "gamma", None)
            return
        if self.gamma is None:
            raise OutOfDomainGamma(family.value, None, _DOMAINS[family])
        gamma = float(self.gamma)
        if not _gamma_ok(family, gamma):
            raise OutOfDomainGamma(family.value, gamma, _DOMAINS[family])
        object.__setattr__(self, "gamma", gamma)

    def __str__(self):
        if self.gamma is None:
            return self.family.value
        return f"{self.family.value}(gamma={self.gamma:g})"


def validate_spec(family, gamma=None) -> TNormSpec:
    """Build a :class:`TNormSpec`, raising :class:`OutOfDomainGamma` on a bad parameter."""
    return TNormSpec(Family.parse(family), gamma)


class _FloatMath:
    """Double-precision arithmetic with overflow mapped to ``inf``."""

    inf = INF
    zero = 0.0
    one = 1.0
    num = float
    fsum = staticmethod(math.fsum)
    log = staticmethod(math.log)
    log1p = staticmethod(math.log1p)

    @staticmethod
    def exp(t):
        return INF if t > 709.0 else math.exp(t)

    @staticmethod
    def expm1(t):
        return INF if t > 709.0 else math.expm1(t)

    @staticmethod
    def pow(base, e):
        try:
            return base**e
        except OverflowError:
            return INF


class _WideMath:
    """The same interface at a fixed number of significant digits."""

    def __init__(self, digits):
        c = mpmath.MPContext()
        c.dps = digits
        self.digits = digits
        self.inf, self.zero, self.one = c.inf, c.zero, c.one
        self.num = c.mpf
        self.fsum = c.fsum
        self.log, self.log1p = c.log, c.log1p
        self.exp, self.expm1 = c.exp, c.expm1
        self.pow = lambda base, e: base**e


# Operations on PFNs subtract inverse-generator values that may agree to many
# digits (a neutral degree of 1e-22 next to a negative degree of 1 - 1e-9,
# say).  Such operations are redone with these precisions in turn.
WORKING_DIGITS = (50, 200, 800, 3200)
FLOAT = _FloatMath()
WIDE = tuple(_WideMath(d) for d in WORKING_DIGITS)


# Per-family factories returning (gen, inv, cogen, coinv) over a backend
# ``m``.  ``gen`` receives x in (0, 1/2] and ``inv`` receives y in (0, inf);
# the endpoints are handled by the callers.  ``cogen(x) == gen(1 - x)`` and
# ``coinv(y) == 1 - inv(y)`` are written out per family so that arguments or
# results close to 0 keep their relative precision instead of being absorbed
# into ``1 - x``.


def _product(m, _gamma):
    return (
        lambda x: -m.log(x),
        lambda y: m.exp(-y),
        lambda x: -m.log1p(-x),
        lambda y: -m.expm1(-y),
    )


def _schweizer_sklar(m, gamma):
    # gen(x) = x**gamma - 1 with gamma < 0
    return (
        lambda x: m.expm1(gamma * m.log(x)),
        lambda y: m.exp(m.log1p(y) / gamma),
        lambda x: m.expm1(gamma * m.log1p(-x)),
        lambda y: -m.expm1(m.log1p(y) / gamma),
    )


def _hamacher(m, gamma):
    # gen(x) = log(gamma / x + 1 - gamma)
    def coinv(y):
        e = m.expm1(y)
        return 1 / (1 + gamma / e)

    return (
        lambda x: m.log1p(gamma * (1 - x) / x),
        lambda y: gamma / (m.expm1(y) + gamma),
        lambda x: m.log1p(gamma * x / (1 - x)),
        coinv,
    )


def _frank(m, gamma):
    # gen(x) = -log((gamma**x - 1) / (gamma - 1))
    log_g = m.log(gamma)
    denom = m.expm1(log_g)
    # gamma**(1 - x) - 1 == (gamma - 1) * (1 + ratio * expm1(-x log gamma))
    ratio = gamma / denom

    def gen(x):
        # a difference of logs, so that a subnormal x does not underflow
        t = m.expm1(x * log_g)
        return m.log(abs(denom)) - m.log(abs(t)) if t else m.inf

    return (
        gen,
        lambda y: m.log1p(denom * m.exp(-y)) / log_g,
        lambda x: -m.log1p(ratio * m.expm1(-x * log_g)),
        lambda y: -m.log1p(m.expm1(-y) / ratio) / log_g,
    )


def _dombi(m, gamma):
    # gen(x) = ((1 - x) / x)**gamma
    def coinv(y):
        r = m.pow(y, 1 / gamma)
        return r / (1 + r) if r < 1 else 1 / (1 + 1 / r)

    return (
        lambda x: m.pow((1 - x) / x, gamma),
        lambda y: 1 / (1 + m.pow(y, 1 / gamma)),
        lambda x: m.pow(x / (1 - x), gamma),
        coinv,
    )


def _aczel_alsina(m, gamma):
    # gen(x) = (-log x)**gamma
    return (
        lambda x: m.pow(-m.log(x), gamma),
        lambda y: m.exp(-m.pow(y, 1 / gamma)),
        lambda x: m.pow(-m.log1p(-x), gamma),
        lambda y: -m.expm1(-m.pow(y, 1 / gamma)),
    )


_FACTORIES = {
    Family.PRODUCT: _product,
    Family.SCHWEIZER_SKLAR: _schweizer_sklar,
    Family.HAMACHER: _hamacher,
    Family.FRANK: _frank,
    Family.DOMBI: _dombi,
    Family.ACZEL_ALSINA: _aczel_alsina,
}

_CACHE: dict = {}


def _funcs(spec: TNormSpec, m=FLOAT):
    key = (spec, id(m))
    funcs = _CACHE.get(key)
    if funcs is None:
        gamma = None if spec.gamma is None else m.num(spec.gamma)
        funcs = _FACTORIES[spec.family](m, gamma)
        _CACHE[key] = funcs
    return funcs


def _check_unit(x: float, what: str = "x") -> float:
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"{what}={x!r} is outside [0, 1]")
    return x


def _check_extended(y: float) -> float:
    y = float(y)
    if math.isnan(y) or y < 0.0:
        raise DomainError(f"generator value {y!r} is outside [0, +inf]")
    return y


def _gen_pair(spec: TNormSpec, x, xc, m=FLOAT):
    """``g(x)`` where ``xc == 1 - x`` is known to full relative precision."""
    if x == 0:
        return m.inf
    if xc == 0:
        return m.zero
    gen, _, cogen, _ = _funcs(spec, m)
    value = gen(m.num(x)) if x <= 0.5 else cogen(m.num(xc))
    if m is FLOAT and value >= SATURATION:
        return m.inf
    return value if value > 0 else m.zero


def _inv_pair(spec: TNormSpec, y, m=FLOAT):
    """``(g^-1(y), 1 - g^-1(y))``, each accurate on its own."""
    if y == 0:
        return m.one, m.zero
    if y == m.inf or (m is FLOAT and y >= SATURATION):
        return m.zero, m.one
    _, inv, _, coinv = _funcs(spec, m)
    y = m.num(y)
    value, co = min(m.one, max(m.zero, inv(y))), min(m.one, max(m.zero, coinv(y)))
    # the smaller of the two carries the precision; 1 - small rounds only once
    return (m.one - co, co) if co < value else (value, m.one - value)


def generator(spec: TNormSpec, x: float) -> float:
    """Additive generator ``g(x)``: strictly decreasing, ``g(1) = 0``, ``g(0) = inf``."""
    x = _check_unit(x)
    return _gen_pair(spec, x, 1.0 - x)


def generator_inv(spec: TNormSpec, y: float) -> float:
    """Inverse generator, clamped to ``[0, 1]``; ``g^-1(0) = 1`` and ``g^-1(inf) = 0``."""
    return _inv_pair(spec, _check_extended(y))[0]


def cogenerator(spec: TNormSpec, x: float) -> float:
    """``h(x) = g(1 - x)``, the additive generator of the dual t-conorm."""
    x = _check_unit(x)
    return _gen_pair(spec, 1.0 - x, x)


def cogenerator_inv(spec: TNormSpec, y: float) -> float:
    """``h^-1(y) = 1 - g^-1(y)``, evaluated without the subtraction."""
    return _inv_pair(spec, _check_extended(y))[1]


def tnorm(spec: TNormSpec, x: float, y: float) -> float:
    return generator_inv(spec, generator(spec, x) + generator(spec, y))


def tconorm(spec: TNormSpec, x: float, y: float) -> float:
    return cogenerator_inv(spec, cogenerator(spec, x) + cogenerator(spec, y))


def tnorm_n(spec: TNormSpec, xs: Iterable[float]) -> float:
    """n-ary t-norm; the empty list gives 1."""
    return generator_inv(spec, math.fsum(generator(spec, x) for x in xs))


def tconorm_n(spec: TNormSpec, xs: Iterable[float]) -> float:
    """n-ary t-conorm; the empty list gives 0."""
    return cogenerator_inv(spec, math.fsum(cogenerator(spec, x) for x in xs))


def scaled_generator_apply(spec: TNormSpec, lam: float, x: float, mode: str = "generator") -> float:
    """``g^-1(lam * g(x))`` or, with ``mode="cogenerator"``, ``h^-1(lam * h(x))``."""
    lam = float(lam)
    if not lam > 0 or math.isinf(lam):
        raise DomainError(f"scale factor must be a positive real, got {lam!r}")
    if mode == "generator":
        return generator_inv(spec, lam * generator(spec, x))
    if mode == "cogenerator":
        return cogenerator_inv(spec, lam * cogenerator(spec, x))
    raise ValueError(f"mode must be 'generator' or 'cogenerator', got {mode!r}")

