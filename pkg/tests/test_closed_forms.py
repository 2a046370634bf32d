"""pfibm against the explicit per-family formulas and their IFN reductions."""

import random

import pytest

from family_closed_forms import CLOSED_FORMS, ctx, dombi_ifn, evaluate, product_ifn
from pfbonferroni.bonferroni import pfibm
from pfbonferroni.pfn import PFN
from pfbonferroni.tnorms import Family, TNormSpec
from strategies import FAMILIES, random_pfn, spec_from

INSTANCES = 100
TOLERANCE = 1e-8
# p + q stays small: the literal formulas need about (p + q)^(1/gamma) |ln x|
# digits for Aczel-Alsina, and are evaluated at that precision
PQ_RANGE = (0.1, 2.0)


def instance(rng, family):
    spec = spec_from(family, rng.random())
    xs = [random_pfn(rng) for _ in range(rng.randint(2, 4))]
    return spec, xs, rng.uniform(*PQ_RANGE), rng.uniform(*PQ_RANGE)


def random_ifn(rng):
    # mu > 0 and nu < 1, as the reduced Dombi formula divides by both
    mu = 1.0 - rng.random()
    return PFN(mu, 0.0, (1.0 - mu) * rng.random())


def gap(a, b):
    return max(abs(x - y) for x, y in zip(a, b))


def family_gap(family, seed=0, count=INSTANCES):
    """Largest deviation of pfibm from the family's own formula over seeded instances."""
    rng = random.Random(f"{family.value}-{seed}")
    worst = 0.0
    for _ in range(count):
        spec, xs, p, q = instance(rng, family)
        args = () if spec.gamma is None else (spec.gamma,)
        expected = evaluate(CLOSED_FORMS[family.value], xs, p, q, *args)
        worst = max(worst, gap(pfibm(spec, (p, q), xs), expected))
    return worst


@pytest.mark.parametrize("family", FAMILIES, ids=[f.value for f in FAMILIES])
def test_pfibm_matches_family_formula(family):
    assert family_gap(family) <= TOLERANCE


def test_product_ifn_reduction():
    rng = random.Random(3)
    spec = TNormSpec(Family.PRODUCT)
    for _ in range(INSTANCES):
        xs = [random_ifn(rng) for _ in range(rng.randint(2, 5))]
        p, q = rng.uniform(*PQ_RANGE), rng.uniform(*PQ_RANGE)
        r = pfibm(spec, (p, q), xs)
        assert r.eta == 0.0
        assert gap(r, evaluate(product_ifn, xs, p, q)) <= TOLERANCE


def test_dombi_ifn_reduction():
    rng = random.Random(4)
    for _ in range(INSTANCES):
        spec = spec_from(Family.DOMBI, rng.random())
        xs = [random_ifn(rng) for _ in range(rng.randint(2, 5))]
        p, q = rng.uniform(*PQ_RANGE), rng.uniform(*PQ_RANGE)
        r = pfibm(spec, (p, q), xs)
        assert r.eta == 0.0
        assert gap(r, evaluate(dombi_ifn, xs, p, q, spec.gamma)) <= TOLERANCE


def test_printed_product_neutral_term_is_a_misprint():
    # the printed product form repeats mu_i in its last factor; only the
    # corrected mu_i^p mu_j^q agrees with the generic closed form
    xs = [PFN(0.53, 0.33, 0.09), PFN(0.2, 0.5, 0.1)]
    p, q = 2.0, 1.0

    def as_printed(ys, p, q):
        pairs = [(ys[0], ys[1]), (ys[1], ys[0])]
        N = ctx.mpf(2)
        A = ctx.fprod(1 - a.mu**p * b.mu**q for a, b in pairs) ** (1 / N)
        B = ctx.fprod(
            (a.eta + a.mu) ** p * (b.eta + b.mu) ** q - a.mu**p * a.mu**q + 1 - (1 - a.nu) ** p * (1 - b.nu) ** q
            for a, b in pairs
        ) ** (1 / N)
        C = ctx.fprod(1 - (1 - a.nu) ** p * (1 - b.nu) ** q for a, b in pairs) ** (1 / N)
        s = 1 / (p + q)
        return (1 - A) ** s, (B - C + 1 - A) ** s - (1 - A) ** s, 1 - (1 - C) ** s

    r = pfibm(TNormSpec(Family.PRODUCT), (p, q), xs)
    assert gap(r, evaluate(CLOSED_FORMS["product"], xs, p, q)) <= 1e-12
    assert gap(r, evaluate(as_printed, xs, p, q)) > 1e-3
