import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pfbonferroni.algebra import (
    pfn_add,
    pfn_mul,
    pfn_power,
    pfn_prod,
    pfn_scalar,
    pfn_sum,
    weighted_product,
    weighted_sum,
)
from pfbonferroni.exceptions import DomainError, EmptyInput, LengthMismatch
from pfbonferroni.pfn import PFN, SUM_TOLERANCE, complement
from pfbonferroni.tnorms import Family, TNormSpec, tconorm, tnorm
from strategies import FAMILIES, pfns, positive, spec_from, specs

PRODUCT = TNormSpec(Family.PRODUCT)
CASES = 500
LAW_TOL = 1e-10
CORNERS = [PFN(1, 0, 0), PFN(0, 1, 0), PFN(0, 0, 1), PFN(0, 0, 0), PFN(0.5, 0.5, 0), PFN(0, 0.5, 0.5)]


def assert_close(a, b, tol=LAW_TOL):
    diff = max(abs(x - y) for x, y in zip(a, b))
    assert diff <= tol, f"{a} vs {b}: max difference {diff:.3e}"


def assert_valid(a):
    for v in a:
        assert not math.isnan(v) and 0.0 <= v <= 1.0
    assert a.mu + a.eta + a.nu <= 1.0 + SUM_TOLERANCE


# -- pinned examples ---------------------------------------------------------


def test_product_examples():
    a, b = PFN(0.5, 0.2, 0.2), PFN(0.4, 0.3, 0.2)
    assert_close(pfn_add(PRODUCT, a, b), (0.7, 0.16, 0.04), 1e-15)
    assert_close(pfn_mul(PRODUCT, a, b), (0.2, 0.29, 0.36), 1e-15)
    third = PFN(1 / 3, 1 / 3, 1 / 3)
    assert_close(pfn_scalar(PRODUCT, 2.0, third), (5 / 9, 3 / 9, 1 / 9), 1e-15)


@pytest.mark.parametrize("family", FAMILIES)
def test_neutral_elements(family):
    spec = spec_from(family, 0.5)
    a = PFN(0.3, 0.25, 0.2)
    assert_close(pfn_add(spec, a, PFN(0, 0, 1)), a, 1e-14)
    assert_close(pfn_mul(spec, a, PFN(1, 0, 0)), a, 1e-14)
    assert_close(pfn_scalar(spec, 1.0, a), a, 1e-14)
    assert_close(pfn_power(spec, a, 1.0), a, 1e-14)


def test_singletons_and_errors():
    a = PFN(0.3, 0.25, 0.2)
    assert_close(pfn_sum(PRODUCT, [a]), a, 1e-15)
    assert_close(pfn_prod(PRODUCT, [a]), a, 1e-15)
    assert_close(weighted_sum(PRODUCT, [2.5], [a]), pfn_scalar(PRODUCT, 2.5, a), 1e-15)
    with pytest.raises(EmptyInput):
        pfn_sum(PRODUCT, [])
    with pytest.raises(LengthMismatch):
        weighted_sum(PRODUCT, [1.0, 1.0], [a])
    with pytest.raises(DomainError):
        pfn_scalar(PRODUCT, 0.0, a)
    with pytest.raises(DomainError):
        pfn_power(PRODUCT, a, -1.0)


# -- oracle: the operations written with scalar t-norm calls -----------------


def add_literal(spec, a, b):
    nu = tnorm(spec, a.nu, b.nu)
    return (tconorm(spec, a.mu, b.mu), tnorm(spec, a.eta + a.nu, b.eta + b.nu) - nu, nu)


def mul_literal(spec, a, b):
    mu = tnorm(spec, a.mu, b.mu)
    return (mu, tnorm(spec, a.eta + a.mu, b.eta + b.mu) - mu, tconorm(spec, a.nu, b.nu))


@settings(max_examples=CASES)
@given(specs(), pfns(), pfns())
def test_binary_ops_match_definition(spec, a, b):
    assert_close(pfn_add(spec, a, b), add_literal(spec, a, b), 1e-10)
    assert_close(pfn_mul(spec, a, b), mul_literal(spec, a, b), 1e-10)


# -- closure -----------------------------------------------------------------


@settings(max_examples=CASES)
@given(specs(), pfns(), pfns(), st.floats(1e-3, 50.0))
def test_closure(spec, a, b, lam):
    for result in (pfn_add(spec, a, b), pfn_mul(spec, a, b), pfn_scalar(spec, lam, a), pfn_power(spec, a, lam)):
        assert_valid(result)


@pytest.mark.parametrize("family", FAMILIES)
def test_boundary_inputs_never_give_nan(family):
    for u in (0.0, 0.5, 1.0):
        spec = spec_from(family, u)
        for a in CORNERS:
            for b in CORNERS:
                for result in (pfn_add(spec, a, b), pfn_mul(spec, a, b)):
                    assert_valid(result)
            for lam in (1e-3, 0.5, 2.0, 100.0):
                assert_valid(pfn_scalar(spec, lam, a))
                assert_valid(pfn_power(spec, a, lam))


# -- the ten laws ------------------------------------------------------------


@settings(max_examples=CASES)
@given(specs(), pfns(), pfns())
def test_commutativity(spec, a, b):
    assert_close(pfn_add(spec, a, b), pfn_add(spec, b, a))
    assert_close(pfn_mul(spec, a, b), pfn_mul(spec, b, a))


@settings(max_examples=CASES)
@given(specs(), pfns(), pfns(), pfns())
def test_associativity(spec, a, b, c):
    assert_close(pfn_add(spec, pfn_add(spec, a, b), c), pfn_add(spec, a, pfn_add(spec, b, c)))
    assert_close(pfn_mul(spec, pfn_mul(spec, a, b), c), pfn_mul(spec, a, pfn_mul(spec, b, c)))


@settings(max_examples=CASES)
@given(specs(), pfns(), positive, positive)
def test_exponent_and_scalar_addition(spec, a, xi, lam):
    assert_close(pfn_add(spec, pfn_scalar(spec, xi, a), pfn_scalar(spec, lam, a)), pfn_scalar(spec, xi + lam, a))
    assert_close(pfn_mul(spec, pfn_power(spec, a, xi), pfn_power(spec, a, lam)), pfn_power(spec, a, xi + lam))


@settings(max_examples=CASES)
@given(specs(), pfns(), pfns(), positive)
def test_distributivity(spec, a, b, lam):
    assert_close(pfn_scalar(spec, lam, pfn_add(spec, a, b)), pfn_add(spec, pfn_scalar(spec, lam, a), pfn_scalar(spec, lam, b)))
    assert_close(pfn_power(spec, pfn_mul(spec, a, b), lam), pfn_mul(spec, pfn_power(spec, a, lam), pfn_power(spec, b, lam)))


@settings(max_examples=CASES)
@given(specs(), pfns(), positive, positive)
def test_composition(spec, a, xi, lam):
    assert_close(pfn_scalar(spec, xi, pfn_scalar(spec, lam, a)), pfn_scalar(spec, lam * xi, a))
    assert_close(pfn_power(spec, pfn_power(spec, a, lam), xi), pfn_power(spec, a, lam * xi))


# -- duality and n-ary forms -------------------------------------------------


@settings(max_examples=CASES)
@given(specs(), pfns(), pfns(), positive)
def test_complement_duality(spec, a, b, lam):
    assert_close(complement(pfn_mul(spec, a, b)), pfn_add(spec, complement(a), complement(b)))
    assert_close(complement(pfn_power(spec, a, lam)), pfn_scalar(spec, lam, complement(a)))


@settings(max_examples=200)
@given(specs(), st.lists(pfns(), min_size=1, max_size=6))
def test_nary_forms_equal_folds(spec, xs):
    add, mul = xs[0], xs[0]
    for x in xs[1:]:
        add = pfn_add(spec, add, x)
        mul = pfn_mul(spec, mul, x)
    assert_close(pfn_sum(spec, xs), add)
    assert_close(pfn_prod(spec, xs), mul)


@settings(max_examples=200)
@given(specs(), st.lists(st.tuples(positive, pfns()), min_size=1, max_size=6))
def test_weighted_forms_equal_folds(spec, pairs):
    ws, xs = [w for w, _ in pairs], [x for _, x in pairs]
    add = mul = None
    for w, x in pairs:
        s, p = pfn_scalar(spec, w, x), pfn_power(spec, x, w)
        add = s if add is None else pfn_add(spec, add, s)
        mul = p if mul is None else pfn_mul(spec, mul, p)
    assert_close(weighted_sum(spec, ws, xs), add)
    assert_close(weighted_product(spec, ws, xs), mul)


@settings(max_examples=200)
@given(specs(), pfns(), st.integers(1, 6))
def test_integer_multiples_are_repeated_ops(spec, a, n):
    assert_close(pfn_sum(spec, [a] * n), pfn_scalar(spec, float(n), a))
    assert_close(pfn_prod(spec, [a] * n), pfn_power(spec, a, float(n)))


def test_precision_is_kept_when_parts_become_tiny():
    # mu and eta shrink far below double precision relative to nu;
    # the refusal degree carried alongside keeps 1 - nu accurate
    spec = spec_from(Family.FRANK, 0.55)
    a = PFN(0.2, 0.3, 0.4)
    big = pfn_power(spec, a, 400.0)
    assert_valid(big)
    back = pfn_power(spec, big, 1 / 400.0)
    assert_close(back, a, 1e-9)
