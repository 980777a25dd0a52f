import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cicyg2 import MultiPoly, coefficient, linear_form, truncated_mul
from known import CONFIGEX1, QUINTIC

CAPS = (1, 1, 1, 2, 3)


def x(i, caps=CAPS, c=1):
    return MultiPoly.variable(caps, i, c)


def test_linear_forms():
    assert linear_form(QUINTIC, 0) == MultiPoly((4,), {(1,): 5})
    assert linear_form(CONFIGEX1, 4) == x(0, c=2) + x(4)
    assert linear_form(CONFIGEX1, 2) == x(1) + x(2) + x(3)
    with pytest.raises(IndexError):
        linear_form(QUINTIC, 1)


def test_truncated_mul_examples():
    s = x(3) + x(4)
    assert truncated_mul(s, s) == MultiPoly(CAPS, {(0, 0, 0, 2, 0): 1, (0, 0, 0, 1, 1): 2, (0, 0, 0, 0, 2): 1})
    five = MultiPoly((4,), {(1,): 5})
    assert truncated_mul(five, five) == MultiPoly((4,), {(2,): 25})
    one = MultiPoly.variable((1,), 0)
    assert truncated_mul(one, one).is_zero()


def test_truncated_mul_rejects_mismatched_caps():
    with pytest.raises(ValueError):
        truncated_mul(MultiPoly.constant((1,), 1), MultiPoly.constant((2,), 1))


def test_coefficient():
    s = x(3) + x(4)
    assert coefficient(truncated_mul(s, s), (0, 0, 0, 1, 1)) == 2
    assert coefficient(MultiPoly.zero((2, 2)), (1, 2)) == 0
    assert coefficient(MultiPoly((4,), {(2,): 25}), (2,)) == 25
    with pytest.raises(ValueError):
        coefficient(MultiPoly.zero((2,)), (3,))


def test_zero_coefficients_are_pruned():
    p = x(0) - x(0)
    assert p.is_zero() and dict(p.terms) == {}
    assert p == MultiPoly.zero(CAPS)


def test_big_integers_are_exact():
    p = MultiPoly.constant((3,), 10**30) + x(0, (3,))
    cube = truncated_mul(truncated_mul(p, p), p)
    assert coefficient(cube, (0,)) == 10**90
    assert coefficient(cube, (3,)) == 1


@st.composite
def polys(draw, caps):
    n = draw(st.integers(0, 6))
    terms = {}
    for _ in range(n):
        exp = tuple(draw(st.integers(0, c)) for c in caps)
        terms[exp] = draw(st.integers(-10**6, 10**6))
    return MultiPoly(caps, terms)


SMALL_CAPS = (2, 1, 3)


@settings(max_examples=100)
@given(polys(SMALL_CAPS), polys(SMALL_CAPS), polys(SMALL_CAPS))
def test_ring_laws_under_truncation(p, q, r):
    assert truncated_mul(p, q) == truncated_mul(q, p)
    assert truncated_mul(truncated_mul(p, q), r) == truncated_mul(p, truncated_mul(q, r))
    assert truncated_mul(p, q + r) == truncated_mul(p, q) + truncated_mul(p, r)


def dense_product(p, q, m):
    """Naive convolution over every pair of exponent grids, no truncation."""
    out = {}
    grid = list(itertools.product(range(4), repeat=m))
    for e1 in grid:
        for e2 in grid:
            c = p.get(e1, 0) * q.get(e2, 0)
            if c:
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


@pytest.mark.parametrize("seed", range(20))
def test_mul_matches_dense_convolution(seed):
    rng = random.Random(seed)
    m = rng.randint(1, 4)
    caps = (6,) * m

    def rand_terms():
        return {tuple(rng.randint(0, 3) for _ in range(m)): rng.randint(-9, 9) for _ in range(rng.randint(0, 5))}

    p, q = rand_terms(), rand_terms()
    got = truncated_mul(MultiPoly(caps, p), MultiPoly(caps, q))
    assert dict(got.terms) == dense_product({e: c for e, c in p.items()}, q, m)
