import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from fpfschur.fpf import embed_iota
from fpfschur.polyring import LaurentPoly

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@st.composite
def matchings(draw, max_n=10, min_n=0):
    """One-line perfect matchings of ``[n]`` for even ``n``."""
    n = 2 * draw(st.integers(min_n // 2, max_n // 2))
    points = draw(st.permutations(list(range(1, n + 1))))
    line = [0] * n
    for a, b in zip(points[::2], points[1::2]):
        line[a - 1], line[b - 1] = b, a
    return tuple(line)


def fpf_involutions(max_n=10, min_n=0):
    return matchings(max_n, min_n).map(embed_iota)


@st.composite
def laurent_polys(draw, nvars=4, max_terms=4, low=-2, high=3):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        exps = tuple(draw(st.integers(low, high)) for _ in range(nvars))
        terms[exps] = draw(st.integers(-5, 5))
    return LaurentPoly(terms)


def random_matching(n, rng):
    points = list(range(1, n + 1))
    rng.shuffle(points)
    line = [0] * n
    for a, b in zip(points[::2], points[1::2]):
        line[a - 1], line[b - 1] = b, a
    return tuple(line)


@pytest.fixture
def rng():
    return random.Random(20240601)


TREE_EXAMPLE = "(1,2)(3,7)(4,6)(5,10)(8,11)(9,12)"
