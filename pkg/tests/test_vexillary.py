import random

import pytest

from conftest import random_matching
from fpfschur.fpf import all_fpf, embed_iota, is_fpf_grassmannian, parse_fpf
from fpfschur.transition import expand_fpf_stanley
from fpfschur.vexillary import BAD_PATTERNS, classify_vexillary, is_fpf_vexillary, vexillary_witness

PATTERNS = [
    "(1,3)(2,4)(5,8)(6,7)",
    "(1,3)(2,5)(4,7)(6,8)",
    "(1,3)(2,5)(4,8)(6,7)",
    "(1,3)(2,6)(4,8)(5,7)",
    "(1,4)(2,3)(5,7)(6,8)",
    "(1,4)(2,3)(5,8)(6,7)",
    "(1,5)(2,3)(4,7)(6,8)",
    "(1,5)(2,3)(4,8)(6,7)",
    "(1,5)(2,4)(3,7)(6,8)",
    "(1,5)(2,4)(3,8)(6,7)",
    "(1,6)(2,3)(4,8)(5,7)",
    "(1,6)(2,4)(3,8)(5,7)",
    "(1,6)(2,5)(3,8)(4,7)",
    "(1,3)(2,4)(5,7)(6,9)(8,10)",
    "(1,3)(2,5)(4,6)(7,9)(8,10)",
    "(1,3)(2,4)(5,7)(6,8)(9,11)(10,12)",
]


def insert_cycle(line, a, b):
    """Add a new cycle ``(a, b)`` (positions in the enlarged matching)."""
    n = len(line) + 2
    old = [k for k in range(1, n + 1) if k not in (a, b)]
    out = [0] * n
    out[a - 1], out[b - 1] = b, a
    for i, v in enumerate(line, start=1):
        out[old[i - 1] - 1] = old[v - 1]
    return tuple(out)


def test_patterns_verbatim():
    assert [parse_fpf(p) for p in PATTERNS] == list(BAD_PATTERNS)


@pytest.mark.parametrize("text", PATTERNS)
def test_each_pattern_is_not_vexillary(text):
    z = parse_fpf(text)
    assert not is_fpf_vexillary(z)
    assert not is_fpf_vexillary(z, "oracle")
    assert sum(expand_fpf_stanley(z).coeffs.values()) >= 2


def test_first_pattern_fails():
    res = classify_vexillary(parse_fpf(PATTERNS[0]))
    assert not res.vexillary and res.witness == tuple(range(1, 9))


def test_small_fpf_all_vexillary():
    for n in (2, 4, 6):
        for z in all_fpf(n):
            assert is_fpf_vexillary(z)
            assert classify_vexillary(z).witness is None


@pytest.mark.parametrize("n, expected", [(2, 1), (4, 3), (6, 15), (8, 92), (10, 617)])
def test_counts(n, expected):
    assert sum(1 for z in all_fpf(n) if is_fpf_vexillary(z)) == expected


def test_pattern_matches_oracle_on_f10():
    for n in (8, 10):
        for z in all_fpf(n):
            assert is_fpf_vexillary(z) == is_fpf_vexillary(z, "oracle")


def test_pattern_matches_oracle_on_random_f12():
    rng = random.Random(7)
    for _ in range(1000):
        z = embed_iota(random_matching(12, rng))
        assert is_fpf_vexillary(z) == is_fpf_vexillary(z, "oracle")


def test_grassmannian_implies_vexillary():
    for n in range(2, 13, 2):
        for z in all_fpf(n):
            if is_fpf_grassmannian(z):
                assert is_fpf_vexillary(z)


def test_containment_is_monotone():
    rng = random.Random(11)
    bad = [z for z in all_fpf(8) if not is_fpf_vexillary(z)]
    for z in bad:
        line = z.matching(8)
        for _ in range(3):
            a, b = sorted(rng.sample(range(1, 11), 2))
            bigger = embed_iota(insert_cycle(line, a, b))
            assert not is_fpf_vexillary(bigger)


def test_witness_is_a_bad_pattern():
    base = parse_fpf(PATTERNS[4]).matching(8)
    z = embed_iota(insert_cycle(base, 3, 10))
    w = vexillary_witness(z)
    assert w is not None and all(z(a) in w for a in w)
    rank = {a: k for k, a in enumerate(w, start=1)}
    pattern = embed_iota(tuple(rank[z(a)] for a in w))
    assert pattern in BAD_PATTERNS


def test_margin_pruning_is_exact():
    for n in (6, 8):
        for z in all_fpf(n):
            pruned = vexillary_witness(z, margin=2) is None
            assert pruned == (vexillary_witness(z, margin=2, prune=False) is None)
    for k in range(4):
        z = parse_fpf(PATTERNS[0]).shift(2 * k)
        assert vexillary_witness(z, margin=3, prune=False) is not None


def test_bad_arguments():
    with pytest.raises(ValueError):
        is_fpf_vexillary(parse_fpf("(1,2)"), "guess")
    with pytest.raises(ValueError):
        vexillary_witness(parse_fpf("(1,2)"), margin=-1)
