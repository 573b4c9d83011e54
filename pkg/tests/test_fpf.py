import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import TREE_EXAMPLE, fpf_involutions, matchings
from fpfschur.atoms import beta_min
from fpfschur.fpf import (
    FpfInvolution,
    all_fpf,
    bruhat_cover_check,
    classify,
    ell_fpf,
    embed_iota,
    essential_set,
    fpf_descents,
    fpf_diagram_code_shape,
    fpf_shape,
    fpf_stats,
    grassmannian_data,
    is_fpf_dominant,
    map_F,
    map_I,
    max_visible_inversion,
    parse_fpf,
    pattern_restrict,
    visible_data,
    visible_descents,
)
from fpfschur.partitions import is_strict, transpose
from fpfschur.perm import Permutation, diagram_code_shape, parse_permutation


def brute_ell(z, pad=4):
    lo, hi = z.lo - pad, z.hi + pad
    inv = [(i, j) for i in range(lo, hi + 1) for j in range(i + 1, hi + 1) if z(i) > z(j)]
    cyc = [(i, j) for i, j in inv if z(i) == j]
    assert (len(inv) - len(cyc)) % 2 == 0
    return (len(inv) - len(cyc)) // 2


def brute_visible(z, pad=4):
    lo, hi = z.lo - pad, z.hi + pad
    return {(i, j) for i in range(lo, hi + 1) for j in range(i + 1, hi + 1) if z(j) < min(i, z(i))}


def brute_diagram(z, n):
    return {(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if j < i < z(j) and j < z(i)}


def nest_cross(line):
    pairs = [(a, b) for a, b in enumerate(line, start=1) if a < b]
    nest = cross = 0
    for (a, b), (c, d) in itertools.combinations(sorted(pairs), 2):
        if d < b:
            nest += 1
        elif c < b:
            cross += 1
    return nest, cross


# -- embedding, parsing, printing --------------------------------------------


def test_theta_embeds_to_canonical_theta():
    for n in (2, 4, 8):
        assert embed_iota([i + 1 if i % 2 else i - 1 for i in range(1, n + 1)]) == FpfInvolution.theta()


def test_matching_example():
    z = parse_fpf("(1,6)(2,7)(3,4)(5,8)")
    assert z.matching(8) == (6, 7, 4, 3, 8, 1, 2, 5)
    assert z.cycles() == [(1, 6), (2, 7), (3, 4), (5, 8)]
    assert z(9) == 10 and z(0) == -1


def test_theta_continuation():
    z = parse_fpf("(1,4)(2,3)")
    assert z(5) == 6 and z(6) == 5 and z(-1) == 0


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        embed_iota((2, 1, 3))
    with pytest.raises(ValueError):
        embed_iota((1, 2))
    with pytest.raises(ValueError):
        parse_fpf("(1,2)(2,3)")
    with pytest.raises(ValueError):
        FpfInvolution(1, (2, 1))


def test_string_forms():
    z = parse_fpf(TREE_EXAMPLE)
    assert str(z) == TREE_EXAMPLE
    assert str(FpfInvolution.theta()) == "Theta"
    assert parse_fpf("4321") == parse_fpf("(1,4)(2,3)")
    assert str(parse_fpf("(1,2)(3,8)(4,5)(6,7)")) == "(1,2)(3,8)(4,5)(6,7)"


@given(fpf_involutions(12))
def test_json_round_trip(z):
    assert FpfInvolution.from_json(z.to_json()) == z
    assert parse_fpf(str(z)) == z if not z.is_theta() else True


@given(fpf_involutions(10), st.integers(-3, 3))
def test_even_shift(z, k):
    shifted = z.shift(2 * k)
    assert all(shifted(i + 2 * k) == z(i) + 2 * k for i in range(z.lo - 2, z.hi + 3))
    assert shifted.normalized() == z.normalized()
    assert ell_fpf(shifted) == ell_fpf(z)
    with pytest.raises(ValueError):
        z.shift(2 * k + 1)


def test_all_fpf_counts_are_double_factorials():
    assert [sum(1 for _ in all_fpf(n)) for n in range(0, 11, 2)] == [1, 1, 3, 15, 105, 945]


# -- statistics --------------------------------------------------------------


def test_length_examples():
    assert ell_fpf(FpfInvolution.theta()) == 0
    s = fpf_stats(FpfInvolution.theta())
    assert not s.inv_fpf and not s.des_R_fpf and not s.cycles
    assert ell_fpf(parse_fpf("(1,3)(2,4)")) == 1
    assert ell_fpf(parse_fpf("(1,4)(2,3)")) == 2
    f4 = sorted(all_fpf(4), key=ell_fpf)
    assert [ell_fpf(z) for z in f4] == [0, 1, 2]


def test_length_is_nestings_plus_crossings_on_f10():
    for z in all_fpf(10):
        nest, cross = nest_cross(z.matching(10))
        assert ell_fpf(z) == 2 * nest + cross == brute_ell(z)
        s = fpf_stats(z)
        assert len(s.inv_fpf) == 2 * s.ell_fpf


@given(fpf_involutions(12))
def test_descent_conjugation_drops_length(z):
    for i in fpf_descents(z):
        assert ell_fpf(z.conjugate_simple(i)) == ell_fpf(z) - 1
    for i in range(z.lo - 2, z.hi + 2):
        if i not in fpf_descents(z) and z(i) != i + 1:
            assert ell_fpf(z.conjugate_simple(i)) == ell_fpf(z) + 1


def test_visible_examples():
    assert visible_data(FpfInvolution.theta()) == (frozenset(), frozenset(), None)
    inv, des, mx = visible_data(parse_fpf("4321"))
    assert inv == {(2, 4), (3, 4)} and des == {3} and mx == (3, 4)
    z = parse_fpf(TREE_EXAMPLE)
    assert visible_data(z)[2] == max(brute_visible(z)) == max_visible_inversion(z)


def test_visible_data_against_beta_min_on_f8():
    for z in all_fpf(8):
        inv, des, mx = visible_data(z)
        b = beta_min(z)
        n = 8
        line = b.oneline(n)
        binv = {(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if line[i - 1] > line[j - 1]}
        assert inv == binv == brute_visible(z)
        assert des == set(b.right_descents()) == set(visible_descents(z))
        assert mx == (max(inv) if inv else None) == max_visible_inversion(z)


# -- diagrams ----------------------------------------------------------------


def test_diagram_examples():
    d = fpf_diagram_code_shape(parse_fpf("(1,4)(2,5)(3,6)"))
    assert d.diagram == {(2, 1), (3, 1), (3, 2)}
    assert d.code[:3] == (0, 1, 2)
    d = fpf_diagram_code_shape(parse_fpf("4321"))
    assert d.diagram == {(2, 1), (3, 1)} and d.nu == (2,)
    d = fpf_diagram_code_shape(FpfInvolution.theta())
    assert not d.diagram and sum(d.code) == 0 and d.nu == ()


def test_diagram_invariants_on_f10():
    for z in all_fpf(10):
        d = fpf_diagram_code_shape(z)
        assert d.diagram == brute_diagram(z, 10)
        assert sum(d.code) == ell_fpf(z)
        assert not any(i == 1 for i, _ in d.diagram)
        assert d.nu == transpose(sorted(d.code, reverse=True))
        assert is_strict(d.nu)
        c = diagram_code_shape(beta_min(z)).code
        assert tuple(c) + (0,) * (len(d.code) - len(c)) == tuple(d.code) + (0,) * (len(c) - len(d.code))


def test_beta_min_code_example():
    c = diagram_code_shape(parse_permutation("1342")).code
    assert tuple(c) == fpf_diagram_code_shape(parse_fpf("(1,4)(2,3)")).code[: len(c)]


def test_single_visible_descent_equivalences_on_f10():
    for z in all_fpf(10):
        vd = visible_descents(z)
        d = fpf_diagram_code_shape(z)
        code = list(d.code) + [0] * 12
        ess = essential_set(d.diagram)
        desc_b = beta_min(z).right_descents()
        for m in range(1, 11):
            a = vd == [m]
            b = (
                code[0] == 0
                and code[m - 1] != 0
                and all(c == 0 for c in code[m:])
                and all(code[i] <= code[i + 1] for i in range(1, m - 1))
            )
            c = bool(ess) and all(i == m for i, _ in ess)
            dd = desc_b == [m]
            assert a == b == c == dd, (z, m)


# -- I and F -----------------------------------------------------------------


def test_map_examples():
    assert map_I(FpfInvolution.theta()) == Permutation()
    assert map_I(parse_fpf("(1,4)(2,3)")) == parse_permutation("(1,4)")
    assert map_F(parse_permutation("(1,4)(2,5)")) == parse_fpf("(1,4)(2,5)(3,6)")
    with pytest.raises(ValueError):
        map_F(parse_permutation("231"))


@given(fpf_involutions(14))
def test_F_after_I_is_identity(z):
    y = map_I(z)
    assert y.is_involution()
    assert map_F(y) == z
    assert y.is_identity() == z.is_theta()


@given(fpf_involutions(12), st.integers(-2, 2))
def test_F_after_I_on_shifted_values(z, k):
    v = z.shift(2 * k)
    assert map_F(map_I(v)) == v


# -- classification ----------------------------------------------------------


def test_classify_examples():
    dom, grass, data = classify(parse_fpf("4321"))
    assert grass and data.phi == (1,) and data.n == 3 and data.nu == (2,)
    assert is_fpf_dominant(parse_fpf("(1,7)(2,4)(3,5)(6,8)"))
    assert classify(FpfInvolution.theta())[1]


def test_grassmannian_shape_matches_diagram_shape_on_f12():
    for z in all_fpf(12):
        data = grassmannian_data(z)
        if data is not None:
            assert data.nu == fpf_shape(z)
            assert data.involution() == z


def _odd_gap_form(z):
    """Some ``y`` with ``F(y) = z`` has the form ``(phi_1, n+1) ... (phi_r,
    n+r)`` with every ``phi_i - phi_{i-1}`` odd, where ``phi_0 = 0``."""
    data = grassmannian_data(z)
    if data is None:
        return False
    if not data.phi:
        return True
    candidates = [(data.phi, data.n)] + [((a,) + data.phi, data.n - 1) for a in range(1, data.phi[0])]
    for phi, n in candidates:
        if phi[-1] > n:
            continue
        y = Permutation.from_cycles([(p, n + k) for k, p in enumerate(phi, start=1)])
        if map_F(y) == z and all((b - a) % 2 for a, b in zip((0,) + phi, phi)):
            return True
    return False


def test_at_most_one_visible_descent_characterization():
    for n in range(0, 13, 2):
        for z in all_fpf(n):
            assert (len(visible_descents(z)) <= 1) == _odd_gap_form(z)


def test_visible_descent_counts_and_recurrence():
    k = [sum(1 for z in all_fpf(n) if len(visible_descents(z)) <= 1) for n in range(2, 13, 2)]
    assert k == [1, 3, 9, 23, 53, 115]
    for m in range(1, len(k)):
        assert k[m] == 2 * k[m - 1] + 2 * (m + 1) - 3


# -- patterns ----------------------------------------------------------------


def test_restriction_examples():
    z = parse_fpf(TREE_EXAMPLE)
    std, fstd = pattern_restrict(z, {3, 7})
    assert std == parse_permutation("21") and fstd == FpfInvolution.theta()
    window = range(3, 13)
    std, fstd = pattern_restrict(z, window)
    assert fstd == parse_fpf("(1,5)(2,4)(3,8)(6,9)(7,10)")
    with pytest.raises(ValueError):
        pattern_restrict(z, {3, 4})


@given(matchings(10, 2), st.data())
def test_restriction_preserves_grassmannian(line, data):
    z = embed_iota(line)
    cyc = [(a, b) for a, b in enumerate(line, start=1) if a < b]
    chosen = data.draw(st.lists(st.sampled_from(cyc), min_size=1, unique=True))
    E = {p for c in chosen for p in c}
    std, fstd = pattern_restrict(z, E)
    assert std.is_involution() and fstd.support_size() <= len(E)
    if grassmannian_data(z) is not None:
        assert grassmannian_data(fstd) is not None


# -- Bruhat covers -----------------------------------------------------------


def test_cover_examples():
    theta = FpfInvolution.theta()
    assert bruhat_cover_check(theta, 2, 3)
    assert theta.conjugate(2, 3) == parse_fpf("(1,3)(2,4)")
    y = parse_fpf("(1,3)(2,4)")
    assert bruhat_cover_check(y, 1, 2)
    assert y.conjugate(1, 2) == parse_fpf("(1,4)(2,3)")


def test_cycles_are_never_covers():
    for z in all_fpf(8):
        for a, b in z.cycles():
            assert not bruhat_cover_check(z, a, b)
        assert not bruhat_cover_check(z, 1, 2) or z(1) != 2


def test_cover_check_matches_length_on_f8():
    for z in all_fpf(8):
        for i in range(-1, 11):
            for j in range(i + 1, 11):
                raised = ell_fpf(z.conjugate(i, j)) == ell_fpf(z) + 1
                assert bruhat_cover_check(z, i, j) == raised, (z, i, j)
