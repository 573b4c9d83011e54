import random
from math import prod

import pytest
import sympy

from fpfschur.fpf import fpf_shape, grassmannian_data, parse_fpf
from fpfschur.pfaffian import (
    SkewMatrix,
    admissible_phis,
    grassmannian_involution,
    grassmannian_pfaffian_check,
    pfaffian,
    pfaffian_matrix,
)
from fpfschur.polyring import LaurentPoly, divided_difference, fpf_schubert, least_term, x


def random_laurent(rng):
    terms = {}
    for _ in range(rng.randint(0, 3)):
        terms[tuple(rng.randint(-1, 2) for _ in range(3))] = rng.randint(-3, 3)
    return LaurentPoly(terms)


def pf_matrix(phi, n):
    return pfaffian(pfaffian_matrix(phi, n, fpf_schubert))


def test_small_examples():
    a = {(1, 2): 7}
    assert pfaffian(SkewMatrix(2, a)) == 7
    b = {(i, j): sympy.Symbol(f"a{i}{j}") for i in range(1, 5) for j in range(i + 1, 5)}
    A = SkewMatrix(4, b)
    s = sympy.symbols("a12 a13 a14 a23 a24 a34")
    a12, a13, a14, a23, a24, a34 = s
    want = a12 * a34 - a13 * a24 + a14 * a23
    assert sympy.expand(pfaffian(A) - want) == 0
    assert sympy.expand(pfaffian(A, "matching_sum") - want) == 0
    assert pfaffian(SkewMatrix(0, {})) == 1


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        pfaffian(SkewMatrix(3, {(1, 2): 1}))
    with pytest.raises(ValueError):
        SkewMatrix(2, {(2, 1): 1})
    with pytest.raises(ValueError):
        pfaffian(SkewMatrix(2, {(1, 2): 1}), "guess")
    for phi, n in [((), 3), ((0, 1), 3), ((2, 1), 3), ((1, 3), 3)]:
        with pytest.raises(ValueError):
            grassmannian_pfaffian_check(phi, n)


def test_skew_entries_and_json():
    A = SkewMatrix(4, lambda i, j: x(i) - 2 * x(j))
    assert A[3, 1] == -A[1, 3] and A[2, 2] == 0
    B = SkewMatrix.from_json(A.to_json())
    assert B.to_rows() == A.to_rows()


@pytest.mark.parametrize("dim", [0, 2, 4, 6, 8])
def test_methods_agree_on_random_laurent_matrices(dim):
    rng = random.Random(dim)
    for _ in range(3 if dim == 8 else 10):
        A = SkewMatrix(dim, lambda i, j: random_laurent(rng))
        assert pfaffian(A, "matching_sum") == pfaffian(A)


@pytest.mark.parametrize("dim", [2, 4, 6])
def test_square_is_determinant(dim):
    rng = random.Random(100 + dim)
    for _ in range(10):
        A = SkewMatrix(dim, lambda i, j: rng.randint(-5, 5))
        assert pfaffian(A) ** 2 == sympy.Matrix(A.to_rows()).det()


def test_involution_and_shape():
    for n in range(2, 7):
        for phi in admissible_phis(n):
            z = grassmannian_involution(phi, n)
            assert fpf_shape(z) == tuple(n - p for p in phi)
            assert grassmannian_data(z) is not None
    assert grassmannian_involution((1, 2, 3), 4) == parse_fpf("(1,5)(2,6)(3,7)(4,8)")


def test_worked_example():
    z = parse_fpf("(1,5)(2,6)(3,7)(4,8)")
    entries = {
        (1, 2): "(1,5)(2,6)(3,4)",
        (1, 3): "(1,5)(2,4)(3,6)",
        (1, 4): "(1,5)(2,3)(4,6)",
        (2, 3): "(1,4)(2,5)(3,6)",
        (2, 4): "(1,3)(2,5)(4,6)",
        (3, 4): "(1,2)(3,5)(4,6)",
    }
    A = SkewMatrix(4, {k: fpf_schubert(parse_fpf(v)) for k, v in entries.items()})
    assert pfaffian(A) == fpf_schubert(z)
    assert pfaffian_matrix((1, 2, 3), 4, fpf_schubert).to_rows() == A.to_rows()
    D = [prod((x(i) + x(j) for j in range(i + 1, 5)), start=LaurentPoly.const(1)) for i in (1, 2, 3)]
    assert fpf_schubert(z) == D[0] * D[1] * D[2]


def test_all_admissible_phi_through_n5():
    count = 0
    for n in range(2, 6):
        for phi in admissible_phis(n):
            for which in ("schubert", "stanley"):
                assert grassmannian_pfaffian_check(phi, n, which)
                count += 1
    assert count == 2 * sum(2 ** (n - 1) - 1 for n in range(2, 6))


def test_stanley_check_rejects_low_truncation():
    with pytest.raises(ValueError):
        grassmannian_pfaffian_check((1, 2), 4, "stanley", N=1)
    assert grassmannian_pfaffian_check((1, 2), 4, "stanley", N=5)


def test_derivative_of_pfaffian():
    """``d_p pf M[phi; n]`` raises ``phi_i = p`` by one unless ``phi_{i+1} = p + 1``."""
    checked = 0
    for n in range(3, 7):
        for phi in admissible_phis(n):
            f = pf_matrix(phi, n)
            for p in range(1, n):
                if p in phi:
                    i = phi.index(p)
                    if i + 1 < len(phi) and phi[i + 1] == p + 1:
                        assert divided_difference(f, p) == 0
                        continue
                    raised = phi[:i] + (p + 1,) + phi[i + 1:]
                    if raised[-1] >= n:
                        continue
                    assert divided_difference(f, p) == pf_matrix(raised, n)
                    checked += 1
                else:
                    assert divided_difference(f, p) == 0
    assert checked == 49


def test_first_column_lemma():
    for n in range(2, 7):
        D = prod((x(1) + x(j) for j in range(2, n + 1)), start=LaurentPoly.const(1))
        assert pf_matrix((1,), n) == D


def mono(*ranges):
    e = {}
    for a, b in ranges:
        for k in range(a, b + 1):
            e[k] = e.get(k, 0) + 1
    top = max(e, default=0)
    return LaurentPoly.monomial(tuple(e.get(k, 0) for k in range(1, top + 1)))


def lex_key(f):
    (e, _), = least_term(f).terms.items()
    return e


def lex_geq(f, g):
    a, b = lex_key(f), lex_key(g)
    width = max(len(a), len(b))
    return a + (0,) * (width - len(a)) >= b + (0,) * (width - len(b))


def test_least_terms_of_two_index_entries():
    for n in range(2, 8):
        for i in range(1, n):
            f = fpf_schubert(grassmannian_involution((i,), n))
            bound = mono((i + 1, n))
            assert lex_geq(f, bound)
            assert (least_term(f) == bound) == (i % 2 == 1)
            for j in range(i + 1, n):
                g = fpf_schubert(grassmannian_involution((i, j), n))
                bound = mono((i + 1, n), (j + 1, n))
                assert lex_geq(g, bound)
                assert (least_term(g) == bound) == (i % 2 == 1 and j % 2 == 0)


def test_initial_segment_least_terms_agree():
    for n in range(2, 7):
        for r in range(1, n):
            phi = tuple(range(1, r + 1))
            assert least_term(pf_matrix(phi, n)) == least_term(fpf_schubert(grassmannian_involution(phi, n)))
