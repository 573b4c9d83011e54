"""Symmetric functions at finite truncation.

A symmetric polynomial in ``x1..xN`` is determined by its coefficients on
the monomials ``x^mu`` for partitions ``mu`` with at most ``N`` parts.  Most
routines here compute those coefficients directly by dynamic programming,
which avoids expanding polynomials with millions of terms.  Products are
taken in the elementary basis, where symmetric functions form an ordinary
polynomial ring in ``e1, e2, ...``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .fpf import FpfInvolution, fpf_descents
from .partitions import (
    dominance_leq,
    is_strict,
    key_str,
    normalize,
    parse_key,
    partitions,
    strict_partitions,
    transpose,
)
from .perm import Permutation, reduced_words
from .polyring import LaurentPoly

__all__ = [
    "SymExpansion",
    "dominance_leq",
    "transpose",
    "partitions",
    "strict_partitions",
    "word_series",
    "schurP_monomial",
    "schurP_poly",
    "schur_monomial",
    "kostka",
    "stanley_monomial",
    "stanley_trunc",
    "fpf_stanley_monomial",
    "fpf_stanley_monomial_atoms",
    "fpf_stanley_trunc",
    "monomial_coefficients",
    "symmetrize",
    "expand_symmetric",
    "to_monomial",
    "to_elementary",
    "NotInSpan",
]

BASES = ("monomial", "schur", "schurP")


class NotInSpan(ValueError):
    """Raised when elimination leaves a nonzero residual."""


@dataclass
class SymExpansion:
    """Integer coefficients on partitions in a named basis.

    ``truncation`` is the number of variables used (``None`` = exact).
    """

    basis: str
    coeffs: dict[tuple[int, ...], int] = field(default_factory=dict)
    degree: int | None = None
    truncation: int | None = None

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        clean = {}
        for lam, c in self.coeffs.items():
            lam = normalize(lam)
            if c:
                clean[lam] = clean.get(lam, 0) + c
        self.coeffs = {k: v for k, v in clean.items() if v}
        if self.basis == "schurP" and not all(is_strict(k) for k in self.coeffs):
            raise ValueError("Schur P keys must be strict partitions")
        if self.degree is None and self.coeffs:
            self.degree = sum(next(iter(self.coeffs)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymExpansion):
            return NotImplemented
        return self.basis == other.basis and self.coeffs == other.coeffs

    def keys_sorted(self) -> list[tuple[int, ...]]:
        return sorted(self.coeffs, reverse=True)

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "coeffs": {key_str(k): self.coeffs[k] for k in self.keys_sorted()},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SymExpansion":
        return cls(data["basis"], {parse_key(k): v for k, v in data["coeffs"].items()})

    def __str__(self) -> str:
        name = {"monomial": "m", "schur": "s", "schurP": "P"}[self.basis]
        if not self.coeffs:
            return "0"
        parts = []
        for k in self.keys_sorted():
            c = self.coeffs[k]
            term = f"{name}[{key_str(k)}]"
            parts.append(term if c == 1 else f"{c}*{term}")
        return " + ".join(parts)


# -- word series and Stanley functions as explicit polynomials -----------------


def word_series(a: Sequence[int], N: int) -> LaurentPoly:
    """``f_a`` in ``x1..xN``: sum of ``x_{i1}...x_{il}`` over weakly increasing
    ``i`` that increase strictly wherever ``a`` ascends."""
    ell = len(a)
    terms: dict[tuple[int, ...], int] = {}

    def rec(pos: int, low: int, exps: list[int]):
        if pos == ell:
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + 1
            return
        start = low
        if pos > 0 and a[pos - 1] < a[pos]:
            start = low + 1
        for i in range(start, N + 1):
            exps[i - 1] += 1
            rec(pos + 1, i, exps)
            exps[i - 1] -= 1

    rec(0, 1, [0] * N)
    return LaurentPoly(terms)


def stanley_trunc(w: Permutation, N: int) -> LaurentPoly:
    total = LaurentPoly()
    for a in reduced_words(w):
        total = total + word_series(a, N)
    return total


def fpf_stanley_trunc(z: FpfInvolution, N: int, method: str = "words") -> LaurentPoly:
    """``F^FPF_z`` in ``N`` variables.

    ``words`` sums word series over FPF reduced words, ``atoms`` sums
    truncated Stanley functions over atoms, and ``peel`` builds every
    monomial at once by peeling one increasing block per variable.
    """
    from .atoms import atoms, fpf_reduced_words

    if method == "words":
        total = LaurentPoly()
        for a in fpf_reduced_words(z):
            total = total + word_series(a, N)
        return total
    if method == "atoms":
        total = LaurentPoly()
        for w in atoms(z).atoms:
            total = total + stanley_trunc(w, N)
        return total
    if method == "peel":
        return _fpf_peel_poly(z, N)
    raise ValueError(f"unknown method {method!r}")


# -- monomial coefficients --------------------------------------------------------


def monomial_coefficients(f: LaurentPoly) -> dict[tuple[int, ...], int]:
    """Coefficients of ``x^mu`` for partitions ``mu`` (symmetric ``f``)."""
    out = {}
    for e, c in f.terms.items():
        if all(e[k] >= e[k + 1] for k in range(len(e) - 1)) and all(v > 0 for v in e):
            out[e] = c
    return out


def symmetrize(coeffs: Mapping[tuple[int, ...], int], N: int) -> LaurentPoly:
    """The symmetric polynomial in ``x1..xN`` with the given coefficients on
    partition monomials."""
    terms = {}
    for mu, c in coeffs.items():
        if len(mu) > N or not c:
            continue
        padded = Counter(mu)
        padded[0] += N - len(mu)
        for e in _arrangements(padded, N):
            terms[e] = c
    return LaurentPoly(terms)


def _arrangements(counts: Counter, n: int):
    """Distinct orderings of a multiset given by ``counts``."""
    if n == 0:
        yield ()
        return
    for v in sorted(counts):
        if counts[v]:
            counts[v] -= 1
            for rest in _arrangements(counts, n - 1):
                yield (v,) + rest
            counts[v] += 1


def _decreasing_runs(start, descents_of, step, length, bound):
    """Yield states reachable by ``length`` peels with strictly increasing
    letters, all above ``bound`` (``None`` for no bound)."""
    if length == 0:
        yield start
        return
    for i in descents_of(start):
        if bound is None or i > bound:
            yield from _decreasing_runs(step(start, i), descents_of, step, length - 1, i)


def _block_counter(descents_of, step, is_base):
    """Count ways to peel a word off the right end in blocks ``mu_k, ...,
    mu_1``, each block strictly decreasing when read left to right."""
    memo: dict = {}

    def count(state, mu: tuple[int, ...]) -> int:
        if not mu:
            return 1 if is_base(state) else 0
        key = (state, mu)
        hit = memo.get(key)
        if hit is not None:
            return hit
        total = 0
        for nxt in _decreasing_runs(state, descents_of, step, mu[-1], None):
            total += count(nxt, mu[:-1])
        memo[key] = total
        return total

    return count


def _fpf_peel_poly(z: FpfInvolution, N: int) -> LaurentPoly:
    from .fpf import ell_fpf

    memo: dict = {}

    def rec(state, k: int) -> dict:
        if k == 0:
            return {(): 1} if state.is_theta() else {}
        key = (state, k)
        hit = memo.get(key)
        if hit is not None:
            return hit
        out: dict = {}
        for j in range(ell_fpf(state) + 1):
            ends = Counter(_decreasing_runs(state, fpf_descents, lambda v, i: v.conjugate_simple(i), j, None))
            for nxt, mult in ends.items():
                for e, c in rec(nxt, k - 1).items():
                    e = e + (j,)
                    out[e] = out.get(e, 0) + mult * c
        memo[key] = out
        return out

    return LaurentPoly(rec(z, N))


def _fpf_counter():
    return _block_counter(
        fpf_descents,
        lambda v, i: v.conjugate_simple(i),
        lambda v: v.is_theta(),
    )


def _perm_counter():
    return _block_counter(
        lambda w: w.right_descents(),
        lambda w, i: w * Permutation.s(i),
        lambda w: w.is_identity(),
    )


def fpf_stanley_monomial(z: FpfInvolution, N: int | None = None) -> SymExpansion:
    """Monomial coefficients of ``F^FPF_z`` over FPF reduced words.

    ``N`` limits the number of parts (default: the degree, which is exact).
    """
    from .fpf import ell_fpf

    d = ell_fpf(z)
    N = d if N is None else N
    count = _fpf_counter()
    coeffs = {mu: count(z, mu) for mu in partitions(d) if len(mu) <= N}
    return SymExpansion("monomial", coeffs, d, N)


def stanley_monomial(w: Permutation, N: int | None = None) -> SymExpansion:
    d = w.length()
    N = d if N is None else N
    count = _perm_counter()
    coeffs = {mu: count(w, mu) for mu in partitions(d) if len(mu) <= N}
    return SymExpansion("monomial", coeffs, d, N)


def fpf_stanley_monomial_atoms(z: FpfInvolution, N: int | None = None) -> SymExpansion:
    """The same coefficients as a sum of ``F_w`` over atoms ``w``."""
    from .atoms import atoms
    from .fpf import ell_fpf

    d = ell_fpf(z)
    N = d if N is None else N
    total: dict[tuple[int, ...], int] = {}
    for w in atoms(z).atoms:
        for mu, c in stanley_monomial(w, N).coeffs.items():
            total[mu] = total.get(mu, 0) + c
    return SymExpansion("monomial", total, d, N)


# -- Schur and Schur P --------------------------------------------------------------


def _shifted_cells(lam: tuple[int, ...]) -> set[tuple[int, int]]:
    return {(i, i + j) for i, part in enumerate(lam, start=1) for j in range(part)}


def _strip_weight(inner: tuple[int, ...], outer: tuple[int, ...]) -> int:
    """Fillings of the shifted skew shape ``outer / inner`` with one letter
    in its primed and unprimed forms (no primes on the diagonal)."""
    cells = _shifted_cells(outer) - _shifted_cells(inner)
    weight = 1
    for i, j in cells:
        left = (i, j - 1) in cells
        below = (i + 1, j) in cells
        if left and below:
            return 0
        if not left and not below and i != j:
            weight *= 2
    return weight


def _strict_subshapes(lam: tuple[int, ...], size: int) -> list[tuple[int, ...]]:
    """Strict partitions ``kappa`` inside ``lam`` with ``|kappa| = size``."""
    out = []

    def rec(k: int, prev: int, left: int, acc: list[int]):
        if left == 0:
            out.append(tuple(acc))
            return
        if k >= len(lam):
            return
        top = min(lam[k], prev - 1, left)
        for p in range(top, 0, -1):
            acc.append(p)
            rec(k + 1, p, left - p, acc)
            acc.pop()

    rec(0, 1 << 30, size, [])
    return out


@lru_cache(maxsize=None)
def _schurP_coeff(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1 if not lam else 0
    last = mu[-1]
    total = 0
    for kappa in _strict_subshapes(lam, sum(lam) - last):
        w = _strip_weight(kappa, lam)
        if w:
            total += w * _schurP_coeff(kappa, mu[:-1])
    return total


def schurP_monomial(lam: Sequence[int], N: int | None = None) -> SymExpansion:
    """Monomial coefficients of ``P_lam`` from marked shifted tableaux."""
    lam = normalize(lam)
    if not is_strict(lam):
        raise ValueError(f"{lam} is not strict")
    d = sum(lam)
    N = d if N is None else N
    coeffs = {mu: _schurP_coeff(lam, mu) for mu in partitions(d) if len(mu) <= N}
    return SymExpansion("monomial", coeffs, d, N)


def schurP_poly(lam: Sequence[int], N: int) -> LaurentPoly:
    if N < 0:
        raise ValueError("the number of variables must be nonnegative")
    return symmetrize(schurP_monomial(lam, N).coeffs, N)


def _subshapes(lam: tuple[int, ...], size: int) -> list[tuple[int, ...]]:
    """Partitions ``kappa`` with ``lam / kappa`` a horizontal strip."""
    out = []

    def rec(k: int, left: int, acc: list[int]):
        if k == len(lam):
            if left == 0:
                out.append(normalize(acc))
            return
        lo = lam[k + 1] if k + 1 < len(lam) else 0
        for p in range(lam[k], lo - 1, -1):
            removed = lam[k] - p
            if removed > left:
                break
            acc.append(p)
            rec(k + 1, left - removed, acc)
            acc.pop()

    rec(0, sum(lam) - size, [])
    return out


@lru_cache(maxsize=None)
def kostka(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """Semistandard tableaux of shape ``lam`` and content ``mu``."""
    lam, mu = normalize(lam), tuple(mu)
    if not mu:
        return 1 if not lam else 0
    total = 0
    for kappa in _subshapes(lam, sum(lam) - mu[-1]):
        total += kostka(kappa, mu[:-1])
    return total


def schur_monomial(lam: Sequence[int], N: int | None = None) -> SymExpansion:
    lam = normalize(lam)
    d = sum(lam)
    N = d if N is None else N
    coeffs = {mu: kostka(lam, mu) for mu in partitions(d) if len(mu) <= N}
    return SymExpansion("monomial", coeffs, d, N)


def _basis_monomial(basis: str, lam: tuple[int, ...], N: int) -> SymExpansion:
    if basis == "schur":
        return schur_monomial(lam, N)
    if basis == "schurP":
        return schurP_monomial(lam, N)
    if basis == "monomial":
        return SymExpansion("monomial", {lam: 1} if len(lam) <= N else {}, sum(lam), N)
    raise ValueError(f"unknown basis {basis!r}")


def to_monomial(f: SymExpansion, N: int | None = None) -> SymExpansion:
    N = f.truncation if N is None else N
    if N is None:
        N = f.degree or 0
    if f.basis == "monomial":
        return SymExpansion("monomial", {k: v for k, v in f.coeffs.items() if len(k) <= N}, f.degree, N)
    total: dict[tuple[int, ...], int] = {}
    for lam, c in f.coeffs.items():
        for mu, m in _basis_monomial(f.basis, lam, N).coeffs.items():
            total[mu] = total.get(mu, 0) + c * m
    return SymExpansion("monomial", total, f.degree, N)


def expand_symmetric(f: LaurentPoly | SymExpansion, basis: str, N: int | None = None) -> SymExpansion:
    """Write a homogeneous symmetric ``f`` in the Schur or Schur P basis.

    Repeatedly removes the lexicographically largest monomial ``x^mu`` using
    the basis element indexed by ``mu``, whose leading coefficient is 1.
    """
    if isinstance(f, LaurentPoly):
        if N is None:
            N = f.nvars()
        coeffs = monomial_coefficients(f)
        degree = f.degree()
    else:
        if f.basis != "monomial":
            f = to_monomial(f, N)
        coeffs = dict(f.coeffs)
        degree = f.degree
        N = f.truncation if N is None else N
    if N is None:
        N = degree or 0
    residual = {k: v for k, v in coeffs.items() if v and len(k) <= N}
    out: dict[tuple[int, ...], int] = {}
    while residual:
        mu = max(residual)
        c = residual[mu]
        if basis == "schurP" and not is_strict(mu):
            raise NotInSpan(f"leading monomial {mu} is not strict; not in the Schur P span")
        out[mu] = c
        for nu, m in _basis_monomial(basis, mu, N).coeffs.items():
            v = residual.get(nu, 0) - c * m
            if v:
                residual[nu] = v
            else:
                residual.pop(nu, None)
        if residual and max(residual) >= mu:
            raise NotInSpan("elimination did not terminate")
    if degree is None and out:
        degree = sum(next(iter(out)))
    return SymExpansion(basis, out, degree, N)


# -- elementary basis ---------------------------------------------------------------


@lru_cache(maxsize=None)
def _zero_one_count(rows: tuple[int, ...], cols: tuple[int, ...]) -> int:
    """0-1 matrices with the given row and column sums (``cols`` sorted)."""
    if not rows:
        return 1 if not any(cols) else 0
    r, rest = rows[0], rows[1:]
    total = 0
    n = len(cols)
    for chosen in itertools.combinations(range(n), r):
        new = list(cols)
        ok = True
        for k in chosen:
            if new[k] == 0:
                ok = False
                break
            new[k] -= 1
        if ok:
            total += _zero_one_count(rest, tuple(sorted(new, reverse=True)))
    return total


@lru_cache(maxsize=None)
def _elementary_monomial(lam: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    d = sum(lam)
    out = {}
    for mu in partitions(d):
        c = _zero_one_count(lam, mu)
        if c:
            out[mu] = c
    return out


def to_elementary(f: SymExpansion | Mapping[tuple[int, ...], int]) -> LaurentPoly:
    """Express a homogeneous symmetric function, given by its monomial
    coefficients on all partitions of its degree, as a polynomial in
    ``e1, e2, ...`` (variable ``k`` stands for ``e_k``)."""
    if isinstance(f, SymExpansion):
        if f.basis != "monomial":
            f = to_monomial(f)
        if f.degree is not None and f.truncation is not None and f.truncation < f.degree:
            raise ValueError("need all monomials of the degree; truncation too small")
        coeffs = f.coeffs
    else:
        coeffs = f
    residual = {k: v for k, v in coeffs.items() if v}
    out = LaurentPoly()
    while residual:
        mu = max(residual)
        c = residual[mu]
        lam = transpose(mu)
        exps = [0] * (lam[0] if lam else 0)
        for part in lam:
            exps[part - 1] += 1
        out = out + LaurentPoly.monomial(exps, c)
        for nu, m in _elementary_monomial(lam).items():
            v = residual.get(nu, 0) - c * m
            if v:
                residual[nu] = v
            else:
                residual.pop(nu, None)
    return out
