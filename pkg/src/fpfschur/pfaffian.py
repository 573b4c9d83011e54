"""Pfaffians and the Pfaffian formulas for FPF-Grassmannian involutions."""

from __future__ import annotations

import json
from functools import lru_cache
from typing import Callable, Mapping, Sequence

from .fpf import FpfInvolution, all_fpf_matchings, ell_fpf, embed_iota, map_F
from .perm import Permutation
from .polyring import LaurentPoly, fpf_schubert
from .report import Report
from .symfunc import fpf_stanley_monomial, to_elementary

__all__ = [
    "SkewMatrix",
    "pfaffian",
    "grassmannian_involution",
    "pfaffian_matrix",
    "grassmannian_pfaffian_check",
    "admissible_phis",
]


class SkewMatrix:
    """A skew-symmetric matrix given by its entries above the diagonal."""

    def __init__(self, dim: int, upper: Mapping[tuple[int, int], object] | Callable[[int, int], object]):
        if dim < 0:
            raise ValueError("dimension must be nonnegative")
        self.dim = dim
        if callable(upper):
            self.upper = {(i, j): upper(i, j) for i in range(1, dim + 1) for j in range(i + 1, dim + 1)}
        else:
            self.upper = {}
            for (i, j), v in upper.items():
                if not 1 <= i < j <= dim:
                    raise ValueError(f"({i},{j}) is not an upper entry of a {dim}x{dim} matrix")
                self.upper[(i, j)] = v

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        if i == j:
            return 0
        if i < j:
            return self.upper.get((i, j), 0)
        return -self.upper.get((j, i), 0)

    def to_rows(self) -> list[list]:
        n = self.dim
        return [[self[i, j] for j in range(1, n + 1)] for i in range(1, n + 1)]

    def to_json(self) -> str:
        """Upper triangle, row by row, with entries as polynomial strings."""
        n = self.dim
        return json.dumps([[str(self[i, j]) for j in range(i + 1, n + 1)] for i in range(1, n + 1)])

    @classmethod
    def from_json(cls, text: str) -> "SkewMatrix":
        rows = json.loads(text)
        n = len(rows)
        upper = {}
        for i, row in enumerate(rows, start=1):
            for k, v in enumerate(row):
                upper[(i, i + 1 + k)] = LaurentPoly.parse(v)
        return cls(n, upper)


def _product(values):
    out = 1
    for v in values:
        out = v * out
    return out


def _pf_matching_sum(A: SkewMatrix):
    total = 0
    for line in all_fpf_matchings(A.dim):
        sign = -1 if ell_fpf(embed_iota(line)) % 2 else 1
        term = _product(A[a, b] for a, b in enumerate(line, start=1) if a < b)
        total = total + sign * term
    return total


def _pf_row_expansion(A: SkewMatrix):
    @lru_cache(maxsize=None)
    def rec(idx: tuple[int, ...]):
        if not idx:
            return 1
        first, rest = idx[0], idx[1:]
        total = 0
        for k, j in enumerate(rest):
            entry = A[first, j]
            if entry == 0:
                continue
            sub = rec(rest[:k] + rest[k + 1:])
            term = entry * sub
            total = total + (term if k % 2 == 0 else -term)
        return total

    return rec(tuple(range(1, A.dim + 1)))


def pfaffian(A: SkewMatrix, method: str = "row_expansion"):
    """``sum over fixed-point-free z of (-1)^l(z) prod A[a, z(a)]`` for
    ``a < z(a)``, or its expansion along the first row."""
    if A.dim % 2:
        raise ValueError("Pfaffians need an even dimension")
    if method == "matching_sum":
        return _pf_matching_sum(A)
    if method == "row_expansion":
        return _pf_row_expansion(A)
    raise ValueError(f"unknown method {method!r}")


# -- Grassmannian Pfaffian formulas ---------------------------------------------------


def _validate(phi: Sequence[int], n: int) -> tuple[int, ...]:
    phi = tuple(phi)
    if not phi:
        raise ValueError("phi must be nonempty")
    if phi[0] <= 0 or any(a >= b for a, b in zip(phi, phi[1:])) or phi[-1] >= n:
        raise ValueError(f"need 0 < phi_1 < ... < phi_r < n, got phi={phi}, n={n}")
    return phi


def grassmannian_involution(phi: Sequence[int], n: int) -> FpfInvolution:
    """``F((phi_1, n+1) ... (phi_r, n+r))``; trailing zeros in ``phi`` are
    dropped."""
    phi = tuple(p for p in phi if p)
    y = Permutation.from_cycles([(p, n + k) for k, p in enumerate(phi, start=1)])
    return map_F(y)


def admissible_phis(n: int):
    """All ``phi`` with ``0 < phi_1 < ... < phi_r < n`` and ``r >= 1``."""
    from itertools import combinations

    for r in range(1, n):
        yield from combinations(range(1, n), r)


def _padded(phi: tuple[int, ...]) -> tuple[int, ...]:
    return phi + (0,) if len(phi) % 2 else phi


def pfaffian_matrix(phi: Sequence[int], n: int, entry: Callable[[FpfInvolution], object]) -> SkewMatrix:
    """``[entry(z[phi_i, phi_j; n])]`` over ``i < j <= l+(phi)``."""
    phi = _padded(_validate(phi, n))
    return SkewMatrix(
        len(phi),
        lambda i, j: entry(grassmannian_involution((phi[i - 1], phi[j - 1]), n)),
    )


def _series_elementary(z: FpfInvolution) -> LaurentPoly:
    return to_elementary(fpf_stanley_monomial(z))


def grassmannian_pfaffian_check(phi: Sequence[int], n: int, which: str = "schubert",
                                N: int | None = None) -> Report:
    """Compare ``S[phi; n]`` (or ``F[phi; n]``) with the Pfaffian of the
    two-index matrix.

    Series are compared exactly in the elementary basis, which agrees with
    comparing in ``N >= degree`` variables; ``N`` below the degree is
    rejected.
    """
    phi = _validate(phi, n)
    z = grassmannian_involution(phi, n)
    weight = ell_fpf(z)
    if which == "schubert":
        lhs = fpf_schubert(z)
        rhs = pfaffian(pfaffian_matrix(phi, n, fpf_schubert))
    elif which == "stanley":
        if N is not None and N < weight:
            raise ValueError(f"truncation {N} is below the degree {weight}")
        lhs = _series_elementary(z)
        rhs = pfaffian(pfaffian_matrix(phi, n, _series_elementary))
    else:
        raise ValueError(f"unknown target {which!r}")
    rhs = LaurentPoly.const(rhs) if isinstance(rhs, int) else rhs
    details = {"phi": list(phi), "n": n, "which": which, "z": str(z), "weight": weight}
    if which == "schubert":
        details["value"] = str(lhs)
    return Report("pfaffian", lhs == rhs, details)
