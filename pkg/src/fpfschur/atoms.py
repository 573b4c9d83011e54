"""Atoms of fixed-point-free involutions and FPF reduced words.

An atom of ``z`` is a permutation ``w`` of minimal length with
``w^{-1} Theta w = z``.  A word ``(i_1, ..., i_l)`` is an FPF reduced word
of ``z`` when ``s_{i_1} ... s_{i_l}`` is an atom, so the FPF reduced words
are the disjoint union of the ordinary reduced words of the atoms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .fpf import FpfInvolution, ell_fpf, fpf_descents
from .perm import Permutation, reduced_word_count, reduced_words

__all__ = [
    "AtomSet",
    "beta_min",
    "atoms",
    "atom_covers",
    "conjugate_theta",
    "fpf_reduced_words",
    "fpf_reduced_word_count",
    "fpf_reduced_word_count_dp",
]


@dataclass(frozen=True)
class AtomSet:
    base: FpfInvolution
    atoms: frozenset[Permutation]
    beta_min: Permutation

    def __len__(self) -> int:
        return len(self.atoms)

    def sorted(self) -> list[Permutation]:
        return sorted(self.atoms)


def _window(z: FpfInvolution) -> int:
    if z.offset < 0:
        raise ValueError(f"{z} is not in F_infinity; shift it first")
    return z.support_size()


def conjugate_theta(w: Permutation) -> FpfInvolution:
    """``w^{-1} Theta w``."""
    if w.is_identity():
        return FpfInvolution.theta()
    lo, hi = w.start, w.end
    lo -= 1 - lo % 2
    hi += hi % 2
    winv = w.inverse()
    images = []
    for i in range(lo, hi + 1):
        j = w(i)
        images.append(winv(j + 1 if j % 2 else j - 1))
    return FpfInvolution(lo - 1, images, _trusted=True)


def _beta_min_inverse_line(z: FpfInvolution) -> tuple[int, ...]:
    n = _window(z)
    line = []
    for a in range(1, n + 1):
        b = z(a)
        if a < b:
            line += [a, b]
    return tuple(line)


def beta_min(z: FpfInvolution) -> Permutation:
    """The lexicographically least atom: the inverse of ``a1 b1 a2 b2 ...``
    where ``(a_k, b_k)`` are the cycles of ``z`` ordered by ``a_k``."""
    return Permutation.from_oneline(_beta_min_inverse_line(z)).inverse()


def _cover_moves(line: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    for k in range(0, len(line) - 3, 2):
        a, d, b, c = line[k:k + 4]
        if a < b < c < d:
            yield line[:k] + (b, c, a, d) + line[k + 4:]


def _closure(z: FpfInvolution) -> tuple[set[tuple[int, ...]], list[tuple[tuple, tuple]]]:
    start = _beta_min_inverse_line(z)
    seen = {start}
    covers = []
    stack = [start]
    while stack:
        line = stack.pop()
        for nxt in _cover_moves(line):
            covers.append((line, nxt))
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen, covers


@lru_cache(maxsize=8)
def _bruteforce_table(n: int) -> dict[FpfInvolution, frozenset[Permutation]]:
    buckets: dict[FpfInvolution, list[tuple[int, Permutation]]] = {}
    for line in itertools.permutations(range(1, n + 1)):
        w = Permutation.from_oneline(line)
        buckets.setdefault(conjugate_theta(w), []).append((w.length(), w))
    table = {}
    for z, items in buckets.items():
        best = min(length for length, _ in items)
        table[z] = frozenset(w for length, w in items if length == best)
    return table


def atoms(z: FpfInvolution, mode: str = "closure") -> AtomSet:
    """``A_fpf(z)``.

    ``closure`` saturates ``beta_min(z)`` under the atom-order covers;
    ``bruteforce`` scans all of ``S_n`` (``n <= 8``).
    """
    n = _window(z)
    if mode == "closure":
        lines, _ = _closure(z)
        found = frozenset(Permutation.from_oneline(line).inverse() for line in lines)
    elif mode == "bruteforce":
        if n > 8:
            raise ValueError("bruteforce atoms are limited to n <= 8")
        found = _bruteforce_table(max(n, 2))[z]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return AtomSet(z, found, beta_min(z))


def atom_covers(z: FpfInvolution) -> list[tuple[Permutation, Permutation]]:
    """Pairs ``(v, w)`` where ``w`` covers ``v`` in the atom order."""
    _, covers = _closure(z)
    return [
        (Permutation.from_oneline(a).inverse(), Permutation.from_oneline(b).inverse())
        for a, b in covers
    ]


def fpf_reduced_words(z: FpfInvolution) -> Iterator[tuple[int, ...]]:
    """FPF reduced words of ``z``: atoms in lexicographic order, then each
    atom's reduced words in lexicographic order."""
    for w in atoms(z).sorted():
        yield from reduced_words(w)


def fpf_reduced_word_count(z: FpfInvolution, cache: dict | None = None) -> int:
    """``sum |R(w)|`` over the atoms of ``z``."""
    return sum(reduced_word_count(w, cache) for w in atoms(z).atoms)


def fpf_reduced_word_count_dp(z: FpfInvolution, cache: dict | None = None) -> int:
    """Count by peeling the last letter: ``|R(z)| = sum |R(s z s)|`` over
    ``s`` in ``Des_R^FPF(z)``.  Works on the involutions directly, so the
    number of states is at most ``|F_n|``."""
    memo = {} if cache is None else cache

    def rec(v: FpfInvolution) -> int:
        if v.is_theta():
            return 1
        hit = memo.get(v)
        if hit is not None:
            return hit
        total = sum(rec(v.conjugate_simple(i)) for i in fpf_descents(v))
        memo[v] = total
        return total

    return rec(z)


def is_atom(w: Permutation, z: FpfInvolution) -> bool:
    return conjugate_theta(w) == z and w.length() == ell_fpf(z)
