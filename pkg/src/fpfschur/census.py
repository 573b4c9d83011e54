"""Counting statistics over all of ``F_n``.

The per-element tests here work on raw one-line tuples rather than
:class:`FpfInvolution` values, which keeps a pass over ``F_16`` (about two
million matchings) within reach of a single core.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterator

from .fpf import all_fpf_matchings, embed_iota

__all__ = ["STATS", "census", "count_stat", "is_grassmannian_line", "visible_descent_count"]


def is_grassmannian_line(m: tuple[int, ...]) -> bool:
    """FPF-Grassmannian test for ``iota(m)``, ``m`` a one-line matching."""
    n = len(m)
    closers = [0] * (n + 1)  # closers[k] = #{b <= k : m(b) < b}
    for b in range(1, n + 1):
        closers[b] = closers[b - 1] + (m[b - 1] < b)
    cycles = []
    for p in range(1, n + 1):
        q = m[p - 1]
        if q > p and closers[q - 1] - closers[p] > 0:
            cycles.append((q, p))
    if not cycles:
        return True
    cycles.sort()
    base = cycles[0][0] - 1
    prev = 0
    for k, (q, p) in enumerate(cycles, start=1):
        if q != base + k or p <= prev:
            return False
        prev = p
    return prev <= base


def visible_descent_count(m: tuple[int, ...]) -> int:
    n = len(m)
    return sum(1 for i in range(1, n) if m[i] < min(i, m[i - 1]))


def _vexillary(m: tuple[int, ...]) -> bool:
    from .vexillary import is_fpf_vexillary

    return is_fpf_vexillary(embed_iota(m))


STATS: dict[str, Callable[[tuple[int, ...]], bool]] = {
    "grassmannian": is_grassmannian_line,
    "visible-descents": lambda m: visible_descent_count(m) <= 1,
    "vexillary": _vexillary,
}


def _matchings_with_first(n: int, partner: int) -> Iterator[tuple[int, ...]]:
    """Matchings of ``[n]`` pairing 1 with ``partner``."""
    rest = [k for k in range(2, n + 1) if k != partner]
    rank = {k: i for i, k in enumerate(rest, start=1)}
    for sub in all_fpf_matchings(n - 2):
        line = [0] * n
        line[0], line[partner - 1] = partner, 1
        for i, v in enumerate(sub, start=1):
            line[rest[i - 1] - 1] = rest[v - 1]
        yield tuple(line)


def _count_chunk(args) -> int:
    stat, n, partner = args
    test = STATS[stat]
    return sum(1 for m in _matchings_with_first(n, partner) if test(m))


def count_stat(stat: str, n: int, threads: int = 1) -> int:
    """Number of ``z`` in ``F_n`` satisfying ``stat``."""
    if stat not in STATS:
        raise ValueError(f"unknown statistic {stat!r}")
    if n % 2:
        return 0
    if n == 0:
        return 1
    jobs = [(stat, n, partner) for partner in range(2, n + 1)]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return sum(pool.map(_count_chunk, jobs))
    return sum(_count_chunk(job) for job in jobs)


def _rhat(n: int) -> int:
    from .atoms import fpf_reduced_word_count_dp

    return fpf_reduced_word_count_dp(embed_iota(tuple(range(n, 0, -1))))


def census(stat: str, max_n: int, threads: int = 1) -> list[tuple[int, int]]:
    """``[(n, value)]`` for even ``n`` from 2 to ``max_n``.

    ``rhat`` gives the number of FPF reduced words of the reverse
    permutation; the other statistics count elements of ``F_n``.
    """
    rows = []
    for n in range(2, max_n + 1, 2):
        if stat == "rhat":
            rows.append((n, _rhat(n)))
        else:
            rows.append((n, count_stat(stat, n, threads)))
    return rows
