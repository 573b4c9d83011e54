"""Integer partitions: enumeration, transpose, dominance."""

from __future__ import annotations

from functools import lru_cache
from itertools import accumulate
from typing import Sequence

__all__ = [
    "normalize",
    "transpose",
    "partitions",
    "strict_partitions",
    "dominance_leq",
    "is_strict",
    "key_str",
    "parse_key",
]


def normalize(parts: Sequence[int]) -> tuple[int, ...]:
    """Sort decreasingly and drop zeros."""
    return tuple(sorted((p for p in parts if p), reverse=True))


def transpose(parts: Sequence[int]) -> tuple[int, ...]:
    parts = normalize(parts)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > k) for k in range(parts[0]))


def is_strict(parts: Sequence[int]) -> bool:
    parts = normalize(parts)
    return all(a > b for a, b in zip(parts, parts[1:]))


@lru_cache(maxsize=None)
def _partitions(n: int, cap: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions(n: int, max_part: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Partitions of ``n`` in decreasing lexicographic order."""
    return _partitions(n, n if max_part is None else max_part)


@lru_cache(maxsize=None)
def _strict(n: int, cap: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, cap), 0, -1):
        for rest in _strict(n - first, first - 1):
            out.append((first,) + rest)
    return tuple(out)


def strict_partitions(n: int) -> tuple[tuple[int, ...], ...]:
    return _strict(n, n)


def dominance_leq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """``lam <= mu`` in dominance order; partitions of different size are
    incomparable."""
    lam, mu = normalize(lam), normalize(mu)
    if sum(lam) != sum(mu):
        return False
    k = max(len(lam), len(mu))
    a = accumulate(lam + (0,) * (k - len(lam)))
    b = accumulate(mu + (0,) * (k - len(mu)))
    return all(x <= y for x, y in zip(a, b))


def key_str(parts: Sequence[int]) -> str:
    return ",".join(map(str, parts))


def parse_key(text: str) -> tuple[int, ...]:
    text = text.strip()
    return normalize(int(t) for t in text.split(",")) if text else ()
