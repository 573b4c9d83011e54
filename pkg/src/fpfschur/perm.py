"""Finite-support permutations of the integers.

A :class:`Permutation` stores its one-line images on the smallest interval
containing its support; every integer outside that window is fixed.
Products compose right-to-left, so ``(u * v)(i) == u(v(i))`` and a word
``(a1, ..., al)`` spells ``s_{a1} * ... * s_{al}``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

__all__ = [
    "Permutation",
    "PermStats",
    "DiagramData",
    "perm_stats",
    "reduced_words",
    "reduced_word_count",
    "diagram_code_shape",
    "parse_permutation",
]


class Permutation:
    """A permutation of the integers with finite support."""

    __slots__ = ("start", "images", "_hash")

    def __init__(self, images: Iterable[int] = (), start: int = 1):
        images = tuple(images)
        if sorted(images) != list(range(start, start + len(images))):
            raise ValueError(f"{images} is not a bijection of [{start}, {start + len(images) - 1}]")
        lo, hi = 0, len(images)
        while lo < hi and images[lo] == start + lo:
            lo += 1
        while hi > lo and images[hi - 1] == start + hi - 1:
            hi -= 1
        if lo == hi:
            self.start, self.images = 1, ()
        else:
            self.start, self.images = start + lo, images[lo:hi]
        self._hash = hash((self.start, self.images))

    @classmethod
    def from_oneline(cls, oneline: Iterable[int]) -> "Permutation":
        """Build ``w`` from ``w(1) w(2) ... w(n)``."""
        return cls(oneline, 1)

    @classmethod
    def identity(cls) -> "Permutation":
        return cls()

    @classmethod
    def s(cls, i: int) -> "Permutation":
        return cls((i + 1, i), i)

    @classmethod
    def transposition(cls, a: int, b: int) -> "Permutation":
        if a == b:
            return cls()
        a, b = min(a, b), max(a, b)
        img = list(range(a, b + 1))
        img[0], img[-1] = b, a
        return cls(img, a)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Iterable[int]]) -> "Permutation":
        mapping: dict[int, int] = {}
        for cyc in cycles:
            cyc = list(cyc)
            for k, a in enumerate(cyc):
                if a in mapping:
                    raise ValueError(f"{a} appears in two cycles")
                mapping[a] = cyc[(k + 1) % len(cyc)]
        if not mapping:
            return cls()
        lo, hi = min(mapping), max(mapping)
        return cls((mapping.get(i, i) for i in range(lo, hi + 1)), lo)

    # -- basic access -----------------------------------------------------

    @property
    def end(self) -> int:
        """Last position of the window (``start - 1`` for the identity)."""
        return self.start + len(self.images) - 1

    def __call__(self, i: int) -> int:
        k = i - self.start
        if 0 <= k < len(self.images):
            return self.images[k]
        return i

    def oneline(self, n: int | None = None) -> tuple[int, ...]:
        """Images ``w(1), ..., w(n)``; ``n`` defaults to the window end."""
        if self.images and self.start < 1:
            raise ValueError("permutation moves non-positive integers")
        if n is None:
            n = max(self.end, 0)
        return tuple(self(i) for i in range(1, n + 1))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i in range(self.start, self.end + 1) if self(i) != i)

    def is_identity(self) -> bool:
        return not self.images

    def is_involution(self) -> bool:
        return all(self(self(i)) == i for i in range(self.start, self.end + 1))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.start == other.start and self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Permutation") -> bool:
        # lexicographic order on one-line notation
        lo = min(self.start, other.start)
        hi = max(self.end, other.end)
        a = [self(i) for i in range(lo, hi + 1)]
        b = [other(i) for i in range(lo, hi + 1)]
        return a < b

    # -- group operations -------------------------------------------------

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if not self.images:
            return other
        if not other.images:
            return self
        lo = min(self.start, other.start)
        hi = max(self.end, other.end)
        return Permutation((self(other(i)) for i in range(lo, hi + 1)), lo)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for k, v in enumerate(self.images):
            inv[v - self.start] = self.start + k
        return Permutation(inv, self.start)

    def shift(self, n: int) -> "Permutation":
        """The map ``i -> w(i - n) + n``."""
        if not self.images:
            return self
        return Permutation((v + n for v in self.images), self.start + n)

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for i in range(self.start, self.end + 1):
            if i in seen or self(i) == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self(i)
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    # -- Coxeter data -----------------------------------------------------

    def length(self) -> int:
        img = self.images
        return sum(1 for a in range(len(img)) for b in range(a + 1, len(img)) if img[a] > img[b])

    def right_descents(self) -> list[int]:
        img = self.images
        return [self.start + k for k in range(len(img) - 1) if img[k] > img[k + 1]]

    def left_descents(self) -> list[int]:
        return self.inverse().right_descents()

    def __repr__(self) -> str:
        if not self.images:
            return "Permutation(1)"
        if self.start >= 1:
            line = self.oneline()
            if max(line) <= 9:
                return f"Permutation({''.join(map(str, line))})"
        return f"Permutation({list(self.images)}, start={self.start})"

    def __str__(self) -> str:
        if not self.images:
            return "1"
        if self.start >= 1:
            line = self.oneline()
            if max(line) <= 9:
                return "".join(map(str, line))
            return ",".join(map(str, line))
        return "".join("(" + ",".join(map(str, c)) + ")" for c in self.cycles())


@dataclass(frozen=True)
class PermStats:
    length: int
    des_left: frozenset[int] = field(default_factory=frozenset)
    des_right: frozenset[int] = field(default_factory=frozenset)


@dataclass(frozen=True)
class DiagramData:
    diagram: frozenset[tuple[int, int]]
    code: tuple[int, ...]
    shape: tuple[int, ...]


def perm_stats(w: Permutation) -> PermStats:
    return PermStats(w.length(), frozenset(w.left_descents()), frozenset(w.right_descents()))


def _swap_positions(img: tuple[int, ...], k: int) -> tuple[int, ...]:
    return img[:k] + (img[k + 1], img[k]) + img[k + 2:]


@lru_cache(maxsize=1 << 20)
def _count_cached(start: int, images: tuple[int, ...]) -> int:
    if not images:
        return 1
    total = 0
    for k in range(len(images) - 1):
        if images[k] > images[k + 1]:
            w = Permutation(_swap_positions(images, k), start)
            total += _count_cached(w.start, w.images)
    return total


def reduced_word_count(w: Permutation, cache: dict | None = None) -> int:
    """Number of reduced words of ``w``.

    Uses ``|R(w)| = sum |R(w s_i)|`` over right descents.  The default memo is
    a process-wide LRU cache; pass ``cache`` (a dict) to confine it to the
    caller.
    """
    if cache is None:
        return _count_cached(w.start, w.images)

    def rec(start, images):
        if not images:
            return 1
        key = (start, images)
        hit = cache.get(key)
        if hit is not None:
            return hit
        total = 0
        for k in range(len(images) - 1):
            if images[k] > images[k + 1]:
                v = Permutation(_swap_positions(images, k), start)
                total += rec(v.start, v.images)
        cache[key] = total
        return total

    return rec(w.start, w.images)


def reduced_words(w: Permutation) -> Iterator[tuple[int, ...]]:
    """Reduced words of ``w`` in lexicographic order.

    A word ``(a1, ..., al)`` satisfies ``w == s_{a1} * ... * s_{al}``.
    """
    if w.is_identity():
        yield ()
        return
    for i in w.left_descents():
        rest = Permutation.s(i) * w
        for word in reduced_words(rest):
            yield (i,) + word


def diagram_code_shape(w: Permutation) -> DiagramData:
    """Rothe diagram ``{(i, w(j)) : i < j, w(i) > w(j)}``, code and shape."""
    if w.is_identity():
        return DiagramData(frozenset(), (), ())
    if w.start < 1:
        raise ValueError("diagram is defined for permutations of the positive integers")
    n = w.end
    diagram = frozenset(
        (i, w(j)) for i in range(1, n + 1) for j in range(i + 1, n + 1) if w(i) > w(j)
    )
    code = [0] * n
    for i, _ in diagram:
        code[i - 1] += 1
    while code and code[-1] == 0:
        code.pop()
    shape = tuple(sorted((c for c in code if c), reverse=True))
    return DiagramData(diagram, tuple(code), shape)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[tuple[int, ...]]:
    text = text.strip()
    if not text.startswith("("):
        raise ValueError(f"not in cycle notation: {text!r}")
    if _CYCLE_RE.sub("", text).strip():
        raise ValueError(f"malformed cycle notation: {text!r}")
    return [tuple(int(t) for t in body.split(",")) for body in _CYCLE_RE.findall(text)]


def parse_oneline(text: str) -> tuple[int, ...]:
    text = text.strip()
    if "," in text or " " in text:
        return tuple(int(t) for t in re.split(r"[,\s]+", text) if t)
    if not text.isdigit():
        raise ValueError(f"not in one-line notation: {text!r}")
    return tuple(int(c) for c in text)


def parse_permutation(text: str) -> Permutation:
    """Parse ``"4321"``, ``"4,3,2,1"`` or ``"(1,4)(2,3)"``."""
    text = text.strip()
    if text in ("", "1", "()"):
        return Permutation()
    if text.startswith("("):
        return Permutation.from_cycles(parse_cycles(text))
    return Permutation.from_oneline(parse_oneline(text))
