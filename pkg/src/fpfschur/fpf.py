"""Fixed-point-free involutions of the integers.

Every element of the conjugacy class of ``Theta : i -> i - (-1)**i`` agrees
with ``Theta`` outside a finite window ``[offset + 1, offset + 2m]`` with
``offset`` even.  :class:`FpfInvolution` keeps that window trimmed so two
values are equal exactly when they are the same map of the integers.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .perm import Permutation, parse_cycles, parse_oneline
from .partitions import strict_partitions, transpose

__all__ = [
    "FpfInvolution",
    "FpfStats",
    "FpfDiagramData",
    "GrassmannianData",
    "theta",
    "embed_iota",
    "fpf_stats",
    "ell_fpf",
    "visible_data",
    "visible_descents",
    "max_visible_inversion",
    "fpf_descents",
    "fpf_diagram_code_shape",
    "fpf_shape",
    "map_I",
    "map_F",
    "classify",
    "is_fpf_grassmannian",
    "is_fpf_dominant",
    "grassmannian_data",
    "standardize",
    "pattern_restrict",
    "bruhat_cover_check",
    "essential_set",
    "all_fpf_matchings",
    "all_fpf",
    "parse_fpf",
]


def theta(i: int) -> int:
    return i + 1 if i % 2 else i - 1


def _trim(offset: int, images: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    lo, hi = 0, len(images)
    while hi - lo >= 2 and images[lo] == offset + lo + 2 and images[lo + 1] == offset + lo + 1:
        lo += 2
    while hi - lo >= 2 and images[hi - 1] == offset + hi - 1 and images[hi - 2] == offset + hi:
        hi -= 2
    if lo == hi:
        return 0, ()
    return offset + lo, images[lo:hi]


class FpfInvolution:
    """A fixed-point-free involution of the integers agreeing with Theta
    outside a finite window."""

    __slots__ = ("offset", "images", "_hash")

    def __init__(self, offset: int, images: Sequence[int], *, _trusted: bool = False):
        images = tuple(images)
        if not _trusted:
            if offset % 2:
                raise ValueError("window offset must be even")
            if len(images) % 2:
                raise ValueError("window must have even length")
            lo, hi = offset + 1, offset + len(images)
            for k, v in enumerate(images):
                i = lo + k
                if not lo <= v <= hi or v == i or images[v - lo] != i:
                    raise ValueError(f"not a fixed-point-free involution of [{lo}, {hi}]")
        self.offset, self.images = _trim(offset, images)
        self._hash = hash((self.offset, self.images))

    @classmethod
    def theta(cls) -> "FpfInvolution":
        return cls(0, (), _trusted=True)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]]) -> "FpfInvolution":
        """Build from cycles; integers not mentioned follow Theta.

        The mentioned integers must form a union of Theta-aligned blocks
        ``{2k-1, 2k}`` after filling, i.e. the result must be an FPF
        involution agreeing with Theta elsewhere.
        """
        mapping: dict[int, int] = {}
        for cyc in cycles:
            if len(cyc) != 2 or cyc[0] == cyc[1]:
                raise ValueError(f"{tuple(cyc)} is not a 2-cycle")
            a, b = cyc
            if a in mapping or b in mapping:
                raise ValueError(f"{a} or {b} appears twice")
            mapping[a], mapping[b] = b, a
        if not mapping:
            return cls.theta()
        lo, hi = min(mapping), max(mapping)
        lo -= 1 - lo % 2  # round down to odd
        hi += hi % 2  # round up to even
        images = tuple(mapping.get(i, theta(i)) for i in range(lo, hi + 1))
        return cls(lo - 1, images)

    # -- access -----------------------------------------------------------

    @property
    def lo(self) -> int:
        return self.offset + 1

    @property
    def hi(self) -> int:
        return self.offset + len(self.images)

    @property
    def key(self) -> tuple[int, tuple[int, ...]]:
        return (self.offset, self.images)

    def __call__(self, i: int) -> int:
        k = i - self.offset - 1
        if 0 <= k < len(self.images):
            return self.images[k]
        return i + 1 if i % 2 else i - 1

    def is_theta(self) -> bool:
        return not self.images

    def in_F_infinity(self) -> bool:
        return self.offset >= 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, FpfInvolution):
            return NotImplemented
        return self.offset == other.offset and self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "FpfInvolution") -> bool:
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        return [self(i) for i in range(lo, hi + 1)] < [other(i) for i in range(lo, hi + 1)]

    def cycles(self) -> list[tuple[int, int]]:
        """Non-Theta-window cycles ``(a, b)`` with ``a < b``, sorted by ``a``."""
        lo = self.lo
        return [(lo + k, v) for k, v in enumerate(self.images) if v > lo + k]

    def matching(self, n: int | None = None) -> tuple[int, ...]:
        """One-line images on ``[1, n]`` for elements of ``iota(F_n)``."""
        if self.offset < 0:
            raise ValueError("not in F_infinity")
        if n is None:
            n = self.hi if self.images else 0
        if n % 2 or n < (self.hi if self.images else 0):
            raise ValueError(f"window does not fit in [1, {n}]")
        return tuple(self(i) for i in range(1, n + 1))

    def support_size(self) -> int:
        """Smallest even ``n`` with the element in ``iota(F_n)`` (F_infinity only)."""
        if self.offset < 0:
            raise ValueError("not in F_infinity")
        return self.hi if self.images else 0

    # -- operations -------------------------------------------------------

    def conjugate(self, a: int, b: int) -> "FpfInvolution":
        """``(a, b) z (a, b)`` for the transposition ``(a, b)``."""
        if a == b:
            return self
        lo = min(self.lo, a, b) if self.images else min(a, b)
        hi = max(self.hi, a, b) if self.images else max(a, b)
        lo -= 1 - lo % 2
        hi += hi % 2

        def t(i):
            return b if i == a else a if i == b else i

        images = tuple(t(self(t(i))) for i in range(lo, hi + 1))
        return FpfInvolution(lo - 1, images, _trusted=True)

    def conjugate_simple(self, i: int) -> "FpfInvolution":
        return self.conjugate(i, i + 1)

    def shift(self, n: int) -> "FpfInvolution":
        """``z >> n``, defined only for even ``n``."""
        if n % 2:
            raise ValueError("odd shifts leave the Theta class")
        if not self.images:
            return self
        return FpfInvolution(self.offset + n, tuple(v + n for v in self.images), _trusted=True)

    def normalized(self) -> "FpfInvolution":
        """Shift so that the window starts at 1."""
        return self.shift(-self.offset) if self.images else self

    def to_permutation(self) -> Permutation:
        if not self.images:
            return Permutation()
        return Permutation(self.images, self.lo)

    # -- text -------------------------------------------------------------

    def __str__(self) -> str:
        """Cycle notation; elements of F_infinity are written on ``[1, n]``."""
        if not self.images:
            return "Theta"
        cyc = self.cycles()
        if self.offset >= 0:
            cyc = [(a, a + 1) for a in range(1, self.lo, 2)] + cyc
        return "".join(f"({a},{b})" for a, b in cyc)

    def __repr__(self) -> str:
        return f"FpfInvolution({self})"

    def to_json(self) -> dict:
        """``{"offset": k, "pairs": [...]}`` with pairs numbered from 1 inside
        the window ``[k + 1, k + 2m]``."""
        off = self.offset
        return {"offset": off, "pairs": [[a - off, b - off] for a, b in self.cycles()]}

    @classmethod
    def from_json(cls, data: dict | str) -> "FpfInvolution":
        if isinstance(data, str):
            data = json.loads(data)
        off = data["offset"]
        if off % 2:
            raise ValueError("window offset must be even")
        return cls.from_cycles([(a + off, b + off) for a, b in data["pairs"]])

    def ascii_arcs(self) -> str:
        """Draw the window as a matching diagram (cosmetic)."""
        if not self.images:
            return "(Theta)"
        lo, hi = self.lo, self.hi
        width = hi - lo + 1
        cyc = self.cycles()
        rows = []
        for a, b in sorted(cyc, key=lambda c: c[1] - c[0]):
            row = [" "] * (2 * width)
            ca, cb = 2 * (a - lo), 2 * (b - lo)
            row[ca] = "+"
            row[cb] = "+"
            for k in range(ca + 1, cb):
                row[k] = "-"
            rows.append("".join(row).rstrip())
        rows.reverse()
        rows.append(" ".join("|" for _ in range(width)))
        rows.append(" ".join(str((lo + k) % 10) for k in range(width)))
        return "\n".join(rows)


def parse_fpf(text: str) -> FpfInvolution:
    """Parse a perfect matching on ``[n]`` in cycle or one-line notation."""
    text = text.strip()
    if text.lower() in ("theta", "", "()"):
        return FpfInvolution.theta()
    if text.startswith("("):
        cycles = parse_cycles(text)
        points = sorted(p for c in cycles for p in c)
        if any(len(c) != 2 for c in cycles) or points != list(range(1, len(points) + 1)):
            raise ValueError(f"{text!r} is not a perfect matching of [n]")
        images = [0] * len(points)
        for a, b in cycles:
            images[a - 1], images[b - 1] = b, a
        return embed_iota(images)
    return embed_iota(parse_oneline(text))


def embed_iota(matching: Sequence[int] | Iterable[Sequence[int]]) -> FpfInvolution:
    """``iota : F_n -> F_infinity``.

    Accepts the one-line images ``z(1), ..., z(n)`` or a list of pairs
    covering ``[n]``.
    """
    matching = list(matching)
    if matching and not isinstance(matching[0], int):
        pairs = [tuple(p) for p in matching]
        n = 2 * len(pairs)
        images = [0] * n
        for a, b in pairs:
            if not (1 <= a <= n and 1 <= b <= n):
                raise ValueError("pairs must cover [n]")
            images[a - 1], images[b - 1] = b, a
        if 0 in images:
            raise ValueError("pairs must cover [n]")
        matching = images
    n = len(matching)
    if n % 2:
        raise ValueError("F_n is empty for odd n")
    for i, v in enumerate(matching, start=1):
        if v == i:
            raise ValueError(f"fixed point {i}")
        if not 1 <= v <= n or matching[v - 1] != i:
            raise ValueError("not an involution of [n]")
    return FpfInvolution(0, tuple(matching), _trusted=True)


def all_fpf_matchings(n: int) -> Iterator[tuple[int, ...]]:
    """All fixed-point-free involutions of ``[n]`` as one-line tuples, in
    lexicographic order."""
    if n % 2:
        return
    images = [0] * n

    def rec(free: list[int]):
        if not free:
            yield tuple(images)
            return
        a = free[0]
        for k in range(1, len(free)):
            b = free[k]
            images[a - 1], images[b - 1] = b, a
            yield from rec(free[1:k] + free[k + 1:])

    yield from rec(list(range(1, n + 1)))


def all_fpf(n: int) -> Iterator[FpfInvolution]:
    for m in all_fpf_matchings(n):
        yield FpfInvolution(0, m, _trusted=True)


# -- statistics -------------------------------------------------------------


@dataclass(frozen=True)
class FpfStats:
    ell_fpf: int
    inv_fpf: frozenset[tuple[int, int]]
    des_R_fpf: frozenset[int]
    cycles: tuple[tuple[int, int], ...]


def ell_fpf(z: FpfInvolution) -> int:
    """``2 * #nestings + #crossings`` over the window cycles."""
    cyc = z.cycles()
    total = 0
    for k, (a, b) in enumerate(cyc):
        for c, d in cyc[k + 1:]:
            # a < c always
            if d < b:
                total += 2
            elif c < b:
                total += 1
    return total


def fpf_descents(z: FpfInvolution) -> list[int]:
    """``i`` with ``s_i`` in ``Des_R^FPF(z)``."""
    lo, img = z.lo, z.images
    return [lo + k for k in range(len(img) - 1) if img[k] > img[k + 1] and img[k] != lo + k + 1]


def fpf_stats(z: FpfInvolution) -> FpfStats:
    lo, hi = z.lo, z.hi
    inv = frozenset(
        (i, j)
        for i in range(lo, hi + 1)
        for j in range(i + 1, hi + 1)
        if z(i) > z(j) and z(i) != j
    )
    return FpfStats(len(inv) // 2, inv, frozenset(fpf_descents(z)), tuple(z.cycles()))


def visible_data(z: FpfInvolution):
    """FPF-visible inversions ``(i, j)``: ``i < j`` and ``z(j) < min(i, z(i))``.

    Returns ``(inversions, descents, max_inversion)``.
    """
    lo, hi = z.lo, z.hi
    inv = set()
    for i in range(lo, hi + 1):
        m = min(i, z(i))
        for j in range(i + 1, hi + 1):
            if z(j) < m:
                inv.add((i, j))
    descents = {i for i, j in inv if j == i + 1}
    return frozenset(inv), frozenset(descents), (max(inv) if inv else None)


def max_visible_inversion(z: FpfInvolution) -> tuple[int, int] | None:
    lo, hi, img = z.lo, z.hi, z.images
    for i in range(hi, lo - 1, -1):
        m = min(i, img[i - lo])
        for j in range(hi, i, -1):
            if img[j - lo] < m:
                return (i, j)
    return None


def visible_descents(z: FpfInvolution) -> list[int]:
    lo, img = z.lo, z.images
    return [
        lo + k
        for k in range(len(img) - 1)
        if img[k + 1] < min(lo + k, img[k])
    ]


# -- diagrams ---------------------------------------------------------------


@dataclass(frozen=True)
class FpfDiagramData:
    diagram: frozenset[tuple[int, int]]
    code: tuple[int, ...]
    nu: tuple[int, ...]


def fpf_diagram_code_shape(z: FpfInvolution) -> FpfDiagramData:
    """``D = {(i, j) : j < i < z(j), j < z(i)}`` with its row counts and
    ``nu(z)``, the transpose of the sorted code."""
    if z.offset < 0:
        raise ValueError("diagram needs an element of F_infinity; shift first")
    if z.is_theta():
        return FpfDiagramData(frozenset(), (), ())
    hi = z.hi
    diagram = frozenset(
        (i, j)
        for j in range(1, hi + 1)
        for i in range(j + 1, min(z(j), hi + 1))
        if j < z(i)
    )
    code = [0] * hi
    for i, _ in diagram:
        code[i - 1] += 1
    while code and code[-1] == 0:
        code.pop()
    nu = transpose(sorted(code, reverse=True))
    return FpfDiagramData(diagram, tuple(code), nu)


def fpf_shape(z: FpfInvolution) -> tuple[int, ...]:
    """``nu(z)``; shift-invariant, so elements outside F_infinity are shifted."""
    if z.offset < 0:
        z = z.shift(-z.offset)
    return fpf_diagram_code_shape(z).nu


def essential_set(diagram: Iterable[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    d = set(diagram)
    return frozenset((i, j) for i, j in d if (i + 1, j) not in d and (i, j + 1) not in d)


# -- the maps I and F -------------------------------------------------------


def map_I(z: FpfInvolution) -> Permutation:
    """Keep the cycles ``(p, q)`` of ``z`` enclosing the larger end of some
    other cycle; every other point becomes fixed."""
    lo, img = z.lo, z.images
    # closers[k] = number of b in [lo, lo+k) with z(b) < b
    closers = [0]
    for k, v in enumerate(img):
        closers.append(closers[-1] + (v < lo + k))
    cycles = []
    for k, q in enumerate(img):
        p = lo + k
        if q > p and closers[q - lo] - closers[k + 1] > 0:
            cycles.append((p, q))
    return Permutation.from_cycles(cycles)


def map_F(y: Permutation) -> FpfInvolution:
    """Pair consecutive fixed points of an involution ``y`` so that the result
    agrees with Theta far to the left and right."""
    if not y.is_involution():
        raise ValueError(f"{y} is not an involution")
    if y.is_identity():
        return FpfInvolution.theta()
    supp = y.support
    m = min(supp) - 1
    m -= m % 2
    hi = max(supp)
    mapping: dict[int, int] = {i: y(i) for i in supp}
    pending = None
    i = m + 1
    while True:
        if i > hi and pending is None and i % 2 == 1:
            break
        if i not in supp:
            if pending is None:
                pending = i
            else:
                mapping[pending], mapping[i] = i, pending
                pending = None
        i += 1
    lo, top = m + 1, i - 1
    return FpfInvolution(m, tuple(mapping[j] for j in range(lo, top + 1)))


@dataclass(frozen=True)
class GrassmannianData:
    """``I(z) = (phi_1, n+1) ... (phi_r, n+r)`` and ``nu = (n - phi_i)``."""

    phi: tuple[int, ...]
    n: int
    nu: tuple[int, ...]

    def involution(self) -> FpfInvolution:
        y = Permutation.from_cycles([(p, self.n + k + 1) for k, p in enumerate(self.phi)])
        return map_F(y)


def grassmannian_data(z: FpfInvolution) -> GrassmannianData | None:
    y = map_I(z)
    if y.is_identity():
        return GrassmannianData((), 0, ())
    cyc = sorted((min(c), max(c)) for c in y.cycles())
    cyc.sort(key=lambda c: c[1])
    n = cyc[0][1] - 1
    phi = tuple(a for a, _ in cyc)
    if [b for _, b in cyc] != list(range(n + 1, n + 1 + len(cyc))):
        return None
    if any(phi[k] >= phi[k + 1] for k in range(len(phi) - 1)) or phi[-1] > n:
        return None
    return GrassmannianData(phi, n, tuple(n - p for p in phi if p < n))


def is_fpf_grassmannian(z: FpfInvolution) -> bool:
    return grassmannian_data(z) is not None


def is_fpf_dominant(z: FpfInvolution) -> bool:
    if z.offset < 0:
        return False
    d = fpf_diagram_code_shape(z).diagram
    shifted_up = {(i - 1, j) for i, j in d}
    for mu in strict_partitions(len(d)):
        shape = {(i + j - 1, i) for i, part in enumerate(mu, start=1) for j in range(1, part + 1)}
        if shape == shifted_up:
            return True
    return False


def classify(z: FpfInvolution):
    """``(is_dominant, is_grassmannian, data)``."""
    data = grassmannian_data(z)
    return is_fpf_dominant(z), data is not None, data


# -- patterns and covers ----------------------------------------------------


def pattern_restrict(z: FpfInvolution, E: Iterable[int]):
    """``([z]_E, [[z]]_E)`` for a finite ``z``-invariant set ``E``."""
    E = sorted(set(E))
    if {z(e) for e in E} != set(E):
        raise ValueError("E is not z-invariant")
    rank = {e: k for k, e in enumerate(E, start=1)}
    std = tuple(rank[z(e)] for e in E)
    return Permutation.from_oneline(std), embed_iota(std)


def standardize(values: Sequence[int]) -> tuple[int, ...]:
    order = sorted(values)
    rank = {v: k for k, v in enumerate(order, start=1)}
    return tuple(rank[v] for v in values)


_COVER_PATTERNS = {
    ((2, 1, 4, 3), (3, 4, 1, 2)),
    ((3, 4, 1, 2), (4, 3, 2, 1)),
}


def bruhat_cover_check(y: FpfInvolution, i: int, j: int) -> bool:
    """Whether ``(i, j) y (i, j)`` covers ``y``, decided by the two local
    conditions on ``A = {i, j, y(i), y(j)}``."""
    if i >= j:
        raise ValueError("need i < j")
    yi, yj = y(i), y(j)
    if not yi < yj:
        return False
    for e in range(i + 1, j):
        if yi < y(e) < yj:
            return False
    A = sorted({i, j, yi, yj})
    if len(A) != 4:
        return False
    z = y.conjugate(i, j)
    before = standardize([y(a) for a in A])
    after = standardize([z(a) for a in A])
    return (before, after) in _COVER_PATTERNS
