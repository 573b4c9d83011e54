"""FPF-vexillary involutions: those whose FPF Stanley symmetric function is a
single Schur P-function."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .fpf import FpfInvolution, embed_iota
from .transition import expand_fpf_stanley

__all__ = ["BAD_PATTERNS", "VexResult", "is_fpf_vexillary", "vexillary_witness", "classify_vexillary"]

_BAD_CYCLES = [
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


def _oneline(text: str) -> tuple[int, ...]:
    pairs = [tuple(int(v) for v in c.split(",")) for c in text.strip("()").split(")(")]
    n = 2 * len(pairs)
    line = [0] * n
    for a, b in pairs:
        line[a - 1], line[b - 1] = b, a
    return tuple(line)


BAD_PATTERNS: tuple[FpfInvolution, ...] = tuple(embed_iota(_oneline(t)) for t in _BAD_CYCLES)
_BAD_LINES = frozenset(_oneline(t) for t in _BAD_CYCLES)

# No pattern begins with the cycle (1,2) or ends with (n-1,n), so a Theta-cycle
# lying entirely left or right of the other chosen cycles never completes a
# match.  The search relies on this; check it once here.
assert all(line[0] != 2 and line[-1] != len(line) - 1 for line in _BAD_LINES)


@dataclass(frozen=True)
class VexResult:
    vexillary: bool
    witness: tuple[int, ...] | None


def _standardize_cycles(cycles) -> tuple[int, ...]:
    pts = sorted(p for c in cycles for p in c)
    rank = {p: k for k, p in enumerate(pts, start=1)}
    line = [0] * len(pts)
    for a, b in cycles:
        line[rank[a] - 1], line[rank[b] - 1] = rank[b], rank[a]
    return tuple(line)


def vexillary_witness(z: FpfInvolution, margin: int = 6, prune: bool = True) -> tuple[int, ...] | None:
    """A ``z``-invariant set ``E`` with ``[z]_E`` a bad pattern, or ``None``.

    ``E`` ranges over unions of 4, 5 or 6 cycles taken from the window plus
    ``margin`` Theta-cycles on each side.  With ``prune`` the subsets using a
    margin cycle are skipped, since such a cycle would standardize to
    ``(1,2)`` or ``(n-1,n)``.
    """
    if margin < 0:
        raise ValueError("margin must be nonnegative")
    cycles = z.cycles()
    if not prune and margin:
        lo = z.lo if cycles else 1
        hi = z.hi if cycles else 0
        left = [(a, a + 1) for a in range(lo - 2 * margin, lo, 2)]
        right = [(a, a + 1) for a in range(hi + 1, hi + 2 * margin, 2)]
        cycles = left + cycles + right
    for size in (4, 5, 6):
        for combo in itertools.combinations(cycles, size):
            if _standardize_cycles(combo) in _BAD_LINES:
                return tuple(sorted(p for c in combo for p in c))
    return None


def _oracle(z: FpfInvolution) -> bool:
    exp = expand_fpf_stanley(z)
    return sum(exp.coeffs.values()) == 1


def is_fpf_vexillary(z: FpfInvolution, mode: str = "pattern", margin: int = 6,
                     prune: bool = True) -> bool:
    """``pattern`` avoids the sixteen bad patterns; ``oracle`` asks whether
    the transition tree has a single leaf."""
    if mode == "pattern":
        return vexillary_witness(z, margin, prune) is None
    if mode == "oracle":
        return _oracle(z)
    raise ValueError(f"unknown mode {mode!r}")


def classify_vexillary(z: FpfInvolution, margin: int = 6) -> VexResult:
    witness = vexillary_witness(z, margin)
    return VexResult(witness is None, witness)
