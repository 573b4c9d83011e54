"""Transition formulas and the FPF Lascoux-Schutzenberger tree.

Starting at ``z``, the map ``eta`` swaps the maximal FPF-visible inversion
``(q, r)`` to get ``y``; the children of ``z`` are the covers
``(i, p) y (i, p)`` with ``i < p = y(q)``.  Leaves are FPF-Grassmannian and
contribute ``P_nu`` for their shape ``nu``, so counting leaf shapes gives the
Schur P-expansion of ``F^FPF_z``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .fpf import (
    FpfInvolution,
    bruhat_cover_check,
    ell_fpf,
    fpf_shape,
    grassmannian_data,
    max_visible_inversion,
    visible_data,
)
from .partitions import dominance_leq, is_strict, key_str, transpose
from .polyring import LaurentPoly, fpf_schubert
from .report import Report
from .symfunc import SymExpansion, expand_symmetric, fpf_stanley_monomial, to_monomial

__all__ = [
    "psi_plus",
    "psi_minus",
    "psi_sets",
    "eta",
    "tree_children",
    "LSTree",
    "DepthLimitExceeded",
    "build_tree",
    "expand_fpf_stanley",
    "verify_transition",
    "triangularity_report",
]

DEFAULT_DEPTH_LIMIT = 10_000


class DepthLimitExceeded(RuntimeError):
    pass


def _extent(y: FpfInvolution, r: int) -> tuple[int, int]:
    pts = [r, y(r)]
    if not y.is_theta():
        pts += [y.lo, y.hi]
    return min(pts), max(pts)


def psi_plus(y: FpfInvolution, r: int) -> list[FpfInvolution]:
    """Covers ``(r, j) y (r, j)`` of ``y`` with ``j > r``, ordered by ``j``.

    Past the window a Theta-cycle always sits strictly between ``y(r)`` and
    ``y(j)``, so only ``j`` up to two beyond the window can qualify.
    """
    _, hi = _extent(y, r)
    hi += hi % 2
    return [y.conjugate(r, j) for j in range(r + 1, hi + 3) if bruhat_cover_check(y, r, j)]


def psi_minus(y: FpfInvolution, r: int) -> list[FpfInvolution]:
    """Covers ``(i, r) y (i, r)`` of ``y`` with ``i < r``, ordered by ``i``.

    Scans every ``i`` down to the left edge, then one Theta-cycle at a time
    until two consecutive cycles add nothing.
    """
    lo, _ = _extent(y, r)
    lo -= 1 - lo % 2  # odd
    found = [i for i in range(r - 1, lo - 1, -1) if bruhat_cover_check(y, i, r)]
    idle, a = 0, lo - 2
    while idle < 2:
        hits = [i for i in (a + 1, a) if i < r and bruhat_cover_check(y, i, r)]
        found += hits
        idle = 0 if hits else idle + 1
        a -= 2
    return [y.conjugate(i, r) for i in sorted(found)]


def psi_sets(y: FpfInvolution, r: int, direction: str) -> list[FpfInvolution]:
    if direction == "plus":
        return psi_plus(y, r)
    if direction == "minus":
        return psi_minus(y, r)
    raise ValueError(f"direction must be 'plus' or 'minus', not {direction!r}")


@dataclass(frozen=True)
class EtaData:
    y: FpfInvolution
    q: int
    r: int
    p: int


def eta(z: FpfInvolution) -> EtaData:
    inv = max_visible_inversion(z)
    if inv is None:
        raise ValueError("eta is undefined at Theta")
    q, r = inv
    y = z.conjugate(q, r)
    return EtaData(y, q, r, y(q))


def tree_children(z: FpfInvolution) -> list[FpfInvolution]:
    if grassmannian_data(z) is not None:
        return []
    e = eta(z)
    return psi_minus(e.y, e.p)


@dataclass
class LSTree:
    root: FpfInvolution
    children: dict[FpfInvolution, list[FpfInvolution]] = field(default_factory=dict)
    leaves: list = field(default_factory=list)
    nodes: int = 0
    depth: int = 0

    def leaf_shapes(self) -> Counter:
        return Counter(leaf.nu for leaf in self.leaves)

    def expansion(self) -> SymExpansion:
        return SymExpansion("schurP", dict(self.leaf_shapes()), ell_fpf(self.root))

    def to_dot(self) -> str:
        """Graphviz source; a node reached twice is drawn twice."""
        lines = ["digraph LSTree {", '  node [shape=box, fontname="monospace"];']
        counter = 0

        def emit(v: FpfInvolution, depth: int) -> str:
            nonlocal counter
            name = f"n{counter}"
            counter += 1
            kids = self.children.get(v, [])
            label = str(v)
            if not kids:
                data = grassmannian_data(v)
                label += f"\\nP[{key_str(data.nu)}]"
            lines.append(f'  {name} [label="{label}"];')
            for c in kids:
                child = emit(c, depth + 1)
                lines.append(f"  {name} -> {child};")
            return name

        emit(self.root, 0)
        lines.append("}")
        return "\n".join(lines)


def build_tree(z: FpfInvolution, depth_limit: int = DEFAULT_DEPTH_LIMIT) -> LSTree:
    tree = LSTree(z)
    stack = [(z, 0)]
    while stack:
        v, d = stack.pop()
        tree.nodes += 1
        tree.depth = max(tree.depth, d)
        if d > depth_limit:
            raise DepthLimitExceeded(f"tree deeper than {depth_limit} at {v}")
        if v not in tree.children:
            tree.children[v] = tree_children(v)
        kids = tree.children[v]
        if not kids:
            tree.leaves.append(grassmannian_data(v))
        for c in reversed(kids):
            stack.append((c, d + 1))
    return tree


def _leaf_counts(z: FpfInvolution, memo: dict, depth: int, limit: int) -> Counter:
    hit = memo.get(z)
    if hit is not None:
        return hit
    if depth > limit:
        raise DepthLimitExceeded(f"tree deeper than {limit} at {z}")
    data = grassmannian_data(z)
    if data is not None:
        out = Counter({data.nu: 1})
    else:
        out = Counter()
        for c in tree_children(z):
            out.update(_leaf_counts(c, memo, depth + 1, limit))
    memo[z] = out
    return out


_shared_memo: dict = {}


def expand_fpf_stanley(z: FpfInvolution, depth_limit: int = DEFAULT_DEPTH_LIMIT,
                       memo: dict | None = None) -> SymExpansion:
    """Exact Schur P-expansion of ``F^FPF_z`` by counting leaf shapes.

    Shapes are unchanged by even shifts, so subtrees are memoized on the
    normalized involution.
    """
    memo = _shared_memo if memo is None else memo
    counts = _leaf_counts(z.normalized(), memo, 0, depth_limit)
    return SymExpansion("schurP", dict(counts), ell_fpf(z))


def _sum_schubert(zs) -> LaurentPoly:
    total = LaurentPoly()
    for v in zs:
        if v.in_F_infinity():
            total = total + fpf_schubert(v)
    return total


def _sum_stanley(zs, N: int) -> dict:
    total: dict = {}
    for v in zs:
        for mu, c in fpf_stanley_monomial(v, N).coeffs.items():
            total[mu] = total.get(mu, 0) + c
    return {k: v for k, v in total.items() if v}


def verify_transition(y: FpfInvolution, p: int, q: int, series: bool = True) -> Report:
    """Check both transition identities at the cycle ``(p, q)`` of ``y``.

    The polynomial identity needs ``y`` in F_infinity and ``p >= 1``;
    Schubert polynomials of terms outside F_infinity count as zero.
    """
    p, q = min(p, q), max(p, q)
    if y(p) != q:
        raise ValueError(f"({p},{q}) is not a cycle of {y}")
    plus = psi_plus(y, q)
    minus = psi_minus(y, p)
    details = {
        "y": str(y),
        "cycle": [p, q],
        "psi_plus": [str(v) for v in plus],
        "psi_minus": [str(v) for v in minus],
    }
    passed = bool(plus) and bool(minus)
    if y.in_F_infinity() and p >= 1:
        lhs = (LaurentPoly.var(p) + LaurentPoly.var(q)) * fpf_schubert(y)
        rhs = _sum_schubert(plus) - _sum_schubert(minus)
        details["polynomial"] = lhs == rhs
        passed &= lhs == rhs
    if series:
        N = ell_fpf(y) + 1
        ok = _sum_stanley(plus, N) == _sum_stanley(minus, N)
        details["series"] = ok
        details["truncation"] = N
        passed &= ok
    return Report("transition", passed, details)


def triangularity_report(z: FpfInvolution, schur: str = "auto") -> Report:
    """Check unitriangularity of the Schur P-expansion in dominance order.

    ``schur`` controls the Schur-basis check: ``"auto"`` runs it only when
    ``nu`` is self-conjugate, ``"always"`` also checks the two extreme Schur
    terms otherwise, ``"never"`` skips it.
    """
    nu = fpf_shape(z)
    nut = transpose(nu)
    exp = expand_fpf_stanley(z)
    others = [lam for lam in exp.coeffs if lam != nu]
    checks = {
        "strict": is_strict(nu),
        "leading_coefficient": exp.coeffs.get(nu, 0) == 1,
        "lower_terms": all(dominance_leq(lam, nu) for lam in others),
        "transpose_below": dominance_leq(nut, nu),
    }
    details = {"z": str(z), "nu": list(nu), "expansion": exp.to_json()["coeffs"]}
    run_schur = schur == "always" or (schur == "auto" and nut == nu)
    if run_schur and schur != "never":
        s = expand_symmetric(to_monomial(exp, sum(nu)), "schur")
        if nut == nu:
            checks["schur_single"] = s.coeffs == {nu: 1}
        else:
            checks["schur_extremes"] = (
                s.coeffs.get(nu) == 1
                and s.coeffs.get(nut) == 1
                and all(
                    lam in (nu, nut) or (dominance_leq(nut, lam) and dominance_leq(lam, nu))
                    for lam in s.coeffs
                )
                and all(c > 0 for c in s.coeffs.values())
            )
    details["checks"] = checks
    return Report("triangularity", all(checks.values()), details)
