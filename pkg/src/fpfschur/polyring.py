"""Laurent polynomials in ``x1, x2, ...`` with divided differences, Schubert
polynomials and their fixed-point-free involution analogues."""

from __future__ import annotations

import json
import re
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .fpf import FpfInvolution, GrassmannianData, fpf_diagram_code_shape, map_F
from .perm import Permutation

__all__ = [
    "LaurentPoly",
    "x",
    "divided_difference",
    "isobaric",
    "dd_chain",
    "pi_chain",
    "pi_longest",
    "swap_vars",
    "schubert",
    "fpf_schubert",
    "G_kernel",
    "grassmannian_schubert_via_pi",
    "dominant_product",
    "least_term",
]


def _trim(e: Iterable[int]) -> tuple[int, ...]:
    e = list(e)
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


def _grlex_key(item):
    e, _ = item
    return (-sum(e), tuple(-v for v in e))


class LaurentPoly:
    """Immutable map from exponent vectors to nonzero integers.

    Exponent vectors are tuples with trailing zeros dropped; entry ``k`` is
    the power of ``x_{k+1}`` and may be negative.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Sequence[int], int] | None = None):
        clean: dict[tuple[int, ...], int] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    key = _trim(e)
                    clean[key] = clean.get(key, 0) + c
            clean = {e: c for e, c in clean.items() if c}
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        p = cls.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls._raw({(): c} if c else {})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: int = 1) -> "LaurentPoly":
        return cls({tuple(exps): coeff})

    @classmethod
    def var(cls, i: int, power: int = 1) -> "LaurentPoly":
        if i < 1:
            raise ValueError("variables are x1, x2, ...")
        return cls.monomial((0,) * (i - 1) + (power,))

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly()
            return LaurentPoly._raw({e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                if len(e1) < len(e2):
                    e = tuple(a + b for a, b in zip(e1 + (0,) * (len(e2) - len(e1)), e2))
                else:
                    e = tuple(a + b for a, b in zip(e1, e2 + (0,) * (len(e1) - len(e2))))
                e = _trim(e)
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise ValueError("coefficient is not a unit")
            return LaurentPoly._raw({_trim(-v for v in e): c}) ** (-k)
        out = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    # -- structure --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def nvars(self) -> int:
        return max((len(e) for e in self.terms), default=0)

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def degree(self) -> int | None:
        """Total degree if homogeneous, ``None`` for zero; raises otherwise."""
        ds = self.degrees()
        if not ds:
            return None
        if len(ds) > 1:
            raise ValueError("polynomial is not homogeneous")
        return ds.pop()

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def is_polynomial(self) -> bool:
        return all(v >= 0 for e in self.terms for v in e)

    def coeff(self, exps: Sequence[int]) -> int:
        return self.terms.get(_trim(exps), 0)

    def items_sorted(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items(), key=_grlex_key)

    def truncate(self, n: int) -> "LaurentPoly":
        """Set ``x_{n+1}, x_{n+2}, ...`` to zero (polynomials only)."""
        return LaurentPoly._raw({e: c for e, c in self.terms.items() if len(e) <= n})

    def shift_vars(self, k: int) -> "LaurentPoly":
        """Substitute ``x_i -> x_{i+k}`` (``k >= 0``)."""
        return LaurentPoly._raw({((0,) * k + e if e else e): c for e, c in self.terms.items()})

    def evaluate(self, values: Sequence) -> object:
        total = 0
        for e, c in self.terms.items():
            term = c
            for v, p in zip(values, e):
                term = term * v ** p
            total += term
        return total

    # -- text -------------------------------------------------------------

    @staticmethod
    def _monomial_str(e: tuple[int, ...]) -> str:
        parts = []
        for k, p in enumerate(e, start=1):
            if p == 1:
                parts.append(f"x{k}")
            elif p:
                parts.append(f"x{k}^{p}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for e, c in self.items_sorted():
            mono = self._monomial_str(e)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            out.append((sign, body))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    _TERM = re.compile(r"^(\d+)?\*?((?:x\d+(?:\^-?\d+)?\*?)*)$")

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Inverse of ``str``: sums of ``c*x1^a*x3^b`` terms."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls()
        if s[0] not in "+-":
            s = "+" + s
        terms: dict[tuple[int, ...], int] = {}
        for chunk in re.split(r"(?<!\^)(?=[+-])", s):
            if not chunk:
                continue
            sign, body = chunk[0], chunk[1:]
            m = cls._TERM.match(body)
            if not m or not body:
                raise ValueError(f"cannot parse term {body!r}")
            coeff = int(m.group(1)) if m.group(1) else 1
            exps: dict[int, int] = {}
            for var, power in re.findall(r"x(\d+)(?:\^(-?\d+))?", m.group(2)):
                exps[int(var)] = exps.get(int(var), 0) + (int(power) if power else 1)
            n = max(exps, default=0)
            e = _trim(exps.get(k, 0) for k in range(1, n + 1))
            terms[e] = terms.get(e, 0) + (coeff if sign == "+" else -coeff)
        return cls(terms)

    def to_json(self) -> dict[str, int]:
        return {",".join(map(str, e)): c for e, c in self.items_sorted()}

    @classmethod
    def from_json(cls, data: Mapping[str, int] | str) -> "LaurentPoly":
        if isinstance(data, str):
            data = json.loads(data)
        return cls({tuple(int(v) for v in k.split(",")) if k else (): c for k, c in data.items()})


def x(i: int) -> LaurentPoly:
    return LaurentPoly.var(i)


# -- operators ----------------------------------------------------------------


def _pad(e: tuple[int, ...], n: int) -> list[int]:
    return list(e) + [0] * (n - len(e))


def swap_vars(f: LaurentPoly, i: int) -> LaurentPoly:
    """``s_i f``: exchange ``x_i`` and ``x_{i+1}``."""
    out = {}
    for e, c in f.terms.items():
        v = _pad(e, i + 1)
        v[i - 1], v[i] = v[i], v[i - 1]
        out[_trim(v)] = c
    return LaurentPoly._raw(out)


def divided_difference(f: LaurentPoly, i: int) -> LaurentPoly:
    """``(f - s_i f) / (x_i - x_{i+1})``, computed termwise."""
    if i < 1:
        raise ValueError("divided differences are indexed by positive integers")
    out: dict[tuple[int, ...], int] = {}
    for e, c in f.terms.items():
        v = _pad(e, i + 1)
        a, b = v[i - 1], v[i]
        d = a - b
        if d == 0:
            continue
        if d > 0:
            pairs = [(a - 1 - k, b + k) for k in range(d)]
            sign = c
        else:
            pairs = [(a + k, b - 1 - k) for k in range(-d)]
            sign = -c
        for p, q in pairs:
            v[i - 1], v[i] = p, q
            key = _trim(v)
            out[key] = out.get(key, 0) + sign
    return LaurentPoly._raw({e: c for e, c in out.items() if c})


def isobaric(f: LaurentPoly, i: int) -> LaurentPoly:
    """``pi_i f = d_i(x_i f)``."""
    return divided_difference(f * LaurentPoly.var(i), i)


def dd_chain(f: LaurentPoly, b: int, a: int) -> LaurentPoly:
    """``d_{b-1} ... d_{a+1} d_a f`` (the identity when ``a >= b``)."""
    for i in range(a, b):
        f = divided_difference(f, i)
    return f


def pi_chain(f: LaurentPoly, b: int, a: int) -> LaurentPoly:
    """``pi_{b-1} ... pi_{a+1} pi_a f``."""
    for i in range(a, b):
        f = isobaric(f, i)
    return f


def pi_longest(f: LaurentPoly, n: int) -> LaurentPoly:
    """``pi_{w_n} f``, applying ``pi_1``, then ``pi_2 pi_1``, and so on."""
    for k in range(1, n):
        for i in range(k, 0, -1):
            f = isobaric(f, i)
    return f


# -- Schubert polynomials -------------------------------------------------------


def _last_descent_data(w: Permutation):
    line = list(w.oneline())
    n = len(line)
    r = max(i for i in range(1, n) if line[i - 1] > line[i])
    s = max(j for j in range(r + 1, n + 1) if line[j - 1] < line[r - 1])
    line[r - 1], line[s - 1] = line[s - 1], line[r - 1]
    return r, line


@lru_cache(maxsize=1 << 16)
def _schubert_transition(w: Permutation) -> LaurentPoly:
    if w.is_identity():
        return LaurentPoly.const(1)
    r, v = _last_descent_data(w)
    total = LaurentPoly.var(r) * _schubert_transition(Permutation.from_oneline(v))
    vr = v[r - 1]
    hi = 0  # largest value seen in (i, r) below v(r)
    for i in range(r - 1, 0, -1):
        vi = v[i - 1]
        if vi < vr and vi > hi:
            u = list(v)
            u[i - 1], u[r - 1] = u[r - 1], u[i - 1]
            total = total + _schubert_transition(Permutation.from_oneline(u))
        if vi < vr:
            hi = max(hi, vi)
    return total


@lru_cache(maxsize=1 << 12)
def _schubert_dd(w: Permutation) -> LaurentPoly:
    if w.is_identity():
        return LaurentPoly.const(1)
    n = w.end
    # d_{w^{-1} w_n} applied to x^delta_n, one descent at a time
    longest = Permutation.from_oneline(range(n, 0, -1))
    f = LaurentPoly.monomial(tuple(n - k for k in range(1, n + 1)))
    u = w.inverse() * longest
    # u = s_{a1} ... s_{al}; d_u = d_{a1} ... d_{al}, so apply a_l first
    word = []
    while not u.is_identity():
        i = u.right_descents()[-1]
        word.append(i)
        u = u * Permutation.s(i)
    for i in word:
        f = divided_difference(f, i)
    return f


def schubert(w: Permutation, method: str = "transition") -> LaurentPoly:
    """The Schubert polynomial of ``w``.

    ``transition`` uses the Lascoux-Schutzenberger recursion on the last
    descent; ``divided_difference`` applies ``d_{w^{-1} w_n}`` to
    ``x1^{n-1} ... x_{n-1}``.
    """
    if w.images and w.start < 1:
        raise ValueError("Schubert polynomials need a permutation of the positive integers")
    if method == "transition":
        return _schubert_transition(w)
    if method == "divided_difference":
        return _schubert_dd(w)
    raise ValueError(f"unknown method {method!r}")


@lru_cache(maxsize=1 << 14)
def fpf_schubert(z: FpfInvolution, method: str = "transition") -> LaurentPoly:
    """Sum of the Schubert polynomials of the atoms of ``z``."""
    from .atoms import atoms

    total = LaurentPoly()
    for w in atoms(z).atoms:
        total = total + schubert(w, method)
    return total


def G_kernel(r: int, n: int) -> LaurentPoly:
    """``prod_{i<=r} prod_{j<=n-i} (1 + x_{i+j} / x_i)``."""
    out = LaurentPoly.const(1)
    for i in range(1, r + 1):
        for j in range(1, n - i + 1):
            e = [0] * (i + j)
            e[i - 1], e[i + j - 1] = -1, 1
            out = out * LaurentPoly({(): 1, tuple(e): 1})
    return out


def grassmannian_schubert_via_pi(data: GrassmannianData) -> LaurentPoly:
    """``pi_{phi_1,1} ... pi_{phi_r,r} (x^nu G_{r,n})``."""
    phi, n = data.phi, data.n
    r = len(phi)
    if r == 0:
        return LaurentPoly.const(1)
    if phi[0] < 1:
        raise ValueError("phi must be positive")
    nu = tuple(n - p for p in phi)
    f = LaurentPoly.monomial(nu) * G_kernel(r, n)
    for k in range(r, 0, -1):
        f = pi_chain(f, phi[k - 1], k)
    return f


def dominant_product(z: FpfInvolution) -> LaurentPoly:
    """``prod (x_i + x_j)`` over the FPF diagram of ``z``."""
    out = LaurentPoly.const(1)
    for i, j in sorted(fpf_diagram_code_shape(z).diagram):
        out = out * (LaurentPoly.var(i) + LaurentPoly.var(j))
    return out


def least_term(f: LaurentPoly) -> LaurentPoly:
    """The term with lexicographically least exponent vector (``0`` for ``0``)."""
    if not f.terms:
        return LaurentPoly()
    n = f.nvars()
    e = min(f.terms, key=lambda e: _pad(e, n))
    return LaurentPoly._raw({e: f.terms[e]})
