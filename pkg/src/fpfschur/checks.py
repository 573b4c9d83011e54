"""Cross-check suites behind ``fpfschur verify``.

Each suite runs one family of identities over all (or a seeded sample of)
small cases and returns a :class:`Report`.
"""

from __future__ import annotations

import itertools
import random
from typing import Callable

from .atoms import atoms, fpf_reduced_word_count, fpf_reduced_word_count_dp, fpf_reduced_words
from .census import census
from .fpf import (
    FpfInvolution,
    all_fpf,
    classify,
    fpf_descents,
    fpf_diagram_code_shape,
    parse_fpf,
)
from .perm import Permutation
from .pfaffian import admissible_phis, grassmannian_pfaffian_check
from .polyring import (
    LaurentPoly,
    divided_difference,
    dominant_product,
    fpf_schubert,
    grassmannian_schubert_via_pi,
    least_term,
    schubert,
)
from .report import Report
from .symfunc import fpf_stanley_monomial, fpf_stanley_monomial_atoms, to_monomial
from .transition import expand_fpf_stanley, triangularity_report, verify_transition
from .vexillary import is_fpf_vexillary

__all__ = ["SUITES", "run_suite", "run_all"]

KNOWN = {
    "grassmannian": [1, 3, 12, 41, 124, 350, 952, 2540],
    "visible-descents": [1, 3, 9, 23, 53, 115, 241, 495],
    "vexillary": [1, 3, 15, 92, 617, 4354],
    "rhat": [1, 2, 80, 236544, 108973522944],
}


def _fail_list(name: str, failures: list, total: int) -> Report:
    return Report(name, not failures, {"cases": total, "failures": failures[:10]})


def check_recurrence(max_n: int = 8, **_) -> Report:
    failures = []
    total = 0
    for w_line in itertools.permutations(range(1, 6)):
        w = Permutation.from_oneline(w_line)
        f = schubert(w)
        for i in range(1, 6):
            total += 1
            want = schubert(w * Permutation.s(i)) if w(i) > w(i + 1) else LaurentPoly()
            if divided_difference(f, i) != want:
                failures.append(["S", str(w), i])
    if schubert(Permutation()) != 1:
        failures.append(["S", "1", 0])
    for z in all_fpf(max_n):
        f = fpf_schubert(z)
        desc = set(fpf_descents(z))
        for i in range(1, max_n + 2):
            total += 1
            want = fpf_schubert(z.conjugate_simple(i)) if i in desc else LaurentPoly()
            if divided_difference(f, i) != want:
                failures.append(["FPF", str(z), i])
    return _fail_list("recurrence", failures, total)


def check_transition(max_n: int = 8, samples: int = 100, seed: int = 0, **_) -> Report:
    failures = []
    example = parse_fpf("(1,2)(3,7)(4,5)(6,8)")
    cases = [(example, 3, 7)]
    pool = [(z, a, b) for z in all_fpf(max_n) for a, b in z.cycles() if a >= 1]
    rng = random.Random(seed)
    cases += rng.sample(pool, min(samples, len(pool)))
    for y, p, q in cases:
        if not verify_transition(y, p, q):
            failures.append([str(y), p, q])
    return _fail_list("transition", failures, len(cases))


def check_pfaffian(max_n: int = 5, **_) -> Report:
    failures = []
    total = 0
    for n in range(2, min(max_n, 5) + 1):
        for phi in admissible_phis(n):
            for which in ("schubert", "stanley"):
                total += 1
                if not grassmannian_pfaffian_check(phi, n, which):
                    failures.append([list(phi), n, which])
    return _fail_list("pfaffian", failures, total)


def check_triangularity(max_n: int = 10, **_) -> Report:
    failures = [str(z) for z in all_fpf(max_n) if not triangularity_report(z)]
    return _fail_list("triangularity", failures, sum(1 for _ in all_fpf(max_n)))


def check_oracle(max_n: int = 8, **_) -> Report:
    """Tree expansion vs. FPF reduced-word and atom-sum expansions."""
    failures = []
    total = 0
    for z in all_fpf(max_n):
        total += 1
        words = fpf_stanley_monomial(z)
        tree = to_monomial(expand_fpf_stanley(z), words.truncation)
        if tree.coeffs != words.coeffs or fpf_stanley_monomial_atoms(z).coeffs != words.coeffs:
            failures.append(str(z))
    return _fail_list("oracle", failures, total)


def check_atoms(max_n: int = 8, **_) -> Report:
    failures = []
    total = 0
    for z in all_fpf(min(max_n, 8)):
        total += 1
        if atoms(z).atoms != atoms(z, "bruteforce").atoms:
            failures.append(["atoms", str(z)])
        dp = fpf_reduced_word_count_dp(z)
        if dp != fpf_reduced_word_count(z):
            failures.append(["count", str(z)])
        if max_n <= 6 and dp != sum(1 for _ in fpf_reduced_words(z)):
            failures.append(["words", str(z)])
    return _fail_list("atoms", failures, total)


def check_vexillary(max_n: int = 10, **_) -> Report:
    failures = [
        str(z) for z in all_fpf(max_n) if is_fpf_vexillary(z) != is_fpf_vexillary(z, "oracle")
    ]
    return _fail_list("vexillary", failures, sum(1 for _ in all_fpf(max_n)))


def check_least_term(max_n: int = 8, **_) -> Report:
    failures = []
    total = 0
    for z in all_fpf(max_n):
        total += 1
        code = fpf_diagram_code_shape(z).code
        if least_term(fpf_schubert(z)) != LaurentPoly.monomial(code):
            failures.append(str(z))
    return _fail_list("least-term", failures, total)


def check_grassmannian(max_n: int = 8, **_) -> Report:
    failures = []
    total = 0
    for z in all_fpf(max_n):
        dominant, grass, data = classify(z)
        if dominant:
            total += 1
            if dominant_product(z) != fpf_schubert(z):
                failures.append(["dominant", str(z)])
        if grass:
            total += 1
            if grassmannian_schubert_via_pi(data) != fpf_schubert(z):
                failures.append(["grassmannian", str(z)])
    return _fail_list("grassmannian", failures, total)


def check_census(max_n: int = 8, threads: int = 1, **_) -> Report:
    failures = []
    got = {}
    for stat, known in KNOWN.items():
        limit = min(max_n, 2 * len(known))
        if stat == "vexillary":
            limit = min(limit, 10)
        rows = census(stat, limit, threads)
        got[stat] = [v for _, v in rows]
        if got[stat] != known[: len(rows)]:
            failures.append(stat)
    return Report("census", not failures, {"values": got, "failures": failures})


SUITES: dict[str, Callable[..., Report]] = {
    "recurrence": check_recurrence,
    "transition": check_transition,
    "pfaffian": check_pfaffian,
    "triangularity": check_triangularity,
    "oracle": check_oracle,
    "atoms": check_atoms,
    "vexillary": check_vexillary,
    "least-term": check_least_term,
    "grassmannian": check_grassmannian,
    "census": check_census,
}


def run_suite(name: str, **options) -> Report:
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](**options)


def run_all(**options) -> list[Report]:
    return [fn(**options) for fn in SUITES.values()]
