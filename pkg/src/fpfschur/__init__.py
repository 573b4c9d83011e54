"""Schubert calculus for fixed-point-free involutions.

FPF-involution Schubert polynomials, FPF Stanley symmetric functions and
their Schur P-expansions, with brute-force oracles for small cases.
"""

from .atoms import AtomSet, atoms, fpf_reduced_word_count, fpf_reduced_word_count_dp, fpf_reduced_words
from .fpf import (
    FpfInvolution,
    all_fpf,
    classify,
    ell_fpf,
    embed_iota,
    fpf_diagram_code_shape,
    fpf_shape,
    fpf_stats,
    grassmannian_data,
    map_F,
    map_I,
    parse_fpf,
)
from .perm import Permutation, parse_permutation
from .pfaffian import SkewMatrix, grassmannian_pfaffian_check, pfaffian
from .polyring import LaurentPoly, divided_difference, fpf_schubert, isobaric, schubert
from .report import Report
from .symfunc import SymExpansion, fpf_stanley_monomial, fpf_stanley_trunc, schurP_poly
from .transition import build_tree, expand_fpf_stanley, verify_transition
from .vexillary import is_fpf_vexillary

__version__ = "0.1.0"

__all__ = [
    "AtomSet",
    "FpfInvolution",
    "LaurentPoly",
    "Permutation",
    "Report",
    "SkewMatrix",
    "SymExpansion",
    "all_fpf",
    "atoms",
    "build_tree",
    "classify",
    "divided_difference",
    "ell_fpf",
    "embed_iota",
    "expand_fpf_stanley",
    "fpf_diagram_code_shape",
    "fpf_reduced_word_count",
    "fpf_reduced_word_count_dp",
    "fpf_reduced_words",
    "fpf_schubert",
    "fpf_shape",
    "fpf_stanley_monomial",
    "fpf_stanley_trunc",
    "fpf_stats",
    "grassmannian_data",
    "grassmannian_pfaffian_check",
    "is_fpf_vexillary",
    "isobaric",
    "map_F",
    "map_I",
    "parse_fpf",
    "parse_permutation",
    "pfaffian",
    "schubert",
    "schurP_poly",
    "verify_transition",
]
