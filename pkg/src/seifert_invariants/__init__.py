"""Exact invariants of Seifert fibered rational homology spheres with e < 0."""
from .abelian_group import AbelianGroup, Character, GroupElement, build_group
from .cyclotomic import Cyclotomic
from .exact_arith import dedekind_sum, dedekind_symbol, neg_continued_fraction
from .invariants import (
    InvariantReport,
    casson_walker,
    compute_report,
    conjecture_gap,
    gompf_theta,
    k2_plus_numvert,
    sw_invariant,
    verify_identity,
)
from .plumbing import PlumbingGraph, canonical_cycle, k2_plus_numvert_from_graph, to_plumbing
from .seifert import SeifertData, UnnormalizedSeifert, brieskorn, derived_scalars, normalize
from .series import dp_invariant, poincare_coefficients
from .torsion import (
    SpincStructure,
    canonical_spinc,
    constant_E,
    limit_p_hat,
    spinc_from_word,
    torsion_at_one,
    torsion_closed_form,
    torsion_table,
)

__version__ = "0.1.0"
