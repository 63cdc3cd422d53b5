"""Finite weakly dicomplemented lattices.

Build bounded lattices, attach weak complementations, and check the
structure theory on concrete instances: skeletons, filter lattices,
S-filters, spectral classification and congruences.  Every theorem in
scope is a registered law that reports pass, fail or finding with a
witness.
"""

from .congruence import (CONGRUENCE_CAP, Congruence, cong_join, cong_meet,
                         congruence_from_blocks, congruence_witness,
                         determination_congruence, determination_partition,
                         diagonal, enumerate_congruences, full_congruence,
                         is_congruence, join_formula_check,
                         permutability_check, principal_congruence, regular,
                         structure_checks, theta_from_filter)
from .dicomplement import (ENUMERATION_CAP, Dicomplementation, SkeletonAlgebra,
                           attach, axiom_report, boolean_dicomplementation,
                           check_identities, dense_sets, derived_ops,
                           dual_skeleton, enumerate_dicomplementations,
                           nearlattice_check, skeleton, skeleton_algebra,
                           skeleton_report, trivial_dicomplementation)
from .errors import LatticeError
from .filters import (FILTER_CAP, Filter, FilterLattice, as_filter,
                      condition_star_holds, condition_star_witness,
                      enumerate_filters, filter_generated, filter_join,
                      filter_lattice_dual_wcl, plus, principal_dual_iso,
                      principal_filter, pseudocomplement_checks, star,
                      star_bar)
from .instances import BUILTIN_NAMES, builtin, corpus, recorded_findings_report
from .lattice import (MAX_ELEMENTS, BoundedLattice, LatticeSpec,
                      build_lattice, chain, direct_power, enumerate_lattices)
from .reports import LawResult, Report, law_catalog
from .sfilters import (SFilter, as_s_filter, dagger_witness,
                       enumerate_s_filters, f_from_skeleton_filter,
                       is_s_filter, is_skeleton_filter, phi_iso_check,
                       s_conditions, s_filter_generated, s_join, s_principal,
                       s_principal_ortholattice, skeleton_filter_masks, trace)
from .spectra import (FilterClassification, classify, extend_to_primary,
                      primary_witness, prime_witness,
                      verify_spectral_theorems)
from .textio import normalize, parse, serialize, spec_of, to_dot

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_NAMES", "BoundedLattice", "CONGRUENCE_CAP", "Congruence",
    "Dicomplementation", "ENUMERATION_CAP", "FILTER_CAP", "Filter",
    "FilterClassification", "FilterLattice", "LatticeError", "LatticeSpec",
    "LawResult", "MAX_ELEMENTS", "Report", "SFilter", "SkeletonAlgebra",
    "as_filter", "as_s_filter", "attach", "axiom_report", "boolean_dicomplementation",
    "build_lattice", "builtin", "chain", "check_identities", "classify",
    "cong_join", "cong_meet", "congruence_from_blocks", "congruence_witness",
    "condition_star_holds", "condition_star_witness", "corpus",
    "dagger_witness", "dense_sets",
    "derived_ops", "determination_congruence", "determination_partition",
    "diagonal", "direct_power", "dual_skeleton", "enumerate_congruences",
    "enumerate_dicomplementations", "enumerate_filters", "enumerate_lattices",
    "enumerate_s_filters", "extend_to_primary", "f_from_skeleton_filter",
    "filter_generated", "filter_join", "filter_lattice_dual_wcl",
    "full_congruence", "is_congruence", "is_s_filter", "is_skeleton_filter",
    "join_formula_check", "law_catalog", "nearlattice_check", "normalize",
    "parse", "permutability_check", "phi_iso_check", "plus",
    "primary_witness", "prime_witness", "principal_congruence",
    "principal_dual_iso", "principal_filter", "pseudocomplement_checks",
    "recorded_findings_report",
    "regular", "s_conditions", "s_filter_generated", "s_join", "s_principal",
    "s_principal_ortholattice", "serialize", "skeleton", "skeleton_algebra",
    "skeleton_filter_masks",
    "skeleton_report", "spec_of", "star", "star_bar", "structure_checks",
    "theta_from_filter", "to_dot", "trace", "trivial_dicomplementation",
    "verify_spectral_theorems",
]
