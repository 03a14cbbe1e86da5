"""Sigma invariants for pure symmetric automorphism groups of RAAGs.

Given a finite simplicial graph, this package computes the partial
conjugation generators and finite presentation of the group of pure
symmetric automorphisms of the associated right-angled Artin group,
decides membership of characters in the first BNS invariant of that
automorphism group and of the Artin group itself, enumerates the
maximal admissible families that witness complement membership, and
decides whether the automorphism group is itself a right-angled Artin
group.
"""

from .characters import (
    Character,
    SigmaVerdict,
    TypeVerdict,
    classify_type,
    hyperbolic_set,
    inner_value,
    make_character,
    parse_character,
    sigma_membership,
    sketch_respects_relations,
    sphere_dimension,
)
from .errors import (
    BudgetExceededError,
    CentralLetterError,
    DomainError,
    ForeignElementError,
    GraphFormatError,
    InternalCheckError,
    MultiplicityError,
    SameLetterError,
    UnknownVertexError,
    ZeroCharacterError,
)
from .families import (
    AdmissibleFamily,
    construct_maximal_pset,
    extends_to_delta_pset,
    extends_to_pset,
    is_delta_pset,
    is_pset,
    maximal_delta_psets,
    maximal_psets,
    quadruple_is_delta,
)
from .graph import SilWitness, SimplicialGraph, find_sils, parse_graph
from .oracle import (
    CorpusSpec,
    SelftestReport,
    brute_force_delta_psets,
    brute_force_missing,
    brute_force_psets,
    brute_force_sils,
    character_check_failures,
    default_corpus,
    graph_check_failures,
    oracle_sigma_membership,
    random_graph,
    remark_construction_gaps,
    run_selftest,
    sample_character,
)
from .pconj import (
    CommutatorRel,
    DeltaRel,
    PairCase,
    PartialConjugation,
    Presentation,
    commutes,
    inner_commutes,
    is_partial_conjugation,
    pair_case,
    parse_pc_id,
    partial_conjugations,
    presentation,
)
from .raag import (
    CountingReport,
    RaagCharacter,
    RaagSigmaVerdict,
    RaagVerdict,
    Subsphere,
    counting_check_psa,
    counting_check_raag,
    make_raag_character,
    maximal_missing_subspheres,
    parse_raag_character,
    psa_complement_subspheres,
    raag_sigma_membership,
    raag_sigma_verdict,
    theorem_b,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibleFamily",
    "BudgetExceededError",
    "CentralLetterError",
    "Character",
    "CommutatorRel",
    "CorpusSpec",
    "CountingReport",
    "DeltaRel",
    "DomainError",
    "ForeignElementError",
    "GraphFormatError",
    "InternalCheckError",
    "MultiplicityError",
    "PairCase",
    "PartialConjugation",
    "Presentation",
    "RaagCharacter",
    "RaagSigmaVerdict",
    "RaagVerdict",
    "SameLetterError",
    "SelftestReport",
    "SigmaVerdict",
    "SilWitness",
    "SimplicialGraph",
    "Subsphere",
    "TypeVerdict",
    "UnknownVertexError",
    "ZeroCharacterError",
    "brute_force_delta_psets",
    "brute_force_missing",
    "brute_force_psets",
    "brute_force_sils",
    "character_check_failures",
    "classify_type",
    "commutes",
    "construct_maximal_pset",
    "counting_check_psa",
    "counting_check_raag",
    "default_corpus",
    "extends_to_delta_pset",
    "extends_to_pset",
    "find_sils",
    "graph_check_failures",
    "hyperbolic_set",
    "inner_commutes",
    "inner_value",
    "is_delta_pset",
    "is_partial_conjugation",
    "is_pset",
    "make_character",
    "make_raag_character",
    "maximal_delta_psets",
    "maximal_missing_subspheres",
    "maximal_psets",
    "oracle_sigma_membership",
    "pair_case",
    "parse_character",
    "parse_graph",
    "parse_pc_id",
    "parse_raag_character",
    "partial_conjugations",
    "presentation",
    "psa_complement_subspheres",
    "quadruple_is_delta",
    "raag_sigma_membership",
    "raag_sigma_verdict",
    "random_graph",
    "remark_construction_gaps",
    "run_selftest",
    "sample_character",
    "sigma_membership",
    "sketch_respects_relations",
    "sphere_dimension",
    "theorem_b",
]
