"""Partial conjugations, pair classification, and the finite presentation."""

from collections import Counter

import pytest

from psasigma import (
    CentralLetterError,
    CommutatorRel,
    DeltaRel,
    ForeignElementError,
    PairCase,
    PartialConjugation,
    SameLetterError,
    commutes,
    is_partial_conjugation,
    pair_case,
    parse_pc_id,
    partial_conjugations,
    presentation,
)
from psasigma.pconj import inner_commutes, inner_support


def pc(letter, domain):
    return PartialConjugation(letter, frozenset(domain))


def test_partial_conjugations_frozen_list(example):
    got = [p.pc_id for p in partial_conjugations(example)]
    assert got == [
        "a:{c,d,e}",
        "b:{d}",
        "b:{e}",
        "c:{a}",
        "d:{a,b}",
        "d:{e}",
        "e:{a,b}",
        "e:{d}",
    ]


def test_partial_conjugations_small_graphs(path3, triangle, edgeless3):
    assert [p.pc_id for p in partial_conjugations(path3)] == ["a:{c}", "c:{a}"]
    assert partial_conjugations(triangle) == ()
    assert [p.pc_id for p in partial_conjugations(edgeless3)] == [
        "x:{y}", "x:{z}", "y:{x}", "y:{z}", "z:{x}", "z:{y}",
    ]


def test_pc_id_round_trip():
    p = pc("a", "cde")
    assert p.pc_id == "a:{c,d,e}"
    assert parse_pc_id("a:{c,d,e}") == p
    with pytest.raises(ValueError):
        parse_pc_id("a:cde")


def test_is_partial_conjugation(example):
    assert is_partial_conjugation(example, "a", frozenset("cde"))
    assert not is_partial_conjugation(example, "a", frozenset("cd"))
    assert not is_partial_conjugation(example, "a", frozenset("b"))


def test_pair_case_histogram(example):
    """Every distinct-letter pair lands in exactly one of the six cases."""
    pcs = partial_conjugations(example)
    hist = Counter()
    for i, p in enumerate(pcs):
        for q in pcs[i + 1:]:
            if p.letter != q.letter:
                hist[int(pair_case(example, p, q))] += 1
    assert dict(hist) == {1: 8, 2: 6, 3: 6, 4: 2, 6: 3}


def test_pair_case_known_pairs(example):
    a_cde = pc("a", "cde")
    assert pair_case(example, a_cde, pc("b", "d")) == PairCase.CASE1
    assert pair_case(example, a_cde, pc("c", "a")) == PairCase.CASE2
    assert pair_case(example, pc("d", "e"), pc("e", "d")) == PairCase.CASE2
    assert pair_case(example, pc("b", "d"), pc("d", "ab")) == PairCase.CASE2
    assert pair_case(example, pc("b", "d"), pc("d", "e")) == PairCase.CASE3
    assert pair_case(example, a_cde, pc("d", "e")) == PairCase.CASE4
    assert pair_case(example, pc("b", "d"), pc("e", "d")) == PairCase.CASE6
    assert pair_case(example, pc("d", "ab"), pc("e", "ab")) == PairCase.CASE6


def test_pair_case_symmetry(example):
    """Classification ignores the order of the two arguments."""
    pcs = partial_conjugations(example)
    for i, p in enumerate(pcs):
        for q in pcs[i + 1:]:
            if p.letter != q.letter:
                assert pair_case(example, p, q) == pair_case(example, q, p)


def test_pair_case_disjoint_needs_four_letters():
    from psasigma import SimplicialGraph

    w = SimplicialGraph.build("wxyz", [])
    assert pair_case(w, pc("w", "x"), pc("y", "z")) == PairCase.CASE5


def test_commutes_matches_cases(example):
    assert commutes(example, pc("a", "cde"), pc("b", "d"))       # case 1
    assert commutes(example, pc("a", "cde"), pc("d", "e"))       # case 4
    assert not commutes(example, pc("a", "cde"), pc("c", "a"))   # case 2
    assert not commutes(example, pc("b", "d"), pc("d", "e"))     # case 3
    assert not commutes(example, pc("b", "d"), pc("e", "d"))     # case 6
    p = pc("d", "e")
    assert commutes(example, p, p)


def test_same_letter_pair_rejected(example):
    with pytest.raises(SameLetterError):
        pair_case(example, pc("b", "d"), pc("b", "e"))
    with pytest.raises(SameLetterError):
        commutes(example, pc("b", "d"), pc("b", "e"))


def test_foreign_pc_rejected(example):
    with pytest.raises(ForeignElementError):
        pair_case(example, pc("a", "cd"), pc("b", "d"))
    with pytest.raises(ForeignElementError):
        commutes(example, pc("b", "d"), pc("q", "a"))


def test_inner_support_and_commutation(example):
    assert [p.pc_id for p in inner_support(example, "d")] == ["d:{a,b}", "d:{e}"]
    # the product of all of d's PCs is global conjugation by d, which
    # commutes with a PC exactly when d avoids its domain
    assert inner_commutes(example, "d", pc("c", "a"))
    assert not inner_commutes(example, "d", pc("b", "d"))


def test_inner_support_rejects_central_letter(path3):
    with pytest.raises(CentralLetterError):
        inner_support(path3, "b")


def test_presentation_shape(example):
    pres = presentation(example)
    assert [p.pc_id for p in pres.generators] == [
        p.pc_id for p in partial_conjugations(example)
    ]
    comm = [r for r in pres.relations if isinstance(r, CommutatorRel)]
    delta = [r for r in pres.relations if isinstance(r, DeltaRel)]
    assert len(comm) == 10
    assert len(delta) == 6
    assert pres.abelianization_rank == 8


def test_presentation_delta_relations_frozen(example):
    pres = presentation(example)
    got = [
        (r.letter, tuple(sorted(r.k)), tuple(sorted(r.l)), r.b)
        for r in pres.relations
        if isinstance(r, DeltaRel)
    ]
    assert got == [
        ("b", ("d",), ("e",), "d"),
        ("b", ("e",), ("d",), "e"),
        ("d", ("a", "b"), ("e",), "b"),
        ("d", ("e",), ("a", "b"), "e"),
        ("e", ("a", "b"), ("d",), "b"),
        ("e", ("d",), ("a", "b"), "d"),
    ]


def test_presentation_commutators_are_commuting_pairs(example):
    pres = presentation(example)
    for r in pres.relations:
        if isinstance(r, CommutatorRel):
            assert commutes(example, r.p, r.q)


def test_presentation_trivial_cases(path3, triangle):
    pres = presentation(path3)
    assert len(pres.generators) == 2
    assert pres.relations == ()
    empty = presentation(triangle)
    assert empty.generators == ()
    assert empty.relations == ()


def test_presentation_json(example):
    d = presentation(example).to_json_dict()
    assert list(d) == ["generators", "relations"]
    assert d["generators"][0] == "a:{c,d,e}"
    kinds = {r["type"] for r in d["relations"]}
    assert kinds == {"comm", "delta"}
