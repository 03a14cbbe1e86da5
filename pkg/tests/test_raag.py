"""RAAG-side invariant, subspheres, counting identities, and the dichotomy."""

import json
from fractions import Fraction

import pytest

from psasigma import (
    BudgetExceededError,
    SimplicialGraph,
    ZeroCharacterError,
    counting_check_psa,
    counting_check_raag,
    make_raag_character,
    maximal_missing_subspheres,
    parse_raag_character,
    psa_complement_subspheres,
    quadruple_is_delta,
    raag_sigma_membership,
    raag_sigma_verdict,
    theorem_b,
)


def test_raag_character_parse_and_errors(example):
    psi = parse_raag_character(example, json.dumps({"a": "1/2", "b": -1}))
    assert psi.support == frozenset("ab")
    with pytest.raises(ZeroCharacterError):
        make_raag_character(example, {})
    with pytest.raises(ZeroCharacterError):
        make_raag_character(example, {"a": 0})


def test_raag_sigma_membership_bool(path3, triangle):
    # path a-b-c: the middle vertex dominates on its own, endpoints do not
    assert raag_sigma_membership(path3, make_raag_character(path3, {"b": 1}))
    assert not raag_sigma_membership(path3, make_raag_character(path3, {"a": 1}))
    # complete graph: any nonzero character works
    assert raag_sigma_membership(triangle, make_raag_character(triangle, {"a": -3}))


def test_raag_sigma_verdict(example):
    full = make_raag_character(example, {v: 1 for v in example.vertices})
    v = raag_sigma_verdict(example, full)
    assert v.in_sigma
    assert v.connected and v.dominating

    lonely = raag_sigma_verdict(example, make_raag_character(example, {"a": 1}))
    assert not lonely.in_sigma
    assert not lonely.dominating

    split = raag_sigma_verdict(
        example, make_raag_character(example, {"a": 1, "d": Fraction(1, 3)})
    )
    assert not split.in_sigma
    assert not split.connected


def test_raag_sigma_scaling_invariance(example):
    psi = make_raag_character(example, {"b": 2, "c": -1})
    base = raag_sigma_membership(example, psi)
    scaled = raag_sigma_membership(example, psi.scaled(Fraction(5, 2)))
    assert scaled == base


def test_raag_verdict_json(example):
    d = raag_sigma_verdict(
        example, make_raag_character(example, {"a": 1})
    ).to_json_dict()
    assert d["membership"] == "complement"
    assert d["support"] == ["a"]


def test_maximal_missing_subspheres_frozen(example):
    got = [s.support for s in maximal_missing_subspheres(example)]
    assert got == [("a", "b", "d", "e"), ("a", "c", "d", "e")]
    assert all(s.dimension == 3 for s in maximal_missing_subspheres(example))


def test_missing_subspheres_small(path3, triangle):
    # path: {a,c} is disconnected and non-dominating, nothing bigger is missing
    assert [s.support for s in maximal_missing_subspheres(path3)] == [("a", "c")]
    assert maximal_missing_subspheres(triangle) == ()


def test_missing_subspheres_edgeless_pair():
    g = SimplicialGraph.build(["x", "y"], [])
    assert [s.support for s in maximal_missing_subspheres(g)] == [("x", "y")]
    report = counting_check_raag(g)
    assert (report.lhs, report.rhs, report.holds) == (2, 2, True)


def test_psa_complement_subspheres(example):
    spheres = psa_complement_subspheres(example)
    psets = [s for s in spheres if s.kind == "pset"]
    deltas = [s for s in spheres if s.kind == "delta"]
    assert [s.dimension for s in psets] == [2, 2, 3, 1]
    assert [s.dimension for s in deltas] == [2]
    assert deltas[0].pairs == (("b:{d}", "b:{e}"), ("d:{a,b}", "d:{e}"), ("e:{a,b}", "e:{d}"))


def test_counting_identities_on_example(example):
    raag = counting_check_raag(example)
    assert (raag.lhs, raag.rhs, raag.holds, raag.vacuous) == (5, 5, True, False)
    psa = counting_check_psa(example)
    assert (psa.lhs, psa.rhs, psa.holds, psa.vacuous) == (8, 8, True, False)


def test_counting_identities_on_path(path3):
    raag = counting_check_raag(path3)
    assert (raag.lhs, raag.rhs, raag.holds) == (2, 2, True)
    psa = counting_check_psa(path3)
    assert (psa.lhs, psa.rhs, psa.holds) == (2, 2, True)


def test_counting_vacuous_on_complete(triangle):
    raag = counting_check_raag(triangle)
    assert raag.vacuous and raag.holds and raag.lhs == 0
    psa = counting_check_psa(triangle)
    assert psa.vacuous and psa.holds and psa.lhs == 0


def test_counting_term_budget(example):
    with pytest.raises(BudgetExceededError):
        counting_check_raag(example, term_budget=1)


def test_theorem_b_on_example(example):
    v = theorem_b(example)
    assert not v.is_raag
    assert (v.sil.a, v.sil.b, v.sil.component) == ("b", "d", frozenset("e"))
    fam = v.delta_family
    assert len(fam.underlying) == 4
    assert quadruple_is_delta(example, *fam.side1, *fam.side2)
    assert sorted(fam.underlying_ids) == ["b:{d}", "b:{e}", "d:{a,b}", "d:{e}"]


def test_theorem_b_raag_cases(path3):
    assert theorem_b(path3).is_raag
    assert theorem_b(path3).sil is None
    for n in range(1, 6):
        names = [f"v{i}" for i in range(n)]
        complete = SimplicialGraph.build(
            names, [(names[i], names[j]) for i in range(n) for j in range(i + 1, n)]
        )
        verdict = theorem_b(complete)
        assert verdict.is_raag
        assert verdict.delta_family is None


def test_theorem_b_json(example):
    d = theorem_b(example).to_json_dict()
    assert list(d) == ["is_raag", "sil", "delta_family"]
    assert d["is_raag"] is False
    assert d["sil"]["a"] == "b"
    assert d["delta_family"]["kind"] == "delta"
