"""Partial conjugations of a right-angled Artin group and their relations.

A partial conjugation is a pair (letter, domain): the generator that
conjugates every vertex generator in ``domain`` by the vertex generator
``letter``, where ``domain`` is a connected component of the graph minus the
closed star of ``letter``.  These generate the pure symmetric automorphism
group.  The pair classification below splits every distinct-letter pair of
partial conjugations into six mutually exclusive cases; commutation holds in
cases 1, 4 and 5 and fails in the others.

Whether two distinct partial conjugations with the SAME acting letter commute
is deliberately left undecided here; classification queries about such pairs
are rejected, and nothing downstream depends on the answer.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    CentralLetterError,
    DomainError,
    ForeignElementError,
    SameLetterError,
    UnknownVertexError,
)
from .graph import SimplicialGraph


@dataclass(frozen=True)
class PartialConjugation:
    letter: str
    domain: frozenset

    @property
    def key(self) -> tuple:
        return (self.letter, tuple(sorted(self.domain)))

    @property
    def pc_id(self) -> str:
        """Canonical id, e.g. ``a:{c,d,e}`` with the domain sorted."""
        return f"{self.letter}:{{{','.join(sorted(self.domain))}}}"

    def __str__(self) -> str:
        return self.pc_id


def parse_pc_id(s: str) -> PartialConjugation:
    """Invert :attr:`PartialConjugation.pc_id`."""
    head, sep, tail = s.partition(":")
    if not sep or not head or not (tail.startswith("{") and tail.endswith("}")):
        raise DomainError(f"malformed partial conjugation id {s!r}")
    names = tail[1:-1]
    if not names:
        raise DomainError(f"empty domain in partial conjugation id {s!r}")
    return PartialConjugation(head, frozenset(names.split(",")))


@lru_cache(maxsize=None)
def partial_conjugations(g: SimplicialGraph) -> tuple[PartialConjugation, ...]:
    """All partial conjugations of the graph, in canonical order."""
    out = []
    for a in g.vertices:
        for comp in g.components_without_star(a):
            out.append(PartialConjugation(a, comp))
    out.sort(key=lambda p: p.key)
    return tuple(out)


@lru_cache(maxsize=None)
def _pc_set(g: SimplicialGraph) -> frozenset:
    return frozenset(partial_conjugations(g))


@lru_cache(maxsize=None)
def pc_index(g: SimplicialGraph) -> dict[str, PartialConjugation]:
    """Canonical id -> partial conjugation, for parsing external references."""
    return {p.pc_id: p for p in partial_conjugations(g)}


def is_partial_conjugation(g: SimplicialGraph, letter: str, domain) -> bool:
    """Whether (letter, domain) names an actual partial conjugation of g."""
    if not g.has_vertex(letter):
        raise UnknownVertexError(f"unknown vertex {letter!r}")
    return PartialConjugation(letter, frozenset(domain)) in _pc_set(g)


def require_pc(g: SimplicialGraph, p: PartialConjugation) -> None:
    if p not in _pc_set(g):
        raise ForeignElementError(f"{p.pc_id} is not a partial conjugation of this graph")


class PairCase(enum.IntEnum):
    """The six-way classification of a distinct-letter pair of PCs."""

    CASE1 = 1
    CASE2 = 2
    CASE3 = 3
    CASE4 = 4
    CASE5 = 5
    CASE6 = 6

    @property
    def commutes(self) -> bool:
        return self in (PairCase.CASE1, PairCase.CASE4, PairCase.CASE5)


def _check_pair(g: SimplicialGraph, p: PartialConjugation, q: PartialConjugation) -> None:
    require_pc(g, p)
    require_pc(g, q)
    if p == q:
        raise DomainError("pair classification needs two distinct partial conjugations")
    if p.letter == q.letter:
        raise SameLetterError(
            f"pair ({p.pc_id}, {q.pc_id}) shares the acting letter; not classified"
        )


def pair_case_flags(g, p: PartialConjugation, q: PartialConjugation) -> tuple[bool, ...]:
    """The six case predicates evaluated independently (for exclusivity tests).

    Case 3 reads its either/or exclusively: with both containments holding the
    pair is case 2, so case 3 requires exactly one of them.
    """
    _check_pair(g, p, q)
    a, k = p.letter, p.domain
    b, l = q.letter, q.domain
    near = g.dist2(a, b) <= 1
    a_in_l = a in l
    b_in_k = b in k
    return (
        near,
        not near and a_in_l and b_in_k,
        not near and not (k & l) and (a_in_l != b_in_k),
        not near and (({a} | k) <= l or ({b} | l) <= k),
        not near and not (({a} | k) & ({b} | l)),
        not near and k == l,
    )


def pair_case(g, p: PartialConjugation, q: PartialConjugation) -> PairCase:
    """Classify a distinct-letter pair of partial conjugations.

    Evaluates the six cases in order and returns the first that holds; the
    exclusivity of the cases is covered by tests, not assumed here.
    """
    flags = pair_case_flags(g, p, q)
    for i, flag in enumerate(flags):
        if flag:
            return PairCase(i + 1)
    raise DomainError(f"pair ({p.pc_id}, {q.pc_id}) matched no case")  # unreachable


def commutes(g, p: PartialConjugation, q: PartialConjugation) -> bool:
    """Whether two partial conjugations commute in the automorphism group."""
    require_pc(g, p)
    require_pc(g, q)
    if p == q:
        return True
    return pair_case(g, p, q).commutes


def inner_support(g, a: str) -> tuple[PartialConjugation, ...]:
    """The partial conjugations whose product is conjugation by ``a``."""
    if not g.has_vertex(a):
        raise UnknownVertexError(f"unknown vertex {a!r}")
    if a in g.z_vertices:
        raise CentralLetterError(f"vertex {a!r} has full star; no inner factorization")
    return tuple(p for p in partial_conjugations(g) if p.letter == a)


def inner_commutes(g, a: str, q: PartialConjugation) -> bool:
    """Whether conjugation by ``a`` commutes with ``q``: true iff a is not in q's domain."""
    require_pc(g, q)
    if not g.has_vertex(a):
        raise UnknownVertexError(f"unknown vertex {a!r}")
    if a in g.z_vertices:
        raise CentralLetterError(f"vertex {a!r} has full star; no inner factorization")
    return a not in q.domain


# -- presentation ----------------------------------------------------------


@dataclass(frozen=True)
class CommutatorRel:
    """[p, q] = 1 for a commuting distinct-letter pair (canonically p < q)."""

    p: PartialConjugation
    q: PartialConjugation

    def to_json_dict(self) -> dict:
        return {"type": "comm", "p": self.p.pc_id, "q": self.q.pc_id}


@dataclass(frozen=True)
class DeltaRel:
    """[(letter,K)(letter,L), (b,L)] = 1 where b is in K and (b,L) is a PC."""

    letter: str
    k: frozenset
    l: frozenset
    b: str

    def to_json_dict(self) -> dict:
        return {
            "type": "delta",
            "letter": self.letter,
            "K": sorted(self.k),
            "L": sorted(self.l),
            "b": self.b,
        }


@dataclass(frozen=True)
class Presentation:
    generators: tuple[PartialConjugation, ...]
    relations: tuple

    def to_json_dict(self) -> dict:
        return {
            "generators": [p.pc_id for p in self.generators],
            "relations": [r.to_json_dict() for r in self.relations],
        }

    @property
    def abelianization_rank(self) -> int:
        # every relation is a commutator, so the abelianization is free
        return len(self.generators)


@lru_cache(maxsize=None)
def presentation(g: SimplicialGraph) -> Presentation:
    """The finite presentation of the pure symmetric automorphism group."""
    pcs = partial_conjugations(g)
    comms = []
    for i, p in enumerate(pcs):
        for q in pcs[i + 1:]:
            if p.letter != q.letter and pair_case(g, p, q).commutes:
                comms.append(CommutatorRel(p, q))
    deltas = []
    by_letter: dict[str, list[PartialConjugation]] = {}
    for p in pcs:
        by_letter.setdefault(p.letter, []).append(p)
    pcset = _pc_set(g)
    for letter in sorted(by_letter):
        doms = [p.domain for p in by_letter[letter]]
        for k in doms:
            for l in doms:
                if k == l:
                    continue
                for b in sorted(k):
                    if PartialConjugation(b, l) in pcset:
                        deltas.append(DeltaRel(letter, k, l, b))
    comms.sort(key=lambda r: (r.p.key, r.q.key))
    deltas.sort(key=lambda r: (r.letter, tuple(sorted(r.k)), tuple(sorted(r.l)), r.b))
    return Presentation(pcs, tuple(comms) + tuple(deltas))
