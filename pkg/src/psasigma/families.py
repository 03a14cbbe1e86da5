"""Admissible families of partial conjugations: p-sets and delta-p-sets.

A p-set is a set Q of partial conjugations, at most one per acting letter,
with a partition {Q1, Q2} into two nonempty sides such that every cross pair
(a,K) in Q1, (b,L) in Q2 has a in L and b in K.  A delta-p-set instead has
exactly zero or two PCs per acting letter and asks of every cross pair that
a in L or b in K or K = L; same-letter partners always end up on a common
side.

Enumerating the inclusion-maximal families reduces to listing maximal
cross-complete pairs in a compatibility graph: for p-sets the vertices are
the PCs themselves, for delta-p-sets they are same-letter domain pairs
(nodes), adjacent when the four cross pairs all fail to commute.  Maximal
cross-complete pairs are Galois-closed pairs (X, gamma(X)) of the adjacency
relation, and every side of such a pair is an intersection of neighborhoods,
so the enumeration below just closes the neighborhood family under
intersection.  Sides are bitmasks throughout.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import DomainError, InternalCheckError, MultiplicityError
from .graph import SimplicialGraph
from .pconj import PartialConjugation, pair_case, partial_conjugations, require_pc

log = logging.getLogger(__name__)

PSET = "pset"
DELTA = "delta"


@dataclass(frozen=True)
class AdmissibleFamily:
    """A p-set or delta-p-set together with one admissible partition.

    Each side is internally sorted.  Families produced by the enumerators are
    oriented so that side1 holds the canonically least PC of the whole family;
    the seeded constructor instead keeps its seed in side1, as documented.
    """

    kind: str
    side1: tuple[PartialConjugation, ...]
    side2: tuple[PartialConjugation, ...]

    @property
    def underlying(self) -> frozenset:
        return frozenset(self.side1) | frozenset(self.side2)

    @property
    def underlying_ids(self) -> tuple[str, ...]:
        return tuple(sorted(p.pc_id for p in self.underlying))

    def oriented(self) -> AdmissibleFamily:
        return _orient(self.kind, self.side1, self.side2)

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "side1": [p.pc_id for p in self.side1],
            "side2": [p.pc_id for p in self.side2],
        }


def _orient(kind: str, side_a, side_b) -> AdmissibleFamily:
    sa = tuple(sorted(side_a, key=lambda p: p.key))
    sb = tuple(sorted(side_b, key=lambda p: p.key))
    if sb and (not sa or sb[0].key < sa[0].key):
        sa, sb = sb, sa
    return AdmissibleFamily(kind, sa, sb)


def _validated_sides(g, side1, side2) -> tuple[tuple, tuple]:
    s1 = tuple(side1)
    s2 = tuple(side2)
    for p in s1 + s2:
        require_pc(g, p)
    return s1, s2


def is_pset(g: SimplicialGraph, side1, side2) -> bool:
    """Whether (side1, side2) is an admissible partition of a p-set."""
    s1, s2 = _validated_sides(g, side1, side2)
    if not s1 or not s2 or set(s1) & set(s2):
        return False
    union = set(s1) | set(s2)
    letters = [p.letter for p in union]
    if len(letters) != len(set(letters)):
        return False
    return all(p.letter in q.domain and q.letter in p.domain for p in s1 for q in s2)


def is_delta_pset(g: SimplicialGraph, side1, side2) -> bool:
    """Whether (side1, side2) is an admissible partition of a delta-p-set."""
    s1, s2 = _validated_sides(g, side1, side2)
    if not s1 or not s2 or set(s1) & set(s2):
        return False
    union = set(s1) | set(s2)
    counts: dict[str, int] = {}
    for p in union:
        counts[p.letter] = counts.get(p.letter, 0) + 1
    if any(n != 2 for n in counts.values()):
        return False
    for side in (set(s1), set(s2)):
        for p in side:
            partner = next(q for q in union if q.letter == p.letter and q != p)
            if partner not in side:
                return False
    return all(
        p.letter in q.domain or q.letter in p.domain or p.domain == q.domain
        for p in s1
        for q in s2
    )


def quadruple_is_delta(g, p1, p2, q1, q2) -> bool:
    """Whether {p1, p2, q1, q2} (two letter pairs) forms a delta-p-set.

    Equivalent to all four cross pairs failing to commute, which is what is
    checked here; the recognizer equivalence is covered by tests.
    """
    for p in (p1, p2, q1, q2):
        require_pc(g, p)
    if p1.letter != p2.letter or q1.letter != q2.letter or p1.letter == q1.letter:
        raise DomainError("quadruple must consist of two distinct-letter pairs")
    if p1 == p2 or q1 == q2:
        raise DomainError("quadruple must contain four distinct partial conjugations")
    return not any(pair_case(g, p, q).commutes for p in (p1, p2) for q in (q1, q2))


def construct_maximal_pset(g: SimplicialGraph, seed: PartialConjugation) -> AdmissibleFamily:
    """Grow a maximal p-set from one seed PC, which lands in side1.

    Side2 collects, for each vertex b of the seed domain, the PC of b whose
    domain contains the seed letter; side1 then collects, for each vertex of
    the intersection of those domains, its PC toward the first such b.
    """
    require_pc(g, seed)
    a, k = seed.letter, seed.domain
    bs = sorted(k)
    side2 = []
    inter: frozenset | None = None
    for b in bs:
        l = _component_containing(g, b, a)
        side2.append(PartialConjugation(b, l))
        inter = l if inter is None else inter & l
    assert inter is not None and a in inter
    b1 = bs[0]
    side1 = []
    for ai in [a] + sorted(inter - {a}):
        side1.append(PartialConjugation(ai, _component_containing(g, ai, b1)))
    if side1[0] != seed:
        raise InternalCheckError("seeded construction lost its seed")
    if not is_pset(g, side1, side2):
        raise InternalCheckError("seeded construction produced a non-p-set")
    return AdmissibleFamily(
        PSET,
        tuple(sorted(side1, key=lambda p: p.key)),
        tuple(sorted(side2, key=lambda p: p.key)),
    )


def _component_containing(g, letter: str, target: str) -> frozenset:
    for comp in g.components_without_star(letter):
        if target in comp:
            return comp
    raise InternalCheckError(f"{target!r} unexpectedly inside the star of {letter!r}")


# -- maximal family enumeration ---------------------------------------------


def _closure_pairs(neigh: list[int]) -> set[tuple[int, int]]:
    """All maximal cross-complete mask pairs of an irreflexive adjacency.

    Every side of a maximal pair is an intersection of neighborhoods, so the
    set of candidate sides is the closure of the neighborhood masks under
    intersection; each candidate is then paired with its common-neighbor mask.
    """
    n = len(neigh)
    full = (1 << n) - 1

    def gamma(mask: int) -> int:
        out = full
        m = mask
        while m and out:
            i = (m & -m).bit_length() - 1
            out &= neigh[i]
            m &= m - 1
        return out

    base = {m for m in neigh if m}
    intents = set(base)
    frontier = set(base)
    while frontier:
        fresh = set()
        for x in frontier:
            for b in base:
                y = x & b
                if y and y not in intents and y not in fresh:
                    fresh.add(y)
        intents |= fresh
        frontier = fresh
        if len(intents) % 4096 < len(fresh):
            log.debug("closure growing: %d candidate sides", len(intents))
    pairs = set()
    for y in intents:
        x = gamma(y)
        if x:
            pairs.add((x, y) if x <= y else (y, x))
    return pairs


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _maximal_families(kind: str, units: list[tuple[PartialConjugation, ...]],
                      neigh: list[int]) -> tuple[AdmissibleFamily, ...]:
    """Shared tail of the two enumerators: dedupe, maximality, orientation."""
    pairs = _closure_pairs(neigh)
    unions = {x | y for x, y in pairs}
    maximal = {
        u for u in unions
        if not any(u != w and u & w == u for w in unions)
    }
    best: dict[int, AdmissibleFamily] = {}
    for x, y in pairs:
        u = x | y
        if u not in maximal:
            continue
        side_a = [pc for i in _bits(x) for pc in units[i]]
        side_b = [pc for i in _bits(y) for pc in units[i]]
        fam = _orient(kind, side_a, side_b)
        letters = [p.letter for p in fam.underlying]
        per_letter = 1 if kind == PSET else 2
        if any(letters.count(c) != per_letter for c in letters):
            raise InternalCheckError("enumerated family has a letter multiplicity defect")
        key = (tuple(p.pc_id for p in fam.side1), tuple(p.pc_id for p in fam.side2))
        held = best.get(u)
        if held is None or key < (tuple(p.pc_id for p in held.side1),
                                  tuple(p.pc_id for p in held.side2)):
            best[u] = fam
    return tuple(sorted(best.values(), key=lambda f: f.underlying_ids))


@lru_cache(maxsize=None)
def maximal_psets(g: SimplicialGraph) -> tuple[AdmissibleFamily, ...]:
    """All p-sets with inclusion-maximal underlying set, one partition each."""
    pcs = list(partial_conjugations(g))
    neigh = [0] * len(pcs)
    for i, j in combinations(range(len(pcs)), 2):
        p, q = pcs[i], pcs[j]
        if p.letter != q.letter and p.letter in q.domain and q.letter in p.domain:
            neigh[i] |= 1 << j
            neigh[j] |= 1 << i
    return _maximal_families(PSET, [(p,) for p in pcs], neigh)


@dataclass(frozen=True)
class DeltaNode:
    """A same-letter pair of partial conjugations, the delta building block."""

    letter: str
    domains: tuple[frozenset, frozenset]

    @property
    def pcs(self) -> tuple[PartialConjugation, PartialConjugation]:
        return tuple(PartialConjugation(self.letter, d) for d in self.domains)

    @property
    def key(self) -> tuple:
        return (self.letter, tuple(tuple(sorted(d)) for d in self.domains))


def delta_nodes(g: SimplicialGraph) -> tuple[DeltaNode, ...]:
    by_letter: dict[str, list[frozenset]] = {}
    for p in partial_conjugations(g):
        by_letter.setdefault(p.letter, []).append(p.domain)
    nodes = []
    for letter in sorted(by_letter):
        doms = sorted(by_letter[letter], key=lambda d: tuple(sorted(d)))
        for d1, d2 in combinations(doms, 2):
            nodes.append(DeltaNode(letter, (d1, d2)))
    nodes.sort(key=lambda nd: nd.key)
    return tuple(nodes)


@lru_cache(maxsize=None)
def maximal_delta_psets(g: SimplicialGraph) -> tuple[AdmissibleFamily, ...]:
    """All delta-p-sets with inclusion-maximal underlying set."""
    nodes = delta_nodes(g)
    neigh = [0] * len(nodes)
    for i, j in combinations(range(len(nodes)), 2):
        u, v = nodes[i], nodes[j]
        if u.letter == v.letter:
            continue
        if quadruple_is_delta(g, *u.pcs, *v.pcs):
            neigh[i] |= 1 << j
            neigh[j] |= 1 << i
    return _maximal_families(DELTA, [n.pcs for n in nodes], neigh)


# -- membership-driven searches ----------------------------------------------


def extends_to_pset(g: SimplicialGraph, pcs) -> AdmissibleFamily | None:
    """The first maximal p-set containing all given PCs, if any."""
    wanted = set(pcs)
    for p in wanted:
        require_pc(g, p)
    letters = [p.letter for p in wanted]
    if len(letters) != len(set(letters)):
        raise MultiplicityError("a p-set holds at most one PC per acting letter")
    for fam in maximal_psets(g):
        if wanted <= fam.underlying:
            return fam
    return None


def extends_to_delta_pset(g: SimplicialGraph, pcs) -> AdmissibleFamily | None:
    """The first maximal delta-p-set containing all given PCs, if any."""
    wanted = set(pcs)
    for p in wanted:
        require_pc(g, p)
    counts: dict[str, int] = {}
    for p in wanted:
        counts[p.letter] = counts.get(p.letter, 0) + 1
    if any(n != 2 for n in counts.values()):
        raise MultiplicityError("a delta-p-set holds zero or two PCs per acting letter")
    for fam in maximal_delta_psets(g):
        if wanted <= fam.underlying:
            return fam
    return None
