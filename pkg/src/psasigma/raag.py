"""Sigma data of the right-angled Artin group itself, and the RAAG dichotomy.

A vertex character lies in the invariant of the RAAG exactly when its support
spans a connected dominating subgraph.  The complement of the invariant is a
union of missing subspheres S(U), one for each vertex subset U spanning a
disconnected or non-dominating subgraph; only the inclusion-maximal U matter.

Two counting identities tie the sphere dimensions to the maximal missing
subspheres (for the RAAG) and to the maximal p-sets (for the automorphism
group); both are checked by literal inclusion-exclusion.

The dichotomy: the automorphism group is itself a RAAG exactly when the
defining graph has no SIL, and every SIL converts into an explicit
delta-p-set witnessing the difference.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import BudgetExceededError, DomainError, InternalCheckError, UnknownVertexError, ZeroCharacterError
from .families import DELTA, PSET, AdmissibleFamily, _closure_pairs, _orient, is_delta_pset, maximal_delta_psets, maximal_psets
from .graph import SilWitness, SimplicialGraph, find_sils
from .pconj import PartialConjugation, partial_conjugations


@dataclass(frozen=True)
class RaagCharacter:
    """Exact rational values on the vertex generators, not all zero."""

    values: tuple[tuple[str, Fraction], ...]

    @property
    def support(self) -> frozenset:
        return frozenset(v for v, x in self.values if x)

    def scaled(self, r) -> "RaagCharacter":
        r = Fraction(r)
        if r <= 0:
            raise DomainError("sphere classes only admit positive scaling")
        return RaagCharacter(tuple((v, x * r) for v, x in self.values))

    def to_json_dict(self) -> dict:
        return {v: str(x) for v, x in self.values if x}


def make_raag_character(g: SimplicialGraph, values: dict) -> RaagCharacter:
    filled: dict[str, Fraction] = {v: Fraction(0) for v in g.vertices}
    for v, raw in values.items():
        if v not in filled:
            raise UnknownVertexError(f"unknown vertex {v!r}")
        try:
            filled[v] = Fraction(raw)
        except (ValueError, TypeError) as e:
            raise DomainError(f"bad rational {raw!r} for vertex {v!r}: {e}") from e
    if not any(filled.values()):
        raise ZeroCharacterError("the zero character has no sphere class")
    return RaagCharacter(tuple(sorted(filled.items())))


def parse_raag_character(g: SimplicialGraph, text: str | bytes) -> RaagCharacter:
    """Parse a {vertex: rational string or int} JSON object."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DomainError(f"invalid character JSON: {e}") from e
    if not isinstance(data, dict):
        raise DomainError("character JSON must be an object")
    for k, v in data.items():
        if not isinstance(v, (str, int)):
            raise DomainError(f"character value for {k!r} must be a string or integer")
    return make_raag_character(g, data)


@dataclass(frozen=True)
class RaagSigmaVerdict:
    in_sigma: bool
    support: tuple[str, ...]
    connected: bool
    dominating: bool

    def to_json_dict(self) -> dict:
        return {
            "membership": "sigma" if self.in_sigma else "complement",
            "support": list(self.support),
            "connected": self.connected,
            "dominating": self.dominating,
        }


def raag_sigma_verdict(g: SimplicialGraph, psi: RaagCharacter) -> RaagSigmaVerdict:
    """Full verdict record: membership plus the two support properties."""
    connected, dominating = g.spans_connected_dominating(psi.support)
    return RaagSigmaVerdict(connected and dominating, tuple(sorted(psi.support)), connected, dominating)


def raag_sigma_membership(g: SimplicialGraph, psi: RaagCharacter) -> bool:
    """True iff the class of psi lies in the invariant of the Artin group."""
    return raag_sigma_verdict(g, psi).in_sigma


@dataclass(frozen=True)
class Subsphere:
    """A coordinate subsphere of a character sphere.

    ``kind`` is "missing" (vertex support, RAAG side), "pset" or "delta" (PC
    id support, automorphism side).  The dimension is |support| - 1 except for
    delta families, whose per-letter sum-zero constraints halve the count;
    ``pairs`` then records the same-letter pairing.
    """

    kind: str
    support: tuple[str, ...]
    dimension: int
    pairs: tuple[tuple[str, str], ...] | None = None

    def to_json_dict(self) -> dict:
        out = {"kind": self.kind, "support": list(self.support), "dimension": self.dimension}
        if self.pairs is not None:
            out["pairs"] = [list(pr) for pr in self.pairs]
        return out


@lru_cache(maxsize=None)
def maximal_missing_subspheres(g: SimplicialGraph) -> tuple[Subsphere, ...]:
    """Inclusion-maximal vertex sets spanning a disconnected or non-dominating subgraph.

    Candidates: complements of closed stars (maximal non-dominating sets) and
    unions of maximal cross-complete pairs in the complement graph (maximal
    disconnected sets); the two pools are then filtered jointly.
    """
    vs = g.vertices
    n = len(vs)
    pos = {v: i for i, v in enumerate(vs)}
    candidates: set[int] = set()
    for v in vs:
        mask = 0
        for w in set(vs) - g.star(v):
            mask |= 1 << pos[w]
        if mask:
            candidates.add(mask)
    neigh = [0] * n
    for i, u in enumerate(vs):
        for j, w in enumerate(vs):
            if i != j and not g.has_edge(u, w):
                neigh[i] |= 1 << j
    for x, y in _closure_pairs(neigh):
        candidates.add(x | y)
    maximal = [
        m for m in candidates
        if not any(m != w and m & w == m for w in candidates)
    ]
    out = []
    for m in maximal:
        support = tuple(vs[i] for i in range(n) if m >> i & 1)
        out.append(Subsphere("missing", support, len(support) - 1))
    out.sort(key=lambda s: s.support)
    return tuple(out)


def psa_complement_subspheres(g: SimplicialGraph) -> tuple[Subsphere, ...]:
    """Subsphere records for the maximal p-sets and delta-p-sets."""
    out = []
    for fam in maximal_psets(g):
        ids = fam.underlying_ids
        out.append(Subsphere(PSET, ids, len(ids) - 1))
    for fam in maximal_delta_psets(g):
        ids = fam.underlying_ids
        pairs = []
        by_letter: dict[str, list[PartialConjugation]] = {}
        for p in sorted(fam.underlying, key=lambda p: p.key):
            by_letter.setdefault(p.letter, []).append(p)
        for letter in sorted(by_letter):
            first, second = by_letter[letter]
            pairs.append((first.pc_id, second.pc_id))
        out.append(Subsphere(DELTA, ids, len(ids) // 2 - 1, tuple(pairs)))
    return tuple(out)


@dataclass(frozen=True)
class CountingReport:
    lhs: int
    rhs: int | None
    holds: bool
    vacuous: bool

    def to_json_dict(self) -> dict:
        return {"lhs": self.lhs, "rhs": self.rhs, "holds": self.holds, "vacuous": self.vacuous}


def _inclusion_exclusion(supports: list[int]) -> int:
    """1 + alternating sum of intersection dimensions over nonempty index sets."""
    p = len(supports)
    inter = [0] * (1 << p)
    inter[0] = -1  # unused sentinel; masks start at 1
    total = 0
    for m in range(1, 1 << p):
        low = m & -m
        i = low.bit_length() - 1
        inter[m] = supports[i] if m == low else inter[m ^ low] & supports[i]
        dim = inter[m].bit_count() - 1
        total += dim if m.bit_count() % 2 else -dim
    return 1 + total


def counting_check_raag(g: SimplicialGraph, term_budget: int = 20) -> CountingReport:
    """Check |V| - |Z| against the inclusion-exclusion over missing subspheres."""
    lhs = len(g.vertices) - len(g.z_vertices)
    spheres = maximal_missing_subspheres(g)
    if not spheres:
        return CountingReport(lhs, None, True, True)
    if len(spheres) > term_budget:
        raise BudgetExceededError(
            f"{len(spheres)} missing subspheres exceed the {term_budget}-term budget"
        )
    pos = {v: i for i, v in enumerate(g.vertices)}
    supports = []
    for s in spheres:
        mask = 0
        for v in s.support:
            mask |= 1 << pos[v]
        supports.append(mask)
    rhs = _inclusion_exclusion(supports)
    return CountingReport(lhs, rhs, lhs == rhs, False)


def counting_check_psa(g: SimplicialGraph, term_budget: int = 20) -> CountingReport:
    """Check the PC count against the inclusion-exclusion over maximal p-sets."""
    pcs = partial_conjugations(g)
    lhs = len(pcs)
    fams = maximal_psets(g)
    if not fams:
        return CountingReport(lhs, None, True, True)
    if len(fams) > term_budget:
        raise BudgetExceededError(
            f"{len(fams)} maximal p-sets exceed the {term_budget}-term budget"
        )
    pos = {p: i for i, p in enumerate(pcs)}
    supports = []
    for fam in fams:
        mask = 0
        for p in fam.underlying:
            mask |= 1 << pos[p]
        supports.append(mask)
    rhs = _inclusion_exclusion(supports)
    return CountingReport(lhs, rhs, lhs == rhs, False)


@dataclass(frozen=True)
class RaagVerdict:
    """Outcome of the dichotomy: RAAG or not, with certificates."""

    is_raag: bool
    sil: SilWitness | None = None
    delta_family: AdmissibleFamily | None = None

    def to_json_dict(self) -> dict:
        return {
            "is_raag": self.is_raag,
            "sil": self.sil.to_json_dict() if self.sil else None,
            "delta_family": self.delta_family.to_json_dict() if self.delta_family else None,
        }


def theorem_b(g: SimplicialGraph) -> RaagVerdict:
    """Decide whether the automorphism group is itself a RAAG.

    It is exactly when the graph has no SIL; the first SIL in canonical order
    is converted into the delta-p-set that obstructs any RAAG presentation.
    """
    sils = find_sils(g)
    if not sils:
        return RaagVerdict(True)
    wit = sils[0]
    a, b, m = wit.a, wit.b, wit.component
    k = _component_of_in(g, a, b)
    l = _component_of_in(g, b, a)
    side_a = (PartialConjugation(a, k), PartialConjugation(a, m))
    side_b = (PartialConjugation(b, l), PartialConjugation(b, m))
    try:
        ok = is_delta_pset(g, side_a, side_b)
    except DomainError as e:
        raise InternalCheckError(f"SIL conversion produced foreign PCs: {e}") from e
    if not ok:
        raise InternalCheckError("SIL conversion produced a non-delta-p-set")
    return RaagVerdict(False, wit, _orient(DELTA, side_a, side_b))


def _component_of_in(g, letter: str, target: str) -> frozenset:
    for comp in g.components_without_star(letter):
        if target in comp:
            return comp
    raise InternalCheckError(f"{target!r} unexpectedly inside the star of {letter!r}")
