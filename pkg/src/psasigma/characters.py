"""Characters of the pure symmetric automorphism group and their sigma classes.

A character assigns a rational to every partial conjugation (the PCs are a
basis of the abelianization, so this is the general homomorphism to the
reals with rational values).  Arithmetic is exact throughout; no floats enter
the decision path.

The membership decision: a nonzero character is type I when every letter
carries at most one hyperbolic PC, type II when every letter carries zero or
two hyperbolic PCs and all per-letter value sums vanish.  A character of
neither type lies in the invariant; otherwise it lies in the complement
exactly when its hyperbolic set extends to a p-set (type I) or delta-p-set
(type II), and the certifying family is returned together with an
epimorphism sketch onto a free product of two free abelian groups.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import DomainError, UnknownVertexError, ZeroCharacterError
from .families import (
    DELTA,
    PSET,
    AdmissibleFamily,
    extends_to_delta_pset,
    extends_to_pset,
)
from .graph import SimplicialGraph
from .pconj import (
    CommutatorRel,
    DeltaRel,
    PartialConjugation,
    partial_conjugations,
    pc_index,
    presentation,
)


@dataclass(frozen=True)
class Character:
    """Exact rational values on every partial conjugation, not all zero."""

    values: tuple[tuple[str, Fraction], ...]  # (pc id, value), sorted by id

    @cached_property
    def _lookup(self) -> dict[str, Fraction]:
        return dict(self.values)

    def value(self, pc: PartialConjugation | str) -> Fraction:
        key = pc if isinstance(pc, str) else pc.pc_id
        try:
            return self._lookup[key]
        except KeyError:
            raise DomainError(f"character has no coordinate {key!r}") from None

    def scaled(self, r: Fraction) -> Character:
        if r <= 0:
            raise DomainError("character classes only survive positive scaling")
        return Character(tuple((k, v * r) for k, v in self.values))

    def to_json_dict(self) -> dict:
        return {k: str(v) for k, v in self.values if v}


def make_character(g: SimplicialGraph, values: dict) -> Character:
    """Build a character from a partial {pc id or PC: rational} mapping."""
    idx = pc_index(g)
    filled: dict[str, Fraction] = {pid: Fraction(0) for pid in idx}
    for key, raw in values.items():
        pid = key.pc_id if isinstance(key, PartialConjugation) else key
        if pid not in filled:
            raise DomainError(f"{pid!r} is not a partial conjugation of this graph")
        try:
            filled[pid] = Fraction(raw)
        except (ValueError, TypeError) as e:
            raise DomainError(f"bad rational {raw!r} for {pid!r}: {e}") from e
    if not any(filled.values()):
        raise ZeroCharacterError("the zero character has no sphere class")
    return Character(tuple(sorted(filled.items())))


def parse_character(g: SimplicialGraph, text: str | bytes) -> Character:
    """Parse a {pc id: rational string or int} JSON object."""
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
    return make_character(g, data)


def sphere_dimension(g: SimplicialGraph) -> int | None:
    """Dimension of the character sphere, or None when there are no PCs."""
    n = len(partial_conjugations(g))
    return n - 1 if n else None


def hyperbolic_set(g: SimplicialGraph, chi: Character) -> tuple[PartialConjugation, ...]:
    """The PCs with nonzero value, in canonical order."""
    return tuple(p for p in partial_conjugations(g) if chi.value(p) != 0)


def inner_value(g: SimplicialGraph, chi: Character, a: str) -> Fraction:
    """The character's value on conjugation by ``a``: the letter-a sum."""
    if not g.has_vertex(a):
        raise UnknownVertexError(f"unknown vertex {a!r}")
    return sum(
        (chi.value(p) for p in partial_conjugations(g) if p.letter == a),
        Fraction(0),
    )


class TypeVerdict(enum.Enum):
    TYPE_I = "I"
    TYPE_II = "II"
    NEITHER = "neither"


def classify_type(g: SimplicialGraph, chi: Character) -> TypeVerdict:
    counts: dict[str, int] = {}
    for p in hyperbolic_set(g, chi):
        counts[p.letter] = counts.get(p.letter, 0) + 1
    if all(n <= 1 for n in counts.values()):
        return TypeVerdict.TYPE_I
    if all(n == 2 for n in counts.values()):
        letters = {p.letter for p in partial_conjugations(g)}
        if all(inner_value(g, chi, a) == 0 for a in sorted(letters)):
            return TypeVerdict.TYPE_II
    return TypeVerdict.NEITHER


IN_SIGMA = "sigma"
IN_COMPLEMENT = "complement"

REASON_NEITHER = "neither-type"
REASON_NO_PSET = "type-i-no-pset"
REASON_NO_DELTA = "type-ii-no-delta-pset"


@dataclass(frozen=True)
class SigmaVerdict:
    type: TypeVerdict
    membership: str  # IN_SIGMA | IN_COMPLEMENT
    witness_family: AdmissibleFamily | None = None
    epimorphism: tuple[tuple[str, str], ...] | None = None  # (pc id, image word)
    reason: str | None = None

    @property
    def in_sigma(self) -> bool:
        return self.membership == IN_SIGMA

    def to_json_dict(self) -> dict:
        witness = None
        if self.witness_family is not None:
            witness = {
                "family": self.witness_family.to_json_dict(),
                "epimorphism": dict(self.epimorphism or ()),
            }
        return {
            "type": self.type.value,
            "membership": self.membership,
            "witness": witness,
            "reason": self.reason,
        }


def _epimorphism_sketch(g, fam: AdmissibleFamily) -> tuple[tuple[str, str], ...]:
    """Map each PC to a basis word of the free product certifying the verdict.

    Side1 letters go to u-generators, side2 to v-generators; in a delta family
    the canonically smaller partner takes the positive generator and the other
    its inverse.  Everything outside the family dies.
    """
    images: dict[str, str] = {p.pc_id: "1" for p in partial_conjugations(g)}
    for prefix, side in (("u", fam.side1), ("v", fam.side2)):
        if fam.kind == PSET:
            for i, p in enumerate(side, start=1):
                images[p.pc_id] = f"{prefix}{i}"
        else:
            by_letter: dict[str, list[PartialConjugation]] = {}
            for p in side:
                by_letter.setdefault(p.letter, []).append(p)
            for i, letter in enumerate(sorted(by_letter), start=1):
                first, second = sorted(by_letter[letter], key=lambda p: p.key)
                images[first.pc_id] = f"{prefix}{i}"
                images[second.pc_id] = f"{prefix}{i}^-1"
    return tuple(sorted(images.items()))


def sigma_membership(g: SimplicialGraph, chi: Character) -> SigmaVerdict:
    """Decide whether the character class lies in the invariant or its complement."""
    kind = classify_type(g, chi)
    hyp = hyperbolic_set(g, chi)
    if kind is TypeVerdict.NEITHER:
        return SigmaVerdict(kind, IN_SIGMA, reason=REASON_NEITHER)
    if kind is TypeVerdict.TYPE_I:
        fam = extends_to_pset(g, hyp)
        if fam is None:
            return SigmaVerdict(kind, IN_SIGMA, reason=REASON_NO_PSET)
    else:
        fam = extends_to_delta_pset(g, hyp)
        if fam is None:
            return SigmaVerdict(kind, IN_SIGMA, reason=REASON_NO_DELTA)
    return SigmaVerdict(kind, IN_COMPLEMENT, fam, _epimorphism_sketch(g, fam))


# -- syntactic soundness of complement witnesses ------------------------------


def _image_factor(word: str) -> tuple[str, str, int] | None:
    """Split an image word into (factor, generator, exponent); None for '1'."""
    if word == "1":
        return None
    body, _, exp = word.partition("^")
    return (body[0], body, -1 if exp == "-1" else 1)


def sketch_respects_relations(g: SimplicialGraph, sketch) -> bool:
    """Check every presentation relation against an epimorphism sketch.

    Images live in a free product of two free abelian groups, so a commutator
    relation holds exactly when either side dies or both land in the same
    factor.  The delta relations multiply two same-letter images first; the
    product stays in one factor (or dies) whenever the sketch is valid.
    """
    images = dict(sketch)

    def factor_of(pid: str) -> str | None:
        part = _image_factor(images[pid])
        return None if part is None else part[0]

    def commutator_ok(f1: str | None, f2: str | None) -> bool:
        return f1 is None or f2 is None or f1 == f2

    for rel in presentation(g).relations:
        if isinstance(rel, CommutatorRel):
            if not commutator_ok(factor_of(rel.p.pc_id), factor_of(rel.q.pc_id)):
                return False
        elif isinstance(rel, DeltaRel):
            pk = PartialConjugation(rel.letter, rel.k).pc_id
            pl = PartialConjugation(rel.letter, rel.l).pc_id
            qb = PartialConjugation(rel.b, rel.l).pc_id
            parts = [p for p in (_image_factor(images[pk]), _image_factor(images[pl])) if p]
            if len(parts) == 2 and parts[0][0] != parts[1][0]:
                return False  # mixed product never centralizes anything here
            if len(parts) == 2 and parts[0][1] == parts[1][1] and parts[0][2] + parts[1][2] == 0:
                continue  # the two partners cancel; the commutator is trivial
            product_factor = parts[0][0] if parts else None
            if not commutator_ok(product_factor, factor_of(qb)):
                return False
    return True
