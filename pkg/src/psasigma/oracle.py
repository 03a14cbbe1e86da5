"""Brute-force oracles, a seeded random-graph corpus, and the property battery.

The oracles re-derive everything the engine computes, straight from the
definitions: subsets are enumerated, bipartitions are tried literally, and
nothing is shared with the closure-based enumerators.  They are exponential
and guarded by a budget, which the bundled corpus is calibrated to respect.

The property battery cross-checks engine against oracle on one graph and
returns human-readable failure strings; the selftest command and the
acceptance suite both run it over the deterministic corpus.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from xml.etree import ElementTree

from .characters import (
    IN_COMPLEMENT,
    IN_SIGMA,
    Character,
    hyperbolic_set,
    inner_value,
    make_character,
    sigma_membership,
    sketch_respects_relations,
)
from .errors import BudgetExceededError, DomainError
from .families import (
    construct_maximal_pset,
    is_delta_pset,
    is_pset,
    maximal_delta_psets,
    maximal_psets,
)
from .graph import SimplicialGraph, find_sils
from .pconj import (
    PartialConjugation,
    commutes,
    inner_commutes,
    inner_support,
    is_partial_conjugation,
    pair_case_flags,
    partial_conjugations,
    presentation,
)
from .raag import (
    counting_check_psa,
    counting_check_raag,
    make_raag_character,
    maximal_missing_subspheres,
    raag_sigma_membership,
    theorem_b,
)

DEFAULT_SEED = 20260819


@dataclass(frozen=True)
class CorpusSpec:
    """One deterministic stream of random graphs."""

    vertex_count: int
    edge_probability: Fraction
    seed: int
    count: int

    def __post_init__(self) -> None:
        if not 1 <= self.vertex_count <= 9:
            raise DomainError("vertex_count must be between 1 and 9")
        p = Fraction(self.edge_probability)
        if not 0 <= p <= 1:
            raise DomainError("edge_probability must lie in [0, 1]")
        object.__setattr__(self, "edge_probability", p)


def random_graph(spec: CorpusSpec, index: int) -> SimplicialGraph:
    """The index-th graph of the stream; same spec and index, same graph."""
    if not 0 <= index < spec.count:
        raise DomainError(f"index {index} outside the spec's count {spec.count}")
    p = spec.edge_probability
    rng = random.Random(f"{spec.seed}/{spec.vertex_count}/{p}/{index}")
    names = [f"v{i}" for i in range(1, spec.vertex_count + 1)]
    edges = [
        (u, v)
        for u, v in combinations(names, 2)
        if rng.randrange(p.denominator) < p.numerator
    ]
    return SimplicialGraph.build(names, edges)


def _probability_pool(n: int) -> tuple[Fraction, ...]:
    # denser graphs for larger n keep the PC counts inside the oracle budget
    if n <= 3:
        return (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1))
    if n <= 5:
        return (Fraction(1, 4), Fraction(1, 2), Fraction(2, 3), Fraction(5, 6), Fraction(1))
    return (Fraction(1, 2), Fraction(3, 5), Fraction(7, 10), Fraction(4, 5), Fraction(1))


def default_corpus(seed: int = DEFAULT_SEED, count: int = 500):
    """Yield the published mixed corpus: cycling sizes 1..7, varied densities."""
    for i in range(count):
        n = 1 + i % 7
        pool = _probability_pool(n)
        p = pool[(i // 7) % len(pool)]
        yield random_graph(CorpusSpec(n, p, seed, count), i)


# -- character sampling -------------------------------------------------------


def sample_character(g: SimplicialGraph, rng: random.Random) -> Character | None:
    """A random character; half the time per-letter negated pairs are forced."""
    pcs = partial_conjugations(g)
    if not pcs:
        return None
    values: dict[PartialConjugation, int] = {}
    if rng.random() < 0.5:
        by_letter: dict[str, list[PartialConjugation]] = {}
        for p in pcs:
            by_letter.setdefault(p.letter, []).append(p)
        for letter in sorted(by_letter):
            group = by_letter[letter]
            if len(group) >= 2 and rng.random() < 0.6:
                p1, p2 = rng.sample(group, 2)
                t = rng.choice([1, 2, 3]) * rng.choice([1, -1])
                values[p1] = t
                values[p2] = -t
    if not values:
        mask = rng.randrange(1, 1 << len(pcs))
        for i, p in enumerate(pcs):
            if mask >> i & 1:
                values[p] = rng.choice([-3, -2, -1, 1, 2, 3])
    return make_character(g, values)


# -- brute-force oracles ------------------------------------------------------


def _maximal_only(sets: list[frozenset]) -> tuple[frozenset, ...]:
    out = [s for s in sets if not any(s != t and s <= t for t in sets)]
    return tuple(sorted(set(out), key=lambda s: tuple(sorted(p.pc_id for p in s))))


def _splits(indices: list[int]):
    """All unordered bipartitions of the index list into two nonempty parts."""
    first, rest = indices[0], indices[1:]
    for sel in range(1 << len(rest)):
        side1 = [first] + [rest[j] for j in range(len(rest)) if sel >> j & 1]
        side2 = [rest[j] for j in range(len(rest)) if not sel >> j & 1]
        if side2:
            yield side1, side2


@lru_cache(maxsize=None)
def _pset_sets(g: SimplicialGraph, budget: int) -> tuple[frozenset, ...]:
    """Every p-set underlying set, by definition-level search."""
    pcs = partial_conjugations(g)
    if len(pcs) > budget:
        raise BudgetExceededError(f"{len(pcs)} PCs exceed the oracle budget {budget}")
    ok = [
        [q.letter in p.domain and p.letter in q.domain for q in pcs]
        for p in pcs
    ]
    by_letter: dict[str, list[int]] = {}
    for i, p in enumerate(pcs):
        by_letter.setdefault(p.letter, []).append(i)
    found: list[frozenset] = []

    def choose(letters: list[str], chosen: list[int]) -> None:
        if not letters:
            if len(chosen) >= 2 and any(
                all(ok[i][j] for i in s1 for j in s2) for s1, s2 in _splits(chosen)
            ):
                found.append(frozenset(pcs[i] for i in chosen))
            return
        head, tail = letters[0], letters[1:]
        choose(tail, chosen)
        for i in by_letter[head]:
            choose(tail, chosen + [i])

    choose(sorted(by_letter), [])
    return tuple(found)


def brute_force_psets(g: SimplicialGraph, budget: int = 20) -> tuple[frozenset, ...]:
    """All inclusion-maximal p-set underlying sets, by exhaustive search."""
    return _maximal_only(list(_pset_sets(g, budget)))


@lru_cache(maxsize=None)
def _delta_sets(g: SimplicialGraph, budget: int) -> tuple[frozenset, ...]:
    """Every delta-p-set underlying set, by definition-level search."""
    pcs = partial_conjugations(g)
    if len(pcs) > budget:
        raise BudgetExceededError(f"{len(pcs)} PCs exceed the oracle budget {budget}")
    ok = [
        [
            q.letter in p.domain or p.letter in q.domain or p.domain == q.domain
            for q in pcs
        ]
        for p in pcs
    ]
    by_letter: dict[str, list[int]] = {}
    for i, p in enumerate(pcs):
        by_letter.setdefault(p.letter, []).append(i)
    found: list[frozenset] = []

    def choose(letters: list[str], chosen: list[int]) -> None:
        if not letters:
            if chosen and any(
                all(ok[i][j] for i in s1 for j in s2) for s1, s2 in _splits(chosen)
            ):
                found.append(frozenset(pcs[i] for i in chosen))
            return
        head, tail = letters[0], letters[1:]
        choose(tail, chosen)
        for i, j in combinations(by_letter[head], 2):
            choose(tail, chosen + [i, j])

    choose(sorted(by_letter), [])
    return tuple(found)


def brute_force_delta_psets(g: SimplicialGraph, budget: int = 20) -> tuple[frozenset, ...]:
    """All inclusion-maximal delta-p-set underlying sets, by exhaustive search."""
    return _maximal_only(list(_delta_sets(g, budget)))


def brute_force_missing(g: SimplicialGraph, budget: int = 20) -> tuple[frozenset, ...]:
    """All inclusion-maximal disconnected-or-non-dominating vertex sets."""
    vs = g.vertices
    n = len(vs)
    if n > budget:
        raise BudgetExceededError(f"{n} vertices exceed the oracle budget {budget}")
    adj = {v: set() for v in vs}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    missing: list[frozenset] = []
    for mask in range(1, 1 << n):
        u = {vs[i] for i in range(n) if mask >> i & 1}
        seen = set()
        start = next(iter(u))
        stack = [start]
        seen.add(start)
        while stack:
            x = stack.pop()
            for y in adj[x] & u:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        disconnected = seen != u
        dominating = all(v in u or adj[v] & u for v in vs)
        if disconnected or not dominating:
            missing.append(frozenset(u))
    out = [s for s in missing if not any(s != t and s <= t for t in missing)]
    return tuple(sorted(out, key=lambda s: tuple(sorted(s))))


def brute_force_sils(g: SimplicialGraph) -> tuple[tuple[str, str, frozenset], ...]:
    """All SIL triples, recomputed from the edge list alone."""
    adj = {v: set() for v in g.vertices}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    out = []
    for a, b in combinations(sorted(adj), 2):
        if b in adj[a]:
            continue
        shared = adj[a] & adj[b]
        remaining = set(adj) - shared
        todo = set(remaining)
        while todo:
            start = sorted(todo)[0]
            comp = {start}
            queue = [start]
            while queue:
                x = queue.pop(0)
                for y in adj[x] & remaining:
                    if y not in comp:
                        comp.add(y)
                        queue.append(y)
            todo -= comp
            if a not in comp and b not in comp:
                out.append((a, b, frozenset(comp)))
    return tuple(sorted(out, key=lambda t: (t[0], t[1], tuple(sorted(t[2])))))


def oracle_sigma_membership(g: SimplicialGraph, chi: Character, budget: int = 20) -> str:
    """Definition-level membership: classify, then scan every family for a superset."""
    pcs = partial_conjugations(g)
    hyp = frozenset(p for p in pcs if chi.value(p) != 0)
    counts: dict[str, int] = {}
    for p in hyp:
        counts[p.letter] = counts.get(p.letter, 0) + 1
    letters = {p.letter for p in pcs}
    if all(n <= 1 for n in counts.values()):
        if any(hyp <= q for q in _pset_sets(g, budget)):
            return IN_COMPLEMENT
        return IN_SIGMA
    if all(n == 2 for n in counts.values()) and all(
        sum((chi.value(p) for p in pcs if p.letter == a), Fraction(0)) == 0
        for a in letters
    ):
        if any(hyp <= q for q in _delta_sets(g, budget)):
            return IN_COMPLEMENT
        return IN_SIGMA
    return IN_SIGMA


# -- the per-graph property battery -------------------------------------------


def graph_check_failures(g: SimplicialGraph, budget: int = 20) -> list[str]:
    """Structural cross-checks of one graph: engine vs oracle plus invariants."""
    bad: list[str] = []
    pcs = partial_conjugations(g)

    engine_psets = {fam.underlying for fam in maximal_psets(g)}
    oracle_psets = set(brute_force_psets(g, budget))
    if engine_psets != oracle_psets:
        bad.append("maximal p-sets disagree with brute force")
    engine_deltas = {fam.underlying for fam in maximal_delta_psets(g)}
    oracle_deltas = set(brute_force_delta_psets(g, budget))
    if engine_deltas != oracle_deltas:
        bad.append("maximal delta-p-sets disagree with brute force")
    for fam in maximal_psets(g):
        if not is_pset(g, fam.side1, fam.side2):
            bad.append(f"enumerated family {fam.underlying_ids} fails is_pset")
    for fam in maximal_delta_psets(g):
        if not is_delta_pset(g, fam.side1, fam.side2):
            bad.append(f"enumerated family {fam.underlying_ids} fails is_delta_pset")
        for p in fam.underlying:
            partners = [q for q in fam.underlying if q.letter == p.letter]
            side = fam.side1 if p in fam.side1 else fam.side2
            if not all(q in side for q in partners):
                bad.append("delta family splits a same-letter pair across sides")

    if pcs and not all(any(p in q for q in oracle_psets) for p in pcs):
        bad.append("some PC lies in no p-set")

    for p in pcs:
        fam = construct_maximal_pset(g, p)
        if p not in fam.underlying:
            bad.append(f"construction from {p.pc_id} lost its seed")
        if not is_pset(g, fam.side1, fam.side2):
            bad.append(f"construction from {p.pc_id} is not a p-set")
        if fam.underlying not in engine_psets:
            bad.append(f"construction from {p.pc_id} is not maximal")

    engine_missing = {frozenset(s.support) for s in maximal_missing_subspheres(g)}
    if engine_missing != set(brute_force_missing(g, budget)):
        bad.append("maximal missing subspheres disagree with brute force")
    if any(s != t and s <= t for s in engine_missing for t in engine_missing):
        bad.append("missing subsphere supports are not an antichain")
    central = set(g.z_vertices)
    if any(central & s for s in engine_missing):
        bad.append("a missing subsphere meets the set of cone vertices")
    for v in g.vertices:
        if v not in central and not any(v in s for s in engine_missing):
            bad.append(f"non-cone vertex {v} lies in no missing subsphere")

    engine_sils = {(w.a, w.b, w.component) for w in find_sils(g)}
    if engine_sils != set(brute_force_sils(g)):
        bad.append("find_sils disagrees with brute force")

    verdict = theorem_b(g)
    if verdict.is_raag != (not engine_deltas):
        bad.append("SIL dichotomy out of step with delta-p-set existence")
    if not verdict.is_raag:
        fam = verdict.delta_family
        if fam is None or not is_delta_pset(g, fam.side1, fam.side2):
            bad.append("dichotomy witness is not a delta-p-set")

    for label, report in (("raag", counting_check_raag(g)), ("psa", counting_check_psa(g))):
        if not report.holds:
            bad.append(f"{label} counting identity fails: {report.lhs} != {report.rhs}")

    cone = g.cone()
    if set(partial_conjugations(cone)) != set(pcs):
        bad.append("coning changed the partial conjugations")
    cone_sils = {(w.a, w.b, w.component) for w in find_sils(cone)}
    if cone_sils != engine_sils:
        bad.append("coning changed the SIL witnesses")

    bad.extend(_pair_lemma_failures(g))
    bad.extend(_rename_failures(g))
    return bad


def _pair_lemma_failures(g: SimplicialGraph) -> list[str]:
    bad = []
    pcs = partial_conjugations(g)
    for p, q in combinations(pcs, 2):
        if p.letter == q.letter:
            continue
        flags = pair_case_flags(g, p, q)
        if sum(flags) != 1:
            bad.append(f"pair ({p.pc_id}, {q.pc_id}) matches {sum(flags)} cases")
        for x, y in ((p, q), (q, p)):
            a, k = x.letter, x.domain
            b, l = y.letter, y.domain
            if g.dist2(a, b) == 2 and b not in k:
                if (k & l) and not k <= l:
                    bad.append(f"two-generator dichotomy fails for ({x.pc_id}, {y.pc_id})")
            if a not in l and b in k and not (k & l):
                if not is_partial_conjugation(g, a, l):
                    bad.append(f"new-PC lemma fails for ({x.pc_id}, {y.pc_id})")
    return bad


def _rename_failures(g: SimplicialGraph) -> list[str]:
    rng = random.Random(g.to_json())
    perm = list(range(len(g.vertices)))
    rng.shuffle(perm)
    mapping = {v: f"w{perm[i] + 1}" for i, v in enumerate(g.vertices)}
    h = g.renamed(mapping)
    bad = []
    if len(partial_conjugations(h)) != len(partial_conjugations(g)):
        bad.append("renaming changed the PC count")
    if len(maximal_psets(h)) != len(maximal_psets(g)):
        bad.append("renaming changed the maximal p-set count")
    if len(maximal_delta_psets(h)) != len(maximal_delta_psets(g)):
        bad.append("renaming changed the maximal delta-p-set count")
    if len(presentation(h).relations) != len(presentation(g).relations):
        bad.append("renaming changed the relation count")
    if len(maximal_missing_subspheres(h)) != len(maximal_missing_subspheres(g)):
        bad.append("renaming changed the missing subsphere count")
    for support in [g.vertices[:1], g.vertices[: (len(g.vertices) + 1) // 2]]:
        psi = make_raag_character(g, {v: 1 for v in support})
        phi = make_raag_character(h, {mapping[v]: 1 for v in support})
        if raag_sigma_membership(g, psi) != raag_sigma_membership(h, phi):
            bad.append("renaming changed a character's membership verdict")
    return bad


def remark_construction_gaps(g: SimplicialGraph) -> list[tuple[str, ...]]:
    """Maximal p-sets that no seed of theirs reproduces via the one-step construction.

    These are reported in the selftest rather than treated as failures: the
    construction is a convenience, and the enumerator never relies on it
    reaching everything.
    """
    gaps = []
    for fam in maximal_psets(g):
        q = fam.underlying
        if not any(q <= construct_maximal_pset(g, seed).underlying for seed in q):
            gaps.append(tuple(sorted(p.pc_id for p in q)))
    return gaps


def _inner_failures(g: SimplicialGraph) -> list[str]:
    bad = []
    pcs = partial_conjugations(g)
    letters = sorted({p.letter for p in pcs})
    for a in letters:
        support = inner_support(g, a)
        for q in pcs:
            if q.letter == a:
                continue
            # if every factor of the inner product commutes with q, the product
            # does too, so the letter must avoid q's domain
            elementwise = all(commutes(g, p, q) for p in support)
            if elementwise and not inner_commutes(g, a, q):
                bad.append(
                    f"inner product of {a!r} commutes factorwise with {q.pc_id} "
                    "yet its domain contains the letter"
                )
    return bad


def character_check_failures(g: SimplicialGraph, chi: Character, budget: int = 20,
                             check_witness: bool = True) -> list[str]:
    """Cross-check one character's verdict and its invariants."""
    bad = []
    verdict = sigma_membership(g, chi)
    oracle = oracle_sigma_membership(g, chi, budget)
    if verdict.membership != oracle:
        bad.append(f"sigma verdict {verdict.membership} disagrees with oracle {oracle}")
    for r in (Fraction(2), Fraction(1, 3)):
        scaled = sigma_membership(g, chi.scaled(r))
        if (scaled.type, scaled.membership) != (verdict.type, verdict.membership):
            bad.append(f"scaling by {r} changed the verdict")
    if verdict.membership == IN_COMPLEMENT:
        fam = verdict.witness_family
        hyp = set(hyperbolic_set(g, chi))
        if not hyp <= fam.underlying:
            bad.append("witness family misses part of the hyperbolic set")
        checker = is_pset if fam.kind == "pset" else is_delta_pset
        if not checker(g, fam.side1, fam.side2):
            bad.append("witness family fails its recognizer")
        counts: dict[str, int] = {}
        for p in hyp:
            counts[p.letter] = counts.get(p.letter, 0) + 1
        if any(n > 2 for n in counts.values()):
            bad.append("complement verdict with more than two hyperbolic PCs on a letter")
        for a, n in counts.items():
            iota = inner_value(g, chi, a)
            if (n == 1) != (iota != 0):
                bad.append(f"inner value at {a!r} inconsistent with hyperbolic count {n}")
            if n == 2:
                vals = [chi.value(p) for p in hyp if p.letter == a]
                if vals[0] + vals[1] != 0:
                    bad.append(f"paired hyperbolic values at {a!r} do not cancel")
        if check_witness and not sketch_respects_relations(g, verdict.epimorphism):
            bad.append("epimorphism sketch breaks a presentation relation")
    return bad


# -- selftest -----------------------------------------------------------------


@dataclass
class SelftestReport:
    graphs: int = 0
    characters: int = 0
    failures: list[dict] = field(default_factory=list)
    # observations that are worth surfacing but are not correctness failures
    notes: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "graphs": self.graphs,
            "characters": self.characters,
            "failures": self.failures,
            "notes": self.notes,
            "ok": self.ok,
        }

    def junit_xml(self) -> str:
        suite = ElementTree.Element(
            "testsuite",
            name="psasigma-selftest",
            tests=str(self.graphs),
            failures=str(len(self.failures)),
        )
        for f in self.failures:
            case = ElementTree.SubElement(
                suite, "testcase", name=f"graph-{f['index']}"
            )
            failure = ElementTree.SubElement(case, "failure", message=f["failure"])
            failure.text = f["graph"]
        return ElementTree.tostring(suite, encoding="unicode")


def run_selftest(seed: int = DEFAULT_SEED, graphs: int = 500, chars_per_graph: int = 20,
                 budget: int = 20) -> SelftestReport:
    """Run the full battery over the deterministic corpus."""
    report = SelftestReport()
    for index, g in enumerate(default_corpus(seed, graphs)):
        report.graphs += 1
        failures = graph_check_failures(g, budget)
        failures.extend(_inner_failures(g))
        for gap in remark_construction_gaps(g):
            report.notes.append(
                {"index": index, "construction_misses_pset": list(gap)}
            )
        rng = random.Random(f"{seed}/chars/{index}")
        for k in range(chars_per_graph):
            chi = sample_character(g, rng)
            if chi is None:
                break
            report.characters += 1
            failures.extend(
                character_check_failures(g, chi, budget, check_witness=(k < 5))
            )
        for failure in failures:
            report.failures.append(
                {"index": index, "graph": g.to_json().strip(), "failure": failure}
            )
    return report
