"""Finite simplicial graphs and the combinatorics built on them.

Vertices are strings and the canonical order is lexicographic.  Operations
return data in canonical order throughout, so serialized output is
byte-reproducible.  The combinatorial distance is truncated at 2: any two
distinct non-adjacent vertices are at distance 2, even when they lie in
different connected components (the convention of the coned-off graph, where
everything is within two steps of everything else).
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import GraphFormatError, UnknownVertexError

# Vertex subsets are plain frozensets; canonical form is sorted() at the edges
# of the system (serialization, ordering of result lists).
VertexSet = frozenset

Edge = tuple[str, str]


def _norm_edge(u: str, v: str) -> Edge:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class SimplicialGraph:
    """A finite simplicial graph: no loops, no multi-edges, named vertices.

    ``vertices`` is sorted and ``edges`` holds sorted pairs in sorted order;
    the constructor rejects anything not already in that canonical form.  Use
    :meth:`build` or the parsers to canonicalize raw data.
    """

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise GraphFormatError("a graph needs at least one vertex")
        if list(self.vertices) != sorted(set(self.vertices)):
            raise GraphFormatError("vertex tuple is not sorted and duplicate-free")
        vset = set(self.vertices)
        prev = None
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphFormatError(f"loop edge at {u!r}")
            if u > v:
                raise GraphFormatError(f"edge {e!r} is not a sorted pair")
            if u not in vset or v not in vset:
                raise GraphFormatError(f"edge {e!r} references an undeclared vertex")
            if prev is not None and e <= prev:
                raise GraphFormatError("edge tuple is not sorted and duplicate-free")
            prev = e

    @classmethod
    def build(cls, vertices: Iterable[str], edges: Iterable[tuple[str, str]]) -> SimplicialGraph:
        """Canonicalize and validate raw vertex and edge data."""
        vs = list(vertices)
        for name, n in Counter(vs).items():
            if n > 1:
                raise GraphFormatError(f"duplicate vertex {name!r}")
        vset = set(vs)
        norm: list[Edge] = []
        for u, v in edges:
            if u == v:
                raise GraphFormatError(f"loop edge at {u!r}")
            if u not in vset:
                raise GraphFormatError(f"edge endpoint {u!r} is not a declared vertex")
            if v not in vset:
                raise GraphFormatError(f"edge endpoint {v!r} is not a declared vertex")
            norm.append(_norm_edge(u, v))
        for e, n in Counter(norm).items():
            if n > 1:
                raise GraphFormatError(f"duplicate edge {e[0]!r} -- {e[1]!r}")
        return cls(tuple(sorted(vset)), tuple(sorted(norm)))

    # -- basic queries ----------------------------------------------------

    @cached_property
    def _adj(self) -> dict[str, frozenset]:
        nbr: dict[str, set] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            nbr[u].add(v)
            nbr[v].add(u)
        return {v: frozenset(s) for v, s in nbr.items()}

    def _require(self, v: str) -> None:
        if v not in self._adj:
            raise UnknownVertexError(f"unknown vertex {v!r}")

    def has_vertex(self, v: str) -> bool:
        return v in self._adj

    def has_edge(self, u: str, v: str) -> bool:
        self._require(u)
        self._require(v)
        return v in self._adj[u]

    def neighbors(self, v: str) -> frozenset:
        self._require(v)
        return self._adj[v]

    def link(self, v: str) -> frozenset:
        """All vertices adjacent to v (never contains v itself)."""
        return self.neighbors(v)

    def star(self, v: str) -> frozenset:
        """The link of v together with v."""
        return self.neighbors(v) | {v}

    def dist2(self, u: str, v: str) -> int:
        """Distance truncated at 2: 0 if equal, 1 if adjacent, else 2."""
        self._require(u)
        self._require(v)
        if u == v:
            return 0
        return 1 if v in self._adj[u] else 2

    @cached_property
    def z_vertices(self) -> frozenset:
        """Vertices whose star is the whole vertex set (no PCs act by them)."""
        n = len(self.vertices)
        return frozenset(v for v in self.vertices if len(self._adj[v]) == n - 1)

    # -- induced subgraphs -------------------------------------------------

    def components(self, subset: Iterable[str]) -> tuple[frozenset, ...]:
        """Connected components of the induced subgraph, in canonical order."""
        allowed = set(subset)
        for v in allowed:
            self._require(v)
        out: list[frozenset] = []
        seen: set[str] = set()
        for start in sorted(allowed):
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if y in allowed and y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            out.append(frozenset(comp))
        out.sort(key=lambda c: tuple(sorted(c)))
        return tuple(out)

    def components_without_star(self, a: str) -> tuple[frozenset, ...]:
        """Components of the graph with the closed star of ``a`` removed."""
        self._require(a)
        return self.components(set(self.vertices) - self.star(a))

    def spans_connected_dominating(self, subset: Iterable[str]) -> tuple[bool, bool]:
        """Whether the induced subgraph is connected, and whether it dominates.

        The empty set is not connected, and dominates only an empty graph
        (which cannot be constructed here, so in practice it never dominates).
        """
        u = set(subset)
        for v in u:
            self._require(v)
        connected = bool(u) and len(self.components(u)) == 1
        dominating = all(v in u or (self._adj[v] & u) for v in self.vertices)
        return connected, dominating

    # -- construction ------------------------------------------------------

    def cone(self) -> SimplicialGraph:
        """Add a fresh vertex adjacent to every existing vertex."""
        apex = "apex"
        k = 0
        while apex in self._adj:
            apex = f"apex{k}"
            k += 1
        edges = list(self.edges) + [_norm_edge(apex, v) for v in self.vertices]
        return SimplicialGraph.build(self.vertices + (apex,), edges)

    def renamed(self, mapping: dict[str, str]) -> SimplicialGraph:
        """The same graph with vertices renamed by an injective mapping."""
        for v in self.vertices:
            if v not in mapping:
                raise UnknownVertexError(f"no new name for vertex {v!r}")
        return SimplicialGraph.build(
            (mapping[v] for v in self.vertices),
            ((mapping[u], mapping[v]) for u, v in self.edges),
        )

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, ensure_ascii=False) + "\n"


def parse_graph(text: str | bytes, fmt: str = "json") -> SimplicialGraph:
    """Parse a graph from ``json`` or ``edgelist`` text."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    if fmt == "json":
        return _parse_json(text)
    if fmt == "edgelist":
        return _parse_edgelist(text)
    raise GraphFormatError(f"unknown graph format {fmt!r}")


def _parse_json(text: str) -> SimplicialGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphFormatError(f"invalid JSON: {e}") from e
    if not isinstance(data, dict):
        raise GraphFormatError("graph JSON must be an object")
    for key in ("vertices", "edges"):
        if key not in data:
            raise GraphFormatError(f"graph JSON is missing {key!r}")
    vertices = data["vertices"]
    edges = data["edges"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise GraphFormatError("'vertices' must be a list of strings")
    if not isinstance(edges, list):
        raise GraphFormatError("'edges' must be a list of two-element lists")
    pairs = []
    for i, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, str) for x in e)):
            raise GraphFormatError(f"edge #{i} must be a two-element list of strings")
        pairs.append((e[0], e[1]))
    return SimplicialGraph.build(vertices, pairs)


def _parse_edgelist(text: str) -> SimplicialGraph:
    vertices: list[str] = []
    edges: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "vertex":
            if len(parts) != 2:
                raise GraphFormatError(f"line {lineno}: 'vertex' takes exactly one name")
            vertices.append(parts[1])
        elif len(parts) == 2:
            edges.append((parts[0], parts[1]))
            vertices.extend(parts)
        else:
            raise GraphFormatError(f"line {lineno}: expected 'u v' or 'vertex u', got {line!r}")
    # endpoints declare vertices implicitly; explicit duplicates are fine here
    seen: set[str] = set()
    uniq = [v for v in vertices if not (v in seen or seen.add(v))]
    try:
        return SimplicialGraph.build(uniq, edges)
    except GraphFormatError as e:
        raise GraphFormatError(f"edge list: {e}") from e


@dataclass(frozen=True)
class SilWitness:
    """A separated-intersection-of-links witness.

    ``a`` and ``b`` are distinct non-adjacent vertices and ``component`` is a
    connected component of the graph minus link(a) & link(b) that contains
    neither a nor b.
    """

    a: str
    b: str
    component: frozenset

    def to_json_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "component": sorted(self.component)}


def find_sils(g: SimplicialGraph) -> tuple[SilWitness, ...]:
    """All SIL witnesses (a, b, M) with a < b, in canonical order."""
    out = []
    vs = g.vertices
    for i, a in enumerate(vs):
        for b in vs[i + 1:]:
            if g.dist2(a, b) != 2:
                continue
            shared = g.link(a) & g.link(b)
            for comp in g.components(set(vs) - shared):
                if a not in comp and b not in comp:
                    out.append(SilWitness(a, b, comp))
    out.sort(key=lambda w: (w.a, w.b, tuple(sorted(w.component))))
    return tuple(out)
