"""Labeled digraphs and loopless multigraphs on the vertex set {1, ..., n}.

Vertices are plain integers 1..n throughout, so vertex orderings elsewhere
in the package are permutations of [n]. All types are immutable values.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

VertexSet = frozenset[int]


class GraphFormatError(ValueError):
    """A JSON graph document does not match its documented schema."""


def check_vertex(x: int, n: int) -> int:
    if not isinstance(x, int) or isinstance(x, bool) or not 1 <= x <= n:
        raise ValueError(f"vertex {x!r} out of range 1..{n}")
    return x


@dataclass(frozen=True)
class Digraph:
    """Directed graph with arc set on vertices 1..n. Loops are allowed."""

    n: int
    arcs: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {self.n!r}")
        arcs = frozenset((u, v) for u, v in self.arcs)
        for u, v in arcs:
            check_vertex(u, self.n)
            check_vertex(v, self.n)
        object.__setattr__(self, "arcs", arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def out_neighborhood(self, x: int) -> VertexSet:
        """Every v with an arc x -> v; contains x itself when x has a loop."""
        check_vertex(x, self.n)
        return frozenset(v for u, v in self.arcs if u == x)

    def in_neighborhood(self, x: int) -> VertexSet:
        """Every v with an arc v -> x."""
        check_vertex(x, self.n)
        return frozenset(u for u, v in self.arcs if v == x)

    def is_loopless(self) -> bool:
        return all(u != v for u, v in self.arcs)

    def is_reflexive(self) -> bool:
        return all((v, v) in self.arcs for v in range(1, self.n + 1))

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)


@dataclass(frozen=True)
class Multigraph:
    """Loopless multigraph given by a multiplicity on unordered vertex pairs.

    Pairs with multiplicity zero are not stored; ``mult`` keys are
    normalized to (x, y) with x < y.
    """

    n: int
    mult: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {self.n!r}")
        norm: dict[tuple[int, int], int] = {}
        for (x, y), m in dict(self.mult).items():
            check_vertex(x, self.n)
            check_vertex(y, self.n)
            if x == y:
                raise ValueError(f"multigraphs are loopless; pair {{{x},{y}}} rejected")
            if not isinstance(m, int) or isinstance(m, bool) or m < 0:
                raise ValueError(f"multiplicity of {{{x},{y}}} must be a nonnegative integer, got {m!r}")
            if m == 0:
                continue
            key = (x, y) if x < y else (y, x)
            if key in norm and norm[key] != m:
                raise ValueError(f"conflicting multiplicities for pair {{{key[0]},{key[1]}}}")
            norm[key] = m
        object.__setattr__(self, "mult", norm)

    def __hash__(self) -> int:
        return hash((self.n, self.edges()))

    def multiplicity(self, x: int, y: int) -> int:
        """Number of parallel edges between distinct vertices x and y."""
        check_vertex(x, self.n)
        check_vertex(y, self.n)
        if x == y:
            raise ValueError(f"multigraphs are loopless; no pair {{{x},{x}}}")
        return self.mult.get((x, y) if x < y else (y, x), 0)

    def is_clique(self, members: Iterable[int]) -> bool:
        """True when all members are pairwise adjacent; empty and singleton sets count."""
        distinct = sorted({check_vertex(v, self.n) for v in members})
        return all(self.multiplicity(x, y) >= 1 for x, y in combinations(distinct, 2))

    def edge_count(self) -> int:
        return sum(self.mult.values())

    def edges(self) -> tuple[tuple[int, int, int], ...]:
        """Sorted (x, y, multiplicity) triples with x < y; the canonical form."""
        return tuple(sorted((x, y, m) for (x, y), m in self.mult.items()))


def acyclic_ordering(d: Digraph) -> tuple[int, ...] | None:
    """Smallest-label-first topological order of d, or None when d has a directed cycle.

    A loop puts its vertex on a directed cycle, so any looped digraph
    yields None.
    """
    successors: dict[int, list[int]] = {v: [] for v in range(1, d.n + 1)}
    indegree = {v: 0 for v in range(1, d.n + 1)}
    for u, v in d.arcs:
        successors[u].append(v)
        indegree[v] += 1
    ready = [v for v in range(1, d.n + 1) if indegree[v] == 0]
    heapq.heapify(ready)
    order: list[int] = []
    while ready:
        u = heapq.heappop(ready)
        order.append(u)
        for v in successors[u]:
            indegree[v] -= 1
            if indegree[v] == 0:
                heapq.heappush(ready, v)
    if len(order) < d.n:
        return None
    return tuple(order)


def is_acyclic(d: Digraph) -> bool:
    return acyclic_ordering(d) is not None


# --- JSON interchange ---------------------------------------------------
#
# Digraph:     {"n": <int>, "arcs": [[u, v], ...]}         (1-based)
# Multigraph:  {"n": <int>, "edges": [[x, y, m], ...]}     (x < y, m >= 1)
#
# Serialization is canonical: sorted arc/edge lists, fixed key order.


def _load_document(text: str, expected_keys: tuple[str, ...]) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise GraphFormatError("top-level value must be an object")
    unknown = set(doc) - set(expected_keys)
    if unknown:
        raise GraphFormatError(f"unexpected key(s): {', '.join(sorted(unknown))}")
    for key in expected_keys:
        if key not in doc:
            raise GraphFormatError(f"missing key: {key}")
    return doc


def _load_count(doc: dict) -> int:
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise GraphFormatError(f'"n" must be a positive integer, got {n!r}')
    return n


def digraph_to_json(d: Digraph) -> str:
    doc = {"n": d.n, "arcs": [[u, v] for u, v in d.sorted_arcs()]}
    return json.dumps(doc, indent=2) + "\n"


def digraph_from_json(text: str) -> Digraph:
    doc = _load_document(text, ("n", "arcs"))
    n = _load_count(doc)
    if not isinstance(doc["arcs"], list):
        raise GraphFormatError('"arcs" must be an array')
    arcs: set[tuple[int, int]] = set()
    for entry in doc["arcs"]:
        if not isinstance(entry, list) or len(entry) != 2:
            raise GraphFormatError(f"arc {entry!r} must be a pair [u, v]")
        u, v = entry
        try:
            check_vertex(u, n)
            check_vertex(v, n)
        except ValueError as exc:
            raise GraphFormatError(str(exc)) from exc
        if (u, v) in arcs:
            raise GraphFormatError(f"duplicate arc [{u}, {v}]")
        arcs.add((u, v))
    return Digraph(n, frozenset(arcs))


def multigraph_to_json(m: Multigraph) -> str:
    doc = {"n": m.n, "edges": [[x, y, k] for x, y, k in m.edges()]}
    return json.dumps(doc, indent=2) + "\n"


def multigraph_from_json(text: str) -> Multigraph:
    doc = _load_document(text, ("n", "edges"))
    n = _load_count(doc)
    if not isinstance(doc["edges"], list):
        raise GraphFormatError('"edges" must be an array')
    mult: dict[tuple[int, int], int] = {}
    for entry in doc["edges"]:
        if not isinstance(entry, list) or len(entry) != 3:
            raise GraphFormatError(f"edge {entry!r} must be a triple [x, y, m]")
        x, y, m = entry
        try:
            check_vertex(x, n)
            check_vertex(y, n)
        except ValueError as exc:
            raise GraphFormatError(str(exc)) from exc
        if x >= y:
            raise GraphFormatError(f"edge [{x}, {y}, {m}] must have x < y")
        if not isinstance(m, int) or isinstance(m, bool) or m < 1:
            raise GraphFormatError(f"multiplicity {m!r} of [{x}, {y}] must be an integer >= 1")
        if (x, y) in mult:
            raise GraphFormatError(f"duplicate edge [{x}, {y}]")
        mult[(x, y)] = m
    return Multigraph(n, mult)
