"""Competition-style operators mapping a digraph to a graph or multigraph.

Four operators: common out-neighbors give the competition (multi)graph,
requiring a common in-neighbor as well gives the double competition
(multi)graph. Loops participate in neighborhoods like any other arc.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .graphs import (
    Digraph,
    GraphFormatError,
    Multigraph,
    _load_count,
    _load_document,
    check_vertex,
)


@dataclass(frozen=True)
class SimpleGraph:
    """Loopless undirected graph; edges normalized to (x, y) with x < y."""

    n: int
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {self.n!r}")
        norm = set()
        for x, y in self.edges:
            check_vertex(x, self.n)
            check_vertex(y, self.n)
            if x == y:
                raise ValueError(f"graphs are loopless; edge {{{x},{y}}} rejected")
            norm.add((x, y) if x < y else (y, x))
        object.__setattr__(self, "edges", frozenset(norm))

    def has_edge(self, x: int, y: int) -> bool:
        return ((x, y) if x < y else (y, x)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def reverse(d: Digraph) -> Digraph:
    """The digraph with every arc flipped."""
    return Digraph(d.n, frozenset((v, u) for u, v in d.arcs))


def _neighborhoods(d: Digraph) -> tuple[list[set[int]], list[set[int]]]:
    # outs[x-1] = N+(x), ins[x-1] = N-(x), built in one arc pass
    outs: list[set[int]] = [set() for _ in range(d.n)]
    ins: list[set[int]] = [set() for _ in range(d.n)]
    for u, v in d.arcs:
        outs[u - 1].add(v)
        ins[v - 1].add(u)
    return outs, ins


def competition_multigraph(d: Digraph) -> Multigraph:
    """Multiplicity of {x, y} is the number of common out-neighbors of x and y."""
    outs, _ = _neighborhoods(d)
    mult = {}
    for x in range(1, d.n + 1):
        for y in range(x + 1, d.n + 1):
            m = len(outs[x - 1] & outs[y - 1])
            if m:
                mult[(x, y)] = m
    return Multigraph(d.n, mult)


def double_competition_multigraph(d: Digraph) -> Multigraph:
    """Multiplicity of {x, y} is |N+(x) ∩ N+(y)| * |N-(x) ∩ N-(y)|."""
    outs, ins = _neighborhoods(d)
    mult = {}
    for x in range(1, d.n + 1):
        for y in range(x + 1, d.n + 1):
            m = len(outs[x - 1] & outs[y - 1]) * len(ins[x - 1] & ins[y - 1])
            if m:
                mult[(x, y)] = m
    return Multigraph(d.n, mult)


def competition_graph(d: Digraph) -> SimpleGraph:
    """Edge {x, y} present iff x and y have a common out-neighbor."""
    outs, _ = _neighborhoods(d)
    edges = {
        (x, y)
        for x in range(1, d.n + 1)
        for y in range(x + 1, d.n + 1)
        if outs[x - 1] & outs[y - 1]
    }
    return SimpleGraph(d.n, frozenset(edges))


def double_competition_graph(d: Digraph) -> SimpleGraph:
    """Edge {x, y} present iff x and y have both a common out- and in-neighbor."""
    outs, ins = _neighborhoods(d)
    edges = {
        (x, y)
        for x in range(1, d.n + 1)
        for y in range(x + 1, d.n + 1)
        if outs[x - 1] & outs[y - 1] and ins[x - 1] & ins[y - 1]
    }
    return SimpleGraph(d.n, frozenset(edges))


# Simple-graph JSON: {"n": <int>, "edges": [[x, y], ...]} with x < y.


def simple_graph_to_json(g: SimpleGraph) -> str:
    doc = {"n": g.n, "edges": [[x, y] for x, y in g.sorted_edges()]}
    return json.dumps(doc, indent=2) + "\n"


def simple_graph_from_json(text: str) -> SimpleGraph:
    doc = _load_document(text, ("n", "edges"))
    n = _load_count(doc)
    if not isinstance(doc["edges"], list):
        raise GraphFormatError('"edges" must be an array')
    edges: set[tuple[int, int]] = set()
    for entry in doc["edges"]:
        if not isinstance(entry, list) or len(entry) != 2:
            raise GraphFormatError(f"edge {entry!r} must be a pair [x, y]")
        x, y = entry
        try:
            check_vertex(x, n)
            check_vertex(y, n)
        except ValueError as exc:
            raise GraphFormatError(str(exc)) from exc
        if x >= y:
            raise GraphFormatError(f"edge [{x}, {y}] must have x < y")
        if (x, y) in edges:
            raise GraphFormatError(f"duplicate edge [{x}, {y}]")
        edges.add((x, y))
    return SimpleGraph(n, frozenset(edges))
