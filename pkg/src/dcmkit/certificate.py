"""Double-indexed edge-clique-partition certificates.

A certificate fixes a vertex ordering (v_1, ..., v_n) and an n-by-n array
of cliques S_ij, indexed by ordered position pairs and holding vertex
labels. S_ij collects the midpoints of directed two-step walks from v_i
to v_j, so a certificate both arises from a digraph (canonical_family)
and determines one (reconstruct_digraph). Conditions (I) to (IV) are the
certificate-side tests characterizing which digraph classes can realize
a given multigraph:

  (I)   wherever |A_i ∩ B_j| >= 2, the intersection is exactly S_ij;
  (II)  no S_ij contains v_i or v_j          (loopless digraphs);
  (III) every v_i appears in row or column i (reflexive digraphs);
  (IV)  v_k in S_ij forces i < k < j         (acyclic digraphs),

with A_i and B_j the derived out/in covers computed by derived_sets.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .graphs import (
    Digraph,
    GraphFormatError,
    Multigraph,
    VertexSet,
    _load_document,
    check_vertex,
)

# Violations reported per condition tag; iteration is in lexicographic
# index order, so reports are deterministic.
MAX_WITNESSES = 16


class DigraphClass(str, Enum):
    """Digraph classes with their own characterization conditions."""

    ARBITRARY = "arbitrary"
    LOOPLESS = "loopless"
    REFLEXIVE = "reflexive"
    ACYCLIC = "acyclic"


def _check_ordering(ordering: Sequence[int], n: int) -> tuple[int, ...]:
    ordering = tuple(ordering)
    if sorted(ordering) != list(range(1, n + 1)):
        raise ValueError(f"ordering {ordering!r} is not a permutation of 1..{n}")
    return ordering


@dataclass(frozen=True)
class CliqueFamily:
    """Vertex ordering plus the sets S_ij, stored sparsely (absent entry = empty).

    Keys of ``cliques`` are ordered position pairs (i, j) into ``ordering``;
    members are vertex labels. Semantically the family always covers all
    n*n index pairs.
    """

    n: int
    ordering: tuple[int, ...]
    cliques: dict[tuple[int, int], VertexSet] = field(default_factory=dict)
    _positions: dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "ordering", _check_ordering(self.ordering, self.n))
        norm: dict[tuple[int, int], VertexSet] = {}
        for (i, j), members in dict(self.cliques).items():
            check_vertex(i, self.n)
            check_vertex(j, self.n)
            members = frozenset(check_vertex(w, self.n) for w in members)
            if members:
                norm[(i, j)] = members
        object.__setattr__(self, "cliques", norm)
        object.__setattr__(
            self, "_positions", {v: p for p, v in enumerate(self.ordering, start=1)}
        )

    def vertex_at(self, pos: int) -> int:
        """The vertex v_pos under this family's ordering."""
        check_vertex(pos, self.n)
        return self.ordering[pos - 1]

    def position_of(self, v: int) -> int:
        check_vertex(v, self.n)
        return self._positions[v]

    def clique(self, i: int, j: int) -> VertexSet:
        """S_ij, the empty set when no entry is stored."""
        check_vertex(i, self.n)
        check_vertex(j, self.n)
        return self.cliques.get((i, j), frozenset())

    def entries(self) -> list[tuple[tuple[int, int], VertexSet]]:
        """Nonempty entries in lexicographic index order."""
        return sorted(self.cliques.items())


@dataclass(frozen=True)
class DerivedSets:
    """Position-indexed derived covers of a family; entry p-1 belongs to position p.

    Row unions S_row[i] = ∪_p S_ip and column unions S_col[j] = ∪_q S_qj
    collect vertices reachable through index i or j. T_plus[i] holds every
    v_b with v_i a member of some S_ab, T_minus[j] every v_a with v_j a
    member of some S_ab. A = S_row ∪ T_plus and B = S_col ∪ T_minus hold
    by construction.
    """

    A: tuple[VertexSet, ...]
    B: tuple[VertexSet, ...]
    S_row: tuple[VertexSet, ...]
    S_col: tuple[VertexSet, ...]
    T_plus: tuple[VertexSet, ...]
    T_minus: tuple[VertexSet, ...]


@dataclass(frozen=True)
class Witness:
    """One recorded violation: condition tag, offending indices, and context."""

    tag: str
    index: tuple[int, ...]
    sets: tuple[VertexSet, ...] = ()
    note: str = ""

    def describe(self) -> str:
        parts = [f"({self.tag}) at {self.index}"]
        if self.note:
            parts.append(self.note)
        if self.sets:
            rendered = ", ".join("{" + ",".join(map(str, sorted(s))) + "}" for s in self.sets)
            parts.append(f"sets: {rendered}")
        return ": ".join(parts)


@dataclass(frozen=True)
class VerificationReport:
    """Per-condition verdicts for one (multigraph, certificate, class) triple.

    Condition flags are None when the class does not require them;
    a flag is False exactly when a witness with its tag was recorded.
    """

    digraph_class: DigraphClass
    partition_ok: bool
    cliques_ok: bool
    cond_I: bool
    cond_II: bool | None
    cond_III: bool | None
    cond_IV: bool | None
    witnesses: tuple[Witness, ...]

    @property
    def accepted(self) -> bool:
        flags = (
            self.partition_ok,
            self.cliques_ok,
            self.cond_I,
            self.cond_II,
            self.cond_III,
            self.cond_IV,
        )
        return all(flag for flag in flags if flag is not None)

    def as_dict(self) -> dict:
        return {
            "class": self.digraph_class.value,
            "partition_ok": self.partition_ok,
            "cliques_ok": self.cliques_ok,
            "cond_I": self.cond_I,
            "cond_II": self.cond_II,
            "cond_III": self.cond_III,
            "cond_IV": self.cond_IV,
            "accepted": self.accepted,
            "witnesses": [
                {
                    "tag": w.tag,
                    "index": list(w.index),
                    "sets": [sorted(s) for s in w.sets],
                    "note": w.note,
                }
                for w in self.witnesses
            ],
        }


def canonical_family(d: Digraph, ordering: Sequence[int] | None = None) -> CliqueFamily:
    """Extract the two-step-walk family of d under the given ordering.

    S_ij = {v_k : arcs v_i -> v_k and v_k -> v_j both present}, for every
    ordered position pair. Defaults to the identity ordering.
    """
    ordering = _check_ordering(ordering if ordering is not None else range(1, d.n + 1), d.n)
    cliques: dict[tuple[int, int], VertexSet] = {}
    outs = {v: d.out_neighborhood(v) for v in range(1, d.n + 1)}
    ins = {v: d.in_neighborhood(v) for v in range(1, d.n + 1)}
    for i in range(1, d.n + 1):
        for j in range(1, d.n + 1):
            members = outs[ordering[i - 1]] & ins[ordering[j - 1]]
            if members:
                cliques[(i, j)] = members
    return CliqueFamily(d.n, ordering, cliques)


def derived_sets(family: CliqueFamily) -> DerivedSets:
    """Compute S_row, S_col, T_plus, T_minus and their unions A and B."""
    n = family.n
    row = [set() for _ in range(n)]
    col = [set() for _ in range(n)]
    t_plus = [set() for _ in range(n)]
    t_minus = [set() for _ in range(n)]
    for (a, b), members in family.cliques.items():
        row[a - 1] |= members
        col[b - 1] |= members
        for w in members:
            k = family.position_of(w)
            t_plus[k - 1].add(family.vertex_at(b))
            t_minus[k - 1].add(family.vertex_at(a))
    return DerivedSets(
        A=tuple(frozenset(row[p] | t_plus[p]) for p in range(n)),
        B=tuple(frozenset(col[p] | t_minus[p]) for p in range(n)),
        S_row=tuple(frozenset(s) for s in row),
        S_col=tuple(frozenset(s) for s in col),
        T_plus=tuple(frozenset(s) for s in t_plus),
        T_minus=tuple(frozenset(s) for s in t_minus),
    )


def _pair_coverage(family: CliqueFamily) -> Counter:
    # counted with multiplicity over all n*n index pairs; entries of size
    # <= 1 cover no pair, so the sparse store is enough
    counts: Counter = Counter()
    for _, members in family.cliques.items():
        for x, y in combinations(sorted(members), 2):
            counts[(x, y)] += 1
    return counts


def _clique_witnesses(m: Multigraph, family: CliqueFamily) -> list[Witness]:
    witnesses: list[Witness] = []
    for (i, j), members in family.entries():
        for x, y in combinations(sorted(members), 2):
            if m.multiplicity(x, y) == 0:
                witnesses.append(
                    Witness(
                        "clique",
                        (i, j),
                        (members,),
                        f"members {x} and {y} are not adjacent",
                    )
                )
                if len(witnesses) >= MAX_WITNESSES:
                    return witnesses
                break
    return witnesses


def _coverage_witnesses(m: Multigraph, family: CliqueFamily) -> list[Witness]:
    counts = _pair_coverage(family)
    witnesses: list[Witness] = []
    for x in range(1, m.n + 1):
        for y in range(x + 1, m.n + 1):
            expected = m.multiplicity(x, y)
            got = counts.get((x, y), 0)
            if got != expected:
                witnesses.append(
                    Witness(
                        "partition",
                        (x, y),
                        (),
                        f"pair covered {got} times, multiplicity {expected}",
                    )
                )
                if len(witnesses) >= MAX_WITNESSES:
                    return witnesses
    return witnesses


def is_edge_clique_partition(m: Multigraph, family: CliqueFamily) -> tuple[bool, list[Witness]]:
    """Whether every S_ij is a clique of m and every pair {x,y} lies in
    exactly m({x,y}) of the n*n entries, counted with multiplicity."""
    if family.n != m.n:
        raise ValueError(f"size mismatch: multigraph n={m.n}, certificate n={family.n}")
    witnesses = _clique_witnesses(m, family) + _coverage_witnesses(m, family)
    return not witnesses, witnesses


def check_condition_I(family: CliqueFamily) -> tuple[bool, list[Witness]]:
    """Every index pair with |A_i ∩ B_j| >= 2 must have A_i ∩ B_j = S_ij."""
    ds = derived_sets(family)
    witnesses: list[Witness] = []
    for i in range(1, family.n + 1):
        for j in range(1, family.n + 1):
            inter = ds.A[i - 1] & ds.B[j - 1]
            if len(inter) >= 2 and inter != family.clique(i, j):
                witnesses.append(
                    Witness(
                        "I",
                        (i, j),
                        (frozenset(inter), family.clique(i, j)),
                        f"A_{i} ∩ B_{j} differs from S_{i}{j}",
                    )
                )
                if len(witnesses) >= MAX_WITNESSES:
                    return False, witnesses
    return not witnesses, witnesses


def check_condition_II(family: CliqueFamily) -> tuple[bool, list[Witness]]:
    """No S_ij may contain v_i or v_j."""
    witnesses: list[Witness] = []
    for (i, j), members in family.entries():
        for pos in ((i,) if i == j else (i, j)):
            v = family.vertex_at(pos)
            if v in members:
                witnesses.append(
                    Witness("II", (i, j), (members,), f"v_{pos} = {v} appears in S_{i}{j}")
                )
                if len(witnesses) >= MAX_WITNESSES:
                    return False, witnesses
    return not witnesses, witnesses


def check_condition_III(family: CliqueFamily) -> tuple[bool, list[Witness]]:
    """Every v_i must appear in its own row union or column union."""
    ds = derived_sets(family)
    witnesses: list[Witness] = []
    for i in range(1, family.n + 1):
        v = family.vertex_at(i)
        union = ds.S_row[i - 1] | ds.S_col[i - 1]
        if v not in union:
            witnesses.append(
                Witness("III", (i,), (union,), f"v_{i} = {v} missing from S_row ∪ S_col at {i}")
            )
            if len(witnesses) >= MAX_WITNESSES:
                return False, witnesses
    return not witnesses, witnesses


def check_condition_IV(family: CliqueFamily) -> tuple[bool, list[Witness]]:
    """Membership v_k in S_ij must satisfy i < k < j in ordering positions."""
    witnesses: list[Witness] = []
    for (i, j), members in family.entries():
        for k in sorted(family.position_of(w) for w in members):
            if not i < k < j:
                witnesses.append(
                    Witness(
                        "IV",
                        (i, j, k),
                        (members,),
                        f"position {k} of member v_{k} not strictly between {i} and {j}",
                    )
                )
                if len(witnesses) >= MAX_WITNESSES:
                    return False, witnesses
    return not witnesses, witnesses


def reconstruct_digraph(family: CliqueFamily) -> Digraph:
    """Build the digraph whose arcs realize every stored membership.

    Each v_k in S_ij contributes the two arcs v_i -> v_k and v_k -> v_j;
    duplicates collapse into the arc set.
    """
    arcs: set[tuple[int, int]] = set()
    for (i, j), members in family.cliques.items():
        vi = family.vertex_at(i)
        vj = family.vertex_at(j)
        for w in members:
            arcs.add((vi, w))
            arcs.add((w, vj))
    return Digraph(family.n, frozenset(arcs))


def verify_certificate(
    m: Multigraph, family: CliqueFamily, digraph_class: DigraphClass | str
) -> VerificationReport:
    """Check partition validity, condition (I), and the class-specific condition.

    Condition (II) is evaluated only for the loopless class, (III) only for
    reflexive, (IV) only for acyclic; unevaluated flags are None. The report
    is accepted when every evaluated flag is True.
    """
    digraph_class = DigraphClass(digraph_class)
    if family.n != m.n:
        raise ValueError(f"size mismatch: multigraph n={m.n}, certificate n={family.n}")
    clique_w = _clique_witnesses(m, family)
    coverage_w = _coverage_witnesses(m, family)
    ok_I, w_I = check_condition_I(family)
    witnesses = clique_w + coverage_w + w_I
    cond_II = cond_III = cond_IV = None
    if digraph_class is DigraphClass.LOOPLESS:
        cond_II, w = check_condition_II(family)
        witnesses += w
    elif digraph_class is DigraphClass.REFLEXIVE:
        cond_III, w = check_condition_III(family)
        witnesses += w
    elif digraph_class is DigraphClass.ACYCLIC:
        cond_IV, w = check_condition_IV(family)
        witnesses += w
    return VerificationReport(
        digraph_class=digraph_class,
        partition_ok=not coverage_w,
        cliques_ok=not clique_w,
        cond_I=ok_I,
        cond_II=cond_II,
        cond_III=cond_III,
        cond_IV=cond_IV,
        witnesses=tuple(witnesses),
    )


def is_acyclic_ordering(d: Digraph, ordering: Sequence[int]) -> bool:
    """True when every arc of d goes to a strictly later position; loops fail."""
    ordering = _check_ordering(ordering, d.n)
    position = {v: p for p, v in enumerate(ordering, start=1)}
    return all(position[u] < position[v] for u, v in d.arcs)


# Certificate JSON:
#   {"n": <int>, "ordering": [v_1, ..., v_n],
#    "cliques": [{"i": <int>, "j": <int>, "members": [<int>, ...]}, ...]}
# Omitted (i, j) entries mean the empty set; duplicate (i, j) keys are
# rejected. Serialization sorts entries by (i, j) and members ascending.


def family_to_json(family: CliqueFamily) -> str:
    doc = {
        "n": family.n,
        "ordering": list(family.ordering),
        "cliques": [
            {"i": i, "j": j, "members": sorted(members)}
            for (i, j), members in family.entries()
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def family_from_json(text: str) -> CliqueFamily:
    doc = _load_document(text, ("n", "ordering", "cliques"))
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise GraphFormatError(f'"n" must be a positive integer, got {n!r}')
    if not isinstance(doc["ordering"], list):
        raise GraphFormatError('"ordering" must be an array')
    try:
        ordering = _check_ordering(doc["ordering"], n)
    except (ValueError, TypeError) as exc:
        raise GraphFormatError(str(exc)) from exc
    if not isinstance(doc["cliques"], list):
        raise GraphFormatError('"cliques" must be an array')
    cliques: dict[tuple[int, int], VertexSet] = {}
    for entry in doc["cliques"]:
        if not isinstance(entry, dict) or set(entry) != {"i", "j", "members"}:
            raise GraphFormatError(f'clique entry {entry!r} must have keys "i", "j", "members"')
        i, j, raw = entry["i"], entry["j"], entry["members"]
        try:
            check_vertex(i, n)
            check_vertex(j, n)
        except ValueError as exc:
            raise GraphFormatError(str(exc)) from exc
        if (i, j) in cliques:
            raise GraphFormatError(f"duplicate clique entry ({i}, {j})")
        if not isinstance(raw, list):
            raise GraphFormatError(f'"members" of ({i}, {j}) must be an array')
        members: set[int] = set()
        for w in raw:
            try:
                check_vertex(w, n)
            except ValueError as exc:
                raise GraphFormatError(str(exc)) from exc
            if w in members:
                raise GraphFormatError(f"duplicate member {w} in clique ({i}, {j})")
            members.add(w)
        cliques[(i, j)] = frozenset(members)
    return CliqueFamily(n, ordering, cliques)
