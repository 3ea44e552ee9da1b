"""Exhaustive desk-scale recognition of double competition multigraphs.

Recognition enumerates digraphs rather than certificates: the digraph
space on n vertices is 2^(n*n), while the certificate space is
astronomically larger. Witnesses are always the first hit in a fixed
deterministic enumeration order. Catalogs of (multigraph, realizer count)
are memoized for n <= 4 so repeated recognition queries are lookups.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Callable, Iterator

from .certificate import (
    CliqueFamily,
    DigraphClass,
    canonical_family,
    verify_certificate,
)
from .competition import double_competition_multigraph
from .graphs import Digraph, Multigraph, acyclic_ordering

HARD_CAP = 5
DEFAULT_BOUND = 4
ENV_BOUND_VAR = "DCMKIT_MAX_N"

# streaming searches report progress this often
PROGRESS_STRIDE = 1 << 20

ProgressHook = Callable[[int, int | None], None]


def bound_ceiling() -> int:
    """Largest vertex count recognition may be asked to sweep.

    DCMKIT_MAX_N lowers or raises the ceiling, but never above HARD_CAP.
    """
    raw = os.environ.get(ENV_BOUND_VAR)
    if raw is None:
        return HARD_CAP
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_BOUND_VAR} must be an integer, got {raw!r}") from None
    return max(1, min(value, HARD_CAP))


@dataclass(frozen=True)
class RecognitionResult:
    """Outcome of one recognition query.

    recognized is True exactly when both witnesses are present; the witness
    digraph then lies in the requested class and realizes the input.
    """

    recognized: bool
    witness_digraph: Digraph | None
    witness_certificate: CliqueFamily | None
    digraphs_examined: int


@dataclass(frozen=True)
class CatalogRow:
    """One realized multigraph (canonical sorted edge triples) and its realizer count."""

    edges: tuple[tuple[int, int, int], ...]
    count: int


class _Entry:
    __slots__ = ("first_index", "count", "witness")

    def __init__(self, first_index: int, witness: Digraph):
        self.first_index = first_index
        self.count = 1
        self.witness = witness


def class_member(d: Digraph, digraph_class: DigraphClass | str) -> bool:
    digraph_class = DigraphClass(digraph_class)
    if digraph_class is DigraphClass.LOOPLESS:
        return d.is_loopless()
    if digraph_class is DigraphClass.REFLEXIVE:
        return d.is_reflexive()
    if digraph_class is DigraphClass.ACYCLIC:
        return acyclic_ordering(d) is not None
    return True


def class_size(n: int, digraph_class: DigraphClass | str) -> int | None:
    """Closed-form class size, or None when only enumeration can tell (acyclic)."""
    digraph_class = DigraphClass(digraph_class)
    if digraph_class is DigraphClass.ARBITRARY:
        return 1 << (n * n)
    if digraph_class in (DigraphClass.LOOPLESS, DigraphClass.REFLEXIVE):
        return 1 << (n * n - n)
    return None


def enumerate_digraphs(n: int, digraph_class: DigraphClass | str) -> Iterator[Digraph]:
    """Yield every digraph on [n] in the class exactly once, in a fixed order.

    Arc-subset classes walk an ascending bitmask over lexicographically
    sorted arc slots, so the arc-minimal digraph comes first. The acyclic
    class relabels upper-triangular position subsets under every
    permutation and deduplicates by arc set.
    """
    digraph_class = DigraphClass(digraph_class)
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"vertex count must be a positive integer, got {n!r}")
    if n > HARD_CAP:
        raise ValueError(
            f"refusing to enumerate digraphs on {n} vertices; the cap is {HARD_CAP}"
        )
    if digraph_class is DigraphClass.ACYCLIC:
        yield from _enumerate_acyclic(n)
        return
    loops_fixed = digraph_class is DigraphClass.REFLEXIVE
    if digraph_class is DigraphClass.ARBITRARY:
        slots = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1)]
    else:
        slots = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1) if u != v]
    base = frozenset((v, v) for v in range(1, n + 1)) if loops_fixed else frozenset()
    for bits in range(1 << len(slots)):
        arcs = {slot for idx, slot in enumerate(slots) if bits >> idx & 1}
        yield Digraph(n, base | frozenset(arcs))


def _enumerate_acyclic(n: int) -> Iterator[Digraph]:
    upper = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    seen: set[frozenset[tuple[int, int]]] = set()
    orders = list(permutations(range(1, n + 1)))
    for bits in range(1 << len(upper)):
        chosen = [slot for idx, slot in enumerate(upper) if bits >> idx & 1]
        for order in orders:
            arcs = frozenset((order[a - 1], order[b - 1]) for a, b in chosen)
            if arcs not in seen:
                seen.add(arcs)
                yield Digraph(n, arcs)


def _build_index(
    n: int, digraph_class: DigraphClass, progress: ProgressHook | None = None
) -> tuple[dict[tuple[tuple[int, int, int], ...], _Entry], int]:
    total_hint = class_size(n, digraph_class)
    rows: dict[tuple[tuple[int, int, int], ...], _Entry] = {}
    examined = 0
    for d in enumerate_digraphs(n, digraph_class):
        examined += 1
        key = double_competition_multigraph(d).edges()
        entry = rows.get(key)
        if entry is None:
            rows[key] = _Entry(examined, d)
        else:
            entry.count += 1
        if progress is not None and examined % PROGRESS_STRIDE == 0:
            progress(examined, total_hint)
    return rows, examined


@lru_cache(maxsize=None)
def _memoized_index(
    n: int, digraph_class: DigraphClass
) -> tuple[dict[tuple[tuple[int, int, int], ...], _Entry], int]:
    return _build_index(n, digraph_class)


def _check_query_size(n: int, bound: int | None) -> int:
    ceiling = bound_ceiling()
    if bound is None:
        effective = min(DEFAULT_BOUND, ceiling)
    else:
        if not isinstance(bound, int) or isinstance(bound, bool) or bound < 1:
            raise ValueError(f"bound must be a positive integer, got {bound!r}")
        if bound > ceiling:
            raise ValueError(f"bound {bound} exceeds the ceiling {ceiling}")
        effective = bound
    if n > effective:
        raise ValueError(
            f"{n} vertices exceeds the recognition bound {effective}; "
            f"raise the bound (max {ceiling}) to proceed"
        )
    return effective


def _witness_ordering(d: Digraph, digraph_class: DigraphClass) -> tuple[int, ...]:
    if digraph_class is DigraphClass.ACYCLIC:
        ordering = acyclic_ordering(d)
        if ordering is None:
            raise RuntimeError("acyclic witness has no acyclic ordering")
        return ordering
    return tuple(range(1, d.n + 1))


def recognize(
    m: Multigraph,
    digraph_class: DigraphClass | str,
    bound: int | None = None,
    progress: ProgressHook | None = None,
) -> RecognitionResult:
    """Decide whether m is the double competition multigraph of a class member.

    The witness digraph is the first realizer in enumeration order; its
    canonical certificate (identity ordering, or an acyclic ordering for
    the acyclic class) is re-verified before being returned.
    """
    digraph_class = DigraphClass(digraph_class)
    _check_query_size(m.n, bound)
    if m.n <= DEFAULT_BOUND:
        rows, total = _memoized_index(m.n, digraph_class)
        entry = rows.get(m.edges())
        if entry is None:
            return RecognitionResult(False, None, None, total)
        witness, examined = entry.witness, entry.first_index
    else:
        witness, examined = None, 0
        total_hint = class_size(m.n, digraph_class)
        for d in enumerate_digraphs(m.n, digraph_class):
            examined += 1
            if double_competition_multigraph(d) == m:
                witness = d
                break
            if progress is not None and examined % PROGRESS_STRIDE == 0:
                progress(examined, total_hint)
        if witness is None:
            return RecognitionResult(False, None, None, examined)
    family = canonical_family(witness, _witness_ordering(witness, digraph_class))
    report = verify_certificate(m, family, digraph_class)
    if not report.accepted or not class_member(witness, digraph_class):
        raise RuntimeError("recognition produced a witness its verifier rejects")
    return RecognitionResult(True, witness, family, examined)


def catalog(
    n: int,
    digraph_class: DigraphClass | str,
    bound: int | None = None,
    progress: ProgressHook | None = None,
) -> list[CatalogRow]:
    """Every multigraph realized by a class member on [n], with realizer counts.

    Rows are keyed and sorted by canonical edge list; counts over all rows
    sum to the class size.
    """
    digraph_class = DigraphClass(digraph_class)
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"vertex count must be a positive integer, got {n!r}")
    _check_query_size(n, bound)
    if n <= DEFAULT_BOUND:
        rows, _ = _memoized_index(n, digraph_class)
    else:
        rows, _ = _build_index(n, digraph_class, progress)
    return [CatalogRow(key, rows[key].count) for key in sorted(rows)]
