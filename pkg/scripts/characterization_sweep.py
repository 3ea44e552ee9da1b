#!/usr/bin/env python3
"""Exhaustively check the four class characterizations at desk scale.

For every digraph in each class on n vertices: extract the canonical
certificate, confirm it is an edge clique partition of the DCM, and check
the class conditions. Then stress the converse directions with seeded
certificate mutations that keep the class condition and must therefore
reconstruct into the class.
"""

import argparse
import random
import sys
import time

from dcmkit import (
    CliqueFamily,
    DigraphClass,
    acyclic_ordering,
    canonical_family,
    check_condition_I,
    check_condition_II,
    check_condition_III,
    check_condition_IV,
    double_competition_multigraph,
    enumerate_digraphs,
    is_acyclic_ordering,
    is_edge_clique_partition,
    reconstruct_digraph,
)

CLASS_CONDITIONS = {
    DigraphClass.ARBITRARY: None,
    DigraphClass.LOOPLESS: check_condition_II,
    DigraphClass.REFLEXIVE: check_condition_III,
    DigraphClass.ACYCLIC: check_condition_IV,
}


def class_holds(digraph_class, rebuilt, ordering):
    if digraph_class is DigraphClass.LOOPLESS:
        return rebuilt.is_loopless()
    if digraph_class is DigraphClass.REFLEXIVE:
        return rebuilt.is_reflexive()
    if digraph_class is DigraphClass.ACYCLIC:
        return is_acyclic_ordering(rebuilt, ordering)
    return True


def mutate(rng, base):
    entries = {ij: set(members) for ij, members in base.cliques.items()}
    for _ in range(rng.randint(1, 3)):
        ij = (rng.randint(1, base.n), rng.randint(1, base.n))
        k = rng.randint(1, base.n)
        members = entries.setdefault(ij, set())
        if k in members and rng.random() < 0.5:
            members.discard(k)
        else:
            members.add(k)
    return CliqueFamily(base.n, base.ordering, {ij: frozenset(s) for ij, s in entries.items() if s})


def sweep_class(digraph_class, n, mutants, seed):
    started = time.perf_counter()
    condition = CLASS_CONDITIONS[digraph_class]
    families = []
    forward_failures = 0
    for d in enumerate_digraphs(n, digraph_class):
        ordering = acyclic_ordering(d) if digraph_class is DigraphClass.ACYCLIC else None
        family = canonical_family(d, ordering)
        ok, _ = is_edge_clique_partition(double_competition_multigraph(d), family)
        ok_I, _ = check_condition_I(family)
        ok_class = True
        if condition is not None:
            ok_class, _ = condition(family)
        if not (ok and ok_I and ok_class):
            forward_failures += 1
        families.append(family)

    reverse_failures = 0
    accepted_mutants = 0
    if condition is not None and mutants > 0:
        rng = random.Random(seed)
        attempts = 0
        while accepted_mutants < mutants and attempts < mutants * 400:
            attempts += 1
            family = mutate(rng, rng.choice(families))
            ok, _ = condition(family)
            if not ok:
                continue
            accepted_mutants += 1
            if not class_holds(digraph_class, reconstruct_digraph(family), family.ordering):
                reverse_failures += 1

    elapsed = time.perf_counter() - started
    return {
        "class": digraph_class.value,
        "digraphs": len(families),
        "forward_failures": forward_failures,
        "mutants": accepted_mutants,
        "reverse_failures": reverse_failures,
        "seconds": elapsed,
    }


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-n", type=int, default=3, help="vertex count to sweep (default 3)")
    parser.add_argument("--mutants", type=int, default=500,
                        help="accepted certificate mutants per class (default 500)")
    parser.add_argument("--seed", type=int, default=7, help="mutation RNG seed")
    args = parser.parse_args(argv)

    print(f"{'class':<10} {'digraphs':>9} {'fwd fail':>9} {'mutants':>8} {'rev fail':>9} {'secs':>7}")
    worst = 0
    for digraph_class in DigraphClass:
        row = sweep_class(digraph_class, args.n, args.mutants, args.seed)
        worst = max(worst, row["forward_failures"], row["reverse_failures"])
        print(
            f"{row['class']:<10} {row['digraphs']:>9} {row['forward_failures']:>9} "
            f"{row['mutants']:>8} {row['reverse_failures']:>9} {row['seconds']:>7.2f}"
        )
    if worst:
        print("FAILURES FOUND", file=sys.stderr)
        return 1
    print("all characterizations hold")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
