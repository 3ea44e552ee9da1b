#!/usr/bin/env python3
"""Summarize which multigraphs arise as double competition multigraphs.

Builds the full catalog for one (n, class) pair and reports the realizer
count distribution plus the most-realized nonempty multigraphs.
"""

import argparse
import json
from collections import Counter

from dcmkit import DigraphClass, catalog


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("n", type=int, help="vertex count")
    parser.add_argument("--class", dest="digraph_class", default="arbitrary",
                        choices=[c.value for c in DigraphClass])
    parser.add_argument("--bound", type=int, default=None, help="raise the vertex bound (max 5)")
    parser.add_argument("--top", type=int, default=10,
                        help="how many most-realized nonempty rows to list")
    args = parser.parse_args(argv)

    rows = catalog(args.n, args.digraph_class, bound=args.bound)
    total = sum(row.count for row in rows)
    nonempty = [row for row in rows if row.edges]

    print(f"n={args.n} class={args.digraph_class}")
    print(f"digraphs examined : {total}")
    print(f"distinct DCMs     : {len(rows)}")
    print(f"nonempty DCMs     : {len(nonempty)}")

    distribution = Counter(row.count for row in rows)
    print("\nrealizer-count distribution (count -> multigraphs):")
    for count in sorted(distribution):
        print(f"  {count:>6} -> {distribution[count]}")

    if nonempty:
        print(f"\ntop {min(args.top, len(nonempty))} most-realized nonempty DCMs:")
        ranked = sorted(nonempty, key=lambda row: (-row.count, row.edges))
        for row in ranked[: args.top]:
            key = json.dumps([list(e) for e in row.edges], separators=(",", ":"))
            print(f"  {row.count:>6}  {key}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
