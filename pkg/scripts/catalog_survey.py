#!/usr/bin/env python3
"""Survey the group catalog: projective closure orders, largest cyclic
subgroups, and linear character counts."""

from equisym.groups import catalog, largest_cyclic, linear_characters, linear_closure

ENTRIES = [
    ("pgl2:cyclic", {"n": 5}), ("pgl2:dihedral", {"n": 5}),
    ("pgl2:tetrahedral", {}), ("pgl2:octahedral", {}),
    ("pgl2:icosahedral", {}),
    ("pgl3:E", {}), ("pgl3:F", {}), ("pgl3:G", {}), ("pgl3:H", {}),
    ("pgl3:I", {}), ("pgl3:J", {}),
]


def main():
    print(f"{'label':20s} {'order':>6s} {'cyclic n':>9s} {'index m':>8s} {'chars':>6s}")
    for label, kw in ENTRIES:
        entry = catalog(label, **kw)
        G = entry.projective_group()
        n, m = largest_cyclic(G)
        nchars = len(linear_characters(linear_closure(entry.generators)))
        flag = "" if m <= 6 * n else "  (!)"
        print(f"{label:20s} {G.order:6d} {n:9d} {m:8d} {nchars:6d}{flag}")


if __name__ == "__main__":
    main()
