#!/usr/bin/env python3
"""Walk through the order-24 subgroup of PGL_2: Molien series for both
linear characters, invariant bases, the invariant -> morphism table, and
the degree-17 equivariant family with its degenerate parameters."""

from equisym.algebra import MPoly, cyclo_field
from equisym.cli import format_map, format_poly, format_series, parse_poly
from equisym.dynmaps import (
    equivariant_combination,
    klein_map,
    pencil_resultant,
    resultant_roots_in_q,
)
from equisym.groups import catalog, linear_characters, linear_closure
from equisym.invariants import equivariant_molien, invariant_space, molien

Q = cyclo_field(1)


def main():
    G = linear_closure(catalog("pgl2:octahedral").generators)
    chars = linear_characters(G)
    print("group order (linear lift):", G.order)
    print("Molien, trivial char:   ", format_series(molien(G, chars[0], 20)))
    print("Molien, relative char:  ", format_series(molien(G, chars[1], 26)))
    print("equivariant Molien:     ",
          format_series(equivariant_molien(G, chars[0], 21)))

    print("\ninvariant bases:")
    for chi, d in ((chars[0], 8), (chars[0], 12), (chars[1], 6), (chars[1], 12)):
        for p in invariant_space(G, chi, d).basis:
            print(f"  degree {d}: {format_poly(p.monic())}")

    print("\ninvariant -> morphism table:")
    invariants = [
        "x^5y - xy^5",
        "x^10y^2 - 2x^6y^6 + x^2y^10",
        "x^8 + 14x^4y^4 + y^8",
        "(x^8 + 14x^4y^4 + y^8)xy",
        "x^12 - 33x^8y^4 - 33x^4y^8 + y^12",
        "x^13y + 13x^9y^5 - 13x^5y^9 - xy^13",
        "(x^8 + 14x^4y^4 + y^8)^2 - (x^13y + 13x^9y^5 - 13x^5y^9 - xy^13)xy",
        "(x^5y - xy^5)(x^12 - 33x^8y^4 - 33x^4y^8 + y^12)",
    ]
    for inv in invariants:
        f = klein_map(parse_poly(inv, 2))
        print(f"  {inv}\n    -> {format_map(f)} (degree {f.degree})")

    print("\ndegree-17 equivariant family f17 + t*p12*f5:")
    f17 = [parse_poly("x^17 - 60x^13y^4 + 110x^9y^8 + 212x^5y^12 - 7xy^16", 2),
           parse_poly("-7x^16y + 212x^12y^5 + 110x^8y^9 - 60x^4y^13 + y^17", 2)]
    f5 = [parse_poly("-x^5 + 5xy^4", 2), parse_poly("5x^4y - y^5", 2)]
    p12 = parse_poly("x^12 - 33x^8y^4 - 33x^4y^8 + y^12", 2)
    two = MPoly.constant(Q, 2, 2)
    comb = equivariant_combination([f17, f5], [MPoly.constant(Q, 2, 1),
                                               two * p12])
    print("  t=2 member:", format_map(comb))
    res_t = pencil_resultant(f17, [c * p12 for c in f5])
    roots = sorted(resultant_roots_in_q(res_t))
    print("  degenerate parameters:", [str(r) for r in roots])


if __name__ == "__main__":
    main()
