"""Finite projective matrix groups: closure, catalog, characters,
cyclic-subgroup analysis."""

import pytest

from equisym.algebra import FMatrix, cyclo_field
from equisym.groups import (
    ClosureCapExceeded,
    catalog,
    catalog_from_label,
    largest_cyclic,
    linear_characters,
    linear_closure,
    projective_closure,
)

Q = cyclo_field(1)


def test_cyclic_closure_order():
    f = cyclo_field(3)
    g = FMatrix.diagonal(f, [f.zeta(), f.zeta(-1)])
    assert projective_closure([g]).order == 3
    assert linear_closure([g]).order == 3


def test_projective_vs_linear_closure():
    # -I is projectively trivial
    f = cyclo_field(4)
    g = FMatrix.diagonal(f, [f.zeta(), f.zeta(3)])  # diag(i, -i), g^2 = -I
    assert linear_closure([g]).order == 4
    assert projective_closure([g]).order == 2


def test_closure_cap():
    f = cyclo_field(101)
    g = FMatrix.diagonal(f, [f.zeta(), f.one()])
    with pytest.raises(ClosureCapExceeded):
        projective_closure([g], cap=50)


def test_pgl2_catalog_orders():
    assert catalog("pgl2:cyclic", n=5).projective_group().order == 5
    assert catalog("pgl2:dihedral", n=5).projective_group().order == 10
    assert catalog("pgl2:tetrahedral").projective_group().order == 12
    assert catalog("pgl2:octahedral").projective_group().order == 24
    assert catalog("pgl2:icosahedral").projective_group().order == 60


def test_pgl3_intransitive_catalog():
    # diagonal family and its cyclic-permutation extension
    assert catalog("pgl3:A", n=5, a=1, b=2).projective_group().order == 5
    assert catalog("pgl3:C", n=3, a=1, b=1).projective_group().order == 27


def test_catalog_from_label():
    e = catalog_from_label("pgl2:cyclic:n=7")
    assert e.projective_group().order == 7
    with pytest.raises(ValueError):
        catalog_from_label("nonsense")
    with pytest.raises(ValueError):
        catalog_from_label("pgl2:nosuchgroup")


def test_linear_characters_cyclic():
    f = cyclo_field(6)
    g = FMatrix.diagonal(f, [f.zeta(), f.one()])
    G = linear_closure([g])
    chars = linear_characters(G)
    assert len(chars) == 6
    assert chars[0].is_trivial()
    # characters are homomorphisms
    for ch in chars:
        for i in range(G.order):
            for j in range(G.order):
                k = G.index_of(G.elements[i] * G.elements[j])
                assert ch.value(i) * ch.value(j) == ch.value(k)


def test_linear_characters_octahedral():
    G = linear_closure(catalog("pgl2:octahedral").generators)
    chars = linear_characters(G)
    assert len(chars) == 2
    assert chars[0].is_trivial() and not chars[1].is_trivial()


def test_largest_cyclic():
    H = catalog("pgl3:H").projective_group()
    assert largest_cyclic(H) == (5, 12)
    C = catalog("pgl2:cyclic", n=9).projective_group()
    assert largest_cyclic(C) == (9, 1)


def test_largest_cyclic_index_bound():
    for label in ("pgl2:tetrahedral", "pgl2:octahedral", "pgl3:E", "pgl3:H"):
        G = catalog(label.split(":")[0] + ":" + label.split(":")[1]).projective_group()
        n, m = largest_cyclic(G)
        assert n * m == G.order
        assert m <= 6 * n
