"""Finite matrix subgroups of (P)GL_2 and (P)GL_3.

Two layers everywhere: the *linear* closure (matrices up to exact
equality) feeds Molien/Reynolds sums, the *projective* closure
(normalized by the first nonzero entry, row-major) defines group
orders.  Both are breadth-first closures with a safety cap.

The catalog ships the classical subgroup lists: Silverman's PGL_2
classification and the PGL_3 list (A)-(J), with one fixed cyclotomic
expression per radical (sqrt2 = z8 - z8^3, sqrt5 = Gauss sum over z5,
sqrt(-3) = 1 + 2*z3, eta = z9^2).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import gcd, lcm

from .algebra import (
    CycField,
    CycNum,
    FMatrix,
    common_field,
    cyclo_field,
    sqrt5,
)


class ClosureCapExceeded(Exception):
    """The breadth-first closure hit the safety cap (non-finite generators?)."""


DEFAULT_CAP = 5000


class MatGroup:
    """A finite matrix group as an explicit element list with a Cayley table.

    `trans[i][k]` is the index of elements[i] * gens[k]; `inv[i]` the index
    of elements[i]^(-1).  If `projective` is set, every product is
    normalized by its first nonzero entry before identification.
    """

    def __init__(self, gens: list[FMatrix], projective: bool, cap: int = DEFAULT_CAP):
        if not gens:
            raise ValueError("need at least one generator")
        f = common_field(*[g.field for g in gens])
        gens = [g.to_field(f) for g in gens]
        n = gens[0].n
        if any(g.n != n for g in gens):
            raise ValueError("generator dimensions differ")
        for g in gens:
            if g.det().is_zero():
                raise ValueError("singular generator")
        if projective:
            gens = [g.projective_normalize() for g in gens]
        self.field = f
        self.n = n
        self.projective = projective
        self.generators = gens
        ident = FMatrix.identity(f, n)
        elements = [ident]
        index = {ident.key(): 0}
        trans: list[list[int]] = []
        frontier = [0]
        while frontier:
            new_frontier = []
            for i in frontier:
                row = []
                for g in gens:
                    prod = elements[i] * g
                    if projective:
                        prod = prod.projective_normalize()
                    k = prod.key()
                    j = index.get(k)
                    if j is None:
                        j = len(elements)
                        if j >= cap:
                            raise ClosureCapExceeded(
                                f"closure exceeded cap of {cap} elements")
                        elements.append(prod)
                        index[k] = j
                        new_frontier.append(j)
                    row.append(j)
                trans.append(row)
            frontier = new_frontier
        self.elements = elements
        self._index = index
        self.trans = trans
        inv = [0] * len(elements)
        for i, e in enumerate(elements):
            m = e.inverse()
            if projective:
                m = m.projective_normalize()
            inv[i] = index[m.key()]
        self.inv = inv

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def index_of(self, m: FMatrix) -> int:
        m = m.to_field(self.field)
        if self.projective:
            m = m.projective_normalize()
        k = m.key()
        if k not in self._index:
            raise KeyError("matrix not in group")
        return self._index[k]

    def __contains__(self, m: FMatrix) -> bool:
        try:
            self.index_of(m)
            return True
        except KeyError:
            return False

    def element_order(self, i: int) -> int:
        """Order of elements[i] within this layer."""
        ident = FMatrix.identity(self.field, self.n)
        cur = self.elements[i]
        k = 1
        while cur != ident:
            cur = cur * self.elements[i]
            if self.projective:
                cur = cur.projective_normalize()
            k += 1
            if k > len(self.elements) + 1:
                raise RuntimeError("element order exceeds group order")
        return k

    def to_field(self, f: CycField) -> "MatGroup":
        if f is self.field:
            return self
        g = MatGroup.__new__(MatGroup)
        g.field = f
        g.n = self.n
        g.projective = self.projective
        g.generators = [m.to_field(f) for m in self.generators]
        g.elements = [m.to_field(f) for m in self.elements]
        g._index = {m.key(): i for i, m in enumerate(g.elements)}
        g.trans = self.trans
        g.inv = self.inv
        return g


def linear_closure(gens: list[FMatrix], cap: int = DEFAULT_CAP) -> MatGroup:
    return MatGroup(gens, projective=False, cap=cap)


def projective_closure(gens: list[FMatrix], cap: int = DEFAULT_CAP) -> MatGroup:
    return MatGroup(gens, projective=True, cap=cap)


# --- linear characters -------------------------------------------------------

class Character:
    """A homomorphism G -> roots of unity, stored as exponents mod `modulus`.

    values[i] = zeta_modulus ^ exponents[i] for the i-th group element.
    """

    def __init__(self, group: MatGroup, exponents: list[int], modulus: int):
        self.group = group
        g = gcd(modulus, *exponents) if any(exponents) else modulus
        self.modulus = modulus // g
        self.exponents = [e // g for e in exponents]
        self.value_field = cyclo_field(self.modulus if self.modulus > 2 else 1)

    def value(self, i: int) -> CycNum:
        e = self.exponents[i]
        if self.modulus <= 2:
            return self.value_field.from_rational(1 if e == 0 else -1)
        return self.value_field.zeta(e * (self.value_field.conductor // self.modulus))

    @property
    def values(self) -> list[CycNum]:
        return [self.value(i) for i in range(len(self.group))]

    def is_trivial(self) -> bool:
        return all(e == 0 for e in self.exponents)

    def __eq__(self, other):
        return (isinstance(other, Character) and self.group is other.group
                and self.modulus == other.modulus and self.exponents == other.exponents)

    def __hash__(self):
        return hash((id(self.group), self.modulus, tuple(self.exponents)))


def linear_characters(group: MatGroup) -> list[Character]:
    """All homomorphisms into roots of unity, trivial character first.

    Candidate generator values are roots of unity of order dividing the
    generator's order; each candidate tuple is propagated through the
    Cayley table and kept iff the assignment is consistent.
    """
    gen_orders = []
    for g in group.generators:
        gen_orders.append(group.element_order(group.index_of(g)))
    m = lcm(*gen_orders)
    n_elems = len(group)
    chars = []
    seen = set()

    def candidates(pos: int, chosen: list[int]):
        if pos == len(gen_orders):
            yield list(chosen)
            return
        step = m // gen_orders[pos]
        for k in range(gen_orders[pos]):
            chosen.append(k * step)
            yield from candidates(pos + 1, chosen)
            chosen.pop()

    for vals in candidates(0, []):
        expo = [None] * n_elems
        expo[0] = 0
        stack = [0]
        ok = True
        while stack and ok:
            i = stack.pop()
            for k, j in enumerate(group.trans[i]):
                e = (expo[i] + vals[k]) % m
                if expo[j] is None:
                    expo[j] = e
                    stack.append(j)
                elif expo[j] != e:
                    ok = False
                    break
        if ok and all(e is not None for e in expo):
            chi = Character(group, expo, m)
            key = (chi.modulus, tuple(chi.exponents))
            if key not in seen:
                seen.add(key)
                chars.append(chi)
    trivial = [c for c in chars if c.is_trivial()]
    rest = sorted((c for c in chars if not c.is_trivial()),
                  key=lambda c: (c.modulus, c.exponents))
    return trivial + rest


def largest_cyclic(group: MatGroup) -> tuple[int, int]:
    """(order n of the largest cyclic subgroup, index m = |G|/n)."""
    n = max(group.element_order(i) for i in range(len(group)))
    return n, len(group) // n


# --- catalog -----------------------------------------------------------------

@dataclass
class CatalogEntry:
    label: str
    params: dict = dc_field(default_factory=dict)
    conductor: int = 1
    generators: list = dc_field(default_factory=list)
    stated_order: int | None = None

    def projective_group(self, cap: int = DEFAULT_CAP) -> MatGroup:
        return projective_closure(self.generators, cap=cap)

    def linear_group(self, cap: int = DEFAULT_CAP) -> MatGroup:
        return linear_closure(self.generators, cap=cap)


def _tetrahedral_gen(f: CycField) -> FMatrix:
    i = f.embed(cyclo_field(4).zeta())
    h = Fraction(1, 2)
    return FMatrix(f, [[(-1 + i) * h, (-1 + i) * h], [(1 + i) * h, (-1 - i) * h]])


def _pgl2_entry(name: str, n: int | None) -> CatalogEntry:
    if name == "cyclic":
        if n is None or n < 1:
            raise ValueError("cyclic needs n >= 1")
        f = cyclo_field(n)
        z = f.zeta()
        gens = [FMatrix(f, [[z, 0], [0, z.inverse()]])]
        return CatalogEntry("pgl2:cyclic", {"n": n}, n, gens, n)
    if name == "dihedral":
        if n is None or n < 2:
            raise ValueError("dihedral needs n >= 2")
        f = cyclo_field(n)
        z = f.zeta()
        gens = [FMatrix(f, [[z, 0], [0, z.inverse()]]),
                FMatrix(f, [[0, 1], [1, 0]])]
        return CatalogEntry("pgl2:dihedral", {"n": n}, n, gens, 2 * n)
    if name == "tetrahedral":
        f = cyclo_field(4)
        i = f.zeta()
        gens = [_tetrahedral_gen(f), FMatrix(f, [[0, i], [-i, 0]])]
        return CatalogEntry("pgl2:tetrahedral", {}, 4, gens, 12)
    if name == "octahedral":
        f = cyclo_field(8)
        z8 = f.zeta()
        # (1+i)/sqrt2 = z8, (1-i)/sqrt2 = z8^(-1)
        gens = [_tetrahedral_gen(f), FMatrix(f, [[z8, 0], [0, z8 ** 7]])]
        return CatalogEntry("pgl2:octahedral", {}, 8, gens, 24)
    if name == "icosahedral":
        f = cyclo_field(5)
        z = f.zeta()
        a = sqrt5(f)
        ainv = a.inverse()
        gens = [FMatrix(f, [[z ** 3, 0], [0, z ** 2]]),
                FMatrix(f, [[0, 1], [-1, 0]]),
                FMatrix(f, [[(z ** 4 - z) * ainv, (z ** 2 - z ** 3) * ainv],
                            [(z ** 2 - z ** 3) * ainv, -(z ** 4 - z) * ainv]])]
        return CatalogEntry("pgl2:icosahedral", {}, 5, gens, 60)
    raise ValueError(f"unknown PGL2 label: {name}")


def _embed_2x2(f: CycField, m2: FMatrix) -> FMatrix:
    m2 = m2.to_field(f)
    one, zero = f.one(), f.zero()
    return FMatrix(f, [[one, zero, zero],
                       [zero, m2.rows[0][0], m2.rows[0][1]],
                       [zero, m2.rows[1][0], m2.rows[1][1]]])


def _perm3(f: CycField) -> FMatrix:
    return FMatrix(f, [[0, 1, 0], [0, 0, 1], [1, 0, 0]])


def _pgl3_entry(name: str, params: dict) -> CatalogEntry:
    name = name.upper()
    if name == "A":
        n, a, b = params.get("n"), params.get("a", 1), params.get("b", 1)
        if n is None or n < 1:
            raise ValueError("(A) needs n >= 1")
        if gcd(a, n) != 1 and gcd(b, n) != 1:
            raise ValueError("(A) needs gcd(a,n) = 1 or gcd(b,n) = 1")
        f = cyclo_field(n)
        gens = [FMatrix.diagonal(f, [f.zeta(a), f.zeta(b), f.one()])]
        return CatalogEntry("pgl3:A", {"n": n, "a": a, "b": b}, n, gens, None)
    if name in ("B1", "B2", "B3", "B4"):
        p = params.get("p", 1)
        if name == "B1":
            q = params.get("q")
            if q is None or q < 2:
                raise ValueError("(B1) needs q >= 2")
            cond = lcm(p, q)
            f = cyclo_field(cond)
            fq = cyclo_field(q)
            sub = [FMatrix(fq, [[fq.zeta(), 0], [0, 1]]),
                   FMatrix(cyclo_field(1), [[0, 1], [1, 0]])]
            prms = {"p": p, "q": q}
            order = None
        elif name == "B2":
            cond = lcm(p, 4)
            f = cyclo_field(cond)
            f4 = cyclo_field(4)
            i = f4.zeta()
            sub = [_tetrahedral_gen(f4), FMatrix(f4, [[i, 0], [0, -i]])]
            prms = {"p": p}
            order = 12 if p == 1 else None
        elif name == "B3":
            cond = lcm(p, 8)
            f = cyclo_field(cond)
            f8 = cyclo_field(8)
            z8 = f8.zeta()
            sub = [_tetrahedral_gen(f8), FMatrix(f8, [[z8, 0], [0, z8 ** 7]])]
            prms = {"p": p}
            order = 24 if p == 1 else None
        else:  # B4
            cond = lcm(p, 20)
            f = cyclo_field(cond)
            f20 = cyclo_field(20)
            i = f20.embed(cyclo_field(4).zeta())
            s5 = sqrt5(f20)
            beta = (1 - s5) * Fraction(1, 4)
            gamma = (1 + s5) * Fraction(1, 4)
            half = Fraction(1, 2)
            sub = [_tetrahedral_gen(f20),
                   FMatrix(f20, [[i, 0], [0, -i]]),
                   FMatrix(f20, [[i * half, beta - i * gamma],
                                 [-beta - i * gamma, -i * half]])]
            prms = {"p": p}
            order = 60 if p == 1 else None
        gens = [_embed_2x2(f, m) for m in sub]
        if p > 1:
            gens.insert(0, FMatrix.diagonal(f, [f.zeta(cond // p), f.one(), f.one()]))
        return CatalogEntry(f"pgl3:{name}", prms, cond, gens, order)
    if name in ("C", "D"):
        n, a, b = params.get("n"), params.get("a", 1), params.get("b", 1)
        if n is None or n < 1:
            raise ValueError(f"({name}) needs n >= 1")
        if gcd(a, n) != 1 and gcd(b, n) != 1:
            raise ValueError(f"({name}) needs gcd(a,n) = 1 or gcd(b,n) = 1")
        f = cyclo_field(n)
        gens = [FMatrix.diagonal(f, [f.zeta(a), f.zeta(b), f.one()]), _perm3(f)]
        prms = {"n": n, "a": a, "b": b}
        if name == "D":
            xx, yy = params.get("x", 0), params.get("y", 0)
            third = FMatrix(f, [[f.zeta(xx), 0, 0],
                                [0, 0, f.zeta(yy)],
                                [0, 1, 0]])
            if third.det().is_zero():
                raise ValueError("(D) third generator is singular")
            gens.append(third)
            prms.update({"x": xx, "y": yy})
        return CatalogEntry(f"pgl3:{name}", prms, n, gens, None)
    if name in ("E", "F", "G"):
        cond = 9 if name == "G" else 3
        f = cyclo_field(cond)
        f3 = cyclo_field(3)
        z3 = f3.zeta()
        sinv = (z3 - z3 ** 2).inverse()  # 1/sqrt(-3)
        base = [FMatrix.diagonal(f3, [f3.one(), z3, z3 ** 2]),
                _perm3(f3),
                FMatrix(f3, [[sinv, sinv, sinv],
                             [sinv, z3 * sinv, z3 ** 2 * sinv],
                             [sinv, z3 ** 2 * sinv, z3 * sinv]])]
        gens = [m.to_field(f) for m in base]
        if name == "F":
            gens.append(FMatrix(f3, [[sinv, sinv, z3 ** 2 * sinv],
                                     [sinv, z3 * sinv, z3 * sinv],
                                     [z3 * sinv, sinv, z3 * sinv]]).to_field(f))
        if name == "G":
            eta = f.zeta(2)  # eta = z9^2 satisfies eta^3 = z3^2
            gens.append(FMatrix.diagonal(f, [eta, eta, eta * f.embed(z3)]))
        order = {"E": 36, "F": 72, "G": 216}[name]
        return CatalogEntry(f"pgl3:{name}", {}, cond, gens, order)
    if name in ("H", "I"):
        cond = 15 if name == "I" else 5
        f = cyclo_field(cond)
        s5 = sqrt5(f)
        half = Fraction(1, 2)
        mu1 = (-1 + s5) * half
        mu2 = (-1 - s5) * half
        gens = [_perm3(f),
                FMatrix.diagonal(f, [f.one(), -f.one(), -f.one()]),
                FMatrix(f, [[-f.one() * half, mu2 * half, mu1 * half],
                            [mu2 * half, mu1 * half, -f.one() * half],
                            [mu1 * half, -f.one() * half, mu2 * half]])]
        if name == "I":
            z3 = f.embed(cyclo_field(3).zeta())
            gens.append(FMatrix(f, [[-f.one(), f.zero(), f.zero()],
                                    [f.zero(), f.zero(), -z3],
                                    [f.zero(), -z3 ** 2, f.zero()]]))
        order = 360 if name == "I" else 60
        return CatalogEntry(f"pgl3:{name}", {}, cond, gens, order)
    if name == "J":
        f = cyclo_field(7)
        z = f.zeta()
        h = (z + z ** 2 + z ** 4 - z ** 6 - z ** 5 - z ** 3).inverse()
        a = (z ** 4 - z ** 3) * h
        b = (z ** 2 - z ** 5) * h
        c = (z - z ** 6) * h
        gens = [FMatrix.diagonal(f, [z, z ** 2, z ** 4]),
                _perm3(f),
                FMatrix(f, [[a, b, c], [b, c, a], [c, a, b]])]
        return CatalogEntry("pgl3:J", {}, 7, gens, 168)
    raise ValueError(f"unknown PGL3 label: {name}")


def catalog(label: str, **params) -> CatalogEntry:
    """Catalog lookup: catalog('pgl2:cyclic', n=5), catalog('pgl3:G'), ..."""
    parts = label.split(":")
    if len(parts) != 2:
        raise ValueError("label must look like 'pgl2:<name>' or 'pgl3:<name>'")
    family, name = parts[0].lower(), parts[1]
    if family == "pgl2":
        return _pgl2_entry(name.lower(), params.get("n"))
    if family == "pgl3":
        return _pgl3_entry(name, params)
    raise ValueError(f"unknown catalog family: {family}")


def catalog_from_label(label: str) -> CatalogEntry:
    """Parse the CLI form 'pgl3:A:n=5,a=1,b=4' into a CatalogEntry."""
    parts = label.split(":")
    if len(parts) not in (2, 3):
        raise ValueError(f"bad group label: {label!r}")
    params = {}
    if len(parts) == 3:
        for item in parts[2].split(","):
            if not item:
                continue
            k, _, v = item.partition("=")
            params[k.strip()] = int(v)
    return catalog(f"{parts[0]}:{parts[1]}", **params)
