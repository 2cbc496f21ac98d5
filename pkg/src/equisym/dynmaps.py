"""Projective morphisms: conjugation, automorphism checks, the Klein /
Doyle-McMullen / wedge constructions, Macaulay resultants, and the
degree bound on automorphism group orders."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    CycField,
    CycNum,
    FMatrix,
    MPoly,
    UPoly,
    common_field,
    cyclo_field,
    mpoly_gcd,
    upoly_factor_q,
)


class ProjMap:
    """An endomorphism of P^N as N+1 homogeneous forms of equal degree,
    gcd-reduced, with the first nonzero coordinate monic (graded lex)."""

    __slots__ = ("field", "N", "coords", "degree")

    def __init__(self, field: CycField, coords, degree: int):
        self.field = field
        self.coords = tuple(coords)
        self.N = len(coords) - 1
        self.degree = degree

    def __eq__(self, other):
        if not isinstance(other, ProjMap):
            return NotImplemented
        return self.N == other.N and self.degree == other.degree \
            and all(a == b for a, b in zip(self.coords, other.coords))

    def __hash__(self):
        return hash((self.N, self.degree, self.coords))

    def __str__(self):
        return "[" + ", ".join(str(c) for c in self.coords) + "]"

    __repr__ = __str__

    def nvars(self) -> int:
        return self.N + 1

    def apply(self, point):
        """Evaluate at a projective point given as a coordinate sequence."""
        return [c.eval(point) for c in self.coords]

    def iterate_coords(self, n: int):
        """Coordinates of the n-th iterate (no gcd reduction: for a morphism
        the iterate is automatically in lowest form)."""
        cur = list(self.coords)
        for _ in range(n - 1):
            cur = [c.compose(cur) for c in self.coords]
        return cur

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.coords)

    def to_field(self, f: CycField) -> "ProjMap":
        return ProjMap(f, [c.to_field(f) for c in self.coords], self.degree)


def make_map(coords, reduce: bool = True) -> ProjMap:
    coords = list(coords)
    if all(c.is_zero() for c in coords):
        raise ValueError("zero coordinate tuple")
    f = common_field(*[c.field for c in coords])
    coords = [c.to_field(f) for c in coords]
    if len(coords) not in (2, 3):
        raise ValueError("only P^1 and P^2 are supported")
    nv = len(coords)
    if any(c.nvars != nv for c in coords):
        raise ValueError("coordinate variable count must equal N+1")
    for c in coords:
        if not c.is_homogeneous():
            raise ValueError(f"non-homogeneous coordinate: {c}")
    if reduce:
        g = None
        for c in coords:
            if c.is_zero():
                continue
            g = c.monic() if g is None else mpoly_gcd(g, c)
            if g.total_degree() == 0:
                break
        if g is not None and g.total_degree() > 0:
            coords = [c.divexact(g) if not c.is_zero() else c for c in coords]
    degs = {c.total_degree() for c in coords if not c.is_zero()}
    if len(degs) != 1:
        raise ValueError(f"coordinate degrees differ: {sorted(degs)}")
    d = degs.pop()
    if d < 1:
        raise ValueError("map degree must be >= 1")
    # normalize: first nonzero coordinate monic
    lead = next(c for c in coords if not c.is_zero())
    _, lc = lead.leading_term()
    if lc != 1:
        inv = lc.inverse()
        coords = [c * inv for c in coords]
    return ProjMap(f, coords, d)


def conjugate(fmap: ProjMap, alpha: FMatrix) -> ProjMap:
    """f^alpha = alpha o f o alpha^(-1)."""
    if alpha.n != fmap.N + 1:
        raise ValueError("dimension mismatch")
    field = common_field(fmap.field, alpha.field)
    alpha = alpha.to_field(field)
    ainv = alpha.inverse()
    nv = fmap.N + 1
    forms = [MPoly(field, nv,
                   {tuple(1 if k == j else 0 for k in range(nv)): ainv.rows[r][j]
                    for j in range(nv) if not ainv.rows[r][j].is_zero()})
             for r in range(nv)]
    inner = [c.to_field(field).compose(forms) for c in fmap.coords]
    outer = []
    for r in range(nv):
        acc = MPoly.zero(field, nv)
        for k in range(nv):
            if not alpha.rows[r][k].is_zero():
                acc = acc + inner[k] * alpha.rows[r][k]
        outer.append(acc)
    return make_map(outer)


def is_automorphism(fmap: ProjMap, alpha: FMatrix) -> bool:
    return conjugate(fmap, alpha) == make_map(list(fmap.coords))


def klein_map(gpoly: MPoly) -> ProjMap:
    """f_G = [-dG/dy, dG/dx] on P^1."""
    if gpoly.nvars != 2 or gpoly.total_degree() < 2:
        raise ValueError("need a homogeneous binary form of degree >= 2")
    if not gpoly.is_homogeneous():
        raise ValueError("input must be homogeneous")
    return make_map([-gpoly.derivative(1), gpoly.derivative(0)])


def doyle_mcmullen(F: MPoly, Gp: MPoly) -> ProjMap:
    """f = [x F/2 + G_y, y F/2 - G_x], with F = 0 recovering the Klein map
    and G = 0 the identity."""
    if F.nvars != 2 or Gp.nvars != 2:
        raise ValueError("binary forms required")
    if not F.is_zero() and not Gp.is_zero() \
            and Gp.total_degree() != F.total_degree() + 2:
        raise ValueError("need deg G = deg F + 2")
    if F.is_zero() and Gp.is_zero():
        raise ValueError("both inputs zero")
    field = common_field(F.field, Gp.field)
    half = Fraction(1, 2)
    x = MPoly.variable(field, 2, 0)
    y = MPoly.variable(field, 2, 1)
    c0 = x * F.to_field(field) * half + Gp.to_field(field).derivative(1)
    c1 = y * F.to_field(field) * half - Gp.to_field(field).derivative(0)
    return make_map([c0, c1])


def wedge_map(ps) -> ProjMap:
    """Map on P^N from N independent invariants: Klein on P^1, the
    gcd-reduced cross product of gradients on P^2.  Larger N rejected."""
    ps = list(ps)
    if len(ps) == 1:
        return klein_map(ps[0])
    if len(ps) != 2 or ps[0].nvars != 3:
        raise ValueError("wedge_map supports one binary or two ternary forms")
    p1, p2 = ps
    g1 = [p1.derivative(j) for j in range(3)]
    g2 = [p2.derivative(j) for j in range(3)]
    coords = [g1[1] * g2[2] - g1[2] * g2[1],
              g1[2] * g2[0] - g1[0] * g2[2],
              g1[0] * g2[1] - g1[1] * g2[0]]
    return make_map(coords)


# --- Macaulay resultant -----------------------------------------------------------

@dataclass
class MorphismCertificate:
    map: ProjMap
    resultant: CycNum
    is_morphism: bool


def _binary_form_coeffs(p: MPoly, d: int):
    out = [p.field.zero()] * (d + 1)
    for e, c in p.terms.items():
        out[e[0]] = c
    return out


def _det(rows, field):
    n = len(rows)
    m = [list(r) for r in rows]
    det = field.one()
    for col in range(n):
        piv = next((r for r in range(col, n) if not m[r][col].is_zero()), None)
        if piv is None:
            return field.zero()
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det = det * m[col][col]
        inv = m[col][col].inverse()
        for r in range(col + 1, n):
            if not m[r][col].is_zero():
                factor = m[r][col] * inv
                for c in range(col + 1, n):
                    m[r][c] = m[r][c] - factor * m[col][c]
                m[r][col] = field.zero()
    return det


def _sylvester_resultant(a, b, field):
    """Resultant of two coefficient lists (degree 0 upward, full length)."""
    da, db = len(a) - 1, len(b) - 1
    n = da + db
    rows = []
    for i in range(db):
        row = [field.zero()] * n
        for j, c in enumerate(a):
            row[i + j] = c
        rows.append(row)
    for i in range(da):
        row = [field.zero()] * n
        for j, c in enumerate(b):
            row[i + j] = c
        rows.append(row)
    return _det(rows, field)


def _monomials3(d: int):
    return [(i, j, d - i - j) for i in range(d, -1, -1) for j in range(d - i, -1, -1)]


def _macaulay_p2(coords, field):
    """Classical Macaulay quotient for three ternary forms of equal degree d.
    Returns (resultant, denominator_was_zero)."""
    d = max(c.total_degree() for c in coords)
    D = 3 * (d - 1) + 1
    monos = _monomials3(D)
    idx = {m: i for i, m in enumerate(monos)}
    rows = []
    reduced_flags = []
    for m in monos:
        if m[0] >= d:
            i, shift = 0, (m[0] - d, m[1], m[2])
        elif m[1] >= d:
            i, shift = 1, (m[0], m[1] - d, m[2])
        else:
            i, shift = 2, (m[0], m[1], m[2] - d)
        row = [field.zero()] * len(monos)
        for e, c in coords[i].terms.items():
            row[idx[(e[0] + shift[0], e[1] + shift[1], e[2] + shift[2])]] = c
        rows.append(row)
        big = sum(1 for k in range(3) if m[k] >= d)
        reduced_flags.append(big >= 2)
    num = _det(rows, field)
    sub_idx = [i for i, fl in enumerate(reduced_flags) if fl]
    minor = [[rows[r][c] for c in sub_idx] for r in sub_idx]
    den = _det(minor, field)
    if den.is_zero():
        return None, True
    return num * den.inverse(), False


def macaulay_resultant(fmap: ProjMap, seed: int = 0) -> CycNum:
    """Zero iff the coordinates share a projective common zero; the nonzero
    value follows the classical Macaulay quotient normalization (only the
    vanishing locus is contractual)."""
    field = fmap.field
    if fmap.N == 1:
        d = fmap.degree
        a = _binary_form_coeffs(fmap.coords[0], d)
        b = _binary_form_coeffs(fmap.coords[1], d)
        return _sylvester_resultant(a, b, field)
    if fmap.N != 2:
        raise ValueError("resultant supported for P^1 and P^2 only")
    coords = list(fmap.coords)
    res, bad = _macaulay_p2(coords, field)
    if not bad:
        return res
    rng = random.Random(seed)
    for _ in range(5):
        # random linear change of variables preserves (non)vanishing
        while True:
            a = FMatrix(cyclo_field(1),
                        [[rng.randint(-5, 5) for _ in range(3)] for _ in range(3)])
            if not a.det().is_zero():
                break
        amat = a.to_field(field)
        forms = [MPoly(field, 3,
                       {tuple(1 if k == j else 0 for k in range(3)): amat.rows[r][j]
                        for j in range(3) if not amat.rows[r][j].is_zero()})
                 for r in range(3)]
        changed = [c.compose(forms) for c in coords]
        res, bad = _macaulay_p2(changed, field)
        if not bad:
            return res
    raise ArithmeticError("Macaulay denominator vanished for 5 coordinate changes")


def morphism_certificate(fmap: ProjMap, seed: int = 0) -> MorphismCertificate:
    r = macaulay_resultant(fmap, seed=seed)
    return MorphismCertificate(fmap, r, not r.is_zero())


def equivariant_combination(equivariants, multipliers) -> ProjMap:
    """sum multipliers[i] * equivariants[i], componentwise (multipliers are
    invariants, possibly constant 1 given as MPoly)."""
    equivariants = [list(e) for e in equivariants]
    if not equivariants:
        raise ValueError("no equivariants given")
    nv = len(equivariants[0])
    field = common_field(*[c.field for e in equivariants for c in e],
                         *[m.field for m in multipliers])
    total = None
    acc = [MPoly.zero(field, nv) for _ in range(nv)]
    for e, m in zip(equivariants, multipliers):
        m = m.to_field(field)
        deg = m.total_degree() + max(c.total_degree() for c in e)
        if total is None:
            total = deg
        elif deg != total:
            raise ValueError("degree misalignment in combination")
        for j in range(nv):
            acc[j] = acc[j] + e[j].to_field(field) * m
    return make_map(acc)


def pencil_resultant(f_coords, g_coords, field: CycField | None = None) -> UPoly:
    """Resultant of f + t*g as a polynomial in t (rational coefficients),
    computed by sampling the resultant at enough integer t values and
    interpolating.  Supports P^1 pencils (Sylvester path)."""
    f_coords = list(f_coords)
    g_coords = list(g_coords)
    if len(f_coords) != 2:
        raise ValueError("pencil_resultant implemented for P^1")
    if field is None:
        field = common_field(*[c.field for c in f_coords + g_coords])
    d = max(c.total_degree() for c in f_coords)
    size = 2 * d  # Sylvester dimension: entries linear in t, det degree <= 2d
    samples = []
    for t in range(size + 1):
        coords = [a.to_field(field) + b.to_field(field) * t
                  for a, b in zip(f_coords, g_coords)]
        a = _binary_form_coeffs(coords[0], d)
        b = _binary_form_coeffs(coords[1], d)
        samples.append((t, _sylvester_resultant(a, b, field)))
    # Lagrange interpolation
    poly = UPoly.zero(field)
    for t0, v in samples:
        basis = UPoly(field, [1])
        denom = field.one()
        for t1, _ in samples:
            if t1 == t0:
                continue
            basis = basis * UPoly(field, [-t1, 1])
            denom = denom * field.from_rational(t0 - t1)
        poly = poly + basis * (v * denom.inverse())
    return poly


def resultant_roots_in_q(poly: UPoly) -> set:
    """Distinct rational roots of a rational univariate polynomial."""
    roots = set()
    for f, _ in upoly_factor_q(poly):
        if f.degree == 1:
            roots.add(-f.coeffs[0].rational_value())
    return roots


def aut_bound(d: int, N: int) -> int:
    if d < 2:
        raise ValueError("degree must be >= 2")
    if N == 1:
        return max(60, 2 * d + 2)
    if N == 2:
        return 6 * d ** 6
    raise ValueError("bound implemented for N in {1, 2}")
