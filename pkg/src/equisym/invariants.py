"""Molien-series machinery, Reynolds projectors, invariant/equivariant search.

Conventions (pinned once, used everywhere):
  group action        (gamma.F)(v) = F(rho(gamma^-1) v)
  Reynolds            R_chi(F)  = (1/|G|) sum chi(g^-1) (g.F)
  equiv. Reynolds     RE_chi(f) = (1/|G|) sum chi(g^-1) rho(g^-1) f(rho(g) x)
so that outputs satisfy gamma.F = chi(gamma) F and
f(rho(g) x) = chi(g) rho(g) f(x), and the dimension counts agree with
the Molien series H(t) = (1/|G|) sum chi(g)/det(1 - t g) and its
equivariant analogue Psi(t) = (1/|G|) sum chi(g) tr(g^-1)/det(1 - t g).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .algebra import (
    CycField,
    CycNum,
    FMatrix,
    MPoly,
    TruncSeries,
    common_field,
)
from .groups import Character, MatGroup

DEFAULT_PRECISION = 20


class NotPolynomial(Exception):
    """H(t) * prod(1 - t^d_i) failed to truncate to a nonnegative polynomial."""


# --- Molien series family ------------------------------------------------------

def _molien_sum(group: MatGroup, numerators, precision: int) -> TruncSeries:
    """sum numerators[i] / det(1 - t g_i), grouped by distinct denominator."""
    field = common_field(group.field, *[v.field for v in numerators])
    buckets: dict = {}
    for i, g in enumerate(group.elements):
        num = field.embed(numerators[i])
        if num.is_zero():
            continue
        den = tuple(field.embed(c) for c in g.char_det_coeffs())
        key = tuple(c.coeffs for c in den)
        if key in buckets:
            buckets[key] = (buckets[key][0] + num, den)
        else:
            buckets[key] = (num, den)
    total = TruncSeries.zero(field, precision)
    for num, den in buckets.values():
        recip = TruncSeries(field, list(den), precision).reciprocal()
        total = total + recip * num
    scale = field.from_rational(1) * len(group.elements)
    return total * scale.inverse()


def molien(group: MatGroup, chi: Character, precision: int = DEFAULT_PRECISION) -> TruncSeries:
    nums = [chi.value(i) for i in range(len(group))]
    return _molien_sum(group, nums, precision)


def equivariant_molien(group: MatGroup, chi: Character,
                       precision: int = DEFAULT_PRECISION) -> TruncSeries:
    nums = [chi.value(i) * group.elements[group.inv[i]].trace()
            for i in range(len(group))]
    return _molien_sum(group, nums, precision)


def molien_forms(group: MatGroup, chi: Character,
                 precision: int = DEFAULT_PRECISION) -> list[TruncSeries]:
    """Series in t for each power of s: entry p is the coefficient of s^p
    in (1/|G|) sum chi(g) det(1 + s g)/det(1 - t g)."""
    n = group.n
    out = []
    for p in range(n + 1):
        nums = []
        for i, g in enumerate(group.elements):
            cdc = g.char_det_coeffs()  # (-1)^k e_k(g)
            ep = cdc[p] if p % 2 == 0 else -cdc[p]
            nums.append(chi.value(i) * ep)
        out.append(_molien_sum(group, nums, precision))
    return out


# --- Reynolds operators ---------------------------------------------------------

def _linear_forms(mat: FMatrix, nvars: int) -> list[MPoly]:
    """Row linear forms of a matrix, i.e. the coordinates of M*xbar."""
    return [MPoly(mat.field, nvars, {tuple(1 if k == j else 0 for k in range(nvars)):
                                     mat.rows[r][j]
                                     for j in range(nvars)
                                     if not mat.rows[r][j].is_zero()})
            for r in range(nvars)]


def group_act(group_elem: FMatrix, F: MPoly) -> MPoly:
    """(gamma.F)(v) = F(rho(gamma^-1) v), with gamma given directly."""
    return F.compose(_linear_forms(group_elem.inverse(), F.nvars))


def reynolds(group: MatGroup, chi: Character, F: MPoly) -> MPoly:
    field = common_field(group.field, chi.value_field, F.field)
    nv = F.nvars
    acc = MPoly.zero(field, nv)
    for i in range(len(group)):
        ginv = group.elements[group.inv[i]]
        term = F.compose(_linear_forms(ginv.to_field(field), nv))
        acc = acc + term * field.embed(chi.value(group.inv[i]))
    return acc * field.from_rational(1) * (field.from_rational(len(group)).inverse())


def equivariant_reynolds(group: MatGroup, chi: Character, g_tuple) -> tuple:
    comps = list(g_tuple)
    field = common_field(group.field, chi.value_field, *[c.field for c in comps])
    nv = comps[0].nvars
    acc = [MPoly.zero(field, nv) for _ in comps]
    for i in range(len(group)):
        g = group.elements[i].to_field(field)
        ginv = group.elements[group.inv[i]].to_field(field)
        forms = _linear_forms(g, nv)
        moved = [c.compose(forms) for c in comps]  # f(rho(g) x)
        coef = field.embed(chi.value(group.inv[i]))
        for j in range(nv):
            term = MPoly.zero(field, nv)
            for k in range(nv):
                if not ginv.rows[j][k].is_zero():
                    term = term + moved[k] * ginv.rows[j][k]
            acc[j] = acc[j] + term * coef
    inv_order = field.from_rational(len(group)).inverse()
    return tuple(a * inv_order for a in acc)


def is_relative_invariant(group: MatGroup, chi: Character, F: MPoly) -> bool:
    for i in range(len(group)):
        if group_act(group.elements[i], F) != F * chi.value(i):
            return False
    return True


def is_equivariant_tuple(group: MatGroup, chi: Character, g_tuple) -> bool:
    """f(rho(g) x) = chi(g) rho(g) f(x) for every group element."""
    comps = list(g_tuple)
    field = common_field(group.field, chi.value_field, *[c.field for c in comps])
    nv = comps[0].nvars
    for i in range(len(group)):
        g = group.elements[i].to_field(field)
        forms = _linear_forms(g, nv)
        lhs = [c.compose(forms) for c in comps]
        coef = field.embed(chi.value(i))
        for j in range(nv):
            rhs = MPoly.zero(field, nv)
            for k in range(nv):
                if not g.rows[j][k].is_zero():
                    rhs = rhs + comps[k].to_field(field) * g.rows[j][k]
            if lhs[j] != rhs * coef:
                return False
    return True


# --- degree-d spaces via the averaged symmetric-power operator --------------------

def _monomials(nvars: int, d: int) -> list[tuple[int, ...]]:
    if nvars == 1:
        return [(d,)]
    out = []
    for k in range(d, -1, -1):
        for rest in _monomials(nvars - 1, d - k):
            out.append((k,) + rest)
    return out


def _sym_columns(mat: FMatrix, monos, nvars: int):
    """For each monomial e, coefficients (over `monos`) of prod (M x)_j ^ e_j."""
    field = mat.field
    forms = _linear_forms(mat, nvars)
    maxd = [max(e[j] for e in monos) for j in range(nvars)]
    pows = []
    for j in range(nvars):
        ps = [MPoly.constant(field, nvars, 1)]
        for _ in range(maxd[j]):
            ps.append(ps[-1] * forms[j])
        pows.append(ps)
    mono_index = {e: i for i, e in enumerate(monos)}
    cols = []
    for e in monos:
        prod = MPoly.constant(field, nvars, 1)
        for j, k in enumerate(e):
            if k:
                prod = prod * pows[j][k]
        col = [field.zero()] * len(monos)
        for ee, c in prod.terms.items():
            col[mono_index[ee]] = c
        cols.append(col)
    return cols


def _column_space_basis(columns, field):
    """Row-reduce the column set; return a reduced basis (lists of CycNum)."""
    basis = []  # list of (pivot index, vector)
    for col in columns:
        vec = list(col)
        for piv, bvec in basis:
            c = vec[piv]
            if not c.is_zero():
                vec = [a - c * b for a, b in zip(vec, bvec)]
        piv = next((i for i, c in enumerate(vec) if not c.is_zero()), None)
        if piv is None:
            continue
        inv = vec[piv].inverse()
        vec = [c * inv for c in vec]
        basis.append((piv, vec))
    basis.sort(key=lambda pb: pb[0])
    # back-substitute for a fully reduced (canonical) basis
    for i, (piv, vec) in enumerate(basis):
        for j, (piv2, vec2) in enumerate(basis):
            if j != i and not vec[piv2].is_zero():
                c = vec[piv2]
                vec = [a - c * b for a, b in zip(vec, vec2)]
        basis[i] = (piv, vec)
    return [vec for _, vec in basis]


@dataclass
class InvariantBasis:
    group: MatGroup
    character: Character
    degree: int
    basis: list  # of MPoly

    @property
    def dimension(self) -> int:
        return len(self.basis)


@dataclass
class EquivariantBasis:
    group: MatGroup
    character: Character
    degree: int
    basis: list  # of tuples of MPoly

    @property
    def dimension(self) -> int:
        return len(self.basis)


def invariant_space(group: MatGroup, chi: Character, d: int) -> InvariantBasis:
    field = common_field(group.field, chi.value_field)
    nv = group.n
    monos = _monomials(nv, d)
    dim = len(monos)
    acc = [[field.zero()] * dim for _ in range(dim)]
    for i in range(len(group)):
        ginv = group.elements[group.inv[i]].to_field(field)
        cols = _sym_columns(ginv, monos, nv)
        coef = field.embed(chi.value(group.inv[i]))
        for c in range(dim):
            col = cols[c]
            accc = acc[c]
            for r in range(dim):
                if not col[r].is_zero():
                    accc[r] = accc[r] + coef * col[r]
    basis_vecs = _column_space_basis(acc, field)
    polys = []
    for vec in basis_vecs:
        p = MPoly(field, nv, {monos[i]: c for i, c in enumerate(vec)})
        polys.append(p.monic())
    return InvariantBasis(group, chi, d, polys)


def equivariant_space(group: MatGroup, chi: Character, d: int) -> EquivariantBasis:
    field = common_field(group.field, chi.value_field)
    nv = group.n
    monos = _monomials(nv, d)
    dim = len(monos)
    bigdim = nv * dim
    acc = [[field.zero()] * bigdim for _ in range(bigdim)]
    for i in range(len(group)):
        g = group.elements[i].to_field(field)
        ginv = group.elements[group.inv[i]].to_field(field)
        cols = _sym_columns(g, monos, nv)
        coef = field.embed(chi.value(group.inv[i]))
        for k in range(nv):            # input component
            for m in range(dim):       # input monomial
                col = cols[m]
                cidx = k * dim + m
                accc = acc[cidx]
                for j in range(nv):    # output component
                    w = ginv.rows[j][k]
                    if w.is_zero():
                        continue
                    w = w * coef
                    base = j * dim
                    for r in range(dim):
                        if not col[r].is_zero():
                            accc[base + r] = accc[base + r] + w * col[r]
    basis_vecs = _column_space_basis(acc, field)
    tuples = []
    for vec in basis_vecs:
        comps = []
        for j in range(nv):
            comps.append(MPoly(field, nv,
                               {monos[r]: vec[j * dim + r] for r in range(dim)}))
        tuples.append(tuple(comps))
    return EquivariantBasis(group, chi, d, tuples)


# --- degree formulas ----------------------------------------------------------------

def series_secondary_degrees(series: TruncSeries, primary_degrees) -> list[int]:
    """Exponents (with multiplicity) of series * prod(1 - t^d_i), which must
    truncate to a polynomial with nonnegative integer coefficients."""
    field = series.field
    prod = series
    for d in primary_degrees:
        coeffs = [0] * (d + 1)
        coeffs[0] = 1
        coeffs[d] = -1
        prod = prod * TruncSeries(field, coeffs, series.precision)
    out = []
    for k, c in enumerate(prod.coeffs):
        if c.is_zero():
            continue
        if not c.is_rational() or c.rational_value().denominator != 1 \
                or c.rational_value() < 0:
            raise NotPolynomial(f"coefficient {c} at t^{k}")
        if k >= series.precision - 2:
            raise NotPolynomial(f"nonzero coefficient at the precision edge (t^{k})")
        out.extend([k] * int(c.rational_value()))
    return out


def secondary_degrees(group: MatGroup, chi: Character, primary_degrees,
                      precision: int = DEFAULT_PRECISION,
                      equivariant: bool = False) -> list[int]:
    make = equivariant_molien if equivariant else molien
    try:
        first = series_secondary_degrees(make(group, chi, precision), primary_degrees)
    except NotPolynomial:
        first = None
    # confirm at doubled precision: a genuine polynomial gives the same exponents
    second = series_secondary_degrees(make(group, chi, 2 * precision), primary_degrees)
    if first is not None and first != second:
        raise NotPolynomial("exponents unstable under precision doubling")
    return second


def fundamental_equivariant_count(group: MatGroup, primary_degrees, w_dim: int) -> int:
    num = w_dim
    for d in primary_degrees:
        num *= d
    if num % len(group.elements) != 0:
        raise ValueError("s = m*d1*...*dN/|G| is not an integer: inconsistent inputs")
    return num // len(group.elements)


def algebraically_independent(polys) -> bool:
    polys = list(polys)
    if not polys:
        return True
    nv = polys[0].nvars
    k = len(polys)
    if k > nv:
        return False
    jac = [[p.derivative(j) for j in range(nv)] for p in polys]
    for cols in combinations(range(nv), k):
        # determinant of the k x k polynomial minor by cofactor expansion
        minor = [[jac[r][c] for c in cols] for r in range(k)]
        if not _poly_det(minor).is_zero():
            return True
    return False


def _poly_det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    acc = None
    for j in range(n):
        if m[0][j].is_zero():
            continue
        sub = [[m[r][c] for c in range(n) if c != j] for r in range(1, n)]
        term = m[0][j] * _poly_det(sub)
        if j % 2 == 1:
            term = -term
        acc = term if acc is None else acc + term
    if acc is None:
        return m[0][0]  # zero polynomial
    return acc
