"""Sparse multivariate polynomials over a cyclotomic field.

Terms map exponent tuples to nonzero CycNum.  The term order everywhere
is graded lex with x > y > z; gcds and canonical map coordinates are
normalized monic in that order.
"""

from __future__ import annotations

from fractions import Fraction

import sympy

from .cyclotomic import CycField, CycNum, common_field
from .upoly import UPoly

VAR_NAMES = ("x", "y", "z", "w")


def _grlex_key(expt: tuple[int, ...]):
    return (sum(expt), expt)


class MPoly:
    __slots__ = ("field", "nvars", "terms", "_hash")

    def __init__(self, field: CycField, nvars: int, terms: dict | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if not isinstance(c, CycNum):
                    c = field.from_rational(c)
                elif c.field is not field:
                    c = field.embed(c)
                if not c.is_zero():
                    e = tuple(int(k) for k in e)
                    assert len(e) == nvars
                    if e in clean:
                        c = clean[e] + c
                        if c.is_zero():
                            del clean[e]
                            continue
                    clean[e] = c
        self.field = field
        self.nvars = nvars
        self.terms = clean
        self._hash = None

    # --- constructors ----------------------------------------------------
    @classmethod
    def zero(cls, field: CycField, nvars: int) -> "MPoly":
        return cls(field, nvars, {})

    @classmethod
    def constant(cls, field: CycField, nvars: int, c) -> "MPoly":
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, field: CycField, nvars: int, i: int) -> "MPoly":
        e = [0] * nvars
        e[i] = 1
        return cls(field, nvars, {tuple(e): field.one()})

    @classmethod
    def monomial(cls, field: CycField, expt: tuple[int, ...], c=1) -> "MPoly":
        return cls(field, len(expt), {tuple(expt): c})

    # --- coercion ----------------------------------------------------------
    def to_field(self, field: CycField) -> "MPoly":
        if field is self.field:
            return self
        return MPoly(field, self.nvars, dict(self.terms))

    def _pair(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            other = MPoly.constant(self.field, self.nvars, other)
        if not isinstance(other, MPoly):
            return None, None
        assert other.nvars == self.nvars, "variable count mismatch"
        if other.field is self.field:
            return self, other
        f = common_field(self.field, other.field)
        return self.to_field(f), other.to_field(f)

    # --- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        out = dict(a.terms)
        for e, c in b.terms.items():
            if e in out:
                s = out[e] + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        p = MPoly.__new__(MPoly)
        p.field, p.nvars, p.terms, p._hash = a.field, a.nvars, out, None
        return p

    __radd__ = __add__

    def __neg__(self):
        p = MPoly.__new__(MPoly)
        p.field, p.nvars = self.field, self.nvars
        p.terms = {e: -c for e, c in self.terms.items()}
        p._hash = None
        return p

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycNum)) :
            if not isinstance(other, CycNum):
                other = self.field.from_rational(other)
            f = common_field(self.field, other.field)
            other = f.embed(other)
            if other.is_zero():
                return MPoly.zero(f, self.nvars)
            me = self.to_field(f)
            p = MPoly.__new__(MPoly)
            p.field, p.nvars, p._hash = f, self.nvars, None
            p.terms = {e: c * other for e, c in me.terms.items()}
            return p
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        out: dict = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(i + j for i, j in zip(e1, e2))
                c = c1 * c2
                if e in out:
                    s = out[e] + c
                    if s.is_zero():
                        del out[e]
                    else:
                        out[e] = s
                elif not c.is_zero():
                    out[e] = c
        p = MPoly.__new__(MPoly)
        p.field, p.nvars, p.terms, p._hash = a.field, a.nvars, out, None
        return p

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        acc = MPoly.constant(self.field, self.nvars, 1)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base if e > 1 else base
            e >>= 1
        return acc

    # --- queries ------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, var: int) -> int:
        if not self.terms:
            return -1
        return max(e[var] for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def leading_term(self) -> tuple[tuple[int, ...], CycNum]:
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def coefficient(self, expt: tuple[int, ...]) -> CycNum:
        return self.terms.get(tuple(expt), self.field.zero())

    def monic(self) -> "MPoly":
        """Normalize so the graded-lex leading coefficient is 1."""
        if self.is_zero():
            return self
        _, lc = self.leading_term()
        if lc == 1:
            return self
        return self * lc.inverse()

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.terms.values())

    # --- calculus / substitution ----------------------------------------------
    def derivative(self, var: int) -> "MPoly":
        out = {}
        for e, c in self.terms.items():
            if e[var] > 0:
                ne = list(e)
                ne[var] -= 1
                out[tuple(ne)] = c * e[var]
        return MPoly(self.field, self.nvars, out)

    def eval(self, point) -> CycNum:
        pts = [p if isinstance(p, CycNum) else self.field.from_rational(p) for p in point]
        f = common_field(self.field, *[p.field for p in pts])
        pts = [f.embed(p) for p in pts]
        # cache powers of each coordinate
        maxd = [self.degree_in(i) for i in range(self.nvars)]
        pows = []
        for i in range(self.nvars):
            ps = [f.one()]
            for _ in range(max(0, maxd[i])):
                ps.append(ps[-1] * pts[i])
            pows.append(ps)
        acc = f.zero()
        for e, c in self.terms.items():
            t = f.embed(c)
            for i, k in enumerate(e):
                if k:
                    t = t * pows[i][k]
            acc = acc + t
        return acc

    def compose(self, polys) -> "MPoly":
        """Substitute polys[i] for variable i."""
        polys = list(polys)
        assert len(polys) == self.nvars
        f = common_field(self.field, *[p.field for p in polys])
        polys = [p.to_field(f) for p in polys]
        nv = polys[0].nvars
        maxd = [self.degree_in(i) for i in range(self.nvars)]
        pows = []
        for i in range(self.nvars):
            ps = [MPoly.constant(f, nv, 1)]
            for _ in range(max(0, maxd[i])):
                ps.append(ps[-1] * polys[i])
            pows.append(ps)
        acc = MPoly.zero(f, nv)
        for e, c in self.terms.items():
            t = MPoly.constant(f, nv, f.embed(c))
            for i, k in enumerate(e):
                if k:
                    t = t * pows[i][k]
            acc = acc + t
        return acc

    def substitute_var(self, var: int, value) -> "MPoly":
        """Set one variable to a constant, keeping the variable count."""
        if not isinstance(value, CycNum):
            value = self.field.from_rational(value)
        f = common_field(self.field, value.field)
        value = f.embed(value)
        d = self.degree_in(var)
        pows = [f.one()]
        for _ in range(max(0, d)):
            pows.append(pows[-1] * value)
        out: dict = {}
        for e, c in self.terms.items():
            ne = list(e)
            k = ne[var]
            ne[var] = 0
            c2 = f.embed(c) * pows[k] if k else f.embed(c)
            ne = tuple(ne)
            if ne in out:
                s = out[ne] + c2
                if s.is_zero():
                    del out[ne]
                else:
                    out[ne] = s
            elif not c2.is_zero():
                out[ne] = c2
        return MPoly(f, self.nvars, out)

    def drop_var(self, var: int) -> "MPoly":
        """Remove an unused variable from the ring."""
        assert self.degree_in(var) <= 0
        out = {}
        for e, c in self.terms.items():
            out[tuple(k for i, k in enumerate(e) if i != var)] = c
        return MPoly(self.field, self.nvars - 1, out)

    def to_upoly(self, var: int) -> UPoly:
        """Convert a polynomial using only one variable to a UPoly."""
        coeffs = [self.field.zero()] * (self.degree_in(var) + 1)
        for e, c in self.terms.items():
            assert all(k == 0 for i, k in enumerate(e) if i != var)
            coeffs[e[var]] = c
        return UPoly(self.field, coeffs)

    @classmethod
    def from_upoly(cls, p: UPoly, nvars: int, var: int) -> "MPoly":
        out = {}
        for k, c in enumerate(p.coeffs):
            e = [0] * nvars
            e[var] = k
            out[tuple(e)] = c
        return cls(p.field, nvars, out)

    # --- division / gcd ----------------------------------------------------
    def divexact(self, d: "MPoly") -> "MPoly":
        """Exact division; raises ArithmeticError if d does not divide self."""
        a, b = self._pair(d)
        if b.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if a.is_zero():
            return a
        lt_e, lt_c = b.leading_term()
        lt_c_inv = lt_c.inverse()
        rem = dict(a.terms)
        out: dict = {}
        while rem:
            e = max(rem, key=_grlex_key)
            c = rem[e]
            qe = tuple(i - j for i, j in zip(e, lt_e))
            if any(k < 0 for k in qe):
                raise ArithmeticError("non-exact polynomial division")
            qc = c * lt_c_inv
            out[qe] = qc
            for be, bc in b.terms.items():
                te = tuple(i + j for i, j in zip(qe, be))
                tc = qc * bc
                if te in rem:
                    s = rem[te] - tc
                    if s.is_zero():
                        del rem[te]
                    else:
                        rem[te] = s
                else:
                    rem[te] = -tc
        return MPoly(a.field, a.nvars, out)

    def divides(self, other: "MPoly") -> bool:
        try:
            other.divexact(self)
            return True
        except ArithmeticError:
            return False

    def __eq__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a.terms == b.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars,
                               tuple(sorted((e, c.coeffs) for e, c in self.terms.items()))))
        return self._hash

    # --- text / sympy bridge ---------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)
        parts = []
        for e, c in items:
            mono = "*".join(
                (VAR_NAMES[i] if k == 1 else f"{VAR_NAMES[i]}^{k}")
                for i, k in enumerate(e) if k)
            cs = str(c)
            if not c.is_rational():
                cs = f"({cs})"
            if mono:
                if cs == "1":
                    term = mono
                elif cs == "-1":
                    term = f"-{mono}"
                else:
                    term = f"{cs}*{mono}"
            else:
                term = cs
            parts.append(term)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    __repr__ = __str__

    def to_sympy(self, symbols=None):
        if not self.is_rational():
            raise ValueError("sympy bridge requires rational coefficients")
        if symbols is None:
            symbols = sympy.symbols(VAR_NAMES[:self.nvars])
        expr = sympy.Integer(0)
        for e, c in self.terms.items():
            q = c.rational_value()
            t = sympy.Rational(q.numerator, q.denominator)
            for i, k in enumerate(e):
                if k:
                    t *= symbols[i] ** k
            expr += t
        return expr

    @classmethod
    def from_sympy(cls, expr, field: CycField, nvars: int, symbols=None) -> "MPoly":
        if symbols is None:
            symbols = sympy.symbols(VAR_NAMES[:nvars])
        poly = sympy.Poly(expr, *symbols, domain="QQ")
        terms = {}
        for e, c in poly.terms():
            terms[tuple(int(k) for k in e)] = Fraction(c.p, c.q)
        return cls(field, nvars, terms)


# --- gcd ----------------------------------------------------------------------

def _used_vars(p: MPoly) -> list[int]:
    return [i for i in range(p.nvars) if p.degree_in(i) > 0]


def _main_coeffs(p: MPoly, var: int) -> list[MPoly]:
    """Coefficients of p as a polynomial in `var` (degree 0 upward)."""
    d = p.degree_in(var)
    out = [MPoly.zero(p.field, p.nvars) for _ in range(d + 1)]
    for e, c in p.terms.items():
        ne = list(e)
        k = ne[var]
        ne[var] = 0
        out[k] = out[k] + MPoly(p.field, p.nvars, {tuple(ne): c})
    return out


def _from_main_coeffs(coeffs: list[MPoly], var: int, field, nvars) -> MPoly:
    acc = MPoly.zero(field, nvars)
    xv = MPoly.variable(field, nvars, var)
    xp = MPoly.constant(field, nvars, 1)
    for c in coeffs:
        acc = acc + c * xp
        xp = xp * xv
    return acc


def mpoly_gcd(p: MPoly, q: MPoly) -> MPoly:
    """gcd normalized monic in the graded-lex leading term; gcd(0,0) = 0."""
    a, b = p._pair(q)
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    used = sorted(set(_used_vars(a)) | set(_used_vars(b)))
    if not used:
        return MPoly.constant(a.field, a.nvars, 1)
    if len(used) == 1:
        v = used[0]
        g = a.to_upoly(v).gcd(b.to_upoly(v))
        return MPoly.from_upoly(g, a.nvars, v).monic()
    var = used[-1]
    ca, pa = _content_pp(a, var)
    cb, pb = _content_pp(b, var)
    cg = mpoly_gcd(ca, cb)
    g = _primitive_prs_gcd(pa, pb, var)
    return (cg * g).monic()


def _content_pp(p: MPoly, var: int) -> tuple[MPoly, MPoly]:
    coeffs = [c for c in _main_coeffs(p, var) if not c.is_zero()]
    cont = coeffs[0]
    for c in coeffs[1:]:
        if cont.total_degree() == 0:
            break
        cont = mpoly_gcd(cont, c)
    cont = cont.monic()
    return cont, p.divexact(cont)


def _prem(a: list[MPoly], b: list[MPoly], field, nvars) -> list[MPoly]:
    """Pseudo-remainder of coefficient lists in the main variable."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and any(not c.is_zero() for c in a):
        while a and a[-1].is_zero():
            a.pop()
        if len(a) - 1 < db:
            break
        da, la = len(a) - 1, a[-1]
        a = [c * lb for c in a]
        shift = da - db
        for j in range(db + 1):
            a[shift + j] = a[shift + j] - la * b[j]
        while a and a[-1].is_zero():
            a.pop()
    return a


def _primitive_prs_gcd(a: MPoly, b: MPoly, var: int) -> MPoly:
    field, nvars = a.field, a.nvars
    A = _main_coeffs(a, var)
    B = _main_coeffs(b, var)
    if len(A) < len(B):
        A, B = B, A
    while True:
        R = _prem(A, B, field, nvars)
        if not R or all(c.is_zero() for c in R):
            g = _from_main_coeffs(B, var, field, nvars)
            _, g = _content_pp(g, var)
            return g
        rpoly = _from_main_coeffs(R, var, field, nvars)
        if rpoly.degree_in(var) <= 0:
            return MPoly.constant(field, nvars, 1)
        _, rpoly = _content_pp(rpoly, var)
        A, B = B, _main_coeffs(rpoly, var)
