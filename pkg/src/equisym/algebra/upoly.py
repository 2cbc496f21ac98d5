"""Dense univariate polynomials over a cyclotomic field.

Factorization over Q delegates to sympy's integer-coefficient machinery
(squarefree decomposition + Zassenhaus); everything else is exact
arithmetic on CycNum coefficient vectors.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

import sympy

from .cyclotomic import CycField, CycNum, common_field

_X = sympy.Symbol("x")


class UPoly:
    """coeffs run from degree 0 upward; zero polynomial has empty coeffs."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CycField, coeffs):
        cs = [c if isinstance(c, CycNum) else field.from_rational(c) for c in coeffs]
        cs = [field.embed(c) if c.field is not field else c for c in cs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, field: CycField) -> "UPoly":
        return cls(field, [])

    @classmethod
    def from_roots(cls, field: CycField, roots) -> "UPoly":
        p = cls(field, [1])
        for r in roots:
            p = p * cls(field, [-r, 1])
        return p

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def lc(self) -> CycNum:
        return self.coeffs[-1]

    def _pair(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            other = UPoly(self.field, [other])
        if not isinstance(other, UPoly):
            return None, None
        if other.field is self.field:
            return self, other
        big = common_field(self.field, other.field)
        return UPoly(big, self.coeffs), UPoly(big, other.coeffs)

    def __add__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        n = max(len(a.coeffs), len(b.coeffs))
        z = a.field.zero()
        out = [(a.coeffs[i] if i < len(a.coeffs) else z)
               + (b.coeffs[i] if i < len(b.coeffs) else z) for i in range(n)]
        return UPoly(a.field, out)

    __radd__ = __add__

    def __neg__(self):
        return UPoly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        if a.is_zero() or b.is_zero():
            return UPoly.zero(a.field)
        z = a.field.zero()
        out = [z] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if not x.is_zero():
                for j, y in enumerate(b.coeffs):
                    if not y.is_zero():
                        out[i + j] = out[i + j] + x * y
        return UPoly(a.field, out)

    __rmul__ = __mul__

    def divmod(self, other: "UPoly") -> tuple["UPoly", "UPoly"]:
        a, b = self._pair(other)
        if b.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(a.coeffs)
        z = a.field.zero()
        q = [z] * max(0, len(rem) - len(b.coeffs) + 1)
        lcinv = b.lc().inverse()
        for i in range(len(rem) - len(b.coeffs), -1, -1):
            c = rem[i + len(b.coeffs) - 1] * lcinv
            q[i] = c
            if not c.is_zero():
                for j, d in enumerate(b.coeffs):
                    rem[i + j] = rem[i + j] - c * d
        return UPoly(a.field, q), UPoly(a.field, rem)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def monic(self) -> "UPoly":
        if self.is_zero():
            return self
        inv = self.lc().inverse()
        return UPoly(self.field, [c * inv for c in self.coeffs])

    def gcd(self, other: "UPoly") -> "UPoly":
        a, b = self._pair(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def derivative(self) -> "UPoly":
        return UPoly(self.field, [k * c for k, c in enumerate(self.coeffs)][1:])

    def eval(self, x) -> CycNum:
        if isinstance(x, (int, Fraction)):
            x = self.field.from_rational(x)
        f = common_field(self.field, x.field)
        acc = f.zero()
        for c in reversed(self.coeffs):
            acc = acc * f.embed(x) + f.embed(c)
        return acc

    def __eq__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a.coeffs == b.coeffs

    def __hash__(self):
        return hash((self.field.conductor, self.coeffs))

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            cs = str(c)
            if not c.is_rational():
                cs = f"({cs})"
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and cs == "1":
                cs = ""
            elif mono and cs == "-1":
                cs = "-"
            parts.append(f"{cs}{'*' if cs not in ('', '-') and mono else ''}{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    __repr__ = __str__

    # --- sympy bridge (rational coefficients only) ------------------------
    def to_sympy(self):
        if any(not c.is_rational() for c in self.coeffs):
            raise ValueError("sympy bridge requires rational coefficients")
        return sympy.Poly([sympy.Rational(c.rational_value()) for c in reversed(self.coeffs)]
                          or [0], _X, domain="QQ")

    @classmethod
    def from_sympy(cls, poly, field: CycField) -> "UPoly":
        cs = [Fraction(c.p, c.q) for c in reversed(poly.all_coeffs())]
        return cls(field, cs)


def upoly_factor_q(p: UPoly) -> list[tuple[UPoly, int]]:
    """Irreducible factorization over Q; monic factors, deterministic order."""
    if p.field.conductor != 1:
        if all(c.is_rational() for c in p.coeffs):
            p = UPoly(CycField(1), [c.rational_value() for c in p.coeffs])
        else:
            raise ValueError("factorization is only supported over Q")
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    _, factors = p.to_sympy().factor_list()
    out = []
    for f, mult in factors:
        q = UPoly.from_sympy(f, p.field).monic()
        out.append((q, int(mult)))
    out.sort(key=lambda fm: (fm[0].degree, [ (c.rational_value().numerator,
                                              c.rational_value().denominator)
                                             for c in fm[0].coeffs ]))
    return out


def _fraction_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None."""
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = int_isqrt(n), int_isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def int_isqrt(n: int) -> int:
    from math import isqrt
    return isqrt(n)


def roots_in_field(p: UPoly, target: CycField) -> list[CycNum]:
    """Distinct roots of a rational polynomial lying in the target field.

    Rational roots come from degree-1 factors; for quadratic cyclotomic
    targets, degree-2 factors contribute roots when the discriminant is
    -1*(square) for Q(zeta_4) or -3*(square) for Q(zeta_6).
    """
    m = target.conductor
    if m not in (1, 3, 4, 6) and target.degree > 2:
        raise ValueError("roots_in_field supports fields of degree <= 2")
    if p.is_zero():
        raise ValueError("zero polynomial has every root")
    roots: list[CycNum] = []
    for f, _mult in upoly_factor_q(p):
        if f.degree == 1:
            # monic x + c -> root -c
            r = -f.coeffs[0].rational_value()
            roots.append(target.from_rational(r))
        elif f.degree == 2 and m != 1:
            b = f.coeffs[1].rational_value()
            c = f.coeffs[0].rational_value()
            disc = b * b - 4 * c
            if disc >= 0:
                # real quadratic roots never lie in the imaginary quadratic targets
                continue
            if m == 4:
                s = _fraction_sqrt(-disc)
                if s is None:
                    continue
                sq = s * target.embed(CycField(4).zeta())  # s*i = sqrt(disc)
            else:  # m in (3, 6): sqrt(disc) = s*sqrt(-3)
                s = _fraction_sqrt(-disc / 3)
                if s is None:
                    continue
                f3 = CycField(3)
                sq = s * target.embed(f3.one() + 2 * f3.zeta())
            half = Fraction(1, 2)
            roots.append((-b + sq) * half)
            roots.append((-b - sq) * half)
    # dedup while preserving order
    seen = set()
    out = []
    for r in roots:
        if r not in seen:
            seen.add(r)
            out.append(r)
    return out
