"""Exact cyclotomic field arithmetic.

Elements of Q(zeta_m) are coefficient vectors in the power basis
1, z, ..., z^(phi(m)-1) with Fraction entries, reduced mod the m-th
cyclotomic polynomial.  All algebraic constants used elsewhere in the
package (i, sqrt(2), sqrt(5), sqrt(-3), ...) are expressed inside a
single field per computation; conductors are merged with lcm when two
operands live in different fields.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Exact division of integer polynomials (dense, low degree first)."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        if c % den[-1] != 0:
            raise ArithmeticError("non-exact integer polynomial division")
        c //= den[-1]
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return q, num


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m (low degree first), by repeated division of x^m - 1."""
    if m < 1:
        raise ValueError("conductor must be >= 1")
    poly = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly, rem = _poly_divmod_int(poly, list(cyclotomic_poly(d)))
            assert rem == [0]
    return tuple(poly)


def euler_phi(m: int) -> int:
    return len(cyclotomic_poly(m)) - 1


class CycField:
    """The cyclotomic field Q(zeta_m); m = 1 is plain Q."""

    _cache: dict[int, "CycField"] = {}

    def __new__(cls, m: int):
        if m in cls._cache:
            return cls._cache[m]
        self = super().__new__(cls)
        self.conductor = m
        self.minimal_poly = cyclotomic_poly(m)
        self.degree = len(self.minimal_poly) - 1
        # reduction table: z^k (k >= degree) as basis vectors, grown on demand
        d = self.degree
        self._red = [tuple(Fraction(-c) for c in self.minimal_poly[:-1])] if d > 0 else []
        cls._cache[m] = self
        return self

    def __repr__(self):
        return f"CycField({self.conductor})"

    def __reduce__(self):
        return (CycField, (self.conductor,))

    # --- constructors -------------------------------------------------
    def zero(self) -> "CycNum":
        return CycNum(self, (Fraction(0),) * self.degree)

    def one(self) -> "CycNum":
        return self.from_rational(1)

    def from_rational(self, q) -> "CycNum":
        v = [Fraction(0)] * self.degree
        v[0] = Fraction(q)
        return CycNum(self, tuple(v))

    def zeta(self, power: int = 1) -> "CycNum":
        """zeta_m^power as a field element."""
        power %= self.conductor
        if self.conductor == 1:
            return self.one()
        v = [Fraction(0)] * max(self.degree, power + 1)
        v[power] = Fraction(1)
        return CycNum(self, self._reduce(v))

    def _reduce(self, v: list[Fraction]) -> tuple[Fraction, ...]:
        d = self.degree
        if len(v) <= d:
            return tuple(v) + (Fraction(0),) * (d - len(v))
        while len(self._red) < len(v) - d:
            cur = self._red[-1]
            nxt = [Fraction(0)] + list(cur[:-1])
            top = cur[-1]
            if top:
                for j in range(d):
                    nxt[j] += top * -self.minimal_poly[j]
            self._red.append(tuple(nxt))
        out = list(v[:d]) + [Fraction(0)] * max(0, d - len(v))
        for k in range(d, len(v)):
            c = v[k]
            if c:
                row = self._red[k - d]
                for j in range(d):
                    if row[j]:
                        out[j] += c * row[j]
        return tuple(out)

    def embed(self, a: "CycNum") -> "CycNum":
        """Embed an element of a subfield Q(zeta_n), n | m, into this field."""
        n = a.field.conductor
        m = self.conductor
        if n == m:
            return a
        if m % n != 0:
            raise ValueError(f"Q(zeta_{n}) is not a subfield of Q(zeta_{m})")
        step = m // n
        # zeta_n -> zeta_m^step; evaluate the coordinate polynomial
        v = [Fraction(0)] * (step * (len(a.coeffs) - 1) + 1 if len(a.coeffs) > 1 else 1)
        for k, c in enumerate(a.coeffs):
            if c:
                v[step * k] += c
        return CycNum(self, self._reduce(v))


def common_field(*fields: CycField) -> CycField:
    m = 1
    for f in fields:
        m = m * f.conductor // gcd(m, f.conductor)
    return CycField(m)


class CycNum:
    """An element of a CycField: immutable coefficient vector of Fractions."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: CycField, coeffs):
        self.field = field
        self.coeffs = tuple(coeffs)
        assert len(self.coeffs) == field.degree
        self._hash = None

    # --- coercion ------------------------------------------------------
    def _pair(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        if not isinstance(other, CycNum):
            return None, None
        if other.field is self.field:
            return self, other
        big = common_field(self.field, other.field)
        return big.embed(self), big.embed(other)

    # --- arithmetic ----------------------------------------------------
    def __add__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return CycNum(a.field, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.field, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return CycNum(a.field, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        d = a.field.degree
        if d == 1:
            return CycNum(a.field, (a.coeffs[0] * b.coeffs[0],))
        prod = [Fraction(0)] * (2 * d - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return CycNum(a.field, a.field._reduce(prod))

    __rmul__ = __mul__

    def __truediv__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.field.from_rational(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "CycNum":
        """1/self via extended gcd of the coordinate polynomial with Phi_m."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        if self.field.degree == 1:
            return CycNum(self.field, (1 / self.coeffs[0],))
        # extended Euclid in Q[x]: r0 = Phi_m, r1 = self
        r0 = [Fraction(c) for c in self.field.minimal_poly]
        r1 = list(self.coeffs)
        while len(r1) > 1 and r1[-1] == 0:
            r1.pop()
        if len(r1) == 1:
            v = [Fraction(0)] * self.field.degree
            v[0] = 1 / r1[0]
            return CycNum(self.field, tuple(v))
        s0, s1 = [Fraction(0)], [Fraction(1)]  # coeffs of self in the combination
        while True:
            # divide r0 by r1
            q = [Fraction(0)] * max(1, len(r0) - len(r1) + 1)
            rem = list(r0)
            for i in range(len(rem) - len(r1), -1, -1):
                c = rem[i + len(r1) - 1] / r1[-1]
                q[i] = c
                if c:
                    for j, d0 in enumerate(r1):
                        rem[i + j] -= c * d0
            while len(rem) > 1 and rem[-1] == 0:
                rem.pop()
            # s2 = s0 - q * s1
            s2 = [Fraction(0)] * max(len(s0), len(q) + len(s1) - 1)
            for i, c in enumerate(s0):
                s2[i] += c
            for i, qc in enumerate(q):
                if qc:
                    for j, sc in enumerate(s1):
                        s2[i + j] -= qc * sc
            while len(s2) > 1 and s2[-1] == 0:
                s2.pop()
            if len(rem) == 1 and rem[0] == 0:
                raise ZeroDivisionError("zero divisor (input not reduced mod Phi_m?)")
            if len(rem) == 1:  # nonzero constant: done
                inv = [c / rem[0] for c in s2]
                return CycNum(self.field, self.field._reduce(inv))
            r0, r1 = r1, rem
            s0, s1 = s1, s2

    # --- predicates / queries -------------------------------------------
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"not rational: {self}")
        return self.coeffs[0]

    def galois(self, k: int) -> "CycNum":
        """Apply sigma_k: zeta -> zeta^k (requires gcd(k, m) = 1)."""
        m = self.field.conductor
        if gcd(k, m) != 1:
            raise ValueError("not a Galois automorphism")
        d = self.field.degree
        v = [Fraction(0)] * (((d - 1) * k % m) + 1 if d > 1 else 1)
        v = [Fraction(0)] * (max((j * k) % m for j in range(d)) + 1)
        for j, c in enumerate(self.coeffs):
            if c:
                v[(j * k) % m] += c
        return CycNum(self.field, self.field._reduce(v))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CycNum):
            return NotImplemented
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.field.conductor, self.coeffs))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    # --- text form -------------------------------------------------------
    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "z" if k == 1 else f"z^{k}"
                if c == 1:
                    terms.append(mono)
                elif c == -1:
                    terms.append(f"-{mono}")
                else:
                    terms.append(f"{c}*{mono}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def __repr__(self):
        return f"Cyc({self}; m={self.field.conductor})"


# --- named constants --------------------------------------------------------

def sqrt2(field: CycField | None = None) -> CycNum:
    """sqrt(2) = zeta_8 - zeta_8^3 (fixed sign choice)."""
    f8 = CycField(8)
    val = f8.zeta(1) - f8.zeta(3)
    return field.embed(val) if field is not None else val


def sqrt5(field: CycField | None = None) -> CycNum:
    """sqrt(5) = zeta_5 - zeta_5^2 - zeta_5^3 + zeta_5^4 (Gauss sum)."""
    f5 = CycField(5)
    val = f5.zeta(1) - f5.zeta(2) - f5.zeta(3) + f5.zeta(4)
    return field.embed(val) if field is not None else val


def sqrt_minus3(field: CycField | None = None) -> CycNum:
    """sqrt(-3) = 1 + 2*zeta_3."""
    f3 = CycField(3)
    val = f3.one() + 2 * f3.zeta(1)
    return field.embed(val) if field is not None else val


def imag_unit(field: CycField | None = None) -> CycNum:
    f4 = CycField(4)
    val = f4.zeta(1)
    return field.embed(val) if field is not None else val


def cyclo_field(m: int) -> CycField:
    """Public constructor (m >= 1)."""
    if m < 1:
        raise ValueError("conductor must be a positive integer")
    return CycField(m)


def cyc_inverse(a: CycNum) -> CycNum:
    return a.inverse()
