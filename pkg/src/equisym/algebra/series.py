"""Truncated power series with exact cyclotomic coefficients."""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CycField, CycNum, common_field

DEFAULT_PRECISION = 20


class TruncSeries:
    """sum c_k t^k + O(t^precision); coeffs has length == precision."""

    __slots__ = ("field", "precision", "coeffs")

    def __init__(self, field: CycField, coeffs, precision: int | None = None):
        cs = [c if isinstance(c, CycNum) else field.from_rational(c) for c in coeffs]
        cs = [field.embed(c) if c.field is not field else c for c in cs]
        if precision is None:
            precision = len(cs)
        if precision < 1:
            raise ValueError("precision must be >= 1")
        z = field.zero()
        cs = (cs + [z] * precision)[:precision]
        self.field = field
        self.precision = precision
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, field: CycField, precision: int) -> "TruncSeries":
        return cls(field, [], precision)

    @classmethod
    def one(cls, field: CycField, precision: int) -> "TruncSeries":
        return cls(field, [field.one()], precision)

    @classmethod
    def from_poly_coeffs(cls, field: CycField, coeffs, precision: int) -> "TruncSeries":
        return cls(field, list(coeffs), precision)

    def _pair(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            other = TruncSeries(self.field, [other], self.precision)
        if not isinstance(other, TruncSeries):
            return None, None
        prec = min(self.precision, other.precision)
        field = common_field(self.field, other.field)
        a = TruncSeries(field, [field.embed(c) for c in self.coeffs[:prec]], prec)
        b = TruncSeries(field, [field.embed(c) for c in other.coeffs[:prec]], prec)
        return a, b

    def __add__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return TruncSeries(a.field, [x + y for x, y in zip(a.coeffs, b.coeffs)], a.precision)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.field, [-c for c in self.coeffs], self.precision)

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
        z = a.field.zero()
        out = [z] * a.precision
        for i, x in enumerate(a.coeffs):
            if not x.is_zero():
                for j in range(a.precision - i):
                    y = b.coeffs[j]
                    if not y.is_zero():
                        out[i + j] = out[i + j] + x * y
        return TruncSeries(a.field, out, a.precision)

    __rmul__ = __mul__

    def reciprocal(self) -> "TruncSeries":
        if self.coeffs[0].is_zero():
            raise ZeroDivisionError("series reciprocal needs a nonzero constant term")
        inv0 = self.coeffs[0].inverse()
        out = [inv0]
        for k in range(1, self.precision):
            acc = self.field.zero()
            for j in range(1, k + 1):
                if not self.coeffs[j].is_zero():
                    acc = acc + self.coeffs[j] * out[k - j]
            out.append(-inv0 * acc)
        return TruncSeries(self.field, out, self.precision)

    def __truediv__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a * b.reciprocal()

    def __eq__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a.coeffs == b.coeffs

    def __hash__(self):
        return hash((self.field.conductor, self.precision, self.coeffs))

    def coefficient(self, k: int) -> CycNum:
        return self.coeffs[k]

    def is_polynomial_within_precision(self) -> bool:
        return True  # trivially; callers inspect coefficients directly

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            cs = str(c)
            if not c.is_rational():
                cs = f"({cs})"
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and cs == "1":
                term = mono
            elif mono and cs == "-1":
                term = f"-{mono}"
            elif mono:
                term = f"{cs}*{mono}"
            else:
                term = cs
            parts.append(term)
        body = ""
        for i, p in enumerate(parts):
            if i == 0:
                body = p
            elif p.startswith("-"):
                body += f" - {p[1:]}"
            else:
                body += f" + {p}"
        tail = f"O(t^{self.precision})"
        return f"{body} + {tail}" if body else tail

    __repr__ = __str__


def series_div(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    return a / b
