"""Exact square matrices over a cyclotomic field."""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CycField, CycNum, common_field


class FMatrix:
    """Immutable n x n matrix of CycNum."""

    __slots__ = ("field", "n", "rows", "_hash")

    def __init__(self, field: CycField, rows):
        conv = []
        for row in rows:
            r = []
            for e in row:
                if not isinstance(e, CycNum):
                    e = field.from_rational(e)
                elif e.field is not field:
                    e = field.embed(e)
                r.append(e)
            conv.append(tuple(r))
        self.field = field
        self.rows = tuple(conv)
        self.n = len(self.rows)
        assert all(len(r) == self.n for r in self.rows), "matrix must be square"
        self._hash = None

    @classmethod
    def identity(cls, field: CycField, n: int) -> "FMatrix":
        one, zero = field.one(), field.zero()
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, field: CycField, entries) -> "FMatrix":
        entries = list(entries)
        zero = field.zero()
        return cls(field, [[entries[i] if i == j else zero for j in range(len(entries))]
                           for i in range(len(entries))])

    def to_field(self, field: CycField) -> "FMatrix":
        if field is self.field:
            return self
        return FMatrix(field, self.rows)

    def _pair(self, other: "FMatrix"):
        if self.field is other.field:
            return self, other
        f = common_field(self.field, other.field)
        return self.to_field(f), other.to_field(f)

    def __mul__(self, other):
        if isinstance(other, FMatrix):
            a, b = self._pair(other)
            n = a.n
            bt = list(zip(*b.rows))
            rows = []
            for r in a.rows:
                row = []
                for c in bt:
                    acc = a.field.zero()
                    for x, y in zip(r, c):
                        if not x.is_zero() and not y.is_zero():
                            acc = acc + x * y
                    row.append(acc)
                rows.append(row)
            return FMatrix(a.field, rows)
        if isinstance(other, (int, Fraction, CycNum)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "FMatrix":
        if not isinstance(c, CycNum):
            c = self.field.from_rational(c)
        f = common_field(self.field, c.field)
        c = f.embed(c)
        return FMatrix(f, [[f.embed(e) * c for e in row] for row in self.rows])

    __rmul__ = scale

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        acc = FMatrix.identity(self.field, self.n)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def transpose(self) -> "FMatrix":
        return FMatrix(self.field, list(zip(*self.rows)))

    def trace(self) -> CycNum:
        acc = self.field.zero()
        for i in range(self.n):
            acc = acc + self.rows[i][i]
        return acc

    def det(self) -> CycNum:
        # fraction-free is unnecessary at n <= 3, but Gaussian works for all n
        n = self.n
        m = [list(r) for r in self.rows]
        det = self.field.one()
        for col in range(n):
            piv = None
            for r in range(col, n):
                if not m[r][col].is_zero():
                    piv = r
                    break
            if piv is None:
                return self.field.zero()
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                det = -det
            det = det * m[col][col]
            inv = m[col][col].inverse()
            for r in range(col + 1, n):
                if not m[r][col].is_zero():
                    factor = m[r][col] * inv
                    for c in range(col, n):
                        m[r][c] = m[r][c] - factor * m[col][c]
        return det

    def inverse(self) -> "FMatrix":
        n = self.n
        m = [list(r) + [self.field.one() if i == j else self.field.zero()
                        for j in range(n)] for i, r in enumerate(self.rows)]
        for col in range(n):
            piv = None
            for r in range(col, n):
                if not m[r][col].is_zero():
                    piv = r
                    break
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            m[col], m[piv] = m[piv], m[col]
            inv = m[col][col].inverse()
            m[col] = [e * inv for e in m[col]]
            for r in range(n):
                if r != col and not m[r][col].is_zero():
                    factor = m[r][col]
                    m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
        return FMatrix(self.field, [row[n:] for row in m])

    def apply(self, vec):
        """Matrix times column vector (sequence of CycNum)."""
        vec = [v if isinstance(v, CycNum) else self.field.from_rational(v) for v in vec]
        f = common_field(self.field, *[v.field for v in vec])
        vec = [f.embed(v) for v in vec]
        out = []
        for row in self.rows:
            acc = f.zero()
            for a, v in zip(row, vec):
                a = f.embed(a)
                if not a.is_zero() and not v.is_zero():
                    acc = acc + a * v
            out.append(acc)
        return out

    def char_det_coeffs(self) -> list[CycNum]:
        """Coefficients of det(I - t*A) from degree 0 up (degree n polynomial).

        Uses the elementary symmetric functions of the eigenvalues via
        principal minors: det(I - tA) = sum_k (-1)^k e_k(A) t^k.
        """
        from itertools import combinations
        n = self.n
        out = [self.field.one()]
        for k in range(1, n + 1):
            ek = self.field.zero()
            for idx in combinations(range(n), k):
                sub = FMatrix(self.field, [[self.rows[i][j] for j in idx] for i in idx])
                ek = ek + sub.det()
            out.append(ek if k % 2 == 0 else -ek)
        return out

    def projective_normalize(self) -> "FMatrix":
        """Divide by the first nonzero entry in row-major order."""
        for row in self.rows:
            for e in row:
                if not e.is_zero():
                    if e == self.field.one():
                        return self
                    inv = e.inverse()
                    return FMatrix(self.field, [[x * inv for x in r] for r in self.rows])
        raise ValueError("zero matrix has no projective representative")

    def is_rational(self) -> bool:
        return all(e.is_rational() for row in self.rows for e in row)

    def to_rational_matrix(self) -> "FMatrix":
        q = CycField(1)
        return FMatrix(q, [[q.from_rational(e.rational_value()) for e in row]
                           for row in self.rows])

    def key(self):
        """Hashable canonical key (field-independent for rational entries)."""
        return tuple(tuple(e.coeffs for e in row) for row in self.rows)

    def __eq__(self, other):
        if not isinstance(other, FMatrix):
            return NotImplemented
        a, b = self._pair(other)
        return a.rows == b.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(tuple(row) for row in self.rows))
        return self._hash

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(str(e) for e in row) + "]"
                               for row in self.rows) + "]"

    __repr__ = __str__


def mat_inverse(a: FMatrix) -> FMatrix:
    return a.inverse()
