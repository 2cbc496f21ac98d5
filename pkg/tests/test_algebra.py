"""Exact arithmetic kernels: cyclotomic numbers, matrices, polynomials,
truncated series, univariate factorization."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from equisym.algebra import (
    CycNum,
    FMatrix,
    MPoly,
    TruncSeries,
    UPoly,
    common_field,
    cyclo_field,
    cyclotomic_poly,
    euler_phi,
    imag_unit,
    mat_inverse,
    mpoly_gcd,
    roots_in_field,
    sqrt2,
    sqrt5,
    sqrt_minus3,
    upoly_factor_q,
)

Q = cyclo_field(1)


# --- cyclotomic fields ---------------------------------------------------------

def test_cyclotomic_poly_small():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


def test_euler_phi():
    assert [euler_phi(m) for m in (1, 2, 3, 4, 8, 12, 20)] == [1, 1, 2, 2, 4, 4, 8]


def test_zeta_order():
    for m in (3, 4, 5, 7, 8, 9, 12):
        f = cyclo_field(m)
        z = f.zeta()
        acc = f.one()
        for _ in range(m):
            acc = acc * z
        assert acc == f.one()
        if m > 1:
            assert z ** (m // 2 if m % 2 == 0 else 1) != f.one() or m == 2


def test_fixed_radicals():
    assert (sqrt2() * sqrt2()).rational_value() == 2
    assert (sqrt5() * sqrt5()).rational_value() == 5
    assert (sqrt_minus3() * sqrt_minus3()).rational_value() == -3
    assert (imag_unit() * imag_unit()).rational_value() == -1


def test_inverse_roundtrip():
    f = cyclo_field(7)
    a = f.zeta(3) + f.from_rational(Fraction(2, 5))
    assert (a * a.inverse()) == f.one()


def test_common_field_embed():
    f3, f4 = cyclo_field(3), cyclo_field(4)
    f = common_field(f3, f4)
    assert f.conductor == 12
    a = f.embed(f3.zeta())
    assert a ** 3 == f.one() and a != f.one()


def test_galois():
    f = cyclo_field(5)
    a = f.zeta() + f.zeta(4)  # fixed by z -> z^4
    assert a.galois(4) == a
    assert f.zeta().galois(2) == f.zeta(2)


# --- matrices ------------------------------------------------------------------

def test_matrix_inverse_identity():
    f = cyclo_field(8)
    m = FMatrix(f, [[f.zeta(), f.one()], [f.zero(), f.from_rational(2)]])
    assert m * m.inverse() == FMatrix.identity(f, 2)
    assert mat_inverse(m) == m.inverse()


def test_matrix_det_trace():
    m = FMatrix(Q, [[1, 2], [3, 4]])
    assert m.det().rational_value() == -2
    assert m.trace().rational_value() == 5


def test_singular_inverse_raises():
    m = FMatrix(Q, [[1, 2], [2, 4]])
    with pytest.raises((ZeroDivisionError, ValueError, ArithmeticError)):
        m.inverse()


# --- multivariate polynomials ----------------------------------------------------

def _p(s, nvars=2, m=1):
    from equisym.cli import parse_poly
    return parse_poly(s, nvars, m)


def test_mpoly_arith():
    x = MPoly.variable(Q, 2, 0)
    y = MPoly.variable(Q, 2, 1)
    assert (x + y) * (x - y) == x * x - y * y
    assert (x + y) ** 3 == x**3 + 3 * x**2 * y + 3 * x * y**2 + y**3


def test_mpoly_gcd():
    g = _p("x^2 + y^2")
    a = g * _p("x^3 - y")  # non-homogeneous cofactor is fine for gcd
    b = g * _p("x + y")
    d = mpoly_gcd(a, b)
    assert d.monic() == g.monic()


def test_mpoly_eval_compose():
    p = _p("x^2 + 3xy + y^2")
    v = p.eval([Q.from_rational(2), Q.from_rational(1)])
    assert v.rational_value() == 11
    q = p.compose([_p("y"), _p("x")])
    assert q == _p("y^2 + 3xy + x^2")


def test_mpoly_derivative():
    p = _p("x^3y + y^4")
    assert p.derivative(0) == _p("3x^2y")
    assert p.derivative(1) == _p("x^3 + 4y^3")


# --- truncated series ------------------------------------------------------------

def test_series_geometric():
    # 1/(1-t) = 1 + t + t^2 + ...
    from equisym.algebra import series_div
    one = TruncSeries(Q, [1] + [0] * 9)
    den = TruncSeries(Q, [1, -1] + [0] * 8)
    s = series_div(one, den)
    assert all(c.rational_value() == 1 for c in s.coeffs)


def test_series_mul_truncates():
    a = TruncSeries(Q, [1, 1, 1])
    b = TruncSeries(Q, [1, -1, 0])
    c = a * b
    assert c.precision == 3
    assert [x.rational_value() for x in c.coeffs] == [1, 0, 0]


# --- univariate polynomials -------------------------------------------------------

def test_upoly_factor_q():
    # t^2 - 1 = (t-1)(t+1); t^2 + 1 irreducible over Q
    p = UPoly(Q, [Q.from_rational(-1), Q.zero(), Q.one()])
    fs = upoly_factor_q(p)
    assert sorted(f.degree for f, _ in fs) == [1, 1]
    p2 = UPoly(Q, [Q.one(), Q.zero(), Q.one()])
    fs2 = upoly_factor_q(p2)
    assert [f.degree for f, _ in fs2] == [2]


def test_roots_in_field():
    # t^2 + 1 has roots in Q(i) but not Q
    p = UPoly(Q, [Q.one(), Q.zero(), Q.one()])
    assert roots_in_field(p, cyclo_field(1)) == []
    rs = roots_in_field(p, cyclo_field(4))
    assert len(rs) == 2
    f4 = cyclo_field(4)
    assert set(rs) == {f4.zeta(), f4.zeta(3)}


# --- property tests ---------------------------------------------------------------

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=10)


@given(st.lists(rationals, min_size=4, max_size=4), st.lists(rationals, min_size=4, max_size=4))
@settings(max_examples=50, deadline=None)
def test_cycnum_ring_axioms(u, v):
    f = cyclo_field(5)
    a = CycNum(f, u)
    b = CycNum(f, v)
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * a == a * a + b * a


@given(st.lists(rationals, min_size=4, max_size=4))
@settings(max_examples=50, deadline=None)
def test_cycnum_inverse(u):
    f = cyclo_field(5)
    a = CycNum(f, u)
    if not a.is_zero():
        assert a * a.inverse() == f.one()
