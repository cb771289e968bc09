import random

import pytest

from qskew.scalars import (
    PrecisionError, RATF_ONE, Q, Y, RatFunc, from_rational, monomial_sy, qpow, twist, ypow,
)
from qskew.series import (
    INF, LeftFraction, SkewPoly, SkewSeries,
    commutator_defect, fraction_to_series, series_equal_upto, series_inverse, series_mul,
)

X = SkewSeries.x_power(1)
YS = SkewSeries.const(Y)


def test_xy_equals_qyx():
    # x*y has single term q*y at exponent 1
    p = X * YS
    assert list(p.terms()) == [(1, Q * Y)]
    assert commutator_defect(X, YS, Q).is_zero()


def test_mul_identity():
    rng = random.Random(0)
    for _ in range(10):
        f = _random_poly(rng).to_series(INF)
        assert (f * SkewSeries.one()).equal_upto(f, INF)
        assert (SkewSeries.one() * f).equal_upto(f, INF)


def test_yx_times_q_yinv_xinv():
    yx = SkewSeries.from_terms({1: Y})
    rhs = SkewSeries.from_terms({-1: Q * ypow(-1)})
    prod = yx * rhs
    assert prod.equal_upto(SkewSeries.one(), INF)


def test_inverse_monomial():
    xinv = series_inverse(X, order=INF)
    assert list(xinv.terms()) == [(-1, RATF_ONE)]
    yx = SkewSeries.from_terms({1: Y})
    inv = series_inverse(yx, order=INF)
    assert list(inv.terms()) == [(-1, Q * ypow(-1))]


def test_inverse_one_plus_x():
    f = SkewSeries.from_terms({0: RATF_ONE, 1: RATF_ONE})
    g = series_inverse(f, 4)
    expect = SkewSeries.from_terms({0: RATF_ONE, 1: -RATF_ONE, 2: RATF_ONE, 3: -RATF_ONE}, order=4)
    assert g == expect
    assert series_mul(f, g).equal_upto(SkewSeries.one(), 4)


def _random_poly(rng, nterms=4, span=3):
    terms = {}
    for _ in range(rng.randint(1, nterms)):
        e = rng.randint(-span, span)
        c = monomial_sy(rng.randint(-1, 1) * 6, rng.randint(0, 2), rng.randint(-3, 3))
        if c.is_zero():
            c = from_rational(1)
        terms[e] = terms.get(e, RatFunc.zero()) + c
    if all(v.is_zero() for v in terms.values()):
        terms = {0: from_rational(1)}
    return SkewPoly.from_terms(terms)


def test_multiply_back_random():
    rng = random.Random(1)
    n = 16
    for _ in range(12):
        f = _random_poly(rng)
        if f.is_zero():
            continue
        fi = series_inverse(f.to_series(INF), n)
        left = series_mul(f.to_series(INF), fi)
        right = series_mul(fi, f.to_series(INF))
        assert left.order >= n + min(0, f.lowest)
        assert left.equal_upto(SkewSeries.one(), left.order)
        assert right.equal_upto(SkewSeries.one(), right.order)


def test_mul_associative_random():
    rng = random.Random(2)
    for _ in range(8):
        f = _random_poly(rng, 3, 2).to_series(12)
        g = _random_poly(rng, 3, 2).to_series(12)
        h = _random_poly(rng, 3, 2).to_series(12)
        lhs = (f * g) * h
        rhs = f * (g * h)
        order = min(lhs.order, rhs.order)
        assert lhs.equal_upto(rhs, order)


def test_precision_soundness():
    # coefficients below a declared order never change when inputs gain precision
    rng = random.Random(3)
    for _ in range(8):
        fp = _random_poly(rng, 3, 2)
        gp = _random_poly(rng, 3, 2)
        if fp.is_zero() or gp.is_zero():
            continue
        s_lo = fp.to_series(8) * gp.to_series(8)
        s_hi = fp.to_series(14) * gp.to_series(14)
        assert s_hi.order >= s_lo.order
        assert s_lo.equal_upto(s_hi.truncate(s_lo.order), s_lo.order)


def test_degree_of_product():
    rng = random.Random(4)
    for _ in range(10):
        f = _random_poly(rng)
        g = _random_poly(rng)
        if f.is_zero() or g.is_zero():
            continue
        prod = f.to_series(INF) * g.to_series(INF)
        assert prod.lowest == f.lowest + g.lowest


def test_add_cancellation_and_truncate():
    s = (X + (-X))
    assert s.is_zero()
    geo = SkewSeries.from_terms({k: RATF_ONE for k in range(10)}, order=10)
    t = geo.truncate(3)
    assert t == SkewSeries.from_terms({0: RATF_ONE, 1: RATF_ONE, 2: RATF_ONE}, order=3)
    f = SkewSeries.from_terms({0: RATF_ONE}, order=200)
    g = SkewSeries.from_terms({0: RATF_ONE, 100: RATF_ONE}, order=200)
    assert series_equal_upto(f, g, 50)
    assert not series_equal_upto(f, g, 150)


def test_commutator_defect_xy():
    d = commutator_defect(X, YS, RATF_ONE)
    assert list(d.terms()) == [(1, (Q - RATF_ONE) * Y)]


def test_fraction_geometric():
    one = SkewPoly.one()
    q = SkewPoly.from_terms({0: RATF_ONE, 1: -RATF_ONE})
    f = LeftFraction(q, one)
    s = fraction_to_series(f, 6)
    assert s == SkewSeries.from_terms({k: RATF_ONE for k in range(6)}, order=6)
    # Q * result = P up to order
    assert series_mul(q.to_series(INF), s).equal_upto(one.to_series(INF), 6)


def test_fraction_q_geometric():
    # (1 - y x)^-1 = sum q^(i(i-1)/2) y^i x^i
    q = SkewPoly.from_terms({0: RATF_ONE, 1: -Y})
    f = LeftFraction(q, SkewPoly.one())
    s = fraction_to_series(f, 8)
    for i in range(8):
        assert s.coeff(i) == qpow(i * (i - 1) // 2) * ypow(i)


def test_fraction_normalization():
    # scale pushed into the numerator when the constant coefficient is not 1
    q = SkewPoly.from_terms({0: from_rational(2), 1: -Y})
    p = SkewPoly.from_terms({0: from_rational(2)})
    f = LeftFraction(q, p)
    assert f.den.coeff(0) == RATF_ONE
    assert f.num.coeff(0) == RATF_ONE


def test_twisted_left_multiplication():
    # x^2 * f = f.twisted(2) shifted right by 2
    f = SkewSeries.from_terms({0: Y, 1: Y})
    lhs = SkewSeries.x_power(2) * f
    rhs = f.twisted(2).shift_right(2)
    assert lhs.equal_upto(rhs, INF)
    assert lhs.coeff(2) == twist(Y, 2)


def test_precision_errors():
    f = SkewSeries.from_terms({0: RATF_ONE, 1: RATF_ONE}, order=4)
    with pytest.raises(PrecisionError):
        f.coeff(10)
    with pytest.raises(PrecisionError):
        series_inverse(f, 10)
    with pytest.raises(PrecisionError):
        f.truncate(10)
    z = SkewSeries.zero(order=5)
    with pytest.raises(PrecisionError):
        series_inverse(z, 3)
