"""Scalars in Q(q): canonical form, arithmetic against rational evaluation,
series expansion, ring membership."""

from fractions import Fraction

import pytest

from affgroth.coefq import CoefQ, MINUS_ONE, ONE, Q, ZERO
from affgroth.qpoly import pgcd

import oracles


def ev(c, x):
    """Evaluate at q = x (a Fraction), the independent model of a scalar."""
    num = sum(Fraction(a) * x ** i for i, a in enumerate(c.num))
    den = sum(Fraction(a) * x ** i for i, a in enumerate(c.den))
    return x ** c.shift * num / den


POINTS = [Fraction(7, 5), Fraction(-3, 2), Fraction(2), Fraction(-5, 7)]


def assert_same(c, model):
    for x in POINTS:
        try:
            want = model(x)
        except ZeroDivisionError:  # point hit a pole; canonical c has it too
            continue
        assert ev(c, x) == want


def test_constants():
    assert ZERO.is_zero()
    assert ONE.is_one()
    assert (ONE + MINUS_ONE).is_zero()
    assert Q == CoefQ.q_power(1)
    assert CoefQ.from_int(0) is ZERO
    assert CoefQ.from_int(5) == CoefQ(0, (5,), (1,))


def test_canonical_make():
    # q^2 pulled into shift, common factor cancelled, positive leading den
    c = CoefQ.make((0, 0, 2, 2), den=(2,))
    assert (c.shift, c.num, c.den) == (2, (1, 1), (1,))
    c = CoefQ.make((1, -1), den=(-1, 0, 1))  # (1-q)/(q^2-1) = -1/(1+q)
    assert (c.shift, c.num, c.den) == (0, (-1,), (1, 1))
    c = CoefQ.make((1,), den=(0, 0, 3))
    assert (c.shift, c.num, c.den) == (-2, (1,), (3,))
    with pytest.raises(ZeroDivisionError):
        CoefQ.make((1,), den=())


def test_canonical_invariants_random():
    rng = oracles.rng_for("coefq-canon")
    for _ in range(100):
        a = oracles.random_coefq(rng, max_deg=4, shift_span=3)
        b = oracles.random_coefq(rng, max_deg=4, shift_span=3)
        for c in (a, b, a * b, a + b, a - b):
            if c.is_zero():
                assert (c.shift, c.num, c.den) == (0, (), (1,))
                continue
            assert c.num[0] != 0
            assert c.den[0] != 0 and c.den[-1] > 0
            assert len(pgcd(c.num, c.den)) == 1


def test_arithmetic_vs_evaluation():
    rng = oracles.rng_for("coefq-arith")
    for _ in range(60):
        a = oracles.random_coefq(rng, max_deg=3, shift_span=2)
        b = oracles.random_coefq(rng, max_deg=3, shift_span=2)
        assert_same(a + b, lambda x: ev(a, x) + ev(b, x))
        assert_same(a - b, lambda x: ev(a, x) - ev(b, x))
        assert_same(a * b, lambda x: ev(a, x) * ev(b, x))
        assert_same(-a, lambda x: -ev(a, x))
        if not b.is_zero():
            assert_same(a / b, lambda x: ev(a, x) / ev(b, x))
            assert (b * b.inv()).is_one()
        assert_same(a ** 3, lambda x: ev(a, x) ** 3)
        if not a.is_zero():
            assert_same(a ** -2, lambda x: ev(a, x) ** -2)


def test_equality_is_canonical():
    # same rational function through different routes compares equal
    a = (ONE - Q) * (ONE + Q)
    b = ONE - CoefQ.q_power(2)
    assert a == b and hash(a) == hash(b)
    assert CoefQ.one_minus_q_power(2) == b


def test_subs_q_inverse():
    rng = oracles.rng_for("coefq-bar")
    for _ in range(40):
        a = oracles.random_coefq(rng, max_deg=3, shift_span=2)
        bar = a.subs_q_inverse()
        assert bar.subs_q_inverse() == a
        for x in POINTS:
            assert ev(bar, x) == ev(a, 1 / x)


def test_top_exponent_and_expand_down():
    c = CoefQ.q_power(3) * CoefQ.one_minus_q_power(2)  # q^3 - q^5
    assert c.top_exponent() == 5
    assert list(c.expand_down(0)) == [(5, -1), (3, 1)]
    # 1/(1-q) = -q^{-1} - q^{-2} - ... in the descending direction
    g = CoefQ.one_minus_q_power(1).inv()
    assert g.top_exponent() == -1
    assert list(g.expand_down(-4)) == [(-1, -1), (-2, -1), (-3, -1), (-4, -1)]
    with pytest.raises(ValueError):
        ZERO.top_exponent()


def test_expand_down_matches_product():
    # partial sums of the expansion re-multiplied against the denominator
    rng = oracles.rng_for("coefq-expand")
    for _ in range(25):
        a = oracles.random_coefq(rng, max_deg=3, shift_span=2)
        if a.is_zero():
            continue
        n_min = a.top_exponent() - 6
        total = ZERO
        for n, cn in a.expand_down(n_min):
            assert cn != 0
            total = total + CoefQ.from_int(cn) * CoefQ.q_power(n)
        # difference is O(q^{n_min - 1}) downward
        diff = a - total
        if not diff.is_zero():
            assert diff.top_exponent() < n_min


def test_pairs_round_trip():
    rng = oracles.rng_for("coefq-pairs")
    for _ in range(40):
        a = oracles.random_coefq(rng, max_deg=4, shift_span=3)
        assert CoefQ.from_pairs(a.num_pairs(), a.den_pairs()) == a
    with pytest.raises(ValueError):
        CoefQ.from_pairs([[0, 1]], [[-1, 1]])


def test_divides_q_products():
    assert ONE.divides_q_products()
    assert (CoefQ.one_minus_q_power(1) * CoefQ.one_minus_q_power(2)).inv() \
        .divides_q_products()
    assert CoefQ.make((1,), den=(1, 1)).divides_q_products()  # 1+q | q^2-1
    assert CoefQ.make((1,), den=(1, 1, 1)).divides_q_products()
    assert not CoefQ.make((1,), den=(1, 1, 0, 1)).divides_q_products()
    assert not CoefQ.make((1,), den=(2, 1)).divides_q_products()
