"""Exact arithmetic in the golden-ratio ring and its two embeddings."""

import math
import random
from fractions import Fraction

import pytest

from fibfourier.ztau import (
    CONSTANTS,
    DELTA,
    DELTA_STAR,
    SQRT5,
    TAU,
    TAU_STAR,
    ArithmeticCapacityError,
    QTau,
    ZTau,
    internal_phase,
    phase,
    trace_pairing,
)


def test_constants():
    assert TAU == pytest.approx((1.0 + math.sqrt(5.0)) / 2.0, rel=1e-15)
    assert TAU_STAR == pytest.approx(1.0 - TAU, abs=1e-15)
    assert SQRT5 == pytest.approx(math.sqrt(5.0), rel=1e-15)
    # two equivalent closed forms for the slope density
    assert DELTA == pytest.approx(1.0 / (TAU**2 + 1.0), abs=1e-14)
    assert DELTA == pytest.approx(1.0 / (TAU * SQRT5), abs=1e-14)
    assert DELTA == pytest.approx(0.276393202250021, abs=1e-14)
    # the conjugate-line density is positive, not negative: tau* is negative
    # and delta* = 1/(tau*^2 + 1) = -1/(tau* sqrt5) > 0
    assert DELTA_STAR > 0.0
    assert DELTA_STAR == pytest.approx(1.0 / (TAU_STAR**2 + 1.0), abs=1e-14)
    assert DELTA_STAR == pytest.approx(0.723606797749979, abs=1e-14)
    # pairing identities that make the phase split exact
    assert DELTA + DELTA_STAR == pytest.approx(1.0, abs=1e-14)
    assert DELTA * TAU + DELTA_STAR * TAU_STAR == pytest.approx(0.0, abs=1e-14)
    assert CONSTANTS.tau == TAU
    assert CONSTANTS.delta == DELTA
    assert CONSTANTS.delta_star == DELTA_STAR


def test_multiplication_examples():
    tau = ZTau(0, 1)
    assert tau * tau == ZTau(1, 1)  # tau^2 = 1 + tau
    assert ZTau(1, 1) * ZTau(1, 1) == ZTau(2, 3)
    assert ZTau(2, 0) * ZTau(5, -7) == ZTau(10, -14)
    assert ZTau(1, 1) * ZTau(2, 1) == ZTau(3, 4)


def test_conjugation_examples():
    assert ZTau(0, 1).conj() == ZTau(1, -1)
    x = ZTau(3, 5)
    assert x.conj().conj() == x
    lhs = (ZTau(1, 1) * ZTau(2, 1)).conj()
    rhs = ZTau(1, 1).conj() * ZTau(2, 1).conj()
    assert lhs == rhs == ZTau(7, -4)


def test_conjugation_is_a_ring_automorphism():
    rng = random.Random(91)
    for _ in range(1000):
        x = ZTau(rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6))
        y = ZTau(rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6))
        assert (x + y).conj() == x.conj() + y.conj()
        assert (x * y).conj() == x.conj() * y.conj()
    # and on the rational span
    for _ in range(200):
        q = QTau(
            Fraction(rng.randint(-999, 999), rng.randint(1, 99)),
            Fraction(rng.randint(-999, 999), rng.randint(1, 99)),
        )
        r = QTau(
            Fraction(rng.randint(-999, 999), rng.randint(1, 99)),
            Fraction(rng.randint(-999, 999), rng.randint(1, 99)),
        )
        assert (q * r).conj() == q.conj() * r.conj()


def test_trace_pairing_examples():
    assert trace_pairing(QTau(Fraction(1, 2)), QTau(1)) == 1
    assert trace_pairing(QTau(0, Fraction(1, 2)), QTau(1)) == 0
    assert trace_pairing(QTau(Fraction(1, 2), Fraction(1, 2)), QTau(2, 3)) == 5


def test_trace_pairing_integrality():
    """Half-integer coordinate pairs pair integrally with the whole ring."""
    rng = random.Random(17)
    for _ in range(1000):
        k = QTau(
            Fraction(rng.randint(-200, 200), 2),
            Fraction(rng.randint(-200, 200), 2),
        )
        x = QTau(rng.randint(-10**4, 10**4), rng.randint(-10**4, 10**4))
        val = trace_pairing(k, x)
        assert isinstance(val, Fraction)
        assert val.denominator == 1


def test_embedding_examples():
    e = ZTau(0, 1).embed()
    assert e.x == pytest.approx(1.6180339887, abs=1e-9)
    assert e.x_star == pytest.approx(-0.6180339887, abs=1e-9)
    e = QTau(-1).embed()
    assert (e.x, e.x_star) == (-1.0, -1.0)
    e = QTau(Fraction(1, 2), Fraction(1, 2)).embed()
    assert e.x == pytest.approx(1.3090169944, abs=1e-9)
    assert e.x_star == pytest.approx(0.1909830056, abs=1e-9)


def test_embedding_is_multiplicative():
    rng = random.Random(3)
    for _ in range(500):
        x = ZTau(rng.randint(-999, 999), rng.randint(-999, 999))
        y = ZTau(rng.randint(-999, 999), rng.randint(-999, 999))
        p = (x * y).embed()
        ex, ey = x.embed(), y.embed()
        assert p.x == pytest.approx(ex.x * ey.x, rel=1e-10, abs=1e-10)
        assert p.x_star == pytest.approx(ex.x_star * ey.x_star, rel=1e-10, abs=1e-10)


def test_embedding_trace_and_difference():
    # x + x' = 2a + b and x - x' = b*sqrt5
    rng = random.Random(5)
    for _ in range(300):
        a = rng.randint(-10**5, 10**5)
        b = rng.randint(-10**5, 10**5)
        e = ZTau(a, b).embed()
        assert e.x + e.x_star == pytest.approx(2 * a + b, rel=1e-12, abs=1e-9)
        assert e.x - e.x_star == pytest.approx(b * SQRT5, rel=1e-12, abs=1e-9)


def test_phase_examples():
    assert phase(QTau(0), 7.3) == 0.0
    assert phase(QTau(Fraction(1, 2)), 1.0) == pytest.approx(DELTA, abs=1e-14)
    assert phase(QTau(0, Fraction(1, 2)), SQRT5) == pytest.approx(1.0, abs=1e-12)


def test_internal_phase_examples():
    assert internal_phase(QTau(0), 0.5) == 0.0
    assert internal_phase(QTau(Fraction(1, 2)), 1.0) == pytest.approx(
        DELTA_STAR, abs=1e-14
    )
    # k = tau/2 against u = 2: 2 * delta* * tau* * 2 is negative
    assert internal_phase(QTau(0, Fraction(1, 2)), 2.0) == pytest.approx(
        -0.8944271909999161, abs=1e-12
    )


def test_phase_split_recovers_pairing_mod_one():
    """phase(k, x) + internal_phase(k, x') == <k, x> up to an integer."""
    rng = random.Random(7)
    for _ in range(300):
        k = QTau(
            Fraction(rng.randint(-40, 40), 2),
            Fraction(rng.randint(-40, 40), 2),
        )
        x = ZTau(rng.randint(-50, 50), rng.randint(-50, 50))
        e = x.embed()
        total = phase(k, e.x) + internal_phase(k, e.x_star)
        expected = float(trace_pairing(k, x.qtau()))
        frac = total - expected
        assert abs(frac - round(frac)) < 1e-9


def test_exact_order_beyond_float_precision():
    # F(60) - F(59) tau and F(61) - F(60) tau straddle zero, but both
    # evaluate to exactly 0.0 in double precision
    below = ZTau(1548008755920, -956722026041)
    above = ZTau(2504730781961, -1548008755920)
    assert below.value == 0.0 and above.value == 0.0
    assert below < ZTau(0, 0)
    assert above > ZTau(0, 0)
    assert below.sign() == -1
    assert above.sign() == 1
    assert (-below) > ZTau(0, 0)


def test_order_matches_floats_when_separated():
    rng = random.Random(23)
    for _ in range(500):
        x = ZTau(rng.randint(-10**4, 10**4), rng.randint(-10**4, 10**4))
        y = ZTau(rng.randint(-10**4, 10**4), rng.randint(-10**4, 10**4))
        if abs(x.value - y.value) > 1e-6:
            assert (x < y) == (x.value < y.value)
        assert x <= x and x >= x


def test_qtau_arithmetic_and_scaling():
    q = QTau(Fraction(1, 2), Fraction(-3, 4))
    assert q.scaled_pair() == (2, -3, 4)
    assert q + q == QTau(1, Fraction(-3, 2))
    # mixed operands coerce: tau * (1 + tau) = 1 + 2 tau
    assert QTau(1, 1) * ZTau(0, 1) == QTau(1, 2)
    assert 1 - QTau(0, 1) == QTau(1, -1)
    assert QTau(Fraction(5, 3)).scaled_pair() == (5, 0, 3)


def test_equality_and_hash_across_types():
    assert ZTau(3, 0) == 3
    assert QTau(3) == ZTau(3, 0)
    assert hash(ZTau(1, 2)) == hash(ZTau(1, 2))
    assert ZTau(1, 2) != ZTau(2, 1)


def test_embedding_capacity_guard():
    with pytest.raises(ArithmeticCapacityError):
        ZTau(10**400, 0).embed()
    with pytest.raises(ArithmeticCapacityError):
        QTau(Fraction(10**400), 0).embed()
