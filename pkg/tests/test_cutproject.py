"""Window acceptance, point enumeration, torus coordinates, frequency picks."""

import math
import random
from fractions import Fraction

import pytest

from fibfourier.cutproject import (
    ApproxWindow,
    Frequency,
    Window,
    enumerate_model_set,
    frequency_representatives,
    torus_coords,
)
from fibfourier.ztau import QTau, TAU, TAU_STAR, ZTau


def _pairs(slice_):
    return [(p.algebraic.a, p.algebraic.b) for p in slice_.points]


def test_default_window():
    w = Window.default()
    lo, hi = w.bounds_float()
    assert lo == -1.0
    assert hi == pytest.approx(TAU - 1.0, abs=1e-15)
    assert w.includes_lo and not w.includes_hi
    assert w.length() == QTau(0, 1)


def test_shifted_window():
    w = Window.default().shifted(QTau(Fraction(1, 2)))
    lo, hi = w.bounds_float()
    assert lo == pytest.approx(-0.5, abs=1e-15)
    assert hi == pytest.approx(TAU - 0.5, abs=1e-15)
    assert w.length() == QTau(0, 1)


def test_window_rejects_empty_interval():
    with pytest.raises(ValueError):
        Window(QTau(1), QTau(1))
    with pytest.raises(ValueError):
        Window(QTau(2), QTau(-1))
    with pytest.raises(ValueError):
        ApproxWindow(2.0, -1.0)


def test_singular_pair_swaps_between_closures():
    # -1 and -tau both project onto window endpoints; the half-open side
    # decides which one is kept
    default = Window.default()
    alternate = Window(QTau(-1), QTau(-1, 1), includes_lo=False, includes_hi=True)
    minus_one = ZTau(-1, 0)
    minus_tau = ZTau(0, -1)
    assert default.contains(minus_one)
    assert not default.contains(minus_tau)
    assert alternate.contains(minus_tau)
    assert not alternate.contains(minus_one)


def test_singular_pair_is_the_only_difference():
    default = enumerate_model_set(Window.default(), -10.0, 10.0)
    alternate = enumerate_model_set(
        Window(QTau(-1), QTau(-1, 1), includes_lo=False, includes_hi=True),
        -10.0,
        10.0,
    )
    d = {(p.algebraic.a, p.algebraic.b) for p in default.points}
    a = {(p.algebraic.a, p.algebraic.b) for p in alternate.points}
    assert d - a == {(-1, 0)}
    assert a - d == {(0, -1)}


def test_enumeration_examples():
    assert _pairs(enumerate_model_set(Window.default(), 0.0, 5.0)) == [
        (0, 0),
        (0, 1),
        (1, 1),
        (1, 2),
    ]
    assert _pairs(enumerate_model_set(Window.default(), -3.0, 0.0)) == [
        (-1, -1),
        (-1, 0),
        (0, 0),
    ]


def test_enumeration_sorted_and_in_window():
    sl = enumerate_model_set(Window.default(), -200.0, 200.0)
    assert sl.values == sorted(sl.values)
    assert all(Window.default().contains(p.algebraic) for p in sl.points)
    assert all(-200.0 <= v <= 200.0 for v in sl.values)


def test_gaps_and_tile_tags():
    sl = enumerate_model_set(Window.default(), -300.0, 300.0)
    for p, q in zip(sl.points, sl.points[1:]):
        gap = q.value - p.value
        if abs(gap - 1.0) < 1e-9:
            assert p.tile == "short"
        elif abs(gap - TAU) < 1e-9:
            assert p.tile == "long"
        else:  # pragma: no cover - would indicate a broken enumeration
            pytest.fail(f"unexpected gap {gap}")


def test_tile_tag_matches_internal_subwindow():
    # a point starts a long tile exactly when its internal image lies in
    # [tau - 2, tau - 1)
    sub = Window(QTau(-2, 1), QTau(-1, 1))
    sl = enumerate_model_set(Window.default(), -100.0, 100.0)
    for p in sl.points:
        assert (p.tile == "long") == sub.contains(p.algebraic)


def test_tile_ratio_approaches_tau():
    sl = enumerate_model_set(Window.default(), 0.0, 1.0e4)
    longs = sum(1 for p in sl.points if p.tile == "long")
    shorts = sum(1 for p in sl.points if p.tile == "short")
    assert abs(longs / shorts - TAU) / TAU < 0.02


def test_torus_coords_examples():
    u, v = torus_coords(0.0)
    assert (u, v) == (0.0, 0.0)
    u, v = torus_coords(1.0)
    assert u == pytest.approx(0.2763932022, abs=1e-9)
    assert v == pytest.approx(0.4472135955, abs=1e-9)


def test_torus_coords_additive_mod_one():
    rng = random.Random(11)

    def circ(a, b):
        d = abs(a - b) % 1.0
        return min(d, 1.0 - d)

    for _ in range(400):
        s = rng.uniform(-500.0, 500.0)
        t = rng.uniform(-500.0, 500.0)
        us, vs = torus_coords(s)
        ut, vt = torus_coords(t)
        u, v = torus_coords(s + t)
        assert circ(u, (us + ut) % 1.0) < 1e-9
        assert circ(v, (vs + vt) % 1.0) < 1e-9


def test_frequency_representatives_small():
    assert [(k.half_a, k.half_b) for k in frequency_representatives(1).reps] == [(0, 0)]
    reps3 = [(k.half_a, k.half_b) for k in frequency_representatives(3).reps]
    assert sorted(reps3) == [
        (-1, -1),
        (-1, 0),
        (-1, 1),
        (0, -1),
        (0, 0),
        (0, 1),
        (1, -1),
        (1, 0),
        (1, 1),
    ]


def test_frequency_representatives_even_class():
    # for n = 2 the residue class (1, 1) is its own negative; the minimiser
    # has |k| = (tau - 1)/2
    reps2 = frequency_representatives(2).reps
    assert len(reps2) == 4
    diag = [k for k in reps2 if (k.half_a % 2, k.half_b % 2) == (1, 1)]
    assert len(diag) == 1
    assert abs(diag[0].value) == pytest.approx((TAU - 1.0) / 2.0, abs=1e-12)


@pytest.mark.parametrize("n", [1, 2, 3, 5, 9])
def test_frequency_representatives_hit_every_class_once(n):
    fs = frequency_representatives(n)
    assert fs.n == n
    classes = {(k.half_a % n, k.half_b % n) for k in fs.reps}
    assert len(fs.reps) == n * n
    assert len(classes) == n * n


def _norm4(a, b):
    # 4 (k^2 + k'^2) for k = (a + b tau)/2
    return 2 * a * a + 2 * a * b + 3 * b * b


@pytest.mark.parametrize("n", [2, 3, 5])
def test_frequency_representatives_are_norm_minimal(n):
    for k in frequency_representatives(n).reps:
        base = _norm4(k.half_a, k.half_b)
        for di in range(-2, 3):
            for dj in range(-2, 3):
                cand = _norm4(k.half_a + di * n, k.half_b + dj * n)
                assert cand >= base


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_frequency_representatives_negation_closed_odd(n):
    reps = {(k.half_a, k.half_b) for k in frequency_representatives(n).reps}
    assert (0, 0) in reps
    assert {(-a, -b) for a, b in reps} == reps


def test_frequency_value_phase_and_label():
    k = Frequency(1, -1)
    assert k.qtau == QTau(Fraction(1, 2), Fraction(-1, 2))
    assert k.value == pytest.approx((1.0 - TAU) / 2.0, abs=1e-12)
    assert k.value_star == pytest.approx((1.0 - TAU_STAR) / 2.0, abs=1e-12)
    assert (-k) == Frequency(-1, 1)
    assert Frequency(0, 0).label == "0"
    assert k.label == "(+1-1tau)/2"
    assert Frequency(0, 2).label == "(+0+2tau)/2"
    # phase is linear in t with slope 2 delta k
    assert k.phase(0.0) == 0.0
    assert k.phase(2.0) == pytest.approx(2.0 * k.phase(1.0), abs=1e-12)


def test_approx_window_matches_exact_enumeration():
    aw = ApproxWindow(-1.0, TAU - 1.0)
    exact = enumerate_model_set(Window.default(), 0.0, 100.0)
    approx = enumerate_model_set(aw, 0.0, 100.0)
    assert _pairs(exact) == _pairs(approx)
    assert len(exact.points) == 73


def test_approx_window_endpoint_snapping():
    aw = ApproxWindow(0.0, 1.0)
    # the internal point 1 lands on the open upper endpoint
    assert not aw.contains_star(1, 0)
    assert ApproxWindow(0.0, 1.0, includes_hi=True).contains_star(1, 0)
    assert aw.contains_star(0, 0)
    # a value a hair below the endpoint is kept regardless of closure
    assert aw.contains_star(2, -1) == (2.0 + -1.0 * TAU < 1.0)
