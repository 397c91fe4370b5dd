"""Tests for the target module."""

from fractions import Fraction
from math import log2

import pytest

from app.core.exceptions import AngleParseError, PrecisionError
from app.modules.numtheory import RandomSource
from app.modules.ring import ONE_SCALAR, ZERO_SCALAR
from app.modules.synth.state import StateVec
from app.modules.target import (
    AngleSpec,
    bound_holds,
    build_target,
    choose_k,
    error_bound,
    exact_error,
    floor_scaled_trig,
    phase_error_ok,
    pi_bounds,
    reduce_phase,
)

PI_OVER_8 = AngleSpec.parse("pi/8")


@pytest.mark.parametrize(
    "text, kind, multiple, decimal",
    [
        ("pi", "pi_fraction", Fraction(1), Fraction(0)),
        ("pi/8", "pi_fraction", Fraction(1, 8), Fraction(0)),
        ("3*pi/8", "pi_fraction", Fraction(3, 8), Fraction(0)),
        ("-pi/4", "pi_fraction", Fraction(-1, 4), Fraction(0)),
        ("0.3926990816987241", "radians", Fraction(0), Fraction("0.3926990816987241")),
        ("1e-3", "radians", Fraction(0), Fraction(1, 1000)),
        ("0.5-pi/4", "radians", Fraction(-1, 4), Fraction(1, 2)),
    ],
)
def test_parse_angles(text, kind, multiple, decimal):
    angle = AngleSpec.parse(text)
    assert angle.kind == kind
    assert angle.pi_multiple == multiple
    assert angle.decimal == decimal
    assert AngleSpec.parse(str(angle)) == angle


@pytest.mark.parametrize(
    "text", ["", "pie", "pi/0", "2pi", "1.2.3", "pi*2", "--1", "1e999999999", "1e-999999999+pi", "2E+0001000"]
)
def test_parse_rejects(text):
    with pytest.raises(AngleParseError):
        AngleSpec.parse(text)


def test_cos_sin_enclosures_contain_known_values():
    (c_lo, c_hi), (s_lo, s_hi) = AngleSpec.parse("pi/4").cos_sin(80)
    assert c_lo ** 2 <= Fraction(1, 2) <= c_hi ** 2
    assert s_lo ** 2 <= Fraction(1, 2) <= s_hi ** 2
    assert c_hi - c_lo < Fraction(1, 1 << 70)
    (c_lo, c_hi), (s_lo, s_hi) = AngleSpec.parse("pi/6").cos_sin(80)
    assert s_lo <= Fraction(1, 2) <= s_hi


def test_pi_bounds():
    lo, hi = pi_bounds(100)
    assert lo < Fraction(314159265358979323846, 10 ** 20) + Fraction(1, 10 ** 19)
    assert lo < hi and hi - lo < Fraction(1, 1 << 95)


@pytest.mark.parametrize(
    "text, reduced, octant",
    [
        ("pi/8", Fraction(1, 8), 0),
        ("pi/2", Fraction(0), 2),
        ("3*pi/8", Fraction(1, 8), 1),
        ("pi/4", Fraction(0), 1),
        ("-pi/8", Fraction(1, 8), 7),
        ("17*pi/4", Fraction(0), 1),
    ],
)
def test_reduce_phase_exact(text, reduced, octant):
    angle, t = reduce_phase(AngleSpec.parse(text))
    assert angle.pi_multiple == reduced
    assert angle.is_exact()
    assert t == octant


def test_reduce_phase_decimal():
    angle, t = reduce_phase(AngleSpec.parse("2.0"))
    # 2.0 rad lies between 2π/4 and 3π/4
    assert t == 2
    assert angle.decimal == 2 and angle.pi_multiple == Fraction(-1, 2)
    lo, hi = angle.interval(64)
    pi_hi = pi_bounds(64)[1]
    assert 0 <= lo and hi < pi_hi / 4

    angle, t = reduce_phase(AngleSpec.parse("-0.1"))
    assert t == 7
    lo, _ = angle.interval(64)
    assert lo > 0


@pytest.mark.parametrize(
    "text, k, expected",
    [("0", 5, (32, 0)), ("pi/8", 3, (7, 3)), ("pi/4", 4, (11, 11)), ("pi/4", 2, (2, 2)), ("pi/6", 3, (6, 4))],
)
def test_floor_scaled_trig(text, k, expected):
    angle = AngleSpec.parse(text)
    assert floor_scaled_trig(angle, k) == expected


def test_floor_scaled_trig_decimal_matches_pi_form():
    decimal = AngleSpec.parse("0.39269908169872414")  # just below π/8
    assert floor_scaled_trig(decimal, 9) == (473, 195)
    assert floor_scaled_trig(PI_OVER_8, 9) == (473, 195)


def test_build_target_zero_phase(rng):
    target = build_target(AngleSpec.zero(), 6, rng)
    assert target.gamma == ONE_SCALAR
    assert target.m == 0
    assert target.v == StateVec.basis(4)


def test_build_target_examples(rng):
    target = build_target(PI_OVER_8, 3, rng)
    assert target.m == 6
    assert target.quad.as_tuple() == (2, 1, 1, 0)
    assert target.v.is_unit()
    assert target.v[1] == ZERO_SCALAR

    target = build_target(AngleSpec.parse("pi/4"), 2, rng)
    assert (target.f_c, target.f_s) == (2, 2)
    assert target.m == 8
    assert target.quad.as_tuple() == (2, 2, 0, 0)


def test_build_target_invariants():
    rng = RandomSource(11)
    for trial in range(100):
        k = rng.randint(1, 40)
        phi = AngleSpec.pi_fraction(Fraction(rng.randint(0, 999), 4000))
        target = build_target(phi, k, rng)
        assert target.v.is_unit()
        assert target.v[0] == target.gamma
        assert target.v[1].is_zero()
        assert target.m <= 3 * (1 << k)
        assert phase_error_ok(target)
        assert target.v.lde() <= 2 * k


def test_error_bound_values():
    assert abs(float(error_bound(8)) - 0.10526) < 1e-4
    assert abs(float(error_bound(9)) - 0.07438) < 1e-4
    assert abs(float(error_bound(3)) - 0.6139) < 1e-4
    values = [error_bound(k) for k in range(1, 60)]
    assert all(a > b for a, b in zip(values, values[1:]))


@pytest.mark.parametrize("eps, k", [("0.1", 9), ("1e-10", 68), ("1e-6", 42)])
def test_choose_k_examples(eps, k):
    assert choose_k(eps) == k


def test_choose_k_boundary_and_cap():
    rng = RandomSource(4)
    previous = None
    for _ in range(1000):
        exponent = Fraction(rng.randint(1000, 12000), 1000)
        eps = Fraction(10 ** 9, 10 ** 9 + rng.randint(0, 10 ** 9)) * Fraction(1, 10 ** int(exponent))
        k = choose_k(eps)
        assert bound_holds(k, eps)
        assert k == 1 or not bound_holds(k - 1, eps)
        assert k <= 2 * log2(1 / float(eps)) + 4
        if previous is not None and previous[0] < eps:
            assert previous[1] >= k
        previous = (eps, k)


@pytest.mark.parametrize("eps", ["0", "1", "-0.5", "abc", "nan", "1e-999999999", "5e-1000"])
def test_choose_k_rejects(eps):
    with pytest.raises(PrecisionError):
        choose_k(eps)


def test_exact_error(rng):
    assert exact_error(build_target(AngleSpec.zero(), 5, rng)) == 0
    value = exact_error(build_target(PI_OVER_8, 3, rng))
    assert 0 < value <= Fraction(6139, 10000) + Fraction(1, 10000)


def test_exact_error_below_a_priori_bound():
    rng = RandomSource(23)
    for _ in range(100):
        k = rng.randint(1, 60)
        phi = AngleSpec.pi_fraction(Fraction(rng.randint(1, 999), 4000))
        target = build_target(phi, k, rng)
        assert float(exact_error(target)) <= float(error_bound(k)) * (1 + 1e-12)


def test_moderate_exponents_are_accepted():
    assert AngleSpec.parse("3e-999").decimal == Fraction(3, 10**999)
    assert AngleSpec.parse("0.25E+002").decimal == 25
    assert choose_k("1e-20") == choose_k(Fraction(1, 10**20))
