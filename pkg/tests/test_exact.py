"""Property and hand-check tests for the exact phase arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stabq.exact import (
    ExactError,
    Gaussian,
    Phase,
    Side,
    frac_to_str,
    int_phase,
    phase_add,
    phase_diff,
    phase_in_closed_window,
    side_of,
    window_arg,
)

_fracs = st.fractions(
    min_value=-8, max_value=8, max_denominator=16
)


def _charges():
    return st.builds(Gaussian, _fracs, _fracs).filter(lambda z: not z.is_zero())


def _upper():
    return _charges().map(lambda z: z if z.in_upper_branch() else -z)


def _phases():
    return st.builds(Phase, st.integers(-3, 3), _upper())


# ---------------------------------------------------------------------------
# Gaussian arithmetic


@given(_charges(), _charges())
def test_cross_antisymmetric(z, w):
    assert z.cross(w) == -w.cross(z)


@given(_charges(), _charges(), _charges())
def test_cross_bilinear(z, w, u):
    assert (z + w).cross(u) == z.cross(u) + w.cross(u)
    assert z.cross(w + u) == z.cross(w) + z.cross(u)


@given(_charges())
def test_quarter_turns(z):
    assert z.mul_i_pow(4) == z
    assert z.mul_i_pow(2) == -z
    assert z.mul_i_pow(1).mul_i_pow(3) == z


@given(_charges(), _charges())
def test_side_of_antisymmetric(z, v):
    s1, s2 = side_of(z, v), side_of(v, z)
    if s1 is Side.ON_LINE:
        assert s2 is Side.ON_LINE
    else:
        assert s2 is not s1 and s2 is not Side.ON_LINE


@given(_charges())
def test_json_roundtrip(z):
    assert Gaussian.from_json(z.to_json()) == z


def test_frac_to_str():
    assert frac_to_str(Fraction(3)) == "3"
    assert frac_to_str(Fraction(-7, 2)) == "-7/2"


# ---------------------------------------------------------------------------
# phases


@given(_phases(), _phases())
def test_phase_order_total(p, q):
    c = p.cmp(q)
    assert c in (-1, 0, 1)
    assert q.cmp(p) == -c


@given(_phases(), _phases(), _phases())
def test_phase_order_transitive(p, q, r):
    trio = sorted([p, q, r])
    assert trio[0] <= trio[1] <= trio[2]
    assert trio[0] <= trio[2]


@given(_phases(), _phases())
def test_diff_then_add_roundtrip(p, q):
    assert phase_add(q, phase_diff(p, q)).same_as(p)


@given(_phases(), st.integers(-3, 3))
def test_plus_shifts_by_integers(p, n):
    assert phase_diff(p.plus(n), p).same_as(int_phase(n))


def test_int_phase_values():
    assert int_phase(0) < int_phase(1)
    assert phase_diff(int_phase(5), int_phase(2)).same_as(int_phase(3))
    # the phase of the value 0 has direction -(-1) on the even side
    assert int_phase(0).offset == -1


@given(_phases())
def test_direction_parity(p):
    d = p.direction()
    assert d == (p.charge if p.offset % 2 == 0 else -p.charge)


def test_make_flips_lower_half():
    z = Gaussian.of(1, -1)  # arg = -pi/4
    p = Phase.make(0, z)
    assert p.offset == -1 and p.charge == -z


# ---------------------------------------------------------------------------
# window arguments


@given(_charges(), _phases())
def test_window_arg_in_open_window(z, anchor):
    try:
        w = window_arg(z, anchor)
    except ExactError:
        return
    assert anchor < w < anchor.plus(1)
    # direction matches z up to positive scale
    assert w.direction().cross(z) == 0 and w.direction().dot(z) > 0


def test_window_arg_boundary_raises():
    anchor = int_phase(0)  # window (0, 1): directions in the upper half-plane
    with pytest.raises(ExactError):
        window_arg(Gaussian.of(1, 0), anchor)
    with pytest.raises(ExactError):
        window_arg(Gaussian.of(2, -3), anchor)


def test_window_arg_hand_values():
    # arg(1+i)/pi = 1/4 lies in (0, 1)
    w = window_arg(Gaussian.of(1, 1), int_phase(0))
    assert w.same_as(Phase(0, Gaussian.of(1, 1)))
    # same direction two windows up (the direction recurs with period two)
    w2 = window_arg(Gaussian.of(1, 1), int_phase(2))
    assert w2.same_as(Phase(2, Gaussian.of(1, 1)))
    assert phase_diff(w2, w).same_as(int_phase(2))
    # the window (1, 2) contains the opposite direction only
    with pytest.raises(ExactError):
        window_arg(Gaussian.of(1, 1), int_phase(1))
    wm = window_arg(Gaussian.of(-1, -1), int_phase(1))
    assert phase_diff(wm, w).same_as(int_phase(1))


@given(_charges(), _phases())
def test_closed_window_agrees_with_open(z, low):
    high_charge = Gaussian.of(Fraction(-1), Fraction(1, 3))
    high = phase_add(low, Phase(0, high_charge))  # low + something in (0,1)
    try:
        got = phase_in_closed_window(z, low, high)
    except ExactError:
        return
    if got is None:
        return
    assert low <= got <= high
    assert got.direction().cross(z) == 0 and got.direction().dot(z) > 0


def test_closed_window_includes_endpoints():
    low = Phase(0, Gaussian.of(1, 1))
    high = low.plus(0)
    assert phase_in_closed_window(Gaussian.of(2, 2), low, high).same_as(low)
    assert phase_in_closed_window(Gaussian.of(1, -1), low, high) is None


@settings(max_examples=50)
@given(_phases(), _phases())
def test_diff_reflects_order(p, q):
    d = phase_diff(p, q)
    zero = int_phase(0)
    assert (d.cmp(zero) > 0) == (p > q)
    assert (d.cmp(zero) == 0) == p.same_as(q)
