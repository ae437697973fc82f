import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import qracah as qr
from conftest import one_var_racah, one_var_trig


def complex_in_disc(radius):
    return st.tuples(
        st.floats(-radius, radius, allow_nan=False),
        st.floats(-radius, radius, allow_nan=False),
    ).map(lambda ab: complex(*ab))


def test_qpoch_basic_frozen():
    assert qr.qpoch(0.7 + 0.1j, 0.5, 0) == 1
    assert abs(qr.qpoch(0.5, 0.5, 2) - 0.375) < 1e-15  # (1-0.5)(1-0.25)
    with pytest.raises(ValueError):
        qr.qpoch(0.5, 0.5, -1)


@settings(max_examples=60, deadline=None)
@given(a=complex_in_disc(2.0), q=complex_in_disc(2.0), m=st.integers(0, 30))
def test_qpoch_shift_identity(a, q, m):
    lhs = qr.qpoch(a, q, m + 1)
    rhs = (1 - a * q ** m) * qr.qpoch(a, q, m)
    assert abs(lhs - rhs) <= 1e-14 * max(abs(lhs), abs(rhs), 1.0)


def test_poch_basic_frozen():
    assert qr.poch(2.5, 0) == 1
    assert qr.poch(1, 4) == 24  # (1)_m = m!


def test_qpoch_to_poch_limit():
    a, m = 1.7, 5
    errs = []
    for eps in (1e-2, 1e-3, 1e-4):
        q = math.exp(-eps)
        errs.append(abs(qr.qpoch(q ** a, q, m) / (1 - q) ** m - qr.poch(a, m)))
    assert errs[0] > errs[1] > errs[2]
    assert errs[-1] < 1e-2 * qr.poch(a, m)


@settings(max_examples=40, deadline=None)
@given(
    a1=complex_in_disc(2.0),
    a2=complex_in_disc(2.0),
    qre=st.floats(0.2, 0.9),
    qim=st.floats(-0.3, 0.3),
    N=st.integers(0, 10),
)
def test_qpoch_reversal_transformation(a1, a2, qre, qim, N):
    """(a1 q^-N; q)_N / (a2 q^-N; q)_N = (a1/a2)^N (q/a1; q)_N / (q/a2; q)_N."""
    q = complex(qre, qim)
    if abs(a1) < 1e-2 or abs(a2) < 1e-2:
        return
    lhs_num = qr.qpoch(a1 * q ** (-N), q, N)
    lhs_den = qr.qpoch(a2 * q ** (-N), q, N)
    rhs_num = qr.qpoch(q / a1, q, N)
    rhs_den = qr.qpoch(q / a2, q, N)
    if min(abs(lhs_num), abs(lhs_den), abs(rhs_num), abs(rhs_den)) < 1e-3:
        return  # too close to a pole/zero of the rational identity
    lhs = lhs_num * rhs_den
    rhs = (a1 / a2) ** N * rhs_num * lhs_den
    assert abs(lhs - rhs) <= 1e-10 * max(abs(lhs), abs(rhs), 1.0)


def test_trig_poch_empty_and_consistency(rng):
    assert qr.trig_poch_sin(0.3, 0.7, 0) == 1
    assert qr.trig_poch_cos(0.3, 0.7, 0) == 1
    alpha = 0.61
    for xi in rng.uniform(-3, 3, 8):
        lhs = 1 - np.exp(1j * alpha * xi)
        rhs = -2j * np.exp(1j * alpha * xi / 2) * np.sin(alpha * xi / 2)
        assert abs(lhs - rhs) < 1e-14


def test_trig_poch_renormalized_limit():
    a, m = 0.8, 4
    errs = []
    for alpha in (1e-1, 1e-2, 1e-3):
        val = (2 / alpha) ** m * qr.trig_poch_sin(a, alpha, m)
        errs.append(abs(val - qr.poch(a, m)))
    assert errs[0] > errs[1] > errs[2]


def test_phi43_degree_zero_and_termination():
    p = one_var_trig()
    assert qr.phi43_monic_aw(0, 0.3 + 0.4j, p) == pytest.approx(1.0)
    # the series terminates: the q^-lam numerator kills every later term
    assert abs(qr.qpoch(p.q ** (-3), p.q, 4)) < 1e-12


def test_phi43_degree_one_against_projection_oracle():
    """Oracle: p_1 = m_1 - <m_1, 1>/<1, 1> via plain grid sums."""
    p = one_var_trig()
    tab = qr.weight_table(p)
    grid = qr.grid_points(p)[:, 0]
    m1 = grid + 1 / grid
    c = np.sum(m1 * tab.delta) / tab.one_one
    for z in (0.7 + 0.2j, 1.3 - 0.5j):
        expected = z + 1 / z - c
        got = qr.phi43_monic_aw(1, z, p)
        assert abs(got - expected) < 1e-12 * max(1, abs(expected))


def test_phi43_vanishes_on_grid_above_truncation():
    p = one_var_trig(N=5)
    for nu in range(p.N + 1):
        z = p.t_a * p.q ** nu
        assert abs(qr.phi43_monic_aw(p.N + 1, z, p)) < 1e-10


def test_f43_degree_zero_and_one():
    rp = one_var_racah()
    assert qr.f43_monic_wilson(0, 0.3, rp) == pytest.approx(1.0)
    # oracle: monic degree one in x^2 from the grid projection
    tab = qr.racah_table(rp)
    xs = np.array([rp.g_a + k for k in range(rp.N + 1)])
    m1 = xs ** 2
    c = np.sum(m1 * tab.delta.real) / tab.one_one.real
    for x in (rp.g_a, -rp.g_a, 1.7):
        expected = x ** 2 - c
        got = qr.f43_monic_wilson(1, x, rp)
        assert abs(got - expected) < 1e-11 * max(1, abs(expected))


def test_phi43_tends_to_f43():
    rp = one_var_racah(N=3)
    x = rp.g_a + 2
    for lam in (1, 2):
        errs = []
        for eps in (1e-2, 1e-3, 1e-4):
            p = qr.lift_racah(rp, eps)
            val = (1 - p.q) ** (-2 * lam) * qr.phi43_monic_aw(lam, p.q ** x, p)
            errs.append(abs(val - qr.f43_monic_wilson(lam, x, rp)))
        assert errs[0] > errs[1] > errs[2]


def test_pole_is_reported():
    # crafted non-generic set with vanishing balancing factor
    bad = qr.ParamSet(n=1, N=2, q=0.5, t=1.0, t0=2.0, t1=0.5, t2=1.0, t3=1.0)
    with pytest.raises(qr.PoleError):
        qr.phi43_monic_aw(1, 0.3, bad)
