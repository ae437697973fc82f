"""Scalar special functions.

q-shifted factorials, ordinary Pochhammer symbols, their trigonometric
(sin/cos product) variants, and the terminating series closed forms for the
one-variable Askey-Wilson and Wilson polynomials.  These scalar routines are
the oracles against which the multivariable machinery is checked at n = 1.

All functions propagate the dtype of their arguments, so they work unchanged
with binary64 complex numbers and with numpy extended-precision scalars.
Series are accumulated in increasing term order with compensated (Kahan)
summation; the terminating series are evaluated with per-term products rather
than term ratios so that truncated parameter configurations, where individual
Pochhammer factors vanish, stay finite.
"""

from __future__ import annotations

import numpy as np

from .errors import PoleError

#: Absolute threshold below which a denominator factor counts as a pole.
POLE_TOL = 1e-12


def qpoch(a, q, m: int):
    """q-shifted factorial (a; q)_m = prod_{k=0..m-1} (1 - a q^k), with
    (a; q)_0 = 1."""
    if m < 0:
        raise ValueError("q-shifted factorial needs a nonnegative order")
    out = 1.0
    apow = a
    for _ in range(m):
        out = out * (1 - apow)
        apow = apow * q
    return out


def qpoch_many(bases, q, m: int):
    """Product of (a; q)_m over several bases a."""
    out = 1.0
    for a in bases:
        out = out * qpoch(a, q, m)
    return out


def poch(a, m: int):
    """Pochhammer symbol (a)_m = a (a+1) ... (a+m-1), with (a)_0 = 1."""
    if m < 0:
        raise ValueError("Pochhammer symbol needs a nonnegative order")
    out = 1.0
    for k in range(m):
        out = out * (a + k)
    return out


def trig_poch_sin(a, alpha, m: int):
    """Trigonometric Pochhammer symbol built from sin(alpha*(a+k)/2)."""
    if m < 0:
        raise ValueError("trigonometric Pochhammer needs a nonnegative order")
    out = 1.0
    for k in range(m):
        out = out * np.sin(alpha * (a + k) / 2)
    return out


def trig_poch_cos(a, alpha, m: int):
    """Trigonometric Pochhammer symbol built from cos(alpha*(a+k)/2)."""
    if m < 0:
        raise ValueError("trigonometric Pochhammer needs a nonnegative order")
    out = 1.0
    for k in range(m):
        out = out * np.cos(alpha * (a + k) / 2)
    return out


def _kahan_add(total, comp, term):
    y = term - comp
    t = total + y
    comp = (t - total) - y
    return t, comp


def phi43_monic_aw(lam: int, z, p):
    """Monic one-variable Askey-Wilson polynomial at the point z.

    The value is the terminating balanced 4phi3 series with argument q,
    carrying the prefactor that makes the polynomial monic in z + 1/z.  The
    role-a parameter occupies the distinguished slot, so the grid points of
    the discrete orthogonality measure are t_a q^k.  The prefactor is merged
    into the terms: each term carries the partial products

        (q^-lam, abcd q^(lam-1), t_a z, t_a/z; q)_m * q^m / (q; q)_m
        * (t_a t_b q^m, t_a t_c q^m, t_a t_d q^m; q)_(lam-m)
        / (t_a^lam (abcd q^(lam-1); q)_lam),

    which stays finite under the truncation t_a t_b = q^-N even for
    lam > N, where prefactor and series would separately degenerate.
    """
    if p.n != 1:
        raise ValueError("closed form is one-variable only")
    if lam < 0:
        raise ValueError("polynomial degree must be nonnegative")
    q = p.q
    ta, tb, tc, td = p.t_role
    abcd = ta * tb * tc * td

    den0 = qpoch(abcd * q ** (lam - 1), q, lam)
    if abs(den0) < POLE_TOL:
        raise PoleError("vanishing balancing factor in the monic prefactor")
    scale = 1.0 / (ta ** lam * den0)

    total = 0.0
    comp = 0.0
    for m in range(lam + 1):
        num = (
            qpoch(q ** (-lam), q, m)
            * qpoch(abcd * q ** (lam - 1), q, m)
            * qpoch(ta * z, q, m)
            * qpoch(ta / z, q, m)
            * q ** m
        )
        den = qpoch(q, q, m)
        if abs(den) < POLE_TOL:
            raise PoleError("vanishing (q; q)_m factor; q may be a root of unity")
        tail = (
            qpoch(ta * tb * q ** m, q, lam - m)
            * qpoch(ta * tc * q ** m, q, lam - m)
            * qpoch(ta * td * q ** m, q, lam - m)
        )
        total, comp = _kahan_add(total, comp, num * tail / den)
    return scale * total


def f43_monic_wilson(lam: int, x, rp):
    """Monic one-variable Wilson/Racah polynomial at the point x.

    Terminating 4F3 at unit argument, monic in x^2, with the role-a
    parameter in the distinguished slot (grid points g_a + k).  As in the
    basic case the prefactor is merged termwise so the truncated
    configuration g_a + g_b = -N stays finite for every degree.
    """
    if rp.n != 1:
        raise ValueError("closed form is one-variable only")
    if lam < 0:
        raise ValueError("polynomial degree must be nonnegative")
    ga, gb, gc, gd = rp.g_role
    s = ga + gb + gc + gd

    den0 = poch(s + lam - 1, lam)
    if abs(den0) < POLE_TOL:
        raise PoleError("vanishing balancing factor in the monic prefactor")
    scale = 1.0 / den0

    total = 0.0
    comp = 0.0
    for m in range(lam + 1):
        num = (
            poch(-lam, m)
            * poch(s + lam - 1, m)
            * poch(ga + x, m)
            * poch(ga - x, m)
        )
        den = poch(1, m)
        tail = (
            poch(ga + gb + m, lam - m)
            * poch(ga + gc + m, lam - m)
            * poch(ga + gd + m, lam - m)
        )
        total, comp = _kahan_add(total, comp, num * tail / den)
    return scale * total
