"""Independent closed forms used as oracles in the tests.

Everything here is a direct transcription of the one-variable special cases
(discrete Askey-Wilson/q-Racah and Wilson/Racah weights, norm ratios, and
the two Dougall-type product evaluations of the unit norm).  None of it
shares code with the package's multivariable product formulas.
"""

from qracah import poch, qpoch, qpoch_many


def delta_one_var_q(nu, p):
    """One-variable discrete weight, written through the role-a grid."""
    q = p.q
    ta, tb, tc, td = p.t_role
    abcd = ta * tb * tc * td
    val = (1 - ta ** 2 * q ** (2 * nu)) / ((abcd / q) ** nu * (1 - ta ** 2))
    val *= qpoch_many([ta * t for t in (ta, tb, tc, td)], q, nu)
    val /= qpoch_many([q * ta / t for t in (ta, tb, tc, td)], q, nu)
    return val


def norm_ratio_one_var_q(lam, p):
    """(q; q)_lam prod_(r<s) (t_r t_s; q)_lam /
    ((t0 t1 t2 t3 q^(lam-1); q)_lam (t0 t1 t2 t3; q)_(2 lam))."""
    q = p.q
    t0, t1, t2, t3 = p.ts
    abcd = t0 * t1 * t2 * t3
    pairs = [t0 * t1, t0 * t2, t0 * t3, t1 * t2, t1 * t3, t2 * t3]
    return (
        qpoch(q, q, lam)
        * qpoch_many(pairs, q, lam)
        / (qpoch(abcd * q ** (lam - 1), q, lam) * qpoch(abcd, q, 2 * lam))
    )


def one_one_q_dougall(p):
    """(t_a^2 q, q/(t_c t_d); q)_N / (t_a q/t_c, t_a q/t_d; q)_N."""
    q, N = p.q, p.N
    ta, _, tc, td = p.t_role
    return (
        qpoch(ta ** 2 * q, q, N)
        * qpoch(q / (tc * td), q, N)
        / (qpoch(ta * q / tc, q, N) * qpoch(ta * q / td, q, N))
    )


def delta_one_var_racah(nu, rp):
    """(1 + nu/g_a) prod_r (g_r + g_a)_nu / (1 - g_r + g_a)_nu."""
    ga = rp.g_a
    num = 1.0
    den = 1.0
    for gr in rp.gs:
        num *= poch(gr + ga, nu)
        den *= poch(1 - gr + ga, nu)
    return (1 + nu / ga) * num / den


def norm_ratio_one_var_racah(lam, rp):
    """lam! prod_(r<s) (g_r + g_s)_lam / ((sigma + lam - 1)_lam (sigma)_(2 lam))
    with sigma the sum of the four exponents."""
    g0, g1, g2, g3 = rp.gs
    sigma = g0 + g1 + g2 + g3
    num = poch(1, lam)
    for pair in (g0 + g1, g0 + g2, g0 + g3, g1 + g2, g1 + g3, g2 + g3):
        num *= poch(pair, lam)
    return num / (poch(sigma + lam - 1, lam) * poch(sigma, 2 * lam))


def one_one_racah_dougall(rp):
    """(1 + 2 g_a, 1 - g_c - g_d)_N / (1 + g_a - g_c, 1 + g_a - g_d)_N."""
    N = rp.N
    ga, _, gc, gd = rp.g_role
    return (
        poch(1 + 2 * ga, N)
        * poch(1 - gc - gd, N)
        / (poch(1 + ga - gc, N) * poch(1 + ga - gd, N))
    )
