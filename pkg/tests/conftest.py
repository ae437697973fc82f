"""Shared reference configurations.

config_a : trig, n=2, N=4, alpha = pi/5.2, g = 0.3, exponents (.5, .4, .2, .1)
config_b : trig, n=3, N=3, g = 0.25, exponents (.6, .5, .3, .2),
           alpha = pi / (2g + g_a + g_b + 3)
config_sd: self-dual trig (g_a = g_b + g_c + g_d), rest as config_a with
           alpha readjusted to keep the truncation exact
config_r : racah, n=2, N=3, g = 0.4, g_b solving the additive truncation
config_rpos: racah, n=2, N=2, all weights (primal and dual) positive
"""

import math

import numpy as np
import pytest

import qracah as qr


@pytest.fixture(scope="session")
def config_a():
    return qr.from_trig(alpha=math.pi / 5.2, g=0.3, g_a=0.5, g_b=0.4, g_c=0.2, g_d=0.1, n=2, N=4)


@pytest.fixture(scope="session")
def config_b():
    alpha = math.pi / (2 * 0.25 + 0.6 + 0.5 + 3)
    return qr.from_trig(alpha=alpha, g=0.25, g_a=0.6, g_b=0.5, g_c=0.3, g_d=0.2, n=3, N=3)


@pytest.fixture(scope="session")
def config_sd():
    return qr.from_trig(alpha=math.pi / 5.4, g=0.3, g_a=0.7, g_b=0.4, g_c=0.2, g_d=0.1, n=2, N=4)


@pytest.fixture(scope="session")
def config_r():
    return qr.racah_params(g=0.4, g0=0.75, g1=-4.15, g2=0.55, g3=0.35, n=2, N=3)


@pytest.fixture(scope="session")
def config_rpos():
    return qr.racah_params(g=0.6, g0=1.0, g1=-3.6, g2=0.85, g3=-2.75, n=2, N=2)


def one_var_trig(N=6, g_a=0.45, g_b=0.35, g_c=0.15, g_d=0.05):
    alpha = math.pi / (g_a + g_b + N)
    return qr.from_trig(alpha=alpha, g=0.0, g_a=g_a, g_b=g_b, g_c=g_c, g_d=g_d, n=1, N=N)


def one_var_racah(N=4, g_a=0.85, g_c=0.35, g_d=0.25):
    return qr.racah_params(g=0.0, g0=g_a, g1=-g_a - N, g2=g_c, g3=g_d, n=1, N=N)


@pytest.fixture(scope="session")
def ctx_a(config_a):
    return qr.transform_context(config_a)


@pytest.fixture(scope="session")
def ctx_b(config_b):
    return qr.transform_context(config_b)


@pytest.fixture(scope="session")
def ctx_sd(config_sd):
    return qr.transform_context(config_sd)


@pytest.fixture(scope="session")
def ctx_r(config_r):
    return qr.racah_transform_context(config_r)


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20240817)
