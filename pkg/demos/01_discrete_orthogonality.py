"""Discrete orthogonality of the multivariable q-Racah polynomials.

Walks through the basic objects at a two-variable parameter set inside the
positivity domain: the alcove of dominant weights, the grid tau q^nu, the
positive weights Delta(nu), the Gram-Schmidt family, and the product
formula for its squared norms.
"""

import math

import numpy as np

import qracah as qr

# Parameters on the unit circle.  The truncation condition
# t_a t_b t^(n-1) q^N = 1 holds exactly because alpha is chosen as
# pi / ((n-1) g + g_a + g_b + N).
n, N, g = 2, 4, 0.3
g_a, g_b, g_c, g_d = 0.5, 0.4, 0.2, 0.1
alpha = math.pi / ((n - 1) * g + g_a + g_b + N)
p = qr.from_trig(alpha=alpha, g=g, g_a=g_a, g_b=g_b, g_c=g_c, g_d=g_d, n=n, N=N)

print(f"truncation residual          {p.truncation_residual:.2e}")
print(f"inside the positivity domain {qr.in_positivity_domain(p)}")

# The alcove indexes everything: weights, grid points, matrix rows.
alcove = qr.enumerate_alcove(n, N)
print(f"\nalcove size                  {len(alcove)} weights")
print(f"first weights                {alcove[:5]}")

# All weights are real and positive here, with Delta(0) = 1.
tab = qr.weight_table(p)
print(f"\nDelta(0)                     {tab.delta[0].real:.6f}")
print(f"Delta positive everywhere    {bool(np.all(tab.delta.real > 0))}")
print(f"sum of the weights <1, 1>    {tab.one_one.real:.6f}")

# Monic family by Gram-Schmidt over the grid, in the graded total order.
fam = qr.build_family(p, table=tab)
G = fam.gram_matrix()
off = np.max(np.abs(G - np.diag(np.diag(G))))
print(f"\nGram matrix off-diagonal     {off:.2e} (orthogonality)")

# The squared norms come from a ratio of dual c-functions times <1, 1>.
predicted = tab.norm_ratio * tab.one_one
worst = np.max(np.abs(fam.norms - predicted) / np.abs(predicted))
print(f"norm product formula residual {worst:.2e}")

# Renormalizing by the dual c-function pins the value one at the base
# point, and exposes the degree/grid-position duality.
ren = qr.renormalize(fam, tab)
print(f"max |P(tau) - 1|             {np.max(np.abs(ren.at_origin - 1)):.2e}")

dual = qr.dual_view(p).dual_params()
dren = qr.renormalize(qr.build_family(dual), qr.weight_table(dual))
print(f"duality residual             {np.max(np.abs(ren.values - dren.values.T)):.2e}")
print("  (value of member mu at grid point nu == dual member nu at dual point mu)")
