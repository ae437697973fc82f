"""Difference operators on the truncated grid and the recurrence machinery.

The analytic second-order operator has coefficients

    V_(eps j)(z) = prod_r (1 - t_r z_j^eps) / ((1 - z_j^2eps)(1 - q z_j^2eps))
                   * prod_(k != j) (1 - t z_j^eps z_k)(1 - t z_j^eps / z_k)
                                  / ((1 - z_j^eps z_k)(1 - z_j^eps / z_k)).

On the grid these coefficients vanish exactly at every shift that would
leave the alcove (boundary vanishing), which is what lets the operator
restrict to grid functions.  In the trigonometric parametrization the
restricted operator takes the kernel form with

    v(xi) = sin(alpha(g+xi)/2) / sin(alpha xi/2),
    w(xi) = [sin-cos four-factor ratio with the g_a..g_d exponents],

and equals the analytic restriction divided by the constant
t^(n-1) (t_0 t_1 t_2 t_3 q^-1)^(1/2).

The same kernels, taken at the dual parameters and evaluated on the dual
grid, are the expansion coefficients of the Pieri-type recurrences: the
product of a renormalized polynomial with the elementary multiplier E_r
expands over neighbouring weights with coefficients Vhat/Uhat.  Every such
coefficient contains an even number of v-kernels, so the half power of t
they formally carry folds into an exact integer power; evaluation is fully
rational in the base parameters and free of branch choices.

The flip identity Delta(nu + eps e_j) V_(-eps j) = Delta(nu) V_(eps j) and
its building blocks (the c-function difference equations with their
cancelling intermediate factor) are exposed as residual computations, as are
the norm recurrence and the restricted Pieri residuals.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

import numpy as np

from .cfunctions import c_minus, c_plus, chat_minus, chat_plus, delta
from .errors import SingularEvaluationError
from .params import ParamSet, dual_view
from .weights import enumerate_alcove, in_alcove, is_dominant

#: Factors smaller than this count as exact zeros when deciding whether a
#: kernel evaluation is a removable 0/0.  Structural zeros (truncation and
#: boundary factors) sit at machine epsilon; for generic parameters every
#: other factor is many orders of magnitude larger.
KERNEL_ZERO_TOL = 1e-9


@lru_cache(maxsize=None)
def _alcove_index(n, N):
    alcove = tuple(enumerate_alcove(n, N))
    return alcove, {lam: i for i, lam in enumerate(alcove)}


def _grid_point(p: ParamSet, nu) -> np.ndarray:
    tau = np.array(p.tau)
    return tau * np.asarray(p.q) ** np.array(nu)


def _guarded_ratio(nums, dens, context: str):
    """Product of nums over product of dens with removable-singularity
    handling.

    At special parameter coincidences (for example a trigonometric exponent
    hitting exactly 1/2) a denominator factor can vanish at a grid point
    where a structurally zero numerator factor is present as well; the value
    continued along the parameter family is zero there.  A vanishing
    denominator without enough numerator zeros is a genuine singularity.
    """
    den_zeros = sum(1 for f in dens if abs(f) < KERNEL_ZERO_TOL)
    if den_zeros == 0:
        num = 1.0
        for f in nums:
            num = num * f
        den = 1.0
        for f in dens:
            den = den * f
        return num / den
    num_zeros = sum(1 for f in nums if abs(f) < KERNEL_ZERO_TOL)
    if num_zeros >= den_zeros:
        return 0.0
    raise SingularEvaluationError(context)


# ---------------------------------------------------------------------------
# Analytic coefficients and trigonometric kernels
# ---------------------------------------------------------------------------


def v_coeff(eps: int, j: int, z, p: ParamSet):
    """Analytic coefficient V_(eps j)(z); j is 0-indexed, eps is +-1."""
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    z = np.asarray(z)
    zj = z[j] ** eps
    nums = [1 - tr * zj for tr in p.ts]
    dens = [1 - zj * zj, 1 - p.q * zj * zj]
    for k in range(p.n):
        if k == j:
            continue
        nums.append(1 - p.t * zj * z[k])
        nums.append(1 - p.t * zj / z[k])
        dens.append(1 - zj * z[k])
        dens.append(1 - zj / z[k])
    return _guarded_ratio(nums, dens, f"coefficient pole at coordinate {j}")


def trig_v(xi, alpha, g):
    return _guarded_ratio(
        [math.sin(alpha * (g + xi) / 2)],
        [math.sin(alpha * xi / 2)],
        "vanishing sine in v-kernel",
    )


def trig_w(xi, alpha, g4):
    ga, gb, gc, gd = g4
    nums = [
        math.sin(alpha * (ga + xi) / 2),
        math.cos(alpha * (gb + xi) / 2),
        math.sin(alpha * (gc + 0.5 + xi) / 2),
        math.cos(alpha * (gd + 0.5 + xi) / 2),
    ]
    dens = [
        math.sin(alpha * xi / 2),
        math.cos(alpha * xi / 2),
        math.sin(alpha * (0.5 + xi) / 2),
        math.cos(alpha * (0.5 + xi) / 2),
    ]
    return _guarded_ratio(nums, dens, "vanishing sine/cosine in w-kernel")


def v_coeff_trig(eps: int, j: int, x, ts, n: int):
    """Kernel-form coefficient w(eps x_j) prod v(eps x_j +- x_k) on the log
    grid (real arguments, real value)."""
    out = trig_w(eps * x[j], ts.alpha, ts.g_role)
    for k in range(n):
        if k != j:
            out *= trig_v(eps * x[j] + x[k], ts.alpha, ts.g)
            out *= trig_v(eps * x[j] - x[k], ts.alpha, ts.g)
    return out


def restriction_constant(p: ParamSet):
    """The analytic operator restricted to the grid equals the kernel-form
    operator times t^(n-1) (t_0 t_1 t_2 t_3 q^-1)^(1/2)."""
    return p.t ** (p.n - 1) * dual_view(p).that_a


# ---------------------------------------------------------------------------
# Flip identity, boundary vanishing, symmetry
# ---------------------------------------------------------------------------


def f_intermediate(j: int, nu, p: ParamSet):
    """The intermediate factor of the c-function difference equations; it
    cancels from the flip identity.  j is 0-indexed."""
    tau = p.tau
    q, t = p.q, p.t
    out = p.t ** (j + 1 - p.n) / dual_view(p).that_a
    for k in range(j):
        out *= (1 - tau[k] / tau[j] * q ** (nu[k] - nu[j])) * (
            1 - tau[j] / tau[k] * q ** (nu[j] - nu[k] - 1)
        )
        out /= (1 - t * tau[k] / tau[j] * q ** (nu[k] - nu[j])) * (
            1 - t * tau[j] / tau[k] * q ** (nu[j] - nu[k] - 1)
        )
    return out


def cplus_step_residual(nutilde, j: int, p: ParamSet):
    """Residual of C_+(nu - e_j)/C_+(nu) = V_(+j)(tau q^(nu - e_j)) f_j(nu)."""
    nutilde = tuple(nutilde)
    lower = tuple(v - (1 if i == j else 0) for i, v in enumerate(nutilde))
    if not (is_dominant(nutilde) and is_dominant(lower)):
        raise ValueError("both weights must stay in the dominant cone")
    lhs = c_plus(lower, p, path="qpoch") / c_plus(nutilde, p, path="qpoch")
    rhs = v_coeff(1, j, _grid_point(p, lower), p) * f_intermediate(j, nutilde, p)
    return lhs - rhs, max(abs(lhs), abs(rhs))


def cminus_step_residual(nutilde, j: int, p: ParamSet):
    """Residual of C_-(nu + e_j)/C_-(nu) = V_(-j)(tau q^(nu + e_j)) f_j(nu + e_j)."""
    nutilde = tuple(nutilde)
    upper = tuple(v + (1 if i == j else 0) for i, v in enumerate(nutilde))
    if not (is_dominant(nutilde) and is_dominant(upper)):
        raise ValueError("both weights must stay in the dominant cone")
    lhs = c_minus(upper, p, path="qpoch") / c_minus(nutilde, p, path="qpoch")
    rhs = v_coeff(-1, j, _grid_point(p, upper), p) * f_intermediate(j, upper, p)
    return lhs - rhs, max(abs(lhs), abs(rhs))


def flip_residual(nu, j: int, eps: int, p: ParamSet):
    """Delta(nu + eps e_j) V_(-eps j) at the shifted point minus
    Delta(nu) V_(eps j) at the point itself; identically zero on the cone."""
    nu = tuple(nu)
    shifted = tuple(v + (eps if i == j else 0) for i, v in enumerate(nu))
    if not (is_dominant(nu) and is_dominant(shifted)):
        raise ValueError("both weights must stay in the dominant cone")
    lhs = delta(shifted, p) * v_coeff(-eps, j, _grid_point(p, shifted), p)
    rhs = delta(nu, p) * v_coeff(eps, j, _grid_point(p, nu), p)
    return lhs - rhs, max(abs(lhs), abs(rhs))


def flip_scan(p: ParamSet) -> float:
    """Largest flip residual over all adjacent pairs in the dominant cone
    with one end in the alcove, relative to the global scale of the
    weight-coefficient products.

    Pairs crossing the alcove boundary are included: there both sides
    vanish under truncation, and their residuals are measured against the
    same global scale as the interior pairs."""
    alcove, _ = _alcove_index(p.n, p.N)
    residuals = []
    scale = 1e-300
    for nu in alcove:
        for j in range(p.n):
            for eps in (1, -1):
                shifted = tuple(v + (eps if i == j else 0) for i, v in enumerate(nu))
                if not is_dominant(shifted):
                    continue
                res, local = flip_residual(nu, j, eps, p)
                residuals.append(abs(res))
                scale = max(scale, local)
    return max(residuals) / scale


def reslem_scan(p: ParamSet):
    """Boundary vanishing: the coefficient V_(eps j) at a grid point whose
    (j, eps) shift leaves the alcove.  Returns (worst boundary magnitude
    relative to the interior coefficient scale, interior scale)."""
    alcove, _ = _alcove_index(p.n, p.N)
    interior = 0.0
    boundary = 0.0
    for nu in alcove:
        z = _grid_point(p, nu)
        for j in range(p.n):
            for eps in (1, -1):
                shifted = tuple(v + (eps if i == j else 0) for i, v in enumerate(nu))
                mag = abs(v_coeff(eps, j, z, p))
                if in_alcove(shifted, p.N):
                    interior = max(interior, mag)
                else:
                    boundary = max(boundary, mag)
    return boundary / max(interior, 1e-300), interior


# ---------------------------------------------------------------------------
# Discrete operators on grid functions
# ---------------------------------------------------------------------------


def _pick_path(p: ParamSet, path: str) -> str:
    if path == "auto":
        return "trig" if p.trig is not None else "rational"
    if path == "trig" and p.trig is None:
        raise ValueError("trigonometric path requires a trigonometric source")
    return path


def apply_d(f, p: ParamSet, *, path: str = "auto", analytic: bool = False) -> np.ndarray:
    """Discretized second-order operator acting on a grid function.

    Shifts that would leave the alcove are omitted (their coefficients
    vanish there anyway).  With analytic=True the result is scaled to match
    the analytic operator instead of the kernel-form normalization.
    """
    p.require_truncated()
    mode = _pick_path(p, path)
    alcove, index = _alcove_index(p.n, p.N)
    f = np.asarray(f)
    if f.shape != (len(alcove),):
        raise ValueError("grid function has the wrong length")
    out = np.zeros(len(alcove), dtype=np.result_type(f.dtype, np.complex128))
    const = restriction_constant(p)
    rho = np.array(p.trig.rho(p.n)) if p.trig is not None else None
    for i, nu in enumerate(alcove):
        acc = 0.0
        z = _grid_point(p, nu) if mode == "rational" else None
        x = rho + np.array(nu) if mode == "trig" else None
        for j in range(p.n):
            for eps in (1, -1):
                shifted = tuple(v + (eps if k == j else 0) for k, v in enumerate(nu))
                if not in_alcove(shifted, p.N):
                    continue
                if mode == "trig":
                    w = v_coeff_trig(eps, j, x, p.trig, p.n)
                    if analytic:
                        w = w * const
                else:
                    w = v_coeff(eps, j, z, p)
                    if not analytic:
                        w = w / const
                acc = acc + w * (f[index[shifted]] - f[i])
        out[i] = acc
    return out


def v_coeff_racah(eps: int, j: int, x, rp) -> float:
    """Coefficient of the degenerate (rational in x) second-order operator:

        prod_r (g_r + eps x_j) / ((2 eps x_j)(1 + 2 eps x_j))
        * prod_(k != j) (g + eps x_j + x_k)(g + eps x_j - x_k)
                        / ((eps x_j + x_k)(eps x_j - x_k)).
    """
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    xj = eps * x[j]
    nums = [gr + xj for gr in rp.gs]
    dens = [2 * xj, 1 + 2 * xj]
    for k in range(rp.n):
        if k == j:
            continue
        nums.append(rp.g + xj + x[k])
        nums.append(rp.g + xj - x[k])
        dens.append(xj + x[k])
        dens.append(xj - x[k])
    return _guarded_ratio(nums, dens, f"degenerate coefficient pole at {j}")


def apply_d_racah(f, rp, *, dual: bool = False) -> np.ndarray:
    """Discretized degenerate second-order operator on the grid rho + nu
    (or the dual grid with the dual exponents), shifts restricted to the
    alcove.  The renormalized family satisfies the eigenvalue equation with
    the quadratic eigenvalues sum_j ((lam_j + rhohat_j)^2 - rhohat_j^2)."""
    rp.require_truncated()
    base = rp.dual() if dual else rp
    alcove, index = _alcove_index(rp.n, rp.N)
    f = np.asarray(f)
    if f.shape != (len(alcove),):
        raise ValueError("grid function has the wrong length")
    rho = np.array(base.rho)
    out = np.zeros(len(alcove), dtype=np.result_type(f.dtype, np.complex128))
    for i, nu in enumerate(alcove):
        x = rho + np.array(nu)
        acc = 0.0
        for j in range(rp.n):
            for eps in (1, -1):
                shifted = tuple(v + (eps if k == j else 0) for k, v in enumerate(nu))
                if not in_alcove(shifted, rp.N):
                    continue
                w = v_coeff_racah(eps, j, x, base)
                acc = acc + w * (f[index[shifted]] - f[i])
        out[i] = acc
    return out


# ---------------------------------------------------------------------------
# Kernel sides for the higher operators and the Pieri coefficients
# ---------------------------------------------------------------------------


class _RationalSide:
    """Coefficient kernels evaluated at complex coordinates.

    The w-kernel divides out the square root of the product of its four
    parameters over q, supplied by the opposite side's role-a scalar; the
    v-kernels carry t^(-1/2) each, folded into an exact integer power of t
    per assembled coefficient (their count is always even).
    """

    def __init__(self, z, q, t, s4, wpref):
        self.z = z
        self.q = q
        self.t = t
        self.s4 = s4
        self.wpref = wpref

    def w1(self, j, eps):
        zz = self.z[j] ** eps
        nums = [1 - s * zz for s in self.s4]
        dens = [1 - zz * zz, 1 - self.q * zz * zz]
        return _guarded_ratio(nums, dens, "w-kernel pole") / self.wpref

    def vraw(self, j, ej, k, ek, shift):
        zeta = self.q ** shift * self.z[j] ** ej * self.z[k] ** ek
        return _guarded_ratio([1 - self.t * zeta], [1 - zeta], "v-kernel pole")

    def fold(self, mcount):
        if mcount % 2:
            raise AssertionError("odd v-kernel count; branch safety lost")
        return self.t ** (-(mcount // 2))


class _TrigSide:
    """Kernels in the trigonometric form (real arguments and values)."""

    def __init__(self, x, alpha, g, g4):
        self.x = x
        self.alpha = alpha
        self.g = g
        self.g4 = g4

    def w1(self, j, eps):
        return trig_w(eps * self.x[j], self.alpha, self.g4)

    def vraw(self, j, ej, k, ek, shift):
        return trig_v(ej * self.x[j] + ek * self.x[k] + shift, self.alpha, self.g)

    def fold(self, mcount):
        return 1.0


def _primal_side(p: ParamSet, nu, mode: str):
    if mode == "trig":
        ts = p.trig
        return _TrigSide(np.array(ts.rho(p.n)) + np.array(nu), ts.alpha, ts.g, ts.g_role)
    dv = dual_view(p)
    return _RationalSide(_grid_point(p, nu), p.q, p.t, p.ts, dv.that_a)


def _dual_side(p: ParamSet, lam, mode: str):
    if mode == "trig":
        ts = p.trig.dual()
        return _TrigSide(np.array(ts.rho(p.n)) + np.array(lam), ts.alpha, ts.g, ts.g_role)
    dv = dual_view(p)
    zhat = np.array(dv.tauhat) * np.asarray(p.q) ** np.array(lam)
    return _RationalSide(zhat, p.q, p.t, dv.that_role, p.t_a)


def coeff_v(side, J, epsJ, K):
    """Shift coefficient V_(eps J, K) at the side's coordinates."""
    val = 1.0
    count = 0
    for j, ej in zip(J, epsJ):
        val = val * side.w1(j, ej)
    for a in range(len(J)):
        for b in range(a + 1, len(J)):
            val = val * side.vraw(J[a], epsJ[a], J[b], epsJ[b], 0)
            val = val * side.vraw(J[a], epsJ[a], J[b], epsJ[b], 1)
            count += 2
    for j, ej in zip(J, epsJ):
        for k in K:
            val = val * side.vraw(j, ej, k, 1, 0)
            val = val * side.vraw(j, ej, k, -1, 0)
            count += 2
    return val * side.fold(count)


def coeff_u(side, K, order):
    """Stationary coefficient U_(K, order); equal to one at order zero."""
    if order == 0:
        return 1.0
    total = 0.0
    for L in itertools.combinations(K, order):
        rest = [k for k in K if k not in L]
        for eps in itertools.product((1, -1), repeat=order):
            val = 1.0
            count = 0
            for l, el in zip(L, eps):
                val = val * side.w1(l, el)
            for a in range(order):
                for b in range(a + 1, order):
                    val = val * side.vraw(L[a], eps[a], L[b], eps[b], 0)
                    val = val * side.vraw(L[a], -eps[a], L[b], -eps[b], -1)
                    count += 2
            for l, el in zip(L, eps):
                for k in rest:
                    val = val * side.vraw(l, el, k, 1, 0)
                    val = val * side.vraw(l, el, k, -1, 0)
                    count += 2
            total = total + val * side.fold(count)
    return total * (-1) ** order


def apply_dr(r: int, f, p: ParamSet, *, path: str = "auto") -> np.ndarray:
    """The commuting discrete operator of order 2r acting on a grid
    function; r = 1 reproduces the second-order operator."""
    if not 1 <= r <= p.n:
        raise ValueError("operator order must satisfy 1 <= r <= n")
    p.require_truncated()
    mode = _pick_path(p, path)
    alcove, index = _alcove_index(p.n, p.N)
    f = np.asarray(f)
    if f.shape != (len(alcove),):
        raise ValueError("grid function has the wrong length")
    out = np.zeros(len(alcove), dtype=np.result_type(f.dtype, np.complex128))
    indices = list(range(p.n))
    for i, nu in enumerate(alcove):
        side = _primal_side(p, nu, mode)
        acc = 0.0
        for size in range(0, r + 1):
            for J in itertools.combinations(indices, size):
                comp = [k for k in indices if k not in J]
                ucoef = coeff_u(side, comp, r - size)
                for eps in itertools.product((1, -1), repeat=size):
                    shifted = list(nu)
                    for j, ej in zip(J, eps):
                        shifted[j] += ej
                    shifted = tuple(shifted)
                    if not in_alcove(shifted, p.N):
                        continue
                    acc = acc + ucoef * coeff_v(side, J, eps, comp) * f[index[shifted]]
        out[i] = acc
    return out


# ---------------------------------------------------------------------------
# Eigenvalue multipliers
# ---------------------------------------------------------------------------


def e_r_generic(r: int, z, tauvec):
    """The elementary multiplier E_r(z; tau): alternating sum over index
    subsets J of prod_(j in J) (z_j + 1/z_j) times the complete homogeneous
    sums of (tau_l + 1/tau_l) over l = r..n."""
    n = len(z)
    zsym = [z[j] + 1 / z[j] for j in range(n)]
    tsym = [tauvec[l] + 1 / tauvec[l] for l in range(n)]
    total = 0.0
    for size in range(0, r + 1):
        inner = 0.0
        if size == r:
            inner = 1.0
        else:
            for combo in itertools.combinations_with_replacement(range(r - 1, n), r - size):
                prod = 1.0
                for l in combo:
                    prod = prod * tsym[l]
                inner = inner + prod
        for J in itertools.combinations(range(n), size):
            prod = 1.0
            for j in J:
                prod = prod * zsym[j]
            total = total + (-1) ** (r - size) * prod * inner
    return total


def e_multiplier(r: int, nu, p: ParamSet, *, dual: bool = False):
    """Eigenvalue multiplier at a grid weight: E_r at the grid point of nu
    (primal), or at the dual grid point of a degree lam (dual).  On the
    trigonometric branch this is the real cosine form."""
    if not 1 <= r <= p.n:
        raise ValueError("operator order must satisfy 1 <= r <= n")
    nu = tuple(nu)
    if p.trig is not None:
        ts = p.trig.dual() if dual else p.trig
        alpha = ts.alpha
        rho = ts.rho(p.n)
        czn = [math.cos(alpha * (rho[j] + nu[j])) for j in range(p.n)]
        cz0 = [math.cos(alpha * rho[l]) for l in range(p.n)]
        total = 0.0
        for size in range(0, r + 1):
            if size == r:
                inner = 1.0
            else:
                inner = 0.0
                for combo in itertools.combinations_with_replacement(
                    range(r - 1, p.n), r - size
                ):
                    prod = 1.0
                    for l in combo:
                        prod *= cz0[l]
                    inner += prod
            for J in itertools.combinations(range(p.n), size):
                prod = 1.0
                for j in J:
                    prod *= czn[j]
                total += (-1) ** (r - size) * prod * inner
        return 2 ** r * total
    dv = dual_view(p)
    if dual:
        base = np.array(dv.tauhat)
    else:
        base = np.array(p.tau)
    z = base * np.asarray(p.q) ** np.array(nu)
    return e_r_generic(r, z, base)


# ---------------------------------------------------------------------------
# Pieri residuals and the norm recurrence
# ---------------------------------------------------------------------------


def pieri_residual(r: int, lam, p: ParamSet, renorm, *, path: str = "auto"):
    """Largest pointwise residual (relative to the term scale) of the
    restricted Pieri expansion of E_r * P_lam over the alcove."""
    if not 1 <= r <= p.n:
        raise ValueError("operator order must satisfy 1 <= r <= n")
    lam = tuple(lam)
    mode = _pick_path(p, path)
    alcove = renorm.alcove
    npts = len(alcove)
    pos = renorm.position
    side = _dual_side(p, lam, mode)
    indices = list(range(p.n))

    evec = np.array([e_multiplier(r, nu, p) for nu in alcove])
    lhs = evec * renorm.values[pos(lam)]
    rhs = np.zeros(npts, dtype=complex)
    scale = np.abs(lhs).copy()
    for size in range(0, r + 1):
        for J in itertools.combinations(indices, size):
            comp = [k for k in indices if k not in J]
            ucoef = coeff_u(side, comp, r - size)
            for eps in itertools.product((1, -1), repeat=size):
                target = list(lam)
                for j, ej in zip(J, eps):
                    target[j] += ej
                target = tuple(target)
                if not in_alcove(target, p.N):
                    continue
                coeff = ucoef * coeff_v(side, J, eps, comp)
                row = renorm.values[pos(target)]
                rhs = rhs + coeff * row
                scale = scale + abs(coeff) * np.abs(row)
    resid = np.abs(lhs - rhs)
    return float(np.max(resid / np.maximum(scale, 1e-300)))


def plancherel_flatness(renorm, table) -> float:
    """Relative spread of <P_lam, P_lam> Deltahat(lam) across the alcove;
    identically constant (equal to <1, 1>) in exact arithmetic."""
    values = renorm.norms * table.delta_hat
    ref = table.one_one
    return float(np.max(np.abs(values - ref)) / abs(ref))


def norm_recurrence_residual(lam, r: int, p: ParamSet, renorm, table) -> float:
    """Relative residual of <P_lam, P_lam> Deltahat(lam) =
    <P_(lam+omega_r), P_(lam+omega_r)> Deltahat(lam + omega_r)."""
    lam = tuple(lam)
    upper = tuple(v + (1 if i < r else 0) for i, v in enumerate(lam))
    if not (in_alcove(lam, p.N) and in_alcove(upper, p.N)):
        raise ValueError("both weights must lie in the alcove")
    i, k = renorm.position(lam), renorm.position(upper)
    lhs = renorm.norms[i] * table.delta_hat[i]
    rhs = renorm.norms[k] * table.delta_hat[k]
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1e-300)


def raisefund_residual(lam, r: int, p: ParamSet, renorm, *, path: str = "auto"):
    """Residual of the raising relation connecting <P_lam, P_lam> and
    <P_(lam+omega_r), P_(lam+omega_r)> through the two extremal Pieri
    coefficients."""
    lam = tuple(lam)
    upper = tuple(v + (1 if i < r else 0) for i, v in enumerate(lam))
    if not (in_alcove(lam, p.N) and in_alcove(upper, p.N)):
        raise ValueError("both weights must lie in the alcove")
    mode = _pick_path(p, path)
    J = tuple(range(r))
    K = list(range(r, p.n))
    v_up = coeff_v(_dual_side(p, lam, mode), J, (1,) * r, K)
    v_dn = coeff_v(_dual_side(p, upper, mode), J, (-1,) * r, K)
    n_lam = renorm.norms[renorm.position(lam)]
    n_up = renorm.norms[renorm.position(upper)]
    lhs = v_up * n_up
    rhs = v_dn * n_lam
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1e-300)


def chat_step_residuals(lam, r: int, p: ParamSet, *, path: str = "auto"):
    """Residuals of the two dual c-function difference equations

        Chat_+(lam) / Chat_+(lam + omega_r) = Vhat_(+omega_r)(lam),
        Chat_-(lam + omega_r) / Chat_-(lam) = Vhat_(-omega_r)(lam + omega_r).
    """
    lam = tuple(lam)
    upper = tuple(v + (1 if i < r else 0) for i, v in enumerate(lam))
    if not (in_alcove(lam, p.N) and in_alcove(upper, p.N)):
        raise ValueError("both weights must lie in the alcove")
    mode = _pick_path(p, path)
    J = tuple(range(r))
    K = list(range(r, p.n))
    ratio_p = chat_plus(lam, p) / chat_plus(upper, p)
    ratio_m = chat_minus(upper, p) / chat_minus(lam, p)
    v_up = coeff_v(_dual_side(p, lam, mode), J, (1,) * r, K)
    v_dn = coeff_v(_dual_side(p, upper, mode), J, (-1,) * r, K)
    res_p = abs(ratio_p - v_up) / max(abs(ratio_p), abs(v_up))
    res_m = abs(ratio_m - v_dn) / max(abs(ratio_m), abs(v_dn))
    return res_p, res_m
