"""Dominant weights, truncated alcoves, and signed-permutation orbits.

A weight is a weakly decreasing tuple of nonnegative integers.  The alcove
collects the weights with all parts at most N; it indexes the grid points,
the polynomials, and the rows/columns of every kernel matrix in this package,
always through the same graded total order.  Orbits are taken under the
hyperoctahedral action (permutations combined with sign flips), which is what
the symmetrized monomials sum over.

Everything is a plain tuple: weights are value types with structural
equality, hashable, and immutable, so they are safe to share across threads.
Only the BC-type signed-permutation group is supported; there is no general
root-system machinery here.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from functools import lru_cache

Weight = tuple
SignedVector = tuple


def is_dominant(parts) -> bool:
    """True when the components are weakly decreasing and nonnegative."""
    if len(parts) == 0:
        return True
    return parts[-1] >= 0 and all(a >= b for a, b in zip(parts, parts[1:]))


def check_dominant(parts) -> None:
    if not is_dominant(parts):
        raise ValueError(f"not a dominant weight: {parts!r}")


def in_alcove(parts, N: int) -> bool:
    """Membership in the alcove: dominant with every part at most N."""
    return is_dominant(parts) and (len(parts) == 0 or parts[0] <= N)


def total_key(lam):
    """Sort key realizing the graded total order: first the size |lam|,
    then lexicographic comparison of the parts.

    This refines the dominance order: if mu < lam in dominance then either
    |mu| < |lam|, or the sizes agree and the first differing part of mu is
    smaller (forced by the partial-sum inequalities), so mu sorts first.
    """
    return (sum(lam), lam)


def total_compare(mu, lam) -> int:
    """-1, 0, or +1 according to the graded total order."""
    if len(mu) != len(lam):
        raise ValueError("weights of different lengths are not comparable")
    a, b = total_key(mu), total_key(lam)
    return (a > b) - (a < b)


def dominance_leq(mu, lam) -> bool:
    """Dominance partial order: every leading partial sum of mu is bounded
    by the corresponding partial sum of lam."""
    if len(mu) != len(lam):
        raise ValueError("weights of different lengths are not comparable")
    s = t = 0
    for a, b in zip(mu, lam):
        s += a
        t += b
        if s > t:
            return False
    return True


def enumerate_alcove(n: int, N: int) -> list:
    """All dominant weights with n parts bounded by N, sorted by the graded
    total order.  The count is binomial(N + n, n)."""
    if n < 1:
        raise ValueError("need at least one variable")
    if N < 0:
        raise ValueError("alcove bound must be nonnegative")
    weights = [
        tuple(sorted(c, reverse=True))
        for c in itertools.combinations_with_replacement(range(N + 1), n)
    ]
    weights.sort(key=total_key)
    return weights


def alcove_size(n: int, N: int) -> int:
    return math.comb(N + n, n)


@lru_cache(maxsize=None)
def orbit(lam) -> tuple:
    """The distinct signed permutations of lam, each exactly once.

    Zero components admit no sign duplication, so the orbit size is
    2**n * n! divided by the stabilizer order.
    """
    check_dominant(lam)
    seen = set()
    for perm in set(itertools.permutations(lam)):
        nonzero = [i for i, v in enumerate(perm) if v != 0]
        for signs in itertools.product((1, -1), repeat=len(nonzero)):
            vec = list(perm)
            for i, s in zip(nonzero, signs):
                vec[i] = s * vec[i]
            seen.add(tuple(vec))
    return tuple(sorted(seen, reverse=True))


@lru_cache(maxsize=None)
def permutation_orbit(lam) -> tuple:
    """The distinct plain permutations of lam (no sign flips)."""
    check_dominant(lam)
    return tuple(sorted(set(itertools.permutations(lam)), reverse=True))


def stabilizer_size(lam) -> int:
    """Order of the stabilizer of lam in the signed-permutation group:
    factorials of the multiplicities, with an extra 2 per zero part."""
    size = 1
    for value, mult in Counter(lam).items():
        size *= math.factorial(mult)
        if value == 0:
            size *= 2 ** mult
    return size
