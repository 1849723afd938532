"""Shared test helpers: independent oracles and sweep generators."""

import random
from fractions import Fraction
from itertools import combinations

from toricbundles import _linalg as la
from toricbundles import transform_polytope


def sigma_subsets(v, i):
    """Elementary symmetric function by direct subset expansion (exponential oracle)."""
    if i == 0:
        return 1
    return sum(prod for prod in (_product(sub) for sub in combinations(v, i)))


def _product(vals):
    out = 1
    for x in vals:
        out *= x
    return out


def sigma_newton(v, i):
    """Elementary symmetric function from power sums via Newton's identities."""
    n = len(v)
    if i > n:
        return 0
    p = [sum(x**k for x in v) for k in range(i + 1)]
    e = [1]
    for m in range(1, i + 1):
        acc = 0
        for k in range(1, m + 1):
            acc += (-1) ** (k - 1) * e[m - k] * p[k]
        q, rem = divmod(acc, m)
        assert rem == 0, "Newton recurrence must stay integral"
        e.append(q)
    return e[i]


def nondecreasing_vectors(r, max_sum, include_zero=True):
    """All sorted non-negative integer vectors of length r with sum <= max_sum."""
    out = []

    def grow(prefix, lo, budget):
        if len(prefix) == r:
            out.append(prefix)
            return
        for v in range(lo, budget + 1):
            grow(prefix + (v,), v, budget - v)

    grow((), 0, max_sum)
    if not include_zero:
        out = [v for v in out if any(v)]
    return out


def random_unimodular(rng: random.Random, n: int):
    """A random integer matrix of determinant +-1 built from elementary operations."""
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        op = rng.randrange(3)
        i = rng.randrange(n)
        j = rng.randrange(n)
        if op == 0 and i != j:
            c = rng.choice((-2, -1, 1, 2))
            for k in range(n):
                m[i][k] += c * m[j][k]
        elif op == 1 and i != j:
            m[i], m[j] = m[j], m[i]
        elif op == 2:
            m[i] = [-x for x in m[i]]
    mat = tuple(tuple(row) for row in m)
    assert la.det_int(mat) in (1, -1)
    return mat


def scramble_polytope(P, rng: random.Random):
    """Image of P under a random unimodular map and integer translation."""
    u = random_unimodular(rng, P.dim)
    w = tuple(rng.randint(-3, 3) for _ in range(P.dim))
    return transform_polytope(P, u, w)


def ehrhart_volume(P):
    """Exact volume of an integral polytope by Ehrhart interpolation.

    Counts lattice points of the dilates mP for m = 0..n and takes the n-th
    finite difference over n!; valid because every vertex of P is integral.
    """
    n = P.dim
    counts = [_lattice_points(P, m) for m in range(n + 1)]
    for _ in range(n):
        counts = [b - a for a, b in zip(counts, counts[1:])]
    vol = Fraction(counts[0])
    for k in range(2, n + 1):
        vol /= k
    return vol


def _lattice_points(P, m):
    from toricbundles import vertices

    if m == 0:
        return 1
    verts = [v.point for v in vertices(P)]
    assert all(x.denominator == 1 for v in verts for x in v), "integral polytope required"
    lo = [min(int(v[i]) for v in verts) * m for i in range(P.dim)]
    hi = [max(int(v[i]) for v in verts) * m for i in range(P.dim)]
    rows = [f.conormal for f in P.facets]
    consts = [m * f.constant for f in P.facets]
    count = 0
    point = lo[:]

    def rec(idx):
        nonlocal count
        if idx == P.dim:
            count += all(
                sum(row[i] * point[i] for i in range(P.dim)) <= c
                for row, c in zip(rows, consts)
            )
            return
        for val in range(lo[idx], hi[idx] + 1):
            point[idx] = val
            rec(idx + 1)

    rec(0)
    return count
