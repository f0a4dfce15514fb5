"""Brute-force reference implementations used only by the tests.

None of these rely on the classification theorems; they search factors,
coordinates and point pairs directly.
"""

from __future__ import annotations

import math
from collections import defaultdict
from functools import lru_cache

import numpy as np

from primewalk.ring import QuadInt, Ring


def trial_division_is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in range(2, math.isqrt(n) + 1):
        if n % p == 0:
            return False
    return True


def smallest_factor(n: int) -> int:
    for p in range(2, math.isqrt(n) + 1):
        if n % p == 0:
            return p
    return n


@lru_cache(maxsize=None)
def _divisor_table(d: int, box: int, max_norm: int) -> dict[int, list[tuple[int, int, int]]]:
    """Elements of the coordinate box grouped by |norm|, keeping 1 < |norm| <= max_norm."""
    r = np.arange(-box, box + 1, dtype=np.int64)
    a, b = np.meshgrid(r, r, indexing="ij")
    n = a * a - d * b * b
    keep = (np.abs(n) > 1) & (np.abs(n) <= max_norm)
    table: dict[int, list[tuple[int, int, int]]] = defaultdict(list)
    for x, y, v in zip(a[keep].tolist(), b[keep].tolist(), n[keep].tolist()):
        table[abs(v)].append((x, y, v))
    return dict(table)


def brute_force_is_prime(q: QuadInt, box: int = 200, max_norm: int = 20000) -> bool:
    """True iff ``q`` is a non-zero non-unit with no split ``q = u*v`` where both
    factors have ``|norm| > 1``; ``u`` ranges over the box ``[-box, box]^2``.
    """
    d = q.ring.d
    n = abs(q.a * q.a - d * q.b * q.b)
    if n <= 1:
        return False
    if n // 2 > max_norm:
        raise ValueError("raise max_norm to cover the proper divisors of this norm")
    table = _divisor_table(d, box, max_norm)
    for m in range(2, math.isqrt(n) + 1):
        if n % m:
            continue
        for dn in {m, n // m}:
            if dn == n:
                continue
            for x, y, v in table.get(dn, ()):
                # q / u = q * conj(u) / N(u)
                re = q.a * x - d * q.b * y
                im = q.b * x - q.a * y
                if re % v == 0 and im % v == 0:
                    return False
    return True


def brute_force_representation(p: int) -> tuple[int, int] | None:
    """Smallest ``b > 0`` (and its ``a > 0``) with ``a^2 - 2b^2 = p``."""
    for b in range(1, math.isqrt(p) + 2):
        a2 = p + 2 * b * b
        a = math.isqrt(a2)
        if a * a == a2:
            return a, b
    return None


def sweep_representable(n: int) -> np.ndarray:
    """Mark ``1 <= k <= n`` hit by ``x^2 - 2y^2`` over a generous coordinate box.

    Every positive norm has a solution with ``y^2 <= k/2`` and ``x^2 <= 2k``,
    so the box below covers all ``k <= n``.
    """
    xs = np.arange(0, 2 * math.isqrt(n) + 3, dtype=np.int64)
    hit = np.zeros(n + 1, dtype=bool)
    for y in range(0, math.isqrt(n) + 2):
        k = xs * xs - 2 * y * y
        k = k[(k >= 1) & (k <= n)]
        hit[k] = True
    hit[0] = False
    return hit


def curve_points(k: int, bmax: int) -> list[tuple[int, int]]:
    """Lattice points of ``x^2 - 2y^2 = k`` with ``|y| <= bmax``."""
    out = []
    for b in range(-bmax, bmax + 1):
        a2 = k + 2 * b * b
        if a2 < 0:
            continue
        a = math.isqrt(a2)
        if a * a == a2:
            out.extend({(a, b), (-a, b)})
    return sorted(out)


def all_pairs_neighbors(points: list[tuple[int, int]], k2: int) -> dict[tuple[int, int], list[tuple[int, int]]]:
    arr = np.array(points, dtype=np.int64).reshape(-1, 2)
    d2 = ((arr[:, None, :] - arr[None, :, :]) ** 2).sum(axis=2)
    adj = (d2 > 0) & (d2 <= k2)
    return {points[i]: [points[j] for j in np.flatnonzero(adj[i])] for i in range(len(points))}


def bfs_reference(adj: dict, start) -> set:
    seen, stack = {start}, [start]
    while stack:
        for q in adj[stack.pop()]:
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return seen


def brute_primes_in_box(ring: Ring, x0: int, x1: int, y0: int, y1: int, keep=lambda a, b: True) -> list[QuadInt]:
    return [QuadInt(a, b, ring) for a in range(x0, x1 + 1) for b in range(y0, y1 + 1)
            if keep(a, b) and brute_force_is_prime(QuadInt(a, b, ring))]
