"""Regions of the lattice, prime enumeration, and norm-curve families."""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

from .primality import classify, is_rational_prime, prime_mask, prime_sieve
from .ring import QuadInt, Ring, conjugate, mul, norm

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)


def _exact(value) -> Fraction:
    if isinstance(value, str):
        return Fraction(value)
    return Fraction(value)


def _le_sqrt2_times(lhs: Fraction, m: Fraction) -> bool:
    """Exact test of ``lhs <= sqrt(2) * m``."""
    if m >= 0:
        return lhs <= 0 or lhs * lhs <= 2 * m * m
    return lhs <= 0 and lhs * lhs >= 2 * m * m


@dataclass(frozen=True)
class Disk:
    """Closed disk about the origin; membership is ``a^2 + b^2 <= floor(radius^2)``."""

    radius: float

    def __post_init__(self) -> None:
        if not self.radius > 0:
            raise ValueError("disk radius must be positive")

    @property
    def r2(self) -> int:
        return math.floor(_exact(self.radius) ** 2)

    def bbox(self) -> tuple[int, int, int, int]:
        m = math.isqrt(self.r2)
        return (-m, m, -m, m)

    def contains(self, a: int, b: int) -> bool:
        return a * a + b * b <= self.r2

    def mask(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return a * a + b * b <= self.r2


@dataclass(frozen=True)
class Rect:
    x0: int
    x1: int
    y0: int
    y1: int

    def bbox(self) -> tuple[int, int, int, int]:
        return (self.x0, self.x1, self.y0, self.y1)

    def contains(self, a: int, b: int) -> bool:
        return self.x0 <= a <= self.x1 and self.y0 <= b <= self.y1

    def mask(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return (a >= self.x0) & (a <= self.x1) & (b >= self.y0) & (b <= self.y1)


@dataclass(frozen=True)
class NormRegion:
    """``|x^2 - 2y^2| <= r2``. Unbounded; only usable as a membership predicate."""

    r2: int

    def contains(self, a: int, b: int) -> bool:
        return abs(a * a - 2 * b * b) <= self.r2


@dataclass(frozen=True)
class AsymptoteStrip:
    """Points with ``0 <= x <= xmax`` within distance ``r`` of the line ``y = x/sqrt2``."""

    r: float
    xmax: int

    def __post_init__(self) -> None:
        if not self.r > 0 or self.xmax < 0:
            raise ValueError("strip needs r > 0 and xmax >= 0")

    def bbox(self) -> tuple[int, int, int, int]:
        w = SQRT3 * float(self.r)
        return (0, self.xmax, math.floor(-w / SQRT2) - 1, math.ceil((self.xmax + w) / SQRT2) + 1)

    def contains(self, a: int, b: int) -> bool:
        if not 0 <= a <= self.xmax:
            return False
        # distance = |a - sqrt2 b| / sqrt3, so test (a - sqrt2 b)^2 <= 3 r^2
        lhs = Fraction(a * a + 2 * b * b) - 3 * _exact(self.r) ** 2
        return _le_sqrt2_times(lhs, Fraction(2 * a * b))

    def mask(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        gap = np.abs(a - SQRT2 * b) / SQRT3 - float(self.r)
        scale = 1e-9 * (1.0 + np.abs(a) + np.abs(b))
        inside = (gap < -scale) & (a >= 0) & (a <= self.xmax)
        unsure = np.flatnonzero((np.abs(gap) <= scale).ravel())
        flat = inside.ravel()
        av, bv = a.ravel(), b.ravel()
        for i in unsure:
            flat[i] = self.contains(int(av[i]), int(bv[i]))
        return flat.reshape(inside.shape)


Region = Union[Disk, Rect, NormRegion, AsymptoteStrip]


def _require_finite(region: Region) -> None:
    if isinstance(region, NormRegion):
        raise ValueError("a norm region holds infinitely many primes; use a finite region")


def _chunk_points(ring: Ring, region: Region, xs: np.ndarray, y0: int, y1: int,
                  table: np.ndarray) -> np.ndarray:
    if xs.size == 0 or y1 < y0:
        return np.empty((0, 2), dtype=np.int64)
    ys = np.arange(y0, y1 + 1, dtype=np.int64)
    a, b = np.meshgrid(xs, ys, indexing="ij")
    keep = region.mask(a, b)
    a, b = a[keep], b[keep]
    hit = prime_mask(ring, a, b, table)
    return np.column_stack([a[hit], b[hit]])


def _max_abs_norm(ring: Ring, box: tuple[int, int, int, int]) -> int:
    x0, x1, y0, y1 = box
    ax = max(abs(x0), abs(x1))
    ay = max(abs(y0), abs(y1))
    return ax * ax + ay * ay if ring is Ring.GAUSS else max(ax * ax, 2 * ay * ay)


def prime_points(ring: Ring | int, region: Region, threads: int | None = None) -> np.ndarray:
    """Primes of ``region`` as an ``(n, 2)`` int64 array sorted by ``(a, b)``.

    Rows of the bounding box are split across ``threads`` workers; the merged
    result does not depend on the split.
    """
    ring = Ring.parse(ring)
    _require_finite(region)
    x0, x1, y0, y1 = region.bbox()
    if x1 < x0 or y1 < y0:
        return np.empty((0, 2), dtype=np.int64)
    if max(abs(x0), abs(x1), abs(y0), abs(y1)) > (1 << 31):
        raise OverflowError("region coordinates too large for vectorised enumeration")
    table = prime_sieve(_max_abs_norm(ring, (x0, x1, y0, y1)))
    xs = np.arange(x0, x1 + 1, dtype=np.int64)
    rows_per_chunk = max(1, (1 << 20) // (y1 - y0 + 1))
    chunks = [xs[i : i + rows_per_chunk] for i in range(0, xs.size, rows_per_chunk)]
    workers = max(1, threads or os.cpu_count() or 1)
    if workers == 1 or len(chunks) == 1:
        parts = [_chunk_points(ring, region, c, y0, y1, table) for c in chunks]
    else:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(lambda c: _chunk_points(ring, region, c, y0, y1, table), chunks))
    pts = np.concatenate(parts) if parts else np.empty((0, 2), dtype=np.int64)
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    return pts[order]


def primes_in_region(ring: Ring | int, region: Region, threads: int | None = None) -> list[QuadInt]:
    ring = Ring.parse(ring)
    return [QuadInt(int(a), int(b), ring) for a, b in prime_points(ring, region, threads)]


def count_primes_in_disk(ring: Ring | int, radius: float) -> int:
    return int(len(prime_points(ring, Disk(radius))))


def family_contains_primes(k: int) -> bool:
    """Whether the norm curve ``x^2 - 2y^2 = k`` carries primes of Z[sqrt 2]."""
    if k == 0:
        raise ValueError("k must be non-zero")
    n = abs(int(k))
    if n == 2:
        return True
    if n % 8 in (1, 7) and is_rational_prime(n):
        return True
    s = math.isqrt(n)
    return s * s == n and s % 8 in (3, 5) and is_rational_prime(s)


def families_with_primes(r2: int) -> list[int]:
    """Every ``k`` with ``|k| <= r2`` whose norm curve carries primes, ascending."""
    r2 = int(r2)
    if r2 < 2:
        return []
    table = prime_sieve(r2)
    p = np.flatnonzero(table)
    split = p[(p % 8 == 1) | (p % 8 == 7)]
    inert = p[((p % 8 == 3) | (p % 8 == 5)) & (p * p <= r2)]
    pos = np.concatenate([[2], split, inert * inert]).astype(np.int64)
    return sorted(int(v) for v in np.concatenate([-pos, pos]))


def representable_mask(n: int) -> np.ndarray:
    """``m[k]`` true iff ``k = x^2 - 2y^2`` has an integer solution, ``0 <= k <= n``.

    Uses the norm-form criterion: ``k > 0`` is a norm exactly when every prime
    ``q = 3, 5 (mod 8)`` divides it to an even power.
    """
    n = int(n)
    ok = np.ones(n + 1, dtype=bool)
    ok[0] = True
    primes = np.flatnonzero(prime_sieve(max(n, 2)))
    for q in primes[(primes % 8 == 3) | (primes % 8 == 5)]:
        q = int(q)
        if q * q > n:
            ok[q::q] = False
            continue
        parity = np.zeros(n + 1, dtype=np.int8)
        qe = q
        while qe <= n:
            parity[qe::qe] ^= 1
            qe *= q
        ok &= parity == 0
    return ok


def representable_count(n: int) -> int:
    """Number of ``1 <= k <= n`` of the form ``x^2 - 2y^2``."""
    if n < 1:
        raise ValueError("n must be positive")
    return int(representable_mask(n)[1:].sum())


def _first_quadrant(z: QuadInt) -> bool:
    return z.a >= 0 and z.b >= 0


def primes_between_on_branch(P: QuadInt) -> int:
    """Primes on ``NC(norm P)`` in the closed first quadrant strictly between ``P``
    and ``P*(1+sqrt2)^2`` in Euclidean length.

    The candidates are the four orbits ``+-P_m``, ``+-conj(P_m)`` under the square
    of the fundamental unit, which exhaust the primes on the curve.
    """
    if P.ring is not Ring.ZSQRT2:
        raise ValueError("only defined in Z[sqrt 2]")
    if not _first_quadrant(P) or not classify(P).is_prime:
        raise ValueError(f"{P} must be a first-quadrant prime")
    eps2 = QuadInt(3, 2)
    eps2_inv = QuadInt(3, -2)
    upper = mul(P, eps2)
    lo = P.a * P.a + P.b * P.b
    hi = upper.a * upper.a + upper.b * upper.b
    found: set[QuadInt] = set()
    for seed in (P, -P, conjugate(P), -conjugate(P)):
        for step in (eps2, eps2_inv):
            z, prev = seed, None
            while True:
                size = z.a * z.a + z.b * z.b
                if lo < size < hi and _first_quadrant(z):
                    found.add(z)
                if size > hi and prev is not None and size > prev:
                    break
                prev, z = size, mul(z, step)
    assert all(norm(z) == norm(P) for z in found)
    return len(found)
