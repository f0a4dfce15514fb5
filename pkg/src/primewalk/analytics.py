"""Asymptotic counts, empirical constants and the moat-bound geometry."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .enumeration import Disk, prime_points, representable_count
from .ring import Ring


def _check_r(r: float) -> float:
    r = float(r)
    if not r > 1:
        raise ValueError(f"asymptotic formulas need r > 1, got {r}")
    return r


def gaussian_disk_count_asymptotic(r: float) -> float:
    """Expected number of Gaussian primes in the disk of radius ``r``: ``2 r^2 / log r``."""
    r = _check_r(r)
    return 2 * r * r / math.log(r)


def gaussian_density_asymptotic(r: float) -> float:
    r = _check_r(r)
    return 2 / (math.pi * math.log(r))


def family_count_asymptotic(r: float) -> float:
    """Expected number of prime-carrying norm curves with ``|k| <= r^2``."""
    r = _check_r(r)
    return r * r / (2 * math.log(r))


def family_density_asymptotic(r: float, b: float) -> float:
    """Probability that a lattice point of ``NR(r^2)`` lies on a prime family.

    ``b`` is the Bernays constant for the form ``x^2 - 2y^2``.
    """
    r = _check_r(r)
    if not b > 0:
        raise ValueError("b must be positive")
    return 1 / (2 * b * math.sqrt(2 * math.log(r)))


def rational_prime_count_asymptotic(x: float) -> float:
    x = _check_r(x)
    return x / math.log(x)


@dataclass(frozen=True)
class BernaysEstimate:
    n: int
    count: int
    b_estimate: float


def estimate_bernays_constant(n: int) -> BernaysEstimate:
    """Empirical ``B(n) * sqrt(log n) / n`` for the form ``x^2 - 2y^2``."""
    n = int(n)
    if n < 2:
        raise ValueError("n must be at least 2")
    count = representable_count(n)
    return BernaysEstimate(n, count, count * math.sqrt(math.log(n)) / n)


@dataclass(frozen=True)
class MoatBoundReport:
    r: float
    k: float
    x: float
    c_max: float
    d_CC: float
    PD: float
    steps_lower: float
    families_upper: float
    ratio: float


def moat_bound_report(r: float, k: float, x: float) -> MoatBoundReport:
    """Evaluate the strip argument at the asymptote point ``(x, x/sqrt2)``.

    ``steps_lower`` is the fewest steps of length ``k`` that cross the box;
    ``families_upper`` is twice the asymptotic count of prime curves with
    ``|norm| <= 2 sqrt3 r x``, i.e. the most primes available inside it.
    """
    r, k, x = float(r), float(k), float(x)
    if not (r > 0 and k > 0 and x > 0):
        raise ValueError("r, k and x must be positive")
    c_max = 2 * math.sqrt(3) * r * x
    yc = x / math.sqrt(2) - r * math.sqrt(2) / math.sqrt(3)
    d_cc = math.hypot(2 * x + 4 * yc, 2 * x + 2 * yc)
    if d_cc <= r or c_max <= 1:
        raise ValueError(f"x={x} is too small for r={r}: the crossing box degenerates")
    pd = math.sqrt(d_cc * d_cc - r * r)
    steps = pd / k
    families = 2 * c_max / (2 * math.log(math.sqrt(c_max)))
    return MoatBoundReport(r, k, x, c_max, d_cc, pd, steps, families, steps / families)


def moat_crossover(r: float, k: float, max_exponent: int = 300) -> float:
    """Smallest power of ten ``x`` at which ``steps_lower`` exceeds ``families_upper``."""
    for e in range(0, max_exponent + 1):
        x = 10.0 ** e
        try:
            rep = moat_bound_report(r, k, x)
        except ValueError:
            continue
        if rep.steps_lower > rep.families_upper:
            return x
    raise ValueError("no crossover below 10**max_exponent")


def compare_disk_counts(n_min: int, n_max: int) -> list[tuple[int, int, int]]:
    """Rows ``(n, #Gaussian primes, #Z[sqrt2] primes)`` in the disk of radius ``n``."""
    if not 1 <= n_min <= n_max:
        raise ValueError("need 1 <= n_min <= n_max")
    radii = np.arange(n_min, n_max + 1, dtype=np.int64)
    cols = []
    for ring in (Ring.GAUSS, Ring.ZSQRT2):
        pts = prime_points(ring, Disk(n_max))
        size = np.sort(pts[:, 0] * pts[:, 0] + pts[:, 1] * pts[:, 1])
        cols.append(np.searchsorted(size, radii * radii, side="right"))
    return [(int(n), int(g), int(s)) for n, g, s in zip(radii, cols[0], cols[1])]


def disk_lattice_count(r: float) -> int:
    r2 = Disk(r).r2
    m = math.isqrt(r2)
    return sum(2 * math.isqrt(r2 - x * x) + 1 for x in range(-m, m + 1))


def empirical_gaussian_density(r: float) -> float:
    """Share of lattice points in the radius-``r`` disk that are Gaussian primes."""
    return len(prime_points(Ring.GAUSS, Disk(r))) / disk_lattice_count(r)


def residue_class_shares(limit: int, modulus: int = 8) -> dict[int, float]:
    """Fraction of odd primes up to ``limit`` in each unit residue class."""
    from .primality import prime_sieve

    p = np.flatnonzero(prime_sieve(limit))
    p = p[np.gcd(p, modulus) == 1]
    classes = [c for c in range(modulus) if math.gcd(c, modulus) == 1]
    return {c: float(np.mean(p % modulus == c)) for c in classes}
