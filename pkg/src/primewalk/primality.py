"""Rational primality, ring primality verdicts and the x^2 - 2y^2 = p solver."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .ring import QuadInt, Ring, norm

# Bases 2..37 make Miller-Rabin exact below this bound (Sorenson & Webster).
MR_DETERMINISTIC_LIMIT = 318665857834031151167461
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = _MR_BASES + (41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


class Verdict(enum.Enum):
    ZERO = "Zero"
    UNIT = "Unit"
    PRIME = "Prime"
    COMPOSITE = "Composite"


class PrimeKind(enum.Enum):
    RAMIFIED_GENERATOR = "RamifiedGenerator"
    SPLIT_NORM = "SplitNorm"
    INERT_RATIONAL = "InertRational"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    kind: PrimeKind | None = None

    @property
    def is_prime(self) -> bool:
        return self.verdict is Verdict.PRIME

    def __str__(self) -> str:
        if self.kind is None:
            return self.verdict.value
        return f"{self.verdict.value}({self.kind.value})"


@dataclass(frozen=True)
class Representation:
    p: int
    a: int
    b: int


def is_rational_prime(n: int) -> bool:
    """Deterministic primality test.

    Exact for every ``n`` below ``MR_DETERMINISTIC_LIMIT`` (about 3.2e23, which
    covers all 64-bit inputs). Larger inputs raise ``OverflowError`` rather than
    falling back to a probabilistic answer.
    """
    n = int(n)
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < 97 * 97:
        return True
    if n >= MR_DETERMINISTIC_LIMIT:
        raise OverflowError(f"{n} exceeds the deterministic primality range")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_sieve(limit: int) -> np.ndarray:
    """Boolean table ``t`` with ``t[n]`` true iff ``n`` is prime, for ``0 <= n <= limit``."""
    limit = max(int(limit), 1)
    table = np.ones(limit + 1, dtype=bool)
    table[:2] = False
    table[4::2] = False
    for p in range(3, math.isqrt(limit) + 1, 2):
        if table[p]:
            table[p * p :: 2 * p] = False
    return table


def _split_residue(ring: Ring, p: int) -> bool:
    if ring is Ring.ZSQRT2:
        return p % 8 in (1, 7)
    return p % 4 == 1


def _inert_residue(ring: Ring, p: int) -> bool:
    if ring is Ring.ZSQRT2:
        return p % 8 in (3, 5)
    return p % 4 == 3


def classify_norm(ring: Ring, n: int) -> Classification:
    """Verdict for any element whose norm has absolute value ``n``.

    Both rings are UFDs in which every rational prime has a single prime above it
    up to conjugation, so the verdict depends on ``|norm|`` alone.
    """
    n = abs(int(n))
    if n == 0:
        return Classification(Verdict.ZERO)
    if n == 1:
        return Classification(Verdict.UNIT)
    if n == 2:
        return Classification(Verdict.PRIME, PrimeKind.RAMIFIED_GENERATOR)
    if is_rational_prime(n):
        if _split_residue(ring, n):
            return Classification(Verdict.PRIME, PrimeKind.SPLIT_NORM)
        return Classification(Verdict.COMPOSITE)  # unreachable for odd prime norms
    s = math.isqrt(n)
    if s * s == n and _inert_residue(ring, s) and is_rational_prime(s):
        return Classification(Verdict.PRIME, PrimeKind.INERT_RATIONAL)
    return Classification(Verdict.COMPOSITE)


def classify(q: QuadInt) -> Classification:
    """Zero / unit / prime (with its kind) / composite verdict for ``q``."""
    return classify_norm(q.ring, norm(q))


def prime_mask(ring: Ring, a: np.ndarray, b: np.ndarray, table: np.ndarray | None = None) -> np.ndarray:
    """Vectorised ``classify(...).is_prime`` over integer coordinate arrays.

    ``table`` must be a ``prime_sieve`` covering the largest ``|norm|``; one is
    built when omitted.
    """
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    n = np.abs(a * a - ring.d * b * b)
    if n.size == 0:
        return np.zeros(n.shape, dtype=bool)
    top = int(n.max())
    if table is None:
        table = prime_sieve(top)
    elif len(table) <= top:
        raise ValueError("prime table too small for these coordinates")
    s = np.sqrt(n.astype(np.float64)).round().astype(np.int64)
    square = s * s == n
    if ring is Ring.ZSQRT2:
        split = (n % 8 == 1) | (n % 8 == 7)
        inert = (s % 8 == 3) | (s % 8 == 5)
    else:
        split = n % 4 == 1
        inert = s % 4 == 3
    return (n == 2) | (table[n] & split) | (square & table[s] & inert)


class PrimeOracle:
    """Memoised point primality: sieve lookups up to ``limit``, Miller-Rabin beyond."""

    def __init__(self, ring: Ring, limit: int = 1 << 22):
        self.ring = Ring.parse(ring)
        self.limit = int(limit)
        self._table = prime_sieve(self.limit)
        self._cache: dict[tuple[int, int], bool] = {}

    def _rational(self, n: int) -> bool:
        return bool(self._table[n]) if n <= self.limit else is_rational_prime(n)

    def __call__(self, a: int, b: int) -> bool:
        key = (a, b)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        n = abs(a * a - self.ring.d * b * b)
        if n == 2:
            result = True
        elif n > 2 and _split_residue(self.ring, n) and self._rational(n):
            result = True
        else:
            s = math.isqrt(n)
            result = n > 1 and s * s == n and _inert_residue(self.ring, s) and self._rational(s)
        self._cache[key] = result
        return result


def legendre(c: int, p: int) -> int:
    r = pow(c % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def sqrt_mod_prime(c: int, p: int) -> int:
    """Smaller square root of ``c`` modulo the odd prime ``p`` (Tonelli-Shanks)."""
    if p < 3 or p % 2 == 0:
        raise ValueError(f"modulus must be an odd prime, got {p}")
    c %= p
    if c == 0:
        raise ValueError("c must be a unit modulo p")
    if legendre(c, p) != 1:
        raise ValueError(f"{c} is not a quadratic residue modulo {p}")
    if p % 4 == 3:
        x = pow(c, (p + 1) // 4, p)
        return min(x, p - x)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    m, cc, t, x = s, pow(z, q, p), pow(c, q, p), pow(c, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        bfac = pow(cc, 1 << (m - i - 1), p)
        m, cc = i, bfac * bfac % p
        t, x = t * cc % p, x * bfac % p
    return min(x, p - x)


def _thue_pair(c: int, p: int) -> tuple[int, int]:
    """Small ``(x, y)`` with ``x = c*y (mod p)`` and ``|x|, |y| < sqrt(p)``.

    Runs the Euclidean algorithm on ``(p, c)`` tracking the coefficient of ``c``
    and stops at the first remainder below ``sqrt(p)``.
    """
    r0, r1 = p, c
    t0, t1 = 0, 1
    while r1 * r1 >= p:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    return r1, t1


def _reduce_representation(a: int, b: int) -> tuple[int, int]:
    """Walk down the unit orbit to the positive pair with the smallest ``a``."""
    while True:
        # multiply by (1+sqrt2)^-2 = 3 - 2 sqrt2
        na, nb = abs(3 * a - 4 * b), abs(3 * b - 2 * a)
        if na >= a:
            return a, b
        a, b = na, nb


def represent_prime(p: int) -> Representation:
    """Write the prime ``p = 1, 7 (mod 8)`` as ``a**2 - 2*b**2`` with ``a, b > 0``.

    Returns the representation with the smallest ``a`` in its unit orbit, so the
    result is canonical (7 -> (3, 1), 17 -> (5, 2)).
    """
    p = int(p)
    if p % 8 not in (1, 7):
        raise ValueError(f"{p} is not 1 or 7 mod 8; it has no representation a^2 - 2b^2")
    if not is_rational_prime(p):
        raise ValueError(f"{p} is not prime")
    c = sqrt_mod_prime(2, p)
    x, y = _thue_pair(c, p)
    value = x * x - 2 * y * y
    if value == -p:
        x, y = x + 2 * y, x + y
    elif value != p:  # pragma: no cover - excluded by the congruence argument
        raise ArithmeticError(f"reduction produced {value} for p={p}")
    a, b = _reduce_representation(abs(x), abs(y))
    return Representation(p, a, b)
