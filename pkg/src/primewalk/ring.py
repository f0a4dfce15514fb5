"""Exact arithmetic in Z[i] and Z[sqrt 2].

Elements are ``a + b*sqrt(d)`` with integer coordinates, ``d`` in {-1, 2}.
The plane embedding used everywhere in the package is ``(x, y) = (a, b)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


class Ring(enum.IntEnum):
    """Supported rings, keyed by the square-free parameter ``d``."""

    GAUSS = -1
    ZSQRT2 = 2

    @property
    def d(self) -> int:
        return int(self)

    @classmethod
    def parse(cls, value: "Ring | int | str") -> "Ring":
        if isinstance(value, Ring):
            return value
        if isinstance(value, str):
            key = value.strip().lower()
            aliases = {
                "gauss": cls.GAUSS, "zi": cls.GAUSS, "-1": cls.GAUSS,
                "zsqrt2": cls.ZSQRT2, "sqrt2": cls.ZSQRT2, "2": cls.ZSQRT2,
            }
            if key not in aliases:
                raise ValueError(f"unknown ring {value!r}")
            return aliases[key]
        try:
            return cls(int(value))
        except ValueError:
            raise ValueError(f"unsupported ring parameter d={value!r}; use -1 or 2") from None

    @property
    def label(self) -> str:
        return "gauss" if self is Ring.GAUSS else "zsqrt2"


def _check_coord(v: int) -> int:
    v = int(v)
    if not INT64_MIN <= v <= INT64_MAX:
        raise OverflowError(f"coordinate {v} does not fit in a signed 64-bit integer")
    return v


@dataclass(frozen=True, order=True)
class QuadInt:
    """The element ``a + b*sqrt(d)``; orders lexicographically by ``(a, b)``."""

    a: int
    b: int
    ring: Ring = Ring.ZSQRT2

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", _check_coord(self.a))
        object.__setattr__(self, "b", _check_coord(self.b))
        object.__setattr__(self, "ring", Ring.parse(self.ring))

    @property
    def xy(self) -> tuple[int, int]:
        return (self.a, self.b)

    def norm(self) -> int:
        return norm(self)

    def conjugate(self) -> "QuadInt":
        return conjugate(self)

    def __mul__(self, other: "QuadInt") -> "QuadInt":
        return mul(self, other)

    def __neg__(self) -> "QuadInt":
        return QuadInt(-self.a, -self.b, self.ring)

    def __str__(self) -> str:
        unit = "i" if self.ring is Ring.GAUSS else "√2"
        sign = "-" if self.b < 0 else "+"
        return f"{self.a}{sign}{abs(self.b)}{unit}"


@dataclass(frozen=True)
class UnitPower:
    """``sign * (1+sqrt2)**exponent`` in Z[sqrt 2], ``sign * i**exponent`` in Z[i]."""

    exponent: int
    sign: int = 1

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")


def norm(q: QuadInt) -> int:
    """Return ``a**2 - d*b**2`` exactly."""
    return q.a * q.a - q.ring.d * q.b * q.b


def conjugate(q: QuadInt) -> QuadInt:
    return QuadInt(q.a, -q.b, q.ring)


def mul(p: QuadInt, q: QuadInt) -> QuadInt:
    if p.ring is not q.ring:
        raise ValueError(f"ring mismatch: {p.ring.label} * {q.ring.label}")
    d = p.ring.d
    return QuadInt(p.a * q.a + d * p.b * q.b, p.a * q.b + p.b * q.a, p.ring)


def is_unit(q: QuadInt) -> bool:
    return abs(norm(q)) == 1


def unit_pow(ring: Ring | int, u: UnitPower) -> QuadInt:
    """Materialise a unit. Negative exponents are allowed in Z[sqrt 2]."""
    ring = Ring.parse(ring)
    if ring is Ring.GAUSS:
        a, b = [(1, 0), (0, 1), (-1, 0), (0, -1)][u.exponent % 4]
        return QuadInt(u.sign * a, u.sign * b, ring)
    # (1+sqrt2)^-1 = -1+sqrt2
    base = QuadInt(1, 1, ring) if u.exponent >= 0 else QuadInt(-1, 1, ring)
    result = QuadInt(u.sign, 0, ring)
    e = abs(u.exponent)
    while e:
        if e & 1:
            result = mul(result, base)
        base = mul(base, base) if e > 1 else base
        e >>= 1
    return result


def _in_box(q: QuadInt, box: tuple[int, int, int, int]) -> bool:
    x0, x1, y0, y1 = box
    return x0 <= q.a <= x1 and y0 <= q.b <= y1


def _unit_orbit(q: QuadInt, box: tuple[int, int, int, int]) -> Iterator[QuadInt]:
    """Yield ``q * (1+sqrt2)**m`` for every m whose image can still reach the box."""
    x0, x1, y0, y1 = box
    reach = max(abs(x0), abs(x1)) ** 2 + max(abs(y0), abs(y1)) ** 2
    for step in (QuadInt(1, 1, q.ring), QuadInt(-1, 1, q.ring)):
        z = q if step.a == 1 else mul(q, step)
        prev = None
        while True:
            size = z.a * z.a + z.b * z.b
            yield z
            # |z u^m|^2 is convex in m, so once it grows past the box it stays out
            if size > reach and prev is not None and size > prev:
                break
            prev = size
            z = mul(z, step)


def associates_in_box(q: QuadInt, box: tuple[int, int, int, int]) -> list[QuadInt]:
    """All associates of ``q`` lying in ``[x0, x1] x [y0, y1]``, sorted by ``(a, b)``.

    ``box`` is ``(x0, x1, y0, y1)`` with inclusive bounds; an inverted range is empty.
    """
    x0, x1, y0, y1 = box
    if x0 > x1 or y0 > y1 or (q.a == 0 and q.b == 0):
        return [q] if (q.a == 0 and q.b == 0 and _in_box(q, box)) else []
    found: set[QuadInt] = set()
    if q.ring is Ring.GAUSS:
        candidates: Iterator[QuadInt] = (
            mul(q, unit_pow(q.ring, UnitPower(e))) for e in range(4)
        )
    else:
        candidates = _unit_orbit(q, box)
    for z in candidates:
        for w in (z, -z):
            if _in_box(w, box):
                found.add(w)
    return sorted(found)
