"""Bounded-step prime walks: neighbour graph, components, random walks, moat scans.

Step feasibility is always the exact integer test ``dx^2 + dy^2 <= k2``; a step
bound of ``sqrt 8`` is written ``k2 = 8``.

Random walks draw from numpy's PCG64. Step ``i`` of a walk seeded with ``s``
uses the stream ``Generator(PCG64(SeedSequence([s, i])))``, so every step has its
own substream and a path can be replayed from ``(start, seed)`` alone.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from .enumeration import Region, _max_abs_norm, _require_finite, prime_points
from .primality import PrimeOracle
from .ring import QuadInt, Ring

Point = tuple[int, int]


def step_offsets(k2: int) -> list[Point]:
    """Non-zero lattice offsets of squared length at most ``k2``, sorted."""
    m = math.isqrt(k2)
    return [(dx, dy) for dx in range(-m, m + 1) for dy in range(-m, m + 1)
            if 0 < dx * dx + dy * dy <= k2]


def _check_k2(k2: int) -> int:
    k2 = int(k2)
    if k2 < 1:
        raise ValueError("k2 must be a positive integer")
    return k2


@dataclass(frozen=True)
class ComponentSummary:
    start: QuadInt
    size: int
    farthest: QuadInt
    max_coordinate: int
    boundary_touched: bool
    members: tuple[QuadInt, ...] = field(repr=False, default=())

    def as_dict(self) -> dict:
        return {
            "start": [self.start.a, self.start.b],
            "size": self.size,
            "farthest": [self.farthest.a, self.farthest.b],
            "max_coordinate": self.max_coordinate,
            "boundary_touched": self.boundary_touched,
        }


@dataclass(frozen=True)
class WalkPath:
    steps: tuple[QuadInt, ...]
    seed: int
    k2: int


class WalkGraph:
    """Primes of a finite region joined when their squared distance is at most ``k2``.

    Points sit in square buckets of side ``ceil(sqrt k2)``, so a neighbour query
    only scans the 3x3 block of cells around the query point.
    """

    def __init__(self, ring: Ring, region: Region, k2: int, points: np.ndarray):
        self.ring = ring
        self.region = region
        self.k2 = k2
        self.cell = math.isqrt(k2 - 1) + 1
        self.coords: list[Point] = [(int(a), int(b)) for a, b in points]
        self.index = {p: i for i, p in enumerate(self.coords)}
        self.buckets: dict[Point, list[int]] = {}
        c = self.cell
        for i, (a, b) in enumerate(self.coords):
            self.buckets.setdefault((a // c, b // c), []).append(i)

    def __len__(self) -> int:
        return len(self.coords)

    def __contains__(self, p: QuadInt) -> bool:
        return p.ring is self.ring and p.xy in self.index

    @property
    def points(self) -> list[QuadInt]:
        return [QuadInt(a, b, self.ring) for a, b in self.coords]

    def _id(self, p: QuadInt) -> int:
        if p not in self:
            raise KeyError(f"{p} is not a prime of this graph")
        return self.index[p.xy]

    def neighbor_ids(self, i: int) -> list[int]:
        a, b = self.coords[i]
        c, k2 = self.cell, self.k2
        ca, cb = a // c, b // c
        out = []
        for gx in (ca - 1, ca, ca + 1):
            for gy in (cb - 1, cb, cb + 1):
                for j in self.buckets.get((gx, gy), ()):
                    qa, qb = self.coords[j]
                    d2 = (qa - a) ** 2 + (qb - b) ** 2
                    if 0 < d2 <= k2:
                        out.append(j)
        out.sort()  # ids follow (a, b) order
        return out

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(len(self)) for j in self.neighbor_ids(i) if i < j]


def build_walk_graph(ring: Ring | int, region: Region, k2: int,
                     threads: int | None = None) -> WalkGraph:
    ring = Ring.parse(ring)
    k2 = _check_k2(k2)
    _require_finite(region)
    return WalkGraph(ring, region, k2, prime_points(ring, region, threads))


def neighbors(g: WalkGraph, p: QuadInt) -> list[QuadInt]:
    """Primes of ``g`` at squared distance in ``(0, k2]`` from ``p``, sorted."""
    return [QuadInt(*g.coords[j], g.ring) for j in g.neighbor_ids(g._id(p))]


def _summarise(ring: Ring, start: Point, members: Iterable[Point], touched: bool) -> ComponentSummary:
    pts = sorted(members)
    far = max(pts, key=lambda p: (p[0] * p[0] + p[1] * p[1], p))
    reach = max(max(abs(a), abs(b)) for a, b in pts)
    return ComponentSummary(
        start=QuadInt(*start, ring),
        size=len(pts),
        farthest=QuadInt(*far, ring),
        max_coordinate=reach,
        boundary_touched=touched,
        members=tuple(QuadInt(a, b, ring) for a, b in pts),
    )


def _touches_boundary(region: Region, members: Iterable[Point], offsets: list[Point]) -> bool:
    for a, b in members:
        for dx, dy in offsets:
            if not region.contains(a + dx, b + dy):
                return True
    return False


def component_of(g: WalkGraph, start: QuadInt) -> ComponentSummary:
    """Breadth-first closure of ``start`` under ``neighbors``.

    ``boundary_touched`` is set when some member has a step-reachable lattice
    point outside the region, i.e. the sieve may have cut the component short.
    """
    s = g._id(start)
    seen = {s}
    queue = deque([s])
    while queue:
        for j in g.neighbor_ids(queue.popleft()):
            if j not in seen:
                seen.add(j)
                queue.append(j)
    members = [g.coords[i] for i in seen]
    touched = _touches_boundary(g.region, members, step_offsets(g.k2))
    return _summarise(g.ring, start.xy, members, touched)


def component_edges(g: WalkGraph, summary: ComponentSummary) -> list[tuple[QuadInt, QuadInt]]:
    """Edges of the road network restricted to one component, each listed once."""
    ids = sorted(g.index[m.xy] for m in summary.members)
    out = []
    for i in ids:
        for j in g.neighbor_ids(i):
            if i < j:
                out.append((QuadInt(*g.coords[i], g.ring), QuadInt(*g.coords[j], g.ring)))
    return out


def _step_rng(seed: int, step: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed & (2**64 - 1), step])))


def random_walk(g: WalkGraph, start: QuadInt, seed: int = 0) -> WalkPath:
    """Walk from ``start``, each step uniform over neighbours of larger Euclidean norm."""
    i = g._id(start)
    path = [i]
    while True:
        a, b = g.coords[i]
        here = a * a + b * b
        options = [j for j in g.neighbor_ids(i)
                   if g.coords[j][0] ** 2 + g.coords[j][1] ** 2 > here]
        if not options:
            break
        i = options[int(_step_rng(seed, len(path)).integers(len(options)))]
        path.append(i)
    return WalkPath(tuple(QuadInt(*g.coords[j], g.ring) for j in path), seed, g.k2)


def explore_component(ring: Ring | int, start: QuadInt, k2: int, region: Region,
                      is_prime: Callable[[int, int], bool] | None = None) -> ComponentSummary:
    """Component of ``start`` found by probing step offsets, without sieving the region.

    Suited to small components inside huge regions; ``is_prime`` may be shared
    between calls to reuse primality results.
    """
    ring = Ring.parse(ring)
    k2 = _check_k2(k2)
    _require_finite(region)
    if is_prime is None:
        is_prime = PrimeOracle(ring, min(_max_abs_norm(ring, region.bbox()), 1 << 22))
    s = start.xy
    if not region.contains(*s) or not is_prime(*s):
        raise ValueError(f"{start} is not a prime inside the region")
    offsets = step_offsets(k2)
    seen = {s}
    queue = deque([s])
    touched = False
    while queue:
        a, b = queue.popleft()
        for dx, dy in offsets:
            q = (a + dx, b + dy)
            if q in seen:
                continue
            if not region.contains(*q):
                touched = True
            elif is_prime(*q):
                seen.add(q)
                queue.append(q)
    return _summarise(ring, s, seen, touched)


def moat_scan(ring: Ring | int, start: QuadInt, k2_list: Iterable[int],
              region: Region) -> list[tuple[int, ComponentSummary]]:
    """Component of ``start`` for each step bound, sharing one primality cache."""
    ring = Ring.parse(ring)
    _require_finite(region)
    oracle = PrimeOracle(ring, min(_max_abs_norm(ring, region.bbox()), 1 << 22))
    return [(k2, explore_component(ring, start, k2, region, oracle)) for k2 in sorted(set(k2_list))]
