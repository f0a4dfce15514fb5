"""Exit criteria for the package, one test per criterion.

Each test records a ``[PASS]``/``[FAIL]`` line that is repeated in the pytest
terminal summary under "acceptance criteria".
"""

import math
import random
import time

import pytest

from oracles import all_pairs_neighbors, brute_force_is_prime, curve_points
from primewalk.analytics import (
    compare_disk_counts,
    estimate_bernays_constant,
    family_count_asymptotic,
    gaussian_disk_count_asymptotic,
    moat_bound_report,
)
from primewalk.cli import main
from primewalk.enumeration import (
    Disk,
    Rect,
    count_primes_in_disk,
    families_with_primes,
    family_contains_primes,
    primes_between_on_branch,
    representable_count,
)
from primewalk.primality import classify, is_rational_prime, prime_sieve, represent_prime
from primewalk.ring import QuadInt, Ring
from primewalk.walks import build_walk_graph, component_of, moat_scan, neighbors

import numpy as np


def test_c01_classification_oracle(criterion):
    t = time.perf_counter()
    mismatches = []
    for ring, span in ((Ring.ZSQRT2, 60), (Ring.GAUSS, 40)):
        for a in range(-span, span + 1):
            for b in range(-span, span + 1):
                q = QuadInt(a, b, ring)
                if classify(q).is_prime != brute_force_is_prime(q):
                    mismatches.append(q)
    elapsed = time.perf_counter() - t
    criterion(1, "classify == factor-search oracle", not mismatches and elapsed < 60,
              f"{len(mismatches)} mismatches, {elapsed:.1f}s")


def test_c02_representation(criterion):
    t = time.perf_counter()
    table = prime_sieve(10**6)
    failures = 0
    checked = 0
    for p in np.flatnonzero(table):
        p = int(p)
        if p % 8 not in (1, 7):
            continue
        checked += 1
        r = represent_prime(p)
        if not (r.a * r.a - 2 * r.b * r.b == p and r.a > 0 and r.b > 0):
            failures += 1
    elapsed = time.perf_counter() - t
    criterion(2, "a^2-2b^2 = p for all split p <= 1e6", failures == 0 and checked > 39000 and elapsed < 60,
              f"{checked} primes, {failures} failures, {elapsed:.1f}s")


def test_c03_figure3(criterion):
    rows = compare_disk_counts(5, 60)
    bad = [r for r in rows if not r[2] > r[1]]
    criterion(3, "Z[sqrt2] disk count > Z[i] disk count for 5<=n<=60", not bad and len(rows) == 56,
              f"{len(bad)} violations")


def test_c04_gaussian_disk_asymptotic(criterion):
    ratio = {r: count_primes_in_disk(Ring.GAUSS, r) / gaussian_disk_count_asymptotic(r) for r in (100, 500, 1000)}
    ok = 0.7 <= ratio[500] <= 1.3 and abs(ratio[1000] - 1) <= abs(ratio[100] - 1)
    criterion(4, "Gaussian disk count ratio in [0.7,1.3] with shrinking deviation", ok,
              ", ".join(f"r={r}: {v:.4f}" for r, v in ratio.items()))


def test_c05_family_count(criterion):
    ratio = {r: len(families_with_primes(r * r)) / family_count_asymptotic(r) for r in (100, 1000)}
    ok = 0.7 <= ratio[1000] <= 1.3 and abs(ratio[1000] - 1) <= abs(ratio[100] - 1)
    criterion(5, "prime family count ratio in [0.7,1.3] with shrinking deviation", ok,
              ", ".join(f"r={r}: {v:.4f}" for r, v in ratio.items()))


def test_c06_at_most_one_between(criterion):
    rng = random.Random(20201)
    sample = []
    while len(sample) < 200:
        q = QuadInt(rng.randint(1, 10**4), rng.randint(1, 10**4))
        if classify(q).is_prime:
            sample.append(q)
    counts = [primes_between_on_branch(P) for P in sample]
    violations = sum(c > 1 for c in counts)
    criterion(6, "at most one prime between P and P(1+sqrt2)^2", violations == 0,
              f"200 primes, {violations} violations, {sum(counts)} with one between")


def test_c07_all_prime_curves(criterion):
    exceptions = 0
    points = 0
    for k in range(-200, 201):
        if k == 0 or not family_contains_primes(k):
            continue
        for a, b in curve_points(k, 500):
            points += 1
            q = QuadInt(a, b)
            if not classify(q).is_prime:
                exceptions += 1
            elif abs(b) <= 30 and not brute_force_is_prime(q):
                exceptions += 1
    criterion(7, "every point on a prime-carrying curve is prime", exceptions == 0 and points > 0,
              f"{points} points, {exceptions} exceptions")


def test_c08_sign_invariance(criterion):
    bad = 0
    mapped = 0
    for k in range(-100, 101):
        if k == 0:
            continue
        for a, b in curve_points(k, 200):
            a2, b2 = a + 2 * b, a + b
            mapped += 1
            if a2 * a2 - 2 * b2 * b2 != -k:
                bad += 1
        if bool(curve_points(k, 200)) != bool(curve_points(-k, 400)):
            bad += 1
    criterion(8, "(a,b)->(a+2b,a+b) maps NC(k) to NC(-k)", bad == 0 and mapped > 0,
              f"{mapped} points mapped, {bad} failures")


@pytest.mark.slow
def test_c09_walk_scale(criterion):
    t = time.perf_counter()
    g = build_walk_graph(Ring.ZSQRT2, Rect(0, 2000, 0, 1500), 8)
    s = component_of(g, QuadInt(0, 1))
    elapsed = time.perf_counter() - t
    criterion(9, "component of sqrt2 (k2=8) reaches x >= 1500", s.max_coordinate >= 1500 and elapsed < 120,
              f"size {s.size}, max_coordinate {s.max_coordinate}, {elapsed:.1f}s")


def test_c10_gaussian_finite_components(criterion):
    table = dict(moat_scan(Ring.GAUSS, QuadInt(1, 1, Ring.GAUSS), [2, 4], Disk(10**4)))
    frozen = {2: 100, 4: 720}
    ok = all(not s.boundary_touched and s.size == frozen[k] for k, s in table.items())
    criterion(10, "Gaussian components of 1+i finite for k2 in {2,4}", ok,
              ", ".join(f"k2={k}: size {s.size}, touched={s.boundary_touched}" for k, s in table.items()))


def test_c11_grid_exactness(criterion):
    bad = 0
    for ring in (Ring.ZSQRT2, Ring.GAUSS):
        for k2 in (2, 8, 26):
            g = build_walk_graph(ring, Rect(0, 50, 0, 50), k2)
            ref = all_pairs_neighbors(g.coords, k2)
            bad += sum([q.xy for q in neighbors(g, p)] != ref[p.xy] for p in g.points)
    criterion(11, "grid neighbours == all-pairs on Rect(0..50)^2", bad == 0, f"{bad} mismatches")


CLI_RUNS = [
    ("classify", ["classify", "--ring", "zsqrt2", "13", "15"], None),
    ("enumerate", ["enumerate", "--rect", "0,120,0,120"], ".csv"),
    ("enumerate-json", ["enumerate", "--ring", "gauss", "--disk", "40"], ".json"),
    ("enumerate-svg", ["enumerate", "--strip", "6,200", "--asymptotes"], ".svg"),
    ("figure-compare", ["figure-compare", "--nmax", "60"], ".csv"),
    ("families", ["families", "--r2", "500"], ".json"),
    ("bernays", ["bernays", "--n", "1e3,1e4"], ".csv"),
    ("density", ["density", "--ring", "gauss", "--r", "50,100"], ".csv"),
    ("density-zsqrt2", ["density", "--r", "30"], ".json"),
    ("moat-bound", ["moat-bound", "--r", "10", "--k", "5", "--x", "1e3,1e4,1e5,1e6"], ".csv"),
    ("walk-component", ["walk", "component", "--start", "0,1", "--k2", "8", "--xmax", "250"], ".csv"),
    ("walk-component-json", ["walk", "component", "--ring", "gauss", "--start", "1,1", "--k2", "4",
                             "--disk", "80"], ".json"),
    ("walk-random", ["walk", "random", "--start", "13,15", "--k2", "8", "--seed", "42", "--xmax", "300"], ".csv"),
    ("walk-random-seed7", ["walk", "random", "--start", "0,1", "--seed", "7", "--rect=-200,200,-200,200"], ".json"),
    ("walk-moat-scan", ["walk", "moat-scan", "--ring", "gauss", "--start", "1,1", "--k2", "2,4",
                        "--disk", "500"], ".csv"),
]


def test_c12_cli_determinism(criterion, tmp_path, capsys):
    differing = []
    for name, argv, ext in CLI_RUNS:
        outputs = []
        for run, threads in enumerate((1, 4, 1)):
            args = list(argv)
            if argv[0] != "classify":
                args += ["--threads", str(threads)]
            path = tmp_path / f"{name}-{run}{ext or ''}"
            if ext:
                args += ["--out", str(path)]
            code = main(args)
            captured = capsys.readouterr()
            blob = (captured.out, path.read_bytes() if ext else b"")
            outputs.append((code, blob))
        if not (outputs[0] == outputs[1] == outputs[2] and outputs[0][0] == 0):
            differing.append(name)
    criterion(12, "CLI outputs byte-identical across runs and --threads", not differing,
              f"{len(CLI_RUNS)} commands, differing: {differing or 'none'}")


def test_c13_bernays_stability(criterion):
    est = [estimate_bernays_constant(n).b_estimate for n in (10**4, 10**5, 10**6)]
    d1, d2 = abs(est[1] - est[0]), abs(est[2] - est[1])
    ok = d2 < d1 and representable_count(20) == 10
    criterion(13, "Bernays estimate differences shrink; B(20) = 10", ok,
              f"b = {est[0]:.5f}, {est[1]:.5f}, {est[2]:.5f}")


def test_c14_moat_bound(criterion):
    ratios = [moat_bound_report(10, 5, x).ratio for x in (1e3, 1e4, 1e5, 1e6)]
    ok = all(b > a for a, b in zip(ratios, ratios[1:]))
    criterion(14, "steps_lower / families_upper increases with x", ok,
              ", ".join(f"{v:.4f}" for v in ratios))
