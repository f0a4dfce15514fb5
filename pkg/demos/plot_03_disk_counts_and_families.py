"""
Counting primes and prime families
==================================

Disk counts in both rings, the family count inside NR(r^2), and the empirical
constant for integers of the form x^2 - 2y^2.
"""

import math

from primewalk import (
    compare_disk_counts,
    count_primes_in_disk,
    estimate_bernays_constant,
    families_with_primes,
    family_count_asymptotic,
    family_density_asymptotic,
    gaussian_disk_count_asymptotic,
    representable_count,
)

# Z[sqrt2] has more primes than Z[i] in small disks
for n, zi, zs in compare_disk_counts(1, 60)[::10]:
    print(f"n={n:3d}  Z[i]: {zi:5d}  Z[√2]: {zs:5d}")

# the Gaussian disk count approaches 2 r^2 / log r slowly
for r in (100, 300, 1000):
    c = count_primes_in_disk(-1, r)
    print(f"r={r:5d}  count/asymptotic = {c / gaussian_disk_count_asymptotic(r):.4f}")

# prime-carrying norm curves with |k| <= r^2
for r in (30, 100, 1000):
    f = len(families_with_primes(r * r))
    print(f"r={r:5d}  families={f:6d}  ratio={f / family_count_asymptotic(r):.4f}")

# chance that a norm curve in NR(r^2) carries primes, empirical versus asymptotic
r = 1000
b = estimate_bernays_constant(r * r).b_estimate
exact = len(families_with_primes(r * r)) / (2 * representable_count(r * r))
print(f"b ≈ {b:.4f}; exact share {exact:.4f} vs {family_density_asymptotic(r, b):.4f}")
