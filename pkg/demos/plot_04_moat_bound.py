"""
Steps needed versus primes available near the asymptote
=======================================================

Inside a strip of half-width r around y = x/sqrt2, crossing a box near x needs
a number of steps linear in x while the primes on offer grow like x / log x.
"""

from primewalk import moat_bound_report
from primewalk.analytics import moat_crossover

r, k = 10, 5
print(f"{'x':>8} {'steps_lower':>14} {'families_upper':>16} {'ratio':>8}")
for e in range(3, 25, 3):
    rep = moat_bound_report(r, k, 10.0 ** e)
    print(f"1e{e:<6d} {rep.steps_lower:14.4g} {rep.families_upper:16.4g} {rep.ratio:8.4f}")

print("steps first exceed primes at x =", moat_crossover(r, k))
