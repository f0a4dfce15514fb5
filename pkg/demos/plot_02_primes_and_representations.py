"""
Primes of Z[sqrt 2] and Z[i]
============================

Classify elements, write split primes as a^2 - 2b^2, and draw the primes of
the box 0 <= x, y <= 200 together with the asymptotes y = +-x/sqrt2.
"""

from pathlib import Path

from primewalk import QuadInt, Rect, classify, primes_in_region, represent_prime
from primewalk.svg import scatter_svg

for a, b in [(0, 1), (3, 0), (5, 1), (7, 0), (5, 5), (1, 1)]:
    print(f"{a}+{b}√2: {classify(QuadInt(a, b))}")

# primes 1 or 7 mod 8 split; their smallest representation
for p in (7, 17, 23, 31, 41, 47, 1_000_003):
    if p % 8 in (1, 7):
        r = represent_prime(p)
        print(f"{p} = {r.a}^2 - 2*{r.b}^2")

out = Path("primes_zsqrt2_200.svg")
pts = [q.xy for q in primes_in_region(2, Rect(0, 200, 0, 200))]
out.write_text(scatter_svg(pts, asymptotes=True, title="Z[√2] primes, 0 ≤ x, y ≤ 200"))
print(f"wrote {len(pts)} points to {out}")
