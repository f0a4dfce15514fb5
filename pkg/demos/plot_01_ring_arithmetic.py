"""
Arithmetic in Z[sqrt 2]
=======================

Norms, conjugates, the fundamental unit and its powers.
"""

from primewalk import QuadInt, UnitPower, associates_in_box, conjugate, mul, norm, unit_pow

# the fundamental unit has norm -1; its square has norm +1
eps = QuadInt(1, 1)
print("N(1+√2) =", norm(eps), "  (1+√2)^2 =", mul(eps, eps))

# multiplying by (1+√2)^2 = 3+2√2 moves a point along its own norm curve
P = QuadInt(3, 1)
for m in range(-2, 3):
    Q = mul(P, unit_pow(2, UnitPower(2 * m)))
    print(f"m={m:+d}: {Q!s:>12}  norm {norm(Q)}")

# conjugation also preserves the norm
print("conj(13+15√2) =", conjugate(QuadInt(13, 15)), "norm", norm(QuadInt(13, 15)))

# associates of √2 that fit in a small box
print([str(z) for z in associates_in_box(QuadInt(0, 1), (-10, 10, -10, 10))])
