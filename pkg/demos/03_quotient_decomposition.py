"""Splitting the jacobian: quotient curves and power-sum additivity.

The translations y -> y + sigma with S(sigma) = 0 make the curve a
(Z/2)^n-cover of the line; each index-2 subgroup yields a quotient curve
w^2 + w = sum_k alpha^(2^(n-k)) x R_k(x), one per nonzero alpha in the dual
solution space.  The genera of the quotients add up to the genus of the
curve, and so do the point-count defects over the common field.
"""

from sscurves import (Budget, build_prime_field, count_points, decompose,
                      decomposition, powersum_additivity_check,
                      solve_alpha_space)
from sscurves.render import sparse_text

budget = Budget(log2_points=16)

for g in (5, 10, 30):
    c = build_prime_field(decompose(g))
    space = solve_alpha_space(c)
    pieces = decomposition(c)
    print("genus %d: alpha space has dimension %d inside F_2^%d"
          % (g, space.dim, space.ambient.degree))
    for p in pieces:
        print("    alpha=0x%-3x genus %d   w^2+w = %s"
              % (p.alpha, p.genus, sparse_text(p.rhs)))
    print("    genus total:", sum(p.genus for p in pieces))
    ok = powersum_additivity_check(c, 2, budget)
    print("    power-sum additivity over the compositum (k = 1, 2):", ok)
    print()

# the additivity identity in explicit numbers, for the genus-5 curve
c = build_prime_field(decompose(5))
space = solve_alpha_space(c)
pieces = decomposition(c)
M = space.ambient.degree
for k in (1, 2):
    Q = 1 << (M * k)
    curve_defect = count_points(c, (M // c.field.degree) * k, budget) - (Q + 1)
    piece_defects = [count_points(p, k, budget) - (Q + 1) for p in pieces]
    print("k=%d over F_2^%d: curve defect %d = sum of piece defects %s"
          % (k, M * k, curve_defect, piece_defects))
