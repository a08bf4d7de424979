"""Exact verification: point counts, L-polynomials, Newton polygons.

Counting points over the first g extensions pins down the L-polynomial via
the Newton identities; prediction checks at g+1 and g+2 confirm the genus,
and the Newton polygon decides supersingularity (all slopes 1/2).  Curves
too large to count are split into quotient pieces, and pieces beyond the
budget are certified from their hyperelliptic shape instead of recounted.
"""

from collections import Counter

from sscurves import (Budget, build_prime_field, decompose,
                      verify_supersingular)

budget = Budget(log2_points=16)

print("full numeric verdicts for small genus:")
for g in range(1, 9):
    rep = verify_supersingular(build_prime_field(decompose(g)), budget)
    slopes = Counter(str(s) for s in rep.slopes)
    print("  g=%-2d  supersingular=%s  L = %s  slopes %s"
          % (g, rep.supersingular, list(rep.lpoly.coeffs), dict(slopes)))

print()
print("piecewise ladder for genus 221 (too large to count directly):")
rep = verify_supersingular(build_prime_field(decompose(221)), budget)
modes = Counter(p["mode"] for p in rep.pieces)
print("  verdict:", rep.supersingular)
print("  pieces:", dict(modes))
print("  piece genus total:", sum(p["genus"] for p in rep.pieces))
for p in rep.pieces[:6]:
    print("   ", p["label"], "genus", p["genus"], "->", p["mode"])
print("    ...")

print()
print("stratum-only certificate for genus 4096 (single hyperelliptic piece):")
rep = verify_supersingular(build_prime_field(decompose(4096)), budget)
print("  verdict:", rep.supersingular, "pieces:", rep.pieces)
