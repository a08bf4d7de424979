"""Classifying the hyperelliptic members: scaling witnesses and radicals.

Covers y^2 + y = x R(x) and y^2 + y = x R'(x) of the same 2-degree are
isomorphic exactly when a scaling x -> rho x matches the coefficients as
a_i' = a_i rho^(2^i + 1).  The search is finite and exact; obstructions
show up as exhausted candidate sets.
"""

from sscurves import (curves_isomorphic, e_poly, lin, make_field, radical,
                      scaling_orbit)
from sscurves.render import linpoly_text

F16 = make_field(4)
a = 2

print("monomial family x^4 over F_16: every rescaling is isomorphic")
R = lin(F16, [0, 0, 1])
for c in (3, 7, 11):
    w = curves_isomorphic(R, lin(F16, [0, 0, c]))
    print("  x^4 ~ 0x%x*x^4: witness rho=0x%x in F_2^%d (rho^5 = coefficient)"
          % (c, w.rho, w.field.degree))

print()
print("an order-5 coefficient twist on x^2 + x^4 has no witness:")
g5 = F16.pow(a, 3)
w = curves_isomorphic(lin(F16, [0, 1, 1]), lin(F16, [0, 1, g5]))
print("  x^2+x^4 ~ x^2+a^3*x^4 ?", "witness" if w else "none",
      "(rho^3 = 1 and rho^5 = a^3 cannot hold at once)")

print()
print("orbits under scaling are symmetric and verified:")
R = lin(F16, [5, 9, 1])
orb = scaling_orbit(R, 7)
w = curves_isomorphic(R, orb)
print("  R      =", linpoly_text(R, "x"))
print("  orbit  =", linpoly_text(orb, "x"))
print("  witness rho = 0x%x" % w.rho)

print()
print("radicals (root spaces of the invariant polynomial, dimension 2h):")
for coeffs, label in ([(0, 1), "x^2"], [(1, 1), "x^2+x"], [(0, 0, 1), "x^4"]):
    R = lin(make_field(1), list(coeffs))
    rad = radical(R)
    print("  R = %-6s  E = %-12s  radical dim %d in F_2^%d"
          % (label, linpoly_text(e_poly(R), "x"), len(rad.basis),
             rad.ambient.degree))
