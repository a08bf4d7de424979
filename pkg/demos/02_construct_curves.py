"""Both constructions side by side: fibre product, gluing, prime field.

A genus-30 curve appears three ways: as a fibre product of four covers
y_j^2 + y_j = a^j x^5 over F_16, glued into the single equation
y^16 + y = a^6 x^40 + x^20 + a^12 x^10 + a^9 x^5 over the same field, and
as the single equation y^16 + y = x^40 over the prime field F_2.
"""

from sscurves import (build_components, build_prime_field, certificate,
                      decompose, glue_single_block)
from sscurves.render import component_lines, equation_text, xr_table

for g in (30, 221):
    d = decompose(g)
    print("=" * 66)
    print("genus", g, "-- blocks", list(d.blocks), "over F_2^%d" % d.m)
    print()

    spec = build_components(d)
    print("fibre product over F_2^%d:" % d.m)
    for line in component_lines(spec):
        print("   ", line)
    cert = certificate(spec)
    print("    strata (count, genus):", list(cert.strata), "-> total", cert.total)
    print()

    if d.t == 1:
        glued = glue_single_block(spec)
        print("glued single equation over the same field:")
        print("   ", equation_text(glued))
        print()

    c = build_prime_field(d)
    print("single equation over F_2:")
    print("   ", equation_text(c))
    for line in xr_table(c):
        print("      ", line)
    print()
