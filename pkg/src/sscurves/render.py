"""Plain-text rendering of equations, with exponents in decreasing order.

Coefficients print as powers of the field generator ("a", "a^6") when the
element lies in the generator's multiplicative orbit, falling back to hex
otherwise; the generator of the prime field is 1 so prime-field equations
carry no coefficient prefixes at all.
"""

from .builder import CurveSpec, FibreProductSpec
from .linops import times_x


def coeff_text(F, c):
    """Prefix for a coefficient: '' for 1, 'a^e*' style otherwise."""
    if c == 1:
        return ""
    e = _dlog(F, c)
    if e is None:
        return "0x%x*" % c
    return ("a*" if e == 1 else "a^%d*" % e)


def _dlog(F, c):
    v = 1
    for e in range(F.order - 1):
        if v == c:
            return e
        v = F.mul(v, F.generator)
    return None


def sparse_text(f, var="x"):
    if f.is_zero():
        return "0"
    parts = []
    for e, c in f.terms:
        cs = coeff_text(f.field, c)
        if e == 0:
            parts.append(cs[:-1] if cs else "1")
        elif e == 1:
            parts.append(cs + var)
        else:
            parts.append("%s%s^%d" % (cs, var, e))
    return "+".join(parts)


def linpoly_text(R, var="y"):
    if R.is_zero():
        return "0"
    parts = []
    for i in reversed(range(len(R.coeffs))):
        a = R.coeffs[i]
        if not a:
            continue
        cs = coeff_text(R.field, a)
        e = 1 << i
        parts.append(cs + var if e == 1 else "%s%s^%d" % (cs, var, e))
    return "+".join(parts)


def equation_text(curve):
    """'S(y) = T(x)' for a single-equation curve."""
    return "%s = %s" % (linpoly_text(curve.S), sparse_text(curve.derived_T()))


def xr_table(curve):
    """Lines 'xR_k = ...' for the twist slots of a single-equation curve."""
    lines = []
    for k, R in enumerate(curve.R_list, start=1):
        lines.append("xR_%d = %s" % (k, sparse_text(times_x(R))))
    return lines


def component_lines(spec):
    """Lines 'y_j^2+y_j = f_j' for a fibre product."""
    return ["y_%d^2+y_%d = %s" % (j, j, sparse_text(f))
            for j, f in enumerate(spec.components)]


def curve_text(curve):
    if isinstance(curve, CurveSpec):
        return equation_text(curve)
    if isinstance(curve, FibreProductSpec):
        return "\n".join(component_lines(curve))
    raise TypeError("cannot render %r" % type(curve).__name__)
