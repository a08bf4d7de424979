"""2-linearized polynomials, sparse polynomials, and Artin-Schreier reduction.

A 2-linearized (additive) polynomial sum a_i x^(2^i) is F_2-linear as a map
on any binary field; these are the building blocks of every curve produced
here.  Sparse polynomials hold the right-hand sides of the curve equations,
whose degrees get large (x^288 and beyond) while their term counts stay
tiny.
"""

from dataclasses import dataclass

from . import gf2x
from .field import (BinaryField, F2LinearMap, embedding_into, make_field,
                    pmod, psqr, ptrim)
from .limits import DEFAULT_MAX_DEGREE, CapacityError


@dataclass(frozen=True)
class LinPoly:
    """sum a_i x^(2^i) with coeffs[i] = a_i; canonical (no trailing zeros)."""

    field: BinaryField
    coeffs: tuple

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("non-canonical linearized polynomial")

    @property
    def h(self):
        """2-degree: the largest i with a_i != 0 (None for the zero polynomial)."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self):
        return not self.coeffs

    def coeff(self, i):
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def support(self):
        return [i for i, a in enumerate(self.coeffs) if a]

    def ordinary_coeffs(self):
        """Coefficient list of the underlying ordinary polynomial."""
        if not self.coeffs:
            return []
        out = [0] * ((1 << (len(self.coeffs) - 1)) + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                out[1 << i] = a
        return out

    def map_field(self, embedding):
        return lin(embedding.ext, [embedding(a) for a in self.coeffs])


def lin(field, coeffs):
    """Build a LinPoly, trimming trailing zero coefficients."""
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return LinPoly(field, tuple(coeffs))


def lin_monomial(field, i, a=1):
    """a * x^(2^i)."""
    return lin(field, [0] * i + [a])


def lin_eval(R, x):
    """R(x); additive in x."""
    F = R.field
    acc = 0
    t = x
    for a in R.coeffs:
        if a:
            acc ^= F.mul(a, t)
        t = F.sqr(t)
    return acc


def lin_add(R, S):
    if R.field != S.field:
        raise ValueError("field mismatch")
    n = max(len(R.coeffs), len(S.coeffs))
    return lin(R.field, [R.coeff(i) ^ S.coeff(i) for i in range(n)])


def lin_scale(c, R):
    F = R.field
    return lin(F, [F.mul(c, a) for a in R.coeffs])


def lin_twist(R, k):
    """(R(x))^(2^k) as a linearized polynomial: coefficients a_i^(2^k) at x^(2^(i+k))."""
    if k < 0:
        raise ValueError("twist exponent must be nonnegative")
    F = R.field
    return lin(F, [0] * k + [F.frobenius(a, k) for a in R.coeffs])


def lin_compose(R, S):
    """R(S(x))."""
    if R.field != S.field:
        raise ValueError("field mismatch")
    F = R.field
    if R.is_zero() or S.is_zero():
        return lin(F, [])
    out = [0] * (len(R.coeffs) + len(S.coeffs) - 1)
    for i, a in enumerate(R.coeffs):
        if not a:
            continue
        for j, b in enumerate(S.coeffs):
            if b:
                out[i + j] ^= F.mul(a, F.frobenius(b, i))
    return lin(F, out)


def lin_kernel(R, ambient, embedding=None):
    """Canonical F_2-basis of the roots of R in the ambient field.

    R's coefficient field must coincide with ambient or embed into it; a
    deterministic embedding is constructed when none is supplied.
    """
    if R.is_zero():
        raise ValueError("kernel of the zero polynomial")
    if R.field != ambient:
        if embedding is None:
            embedding = embedding_into(R.field, ambient)
        R = R.map_field(embedding)
    images = [lin_eval(R, 1 << i) for i in range(ambient.degree)]
    return F2LinearMap(images).kernel_basis()


def splitting_degree(R, max_degree=DEFAULT_MAX_DEGREE):
    """Least k such that all roots of R lie in the degree-k extension of its field.

    Requires a separable input (a_0 != 0).  Equals the lcm of the degrees of
    the irreducible factors of R as an ordinary polynomial; found by iterating
    the field Frobenius modulo R, which caps the work at max_degree steps.
    """
    if R.is_zero():
        raise ValueError("zero polynomial has no splitting field")
    if R.coeff(0) == 0:
        raise ValueError("inseparable (a_0 = 0): roots are not distinct")
    F = R.field
    cap = max_degree // F.degree
    if F.degree == 1:
        f = sum(1 << (1 << i) for i in R.support())
        k = gf2x.frobenius_order(f, cap)
    else:
        f = R.ordinary_coeffs()
        x = pmod(F, [0, 1], f)
        t = x
        k = None
        for step in range(1, cap + 1):
            for _ in range(F.degree):
                t = pmod(F, psqr(F, t), f)
            if ptrim(list(t)) == x:
                k = step
                break
    if k is None:
        raise CapacityError(
            "splitting field of 2-degree-%d polynomial exceeds degree %d"
            % (R.h, max_degree))
    return k


@dataclass(frozen=True)
class SparsePoly:
    """Ordinary polynomial as (exponent, coefficient) terms, exponents decreasing."""

    field: BinaryField
    terms: tuple  # ((exp, coeff), ...) with coeff != 0, exps strictly decreasing

    def is_zero(self):
        return not self.terms

    @property
    def degree(self):
        return self.terms[0][0] if self.terms else -1

    def coeff(self, e):
        for exp, c in self.terms:
            if exp == e:
                return c
        return 0

    def as_dict(self):
        return dict(self.terms)

    def map_field(self, embedding):
        return sparse(embedding.ext, {e: embedding(c) for e, c in self.terms})


def sparse(field, terms):
    """Build a SparsePoly from an {exp: coeff} mapping or (exp, coeff) pairs."""
    if not isinstance(terms, dict):
        acc = {}
        for e, c in terms:
            acc[e] = acc.get(e, 0) ^ c
        terms = acc
    cleaned = sorted(((e, c) for e, c in terms.items() if c), reverse=True)
    for e, _ in cleaned:
        if e < 0:
            raise ValueError("negative exponent")
    return SparsePoly(field, tuple(cleaned))


def sparse_add(f, g):
    if f.field != g.field:
        raise ValueError("field mismatch")
    acc = dict(f.terms)
    for e, c in g.terms:
        acc[e] = acc.get(e, 0) ^ c
    return sparse(f.field, acc)


def sparse_scale(c, f):
    F = f.field
    return sparse(F, {e: F.mul(c, a) for e, a in f.terms})


def sparse_twist(f, k):
    """f^(2^k): exponents doubled k times, coefficients raised accordingly."""
    F = f.field
    return sparse(F, {e << k: F.frobenius(c, k) for e, c in f.terms})


def sparse_eval(f, x):
    F = f.field
    acc = 0
    for e, c in f.terms:
        acc ^= F.mul(c, F.pow(x, e)) if e else c
    return acc


def times_x(R):
    """x * R(x) as a sparse polynomial: terms a_i x^(2^i + 1)."""
    return sparse(R.field, {(1 << i) + 1: a
                            for i, a in enumerate(R.coeffs) if a})


def as_reduce(f):
    """Canonical representative of f modulo the image of h -> h^2 + h.

    Repeatedly replaces c x^(2e), e > 0, by sqrt(c) x^e and merges terms.
    The result has only odd exponents (plus possibly a constant), which makes
    equivalence of right-hand sides decidable by syntactic equality.
    """
    F = f.field
    acc = dict(f.terms)
    pending = [e for e in acc if e > 0 and e % 2 == 0]
    while pending:
        e = pending.pop()
        c = acc.pop(e, 0)
        if not c:
            continue
        while e > 0 and e % 2 == 0:
            e >>= 1
            c = F.sqrt(c)
        prev = acc.get(e, 0)
        acc[e] = prev ^ c
    return sparse(F, acc)


def as_genus(f):
    """Genus of the smooth complete curve y^2 + y = f for a polynomial f.

    The reduced form has odd degree d (one totally ramified place at
    infinity), giving genus (d-1)/2; a constant reduced form is rational.
    A zero reduced form means the cover splits and is rejected.
    """
    if f.is_zero():
        raise ValueError("zero right-hand side: cover is reducible")
    r = as_reduce(f)
    if r.is_zero():
        raise ValueError("right-hand side in the Artin-Schreier image: cover is reducible")
    d = r.degree
    if d == 0:
        return 0
    return (d - 1) // 2


def definition_field(f):
    """Re-express f over the smallest subfield containing its coefficients.

    Returns an equivalent SparsePoly over the canonical field of that degree.
    """
    F = f.field
    n = F.degree
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    for d in divisors:
        if all(F.frobenius(c, d) == c for _, c in f.terms):
            break
    if d == n:
        return f
    sub = make_field(d)
    emb = embedding_into(sub, F)
    out = {}
    for e, c in f.terms:
        pre = emb.preimage(c)
        assert pre is not None, "coefficient fixed by Frobenius^d must descend"
        out[e] = pre
    return sparse(sub, out)
