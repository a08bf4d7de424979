"""Synthesis of supersingular curves of prescribed genus in characteristic 2.

Two constructions, both driven by the block decomposition of the genus g:

* ``build_components`` -- a fibre product of Artin-Schreier curves
  y_j^2 + y_j = f_j over F_{2^m} (m the widest block), with one batch of
  components gamma^j x^(2^(u_i)+1) per block.

* ``build_prime_field`` -- a single equation S(y) = sum (x R_k(x))^(2^(k-1))
  over F_2, where S comes from the tower G_i = G_{i-1}^(2^(r_i+1)) + G_{i-1}
  and the R_k regroup the two-variable sum of G_{i-1}(alpha) x^(2^(u_i)+1)
  by powers alpha^(2^j).

For a single block the fibre product can also be glued into one equation
over F_{2^m} (``glue_single_block``).
"""

from dataclasses import dataclass

from .field import BinaryField, make_field
from .linops import (LinPoly, SparsePoly, as_genus, lin, lin_add,
                     lin_monomial, lin_twist, sparse, sparse_add,
                     sparse_scale, sparse_twist, times_x)

# Exhaustive certificate verification is feasible up to this binary weight.
EXHAUSTIVE_WEIGHT_LIMIT = 20


@dataclass(frozen=True)
class FibreProductSpec:
    """Fibre product of the covers y_j^2 + y_j = f_j over one base field."""

    field: BinaryField
    components: tuple      # SparsePoly right-hand sides f_1..f_k
    strata: tuple          # ((u_i, r_i + 1), ...) bookkeeping per block

    @property
    def weight(self):
        return len(self.components)


@dataclass(frozen=True)
class CurveSpec:
    """Single-equation curve S(y) = x R_1 + (x R_2)^2 + ... + (x R_n)^(2^(n-1))."""

    field: BinaryField
    S: LinPoly             # monic, A_0 != 0, 2-degree n
    R_list: tuple          # n entries, zeros allowed, not all zero
    strata: tuple = None   # ((u_i, r_i + 1), ...) when built from a decomposition

    @property
    def n(self):
        return self.S.h

    def derived_T(self):
        """The right-hand side sum (x R_k)^(2^(k-1)) as one sparse polynomial."""
        acc = sparse(self.field, {})
        for k, R in enumerate(self.R_list, start=1):
            if not R.is_zero():
                acc = sparse_add(acc, sparse_twist(times_x(R), k - 1))
        return acc

    def validate(self):
        if self.S.coeff(0) == 0:
            raise ValueError("S must have a nonzero coefficient of y")
        if self.S.coeffs[-1] != 1:
            raise ValueError("S must be monic")
        if len(self.R_list) != self.n:
            raise ValueError("expected %d twist slots" % self.n)
        if all(R.is_zero() for R in self.R_list):
            raise ValueError("all R_k vanish")
        return self


@dataclass(frozen=True)
class GenusCertificate:
    """Per-stratum genus bookkeeping: (member count, genus of each member)."""

    strata: tuple
    total: int


def stratum_certificate(d):
    """Certificate from block arithmetic alone.

    Stratum i has 2^(sum_{j<i}(r_j+1)) * (2^(r_i+1)-1) members of genus
    2^(u_i - 1); the strata sum back to g.
    """
    rows = []
    prefix = 0
    for (s, r), u in zip(d.blocks, d.u):
        count = (1 << prefix) * ((1 << (r + 1)) - 1)
        rows.append((count, 1 << (u - 1)))
        prefix += r + 1
    total = sum(c * g for c, g in rows)
    assert total == d.g
    return GenusCertificate(tuple(rows), total)


def build_components(d):
    """Fibre-product components for the decomposition d, over F_{2^m}.

    Block i contributes gamma^j x^(2^(u_i)+1) for j = 0..r_i; the powers
    gamma^0..gamma^(r_i) are F_2-independent because r_i < m.
    """
    F = make_field(d.m)
    gamma = F.generator
    components = []
    strata = []
    for (s, r), u in zip(d.blocks, d.u):
        e = (1 << u) + 1
        c = 1
        for _ in range(r + 1):
            components.append(sparse(F, {e: c}))
            c = F.mul(c, gamma)
        strata.append((u, r + 1))
    return FibreProductSpec(F, tuple(components), tuple(strata))


def fibre_combinations(spec):
    """All 2^w - 1 nonzero F_2-combinations of the components, mask order."""
    w = spec.weight
    for mask in range(1, 1 << w):
        acc = sparse(spec.field, {})
        m = mask
        i = 0
        while m:
            if m & 1:
                acc = sparse_add(acc, spec.components[i])
            m >>= 1
            i += 1
        yield mask, acc


def certificate(spec, exhaustive=None):
    """Genus certificate of a fibre product.

    The strata rows come from block arithmetic; for small weight (default
    w <= 20) every nonzero combination is additionally checked with the
    Artin-Schreier genus formula and any mismatch is an internal error.
    """
    rows = []
    prefix = 0
    for u, dim in spec.strata:
        count = (1 << prefix) * ((1 << dim) - 1)
        rows.append((count, 1 << (u - 1)))
        prefix += dim
    total = sum(c * g for c, g in rows)
    if exhaustive is None:
        exhaustive = spec.weight <= EXHAUSTIVE_WEIGHT_LIMIT
    if exhaustive:
        expected = {}
        for count, g in rows:
            expected[g] = expected.get(g, 0) + count
        seen = _exhaustive_genus_counts(spec)
        if seen != expected:
            raise AssertionError(
                "stratum bookkeeping disagrees with exhaustive genus count: "
                "%r vs %r" % (expected, seen))
    return GenusCertificate(tuple(rows), total)


def _exhaustive_genus_counts(spec):
    # Gray-code walk: one component toggled per step keeps this linear in
    # the number of combinations.
    comps = [tuple(f.terms) for f in spec.components]
    all_odd = all(e & 1 for terms in comps for e, _ in terms)
    acc = {}
    seen = {}
    for step in range(1, 1 << spec.weight):
        for e, c in comps[(step & -step).bit_length() - 1]:
            v = acc.get(e, 0) ^ c
            if v:
                acc[e] = v
            else:
                del acc[e]
        if not acc:
            raise AssertionError("components are F_2-dependent")
        if all_odd:
            d = max(acc)
            g = (d - 1) // 2 if d else 0
        else:
            g = as_genus(sparse(spec.field, acc))
        seen[g] = seen.get(g, 0) + 1
    return seen


def glue_single_block(spec):
    """Collapse a one-block fibre product into a single equation over F_{2^m}.

    With y = sum gamma^j y_j one gets S(y) = y^(2^m) + y and a right side
    T = sum_j gamma^j Tr(gamma^j x^(2^u + 1)) with Tr(z) = z + z^2 + ... +
    z^(2^(m-1)); T is then re-expressed through ``to_standard_form``.
    """
    if len(spec.strata) != 1:
        raise ValueError("gluing is defined for single-block products only")
    F = spec.field
    m = F.degree
    u, dim = spec.strata[0]
    if dim != m:
        raise ValueError("field degree must equal the block width")
    gamma = F.generator
    e = (1 << u) + 1
    T = sparse(F, {})
    c = 1
    for _ in range(m):
        z = sparse(F, {e: c})
        tr = sparse(F, {})
        for l in range(m):
            tr = sparse_add(tr, sparse_twist(z, l))
        T = sparse_add(T, sparse_scale(c, tr))
        c = F.mul(c, gamma)
    S = lin(F, [1] + [0] * (m - 1) + [1])
    R_list = to_standard_form(T, m)
    curve = CurveSpec(F, S, tuple(R_list), spec.strata).validate()
    assert curve.derived_T().terms == T.terms
    return curve


def build_prime_field(d):
    """Single-equation curve of genus d.g over the prime field F_2.

    G_0 = x and G_i = G_{i-1}^(2^(r_i+1)) + G_{i-1}; the left side is
    S = G_t.  R_{w-j} collects the monomials x^(2^(u_i)+1) whose coefficient
    in G_{i-1} contains alpha^(2^j), so that the two-variable identity
    sum_i G_{i-1}(alpha) x^(2^(u_i)+1) = sum_j x R_{w-j}(x) alpha^(2^j) holds.
    """
    F = make_field(1)
    w = d.w
    G = [lin_monomial(F, 0)]  # G_0 = x
    for _, r in d.blocks:
        G.append(lin_add(lin_twist(G[-1], r + 1), G[-1]))
    S = G[-1]
    R_coeffs = [[0] * (u + 1) for u in [max(d.u)] * w]
    for i, u in enumerate(d.u, start=1):
        for j in G[i - 1].support():
            R_coeffs[w - j - 1][u] ^= 1
    R_list = tuple(lin(F, c) for c in R_coeffs)
    strata = tuple((u, r + 1) for (_, r), u in zip(d.blocks, d.u))
    return CurveSpec(F, S, R_list, strata).validate()


def to_standard_form(T, n):
    """Recover R_1..R_n from a raw right side T = sum (x R_k)^(2^(k-1)).

    A term c x^(2^a (2^e + 1)) belongs to R_{a+1}, which picks up the
    coefficient c^(2^-a) at position 2^e.  Exponents whose odd part is not
    of the form 2^e + 1, or with 2-adic valuation >= n, are not representable.
    """
    F = T.field
    coeffs = [dict() for _ in range(n)]
    for exp, c in T.terms:
        if exp <= 0:
            raise ValueError("exponent %d not representable" % exp)
        a = (exp & -exp).bit_length() - 1
        odd = exp >> a
        e = (odd - 1).bit_length() - 1
        if odd < 3 or (odd - 1) & (odd - 2) or a >= n:
            raise ValueError("exponent %d not representable as 2^a(2^e+1) with a < %d"
                             % (exp, n))
        coeffs[a][e] = F.frobenius(c, -a)
    out = []
    for cmap in coeffs:
        size = max(cmap) + 1 if cmap else 0
        vec = [0] * size
        for e, c in cmap.items():
            vec[e] = c
        out.append(lin(F, vec))
    return out
