"""Explicit binary fields F_{2^N} and exact F_2-linear algebra on them.

Elements are plain ints: bit i is the coefficient of gamma^i, where gamma
is the residue class of the variable modulo a fixed irreducible polynomial.
0 and 1 are the additive and multiplicative identities and addition is xor,
so no wrapper objects are needed; the field object carries the operations.

Every computation picks one ambient field large enough for its task (these
fields stand in for the algebraic closure at finite level).  Construction
is deterministic: degree N always gets the irreducible modulus with the
smallest bit pattern, so serialized artifacts are reproducible.
"""

from . import gf2x
from .limits import DEFAULT_MAX_DEGREE, CapacityError

# Fields at or below this degree get exp/log tables on first use.
_TABLE_MAX_DEGREE = 20

# Fields small enough to find polynomial roots by direct scan.
_SCAN_MAX_ORDER = 1 << 12


class BinaryField:
    """Arithmetic in F_{2^N} = GF(2)[x]/(modulus), elements as bit vectors."""

    __slots__ = ("degree", "modulus", "order", "_top", "_trace_mask",
                 "_exp", "_log")

    def __init__(self, degree, modulus):
        if gf2x.degree(modulus) != degree:
            raise ValueError("modulus degree mismatch")
        if not gf2x.is_irreducible(modulus):
            raise ValueError("modulus is not irreducible")
        self.degree = degree
        self.modulus = modulus
        self.order = 1 << degree
        self._top = 1 << degree
        self._trace_mask = None
        self._exp = None
        self._log = None

    def __eq__(self, other):
        return (isinstance(other, BinaryField)
                and self.degree == other.degree
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.degree, self.modulus))

    def __repr__(self):
        return "BinaryField(degree=%d, modulus=0x%x)" % (self.degree, self.modulus)

    @property
    def generator(self):
        """The residue class of x (1 for the prime field, where x reduces to 0)."""
        return 2 if self.degree > 1 else 1

    def elements(self):
        return range(self.order)

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def add(a, b):
        return a ^ b

    def mul(self, a, b):
        log = self._log
        if log is not None:
            if a == 0 or b == 0:
                return 0
            return self._exp[(log[a] + log[b]) % (self.order - 1)]
        m, top = self.modulus, self._top
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= m
        return r

    def sqr(self, a):
        return gf2x.mod(gf2x.sqr(a), self.modulus)

    def inv(self, a):
        """Inverse of nonzero a (binary extended Euclid on the bit vectors)."""
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if a == 1:
            return 1
        t1, t2 = 0, 1
        r1, r2 = self.modulus, a
        r1l, r2l = self.degree + 1, a.bit_length()
        while r2:
            q = r1l - r2l
            r1 ^= r2 << q
            t1 ^= t2 << q
            r1l = r1.bit_length()
            if r1 < r2:
                t1, t2 = t2, t1
                r1, r2 = r2, r1
                r1l, r2l = r2l, r1l
        return t1

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        """a^e with the exponent reduced mod 2^N - 1 for nonzero a.

        Arbitrary-precision (and negative) exponents are fine for a != 0.
        """
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        e %= self.order - 1 if self.order > 2 else 1
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.sqr(a)
            e >>= 1
        return r

    def frobenius(self, a, k):
        """a^(2^k) for any integer k; negative k applies the inverse map."""
        for _ in range(k % self.degree):
            a = self.sqr(a)
        return a

    def sqrt(self, a):
        return self.frobenius(a, self.degree - 1)

    def trace_mask(self):
        """Bitmask m with trace(a) == parity of popcount(a & m); trace is F_2-linear."""
        mask = self._trace_mask
        if mask is None:
            mask = 0
            for i in range(self.degree):
                if self._trace_direct(1 << i):
                    mask |= 1 << i
            self._trace_mask = mask
        return mask

    def trace(self, a):
        """Absolute trace to F_2: sum of a^(2^i) for i < N, landing in {0,1}."""
        return (a & self.trace_mask()).bit_count() & 1

    def _trace_direct(self, a):
        t = acc = a
        for _ in range(self.degree - 1):
            t = self.sqr(t)
            acc ^= t
        return acc

    # -- discrete exp/log tables -------------------------------------------

    def ensure_tables(self):
        """Build exp/log tables for small fields; returns True when available."""
        if self._exp is not None:
            return True
        if self.degree > _TABLE_MAX_DEGREE:
            return False
        q1 = self.order - 1
        base = self._find_primitive()
        exp = [1] * q1
        log = [0] * self.order
        v = 1
        for i in range(q1):
            exp[i] = v
            log[v] = i
            v = self.mul(v, base)
        self._exp, self._log = exp, log
        return True

    def _find_primitive(self):
        q1 = self.order - 1
        primes = gf2x._prime_factors(q1) if q1 > 1 else []
        for candidate in range(2, self.order):
            if all(self.pow(candidate, q1 // p) != 1 for p in primes):
                return candidate
        return 1  # prime field

    @property
    def tables(self):
        return self._exp, self._log


_FIELD_CACHE = {}


def make_field(n, max_degree=DEFAULT_MAX_DEGREE):
    """The canonical F_{2^n}: smallest-pattern irreducible modulus of degree n."""
    if n < 1:
        raise ValueError("field degree must be positive")
    if n > max_degree:
        raise CapacityError("field degree %d exceeds bound %d" % (n, max_degree))
    f = _FIELD_CACHE.get(n)
    if f is None:
        f = BinaryField(n, gf2x.smallest_irreducible(n))
        _FIELD_CACHE[n] = f
    return f


# -- F_2-linear algebra ------------------------------------------------------


class F2LinearMap:
    """Echelonized form of an F_2-linear map on a field, given basis images.

    images[i] is the image of the basis bit 1 << i.  Because field elements
    are bit vectors, preimage masks are themselves field elements.
    """

    def __init__(self, images):
        self.dim = len(images)
        self.rows = []  # (pivot_bit, value, preimage), pivots decreasing
        kernel = []
        for i, v in enumerate(images):
            pre = 1 << i
            v, pre = self._reduce(v, pre)
            if v == 0:
                kernel.append(pre)
            else:
                self._insert(v, pre)
        self.rank = len(self.rows)
        self._kernel = _echelonize(kernel)

    def _reduce(self, v, pre):
        for piv, row_v, row_p in self.rows:
            if v & piv:
                v ^= row_v
                pre ^= row_p
        return v, pre

    def _insert(self, v, pre):
        piv = 1 << (v.bit_length() - 1)
        rows = [(piv, v, pre)]
        for p2, v2, pre2 in self.rows:
            if v2 & piv:
                v2 ^= v
                pre2 ^= pre
            rows.append((p2, v2, pre2))
        rows.sort(key=lambda r: -r[0])
        self.rows = rows

    def kernel_basis(self):
        """Canonical (echelon, ascending) basis of the kernel."""
        return list(self._kernel)

    def kernel_size(self):
        return 1 << (self.dim - self.rank)

    def image_contains(self, target):
        for piv, v, _ in self.rows:
            if target & piv:
                target ^= v
        return target == 0

    def solve(self, target):
        """One preimage of target, or None if target is outside the image."""
        pre = 0
        for piv, v, row_p in self.rows:
            if target & piv:
                target ^= v
                pre ^= row_p
        return pre if target == 0 else None


def _echelonize(vecs):
    basis = []
    for v in vecs:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis = [min(b, b ^ v) for b in basis]
            basis.append(v)
    return sorted(basis)


def f2_linear_solve(images, target):
    """Kernel basis and one solution of the linear map given by basis images.

    Returns (kernel_basis, solution-or-None); the solution count is
    2^len(kernel_basis) whenever a solution exists.
    """
    lm = F2LinearMap(images)
    return lm.kernel_basis(), lm.solve(target)


# -- polynomials with coefficients in a binary field --------------------------
#
# Little-endian coefficient lists: just enough for splitting-degree searches
# and deterministic root finding.  Degrees stay small here; the heavy
# GF(2)-only work lives in gf2x on packed ints.


def ptrim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def pmul(F, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    mul = F.mul
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] ^= mul(ai, bj)
    return ptrim(out)


def pdivmod(F, a, b):
    b = ptrim(list(b))
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    a = ptrim(list(a))
    dm = len(b) - 1
    q = [0] * max(len(a) - dm, 0)
    inv_top = F.inv(b[-1])
    mul = F.mul
    while a and len(a) - 1 >= dm:
        c = mul(a[-1], inv_top)
        shift = len(a) - 1 - dm
        q[shift] = c
        for j, bj in enumerate(b):
            if bj:
                a[shift + j] ^= mul(c, bj)
        ptrim(a)
    return ptrim(q), a


def pmod(F, a, b):
    return pdivmod(F, a, b)[1]


def pgcd(F, a, b):
    a, b = ptrim(list(a)), ptrim(list(b))
    while b:
        a, b = b, pmod(F, a, b)
    return pmonic(F, a)


def pmonic(F, a):
    if not a or a[-1] == 1:
        return list(a)
    inv_top = F.inv(a[-1])
    return [F.mul(c, inv_top) for c in a]


def psqr(F, a):
    if not a:
        return []
    out = [0] * (2 * len(a) - 1)
    for i, c in enumerate(a):
        if c:
            out[2 * i] = F.sqr(c)
    return ptrim(out)


def peval(F, c, x):
    acc = 0
    for coef in reversed(c):
        acc = F.mul(acc, x) ^ coef
    return acc


def frobenius_power_mod(F, m, steps):
    """x^(2^steps) reduced mod m, via repeated squaring."""
    t = pmod(F, [0, 1], m)
    for _ in range(steps):
        t = pmod(F, psqr(F, t), m)
    return t


def poly_roots(F, coeffs):
    """All roots in F of a polynomial that splits into distinct roots there.

    Returns None when the polynomial does not split completely (or has a
    repeated root).  Deterministic: small fields are scanned element by
    element; larger ones use trace-map splitting with multipliers running
    through the successive powers 1, g, g^2, ... of the field generator.
    """
    coeffs = ptrim(list(coeffs))
    if len(coeffs) <= 1:
        return []
    roots = []
    if coeffs[0] == 0:
        roots.append(0)
        coeffs = ptrim(coeffs[1:])
        if not coeffs or coeffs[0] == 0:
            return None  # repeated root 0
    deg = len(coeffs) - 1
    if deg == 0:
        return roots
    if deg == 1:
        return sorted(roots + [F.div(coeffs[0], coeffs[1])])
    if F.order <= _SCAN_MAX_ORDER:
        found = [x for x in F.elements() if peval(F, coeffs, x) == 0]
        if len(found) != deg:
            return None
        return sorted(roots + found)
    coeffs = pmonic(F, coeffs)
    if frobenius_power_mod(F, coeffs, F.degree) != [0, 1]:
        return None
    _trace_split(F, coeffs, 1, roots)
    return sorted(roots)


def _trace_split(F, f, v, out):
    # f monic, squarefree, fully split over F
    if len(f) == 2:
        out.append(f[0])
        return
    while True:
        t = _trace_poly_mod(F, f, v)
        v = F.mul(v, F.generator)
        g = pgcd(F, t, f)
        if 0 < len(g) - 1 < len(f) - 1:
            break
    other, rem = pdivmod(F, f, g)
    assert not rem
    _trace_split(F, g, v, out)
    _trace_split(F, pmonic(F, other), v, out)


def _trace_poly_mod(F, f, v):
    # sum over i < N of (v x)^(2^i), reduced mod f
    t = pmod(F, [0, v], f)
    acc = [0] * (len(f) - 1)
    for i, c in enumerate(t):
        acc[i] = c
    for _ in range(F.degree - 1):
        t = pmod(F, psqr(F, t), f)
        for i, c in enumerate(t):
            acc[i] ^= c
    return ptrim(acc)


# -- embeddings ----------------------------------------------------------------


class FieldEmbedding:
    """Field homomorphism of a base field into an extension, fixing F_2."""

    __slots__ = ("base", "ext", "_powers", "_solver")

    def __init__(self, base, ext, generator_image):
        self.base = base
        self.ext = ext
        self._powers = [1]
        for _ in range(base.degree - 1):
            self._powers.append(ext.mul(self._powers[-1], generator_image))
        self._solver = None

    def __call__(self, e):
        if self.base is self.ext:
            return e
        acc = 0
        i = 0
        while e:
            if e & 1:
                acc ^= self._powers[i]
            e >>= 1
            i += 1
        return acc

    def preimage(self, e):
        """The base-field element mapping to e, or None if e is outside."""
        if self.base is self.ext:
            return e
        if self._solver is None:
            self._solver = F2LinearMap(
                [self(1 << i) for i in range(self.base.degree)])
        sol = self._solver.solve(e)
        return sol


def identity_embedding(field):
    return FieldEmbedding(field, field, field.generator)


_EMBED_CACHE = {}


def embedding_into(base, ext):
    """Deterministic embedding of base into ext.

    base.degree must divide ext.degree; the base generator goes to the
    smallest root of the base modulus in ext.
    """
    if base == ext:
        return identity_embedding(base)
    if ext.degree % base.degree:
        raise ValueError("no embedding: %d does not divide %d"
                         % (base.degree, ext.degree))
    key = (base.degree, base.modulus, ext.degree, ext.modulus)
    emb = _EMBED_CACHE.get(key)
    if emb is not None:
        return emb
    if base.degree == 1:
        emb = FieldEmbedding(base, ext, 1)
    else:
        mod_coeffs = [(base.modulus >> i) & 1 for i in range(base.degree + 1)]
        roots = poly_roots(ext, mod_coeffs)
        if not roots:
            raise AssertionError("modulus must split in a degree multiple")
        emb = FieldEmbedding(base, ext, roots[0])
    _EMBED_CACHE[key] = emb
    return emb


def extend_and_embed(base, k, max_degree=DEFAULT_MAX_DEGREE):
    """The canonical degree-k extension of base together with the embedding."""
    if k == 1:
        return base, identity_embedding(base)
    ext = make_field(base.degree * k, max_degree=max_degree)
    return ext, embedding_into(base, ext)
