"""Polynomial arithmetic over GF(2) with int-packed coefficients.

A polynomial sum b_i x^i is stored as the integer sum b_i 2^i, so addition
is xor and multiplication by x is a left shift.  This keeps the hot loops
(irreducibility tests, gcds of degree-4096 polynomials) inside CPython's
bignum layer where they run on machine words.
"""

from functools import lru_cache

# Squaring spreads the bits of a byte: bit i -> bit 2i.
_SPREAD = [sum(1 << (2 * i) for i in range(8) if b >> i & 1) for b in range(256)]


def degree(a):
    """Degree of a, with degree(0) == -1."""
    return a.bit_length() - 1


def mul(a, b):
    """Product of polynomials a and b."""
    if a < b:
        a, b = b, a
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def sqr(a):
    """Square of a (bit spreading; cross terms vanish in characteristic 2)."""
    r = 0
    shift = 0
    while a:
        r |= _SPREAD[a & 0xFF] << shift
        a >>= 8
        shift += 16
    return r


def mod(a, m):
    """Remainder of a modulo nonzero m."""
    if m == 0:
        raise ZeroDivisionError("division by zero polynomial")
    dm = degree(m)
    da = degree(a)
    while da >= dm:
        a ^= m << (da - dm)
        da = degree(a)
    return a


def divmod_(a, m):
    """Quotient and remainder of a by nonzero m."""
    if m == 0:
        raise ZeroDivisionError("division by zero polynomial")
    dm = degree(m)
    q = 0
    da = degree(a)
    while da >= dm:
        q ^= 1 << (da - dm)
        a ^= m << (da - dm)
        da = degree(a)
    return q, a


def gcd(a, b):
    """Greatest common divisor (monic by construction over GF(2))."""
    while b:
        a, b = b, mod(a, b)
    return a


def mulmod(a, b, m):
    return mod(mul(a, b), m)


def sqrmod(a, m):
    return mod(sqr(a), m)


def frob_power_mod(k, m):
    """x^(2^k) reduced modulo m."""
    t = mod(2, m)
    for _ in range(k):
        t = sqrmod(t, m)
    return t


def _prime_factors(n):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f):
    """Rabin irreducibility test for f over GF(2)."""
    n = degree(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    if f & 1 == 0:  # divisible by x
        return False
    if frob_power_mod(n, f) != mod(2, f):
        return False
    for p in _prime_factors(n):
        if gcd(frob_power_mod(n // p, f) ^ 2, f) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(n):
    """The monic irreducible of degree n whose bit pattern is smallest.

    For n == 1 this is the polynomial x itself.
    """
    if n < 1:
        raise ValueError("degree must be positive")
    if n == 1:
        return 0b10
    for f in range((1 << n) + 1, 1 << (n + 1), 2):
        if is_irreducible(f):
            return f
    raise AssertionError("unreachable: irreducibles exist in every degree")


def frobenius_order(f, cap):
    """Least k <= cap with x^(2^k) == x (mod f), or None.

    For squarefree f this is the lcm of the degrees of its irreducible
    factors, i.e. the degree of its splitting field over GF(2).
    """
    x = mod(2, f)
    t = x
    for k in range(1, cap + 1):
        t = sqrmod(t, f)
        if t == x:
            return k
    return None
