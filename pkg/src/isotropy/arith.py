"""Exact integer and rational primitives: factoring, square parts, residues."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import FactorizationLimitError

_TRIAL_BOUND = 10_000
_DIGIT_BOUND_DEFAULT = 100

# Deterministic Miller-Rabin witnesses; this set proves primality for all
# n < 3.3e24, which covers 64-bit inputs with a wide margin.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
# Strong-pseudoprime battery applied above the deterministic range.
_MR_EXTRA = (41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


@dataclass(frozen=True)
class Factorization:
    """unit_sign * prod(p**e) reconstructs the input; primes strictly increase."""

    unit_sign: int
    factors: tuple[tuple[int, int], ...]

    def value(self) -> int:
        n = self.unit_sign
        for p, e in self.factors:
            n *= p ** e
        return n

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    witnesses = _MR_WITNESSES
    if n >= _MR_DETERMINISTIC_LIMIT:
        witnesses = _MR_WITNESSES + _MR_EXTRA
    for a in witnesses:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    k = max(n + 1, 2)
    while not is_prime(k):
        k += 1
    return k


def _brent_rho(n: int) -> int:
    """A nontrivial factor of odd composite n; deterministic retry schedule."""
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise FactorizationLimitError(f"rho retry schedule exhausted on {n}")


def factor(n: int, digit_bound: int = _DIGIT_BOUND_DEFAULT) -> Factorization:
    """Factor a nonzero integer by trial division then Brent's rho.

    Composite cofactors with more than digit_bound digits are refused with
    FactorizationLimitError instead of running unbounded.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    sign = -1 if n < 0 else 1
    n = abs(n)
    found: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            found[p] = found.get(p, 0) + 1
            n //= p
    q = 7
    while q <= _TRIAL_BOUND and q * q <= n:
        if n % q == 0:
            found[q] = found.get(q, 0) + 1
            n //= q
        else:
            q += 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            found[m] = found.get(m, 0) + 1
            continue
        if len(str(m)) > digit_bound:
            raise FactorizationLimitError(
                f"composite cofactor exceeds {digit_bound} digits"
            )
        d = _brent_rho(m)
        stack.append(d)
        stack.append(m // d)
    return Factorization(sign, tuple(sorted(found.items())))


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def sqrt_exact(q: Fraction | int) -> Fraction | None:
    """The nonnegative rational square root, or None if q is not a square."""
    q = Fraction(q)
    if q < 0:
        return None
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn != q.numerator or rd * rd != q.denominator:
        return None
    return Fraction(rn, rd)


def squarefree_part(q: Fraction | int) -> tuple[int, Fraction]:
    """Decompose q = s * t**2 with s a signed squarefree integer and t > 0."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("squarefree part of 0 is undefined")
    s = -1 if q < 0 else 1
    t_num = 1
    t_den = 1
    for p, e in factor(q.numerator).factors:
        if e % 2:
            s *= p
        t_num *= p ** (e // 2)
    for p, e in factor(q.denominator).factors:
        if e % 2:
            s *= p
            t_den *= p ** ((e + 1) // 2)
        else:
            t_den *= p ** (e // 2)
    t = Fraction(t_num, t_den)
    assert s * t * t == q
    return s, t


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n; the Legendre symbol for prime n."""
    if n <= 0 or n % 2 == 0:
        raise ValueError("jacobi symbol needs odd positive n")
    a %= n
    result = 1
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _tonelli_shanks(a: int, p: int) -> int | None:
    """Square root of a modulo an odd prime p, or None for a non-residue."""
    a %= p
    if a == 0:
        return 0
    if jacobi(a, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # Find the smallest quadratic non-residue deterministically.
    z = 2
    while jacobi(z, p) != -1:
        z += 1
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    m = s
    c = pow(z, q, p)
    t = pow(a, q, p)
    r = pow(a, (q + 1) // 2, p)
    while t != 1:
        t2 = t
        i = 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m = i
        c = b * b % p
        t = t * c % p
        r = r * b % p
    return r


def sqrt_mod(a: int, p: int, k: int = 1) -> int | None:
    """A root of x**2 = a (mod p**k), p an odd prime and gcd(a, p) = 1.

    Returns the smaller of the two roots; None iff a is a non-residue mod p.
    """
    if p == 2 or not is_prime(p):
        raise ValueError("sqrt_mod requires an odd prime")
    if k < 1:
        raise ValueError("k must be positive")
    if a % p == 0:
        raise ValueError("sqrt_mod requires gcd(a, p) = 1")
    r = _tonelli_shanks(a, p)
    if r is None:
        return None
    mod = p
    for _ in range(k - 1):
        mod *= p
        # Hensel step: r <- r - (r^2 - a) / (2r) modulo the lifted modulus.
        r = (r - (r * r - a) * pow(2 * r, -1, mod)) % mod
    r %= mod
    return min(r, mod - r)


def crt(pairs: list[tuple[int, int]]) -> int:
    """x with x = r_i (mod m_i) for pairwise coprime moduli; 0 <= x < prod m_i."""
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            if math.gcd(pairs[i][1], pairs[j][1]) != 1:
                raise ValueError("moduli are not pairwise coprime")
    x, m = 0, 1
    for r, mi in pairs:
        if mi <= 0:
            raise ValueError("moduli must be positive")
        t = ((r - x) * pow(m, -1, mi)) % mi
        x += m * t
        m *= mi
    return x % m


def smallest_nonresidue(p: int) -> int:
    """The least positive quadratic non-residue modulo an odd prime p."""
    u = 2
    while jacobi(u, p) != -1:
        u += 1
    return u


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with g = gcd(a, b) = s*a + t*b."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_s, s = s, old_s - qt * s
        old_t, t = t, old_t - qt * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t
