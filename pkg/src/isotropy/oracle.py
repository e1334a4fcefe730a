"""Brute-force verifiers, deliberately sharing no code with the solver path.

These back the test suite: exhaustive vector search, local solubility scans
for Hilbert-symbol checks, and reduced-form class-number enumeration.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .places import DiagonalForm


@dataclass(frozen=True)
class SearchBudget:
    height: int
    time_cap: float | None = None

    def __post_init__(self):
        if self.height < 1:
            raise ValueError("height bound must be at least 1")


def _zigzag(h: int) -> list[int]:
    # 0, 1, -1, 2, -2, ..., h, -h
    out = [0]
    for k in range(1, h + 1):
        out.append(k)
        out.append(-k)
    return out


def brute_search(f: DiagonalForm, budget: SearchBudget) -> tuple[int, ...] | None:
    """First primitive integer zero with max|v_i| <= height, or None.

    Coordinates are enumerated lexicographically over the order 0, 1, -1,
    2, -2, ...; the last coordinate is solved for directly.  Definite forms
    are rejected immediately by the sign argument.  A None is one-sided
    evidence only: no solution within the budget.
    """
    coeffs = f.coeffs
    n = f.dim
    if all(c > 0 for c in coeffs) or all(c < 0 for c in coeffs):
        return None
    h = budget.height
    deadline = None if budget.time_cap is None else time.monotonic() + budget.time_cap
    # Clear denominators once; integer vectors see only the integer form.
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    last = ints[-1]
    order = _zigzag(h)
    if n == 1:
        return None

    def solve_last(partial_sum: int, prefix: tuple[int, ...]):
        # partial_sum + last * t^2 = 0 with |t| <= h
        if partial_sum % last:
            return None
        s = -partial_sum // last
        if s < 0:
            return None
        t = isqrt(s)
        if t * t != s or t > h:
            return None
        for cand in (t, -t) if t else (0,):
            vec = prefix + (cand,)
            if any(vec) and gcd(*vec, 0) == 1:
                return vec
        return None

    def rec(prefix: tuple[int, ...], acc: int):
        if deadline is not None and time.monotonic() > deadline:
            raise TimeoutError
        if len(prefix) == n - 1:
            return solve_last(acc, prefix)
        i = len(prefix)
        a = ints[i]
        for v in order:
            res = rec(prefix + (v,), acc + a * v * v)
            if res is not None:
                return res
        return None

    try:
        return rec((), 0)
    except TimeoutError:
        return None


def _required_precision(a: int, b: int, p: int) -> int:
    ord2 = 1 if p == 2 else 0
    va = 0
    aa = abs(a)
    while aa % p == 0:
        aa //= p
        va += 1
    vb = 0
    bb = abs(b)
    while bb % p == 0:
        bb //= p
        vb += 1
    return 1 + 2 * (ord2 + max(va, vb, 1))


def local_solubility_scan(a: int, b: int, p: int, k: int) -> int:
    """+1 iff a x^2 + b y^2 = z^2 (mod p^k) has a primitive solution.

    k must be large enough (at least 1 + 2*(ord_p 2 + max(1, valuations)))
    that the verdict equals the Hilbert symbol (a, b)_p.  The scan splits on
    which coordinate is a unit and works at the Hensel-sufficient modulus
    for each case, which never exceeds p^k.
    """
    if a == 0 or b == 0:
        raise ValueError("coefficients must be nonzero")
    if p > 50:
        raise ValueError("scan is restricted to p <= 50")
    if k < _required_precision(a, b, p):
        raise ValueError("precision too small for a faithful verdict")

    ord2 = 1 if p == 2 else 0

    def val(n: int) -> int:
        v = 0
        n = abs(n)
        while n % p == 0:
            n //= p
            v += 1
        return v

    # Case "z is a unit" (normalized z = 1): a x^2 + b y^2 = 1 (mod p^kz).
    kz = 1 + 2 * ord2
    m = p ** kz
    ax2 = {a * x * x % m for x in range(m)}
    if any((1 - b * y * y) % m in ax2 for y in range(m)):
        return 1
    # Case "x is a unit" (x = 1): z^2 - b y^2 = a (mod p^kx).
    kx = 1 + 2 * (ord2 + val(a))
    m = p ** kx
    sq = {z * z % m for z in range(m)}
    if any((a + b * y * y) % m in sq for y in range(m)):
        return 1
    # Case "y is a unit" (y = 1): z^2 - a x^2 = b (mod p^ky).
    ky = 1 + 2 * (ord2 + val(b))
    m = p ** ky
    sq = {z * z % m for z in range(m)}
    if any((b + a * x * x) % m in sq for x in range(m)):
        return 1
    return -1


def bqf_class_group_oracle(disc: int) -> int:
    """Number of reduced binary quadratic forms of negative discriminant disc."""
    if not -10_000 <= disc < 0:
        raise ValueError("oracle range is -10^4 <= disc < 0")
    if disc % 4 not in (0, 1):
        raise ValueError("not a discriminant: must be 0 or 1 mod 4")
    count = 0
    a = 1
    while 3 * a * a <= -disc:
        for b in range(-a, a + 1):
            if (b * b - disc) % (4 * a):
                continue
            c = (b * b - disc) // (4 * a)
            if c < a:
                continue
            if b < 0 and (a == -b or a == c):
                continue
            count += 1
        a += 1
    return count
