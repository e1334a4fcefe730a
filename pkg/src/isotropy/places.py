"""Places of Q and the local theory of diagonal quadratic forms.

Everything here is exact: valuations, local square tests, Hilbert symbols by
the classical closed forms, Hasse invariants, and the local/global isotropy
decisions they support.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterable

from .arith import factor, is_prime, jacobi, sqrt_exact, squarefree_part
from .errors import AnisotropicFormError, DegenerateFormError


@dataclass(frozen=True)
class Place:
    """The real place of Q (p is None) or the finite place at the prime p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not is_prime(self.p):
            raise ValueError(f"not a prime: {self.p}")

    @property
    def is_real(self) -> bool:
        return self.p is None

    @property
    def is_dyadic(self) -> bool:
        return self.p == 2

    def sort_key(self) -> tuple[int, int]:
        return (1, 0) if self.p is None else (0, self.p)

    def __str__(self) -> str:
        return "inf" if self.p is None else str(self.p)


REAL_PLACE = Place()

# The support set of a form: finite primes, always including the dyadic one.
SupportSet = frozenset


@dataclass(frozen=True)
class DiagonalForm:
    """<a1,...,an> representing a1*x1^2 + ... + an*xn^2, every ai nonzero."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        cs = tuple(Fraction(c) for c in self.coeffs)
        if not cs:
            raise DegenerateFormError("a form needs at least one coefficient")
        if any(c == 0 for c in cs):
            raise DegenerateFormError("degenerate form: zero coefficient")
        object.__setattr__(self, "coeffs", cs)

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    @property
    def det(self) -> Fraction:
        return prod(self.coeffs, start=Fraction(1))

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def take(self, indices: Iterable[int]) -> "DiagonalForm":
        return DiagonalForm(tuple(self.coeffs[i] for i in indices))

    def drop(self, i: int) -> "DiagonalForm":
        return DiagonalForm(self.coeffs[:i] + self.coeffs[i + 1:])

    def prepend(self, c) -> "DiagonalForm":
        return DiagonalForm((Fraction(c),) + self.coeffs)

    def scale(self, lam) -> "DiagonalForm":
        return DiagonalForm(tuple(Fraction(lam) * c for c in self.coeffs))

    def evaluate(self, vector) -> Fraction:
        vs = tuple(Fraction(v) for v in vector)
        if len(vs) != self.dim:
            raise ValueError("vector length does not match the dimension")
        return sum((a * v * v for a, v in zip(self.coeffs, vs)), Fraction(0))

    def __str__(self) -> str:
        return "<" + ", ".join(str(c) for c in self.coeffs) + ">"


def valuation(q: Fraction | int, p: int) -> int:
    """ord_p of a nonzero rational."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("valuation of 0 is undefined")
    v = 0
    n = q.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = q.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v


def unit_part_residue(q: Fraction, p: int, modulus: int) -> int:
    """Residue of q / p**ord_p(q) modulo p**k (modulus = p**k)."""
    v = valuation(q, p)
    u = q / Fraction(p) ** v
    return u.numerator * pow(u.denominator, -1, modulus) % modulus


def local_square(a: Fraction | int, v: Place) -> bool:
    """Is a nonzero rational a square in the completion at v?"""
    a = Fraction(a)
    if a == 0:
        raise ValueError("0 is excluded from square-class tests")
    if v.is_real:
        return a > 0
    p = v.p
    if valuation(a, p) % 2:
        return False
    if p == 2:
        return unit_part_residue(a, 2, 8) == 1
    return jacobi(unit_part_residue(a, p, p), p) == 1


def hilbert_symbol(a: Fraction | int, b: Fraction | int, v: Place) -> int:
    """(a, b)_v: +1 iff z^2 = a x^2 + b y^2 has a nontrivial local solution."""
    a = Fraction(a)
    b = Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol needs nonzero entries")
    if v.is_real:
        return -1 if (a < 0 and b < 0) else 1
    p = v.p
    alpha = valuation(a, p)
    beta = valuation(b, p)
    if p != 2:
        sign = 1
        if alpha & 1 and beta & 1:
            sign *= jacobi(-1, p)
        if beta & 1:
            sign *= jacobi(unit_part_residue(a, p, p), p)
        if alpha & 1:
            sign *= jacobi(unit_part_residue(b, p, p), p)
        return sign
    u8 = unit_part_residue(a, 2, 8)
    w8 = unit_part_residue(b, 2, 8)
    # epsilon(u) = (u-1)/2 mod 2 and omega(u) = (u^2-1)/8 mod 2 on odd residues.
    exponent = (((u8 - 1) // 2) & 1) * (((w8 - 1) // 2) & 1)
    exponent += (alpha & 1) * (((w8 * w8 - 1) // 8) & 1)
    exponent += (beta & 1) * (((u8 * u8 - 1) // 8) & 1)
    return -1 if exponent & 1 else 1


def hasse_invariant(f: DiagonalForm, v: Place) -> int:
    """Product of the pairwise Hilbert symbols (a_i, a_j)_v over i < j."""
    sign = 1
    n = f.dim
    for i in range(n):
        for j in range(i + 1, n):
            sign *= hilbert_symbol(f[i], f[j], v)
    return sign


def support_set(f: DiagonalForm) -> frozenset[int]:
    """{2} together with every prime at which some coefficient has odd valuation."""
    primes = {2}
    for c in f.coeffs:
        s, _ = squarefree_part(c)
        primes.update(factor(s).primes())
    return frozenset(primes)


def local_isotropy(f: DiagonalForm, v: Place) -> bool:
    """Does f have a nontrivial zero over the completion at v?"""
    n = f.dim
    if n == 1:
        return False
    if v.is_real:
        return any(c > 0 for c in f.coeffs) and any(c < 0 for c in f.coeffs)
    if n == 2:
        return local_square(-f[0] * f[1], v)
    if n == 3:
        return hasse_invariant(f, v) == hilbert_symbol(-1, -f.det, v)
    if n == 4:
        if not local_square(f.det, v):
            return True
        return hasse_invariant(f, v) == hilbert_symbol(-1, -1, v)
    # Dimension 5 and up is isotropic over every non-archimedean completion.
    return True


def is_globally_isotropic(f: DiagonalForm) -> bool:
    """Isotropy over Q, via the local-global principle for dimensions 3 and 4."""
    n = f.dim
    if n == 1:
        return False
    if n == 2:
        return sqrt_exact(-f[0] * f[1]) is not None
    if not local_isotropy(f, REAL_PLACE):
        return False
    if n >= 5:
        return True
    return all(local_isotropy(f, Place(p)) for p in sorted(support_set(f)))


def anisotropy_witness(f: DiagonalForm) -> Place | None:
    """A place where f is locally anisotropic, or None if f is isotropic over Q."""
    n = f.dim
    if n == 1:
        return REAL_PLACE
    if n == 2:
        s, _ = squarefree_part(-f[0] * f[1])
        if s == 1:
            return None
        if s < 0:
            return REAL_PLACE
        return Place(factor(s).primes()[0])
    if not local_isotropy(f, REAL_PLACE):
        return REAL_PLACE
    if n >= 5:
        return None
    for p in sorted(support_set(f)):
        if not local_isotropy(f, Place(p)):
            return Place(p)
    return None


def require_isotropic(f: DiagonalForm) -> None:
    witness = anisotropy_witness(f)
    if witness is not None:
        raise AnisotropicFormError(
            f"form {f} is anisotropic (local obstruction at {witness})",
            place=witness,
        )
