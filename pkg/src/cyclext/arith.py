"""Exact arithmetic in finite cyclic groups.

Groups are written additively: Z_n is {0, ..., n-1} under addition mod n,
the identity is 0 and the distinguished generator h is the residue 1.
Python integers are arbitrary precision, so nothing here can overflow.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import NotAUnit, PreconditionViolated


@dataclass(frozen=True, order=True)
class CyclicElem:
    modulus: int
    residue: int

    def __post_init__(self):
        if self.modulus < 1:
            raise PreconditionViolated(f"modulus must be >= 1, got {self.modulus}")
        if not 0 <= self.residue < self.modulus:
            raise PreconditionViolated(
                f"residue {self.residue} outside [0, {self.modulus})")

    @classmethod
    def of(cls, modulus: int, value: int) -> "CyclicElem":
        return cls(modulus, value % modulus)

    def __add__(self, other: "CyclicElem") -> "CyclicElem":
        self._check_same(other)
        return CyclicElem(self.modulus, (self.residue + other.residue) % self.modulus)

    def __neg__(self) -> "CyclicElem":
        return CyclicElem(self.modulus, -self.residue % self.modulus)

    def __sub__(self, other: "CyclicElem") -> "CyclicElem":
        return self + (-other)

    def __rmul__(self, k: int) -> "CyclicElem":
        return CyclicElem(self.modulus, k * self.residue % self.modulus)

    @property
    def order(self) -> int:
        return elem_order(self.modulus, self.residue)

    def _check_same(self, other):
        if other.modulus != self.modulus:
            raise PreconditionViolated("elements of different cyclic groups")


def elem_order(n: int, c: int) -> int:
    """Additive order of ``c`` in Z_n, i.e. ``n / gcd(c, n)``."""
    if n < 1 or not 0 <= c < n:
        raise PreconditionViolated(f"need 0 <= c < n, got c={c}, n={n}")
    return n // gcd(c, n)


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b)``.

    Works for negative inputs; ``g`` is always nonnegative.
    """
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_x, x = x, old_x - quot * x
        old_y, y = y, old_y - quot * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def bezout(values) -> tuple[int, list[int]]:
    """Iterated extended gcd over a sequence of integers.

    Returns ``(g, coeffs)`` with ``sum(c * v) == g == gcd(values)``.
    Coefficients are accumulated left to right, so earlier entries are used
    first when several combinations exist.
    """
    values = list(values)
    g, coeffs = 0, []
    for v in values:
        g, x, y = egcd(g, v)
        coeffs = [c * x for c in coeffs]
        coeffs.append(y)
    return g, coeffs


def inverse_mod(n: int, c: int) -> int:
    if n < 1:
        raise PreconditionViolated(f"modulus must be >= 1, got {n}")
    if gcd(c, n) != 1:
        raise NotAUnit(f"{c} is not a unit mod {n}")
    return pow(c, -1, n) if n > 1 else 0


def is_unit(n: int, u: int) -> bool:
    return gcd(u, n) == 1


def units(n: int) -> list[int]:
    """Units of Z_n in increasing order (``[0]`` for the trivial ring Z_1)."""
    if n == 1:
        return [0]
    return [u for u in range(1, n) if gcd(u, n) == 1]


def totient(n: int) -> int:
    return len(units(n))


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> int:
    """Solve x = r1 (mod m1), x = r2 (mod m2) for coprime moduli; x in [0, m1*m2)."""
    g, x, _ = egcd(m1, m2)
    if g != 1:
        raise PreconditionViolated(f"moduli {m1}, {m2} are not coprime")
    # x*m1 = 1 mod m2
    return (r1 + (r2 - r1) * x % m2 * m1) % (m1 * m2)


def align_automorphism(m: int, p: int, q: int, a: int, b: int) -> int:
    """Unit ``u`` mod ``mpq`` with ``u*a = mq`` and ``u*b = mp``.

    ``a`` must have order p and ``b`` order q in Z_{mpq}.  Such an ``a`` is
    ``mq*x`` with x a unit mod p (similarly ``b = mp*y``), so ``u`` is pinned
    mod p and mod q; the CRT gives it mod pq and the smallest lift that is a
    unit mod mpq is returned.
    """
    if min(m, p, q) < 1 or gcd(p, q) != 1:
        raise PreconditionViolated("need positive m, p, q with gcd(p, q) = 1")
    n = m * p * q
    if not (0 <= a < n and 0 <= b < n):
        raise PreconditionViolated(f"residues must lie in [0, {n})")
    if elem_order(n, a) != p or elem_order(n, b) != q:
        raise PreconditionViolated(
            f"orders are {elem_order(n, a)}, {elem_order(n, b)}; expected {p}, {q}")
    if n == 1:
        return 1
    x = a // (m * q)
    y = b // (m * p)
    u_pq = crt_pair(inverse_mod(p, x % p), p, inverse_mod(q, y % q), q)
    for k in range(m + 1):
        u = u_pq + k * p * q
        if gcd(u, n) == 1:
            return u % n
    raise AssertionError("no unit lift; (Z/mpq)* -> (Z/pq)* is surjective")
