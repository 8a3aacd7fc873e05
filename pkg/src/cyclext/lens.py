"""Degree-one domination between lens spaces via quadratic residues.

If q1*q2 = r^2 (mod p) then L(p, q1) 1-dominates L(p, q2).  The witness is a
Seifert-fibred filling of S^1 x annulus described by integers
(a1, b1, a2, b2, m, n, r) with

    gcd(a1, b1) = gcd(a2, b2) = gcd(a1, a2) = 1
    a1*b2 + a2*b1 = p,   m*a1 - n*b1 = 1
    a1*a2 = q2,   m*a2 + n*b2 = q1,   r^2 = q1*q2   (all mod p)

Only this sufficient construction is encoded; the digraph is therefore a
subrelation of true degree-one domination.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from math import gcd
from typing import Optional

from .arith import egcd, inverse_mod
from .errors import NotCoprime, PreconditionViolated


@dataclass(frozen=True)
class LensSpace:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 2:
            raise PreconditionViolated("lens spaces here need p >= 2")
        if gcd(self.p, self.q) != 1:
            raise NotCoprime(f"gcd({self.p}, {self.q}) != 1")
        object.__setattr__(self, "q", self.q % self.p)

    def canonical(self) -> "LensSpace":
        """Representative with the smaller of q and q^-1 mod p."""
        return LensSpace(self.p, min(self.q, inverse_mod(self.p, self.q)))

    def __str__(self):
        return f"L({self.p},{self.q})"


@dataclass(frozen=True)
class DominationCertificate:
    a1: int
    b1: int
    a2: int
    b2: int
    m: int
    n: int
    r: int
    debug: dict = field(default_factory=dict, compare=False, hash=False)

    def astuple(self):
        return (self.a1, self.b1, self.a2, self.b2, self.m, self.n, self.r)


def _require_coprime(p, *qs):
    for q in qs:
        if gcd(p, q) != 1:
            raise NotCoprime(f"gcd({p}, {q}) != 1")


def dominates_qr(p: int, q1: int, q2: int) -> Optional[DominationCertificate]:
    """Certificate that L(p, q1) 1-dominates L(p, q2), or None if q1*q2 is a non-residue."""
    if p < 2:
        raise PreconditionViolated("need p >= 2")
    _require_coprime(p, q1, q2)
    target = q1 * q2 % p
    r = next((x for x in range(1, p + 1) if x * x % p == target), None)
    if r is None:
        return None
    q1_star = inverse_mod(p, q1)
    a1 = r * q1_star + p
    a2 = r
    g, b2_prime, b1_prime = egcd(a1, a2)
    if g != 1:
        raise AssertionError(f"gcd(a1, a2) = {g}; r must be a unit mod p")
    b1, b2 = b1_prime * p, b2_prime * p
    g, m, n = egcd(a1, -b1)
    if g != 1:
        raise AssertionError(f"gcd(a1, b1) = {g}")
    return DominationCertificate(
        a1, b1, a2, b2, m, n, r,
        debug={"q1_star": q1_star, "b1_prime": b1_prime, "b2_prime": b2_prime})


def verify_certificate(p: int, q1: int, q2: int, cert: DominationCertificate) -> bool:
    a1, b1, a2, b2, m, n, r = cert.astuple()
    return (p >= 2
            and gcd(a1, b1) == 1 and gcd(a2, b2) == 1 and gcd(a1, a2) == 1
            and a1 * b2 + a2 * b1 == p
            and m * a1 - n * b1 == 1
            and (r * r - q1 * q2) % p == 0
            and (a1 * a2 - q2) % p == 0
            and (m * a2 + n * b2 - q1) % p == 0)


def lens_equivalent(p: int, q: int, q_other: int) -> bool:
    """Orientation-preserving homeomorphism L(p, q) = L(p, q')."""
    _require_coprime(p, q, q_other)
    return (q - q_other) % p == 0 or (q * q_other - 1) % p == 0


@dataclass
class DominationDigraph:
    p: int
    nodes: list[LensSpace]
    edges: list[tuple[LensSpace, LensSpace, DominationCertificate]]
    mutual_pairs: list[tuple[LensSpace, LensSpace]]


def domination_digraph(p: int) -> DominationDigraph:
    """Certificate edges between canonical classes of lens spaces with |H_1| = p."""
    if p < 2:
        raise PreconditionViolated("need p >= 2")
    nodes = sorted({LensSpace(p, q).canonical() for q in range(1, p) if gcd(p, q) == 1},
                   key=lambda L: L.q)
    edges = []
    for src in nodes:
        for dst in nodes:
            cert = dominates_qr(p, src.q, dst.q)
            if cert is not None:
                edges.append((src, dst, cert))
    linked = {(s.q, d.q) for s, d, _ in edges}
    mutual = [(a, b) for i, a in enumerate(nodes) for b in nodes[i + 1:]
              if (a.q, b.q) in linked and (b.q, a.q) in linked
              and not lens_equivalent(p, a.q, b.q)]
    return DominationDigraph(p, nodes, edges, mutual)


CSV_COLUMNS = ["p", "q1", "q2", "r", "a1", "b1", "a2", "b2", "m", "n"]


def certificate_row(p, q1, q2, cert: DominationCertificate) -> dict:
    return {"p": p, "q1": q1 % p, "q2": q2 % p, "r": cert.r, "a1": cert.a1, "b1": cert.b1,
            "a2": cert.a2, "b2": cert.b2, "m": cert.m, "n": cert.n}


def certificates_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()
