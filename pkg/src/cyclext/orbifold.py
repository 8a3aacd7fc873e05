"""Quotient orbifolds, epimorphism data and Riemann-Hurwitz bookkeeping.

An action of Z_n on a closed surface is recorded by its quotient orbifold
(underlying genus r, cone indices n_1..n_s) together with the images of the
orbifold fundamental group generators alpha_i, beta_i, gamma_j in Z_n.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd

from .arith import elem_order
from .errors import (
    IndexNotDividing,
    NegativeBetti,
    NegativeGenus,
    NonIntegerGenus,
    PreconditionViolated,
    ShapeMismatch,
)

RELATION = "relation"
EXACT_ORDER = "exact-order"
SURJECTIVITY = "surjectivity"


@dataclass(frozen=True)
class OrbifoldSignature:
    underlying_genus: int
    singular_indices: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "singular_indices", tuple(self.singular_indices))
        if self.underlying_genus < 0:
            raise PreconditionViolated("underlying genus must be nonnegative")
        bad = [k for k in self.singular_indices if k < 2]
        if bad:
            raise PreconditionViolated(f"cone indices must be >= 2, got {bad}")

    @property
    def r(self) -> int:
        return self.underlying_genus

    @property
    def s(self) -> int:
        return len(self.singular_indices)

    def canonical(self) -> tuple[int, tuple[int, ...]]:
        """Presentation-order-free form; equal iff the orbifolds are homeomorphic."""
        return self.underlying_genus, tuple(sorted(self.singular_indices))

    def __str__(self):
        base = "S2" if self.r == 0 else ("T2" if self.r == 1 else f"Sigma_{self.r}")
        if not self.singular_indices:
            return base
        return f"{base}({','.join(map(str, self.singular_indices))})"


@dataclass(frozen=True)
class EpimorphismSpec:
    """Images a_i, b_i, c_j in Z_order of alpha_i, beta_i, gamma_j."""

    order: int
    alpha: tuple[int, ...] = ()
    beta: tuple[int, ...] = ()
    gamma: tuple[int, ...] = ()

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        if self.order < 2:
            raise PreconditionViolated(
                f"group order must be >= 2 (trivial actions are excluded), got {self.order}")
        if len(self.alpha) != len(self.beta):
            raise ShapeMismatch("alpha and beta must have the same length")
        for v in self.alpha + self.beta + self.gamma:
            if not 0 <= v < self.order:
                raise PreconditionViolated(f"residue {v} outside [0, {self.order})")

    @classmethod
    def make(cls, order, alpha=(), beta=(), gamma=()) -> "EpimorphismSpec":
        """Build a spec, reducing arbitrary (possibly negative) integers mod ``order``."""
        return cls(order,
                   tuple(a % order for a in alpha),
                   tuple(b % order for b in beta),
                   tuple(c % order for c in gamma))

    @property
    def r(self) -> int:
        return len(self.alpha)

    def replace(self, **changes) -> "EpimorphismSpec":
        fields_ = dict(order=self.order, alpha=self.alpha, beta=self.beta, gamma=self.gamma)
        fields_.update(changes)
        return EpimorphismSpec(**fields_)


@dataclass
class ValidationReport:
    valid: bool
    violations: list[str] = field(default_factory=list)
    details: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.valid


def quotient_genus(sig: OrbifoldSignature, n: int) -> int:
    """Genus g of the surface covering ``sig`` with a Z_n action.

    Solves 2 - 2g = n (2 - 2r - sum(1 - 1/n_k)) in exact rationals.
    """
    if n < 1:
        raise PreconditionViolated("group order must be positive")
    missing = [k for k in sig.singular_indices if n % k]
    if missing:
        raise IndexNotDividing(f"cone indices {missing} do not divide n={n}")
    chi = n * (2 - 2 * sig.r - sum((1 - Fraction(1, k) for k in sig.singular_indices),
                                   Fraction(0)))
    if chi.denominator != 1 or chi.numerator % 2:
        raise NonIntegerGenus(f"Euler characteristic {chi} is not an even integer")
    g = (2 - chi.numerator) // 2
    if g < 0:
        raise NegativeGenus(f"Riemann-Hurwitz gives genus {g}")
    return g


def validate(sig: OrbifoldSignature, spec: EpimorphismSpec) -> ValidationReport:
    """Check that ``spec`` describes a finitely-injective epimorphism for ``sig``."""
    if len(spec.alpha) != sig.r or len(spec.beta) != sig.r:
        raise ShapeMismatch(f"signature has {sig.r} handles, spec has {len(spec.alpha)}")
    if len(spec.gamma) != sig.s:
        raise ShapeMismatch(f"signature has {sig.s} cone points, spec has {len(spec.gamma)}")
    n = spec.order
    report = ValidationReport(True)

    total = sum(spec.gamma) % n
    if total:
        report.violations.append(RELATION)
        report.details.append(f"gamma images sum to {total}, not 0, mod {n}")

    wrong = [(j + 1, c, elem_order(n, c), k)
             for j, (c, k) in enumerate(zip(spec.gamma, sig.singular_indices))
             if elem_order(n, c) != k]
    if wrong:
        report.violations.append(EXACT_ORDER)
        report.details.extend(f"gamma_{j} -> {c} has order {o}, cone index is {k}"
                              for j, c, o, k in wrong)

    g = reduce(gcd, spec.alpha + spec.beta + spec.gamma, n)
    if g != 1:
        report.violations.append(SURJECTIVITY)
        report.details.append(f"images generate the index-{g} subgroup")

    report.valid = not report.violations
    return report


def gamma_subgroup_order(spec: EpimorphismSpec) -> int:
    """Order of the subgroup generated by the gamma images."""
    return spec.order // reduce(gcd, spec.gamma, spec.order)


def graph_beta1(vertices: int, edges: int, components: int) -> int:
    """First Betti number E - V + C of a finite graph.

    For a graph in the 3-sphere this is the genus of the boundary of a
    regular neighbourhood.
    """
    if min(vertices, edges, components) < 0:
        raise PreconditionViolated("counts must be nonnegative")
    if vertices >= 1 and components < 1:
        raise PreconditionViolated("a nonempty graph has at least one component")
    if components > vertices:
        raise PreconditionViolated("more components than vertices")
    b = edges - vertices + components
    if b < 0:
        raise NegativeBetti(f"E - V + C = {b} < 0; counts are inconsistent")
    return b


# -- JSON action format ------------------------------------------------------

def action_to_json(sig: OrbifoldSignature, spec: EpimorphismSpec) -> dict:
    return {
        "order": spec.order,
        "quotient_genus": sig.r,
        "singular": [{"index": k, "image": c}
                     for k, c in zip(sig.singular_indices, spec.gamma)],
        "alpha": list(spec.alpha),
        "beta": list(spec.beta),
    }


def action_from_json(obj: dict) -> tuple[OrbifoldSignature, EpimorphismSpec]:
    """Parse the action JSON object; negative residues are reduced mod n."""
    try:
        n = int(obj["order"])
        r = int(obj.get("quotient_genus", 0))
        singular = obj.get("singular", [])
        indices = tuple(int(pt["index"]) for pt in singular)
        images = tuple(int(pt["image"]) for pt in singular)
        alpha = tuple(int(a) for a in obj.get("alpha", [0] * r))
        beta = tuple(int(b) for b in obj.get("beta", [0] * r))
    except (KeyError, TypeError, ValueError) as exc:
        raise PreconditionViolated(f"malformed action object: {exc!r}") from exc
    if len(alpha) != r or len(beta) != r:
        raise ShapeMismatch(f"quotient_genus {r} needs {r} alpha and beta images")
    sig = OrbifoldSignature(r, indices)
    return sig, EpimorphismSpec.make(n, alpha, beta, images)
