"""Conjugacy of extendable cyclic subgroups and of their generators."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .arith import totient, units
from .errors import CriterionNotSubgroup, NotAUnit, NotExtendable
from .extendability import StandardFormClass, check_extendable
from .orbifold import EpimorphismSpec, OrbifoldSignature


@dataclass(frozen=True)
class GeneratorUnit:
    """The automorphism h -> h^u of Z_modulus."""

    modulus: int
    unit: int

    def __post_init__(self):
        if gcd(self.unit, self.modulus) != 1:
            raise NotAUnit(f"{self.unit} is not a unit mod {self.modulus}")


def subgroups_conjugate(a: StandardFormClass, b: StandardFormClass) -> bool:
    """Extendable subgroups are conjugate iff isomorphic with homeomorphic quotients,
    which for canonical classes is plain equality."""
    for cls in (a, b):
        if cls.problems():
            raise NotExtendable(f"{cls} is not a canonical extendable class")
    return a == b


def _require_extendable(sig, spec):
    verdict = check_extendable(sig, spec)
    if not verdict.extendable:
        raise NotExtendable(verdict.summary())


def _fixes_up_to_sign(n, u, gamma, uniform):
    if uniform:
        return (all(u * c % n == c for c in gamma)
                or all(u * c % n == -c % n for c in gamma))
    return all(u * c % n in (c, -c % n) for c in gamma)


def generators_conjugate(sig: OrbifoldSignature, spec: EpimorphismSpec, u,
                         uniform: bool = False) -> bool:
    """Whether h and h^u are conjugate generators of the subgroup.

    The default reading lets each gamma image be fixed or inverted
    independently; ``uniform=True`` demands one sign for all of them.
    """
    _require_extendable(sig, spec)
    n = spec.order
    if isinstance(u, GeneratorUnit):
        if u.modulus != n:
            raise NotAUnit(f"unit is for Z_{u.modulus}, action is on Z_{n}")
        u = u.unit
    if gcd(u, n) != 1:
        raise NotAUnit(f"{u} is not a unit mod {n}")
    return _fixes_up_to_sign(n, u % n, spec.gamma, uniform)


def criterion_units(sig, spec, uniform: bool = False) -> list[int]:
    _require_extendable(sig, spec)
    n = spec.order
    return [u for u in units(n) if _fixes_up_to_sign(n, u, spec.gamma, uniform)]


def _is_subgroup(n, subset) -> bool:
    members = set(subset)
    return 1 % n in members and all(x * y % n in members for x in members for y in members)


def count_generator_classes(sig: OrbifoldSignature, spec: EpimorphismSpec,
                            uniform: bool = False) -> int:
    """Number of conjugacy classes among the generators of the subgroup."""
    good = criterion_units(sig, spec, uniform)
    n = spec.order
    if not _is_subgroup(n, good):
        raise CriterionNotSubgroup(f"criterion units {good} are not closed mod {n}")
    phi = totient(n)
    if phi % len(good):
        raise CriterionNotSubgroup(f"|U| = {len(good)} does not divide phi({n}) = {phi}")
    return phi // len(good)


def readings_disagree(sig, spec) -> list[int]:
    """Units accepted by the per-point reading but not the uniform-sign one."""
    strict = set(criterion_units(sig, spec, uniform=True))
    return [u for u in criterion_units(sig, spec) if u not in strict]


def _presentation_sorted(sig, spec):
    order = sorted(range(sig.s), key=lambda j: sig.singular_indices[j])
    sig2 = OrbifoldSignature(sig.r, tuple(sig.singular_indices[j] for j in order))
    return sig2, spec.replace(gamma=tuple(spec.gamma[j] for j in order))


def orbit_conjugate(sig_a, spec_a, sig_b, spec_b, depth: int = 12,
                    caps=None) -> Optional[bool]:
    """Semi-decision for conjugacy of two (possibly non-extendable) actions.

    Returns False when the groups or quotient orbifolds differ, True when
    some automorphism u of Z_n carries ``spec_a`` into the move-orbit of
    ``spec_b`` within ``depth`` moves, and None ("unknown") otherwise.
    """
    from .oracle import bfs_orbit

    if spec_a.order != spec_b.order or sig_a.canonical() != sig_b.canonical():
        return False
    sig_a, spec_a = _presentation_sorted(sig_a, spec_a)
    sig_b, spec_b = _presentation_sorted(sig_b, spec_b)
    n = spec_a.order
    for u in units(n):
        start = EpimorphismSpec.make(n, [u * a for a in spec_a.alpha],
                                     [u * b for b in spec_a.beta],
                                     [u * c for c in spec_a.gamma])
        if sorted(start.gamma) != sorted(spec_b.gamma):
            continue
        if bfs_orbit(sig_a, start, spec_b, depth, caps).reachable:
            return True
    return None
