"""Deciding extendability of cyclic actions over the 3-sphere.

A Z_n action with quotient orbifold (r; n_1..n_s) and finitely-injective
epimorphism images c_1..c_s extends over S^3 exactly when

(a) the cone indices take at most two values, and two values are coprime;
(b) points of equal index carry images that are equal or mutually inverse;
(c) the cone points split into pairs whose images are mutually inverse.

Up to conjugacy an extendable action is then pinned down by the tuple
(n, p, q, m, r, s1, s2) of :class:`StandardFormClass`.
"""
from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import asdict, dataclass, field
from math import gcd
from typing import Optional

from .errors import (
    InternalInvariantViolation,
    InvalidClass,
    InvalidSpec,
    NotExtendable,
    UncappedInfiniteFamily,
)
from .orbifold import EpimorphismSpec, OrbifoldSignature, graph_beta1, quotient_genus, validate


@dataclass(frozen=True, order=True)
class StandardFormClass:
    n: int
    p: int
    q: int
    m: int
    r: int
    s1: int
    s2: int

    @property
    def genus(self) -> int:
        # Riemann-Hurwitz rearranged: g - 1 = n(r - 1) + s1 mq(p - 1) + s2 mp(q - 1)
        m, p, q = self.m, self.p, self.q
        return 1 + self.n * (self.r - 1) + self.s1 * m * q * (p - 1) + self.s2 * m * p * (q - 1)

    def problems(self) -> list[str]:
        n, p, q, m, r, s1, s2 = self.astuple()
        out = []
        if min(self.astuple()) < 0:
            out.append("entries must be nonnegative")
            return out
        if n < 2:
            out.append("n must be >= 2")
        if p < 1 or q < 1 or m < 1:
            out.append("p, q, m must be positive")
            return out
        if gcd(p, q) != 1:
            out.append(f"gcd(p, q) = {gcd(p, q)} != 1")
        if (p == 1) != (s1 == 0):
            out.append("p = 1 exactly when s1 = 0")
        if (q == 1) != (s2 == 0):
            out.append("q = 1 exactly when s2 = 0")
        if not (p < q or p == q == 1):
            out.append("canonical order needs p < q (or p = q = 1)")
        if n != m * p * q:
            out.append(f"n = {n} != mpq = {m * p * q}")
        if r == 0 and m != 1:
            out.append("r = 0 forces m = 1")
        if self.genus < 0:
            out.append(f"Riemann-Hurwitz gives negative genus {self.genus}")
        return out

    def check(self):
        probs = self.problems()
        if probs:
            raise InvalidClass(f"{self.astuple()}: " + "; ".join(probs))
        return self

    def astuple(self) -> tuple[int, ...]:
        return (self.n, self.p, self.q, self.m, self.r, self.s1, self.s2)

    def signature(self) -> OrbifoldSignature:
        indices = (self.p,) * (2 * self.s1) + (self.q,) * (2 * self.s2)
        return OrbifoldSignature(self.r, indices)

    def to_json(self) -> dict:
        return dict(asdict(self), genus=self.genus)

    def __str__(self):
        return "({})".format(",".join(map(str, self.astuple())))


@dataclass
class ConditionResult:
    passed: bool
    witness: str

    def __bool__(self):
        return self.passed


@dataclass
class ExtendabilityVerdict:
    extendable: bool
    condition_a: ConditionResult
    condition_b: ConditionResult
    condition_c: ConditionResult
    pairing: Optional[list[tuple[int, int]]] = None

    @property
    def failed(self) -> list[str]:
        return [name for name, c in (("a", self.condition_a), ("b", self.condition_b),
                                     ("c", self.condition_c)) if not c.passed]

    def summary(self) -> str:
        if self.extendable:
            return "extendable"
        fails = self.failed
        word = "condition" if len(fails) == 1 else "conditions"
        return f"not extendable: {word} {', '.join(f'({f})' for f in fails)} fails"

    def to_json(self) -> dict:
        cond = lambda c: {"passed": c.passed, "witness": c.witness}  # noqa: E731
        return {
            "extendable": self.extendable,
            "condition_a": cond(self.condition_a),
            "condition_b": cond(self.condition_b),
            "condition_c": cond(self.condition_c),
            "pairing": None if self.pairing is None else [list(p) for p in self.pairing],
        }


def inverse_pairing(n: int, values) -> Optional[list[tuple[int, int]]]:
    """Pair up positions (1-based) so each pair's residues sum to 0 mod n.

    Greedy: the lowest unpaired position takes the lowest unpaired partner
    holding its negative.  Residues only pair within {v, -v} classes, so the
    greedy pass fails exactly when some class is unbalanced.
    """
    values = [v % n for v in values]
    used = [False] * len(values)
    pairs = []
    for i, v in enumerate(values):
        if used[i]:
            continue
        used[i] = True
        want = -v % n
        for j in range(i + 1, len(values)):
            if not used[j] and values[j] == want:
                used[j] = True
                pairs.append((i + 1, j + 1))
                break
        else:
            return None
    return pairs


def _condition_a(indices) -> ConditionResult:
    distinct = sorted(set(indices))
    if not distinct:
        return ConditionResult(True, "no cone points")
    if len(distinct) > 2:
        return ConditionResult(False, f"{len(distinct)} distinct cone indices {distinct}")
    if len(distinct) == 2 and gcd(*distinct) != 1:
        p, q = distinct
        return ConditionResult(False, f"cone indices {p} and {q} share the factor {gcd(p, q)}")
    return ConditionResult(True, f"cone indices lie in {distinct}")


def _condition_b(n, indices, gamma) -> ConditionResult:
    by_index: dict[int, set[int]] = {}
    for k, c in zip(indices, gamma):
        by_index.setdefault(k, set()).add(c)
    for k in sorted(by_index):
        vals = by_index[k]
        x = min(vals)
        stray = sorted(v for v in vals if v not in (x, -x % n))
        if stray:
            return ConditionResult(
                False, f"index-{k} images {sorted(vals)} are not within {{x, -x}} for one x")
    return ConditionResult(True, "equal-index images agree up to inversion")


def _unbalanced(n, gamma) -> str:
    counts = Counter(gamma)
    for v in sorted(counts):
        neg = -v % n
        if v == neg and counts[v] % 2:
            return f"self-inverse image {v} occurs an odd number ({counts[v]}) of times"
        if v != neg and counts[v] != counts[neg]:
            return f"image {v} occurs {counts[v]} times, its inverse {neg} {counts[neg]} times"
    raise InternalInvariantViolation("pairing failed on a balanced multiset")


def check_extendable(sig: OrbifoldSignature, spec: EpimorphismSpec) -> ExtendabilityVerdict:
    report = validate(sig, spec)
    if not report.valid:
        raise InvalidSpec("; ".join(report.details))
    n = spec.order
    cond_a = _condition_a(sig.singular_indices)
    cond_b = _condition_b(n, sig.singular_indices, spec.gamma)
    pairing = inverse_pairing(n, spec.gamma)
    if pairing is None:
        cond_c = ConditionResult(False, _unbalanced(n, spec.gamma))
    else:
        cond_c = ConditionResult(True, f"inverse pairing {pairing}")
    return ExtendabilityVerdict(
        extendable=bool(cond_a and cond_b and cond_c),
        condition_a=cond_a, condition_b=cond_b, condition_c=cond_c,
        pairing=pairing)


def canonical_class(sig: OrbifoldSignature, spec: EpimorphismSpec) -> StandardFormClass:
    verdict = check_extendable(sig, spec)
    if not verdict.extendable:
        raise NotExtendable(verdict.summary())
    counts = Counter(sig.singular_indices)
    distinct = sorted(counts)
    if not distinct:
        p = q = 1
    elif len(distinct) == 1:
        p, q = 1, distinct[0]
    else:
        p, q = distinct
    s1 = counts[p] // 2 if p > 1 else 0
    s2 = counts[q] // 2 if q > 1 else 0
    n = spec.order
    cls = StandardFormClass(n, p, q, n // (p * q), sig.r, s1, s2)
    probs = cls.problems()
    if probs or cls.genus != quotient_genus(sig, n):
        raise InternalInvariantViolation(f"extracted class {cls} is inconsistent: {probs}")
    return cls


def standard_epimorphism(cls: StandardFormClass):
    """The normal-form action of ``cls``: alpha = (1, 0, ..., 0), beta = 0 and
    gamma = (mq x s1, -mq x s1, mp x s2, -mp x s2)."""
    cls.check()
    n, p, q, m, r, s1, s2 = cls.astuple()
    alpha = (1,) + (0,) * (r - 1) if r else ()
    gamma = ((m * q,) * s1 + (-m * q,) * s1 + (m * p,) * s2 + (-m * p,) * s2)
    spec = EpimorphismSpec.make(n, alpha, (0,) * r, gamma)
    return cls.signature(), spec


def atlas_order_cap(g: int, max_order: Optional[int] = None) -> int:
    if g < 1:
        raise InvalidClass(f"genus must be >= 1, got {g}")
    if g == 1:
        if max_order is None:
            raise UncappedInfiniteFamily(
                "genus 1 carries free Z_n actions on the torus for every n; pass max_order")
        return max_order
    # Hurwitz: |G| <= 84(g - 1) for any group acting on a genus g >= 2 surface
    cap = 84 * (g - 1)
    return cap if max_order is None else min(cap, max_order)


def _coprime_pairs(n):
    """(p, q) with pq | n, gcd(p, q) = 1 and p < q, plus (1, 1)."""
    divs = [d for d in range(1, n + 1) if n % d == 0]
    out = [(1, 1)]
    for p in divs:
        for q in divs:
            if p < q and (n // p) % q == 0 and gcd(p, q) == 1:
                out.append((p, q))
    return out


def enumerate_atlas(g: int, max_order: Optional[int] = None,
                    free_only: bool = False) -> list[StandardFormClass]:
    """All extendable conjugacy classes of cyclic actions on the genus-g surface.

    Uses g - 1 = n(r - 1) + s1 mq(p - 1) + s2 mp(q - 1) to solve for the cone
    counts once n, p, q, r are fixed.
    """
    cap = atlas_order_cap(g, max_order)
    found = []
    for n in range(2, cap + 1):
        for p, q in _coprime_pairs(n):
            if free_only and (p, q) != (1, 1):
                continue
            m = n // (p * q)
            r_min = 0 if (m == 1 and p * q > 1) else 1
            r = r_min
            while n * (r - 1) <= g - 1:
                rem = g - 1 - n * (r - 1)
                a_step, b_step = m * q * (p - 1), m * p * (q - 1)
                if p == q == 1:
                    if rem == 0:
                        found.append(StandardFormClass(n, 1, 1, m, r, 0, 0))
                elif p == 1:
                    if rem > 0 and rem % b_step == 0:
                        found.append(StandardFormClass(n, 1, q, m, r, 0, rem // b_step))
                else:
                    s1 = 1
                    while s1 * a_step + b_step <= rem:
                        left = rem - s1 * a_step
                        if left % b_step == 0:
                            found.append(StandardFormClass(n, p, q, m, r, s1, left // b_step))
                        s1 += 1
                r += 1
    found.sort()
    for cls in found:
        if cls.problems() or cls.genus != g:
            raise InternalInvariantViolation(f"atlas produced bad class {cls}")
    return found


ATLAS_COLUMNS = ("genus", "n", "p", "q", "m", "r", "s1", "s2")


def atlas_csv(classes) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(ATLAS_COLUMNS)
    for cls in classes:
        writer.writerow([cls.genus, *cls.astuple()])
    return buf.getvalue()


@dataclass
class EmbeddingRecipe:
    """Orbit data of the invariant graph/surface for the model rotation.

    ``rotation`` holds the denominators (mq, mp): the model isometry rotates
    the two complex coordinates of S^3 by 2pi/mq and 2pi/mp.
    """

    cls: StandardFormClass
    rotation: tuple[int, int]
    vertex_orbits: list[tuple[int, int]] = field(default_factory=list)
    edge_orbits: list[tuple[int, int]] = field(default_factory=list)
    added_handles_per_point: int = 0
    graph_beta1: Optional[int] = None

    @property
    def vertices(self) -> int:
        return sum(c * size for c, size in self.vertex_orbits)

    @property
    def edges(self) -> int:
        return sum(c * size for c, size in self.edge_orbits)

    def to_json(self) -> dict:
        return {
            "class": self.cls.to_json(),
            "rotation": list(self.rotation),
            "vertex_orbits": [list(v) for v in self.vertex_orbits],
            "edge_orbits": [list(e) for e in self.edge_orbits],
            "added_handles_per_point": self.added_handles_per_point,
            "graph_beta1": self.graph_beta1,
        }


def embedding_recipe(cls: StandardFormClass) -> EmbeddingRecipe:
    cls.check()
    n, p, q, m, r, s1, s2 = cls.astuple()
    rotation = (m * q, m * p)
    if r == 0:
        # centre point orbit is free; the axis points (z1, 0) and (0, z2)
        # have orbits of size q and p; every edge orbit is free
        verts = [(c, size) for c, size in ((1, p * q), (s1, q), (s2, p)) if c]
        edges = [(s1 + s2, p * q)]
        recipe = EmbeddingRecipe(cls, rotation, verts, edges, 0)
        recipe.graph_beta1 = graph_beta1(recipe.vertices, recipe.edges, 1)
        if recipe.graph_beta1 != cls.genus:
            raise InternalInvariantViolation(
                f"graph of {cls} has beta1 {recipe.graph_beta1}, genus is {cls.genus}")
        return recipe
    verts = [(c, size) for c, size in ((s1, m * q), (s2, m * p), (s1 + s2, n)) if c]
    edges = [(c, n) for c in (s1, s2) if c]
    return EmbeddingRecipe(cls, rotation, verts, edges, r - 1)
