"""Brute-force oracles and the oracle/fast-path agreement suites.

The helpers in the first half deliberately avoid the library's arithmetic
(no gcd, no extended Euclid, no closed-form orders): orders come from
repeated addition, generated subgroups from closure under addition, and
matchings from exhaustive recursion.  Only the move engine is shared, since
the breadth-first search explores the graph that ``apply_move`` defines.
"""
from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import BudgetExceeded, CyclextError, PreconditionViolated
from .orbifold import EpimorphismSpec, OrbifoldSignature


@dataclass
class OracleCaps:
    max_order: int = 30
    tuple_budget: int = 2_000_000
    max_depth: int = 64
    state_budget: int = 500_000
    max_matching: int = 10
    max_unit_scan: int = 10 ** 4

    @classmethod
    def parse(cls, text: str) -> "OracleCaps":
        """Parse ``key=value,key=value`` overrides."""
        caps = cls()
        for part in filter(None, (p.strip() for p in text.split(","))):
            key, _, value = part.partition("=")
            key = key.strip().replace("-", "_")
            if not hasattr(caps, key):
                raise PreconditionViolated(f"unknown cap {key!r}")
            try:
                setattr(caps, key, int(value))
            except ValueError as exc:
                raise PreconditionViolated(f"cap {key!r} needs an integer") from exc
        return caps


DEFAULT_CAPS = OracleCaps()


# -- naive arithmetic ---------------------------------------------------------

def naive_order(n: int, c: int) -> int:
    k, acc = 1, c % n
    while acc:
        acc = (acc + c) % n
        k += 1
    return k


def naive_span(n: int, gens) -> frozenset:
    """Subgroup of Z_n generated by ``gens``, by closure under addition."""
    seen = {0}
    frontier = [0]
    gens = [g % n for g in gens]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = (x + g) % n
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return frozenset(seen)


def naive_is_valid(sig: OrbifoldSignature, n: int, alpha, beta, gamma) -> bool:
    if sum(gamma) % n:
        return False
    if any(naive_order(n, c) != k for c, k in zip(gamma, sig.singular_indices)):
        return False
    return len(naive_span(n, list(alpha) + list(beta) + list(gamma))) == n


def naive_coprime(a: int, b: int) -> bool:
    return not any(a % d == 0 and b % d == 0 for d in range(2, min(a, b) + 1))


# -- exhaustive searches ------------------------------------------------------

def iter_epimorphisms(sig: OrbifoldSignature, n: int, caps: OracleCaps = DEFAULT_CAPS):
    """Lazily scan every tuple whose gamma entries have the prescribed orders."""
    if n > caps.max_order:
        raise BudgetExceeded(f"n = {n} exceeds the oracle cap {caps.max_order}")
    r = sig.r
    choices = [[c for c in range(n) if naive_order(n, c) == k] for k in sig.singular_indices]
    size = n ** (2 * r)
    for ch in choices:
        size *= len(ch)
    if size > caps.tuple_budget:
        raise BudgetExceeded(f"{size} candidate tuples exceed budget {caps.tuple_budget}")
    for gamma in itertools.product(*choices):
        if sum(gamma) % n:
            continue
        for ab in itertools.product(range(n), repeat=2 * r):
            if len(naive_span(n, ab + gamma)) == n:
                yield EpimorphismSpec(n, ab[:r], ab[r:], gamma)


def brute_force_epimorphisms(sig: OrbifoldSignature, n: int,
                             caps: OracleCaps = DEFAULT_CAPS) -> list[EpimorphismSpec]:
    """Every finitely-injective epimorphism from the orbifold group onto Z_n."""
    return list(iter_epimorphisms(sig, n, caps))


def brute_force_matching(n: int, values,
                         caps: OracleCaps = DEFAULT_CAPS) -> Optional[list[tuple[int, int]]]:
    """First perfect matching (1-based positions) with pair sums 0 mod n, by recursion."""
    values = [v % n for v in values]
    if len(values) > caps.max_matching:
        raise BudgetExceeded(f"{len(values)} points exceed the matching cap {caps.max_matching}")

    def search(free):
        if not free:
            return []
        first, rest = free[0], free[1:]
        for k, other in enumerate(rest):
            if (values[first] + values[other]) % n == 0:
                tail = search(rest[:k] + rest[k + 1:])
                if tail is not None:
                    return [(first + 1, other + 1)] + tail
        return None

    if len(values) % 2:
        return None
    return search(list(range(len(values))))


def matching_pattern(values, pairing) -> Optional[list[tuple[int, int]]]:
    """Canonical value pattern of a pairing, for comparing different witnesses."""
    if pairing is None:
        return None
    return sorted(tuple(sorted((values[i - 1], values[j - 1]))) for i, j in pairing)


def brute_force_units(n: int, predicate: Callable[[int], bool] = lambda u: True,
                      caps: OracleCaps = DEFAULT_CAPS) -> list[int]:
    if n > caps.max_unit_scan:
        raise BudgetExceeded(f"unit scan of Z_{n} exceeds cap {caps.max_unit_scan}")
    if n == 1:
        return [0] if predicate(0) else []
    return [u for u in range(1, n)
            if any(u * v % n == 1 for v in range(1, n)) and predicate(u)]


def brute_force_extendable(sig: OrbifoldSignature, spec: EpimorphismSpec,
                           caps: OracleCaps = DEFAULT_CAPS) -> bool:
    """The three extendability conditions checked pairwise and by exhaustive matching."""
    n = spec.order
    distinct = sorted(set(sig.singular_indices))
    if len(distinct) > 2 or (len(distinct) == 2 and not naive_coprime(*distinct)):
        return False
    pts = list(zip(sig.singular_indices, spec.gamma))
    for (k1, c1), (k2, c2) in itertools.combinations(pts, 2):
        if k1 == k2 and c1 != c2 and (c1 + c2) % n:
            return False
    return brute_force_matching(n, spec.gamma, caps) is not None


@dataclass
class BfsResult:
    reachable: bool
    depth: Optional[int]
    visited: int

    def __str__(self):
        return f"Reachable at depth {self.depth}" if self.reachable else "NotWithinDepth"


def _moves():
    from . import moves
    return moves


def bfs_orbit(sig: OrbifoldSignature, start: EpimorphismSpec, target: EpimorphismSpec,
              depth: int, caps: Optional[OracleCaps] = None) -> BfsResult:
    """Breadth-first search over single moves from ``start`` looking for ``target``."""
    caps = caps or DEFAULT_CAPS
    if depth > caps.max_depth:
        raise BudgetExceeded(f"depth {depth} exceeds cap {caps.max_depth}")
    mv = _moves()
    if start == target:
        return BfsResult(True, 0, 1)
    if sorted(start.gamma) != sorted(target.gamma) or start.order != target.order:
        return BfsResult(False, None, 1)
    seen = {start}
    layer = [start]
    for d in range(1, depth + 1):
        nxt = []
        for spec in layer:
            for move in mv.applicable_moves(sig, spec):
                new = mv.apply_move(sig, spec, move)
                if new in seen:
                    continue
                if new == target:
                    return BfsResult(True, d, len(seen) + 1)
                seen.add(new)
                nxt.append(new)
                if len(seen) > caps.state_budget:
                    raise BudgetExceeded(f"BFS visited more than {caps.state_budget} states")
        if not nxt:
            break
        layer = nxt
    return BfsResult(False, None, len(seen))


def move_component(sig: OrbifoldSignature, start: EpimorphismSpec, swaps: bool = False,
                   caps: Optional[OracleCaps] = None) -> dict:
    """Full connected component of ``start`` in the move graph, with BFS distances."""
    caps = caps or DEFAULT_CAPS
    mv = _moves()
    dist = {start: 0}
    queue = deque([start])
    while queue:
        spec = queue.popleft()
        for move in mv.applicable_moves(sig, spec):
            if not swaps and isinstance(move, mv.SwapPoints):
                continue
            new = mv.apply_move(sig, spec, move)
            if new not in dist:
                dist[new] = dist[spec] + 1
                if len(dist) > caps.state_budget:
                    raise BudgetExceeded(f"component exceeds {caps.state_budget} states")
                queue.append(new)
    return dist


# -- enumeration of small cases ----------------------------------------------

def naive_divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def signatures(n: int, r_values, max_s: int):
    """Signatures with cone indices sorted ascending, each index dividing n."""
    ks = [d for d in naive_divisors(n) if d >= 2]
    for r in r_values:
        for s in range(max_s + 1):
            for idx in itertools.combinations_with_replacement(ks, s):
                yield OrbifoldSignature(r, idx)


def valid_gammas(sig: OrbifoldSignature, n: int):
    """Gamma tuples satisfying the relation and exact orders (surjectivity not required)."""
    choices = [[c for c in range(n) if naive_order(n, c) == k] for k in sig.singular_indices]
    for g in itertools.product(*choices):
        if sum(g) % n == 0:
            yield g


# -- agreement suites ---------------------------------------------------------

@dataclass
class SuiteReport:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    sampled: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, item):
        if len(self.failures) < 20:
            self.failures.append(item)
        else:
            self.failures[-1] = "... (more failures truncated)"

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" (sampled strata: {'; '.join(self.sampled)})" if self.sampled else ""
        if not self.passed:
            extra += f" first failure: {self.failures[0]}"
        return f"[{status}] {self.name}: {self.checked} cases{extra}"


def suite_alignment(max_npq: int = 200) -> SuiteReport:
    """Constructive alignment unit vs. scan over all units, for mpq <= max_npq."""
    from .arith import align_automorphism

    rep = SuiteReport(f"alignment automorphism vs unit scan (mpq <= {max_npq})")
    for total in range(1, max_npq + 1):
        for p in naive_divisors(total):
            for q in naive_divisors(total // p):
                if not naive_coprime(p, q):
                    continue
                m = total // (p * q)
                n = total
                a_list = [a for a in range(n) if naive_order(n, a) == p]
                b_list = [b for b in range(n) if naive_order(n, b) == q]
                scan_units = brute_force_units(n) if n > 1 else [1]
                for a in a_list:
                    for b in b_list:
                        rep.checked += 1
                        ok_scan = [u for u in scan_units
                                   if (u * a - m * q) % n == 0 and (u * b - m * p) % n == 0]
                        try:
                            u = align_automorphism(m, p, q, a, b)
                        except CyclextError as exc:
                            rep.fail((m, p, q, a, b, repr(exc)))
                            continue
                        unit_ok = n == 1 or u in scan_units
                        congr = (u * a - m * q) % n == 0 and (u * b - m * p) % n == 0
                        if not ok_scan or not unit_ok or not congr:
                            rep.fail((m, p, q, a, b, u, ok_scan[:5]))
    return rep


def suite_matching(max_n: int = 12, max_s: int = 6) -> SuiteReport:
    """Condition (c) of the fast path vs. exhaustive matching on all valid gamma data."""
    from .extendability import check_extendable, inverse_pairing

    rep = SuiteReport(f"condition (c) vs brute-force matching (n <= {max_n}, s <= {max_s})")
    for n in range(2, max_n + 1):
        for s in range(max_s + 1):
            for gamma in itertools.product(range(1, n), repeat=s):
                if sum(gamma) % n:
                    continue
                rep.checked += 1
                # one valid spec per gamma tuple: r = 0 if gamma generates, else r = 1
                indices = tuple(naive_order(n, c) for c in gamma)
                r = 0 if len(naive_span(n, gamma)) == n else 1
                sig = OrbifoldSignature(r, indices)
                spec = EpimorphismSpec(n, (1,) * r, (0,) * r, gamma)
                verdict = check_extendable(sig, spec)
                brute = brute_force_matching(n, gamma)
                fast = inverse_pairing(n, gamma)
                if (verdict.condition_c.passed != (brute is not None)
                        or matching_pattern(gamma, fast) != matching_pattern(gamma, brute)):
                    rep.fail((n, gamma, fast, brute))
    return rep


def suite_validate(max_n: int = 30, max_s: int = 6, samples: int = 20000,
                   seed: int = 0) -> SuiteReport:
    """validate() vs. the naive validity test on seeded random inputs."""
    from .orbifold import validate

    rng = random.Random(seed)
    rep = SuiteReport(f"validate vs naive validity ({samples} samples, n <= {max_n})")
    for _ in range(samples):
        n = rng.randint(2, max_n)
        r = rng.randint(0, 2)
        s = rng.randint(0, max_s)
        ks = [d for d in naive_divisors(n) if d >= 2]
        indices = tuple(rng.choice(ks) for _ in range(s))
        sig = OrbifoldSignature(r, indices)
        alpha = tuple(rng.randrange(n) for _ in range(r))
        beta = tuple(rng.randrange(n) for _ in range(r))
        if rng.random() < 0.5:
            # bias toward exact orders so that valid specs are well represented
            gamma = tuple(rng.choice([c for c in range(n) if naive_order(n, c) == k])
                          for k in indices)
            if gamma and rng.random() < 0.7:
                fix = [c for c in range(n)
                       if naive_order(n, c) == indices[-1]
                       and (sum(gamma[:-1]) + c) % n == 0]
                if fix:
                    gamma = gamma[:-1] + (fix[0],)
        else:
            gamma = tuple(rng.randrange(n) for _ in range(s))
        spec = EpimorphismSpec(n, alpha, beta, gamma)
        rep.checked += 1
        if validate(sig, spec).valid != naive_is_valid(sig, n, alpha, beta, gamma):
            rep.fail((str(sig), spec))
    return rep


def _valid_specs(sig, n):
    r = sig.r
    for gamma in valid_gammas(sig, n):
        span = naive_span(n, gamma)
        for ab in itertools.product(range(n), repeat=2 * r):
            if len(span) == n or len(naive_span(n, ab + gamma)) == n:
                yield EpimorphismSpec(n, ab[:r], ab[r:], gamma)


def spec_strata(max_n, r_values, max_s, rep, exhaustive_limit=20_000, sample=1500,
                seed=0, exhaustive=False):
    """Yield ``(sig, spec)`` over all valid specs with n <= max_n, r in r_values, s <= max_s.

    Strata (n, r) whose candidate count (gamma tuples x n^2r) is at most
    ``exhaustive_limit`` are enumerated completely; larger strata contribute
    ``sample`` specs drawn with a seeded RNG unless ``exhaustive`` is set.
    The report notes which strata were sampled.
    """
    rng = random.Random(seed)
    for n in range(2, max_n + 1):
        for r in r_values:
            sigs = list(signatures(n, [r], max_s))
            pool = [(sig, g) for sig in sigs for g in valid_gammas(sig, n)]
            size = len(pool) * n ** (2 * r)
            if exhaustive or size <= exhaustive_limit:
                for sig in sigs:
                    for spec in _valid_specs(sig, n):
                        yield sig, spec
                continue
            rep.sampled.append(f"n={n},r={r}: {sample} of <= {size}")
            drawn = 0
            while drawn < sample:
                sig, gamma = rng.choice(pool)
                ab = tuple(rng.randrange(n) for _ in range(2 * r))
                if len(naive_span(n, ab + gamma)) == n:
                    drawn += 1
                    yield sig, EpimorphismSpec(n, ab[:r], ab[r:], gamma)


def suite_moves(max_n: int = 8, max_r: int = 2, max_s: int = 4, **strata) -> SuiteReport:
    """Every applicable move on every generated valid spec keeps validity and gamma."""
    mv = _moves()
    rep = SuiteReport(f"move invariance (n <= {max_n}, r <= {max_r}, s <= {max_s})")
    for sig, spec in spec_strata(max_n, range(max_r + 1), max_s, rep, **strata):
        n = spec.order
        for move in mv.applicable_moves(sig, spec):
            rep.checked += 1
            new = mv.apply_move(sig, spec, move)
            if sorted(new.gamma) != sorted(spec.gamma):
                rep.fail((str(sig), spec, move, "gamma multiset"))
            elif not isinstance(move, mv.SwapPoints) and new.gamma != spec.gamma:
                rep.fail((str(sig), spec, move, "gamma moved"))
            elif not naive_is_valid(sig, n, new.alpha, new.beta, new.gamma):
                rep.fail((str(sig), spec, move, "validity"))
    return rep


def naive_ab_component(n: int, r: int, gamma_values, start):
    """BFS component of ``start = alpha + beta`` under the move rules, written out
    directly on integer tuples (independent of ``apply_move``).

    Swaps are omitted: they fix alpha and beta.  Point slides only see the set
    of gamma values.
    """
    vals = sorted(set(gamma_values))
    seen = {start}
    queue = deque([start])
    while queue:
        st = queue.popleft()
        a, b = st[:r], st[r:]
        out = []
        for i in range(r):
            for sg in (1, -1):
                for c in vals:
                    out.append(a + b[:i] + ((b[i] + sg * c) % n,) + b[i + 1:])
                    out.append(a[:i] + ((a[i] + sg * c) % n,) + a[i + 1:] + b)
                out.append(a + b[:i] + ((b[i] + sg * a[i]) % n,) + b[i + 1:])
                out.append(a[:i] + ((a[i] + sg * b[i]) % n,) + a[i + 1:] + b)
        if not any(a):
            for k in range(r):
                for i in range(r):
                    if k != i:
                        for sg in (1, -1):
                            out.append(a + b[:i] + ((b[i] + sg * b[k]) % n,) + b[i + 1:])
        for nb in out:
            if nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return seen


def suite_normalize(max_n: int = 8, r_values=(1, 2), max_s: int = 4, **strata) -> SuiteReport:
    """normalize() vs. BFS reachability over the move graph.

    For each set of gamma values one BFS component is grown from the normal
    form (alpha = (1, 0..), beta = 0).  The move graph is undirected, so
    every valid spec must lie in that component, and normalize must land on
    the same normal form by a script that replays exactly.
    """
    mv = _moves()
    rep = SuiteReport(f"normalize vs BFS reachability (n <= {max_n}, r in {tuple(r_values)}, "
                      f"s <= {max_s})")
    components: dict = {}
    for sig, spec in spec_strata(max_n, r_values, max_s, rep, **strata):
        n, r = spec.order, sig.r
        rep.checked += 1
        target = EpimorphismSpec(n, (1,) + (0,) * (r - 1), (0,) * r, spec.gamma)
        key = (n, r, frozenset(spec.gamma))
        if key not in components:
            components[key] = naive_ab_component(n, r, spec.gamma, target.alpha + target.beta)
        if spec.alpha + spec.beta not in components[key]:
            rep.fail((str(sig), spec, "not BFS-reachable"))
            continue
        try:
            script, out = mv.normalize(sig, spec)
        except CyclextError as exc:
            rep.fail((str(sig), spec, repr(exc)))
            continue
        if out != target or mv.apply_script(sig, spec, script) != out:
            rep.fail((str(sig), spec, "normalize output/replay mismatch"))
    return rep


def suite_atlas(max_genus: int = 6, caps: Optional[OracleCaps] = None) -> SuiteReport:
    """Atlas vs. exhaustive sweep over every signature with n <= 4g + 2.

    For each signature of the right genus the sweep enumerates all
    epimorphisms by brute force, keeps the extendable ones, and reads off
    the class tuple directly from the signature; the resulting set must
    coincide with the atlas.
    """
    from .extendability import enumerate_atlas

    rep = SuiteReport(f"atlas completeness vs exhaustive sweep (g <= {max_genus})")
    # hyperelliptic signatures carry 2g + 2 cone points
    caps = caps or OracleCaps(max_matching=2 * max_genus + 2)
    for g in range(1, max_genus + 1):
        max_n = 4 * g + 2
        atlas = {c.astuple() for c in enumerate_atlas(g, max_order=max_n)}
        swept = set()
        for n in range(2, max_n + 1):
            for sig in _signatures_of_genus(n, g):
                rep.checked += 1
                found = next((spec for spec in iter_epimorphisms(sig, n, caps)
                              if brute_force_extendable(sig, spec, caps)), None)
                if found is not None:
                    swept.add(_class_from_signature(sig, n))
        for missing in sorted(swept - atlas):
            rep.fail((g, "missing from atlas", missing))
        for extra in sorted(atlas - swept):
            rep.fail((g, "not found by sweep", extra))
    return rep


def _signatures_of_genus(n: int, g: int):
    """Signatures (r; sorted indices dividing n) whose n-fold cover has genus g.

    Uses 2g - 2 = n(2r - 2) + sum(n - n/k), so each cone point adds at least
    n/2 and the search is finite.
    """
    ks = [d for d in naive_divisors(n) if d >= 2]
    target = 2 * g - 2
    r = 0
    while n * (2 * r - 2) <= target:
        base = n * (2 * r - 2)
        budget = target - base

        def extend(start, left, acc):
            if left == 0:
                yield tuple(acc)
            for i in range(start, len(ks)):
                cost = n - n // ks[i]
                if cost <= left:
                    yield from extend(i, left - cost, acc + [ks[i]])

        for idx in extend(0, budget, []):
            yield OrbifoldSignature(r, idx)
        r += 1


def _class_from_signature(sig, n):
    counts = {}
    for k in sig.singular_indices:
        counts[k] = counts.get(k, 0) + 1
    vals = sorted(counts)
    p, q = (1, 1) if not vals else ((1, vals[0]) if len(vals) == 1 else tuple(vals))
    s1 = counts.get(p, 0) // 2 if p > 1 else 0
    s2 = counts.get(q, 0) // 2 if q > 1 else 0
    return (n, p, q, n // (p * q), sig.r, s1, s2)


def suite_lens(max_p: int = 50) -> SuiteReport:
    """Certificates verify, existence is symmetric and matches a residue scan,
    and oriented lens equivalence is an equivalence relation."""
    from .lens import dominates_qr, lens_equivalent, verify_certificate

    rep = SuiteReport(f"lens certificates and equivalence (p <= {max_p})")
    for p in range(2, max_p + 1):
        qs = [q for q in range(1, p) if naive_coprime(p, q)] or [1]
        squares = {x * x % p for x in range(p)}
        for q1 in qs:
            for q2 in qs:
                rep.checked += 1
                cert = dominates_qr(p, q1, q2)
                if (cert is not None) != (q1 * q2 % p in squares):
                    rep.fail((p, q1, q2, "existence disagrees with residue scan"))
                elif (cert is None) != (dominates_qr(p, q2, q1) is None):
                    rep.fail((p, q1, q2, "asymmetric"))
                elif cert is not None and not verify_certificate(p, q1, q2, cert):
                    rep.fail((p, q1, q2, cert))
                elif cert is not None and (cert.a1 * cert.b2 + cert.a2 * cert.b1 != p):
                    rep.fail((p, q1, q2, "a1 b2 + a2 b1 != p"))
        rel = {(a, b) for a in qs for b in qs if lens_equivalent(p, a, b)}
        for a in qs:
            if (a, a) not in rel:
                rep.fail((p, a, "not reflexive"))
        for a, b in rel:
            if (b, a) not in rel:
                rep.fail((p, a, b, "not symmetric"))
            for c in qs:
                if (b, c) in rel and (a, c) not in rel:
                    rep.fail((p, a, b, c, "not transitive"))
    return rep


def suite_generators(max_genus: int = 6, sym_max_n: int = 30) -> SuiteReport:
    """Generator-class counts on standard forms vs. exhaustive unit scans."""
    from .conjugacy import count_generator_classes, generators_conjugate
    from .extendability import enumerate_atlas, standard_epimorphism

    rep = SuiteReport(f"generator classes on standard forms (g <= {max_genus})")
    forms = []
    for g in range(1, max_genus + 1):
        forms.extend(enumerate_atlas(g, max_order=4 * g + 2))
    for cls in forms:
        sig, spec = standard_epimorphism(cls)
        n = spec.order
        rep.checked += 1
        crit = brute_force_units(n, lambda u: all((u * c - c) % n == 0 or (u * c + c) % n == 0
                                                  for c in spec.gamma))
        members = set(crit)
        closed = all(x * y % n in members for x in members for y in members)
        phi = len(brute_force_units(n))
        if not closed or 1 not in members or n - 1 not in members:
            rep.fail((str(cls), crit, "criterion set not a subgroup containing 1, n-1"))
            continue
        if count_generator_classes(sig, spec) != phi // len(crit) or phi % len(crit):
            rep.fail((str(cls), crit))
        if not (generators_conjugate(sig, spec, 1) and generators_conjugate(sig, spec, n - 1)):
            rep.fail((str(cls), "u = 1 or u = n - 1 rejected"))
        if n <= sym_max_n:
            for u in brute_force_units(n):
                inv = next(v for v in range(1, n + 1) if u * v % n == 1 % n)
                if generators_conjugate(sig, spec, u) != generators_conjugate(sig, spec, inv):
                    rep.fail((str(cls), u, "criterion not symmetric under inversion"))
    return rep


SUITES = {
    "alignment": suite_alignment,
    "matching": suite_matching,
    "validate": suite_validate,
    "moves": suite_moves,
    "normalize": suite_normalize,
    "atlas": suite_atlas,
    "lens": suite_lens,
    "generators": suite_generators,
}


def run_suites(names=None, caps: Optional[OracleCaps] = None) -> list[SuiteReport]:
    """Run the named suites (all by default); ``caps`` reaches the suites that take it."""
    names = list(SUITES) if not names or list(names) == ["all"] else list(names)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError(f"unknown oracle suites {unknown}; choose from {sorted(SUITES)}")
    reports = []
    for name in names:
        kwargs = {"caps": caps} if caps is not None and name == "atlas" else {}
        reports.append(SUITES[name](**kwargs))
    return reports
