"""Mapping-class moves acting on epimorphism data, and normalization.

All handle and point indices are 1-based, matching the usual presentation
alpha_1, beta_1, ..., gamma_1, ...  Every move has an inverse of the same
kind (flip the sign; swaps are involutions), so the move graph is undirected.

Effects, with additive residues mod n:

=====================  ==========================
slide_point_alpha      b_i <- b_i + sign * c_j
slide_point_beta       a_i <- a_i + sign * c_j
twist_alpha            b_i <- b_i + sign * a_i
twist_beta             a_i <- a_i + sign * b_i
handle_slide           b_i <- b_i + sign * b_k   (only when every a is 0)
swap_points            c_j1 <-> c_j2             (equal cone indices)
=====================  ==========================
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import ClassVar, Union

from .arith import bezout, inverse_mod
from .errors import InvalidMove, InvalidSpec, NormalizationImpossible, RestrictedMove
from .orbifold import EpimorphismSpec, OrbifoldSignature, validate


@dataclass(frozen=True)
class SlidePointAlpha:
    point: int
    handle: int
    sign: int = 1
    kind: ClassVar[str] = "slide_point_alpha"


@dataclass(frozen=True)
class SlidePointBeta:
    point: int
    handle: int
    sign: int = 1
    kind: ClassVar[str] = "slide_point_beta"


@dataclass(frozen=True)
class TwistAlpha:
    handle: int
    sign: int = 1
    kind: ClassVar[str] = "twist_alpha"


@dataclass(frozen=True)
class TwistBeta:
    handle: int
    sign: int = 1
    kind: ClassVar[str] = "twist_beta"


@dataclass(frozen=True)
class HandleSlide:
    """Slide handle ``moving`` along the alpha loop of handle ``along``."""

    moving: int
    along: int
    sign: int = 1
    kind: ClassVar[str] = "handle_slide"


@dataclass(frozen=True)
class SwapPoints:
    first: int
    second: int
    kind: ClassVar[str] = "swap_points"


Move = Union[SlidePointAlpha, SlidePointBeta, TwistAlpha, TwistBeta, HandleSlide, SwapPoints]
MoveScript = list

MOVE_KINDS = {cls.kind: cls for cls in
              (SlidePointAlpha, SlidePointBeta, TwistAlpha, TwistBeta, HandleSlide, SwapPoints)}


def inverse(move: Move) -> Move:
    if isinstance(move, SwapPoints):
        return move
    return dataclasses.replace(move, sign=-move.sign)


def _check_handle(sig, i):
    if not 1 <= i <= sig.r:
        raise InvalidMove(f"handle {i} out of range 1..{sig.r}")


def _check_point(sig, j):
    if not 1 <= j <= sig.s:
        raise InvalidMove(f"cone point {j} out of range 1..{sig.s}")


def _check_sign(move):
    if move.sign not in (1, -1):
        raise InvalidMove(f"sign must be +1 or -1, got {move.sign}")


def _bump(values, idx, delta, n):
    values = list(values)
    values[idx] = (values[idx] + delta) % n
    return tuple(values)


def apply_move(sig: OrbifoldSignature, spec: EpimorphismSpec, move: Move) -> EpimorphismSpec:
    """Return the action data obtained by precomposing with ``move``.

    Only shapes and index ranges are checked here; validity of ``spec`` is the
    caller's responsibility (moves preserve it).
    """
    if spec.r != sig.r or len(spec.gamma) != sig.s:
        raise InvalidMove("spec shape does not match signature")
    n = spec.order
    if isinstance(move, SwapPoints):
        j1, j2 = move.first, move.second
        _check_point(sig, j1)
        _check_point(sig, j2)
        if j1 == j2:
            raise InvalidMove("swap needs two distinct points")
        if sig.singular_indices[j1 - 1] != sig.singular_indices[j2 - 1]:
            raise InvalidMove("swapped points must have equal cone index")
        gamma = list(spec.gamma)
        gamma[j1 - 1], gamma[j2 - 1] = gamma[j2 - 1], gamma[j1 - 1]
        return spec.replace(gamma=gamma)

    _check_sign(move)
    if isinstance(move, SlidePointAlpha):
        _check_point(sig, move.point)
        _check_handle(sig, move.handle)
        c = spec.gamma[move.point - 1]
        return spec.replace(beta=_bump(spec.beta, move.handle - 1, move.sign * c, n))
    if isinstance(move, SlidePointBeta):
        _check_point(sig, move.point)
        _check_handle(sig, move.handle)
        c = spec.gamma[move.point - 1]
        return spec.replace(alpha=_bump(spec.alpha, move.handle - 1, move.sign * c, n))
    if isinstance(move, TwistAlpha):
        _check_handle(sig, move.handle)
        a = spec.alpha[move.handle - 1]
        return spec.replace(beta=_bump(spec.beta, move.handle - 1, move.sign * a, n))
    if isinstance(move, TwistBeta):
        _check_handle(sig, move.handle)
        b = spec.beta[move.handle - 1]
        return spec.replace(alpha=_bump(spec.alpha, move.handle - 1, move.sign * b, n))
    if isinstance(move, HandleSlide):
        _check_handle(sig, move.moving)
        _check_handle(sig, move.along)
        if move.moving == move.along:
            raise InvalidMove("a handle cannot slide along itself")
        if any(spec.alpha):
            raise RestrictedMove("handle slides are only modelled when every alpha image is 0")
        bk = spec.beta[move.moving - 1]
        return spec.replace(beta=_bump(spec.beta, move.along - 1, move.sign * bk, n))
    raise InvalidMove(f"unknown move {move!r}")


def apply_script(sig, spec, script):
    for move in script:
        spec = apply_move(sig, spec, move)
    return spec


def applicable_moves(sig: OrbifoldSignature, spec: EpimorphismSpec):
    """Every single move (both signs) that ``apply_move`` accepts on ``spec``."""
    r, s = sig.r, sig.s
    for i in range(1, r + 1):
        for sign in (1, -1):
            for j in range(1, s + 1):
                yield SlidePointAlpha(j, i, sign)
                yield SlidePointBeta(j, i, sign)
            yield TwistAlpha(i, sign)
            yield TwistBeta(i, sign)
    if r >= 2 and not any(spec.alpha):
        for k in range(1, r + 1):
            for i in range(1, r + 1):
                if k != i:
                    yield HandleSlide(k, i, 1)
                    yield HandleSlide(k, i, -1)
    idx = sig.singular_indices
    for j1 in range(1, s + 1):
        for j2 in range(j1 + 1, s + 1):
            if idx[j1 - 1] == idx[j2 - 1]:
                yield SwapPoints(j1, j2)


# -- JSON --------------------------------------------------------------------

def move_to_json(move: Move) -> dict:
    return {"kind": move.kind, "args": dataclasses.asdict(move)}


def move_from_json(obj: dict) -> Move:
    try:
        cls = MOVE_KINDS[obj["kind"]]
        return cls(**{k: int(v) for k, v in obj.get("args", {}).items()})
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidMove(f"malformed move object {obj!r}") from exc


def script_to_json(script) -> list:
    return [move_to_json(m) for m in script]


def script_from_json(objs) -> list:
    return [move_from_json(o) for o in objs]


# -- normalization -----------------------------------------------------------

class _Recorder:
    def __init__(self, sig, spec):
        self.sig = sig
        self.spec = spec
        self.script = []

    def do(self, move, times=1):
        for _ in range(times):
            self.spec = apply_move(self.sig, self.spec, move)
            # adjacent inverse pairs cancel exactly, so drop both
            if self.script and self.script[-1] == inverse(move):
                self.script.pop()
            else:
                self.script.append(move)

    def combine(self, weights, make_move):
        for idx, y in enumerate(weights):
            if y:
                self.do(make_move(idx, 1 if y > 0 else -1), abs(y))


def _symmetric(x, n):
    x %= n
    return x - n if x > n // 2 else x


def _spread(delta, gens, n):
    """Integer weights y with sum(y * gens) = delta (mod n).

    Requires gcd(gens, n) to divide delta.  Weights come from an iterated
    extended gcd, earlier generators first, then each is reduced to a
    symmetric representative modulo the generator's order.
    """
    g, coeffs = bezout(list(gens) + [n])
    if delta % g:
        raise NormalizationImpossible(f"{delta} not in the subgroup generated by {gens}")
    scale = delta // g
    out = []
    for c, x in zip(gens, coeffs):
        order = n // gcd(c, n)
        out.append(_symmetric(x * scale, order))
    return out


def normalize(sig: OrbifoldSignature, spec: EpimorphismSpec, h: int = 1):
    """Move ``spec`` to alpha = (h, 0, ..., 0), beta = 0 with gamma untouched.

    Returns ``(script, normalized_spec)``; replaying ``script`` through
    :func:`apply_move` from ``spec`` reproduces ``normalized_spec``.

    When the gamma images already generate Z_n only point slides are used.
    Otherwise Dehn twists clear the alpha images, handle slides clear
    b_2..b_r, and twists (with point slides along beta_1 when b_1 alone does
    not generate) bring handle 1 to (h, 0).
    """
    report = validate(sig, spec)
    if not report.valid:
        raise InvalidSpec("; ".join(report.details))
    n = spec.order
    if gcd(h, n) != 1:
        raise InvalidSpec(f"target {h} is not a generator of Z_{n}")
    h %= n
    r = sig.r
    if r == 0:
        return [], spec
    target_alpha = (h,) + (0,) * (r - 1)
    target_beta = (0,) * r
    if spec.alpha == target_alpha and spec.beta == target_beta:
        return [], spec

    rec = _Recorder(sig, spec)
    gamma = spec.gamma
    if reduce(gcd, gamma, n) == 1:
        for i in range(1, r + 1):
            da = target_alpha[i - 1] - rec.spec.alpha[i - 1]
            rec.combine(_spread(da, gamma, n),
                        lambda j, sgn, i=i: SlidePointBeta(j + 1, i, sgn))
            db = -rec.spec.beta[i - 1]
            rec.combine(_spread(db, gamma, n),
                        lambda j, sgn, i=i: SlidePointAlpha(j + 1, i, sgn))
    else:
        for i in range(1, r + 1):
            _clear_alpha(rec, i)
        for i in range(2, r + 1):
            _merge_beta_into_first(rec, i)
        big_b = rec.spec.beta[0]
        weights = _spread(h, (big_b,) + gamma, n)
        if weights[0]:
            rec.do(TwistBeta(1, 1 if weights[0] > 0 else -1), abs(weights[0]))
        rec.combine(weights[1:], lambda j, sgn: SlidePointBeta(j + 1, 1, sgn))
        k = _symmetric(rec.spec.beta[0] * inverse_mod(n, h), n)
        if k:
            rec.do(TwistAlpha(1, -1 if k > 0 else 1), abs(k))

    if rec.spec.alpha != target_alpha or rec.spec.beta != target_beta:
        raise NormalizationImpossible(
            f"normalizer ended at alpha={rec.spec.alpha}, beta={rec.spec.beta}")
    return rec.script, rec.spec


def _clear_alpha(rec, i):
    # Euclid on (a_i, b_i) with Dehn twists; values stay in [0, n) throughout.
    while True:
        a, b = rec.spec.alpha[i - 1], rec.spec.beta[i - 1]
        if a == 0:
            return
        if b == 0:
            rec.do(TwistAlpha(i, 1))
        elif a >= b:
            rec.do(TwistBeta(i, -1), a // b)
        else:
            rec.do(TwistAlpha(i, -1), b // a)


def _merge_beta_into_first(rec, i):
    # Euclid on (b_1, b_i) with handle slides; needs every a = 0.
    while True:
        b1, bi = rec.spec.beta[0], rec.spec.beta[i - 1]
        if bi == 0:
            return
        if b1 == 0:
            rec.do(HandleSlide(i, 1, 1))
        elif bi >= b1:
            rec.do(HandleSlide(1, i, -1), bi // b1)
        else:
            rec.do(HandleSlide(i, 1, -1), b1 // bi)
