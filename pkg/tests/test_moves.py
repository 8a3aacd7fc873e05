import json

import pytest
from hypothesis import assume, given, strategies as st

from cyclext.errors import InvalidMove, InvalidSpec, RestrictedMove
from cyclext.moves import (HandleSlide, SlidePointAlpha, SlidePointBeta, SwapPoints,
                           TwistAlpha, TwistBeta, applicable_moves, apply_move, apply_script,
                           inverse, move_from_json, move_to_json, normalize, script_from_json,
                           script_to_json)
from cyclext.oracle import (bfs_orbit, naive_ab_component, naive_is_valid, naive_order,
                            naive_span, suite_moves, suite_normalize)
from cyclext.orbifold import EpimorphismSpec, OrbifoldSignature


def test_slide_point_alpha_example():
    s = OrbifoldSignature(1, (2, 2))
    out = apply_move(s, EpimorphismSpec(6, (2,), (1,), (3, 3)), SlidePointAlpha(1, 1, 1))
    assert out == EpimorphismSpec(6, (2,), (4,), (3, 3))


def test_twist_beta_example():
    out = apply_move(OrbifoldSignature(1), EpimorphismSpec(5, (2,), (3,)), TwistBeta(1, -1))
    assert out == EpimorphismSpec(5, (4,), (3,))


def test_each_rule():
    s = OrbifoldSignature(2, (3, 3))
    spec = EpimorphismSpec(9, (1, 2), (4, 5), (3, 6))
    assert apply_move(s, spec, SlidePointBeta(2, 1, -1)).alpha == (1 - 6 + 9, 2)
    assert apply_move(s, spec, TwistAlpha(2, 1)).beta == (4, 7)
    assert apply_move(s, spec, SwapPoints(1, 2)).gamma == (6, 3)
    flat = spec.replace(alpha=(0, 0), beta=(1, 4))
    assert apply_move(s, flat, HandleSlide(2, 1, 1)).beta == (5, 4)


def test_handle_slide_restricted():
    s = OrbifoldSignature(2)
    with pytest.raises(RestrictedMove):
        apply_move(s, EpimorphismSpec(3, (1, 0), (0, 0)), HandleSlide(2, 1, 1))


@pytest.mark.parametrize("move", [SlidePointAlpha(3, 1, 1), TwistAlpha(2, 1),
                                  SwapPoints(1, 1), HandleSlide(1, 1, 1), TwistBeta(1, 2)])
def test_invalid_moves(move):
    s = OrbifoldSignature(1, (2, 2))
    with pytest.raises(InvalidMove):
        apply_move(s, EpimorphismSpec(2, (1,), (0,), (1, 1)), move)


def test_swap_needs_equal_indices():
    s = OrbifoldSignature(0, (2, 2, 3, 3))
    with pytest.raises(InvalidMove):
        apply_move(s, EpimorphismSpec(6, (), (), (3, 3, 2, 4)), SwapPoints(2, 3))


@st.composite
def valid_specs(draw, max_n=9, max_r=2, max_s=4):
    n = draw(st.integers(2, max_n))
    r = draw(st.integers(0, max_r))
    residues = st.integers(0, n - 1)
    gamma = [c for c in draw(st.lists(residues, max_size=max_s - 1)) if c]
    if gamma and sum(gamma) % n:
        gamma.append(-sum(gamma) % n)  # close the relation with one more cone point
    idx = tuple(naive_order(n, c) for c in gamma)
    alpha = draw(st.lists(residues, min_size=r, max_size=r))
    beta = draw(st.lists(residues, min_size=r, max_size=r))
    sig = OrbifoldSignature(r, idx)
    assume(naive_is_valid(sig, n, alpha, beta, gamma))
    return sig, EpimorphismSpec(n, tuple(alpha), tuple(beta), tuple(gamma))


@given(valid_specs(), st.data())
def test_moves_preserve_validity(pair, data):
    sig, spec = pair
    moves = list(applicable_moves(sig, spec))
    if not moves:
        return
    move = data.draw(st.sampled_from(moves))
    out = apply_move(sig, spec, move)
    assert naive_is_valid(sig, out.order, out.alpha, out.beta, out.gamma)
    if isinstance(move, SwapPoints):
        assert sorted(out.gamma) == sorted(spec.gamma)
        assert apply_move(sig, out, move) == spec
    else:
        assert out.gamma == spec.gamma
    assert apply_move(sig, out, inverse(move)) == spec


@given(valid_specs())
def test_normalize_replays_and_hits_target(pair):
    sig, spec = pair
    script, out = normalize(sig, spec)
    assert apply_script(sig, spec, script) == out
    if sig.r == 0:
        assert script == [] and out == spec
    else:
        assert out.alpha == (1,) + (0,) * (sig.r - 1)
        assert out.beta == (0,) * sig.r and out.gamma == spec.gamma


@given(valid_specs(max_n=12, max_r=3), st.integers(1, 11))
def test_normalize_to_other_generator(pair, h):
    sig, spec = pair
    n = spec.order
    if sig.r == 0 or len(naive_span(n, [h])) != n:
        return
    script, out = normalize(sig, spec, h=h)
    assert out.alpha[0] == h % n and apply_script(sig, spec, script) == out


def test_normalize_examples():
    s = OrbifoldSignature(1, (2, 2))
    script, out = normalize(s, EpimorphismSpec(2, (0,), (1,), (1, 1)))
    assert out == EpimorphismSpec(2, (1,), (0,), (1, 1))
    assert bfs_orbit(s, EpimorphismSpec(2, (0,), (1,), (1, 1)), out, depth=4).reachable
    t = OrbifoldSignature(1)
    start = EpimorphismSpec(5, (2,), (3,))
    script, out = normalize(t, start)
    assert out == EpimorphismSpec(5, (1,), (0,))
    assert bfs_orbit(t, start, out, depth=8).reachable
    assert normalize(t, out) == ([], out)


def test_normalize_non_generating_gamma_branch():
    # gamma images span only the index-2 subgroup; needs twists and handle slides
    s = OrbifoldSignature(2, (2, 2))
    spec = EpimorphismSpec(4, (2, 3), (1, 2), (2, 2))
    script, out = normalize(s, spec)
    assert out == EpimorphismSpec(4, (1, 0), (0, 0), (2, 2))
    assert any(isinstance(m, HandleSlide) for m in script) or spec.beta[1] == 0
    assert apply_script(s, spec, script) == out


def test_normalize_rejects_invalid():
    with pytest.raises(InvalidSpec):
        normalize(OrbifoldSignature(1), EpimorphismSpec(4, (2,), (0,)))


def test_naive_component_matches_library_bfs():
    sig = OrbifoldSignature(1, (3, 3))
    spec = EpimorphismSpec(6, (1,), (0,), (2, 4))
    naive = naive_ab_component(6, 1, spec.gamma, spec.alpha + spec.beta)
    from cyclext.oracle import move_component
    lib = {s.alpha + s.beta for s in move_component(sig, spec)}
    assert naive == lib


def test_move_json_round_trip():
    script = [SlidePointAlpha(1, 2, -1), SlidePointBeta(2, 1, 1), TwistAlpha(1, 1),
              TwistBeta(2, -1), HandleSlide(2, 1, -1), SwapPoints(1, 3)]
    encoded = script_to_json(script)
    assert [e["kind"] for e in encoded] == ["slide_point_alpha", "slide_point_beta",
                                            "twist_alpha", "twist_beta", "handle_slide",
                                            "swap_points"]
    assert script_from_json(json.loads(json.dumps(encoded))) == script
    assert move_from_json(move_to_json(script[0])) == script[0]


def test_move_json_malformed():
    with pytest.raises(InvalidMove):
        move_from_json({"kind": "teleport", "args": {}})


def test_move_invariance_suite_small():
    rep = suite_moves(max_n=5, max_r=1, max_s=3)
    assert rep.passed and rep.checked > 0


def test_normalize_suite_small():
    rep = suite_normalize(max_n=5, r_values=(1,), max_s=3)
    assert rep.passed and rep.checked > 0
