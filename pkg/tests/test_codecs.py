import itertools
import math

from hypothesis import given, settings, strategies as st
import pytest

from detalign.channel import ChannelSpec, Semantics, channel_outputs
from detalign.codecs import (
    CenterMode,
    CodebookMode,
    Model1Mode,
    invertible_set,
    model1_decode,
    model1_derive,
    model1_encode,
    model2_decode,
    model2_derive,
    model2_encode,
    model3_decode,
    model3_derive,
    model3_encode,
)
from detalign.codecs.model1 import injectivity_collision, infer_leading
from detalign.errors import (
    AmbiguousSolution,
    ConditionViolated,
    CongruenceViolated,
    IndexOutOfRange,
    InjectivityViolation,
    InvalidParameter,
    NotDivisible,
    StructureViolation,
)
from detalign.numtheory import sqrt_mod
from detalign.polynomial import eval_poly, parse_poly

from oracles import brute_invertible_set, trial_division_is_prime

H1 = parse_poly("X1 + X2*X3", 3)
H3 = parse_poly("X1^3 + X2^2*X3^2", 3)


# invertible sets


@pytest.mark.parametrize(
    "f, q, C", [("X1^2", 5, [0, 1, 2]), ("X1 + 1", 7, list(range(7))), ("X1^3", 7, [0, 1, 3])]
)
def test_invertible_set_examples(f, q, C):
    cb, table = invertible_set(parse_poly(f, 1), q)
    assert list(cb.symbols) == C
    assert sorted(x for xs in table.fibers.values() for x in xs) == list(range(q))


@pytest.mark.parametrize("f_text", ["X1^2", "X1^3", "X1^5 + X1", "2*X1^4 - X1 + 3"])
@pytest.mark.parametrize("q", [p for p in range(2, 60) if trial_division_is_prime(p)])
def test_invertible_set_properties(f_text, q):
    f = parse_poly(f_text, 1)
    d = max(sum(m.exponents) for m in f.terms)
    cb, table = invertible_set(f, q)
    fvals = [eval_poly(f, (x,), q) for x in range(q)]
    assert list(cb.symbols) == brute_invertible_set(fvals)
    assert len({fvals[x] for x in cb}) == len(cb)
    assert len(cb) >= math.ceil(q / d)
    assert all(len(xs) <= d for xs in table.fibers.values())


def test_invertible_set_accepts_other_variable():
    cb, _ = invertible_set(parse_poly("X2^2", 3), 5)
    assert list(cb.symbols) == [0, 1, 2]


# Model I


def test_model1_derive_d1():
    p = model1_derive(1, 1, H1, Model1Mode.PAPER_LITERAL)
    assert (p.d0, p.c, p.p, p.q, p.e) == (1, 3, 7, 53, 3)
    assert list(p.C.symbols) == [14, 21, 42]


def test_model1_paper_literal_collision():
    with pytest.raises(InjectivityViolation) as err:
        model1_derive(1, 3, H3, Model1Mode.PAPER_LITERAL)
    assert err.value.pair == (1, 7)
    assert pow(2, 3, 19) == pow(2, 21, 19)


def test_model1_repaired_d3():
    p = model1_derive(1, 3, H3, Model1Mode.REPAIRED)
    assert (p.p, p.q, p.e, len(p.C)) == (23, 541, 5, 11)
    assert p.p % 4 == 3 and math.gcd(p.p - 1, p.d0) == 1
    assert injectivity_collision(p.e, p.d, p.p) is None


def test_model1_default_mode_picks_repaired_for_odd_part():
    assert model1_derive(1, 3, H3).mode is Model1Mode.REPAIRED
    assert model1_derive(1, 1, H1).mode is Model1Mode.PAPER_LITERAL


@pytest.mark.parametrize("h_text, a, d", [("X1^2 + X2*X3", 1, 2), ("X2*X3", 1, 1), ("X1 + X2", 1, 1), ("2*X1 + X2*X3", 1, 1), ("3 + X1 + X2*X3", 1, 1)])
def test_model1_structure_violations(h_text, a, d):
    with pytest.raises(StructureViolation):
        model1_derive(a, d, parse_poly(h_text, 3))


@pytest.mark.parametrize(
    "h_text, a, d",
    [("X1 + X2*X3", 1, 1), ("X1^2 + X2^2*X3", 1, 2), ("2*X1^3 + X2^2*X3^2", 2, 3), ("X1^4 + X2^5", 1, 4), ("5*X1^6 + X2^4*X3^3", 5, 6)],
)
def test_model1_codebook_structure(h_text, a, d):
    h = parse_poly(h_text, 3)
    assert infer_leading(h) == (a, d)
    p = model1_derive(a, d, h, Model1Mode.REPAIRED)
    assert p.p > a and p.p * p.p < p.q < 2 * p.p * p.p
    assert trial_division_is_prime(p.p) and trial_division_is_prime(p.q)
    assert all(s % p.p == 0 and 0 < s < p.p**2 for s in p.C)
    assert len(p.C) == (p.p - 1) // 2 > math.sqrt(p.q) / (2 * math.sqrt(2)) - 0.5
    assert injectivity_collision(p.e, d, p.p) is None


@given(st.integers(1, 24))
@settings(max_examples=24, deadline=None)
def test_model1_repaired_always_injective(d):
    h = parse_poly(f"X1^{d} + X2^{d}*X3", 3)
    p = model1_derive(1, d, h, Model1Mode.REPAIRED)
    e_pows = {pow(p.e, u * d, p.p) for u in range(1, (p.p - 1) // 2 + 1)}
    assert len(e_pows) == (p.p - 1) // 2


def test_model1_p_floor_and_q_override():
    p = model1_derive(1, 1, H1, p_min=1009)
    assert p.p == 1019
    for bad in (101, 51, 47):
        with pytest.raises(InvalidParameter):
            model1_derive(1, 1, H1, q=bad)
    assert model1_derive(1, 1, H1, q=61).q == 61


def test_model1_encode():
    p = model1_derive(1, 1, H1)
    assert model1_encode(p, 0) == 14
    assert model1_encode(p, 2) == 42
    with pytest.raises(IndexOutOfRange):
        model1_encode(p, 3)


def test_model1_decode_examples():
    p = model1_derive(1, 1, H1)
    assert model1_decode(p, 21 + 14 * 42) == (1, 1)
    assert model1_decode(p, 14 + 21 * 42) == (0, 2)
    with pytest.raises(NotDivisible):
        model1_decode(p, (21 + 14 * 42) % 53)


def test_model1_decode_ambiguous_without_self_check():
    p = model1_derive(1, 3, H3, Model1Mode.PAPER_LITERAL, self_check=False)
    x = model1_encode(p, 0)
    with pytest.raises(AmbiguousSolution):
        model1_decode(p, x**3)


@pytest.mark.parametrize("h, d", [(H1, 1), (H3, 3), (parse_poly("X1^2 + X2^2*X3 + X3^3", 3), 2)])
def test_model1_round_trip_integer_semantics(h, d):
    p = model1_derive(1, d, h)
    spec = ChannelSpec(3, h, p.q, Semantics.INTEGER)
    for msgs in itertools.product(range(len(p.C)), repeat=3):
        x = [model1_encode(p, m) for m in msgs]
        y = channel_outputs(spec, x)
        assert [model1_decode(p, y[i])[0] for i in range(3)] == list(msgs)


# Model II

F2 = parse_poly("X1^2", 3)
G2 = parse_poly("X2*X3", 3)


def test_model2_derive_examples():
    p = model2_derive(F2, G2, 0, 5)
    assert list(p.C.symbols) == [0, 1, 2]
    with pytest.raises(ConditionViolated) as err:
        model2_derive(F2, parse_poly("X2 + X3", 3), 0, 5)
    assert err.value.position == 2
    prod = parse_poly("X2 - 1", 3) * parse_poly("X3 - 1", 3)
    assert list(model2_derive(F2, prod, 1, 7).C.symbols) == [0, 1, 2, 3]


def test_model2_rejects_bad_inputs():
    with pytest.raises(InvalidParameter):
        model2_derive(F2, G2, 0, 9)
    with pytest.raises(InvalidParameter):
        model2_derive(F2, parse_poly("X1*X2", 3), 0, 5)
    with pytest.raises(InvalidParameter):
        model2_derive(parse_poly("X1*X2", 3), G2, 0, 5)


def test_model2_encode():
    p = model2_derive(F2, G2, 0, 5)
    assert model2_encode(p, 1, 2, 1) == 2
    assert model2_encode(p, 1, 1, 2) == 0
    assert model2_encode(p, 3, 1, 2) == 1
    with pytest.raises(IndexOutOfRange):
        model2_encode(p, 1, 3, 1)


def test_model2_decode_examples():
    p = model2_derive(F2, G2, 0, 5)
    spec = ChannelSpec(3, p.h, 5)
    x1 = (2, 1, 2)
    x2 = (0, 1, 2)
    y1, y2 = channel_outputs(spec, x1), channel_outputs(spec, x2)
    assert (y1[0], y2[0]) == (1, 2)
    assert model2_decode(p, 1, y1[0], y2[0]) == p.C.index_of[2]
    assert y2[1] == 1 and model2_decode(p, 2, y1[1], y2[1]) == 1
    assert y2[2] == 4 and model2_decode(p, 3, y1[2], y2[2]) == 2


@pytest.mark.parametrize("q", [5, 13, 29])
def test_model2_round_trip_exhaustive(q):
    p = model2_derive(F2, G2, 0, q)
    spec = ChannelSpec(3, p.h, q)
    for msgs in itertools.product(range(len(p.C)), repeat=3):
        s1, s2 = p.encode_transmission(msgs)
        y1, y2 = channel_outputs(spec, s1), channel_outputs(spec, s2)
        assert [model2_decode(p, r + 1, y1[r], y2[r]) for r in range(3)] == list(msgs)


def test_model2_round_trip_nonzero_vanish_point_k4():
    f = parse_poly("X1^3 + X1", 4)
    g = parse_poly("X2 - 2", 4) * parse_poly("X3 - 2", 4) * parse_poly("X4 - 2", 4) * parse_poly("X2 + X3*X4", 4)
    p = model2_derive(f, g, 2, 11)
    spec = ChannelSpec(4, p.h, 11)
    for msgs in itertools.product(range(len(p.C)), repeat=4):
        s1, s2 = p.encode_transmission(msgs)
        y1, y2 = channel_outputs(spec, s1), channel_outputs(spec, s2)
        assert [model2_decode(p, r + 1, y1[r], y2[r]) for r in range(4)] == list(msgs)


# Model III


@pytest.mark.parametrize("q, C", [(73, [4, 24]), (193, [4, 24, 44, 64])])
def test_model3_paper_codebooks(q, C):
    p = model3_derive(q)
    assert list(p.C.symbols) == C
    assert len(p.C) > (q - 12) / 60


def test_model3_congruence():
    with pytest.raises(CongruenceViolated):
        model3_derive(71)
    with pytest.raises(CongruenceViolated):
        model3_derive(3)


@pytest.mark.parametrize("q", [p for p in range(6, 3000) if trial_division_is_prime(p) and p % 5 == 3])
def test_model3_codebook_bounds(q):
    paper = model3_derive(q, CodebookMode.PAPER)
    assert len(paper.C) > (q - 12) / 60
    assert all(s % 20 == 4 for s in paper.C)
    if q >= 36:
        strict = model3_derive(q, CodebookMode.STRICT)
        top = max(strict.C)
        assert 4 * top + 8 < q
        assert all(s % 20 == 4 for s in strict.C)


def test_model3_encode():
    p = model3_derive(73)
    assert model3_encode(p, 1, 1) == 24
    assert model3_encode(p, 1, 2) == 25
    assert model3_encode(p, 0, 2) == 5


def test_model3_decode_examples():
    out = model3_decode(model3_derive(73), 32, 50)
    assert out.status == "unique" and out.msg == 0
    assert (out.trace["t_sum"], out.trace["m"], out.trace["center"], out.trace["rhs"], out.trace["l"]) == (16, 0, 4, 0, 0)

    p = model3_derive(193)
    out = model3_decode(p, 192, 57)
    assert out.status == "ambiguous" and out.candidates == (4, 24)
    tr = out.trace
    assert (tr["t_sum"], tr["m"], tr["center"], tr["rhs"], tr["l"]) == (56, 2, 14, 100, 10)
    spec = ChannelSpec(3, p.h, 193)
    for x in [(4, 24, 24), (24, 4, 4)]:
        y1 = channel_outputs(spec, x)[0]
        y2 = channel_outputs(spec, tuple(v + 1 for v in x))[0]
        assert (y1, y2) == (192, 57)

    out = model3_decode(model3_derive(73), 0, 0)
    assert out.status == "failure" and out.reason == "MalformedT" and out.trace["t_sum"] == 71


def _brute_quadratic_roots(q, C, y1, t):
    return sorted(s for s in C if (2 * s * s + y1 - t * s) % q == 0)


@pytest.mark.parametrize("q", [193, 233, 353, 433])
def test_model3_survivors_solve_the_quadratic(q):
    p = model3_derive(q, CodebookMode.PAPER)
    spec = ChannelSpec(3, p.h, q)
    for x in itertools.product(p.C.symbols, repeat=3):
        y1 = channel_outputs(spec, x)[0]
        y2 = channel_outputs(spec, tuple(v + 1 for v in x))[0]
        out = model3_decode(p, y1, y2)
        t_true = 2 * x[0] + x[1] + x[2]
        if t_true < q:
            assert out.trace["t_sum"] == t_true
        if out.status != "failure":
            t = out.trace["t_sum"]
            assert all((2 * s * s + y1 - t * s) % q == 0 for s in out.candidates)
            assert list(out.candidates) == _brute_quadratic_roots(q, p.C, y1, t)
            assert x[0] in out.candidates


@pytest.mark.parametrize("q", [233, 353, 433, 593])
def test_model3_strict_codebook_never_wraps(q):
    p = model3_derive(q, CodebookMode.STRICT)
    spec = ChannelSpec(3, p.h, q)
    for x in itertools.product(p.C.symbols, repeat=3):
        y1 = channel_outputs(spec, x)[0]
        y2 = channel_outputs(spec, tuple(v + 1 for v in x))[0]
        out = model3_decode(p, y1, y2)
        assert out.status != "failure"
        assert out.trace["t_sum"] == 2 * x[0] + x[1] + x[2]


def test_model3_paper_literal_center_never_decodes():
    # center 5m+1 does not complete the square of 2X^2 - tX + Y1
    out = model3_decode(model3_derive(73, center_mode=CenterMode.PAPER_LITERAL), 32, 50)
    assert out.trace["center"] == 1 and out.trace["rhs"] == 58
    assert out.status == "failure" and out.reason == "NonResidue"
    assert not sqrt_mod(58, 73)
