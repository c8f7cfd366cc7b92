import pytest
from hypothesis import assume, given, strategies as st

from knotiu.braids import braid_closure
from knotiu.diagram import LinkDiagram, canonical_form, isomorphic, linking_matrix, validate, writhe
from knotiu.fixtures import load
from knotiu.moves import (RI_ADD, RI_REMOVE, RII_ADD, RII_REMOVE, RIII, MoveError, MoveEvent, MoveSequence,
                          apply, bigon_crossings, classify_r2, enumerate_moves, inverse_event, parse_events,
                          removing_moves, run_sequence, simplify, trigon_crossings)

from strategies import diagrams

TREFOIL = braid_closure([1, 1, 1])
KINK = apply(LinkDiagram.unknot(), MoveEvent.ri_add(-1, "L", 1))


def test_loop_has_only_adding_moves():
    ms = enumerate_moves(LinkDiagram.unknot())
    assert not removing_moves(LinkDiagram.unknot())
    assert any(m.kind == RI_ADD for m in ms)


def test_trefoil_has_no_removing_moves():
    assert removing_moves(TREFOIL) == []


def test_u_has_no_reducing_monogon_or_bigon():
    assert removing_moves(load("U").diagram, (RI_REMOVE, RII_REMOVE)) == []


def test_positive_kink_on_loop():
    assert KINK.c == 1 and writhe(KINK) == 1
    assert validate(KINK).ok


def test_rii_add_then_remove():
    d = TREFOIL
    e = MoveEvent.rii_add(1, "L", 3, "L", 1)
    assume_ok = e in enumerate_moves(d)
    assert assume_ok
    E = apply(d, e)
    back = inverse_event(d, E, e)
    assert back is not None and back.kind == RII_REMOVE
    assert isomorphic(apply(E, back), d)


def test_u_sequence_unknots():
    fx = load("U")
    ds = run_sequence(fx.sequence)
    assert len(ds) == 8 and ds[-1].c == 0


def test_u_second_rii_is_unmatched():
    fx = load("U")
    ds = run_sequence(fx.sequence)
    kinds = [(d, e) for d, e in zip(ds, fx.sequence.events) if e.kind == RII_REMOVE]
    assert [classify_r2(d, e) for d, e in kinds] == ["matched", "unmatched"]


def test_classify_by_orientation():
    loops = LinkDiagram.unknot(2)
    parallel = MoveEvent.rii_add(-1, "L", -2, "R")
    anti = MoveEvent.rii_add(-1, "L", -2, "L")
    assert classify_r2(loops, parallel) == "matched"
    assert classify_r2(loops, anti) == "unmatched"
    for e in (parallel, anti):
        # two circles meeting twice: the lens and the outside are bounded by
        # one pair of edges, the two crescents by the other
        E = apply(loops, e)
        tags = sorted(classify_r2(E, b) for b in removing_moves(E, (RII_REMOVE,)))
        assert tags == ["matched", "matched", "unmatched", "unmatched"]
    with pytest.raises(MoveError):
        classify_r2(loops, MoveEvent.ri_add(-1))


def test_simplify_examples():
    out, seq = simplify(KINK)
    assert out.c == 0 and len(seq.events) == 1
    two = apply(KINK, MoveEvent.ri_add(1, "R", -1))
    out, seq = simplify(two)
    assert out.c == 0 and len(seq.events) == 2
    out, seq = simplify(TREFOIL)
    assert out == TREFOIL and not seq.events


def test_run_sequence_examples():
    assert run_sequence(MoveSequence(TREFOIL)) == [TREFOIL]
    undo = removing_moves(KINK, (RI_REMOVE,))[0]
    ds = run_sequence(MoveSequence(LinkDiagram.unknot(), (MoveEvent.ri_add(-1), undo)))
    assert [d.c for d in ds] == [0, 1, 0]
    seen = []
    run_sequence(MoveSequence(TREFOIL), observer=lambda k, d: seen.append(k))
    assert seen == [0]


def test_run_sequence_reports_step():
    s = MoveSequence(TREFOIL, (MoveEvent.ri_add(1), MoveEvent.riii(0)))
    with pytest.raises(MoveError) as exc:
        run_sequence(s)
    assert exc.value.step == 2


def test_event_text_round_trip():
    text = "R1+ arc=7 side=L sign=+\nR2- face=3\nR3 face=5\nR2+ arc=1 side=R arc2=4 side2=L over=2\n"
    events = parse_events(text)
    assert "".join(e.to_text() + "\n" for e in events) == text
    with pytest.raises(ValueError, match="line 1"):
        parse_events("R1+ arc=x side=L sign=+")
    with pytest.raises(ValueError):
        parse_events("R2- face=1 extra=2")


def test_trigon_and_bigon_corners():
    fx = load("DE")
    x, y, z = trigon_crossings(fx.diagram, fx.move.site)
    assert len({x, y, z}) == 3 and z == fx.crossing("z")
    E = apply(TREFOIL, MoveEvent.rii_add(1, "L", 3, "L", 1))
    (face,) = [b.site for b in removing_moves(E, (RII_REMOVE,))]
    p, n = bigon_crossings(E, face)
    assert E.signs[p] == 1 and E.signs[n] == -1


DELTA_C = {RI_ADD: 1, RI_REMOVE: -1, RII_ADD: 2, RII_REMOVE: -2, RIII: 0}


@given(diagrams(max_crossings=7), st.integers(0, 10**6))
def test_apply_postconditions(d, pick):
    ms = enumerate_moves(d)
    assume(ms)
    e = ms[pick % len(ms)]
    E = apply(d, e)
    assert validate(E).ok
    assert E.c - d.c == DELTA_C[e.kind]
    assert E.n == d.n
    assert linking_matrix(E) == linking_matrix(d)
    dw = writhe(E) - writhe(d)
    if e.kind == RI_ADD:
        assert dw == e.param("sign")
    elif e.kind == RI_REMOVE:
        assert abs(dw) == 1
    else:
        assert dw == 0


@given(diagrams(max_crossings=7), st.integers(0, 10**6))
def test_every_move_is_invertible(d, pick):
    ms = enumerate_moves(d)
    assume(ms)
    e = ms[pick % len(ms)]
    E = apply(d, e)
    back = inverse_event(d, E, e)
    assert back is not None
    assert canonical_form(apply(E, back)) == canonical_form(d)


@given(diagrams(max_crossings=7), st.integers(0, 10**6))
def test_rii_add_exposes_its_inverse(d, pick):
    ms = [m for m in enumerate_moves(d) if m.kind == RII_ADD]
    assume(ms)
    e = ms[pick % len(ms)]
    E = apply(d, e)
    key = canonical_form(d)
    removes = [b for b in enumerate_moves(E) if b.kind == RII_REMOVE]
    assert any(canonical_form(apply(E, b)) == key for b in removes)


@given(diagrams(max_crossings=7), st.integers(0, 10**6))
def test_rii_tag_matches_the_created_bigon(d, pick):
    ms = [m for m in enumerate_moves(d) if m.kind == RII_ADD]
    assume(ms)
    e = ms[pick % len(ms)]
    E = apply(d, e)
    key = canonical_form(d)
    tags = {classify_r2(E, b) for b in removing_moves(E, (RII_REMOVE,)) if canonical_form(apply(E, b)) == key}
    assert classify_r2(d, e) in tags


@given(diagrams())
def test_simplify_never_grows(d):
    out, seq = simplify(d, 500)
    assert out.c <= d.c
    assert canonical_form(run_sequence(seq)[-1]) == canonical_form(out)
    assert simplify(d, 500) == (out, seq)
