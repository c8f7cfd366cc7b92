import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from knotiu.braids import braid_closure
from knotiu.diagram import LinkDiagram, SignMatrixPair, writhe
from knotiu.fixtures import load
from knotiu.invariants import (FormalSum, IuConfig, IuValue, OracleUnresolved, correction, g, g0, ilk, iu,
                               move_bound, trace, trivial_value)
from knotiu.moves import RI_ADD, RI_REMOVE, MoveEvent, MoveSequence, apply, enumerate_moves

from strategies import diagrams
from movechecks import check_triple, random_matrices

P, M = IuConfig.knot(1), IuConfig.knot(-1)
EXAMPLE = IuConfig(SignMatrixPair(((-1, 0), (0, 1)), ((-1, 0), (0, 1))))


def test_ilk_examples():
    assert ilk(LinkDiagram.unknot()) == FormalSum()
    kink = apply(LinkDiagram.unknot(), MoveEvent.ri_add(-1, "L", 1))
    assert ilk(kink) == FormalSum([("X", 0)])
    s = ilk(load("U").diagram).abs_indices()
    assert s == FormalSum({("Y", 2): 2, ("X", 2): 1, ("X", 1): 2, ("X", 0): 3})
    with pytest.raises(ValueError):
        ilk(LinkDiagram.unknot(2))


def test_g_examples():
    assert g(FormalSum()) == 0 and g0(FormalSum()) == 0
    assert g(FormalSum([("X", -3)])) == 4 and g(FormalSum([("Y", 2)])) == -3
    s = ilk(load("U").diagram)
    assert g0(s) == 0 and g(s) == 4


def test_formal_sum_json():
    s = ilk(braid_closure([1, 1, 1]))
    assert FormalSum.from_json(s.to_json()) == s
    assert str(s) == "3*X_1"


def test_iu_examples():
    assert iu(LinkDiagram.unknot(), M).value == 0
    assert iu(LinkDiagram.unknot(2), EXAMPLE).value == 0
    assert iu(load("example").diagram, EXAMPLE).value == 4
    U = load("U").diagram
    assert iu(U, P).value == 1
    assert iu(U, M).value == 3
    assert iu(U, M.with_eps(1, 1)).value == 13


def test_trefoil_values():
    t = braid_closure([1, 1, 1])
    assert iu(t, P).value == 0
    assert iu(t, M).value == 3
    # each irregular smoothing is the unknot, one below u(3_1)
    assert iu(t, IuConfig.knot(-1, signed=True)).value == -3


def test_correction_is_half_integral():
    kink = apply(LinkDiagram.unknot(), MoveEvent.ri_add(-1, "L", 1))
    assert correction(kink, 1, 1) == Fraction(2)
    assert correction(kink, 1, -1) == Fraction(-1)
    assert correction(braid_closure([1, 1]), 1, 1) == Fraction(4)
    assert correction(braid_closure([1, -2]), 1, 1) == Fraction(1)
    d = apply(braid_closure([1, 1, 1]), MoveEvent.ri_add(1, "L", -1))
    assert correction(d, 1, 1).denominator == 1
    assert correction(d, -1, 1) == -(Fraction(d.c, 2) + Fraction(3 * writhe(d), 2))


def test_ledger_sums_to_value():
    v = iu(load("U").diagram, M.with_eps(1, 1))
    assert sum((e.lo for e in v.ledger), v.correction) == v.value
    assert [e.crossing for e in v.ledger] == list(range(8))
    assert IuValue.from_json(v.to_json()) == v


def test_skipped_entries():
    v = iu(load("example").diagram, EXAMPLE)
    fx = load("example")
    skipped = {e.crossing for e in v.ledger if e.member == "skip"}
    assert skipped == {fx.crossing(x) for x in "bcde"}
    assert all(e.lo == 0 for e in v.ledger if e.member == "skip")


def test_threads_do_not_change_the_ledger():
    U = load("U").diagram
    assert iu(U, M, threads=3).to_json() == iu(U, M).to_json()


def test_config_rules():
    with pytest.raises(ValueError):
        IuConfig(SignMatrixPair.scalar(1), epsilon=1)
    with pytest.raises(ValueError):
        iu(LinkDiagram.unknot(2), P)
    assert IuConfig.from_json(M.with_eps(1, -1).to_json()) == M.with_eps(1, -1)


def test_move_bounds():
    fx = load("example")
    assert move_bound(iu(fx.diagram, EXAMPLE), trivial_value(EXAMPLE)) == 2
    cfg = M.with_eps(1, 1)
    assert move_bound(iu(load("U").diagram, cfg), trivial_value(cfg), "all_moves") == 7
    v = iu(load("U").diagram, P)
    assert move_bound(v, v) == 0
    with pytest.raises(ValueError):
        move_bound(v, iu(load("U").diagram, M))
    with pytest.raises(ValueError):
        move_bound(v, v, "all_moves")
    with pytest.raises(ValueError):
        move_bound(iu(load("U").diagram, cfg), trivial_value(cfg), "RII_RIII_only")
    open_ = IuValue(Fraction(0), Fraction(2), P, 0)
    with pytest.raises(OracleUnresolved):
        move_bound(open_, open_)


def test_traces():
    fx = load("U")
    assert [v.value for v in trace(fx.sequence, M)] == [3, 1, 1, 0, 0, 0, 0, 0]
    assert [v.value for v in trace(fx.sequence, P.with_eps(1, 1))] == [11, 9, 9, 8, 6, 4, 2, 0]
    assert [v.value for v in trace(MoveSequence(fx.diagram), P)] == [1]


def test_riii_witnesses():
    for name, want in (("DE", (0, 1)), ("FG", (0, 2))):
        fx = load(name)
        got = tuple(abs(iu(fx.partner.diagram, c).value - iu(fx.diagram, c).value) for c in (P, M))
        assert got == want, name


@given(diagrams(max_crossings=7, max_components=1), st.integers(0, 10**6))
def test_g_moves_by_at_most_one(d, pick):
    ms = enumerate_moves(d)
    assume(ms)
    e = ms[pick % len(ms)]
    E = apply(d, e)
    assert abs(g(ilk(E)) - g(ilk(d))) <= 1
    if e.kind in (RI_ADD, RI_REMOVE):
        assert g0(ilk(E)) == g0(ilk(d))


@given(diagrams(max_components=1))
def test_g_is_g0_plus_writhe(d):
    assert g(ilk(d)) == g0(ilk(d)) + writhe(d)


@given(diagrams(max_crossings=6), st.integers(0, 10**6), st.integers(0, 10**6))
def test_single_move_bounds(d, pick, seed):
    ms = [m for m in enumerate_moves(d) if d.c + {RI_ADD: 1, "RII_add": 2}.get(m.kind, 0) <= 8]
    assume(ms)
    mats = random_matrices(random.Random(seed), d.n)
    check_triple(d, ms[pick % len(ms)], mats)
