import json
import threading

from hypothesis import assume, given, strategies as st

from knotiu.braids import braid_closure
from knotiu.diagram import LinkDiagram, crossing_change, split_union
from knotiu.fixtures import diagram
from knotiu.moves import apply, enumerate_moves
from knotiu.unknotting import CACHE_VERSION, UCache, UInterval, get_cache, set_cache, u, u_lower, u_upper

from strategies import diagrams


def test_lower_bound_examples():
    assert u_lower(diagram("Hopf"))[0] == 1
    lo, w = u_lower(diagram("Hopf"))
    assert w.kind in ("linking", "component")
    lo, w = u_lower(diagram("T(2,8)"))
    assert lo == 4
    lo, w = u_lower(diagram("T(2,6)#3_1"))
    assert (lo, w.kind) == (4, "component")
    lo, w = u_lower(diagram("T(2,6)#3_1"), use_catalogue=False)
    assert (lo, w.kind) == (4, "component")


def test_upper_bound_examples():
    assert u_upper(LinkDiagram.unknot(3))[0] == 0
    assert u_upper(braid_closure([1, 1, 1]))[0] == 1
    assert u_upper(braid_closure([1, -2, 1, -2]))[0] == 1


def test_u_examples():
    for name, val in [("7_4", 2), ("10_2", 3), ("5_1", 2), ("Hopf", 1), ("T(2,4)", 2)]:
        ui = u(diagram(name))
        assert ui.exact and ui.value == val, name
    # 5_2 is a twist knot: one crossing change unknots it
    assert u(diagram("5_2")).value == 1


def test_10_2_without_catalogue():
    ui = u(diagram("10_2"), use_catalogue=False)
    assert (ui.lo, ui.hi) == (3, 3)
    kinds = {w.kind for w in ui.witnesses}
    assert {"signature", "search"} <= kinds


def test_interval_rules():
    assert UInterval(1, None).exact is False
    assert str(UInterval(1, None)) == "[1, ?]"
    assert UInterval.from_json(UInterval(2, 2).to_json()) == UInterval(2, 2)


def test_budget_exhaustion_is_honest():
    ui = u(braid_closure([1, 2] * 10), budget=5, use_catalogue=False)
    assert not ui.exact and ui.hi is None


def test_cache_persists(tmp_path):
    path = tmp_path / "c.json"
    old = get_cache()
    try:
        set_cache(UCache(path))
        v = u(diagram("7_4"))
        get_cache().save()
        data = json.loads(path.read_text())
        assert data["version"] == CACHE_VERSION and data["entries"]
        fresh = UCache(path)
        set_cache(fresh)
        assert u(diagram("7_4")) == v
    finally:
        set_cache(old)


def test_cache_ignores_other_versions(tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"version": CACHE_VERSION + 1, "entries": {"x:1": {"lo": 9, "hi": 9}}}))
    assert UCache(path).get("x", 1) is None
    path.write_text("not json")
    assert UCache(path).get("x", 1) is None


def test_cache_concurrent_writers():
    c = UCache()
    val = UInterval(1, 1)

    def work():
        for k in range(200):
            c.put(f"k{k % 7}", 10, val)
            assert c.get(f"k{k % 7}", 10) == val

    ts = [threading.Thread(target=work) for _ in range(4)]
    for t in ts:
        t.start()
    for t in ts:
        t.join()


@given(diagrams(max_crossings=7), st.integers(0, 10**6))
def test_crossing_change_moves_u_by_at_most_one(d, pick):
    assume(d.c)
    a = u(d, 3000)
    b = u(crossing_change(d, [pick % d.c]), 3000)
    assume(a.exact and b.exact)
    assert abs(a.value - b.value) <= 1


@given(diagrams(max_crossings=7), st.integers(0, 10**6))
def test_u_is_move_invariant(d, pick):
    ms = enumerate_moves(d)
    assume(ms)
    a, b = u(d, 3000), u(apply(d, ms[pick % len(ms)]), 3000)
    assume(a.exact and b.exact)
    assert a.value == b.value


@given(diagrams(max_crossings=4, max_components=1), diagrams(max_crossings=4, max_components=1))
def test_split_union_subadditive(d1, d2):
    a, b, ab = u(d1, 3000), u(d2, 3000), u(split_union(d1, d2), 3000)
    assume(a.exact and b.exact and ab.hi is not None)
    assert ab.lo <= a.value + b.value


@given(diagrams())
def test_lower_never_exceeds_upper(d):
    lo, _ = u_lower(d)
    hi, _ = u_upper(d, 3000)
    if hi is not None:
        assert lo <= hi
