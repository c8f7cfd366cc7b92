import json
from importlib import resources

import pytest

from knotiu.diagram import LinkDiagram, canonical_form, validate
from knotiu.fixtures import RECONSTRUCTED, Fixture, load, names
from knotiu.io import diagram_to_json
from knotiu.moves import MoveEvent, apply
from knotiu.verify import check_fixture, verify_paper


@pytest.mark.parametrize("name", RECONSTRUCTED)
def test_manifest_holds(name):
    rows = check_fixture(load(name))
    assert rows
    bad = [r for r in rows if not r.passed]
    assert not bad, bad


@pytest.mark.parametrize("name", RECONSTRUCTED)
def test_fixture_is_valid_and_round_trips(name):
    fx = load(name)
    assert validate(fx.diagram).ok
    raw = json.loads(resources.files("knotiu").joinpath(f"data/fixtures/{name}.json").read_text())
    assert diagram_to_json(fx.diagram) == raw["diagram"]
    assert Fixture.from_json(raw) == fx


@pytest.mark.parametrize("name", ["U", "example"])
def test_construction_replays(name):
    raw = json.loads(resources.files("knotiu").joinpath(f"data/fixtures/{name}.json").read_text())
    con = raw["construction"]
    d = LinkDiagram.unknot(1 if con["from"] == "unknot" else 2)
    for line in con["moves"]:
        d = apply(d, MoveEvent.from_text(line))
    assert canonical_form(d) == canonical_form(load(name).diagram)


def test_partner_is_one_riii_away():
    for name in ("DE", "FG"):
        fx = load(name)
        assert canonical_form(apply(fx.diagram, fx.move)) == canonical_form(fx.partner.diagram)
        assert canonical_form(apply(fx.partner.diagram, fx.partner.move)) == canonical_form(fx.diagram)


def test_standard_links_available():
    for name in ("unknot", "Hopf", "T(2,4)", "T(2,6)", "T(2,8)", "3_1", "4_1", "5_2", "7_4", "10_2"):
        assert name in names()
        assert validate(load(name).diagram).ok
    with pytest.raises(KeyError):
        load("no-such-link")


def test_crossing_labels():
    fx = load("U")
    assert sorted(fx.crossing_names) == sorted("pqrstvwx")
    assert sorted(fx.crossing_names.values()) == list(range(8))
    assert fx.crossing(3) == 3 and fx.crossing("3") == 3
    with pytest.raises(KeyError):
        fx.crossing("zz")


def test_verify_paper_is_deterministic():
    a = [r.to_json() for r in verify_paper(["U", "DE"], threads=1)]
    b = [r.to_json() for r in verify_paper(["U", "DE"], threads=2)]
    assert a == b
