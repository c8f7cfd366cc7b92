import json

import pytest

from knotiu.cli import main
from knotiu.io import dumps
from knotiu.diagram import LinkDiagram

TREFOIL_PD = "components: 1-6\nX(1,5,2,4) X(3,1,4,6) X(5,3,6,2)\n"


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_validate(capsys, files):
    code, out, _ = run(capsys, "validate", "--diagram", files("t.pd", TREFOIL_PD))
    assert code == 0 and "valid: 1 component(s), 3 crossing(s)" in out
    bad = files("b.pd", "components: 1-6\nX(1,5,2,4) X(1,1,4,6) X(5,3,6,2)\n")
    code, out, _ = run(capsys, "validate", "--diagram", bad, "--json")
    assert code == 1 and json.loads(out)["valid"] is False


def test_parse_error_exit_code(capsys, files):
    code, _, err = run(capsys, "identify", "--diagram", files("t.pd", "components: 1-6\nX(1,5,2\n"))
    assert code == 2 and ":2:1:" in err
    code, _, err = run(capsys, "identify", "--diagram", files("t.json", '{"crossings": [[1,'))
    assert code == 2
    code, _, _ = run(capsys, "identify", "--diagram", "/nonexistent/file")
    assert code == 2


def test_identify(capsys, files):
    code, out, _ = run(capsys, "identify", "--diagram", files("t.pd", TREFOIL_PD), "--json")
    obj = json.loads(out)
    assert code == 0 and obj["name"] == "3_1" and obj["u"] == 1 and obj["fingerprint"]["determinant"] == 3


def test_smooth_marks_unoriented(capsys):
    code, out, _ = run(capsys, "smooth", "--fixture", "U", "--crossing", "r", "--mode", "irregular")
    obj = json.loads(out)
    assert code == 0 and obj["oriented"] is False and len(obj["crossings"]) == 7
    code, out, _ = run(capsys, "smooth", "--fixture", "U", "--crossing", "t")
    assert "oriented" not in json.loads(out)


def test_invariant_on_crossing_free(capsys, files):
    path = files("u.json", dumps(LinkDiagram.unknot()))
    code, out, _ = run(capsys, "invariant", "--which", "iu", "--diagram", path)
    assert code == 0 and out.strip().endswith("= 0")


def test_invariant_variants(capsys):
    assert run(capsys, "invariant", "--fixture", "U", "--which", "g")[1].strip() == "4"
    assert run(capsys, "invariant", "--fixture", "U", "--which", "g0")[1].strip() == "0"
    code, out, _ = run(capsys, "invariant", "--fixture", "U", "--s", "-1", "--eps", "1", "--delta", "1", "--json")
    assert json.loads(out)["value"] == 13
    code, out, _ = run(capsys, "invariant", "--fixture", "example", "--S", "[[-1,0],[0,1]]", "--ledger")
    assert code == 0 and "= 4" in out and "skip" in out
    code, _, err = run(capsys, "invariant", "--fixture", "U", "--eps", "1")
    assert code == 2


def test_bound_and_trace(capsys):
    code, out, _ = run(capsys, "bound", "--fixture", "U", "--s", "-1", "--eps", "1", "--delta", "1", "--json")
    assert json.loads(out)["bound"] == 7
    code, out, _ = run(capsys, "bound", "--fixture", "example", "--S", "[[-1,0],[0,1]]")
    assert "at least 2 RII and RIII moves" in out
    code, out, _ = run(capsys, "bound", "--fixture", "DE", "--fixture2", "DE", "--s", "1")
    assert "at least 0" in out
    code, out, _ = run(capsys, "trace", "--fixture", "U", "--s", "-1", "--json")
    assert json.loads(out)["values"] == [3, 1, 1, 0, 0, 0, 0, 0]


def test_moves_and_simplify(capsys, files):
    code, out, _ = run(capsys, "moves", "--fixture", "U")
    assert code == 0 and out.split() == ["R3", "face=0", "R3", "face=1", "R3", "face=3"]
    seq = files("s.txt", "R1+ arc=1 side=L sign=+\n")
    code, out, _ = run(capsys, "moves", "--diagram", files("t.pd", TREFOIL_PD), "--apply", seq, "--json")
    assert [r["crossings"] for r in json.loads(out)["steps"]] == [3, 4]
    bad = files("bad.txt", "R3 face=99\n")
    assert run(capsys, "moves", "--fixture", "U", "--apply", bad)[0] == 1
    code, out, _ = run(capsys, "simplify", "--fixture", "U", "--json")
    assert json.loads(out)["diagram"]["crossings"] == []


def test_unknotting(capsys, tmp_path):
    cache = tmp_path / "cache.json"
    code, out, _ = run(capsys, "unknotting", "--fixture", "10_2", "--json", "--cache", str(cache))
    obj = json.loads(out)
    assert code == 0 and obj["exact"] and obj["lo"] == 3
    assert cache.exists()


def test_unresolved_exit_code(capsys, files):
    from knotiu.braids import braid_closure

    path = files("big.json", dumps(braid_closure([1, 2] * 10)))
    code, _, _ = run(capsys, "invariant", "--diagram", path, "--s", "-1", "--budget", "3")
    assert code == 3


def test_verify_paper(capsys):
    code, out, _ = run(capsys, "verify-paper", "--fixture", "U")
    assert code == 0
    for needle in ("g I_lk" if False else "g ", "iu(+1)", "iu(-1)", "bound"):
        assert needle in out
    assert "FAIL" not in out and out.strip().endswith("50/50 checks pass")
    code, out, _ = run(capsys, "verify-paper", "--fixture", "oracle", "--json")
    rows = json.loads(out)
    assert code == 1
    assert [r["check"] for r in rows if not r["passed"]] == ["u 5_2"]
