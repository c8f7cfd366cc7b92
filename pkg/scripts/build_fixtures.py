"""Freeze the reconstructed diagrams into src/knotiu/data/fixtures/.

Each diagram was found by one of the search scripts (search_u.py,
search_example.py, search_riii.py); the constructions they reported are
replayed here, checked, and written out with their manifests.

    python3 scripts/build_fixtures.py
"""
import json
import sys
from pathlib import Path

from knotiu.diagram import LinkDiagram, canonical_form
from knotiu.identify import identify
from knotiu.io import diagram_to_json
from knotiu.moves import MoveEvent, apply, removing_moves, trigon_crossings, RIII
from knotiu.smoothing import irregular_smooth, regular_smooth
from knotiu.fixtures import Fixture
from knotiu.verify import check_fixture

OUT = Path(__file__).resolve().parents[1] / "src" / "knotiu" / "data" / "fixtures"

P = {"S": [[1]], "T": [[1]]}
M = {"S": [[-1]], "T": [[1]]}


def eps(cfg, e=1, d=1):
    return dict(cfg, eps=e, delta=d)


def replay(start, lines):
    cur, out = start, [start]
    for ln in lines:
        cur = apply(cur, MoveEvent.from_text(ln))
        out.append(cur)
    return out


def forward(states):
    """Events taking states[-1] back to states[0], matched by canonical form."""
    cur, events = states[-1], []
    for target in reversed(states[:-1]):
        key = canonical_form(target)
        for e in removing_moves(cur):
            nxt = apply(cur, e)
            if canonical_form(nxt) == key:
                events.append(e)
                cur = nxt
                break
        else:
            raise RuntimeError(f"no move reaches step {len(events)}")
    return events


def name(d):
    e = identify(d)
    return e.name if e else None


# ------------------------------------------------------------------ U


U_HISTORY = ["R1+ arc=-1 side=L sign=+", "R1+ arc=1 side=L sign=+", "R1+ arc=2 side=R sign=+",
             "R1+ arc=3 side=L sign=+", "R2+ arc=4 side=R arc2=8 side2=R over=1",
             "R2+ arc=1 side=L arc2=6 side2=R over=1", "R3 face=0"]


def build_u():
    states = replay(LinkDiagram.unknot(1), U_HISTORY)
    U = states[-1]
    seq = forward(states)
    by_id = {}
    for x in range(U.c):
        by_id[x] = (U.crossing(x).sign, name(regular_smooth(U, x).diagram))
    names = {}
    neg = [x for x in range(U.c) if by_id[x] == (-1, "T(2,4)")]
    names.update(zip("pq", neg))
    names["s"] = next(x for x in range(U.c) if by_id[x] == (1, "T(2,4)"))
    names["r"] = next(x for x in range(U.c) if by_id[x][1] == "5_2#Hopf")
    names["t"] = next(x for x in range(U.c) if by_id[x][1] == "Hopf")
    names.update(zip("vwx", [x for x in range(U.c) if by_id[x][1] == "trivial-2"]))
    manifest = [
        {"fact": "crossings", "expected": 8},
        {"fact": "writhe", "expected": 4},
        {"fact": "link", "expected": "unknot"},
        {"fact": "no_reducing_faces", "expected": True},
    ]
    for x in "pqrstvwx":
        manifest.append({"fact": "sign", "crossing": x, "expected": -1 if x in "pq" else 1})
    reg = {"p": "T(2,4)", "q": "T(2,4)", "s": "T(2,4)", "r": "5_2#Hopf", "t": "Hopf",
           "v": "trivial-2", "w": "trivial-2", "x": "trivial-2"}
    irr = {"p": "3_1", "q": "3_1", "t": "3_1", "r": "7_4", "s": "5_1",
           "v": "unknot", "w": "unknot", "x": "unknot"}
    lk = {"p": 2, "q": 2, "s": 2, "r": 1, "t": 1, "v": 0, "w": 0, "x": 0}
    for x in "pqrstvwx":
        manifest.append({"fact": "smoothing", "crossing": x, "mode": "regular", "expected": reg[x]})
        manifest.append({"fact": "smoothing", "crossing": x, "mode": "irregular", "expected": irr[x]})
        manifest.append({"fact": "smoothing_lk", "crossing": x, "expected": lk[x]})
    manifest += [
        {"fact": "g0", "expected": 0},
        {"fact": "g", "expected": 4},
        {"fact": "iu", "config": P, "expected": 1},
        {"fact": "iu", "config": M, "expected": 3},
        {"fact": "iu", "config": eps(M), "expected": 13},
        {"fact": "max_bound", "config": P, "expected": 6},
        {"fact": "bound", "config": eps(M), "kind": "all_moves", "expected": 7},
        {"fact": "sequence_length", "expected": 7},
        {"fact": "sequence_kinds", "expected": ["RIII", "RII_remove", "RII_remove:unmatched",
                                                "RI_remove", "RI_remove", "RI_remove", "RI_remove"]},
        {"fact": "sequence_ends_trivial", "expected": True},
        {"fact": "trace", "config": P, "expected": [1, -1, 0, 0, 0, 0, 0, 0]},
        {"fact": "trace", "config": M, "expected": [3, 1, 1, 0, 0, 0, 0, 0]},
        {"fact": "trace", "config": eps(P), "expected": [11, 9, 9, 8, 6, 4, 2, 0]},
        {"fact": "trace", "config": eps(M), "expected": [13, 11, 10, 8, 6, 4, 2, 0]},
    ]
    return {
        "name": "U",
        "description": "8-crossing diagram of the unknot with no reducing monogon or bigon, "
                       "unknotted by RIII, two RII and four RI moves",
        "diagram": diagram_to_json(U),
        "crossing_names": names,
        "sequence": [e.to_text() for e in seq],
        "construction": {"from": "unknot", "moves": U_HISTORY},
        "manifest": manifest,
    }


# ------------------------------------------------------------------ 2-component example


EX_HISTORY = ["R2+ arc=-1 side=L arc2=-2 side2=L over=1", "R2+ arc=1 side=L arc2=3 side2=L over=2",
              "R1+ arc=3 side=R sign=-", "R1+ arc=9 side=R sign=+", "R3 face=0", "R3 face=4"]


def build_example():
    D = replay(LinkDiagram.unknot(2), EX_HISTORY)[-1]
    comp = [(D.crossing(x).over_component, D.crossing(x).under_component) for x in range(D.c)]
    a = next(x for x in range(D.c) if comp[x] == (1, 1))
    f = next(x for x in range(D.c) if comp[x] == (2, 2))
    names = {"a": a}
    names.update(zip("bcde", [x for x in range(D.c) if comp[x][0] != comp[x][1]]))
    names["f"] = f
    S = {"S": [[-1, 0], [0, 1]], "T": [[-1, 0], [0, 1]]}
    manifest = [
        {"fact": "crossings", "expected": 6},
        {"fact": "components", "expected": 2},
        {"fact": "link", "expected": "trivial-2"},
        {"fact": "sign", "crossing": "a", "expected": -1},
        {"fact": "sign", "crossing": "f", "expected": 1},
        {"fact": "self_crossing", "crossing": "a", "expected": 1},
        {"fact": "self_crossing", "crossing": "f", "expected": 2},
        {"fact": "smoothing", "crossing": "a", "mode": "irregular", "expected": "T(2,4)"},
        {"fact": "smoothing_u", "crossing": "a", "mode": "irregular", "expected": 2},
        {"fact": "smoothing", "crossing": "f", "mode": "regular", "expected": "Hopf#Hopf"},
        {"fact": "smoothing_u", "crossing": "f", "mode": "regular", "expected": 2},
        {"fact": "iu", "config": S, "expected": 4},
        {"fact": "bound", "config": S, "kind": "RII_RIII_only", "expected": 2},
    ]
    for x in "bcde":
        manifest.append({"fact": "self_crossing", "crossing": x, "expected": 0})
    return {
        "name": "example",
        "description": "6-crossing diagram of the trivial 2-component link with iu = 4 "
                       "for S = T = diag(-1, +1)",
        "diagram": diagram_to_json(D),
        "crossing_names": names,
        "construction": {"from": "trivial-2", "moves": EX_HISTORY},
        "manifest": manifest,
    }


# ------------------------------------------------------------------ RIII pairs


def riii_pair(name_, D, face, description, facts, partner_facts, deltas, link):
    e = MoveEvent.riii(face)
    E = apply(D, e)
    back = next(b for b in removing_moves(E, (RIII,)) if canonical_form(apply(E, b)) == canonical_form(D))
    z = trigon_crossings(D, face)[2]
    zE = trigon_crossings(E, back.site)[2]
    manifest = [{"fact": "link", "expected": link}, {"fact": "top_bottom", "crossing": "z", "expected": True}]
    manifest += facts
    manifest += [dict(f, target="partner") for f in
                 [{"fact": "link", "expected": link}, {"fact": "top_bottom", "crossing": "z", "expected": True}]
                 + partner_facts]
    manifest += [{"fact": "partner_delta", "config": cfg, "expected": v} for cfg, v in deltas]
    return {
        "name": name_,
        "description": description,
        "diagram": diagram_to_json(D),
        "crossing_names": {"z": z},
        "move": e.to_text(),
        "partner": {"diagram": diagram_to_json(E), "crossing_names": {"z": zE}, "move": back.to_text()},
        "manifest": manifest,
    }


def sm(x, mode, expected, u_=None):
    out = [{"fact": "smoothing", "crossing": x, "mode": mode, "expected": expected}] if expected else []
    if u_ is not None:
        out.append({"fact": "smoothing_u", "crossing": x, "mode": mode, "expected": u_})
    return out


def build_de():
    D = LinkDiagram.from_pd(
        [(8, 1, 9, 2), (12, 8, 13, 7), (6, 12, 7, 11), (15, 10, 16, 11), (5, 1, 6, 16), (9, 5, 10, 4),
         (13, 2, 14, 3), (14, 4, 15, 3)], [(1, 16)])
    return riii_pair(
        "DE", D, 2, "two unknot diagrams related by an RIII move that changes iu(-1) by one",
        [{"fact": "crossings", "expected": 8}] + sm("z", "regular", None, 1) + sm("z", "irregular", "5_2", 1),
        sm("z", "regular", "Hopf", 1) + sm("z", "irregular", "unknot", 0),
        [(P, 0), (M, 1)], "unknot")


def build_fg():
    F = LinkDiagram.from_pd(
        [(4, 15, 5, 16), (16, 11, 17, 12), (10, 17, 11, 18), (18, 9, 19, 10), (8, 19, 9, 20), (20, 7, 21, 8),
         (6, 21, 7, 22), (22, 5, 1, 6), (12, 3, 13, 4), (2, 13, 3, 14), (1, 15, 2, 14)], [(1, 22)])
    d = riii_pair(
        "FG", F, 1, "two twist-knot diagrams related by an RIII move that changes iu(-1) by two",
        [{"fact": "u", "expected": 1}] + sm("z", "regular", "T(2,8)", 4) + sm("z", "irregular", "10_2", 3)
        + [{"fact": "smoothing_abs_signature", "crossing": "z", "mode": "irregular", "expected": 6}],
        [{"fact": "u", "expected": 1}] + sm("z", "regular", "T(2,6)#3_1*", 4) + sm("z", "irregular", "3_1", 1),
        [(P, 0), (M, 2)], None)
    d["manifest"] = [f for f in d["manifest"] if f.get("fact") != "link"]
    return d


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    ok = True
    for build in (build_u, build_example, build_de, build_fg):
        fx = build()
        rows = check_fixture(Fixture.from_json(fx))
        bad = [r for r in rows if not r.passed]
        for r in bad:
            print(f"{fx['name']}: FAIL {r.label}: got {r.got}, expected {r.expected}", file=sys.stderr)
        ok &= not bad
        (OUT / f"{fx['name']}.json").write_text(json.dumps(fx, indent=1) + "\n")
        print(f"{fx['name']}: {len(rows) - len(bad)}/{len(rows)} facts hold")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
