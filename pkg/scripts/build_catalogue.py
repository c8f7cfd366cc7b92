"""Regenerate src/knotiu/data/catalogue.json from braid and plat words.

Each entry's determinant is checked against the table value and all
fingerprints are required to be pairwise distinct.

    python3 scripts/build_catalogue.py
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

from knotiu.braids import braid_closure, plat_closure
from knotiu.diagram import LinkDiagram
from knotiu.identify import fingerprint
from knotiu.io import diagram_to_json

OUT = Path(__file__).resolve().parents[1] / "src" / "knotiu" / "data" / "catalogue.json"

TABLE = "Rolfsen table; unknotting number as listed in KnotInfo"
LK = "lower bound sum |lk|, realised by |lk| crossing changes"


def cf_plat(cf):
    """4-plat word of a continued fraction of odd length."""
    assert len(cf) % 2 == 1
    w = []
    for i, a in enumerate(cf):
        w += [2] * a if i % 2 == 0 else [-1] * a
    return w


# name, kind, word, determinant, u, citation
ENTRIES = [
    ("3_1", "braid", [1, 1, 1], 3, 1, TABLE),
    ("4_1", "braid", [1, -2, 1, -2], 5, 1, TABLE),
    ("5_1", "braid", [1] * 5, 5, 2, TABLE + "; signature bound |sigma|/2 = 2"),
    ("5_2", "plat", cf_plat([3, 1, 1]), 7, 1, TABLE),
    ("6_1", "plat", cf_plat([4, 1, 1]), 9, 1, TABLE),
    ("6_2", "plat", cf_plat([3, 1, 2]), 11, 1, TABLE),
    ("6_3", "plat", cf_plat([2, 1, 1, 1, 1]), 13, 1, TABLE),
    ("7_1", "braid", [1] * 7, 7, 3, TABLE + "; signature bound"),
    ("7_2", "plat", cf_plat([5, 1, 1]), 11, 1, TABLE),
    ("7_3", "plat", cf_plat([4, 2, 1]), 13, 2, TABLE + "; signature bound"),
    ("7_4", "plat", cf_plat([3, 1, 3]), 15, 2, "Lickorish 1985, linking form obstruction"),
    ("7_5", "plat", cf_plat([3, 2, 2]), 17, 2, TABLE + "; signature bound"),
    ("7_6", "plat", cf_plat([2, 1, 2, 1, 1]), 19, 1, TABLE),
    ("7_7", "plat", cf_plat([2, 1, 1, 1, 2]), 21, 1, TABLE),
    ("10_2", "plat", cf_plat([7, 1, 2]), 23, 3, "signature -6 gives u >= 3 (Murasugi 1965); 3 changes suffice"),
    ("3_1#3_1", "braid", [1, 1, 1, 2, 2, 2], 9, 2, "granny knot; signature bound"),
    ("3_1#3_1*", "braid", [1, 1, 1, -2, -2, -2], 9, 2, "square knot; Scharlemann 1985 (composite knots have u >= 2)"),
    ("Hopf", "braid", [1, 1], 2, 1, LK),
    ("T(2,4)", "braid", [1] * 4, 4, 2, LK),
    ("T(2,6)", "braid", [1] * 6, 6, 3, LK),
    ("T(2,8)", "braid", [1] * 8, 8, 4, LK),
    ("Whitehead", "braid", [1, 1, -2, 1, -2], 8, 1, "non-split, one crossing change splits it"),
    ("Hopf#Hopf", "braid", [1, 1, 2, 2], 4, 2, LK),
    ("5_2#Hopf", "braid", [1, 1, 1, 2, -1, 2, 3, 3], 14, 2,
     "lk bound plus the knotted component; one change each"),
    ("T(2,6)#3_1", "braid", [1] * 6 + [2] * 3, 18, 4,
     "lk = 3 plus the trefoil component; inter-component changes keep component types"),
    ("T(2,6)#3_1*", "braid", [1] * 6 + [-2] * 3, 18, 4,
     "lk = 3 plus the trefoil component; inter-component changes keep component types"),
]

TRIVIAL = [1, 2, 3, 4]


def build() -> dict:
    from knotiu.bracket import determinant

    out = []
    seen = {}
    for k in TRIVIAL:
        d = LinkDiagram.unknot(k)
        name = "unknot" if k == 1 else f"trivial-{k}"
        out.append((name, d, 0, "crossing-free diagram"))
    for name, kind, word, det, u, cite in ENTRIES:
        d = braid_closure(word) if kind == "braid" else plat_closure(word)
        got = determinant(d)
        if got != det:
            sys.exit(f"{name}: determinant {got}, expected {det}")
        out.append((name, d, u, cite))
    entries = []
    for name, d, u, cite in out:
        fp = fingerprint(d)
        if fp in seen:
            sys.exit(f"fingerprint clash: {name} and {seen[fp]}")
        seen[fp] = name
        entries.append({
            "name": name,
            "diagram": diagram_to_json(d),
            "u": u,
            "citation": cite,
            "fingerprint": fp.to_json(),
        })
    return {"version": 1, "entries": entries}


if __name__ == "__main__":
    data = build()
    OUT.write_text(json.dumps(data, indent=1) + "\n")
    print(f"wrote {len(data['entries'])} entries to {OUT}")
