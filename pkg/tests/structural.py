"""Smoothing facts behind the invariance proof, as reusable checks."""

from __future__ import annotations

import itertools

from knotiu.diagram import canonical_form, crossing_change, permute_components
from knotiu.identify import fingerprint
from knotiu.moves import (RII_REMOVE, RIII, apply, bigon_crossings, classify_r2, removing_moves, simplify,
                          trigon_crossings)
from knotiu.smoothing import irregular_smooth, regular_smooth


def unoriented(d):
    """Key ignoring orientations and the numbering of components."""
    keys = (canonical_form(permute_components(d, p), oriented=False)
            for p in itertools.permutations(range(1, d.n + 1)))
    return min(keys, key=repr)


def created_bigon(d, E):
    """The RII_remove event of E undoing an RII_add applied to d."""
    key = canonical_form(d)
    for b in removing_moves(E, (RII_REMOVE,)):
        if canonical_form(apply(E, b)) == key:
            return b
    raise AssertionError("no bigon undoes the move")


def rii_pair_fact(d, e) -> str:
    """Check the RII fact for ``e`` (an RII_add on ``d``); return which one held.

    matched: the irregular smoothings at the two corners are the same diagram
    after simplification.  unmatched: one crossing change takes one irregular
    smoothing to the other, and the regular smoothings agree after
    simplification.
    """
    E = apply(d, e)
    b = created_bigon(d, E)
    x, y = bigon_crossings(E, b.site)
    ix, iy = irregular_smooth(E, x).diagram, irregular_smooth(E, y).diagram
    if classify_r2(E, b) == "matched":
        assert unoriented(simplify(ix)[0]) == unoriented(simplify(iy)[0])
        return "matched"
    target = unoriented(iy)
    assert any(unoriented(crossing_change(ix, [k])) == target for k in range(ix.c))
    rx, ry = regular_smooth(E, x).diagram, regular_smooth(E, y).diagram
    assert unoriented(simplify(rx)[0]) == unoriented(simplify(ry)[0])
    return "unmatched"


def riii_fact(d, e) -> None:
    """x and y smoothings (both modes) have equal fingerprints across an RIII."""
    E = apply(d, e)
    key = canonical_form(d)
    back = next(b for b in removing_moves(E, (RIII,)) if canonical_form(apply(E, b)) == key)
    xd, yd, _ = trigon_crossings(d, e.site)
    xe, ye, _ = trigon_crossings(E, back.site)
    for smooth in (regular_smooth, irregular_smooth):
        for a, b in ((xd, xe), (yd, ye)):
            assert fingerprint(smooth(d, a).diagram) == fingerprint(smooth(E, b).diagram)
