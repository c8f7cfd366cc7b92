"""Backward search for the 8-crossing unknot diagram U.

U -> RIII -> RII- -> RII- (unmatched) -> four RI- -> trivial.  We start from
all 4-crossing diagrams made of four positive kinks and undo the moves.
"""
import sys, time
from knotiu.diagram import LinkDiagram, canonical_form, faces
from knotiu.moves import (MoveEvent, apply, enumerate_moves, removing_moves, RII_ADD, RIII,
                          RI_REMOVE, RII_REMOVE, classify_r2, inverse_event)
from knotiu.invariants import iu, IuConfig, ilk, g, g0

P, M = IuConfig.knot(1), IuConfig.knot(-1)


def dedupe(ds):
    seen = {}
    for d, hist in ds:
        k = canonical_form(d)
        if k not in seen:
            seen[k] = (d, hist)
    return list(seen.values())


def kinks():
    level = [(LinkDiagram.unknot(1), ())]
    for _ in range(4):
        nxt = []
        for d, h in level:
            arcs = list(range(1, d.arc_count + 1)) or [-1]
            for a in arcs:
                for side in "LR":
                    e = MoveEvent.ri_add(a, side, 1)
                    nxt.append((apply(d, e), h + (e,)))
        level = dedupe(nxt)
    return level


def rii_adds(d, unmatched_only):
    for e in enumerate_moves(d):
        if e.kind != RII_ADD:
            continue
        if unmatched_only and e.matched:
            continue
        try:
            yield e, apply(d, e)
        except Exception:
            continue


def no_small_faces(d):
    return not removing_moves(d, (RI_REMOVE, RII_REMOVE))


def main():
    t0 = time.time()
    u3 = kinks()
    print("U3 classes", len(u3), file=sys.stderr)
    u2 = []
    for d, h in u3:
        for e, d2 in rii_adds(d, True):
            u2.append((d2, h + (e,)))
    u2 = dedupe(u2)
    u2 = [(d, h) for d, h in u2 if iu(d, P).value == 0 and iu(d, M).value == 1]
    print("U2 classes", len(u2), time.time() - t0, file=sys.stderr)
    u1 = []
    for d, h in u2:
        for e, d1 in rii_adds(d, False):
            if removing_moves(d1, (RIII,)):
                u1.append((d1, h + (e,)))
    u1 = dedupe(u1)
    print("U1 candidates", len(u1), time.time() - t0, file=sys.stderr)
    found = []
    for d1, h in u1:
        for e in removing_moves(d1, (RIII,)):
            d0 = apply(d1, e)
            if not no_small_faces(d0):
                continue
            found.append((d0, d1, h + (e,)))
    found = dedupe([((d0), (d1, h)) for d0, d1, h in found])
    print("U shape candidates", len(found), time.time() - t0, file=sys.stderr)
    good = []
    for d0, (d1, h) in found:
        if iu(d1, P).value != -1 or iu(d1, M).value != 1:
            continue
        if iu(d0, P).value != 1 or iu(d0, M).value != 3:
            continue
        good.append((d0, h))
        print("FOUND", d0.crossings, d0.signs, g(ilk(d0)), [x.to_text() for x in h], flush=True)
    print("total", len(good), time.time() - t0, file=sys.stderr)


if __name__ == "__main__":
    main()
