"""Search for the two-component example: a trivial 2-component link with one
negative self-crossing a on L1, one positive self-crossing f on L2, four
crossings between the components, Ď_a = T(2,4) and D_f = Hopf#Hopf."""
import sys, time
from knotiu.diagram import LinkDiagram, canonical_form
from knotiu.moves import MoveEvent, apply, enumerate_moves, removing_moves, RII_ADD, RI_ADD, RIII
from knotiu.smoothing import regular_smooth, irregular_smooth
from knotiu.identify import identify


def dedupe(ds):
    seen = {}
    for d, h in ds:
        seen.setdefault(canonical_form(d), (d, h))
    return list(seen.values())


def inter_rii(d):
    for e in enumerate_moves(d):
        if e.kind == RII_ADD:
            a, b = e.site, e.param("arc2")
            if d.component_of(a) != d.component_of(b):
                yield e


def kinks(d, comp, sign):
    arcs = [a for a in range(1, d.arc_count + 1) if d.component_of(a) == comp] or [-comp]
    for a in arcs:
        for side in "LR":
            yield MoveEvent.ri_add(a, side, sign)


def check(d):
    own = [[x for x in range(d.c) if d.crossing(x).over_component == d.crossing(x).under_component == k]
           for k in (1, 2)]
    if len(own[0]) != 1 or len(own[1]) != 1:
        return None
    a, f = own[0][0], own[1][0]
    if d.signs[a] != -1 or d.signs[f] != 1:
        return None
    ia = identify(irregular_smooth(d, a).diagram)
    rf = identify(regular_smooth(d, f).diagram)
    if ia and rf and ia.name == "T(2,4)" and rf.name == "Hopf#Hopf":
        return a, f
    return None


def main():
    t0 = time.time()
    u2 = LinkDiagram.unknot(2)
    level = []
    for s1 in "LR":
        for s2 in "LR":
            for over in (1, 2):
                e = MoveEvent.rii_add(-1, s1, -2, s2, over)
                level.append((apply(u2, e), (e,)))
    level = dedupe(level)
    for step in range(1):
        level = dedupe([(apply(d, e), h + (e,)) for d, h in level for e in inter_rii(d)])
    print("after RII", len(level), file=sys.stderr)
    level = dedupe([(apply(d, e), h + (e,)) for d, h in level for e in kinks(d, 1, -1)])
    level = dedupe([(apply(d, e), h + (e,)) for d, h in level for e in kinks(d, 2, 1)])
    print("seeds", len(level), time.time() - t0, file=sys.stderr)
    seen = {canonical_form(d) for d, _ in level}
    frontier = level
    for depth in range(6):
        hits = [(d, h) for d, h in frontier if check(d)]
        for d, h in hits[:3]:
            print("FOUND", depth, d.crossings, d.components, d.signs, [e.to_text() for e in h], flush=True)
        if hits:
            return
        nxt = []
        for d, h in frontier:
            for e in removing_moves(d, (RIII,)):
                d2 = apply(d, e)
                k = canonical_form(d2)
                if k not in seen:
                    seen.add(k)
                    nxt.append((d2, h + (e,)))
        frontier = nxt
        print("depth", depth + 1, len(frontier), time.time() - t0, file=sys.stderr)


if __name__ == "__main__":
    main()
