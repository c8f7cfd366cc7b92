"""Search for RIII witnesses: a knot diagram D with an RIII face whose
top/bottom crossing z has prescribed smoothings before and after the move.

    python3 scripts/search_riii.py DE      # unknot example
    python3 scripts/search_riii.py FG      # twist knot example
"""
import random
import sys
import time

from knotiu.braids import plat_closure
from knotiu.diagram import LinkDiagram, canonical_form, linking_matrix, mirror
from knotiu.identify import identify
from knotiu.bracket import determinant
from knotiu.moves import (MoveEvent, apply, enumerate_moves, removing_moves, RI_ADD, RII_ADD, RIII,
                          trigon_crossings)
from knotiu.smoothing import irregular_smooth, regular_smooth
from knotiu.unknotting import u


def name(d):
    e = identify(d)
    return e.name if e else None


def partner(d, e):
    """The RIII face of E = apply(d, e) undoing e, and E."""
    E = apply(d, e)
    target = canonical_form(d)
    for back in removing_moves(E, (RIII,)):
        if canonical_form(apply(E, back)) == target:
            return E, back
    raise RuntimeError("no inverse RIII")


def smooth_pair(d, z):
    return regular_smooth(d, z).diagram, irregular_smooth(d, z).diagram


def check_de(D, e):
    _, _, z = trigon_crossings(D, e.site)
    Dz, Dcz = smooth_pair(D, z)
    if determinant(Dcz) != 7:
        return None
    E, back = partner(D, e)
    _, _, zE = trigon_crossings(E, back.site)
    Ez, Ecz = smooth_pair(E, zE)
    if name(Dcz) == "5_2" and name(Ez) == "Hopf" and name(Ecz) == "unknot" and u(Dz).exact and u(Dz).lo == 1:
        return E, back
    return None


def check_fg(F, e):
    _, _, z = trigon_crossings(F, e.site)
    Fz, Fcz = smooth_pair(F, z)
    if abs(linking_matrix(Fz)[0][1]) != 4 or determinant(Fcz) != 23:
        return None
    G, back = partner(F, e)
    _, _, zG = trigon_crossings(G, back.site)
    Gz, Gcz = smooth_pair(G, zG)
    if (name(Fz), name(Fcz), name(Gcz)) == ("T(2,8)", "10_2", "3_1") and name(Gz) and name(Gz).startswith("T(2,6)#3_1"):
        return G, back
    return None


def adds(d, kinds=(RII_ADD,)):
    for m in enumerate_moves(d):
        if m.kind in kinds:
            yield m


def scan(level, check):
    for d, h in level:
        for e in removing_moves(d, (RIII,)):
            r = check(d, e)
            if r:
                E, back = r
                print("FOUND", d.crossings, d.components, [x.to_text() for x in h + (e,)], flush=True)
                return d, h, e
    return None


def dedupe(ds):
    seen = {}
    for d, h in ds:
        seen.setdefault(canonical_form(d), (d, h))
    return list(seen.values())


def search_de():
    rng = random.Random(1)
    start = LinkDiagram.unknot(1)
    t0 = time.time()
    level = [(start, ())]
    for depth in range(3):
        level = dedupe([(apply(d, m), h + (m,)) for d, h in level for m in adds(d, (RII_ADD,))])
        print("depth", depth + 1, len(level), time.time() - t0, file=sys.stderr)
        if scan(level, check_de):
            return
        # one RIII layer mixes things up
        mixed = dedupe([(apply(d, m), h + (m,)) for d, h in level for m in removing_moves(d, (RIII,))])
        print(" mixed", len(mixed), file=sys.stderr)
        if scan(mixed, check_de):
            return
    # random deeper walks
    for trial in range(200000):
        d, h = start, ()
        while d.c < 8:
            ms = [m for m in enumerate_moves(d) if m.kind in (RII_ADD, RI_ADD, RIII)]
            m = rng.choice(ms)
            d, h = apply(d, m), h + (m,)
        if scan([(d, h)], check_de):
            return


def twist(n):
    return plat_closure([2] * n + [-1, 2])


def search_fg():
    t0 = time.time()
    for n in range(5, 10):
        for base in (twist(n), mirror(twist(n))):
            level = [(base, ())]
            for depth in range(2):
                level = dedupe([(apply(d, m), h + (m,)) for d, h in level for m in adds(d)])
                print("n", n, "depth", depth + 1, len(level), time.time() - t0, file=sys.stderr)
                if scan(level, check_fg):
                    print("base twist", n, base.crossings, base.components, flush=True)
                    return




def search_de2():
    """Insert a crossing into a 5_2 diagram so that the result is an unknot
    diagram, then look for RIII faces (after at most one more RII)."""
    from knotiu.braids import braid_closure
    from knotiu.smoothing import smooth
    from knotiu.moves import simplify
    t0 = time.time()
    bases = [plat_closure([2, 2, 2, -1, 2]), braid_closure([1, 1, 1, 2, -1, 2])]
    bases += [mirror(b) for b in bases]
    cands = []
    for K in bases:
        for m in adds(K):
            K2 = apply(K, m)
            for w in range(K2.c):
                for mode in ("regular", "irregular"):
                    D = smooth(K2, w, mode).diagram
                    if D.n == 1 and D.c == K.c + 1 and not simplify(D)[0].crossings:
                        cands.append((D, (m,)))
    cands = dedupe(cands)
    print("unknot insertions", len(cands), time.time() - t0, file=sys.stderr)
    if scan(cands, check_de):
        return
    for depth in range(2):
        cands = dedupe([(apply(d, m), h + (m,)) for d, h in cands for m in adds(d, (RII_ADD, RIII))])
        print("depth", depth + 1, len(cands), time.time() - t0, file=sys.stderr)
        if scan(cands, check_de):
            return


def search_fg2():
    """Join the two components of a T(2,8) diagram by a new crossing so that
    its regular smoothing gives the link back, then look for RIII faces after
    one or two more RII moves."""
    from knotiu.braids import braid_closure
    from knotiu.diagram import reverse_component
    from knotiu.smoothing import smooth
    t0 = time.time()
    b = braid_closure([1] * 8)
    bases = [b, reverse_component(b, 2)]
    bases += [mirror(x) for x in bases]
    cands = []
    for L in bases:
        for m in adds(L):
            if L.component_of(m.site) == L.component_of(m.param("arc2")):
                continue
            L2 = apply(L, m)
            for w in range(L2.c):
                F = smooth(L2, w, "regular").diagram
                if F.n == 1:
                    cands.append((F, (m,)))
    cands = dedupe(cands)
    print("joined", len(cands), time.time() - t0, file=sys.stderr)
    cands = [(d, h) for d, h in cands if u(d).exact and u(d).lo == 1]
    print("u = 1", len(cands), time.time() - t0, file=sys.stderr)
    if scan(cands, check_fg):
        return
    for depth in range(2):
        cands = dedupe([(apply(d, m), h + (m,)) for d, h in cands for m in adds(d, (RII_ADD,))])
        print("depth", depth + 1, len(cands), time.time() - t0, file=sys.stderr)
        if scan(cands, check_fg):
            return


if __name__ == "__main__":
    {"DE": search_de, "DE2": search_de2, "FG": search_fg, "FG2": search_fg2}[sys.argv[1]]()
