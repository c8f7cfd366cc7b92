"""Independent reference computations used to check the library."""

from __future__ import annotations

import itertools
from collections import deque

from knotiu.diagram import Dart, LinkDiagram, faces, positions
from knotiu.linalg import det, signature_nullity
from knotiu.poly import LaurentPoly

DELTA = LaurentPoly({2: -1, -2: -1})


def bracket_bruteforce(d: LinkDiagram) -> LaurentPoly:
    """Kauffman bracket straight from the definition, state by state."""
    free = sum(1 for r in d.components if r is None)
    if not d.crossings:
        return DELTA ** (free - 1)
    total = LaurentPoly()
    for state in itertools.product((0, 1), repeat=d.c):
        parent = {}

        def find(u):
            while parent.get(u, u) != u:
                u = parent[u]
            return u

        for (a, b, c, e), s in zip(d.crossings, state):
            for u, v in (((a, b), (c, e)) if s == 0 else ((a, e), (b, c))):
                parent[find(u)] = find(v) if find(u) != find(v) else find(v)
        loops = len({find(a) for a in range(1, d.arc_count + 1)})
        na = state.count(0)
        total = total + LaurentPoly.monomial(na - (d.c - na)) * DELTA ** (loops - 1 + free)
    return total


def corner_faces(d: LinkDiagram):
    """corner[i][k]: face index at crossing i between slots k-1 and k."""
    fo = {dt: f for f, cyc in enumerate(faces(d)) for dt in cyc}
    pos = positions(d)
    out = []
    for i, x in enumerate(d.crossings):
        row = []
        for k in range(4):
            a = x[k]
            row.append(fo[Dart(a, pos[a][1] == (i, k))])
        out.append(row)
    return out


def checkerboard(d: LinkDiagram) -> dict[int, int]:
    fs = faces(d)
    fo = {dt: f for f, cyc in enumerate(fs) for dt in cyc}
    adj = {f: set() for f in range(len(fs))}
    for a in range(1, d.arc_count + 1):
        f, g = fo[Dart(a, True)], fo[Dart(a, False)]
        adj[f].add(g)
        adj[g].add(f)
    color = {0: 0}
    q = deque([0])
    while q:
        f = q.popleft()
        for g in adj[f]:
            if g not in color:
                color[g] = 1 - color[f]
                q.append(g)
            elif color[g] == color[f]:
                raise AssertionError("faces are not 2-colourable")
    return color


def goeritz(d: LinkDiagram):
    """Goeritz matrix (white = colour of face 0) and the correction term mu,
    following Gordon and Litherland; returns (G, mu)."""
    color = checkerboard(d)
    corners = corner_faces(d)
    white = sorted(f for f, c in color.items() if c == 0)
    idx = {f: k for k, f in enumerate(white)}
    n = len(white)
    g = [[0] * n for _ in range(n)]
    mu = 0
    for i in range(d.c):
        cf = corners[i]
        geom = color[cf[0]] == 0
        w1, w2 = (cf[0], cf[2]) if geom else (cf[1], cf[3])
        eta = -1 if geom else 1
        # oriented smoothing merges corners 0/2 at a positive crossing, 1/3 at a negative one
        merges_white = (d.signs[i] == 1) == geom
        if not merges_white:
            mu += eta
        if w1 != w2:
            a, b = idx[w1], idx[w2]
            g[a][b] -= eta
            g[b][a] -= eta
    for a in range(n):
        g[a][a] = -sum(g[a][b] for b in range(n) if b != a)
    reduced = [row[1:] for row in g[1:]]
    return reduced, mu


def gl_signature(d: LinkDiagram) -> int:
    g, mu = goeritz(d)
    s, _ = signature_nullity(g)
    return s - mu


def goeritz_determinant(d: LinkDiagram) -> int:
    g, _ = goeritz(d)
    return abs(det(g))
