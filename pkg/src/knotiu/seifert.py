"""Seifert matrices, signature and nullity.

A connected diagram is first turned into a closed braid with Vogel moves
(unmatched RII moves between incoherent Seifert circles sharing a face).
The braid word is then read off along a ray through the nested Seifert
circles, and the Seifert matrix of the standard braid surface (disks joined
by half-twisted bands) is assembled.  Split diagrams are handled piece by
piece; every extra piece adds a null generator, as for a surface connected
by tubes.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from graphlib import CycleError, TopologicalSorter

from .diagram import Dart, LinkDiagram, faces, pieces, positions, sublink
from .linalg import signature_nullity, symmetrize

VOGEL_LIMIT = 200


@dataclass(frozen=True)
class SeifertData:
    matrix: tuple[tuple[int, ...], ...]
    genus_bound: int
    signature: int
    nullity: int
    circles: int = 0
    braid_word: tuple[int, ...] = ()

    @property
    def order(self) -> int:
        return len(self.matrix)


def seifert_circles(d: LinkDiagram) -> dict[int, int]:
    """Map arc -> Seifert circle index (circles numbered by least arc)."""
    nxt = {}
    for a, (_, (cid, s)) in positions(d).items():
        sign = d.signs[cid]
        if s == 0:
            out = 1 if sign == 1 else 3
        else:
            out = 2
        nxt[a] = d.crossings[cid][out]
    circ: dict[int, int] = {}
    count = 0
    for a in sorted(nxt):
        if a in circ:
            continue
        b = a
        while b not in circ:
            circ[b] = count
            b = nxt[b]
        count += 1
    return circ


def _defect(d: LinkDiagram, circ):
    for cyc in faces(d):
        if cyc[0].arc < 0:
            continue
        for i, da in enumerate(cyc):
            for db in cyc[i + 1:]:
                if da.forward == db.forward and circ[da.arc] != circ[db.arc]:
                    return da, db
    return None


def braid_form(d: LinkDiagram) -> LinkDiagram:
    """Vogel moves until every face is coherent; ``d`` must be connected."""
    from .moves import MoveEvent, apply

    for _ in range(VOGEL_LIMIT):
        circ = seifert_circles(d)
        bad = _defect(d, circ)
        if bad is None:
            return d
        da, db = bad
        side = "L" if da.forward else "R"
        d = apply(d, MoveEvent.rii_add(da.arc, side, db.arc, side, 1))
    raise RuntimeError("Vogel moves did not terminate")


def braid_word(d: LinkDiagram) -> tuple[int, list[int]]:
    """Strand count and braid word (signed generator indices) of a connected
    diagram.  Generator ``i`` joins the i-th and (i+1)-th nested circles and
    its sign is the crossing sign."""
    d = braid_form(d)
    circ = seifert_circles(d)
    m = max(circ.values()) + 1
    nbrs: dict[int, set[int]] = {k: set() for k in range(m)}
    xcirc = {}
    for cid, x in enumerate(d.crossings):
        # the circle entering on the under strand and the one leaving on it
        pair = (circ[x[0]], circ[x[2]])
        xcirc[cid] = pair
        if pair[0] != pair[1]:
            nbrs[pair[0]].add(pair[1])
            nbrs[pair[1]].add(pair[0])
    ends = [k for k in range(m) if len(nbrs[k]) <= 1]
    if any(len(v) > 2 for v in nbrs.values()) or (m > 1 and len(ends) != 2):
        raise RuntimeError("Seifert graph is not a path after Vogel moves")
    # nesting order along the path
    order = [min(ends)]
    while len(order) < m:
        nxt = [k for k in nbrs[order[-1]] if k not in order]
        order.append(nxt[0])
    level = {k: i for i, k in enumerate(order)}
    # a ray: faces F_0 (inside the first circle), F_1, ... crossing each circle once
    fs = faces(d)
    face_of = {dt: k for k, cyc in enumerate(fs) for dt in cyc}
    pure = [k for k, cyc in enumerate(fs) if all(circ[dt.arc] == order[0] for dt in cyc)]
    cur = pure[0]
    cuts = {}
    for lv in range(m):
        arcs = sorted(dt.arc for dt in fs[cur] if circ[dt.arc] == order[lv])
        a = arcs[0]
        cuts[order[lv]] = a
        here = next(dt for dt in fs[cur] if dt.arc == a)
        cur = face_of[Dart(a, not here.forward)]
    # crossings along each circle, starting after its cut
    pos = positions(d)
    graph: dict[int, set[int]] = {cid: set() for cid in range(d.c)}
    nxt_arc = {}
    for a in pos:
        cid, s = pos[a][1]
        sign = d.signs[cid]
        out = (1 if sign == 1 else 3) if s == 0 else 2
        nxt_arc[a] = d.crossings[cid][out]
    for k in range(m):
        start = cuts[k]
        a = start
        seq = []
        while True:
            seq.append(pos[a][1][0])
            a = nxt_arc[a]
            if a == start:
                break
        for u, v in zip(seq, seq[1:]):
            graph[v].add(u)
    try:
        linear = list(TopologicalSorter(graph).static_order())
    except CycleError as exc:  # pragma: no cover - indicates a bug
        raise RuntimeError("inconsistent crossing order in braid reading") from exc
    word = []
    for cid in linear:
        lo = min(level[xcirc[cid][0]], level[xcirc[cid][1]])
        word.append((lo + 1) * d.signs[cid])
    return m, word


def braid_seifert_matrix(word) -> list[list[int]]:
    """Seifert matrix of the closure of a braid word whose generators all occur."""
    x = list(word)
    nxt = []
    for j in range(len(x)):
        nxt.append(next((k for k in range(j + 1, len(x)) if abs(x[k]) == abs(x[j])), None))
    gens = [j for j in range(len(x)) if nxt[j] is not None]
    idx = {j: r for r, j in enumerate(gens)}
    v = [[0] * len(gens) for _ in gens]
    for i in gens:
        hi = nxt[i]
        for j in gens:
            if j < i:
                continue
            if j == i:
                s = x[i] + x[hi]
                v[idx[i]][idx[i]] = -(s > 0) + (s < 0)
            elif hi < j or hi > nxt[j]:
                # disjoint or nested spans do not link
                continue
            elif hi == j:
                if x[j] > 0:
                    v[idx[j]][idx[i]] = 1
                else:
                    v[idx[i]][idx[j]] = -1
            elif abs(abs(x[i]) - abs(x[j])) > 1:
                continue
            elif abs(x[i]) - abs(x[j]) == 1:
                v[idx[j]][idx[i]] = -1
            elif abs(x[j]) - abs(x[i]) == 1:
                v[idx[i]][idx[j]] = 1
    return v


def _connected_matrix(d: LinkDiagram) -> tuple[list[list[int]], int, tuple[int, ...]]:
    if not d.crossings:
        return [], 1, ()
    m, word = braid_word(d)
    return braid_seifert_matrix(word), m, tuple(word)


@functools.lru_cache(maxsize=4096)
def seifert(d: LinkDiagram) -> SeifertData:
    """Seifert matrix of an oriented diagram with its signature and nullity.

    The crossing-free unknot gives the empty matrix with signature 0 and
    nullity 0.
    """
    groups = pieces(d)
    blocks = []
    circles = 0
    word: tuple[int, ...] = ()
    for grp in groups:
        if not grp:
            blocks.append([])
            circles += 1
            continue
        comps = sorted({d.component_of(a) for cid in grp for a in d.crossings[cid]})
        part = sublink(d, comps)
        mat, m, w = _connected_matrix(part)
        blocks.append(mat)
        circles += m
        if len(groups) == 1:
            word = w
    size = sum(len(b) for b in blocks) + len(groups) - 1
    v = [[0] * size for _ in range(size)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, val in enumerate(row):
                v[off + i][off + j] = val
        off += len(b)
    sig, nul = signature_nullity(symmetrize(v))
    genus2 = size - (d.n - 1)
    return SeifertData(tuple(tuple(r) for r in v), max(genus2 // 2, 0), sig, nul, circles, word)


def signature(d: LinkDiagram) -> int:
    return seifert(d).signature


def nullity(d: LinkDiagram) -> int:
    return seifert(d).nullity
