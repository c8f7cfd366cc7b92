"""Oriented link diagrams in the 2-sphere, encoded as PD codes.

Conventions used throughout the package:

* Arcs are numbered ``1..2c`` consecutively along each component, in the
  direction of its orientation; ``components[k]`` is the inclusive range
  ``(first, last)`` of component ``k + 1``.  A crossing-free component is a
  ``None`` entry (a free loop).
* A crossing is the 4-tuple of the arcs meeting it, starting with the
  incoming under-arc and proceeding counterclockwise.  Slots 0/2 are the
  under strand, slots 1/3 the over strand.
* ``sign = +1`` is the right-handed crossing: the over strand runs from
  slot 3 to slot 1.  With this choice the closure of ``sigma_1^3`` is a
  positive trefoil with writhe +3 and the Hopf link ``sigma_1^2`` has
  linking number +1.
* A dart is ``(arc, forward)``.  The face of a dart is the one on its left.
  The free loop of component ``k`` is addressed as arc ``-k``.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

Range = Optional[tuple[int, int]]
PD = tuple[int, int, int, int]


class DiagramError(ValueError):
    """Raised when an operation receives an unusable diagram or argument."""


class Dart(NamedTuple):
    arc: int
    forward: bool


@dataclass(frozen=True)
class Crossing:
    id: int
    sign: int
    over_component: int
    under_component: int


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[PD, ...]
    components: tuple[Range, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(int(v) for v in x) for x in self.crossings))
        object.__setattr__(
            self, "components", tuple(None if r is None else (int(r[0]), int(r[1])) for r in self.components)
        )
        object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))
        if len(self.signs) != len(self.crossings):
            raise DiagramError("one sign per crossing is required")

    @classmethod
    def from_pd(cls, crossings: Sequence[Sequence[int]], components: Sequence[Range], free_loops: int = 0,
                signs: Sequence[int] | None = None) -> "LinkDiagram":
        comps = tuple(None if r is None else tuple(r) for r in components) + (None,) * free_loops
        xs = tuple(tuple(x) for x in crossings)
        if signs is None:
            signs = derive_signs(xs, comps)
        return cls(xs, comps, tuple(signs))

    @classmethod
    def unknot(cls, n: int = 1) -> "LinkDiagram":
        """Crossing-free diagram of the trivial ``n``-component link."""
        return cls((), (None,) * n, ())

    @property
    def n(self) -> int:
        return len(self.components)

    @property
    def c(self) -> int:
        return len(self.crossings)

    @property
    def arc_count(self) -> int:
        return 2 * len(self.crossings)

    def component_of(self, arc: int) -> int:
        """1-based component number of an arc (``-k`` for the free loop k)."""
        if arc < 0:
            return -arc
        return _arc_component(self)[arc]

    def crossing(self, x: int) -> Crossing:
        if not 0 <= x < self.c:
            raise DiagramError(f"unknown crossing {x}")
        pd = self.crossings[x]
        s = self.signs[x]
        over = pd[3] if s == 1 else pd[1]
        return Crossing(x, s, self.component_of(over), self.component_of(pd[0]))

    def free_loop_components(self) -> list[int]:
        return [k + 1 for k, r in enumerate(self.components) if r is None]

    def is_trivial_diagram(self) -> bool:
        return not self.crossings


@functools.lru_cache(maxsize=4096)
def _arc_component(d: LinkDiagram) -> dict[int, int]:
    out = {}
    for k, r in enumerate(d.components):
        if r is not None:
            for a in range(r[0], r[1] + 1):
                out[a] = k + 1
    return out


def successor_map(components: Sequence[Range]) -> dict[int, int]:
    succ = {}
    for r in components:
        if r is None:
            continue
        f, l = r
        for a in range(f, l + 1):
            succ[a] = a + 1 if a < l else f
    return succ


def derive_signs(crossings: Sequence[PD], components: Sequence[Range]) -> tuple[int, ...]:
    """Recover crossing signs from arc numbering.

    The over strand runs b->d when ``d`` follows ``b``.  For two-arc
    components both readings are possible; those are settled by requiring
    every arc to have exactly one head.  A crossing whose over arcs are not
    consecutive gets sign 0 (reported by :func:`validate`).
    """
    succ = successor_map(components)
    over_in: dict[int, Optional[int]] = {}
    ambiguous = []
    for i, x in enumerate(crossings):
        if len(x) != 4:
            over_in[i] = None
            continue
        _, b, _, dd = x
        fwd = succ.get(b) == dd
        bwd = succ.get(dd) == b
        if fwd and not bwd:
            over_in[i] = 1
        elif bwd and not fwd:
            over_in[i] = 3
        elif fwd and bwd:
            over_in[i] = None
            ambiguous.append(i)
        else:
            over_in[i] = None
    if ambiguous:
        _resolve_ambiguous(crossings, over_in, ambiguous)
    return tuple(0 if over_in[i] is None else (1 if over_in[i] == 3 else -1) for i in range(len(crossings)))


def _resolve_ambiguous(crossings, over_in, ambiguous):
    pending = list(ambiguous)
    while pending:
        heads: dict[int, int] = {}
        tails: dict[int, int] = {}
        for i, x in enumerate(crossings):
            if len(x) != 4:
                continue
            heads[x[0]] = heads.get(x[0], 0) + 1
            tails[x[2]] = tails.get(x[2], 0) + 1
            h = over_in.get(i)
            if h is not None:
                heads[x[h]] = heads.get(x[h], 0) + 1
                tails[x[(h + 2) % 4]] = tails.get(x[(h + 2) % 4], 0) + 1
        progress = False
        for i in list(pending):
            b, dd = crossings[i][1], crossings[i][3]
            if heads.get(b) or tails.get(dd):
                over_in[i] = 3
            elif tails.get(b) or heads.get(dd):
                over_in[i] = 1
            else:
                continue
            pending.remove(i)
            progress = True
        if not progress:
            # genuinely ambiguous orientation; choose b -> d
            over_in[pending.pop(0)] = 1


@functools.lru_cache(maxsize=4096)
def positions(d: LinkDiagram) -> dict[int, tuple[tuple[int, int], tuple[int, int]]]:
    """Map arc -> ((tail crossing, slot), (head crossing, slot))."""
    tails: dict[int, tuple[int, int]] = {}
    heads: dict[int, tuple[int, int]] = {}
    for i, (x, s) in enumerate(zip(d.crossings, d.signs)):
        h = 3 if s == 1 else 1
        heads[x[0]] = (i, 0)
        tails[x[2]] = (i, 2)
        heads[x[h]] = (i, h)
        tails[x[(h + 2) % 4]] = (i, (h + 2) % 4)
    return {a: (tails[a], heads[a]) for a in heads if a in tails}


def over_in_slot(sign: int) -> int:
    return 3 if sign == 1 else 1


# ---------------------------------------------------------------- validation


@dataclass
class ValidationReport:
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems

    def __bool__(self) -> bool:
        return self.ok


def validate(d: LinkDiagram) -> ValidationReport:
    """Check every structural invariant; never raises."""
    rep = ValidationReport()
    p = rep.problems
    c = len(d.crossings)
    arc_count = 2 * c
    for i, x in enumerate(d.crossings):
        if len(x) != 4:
            p.append(f"crossing {i}: expected 4 arc labels, got {len(x)}")
    counts: dict[int, int] = {}
    for x in d.crossings:
        for a in x:
            counts[a] = counts.get(a, 0) + 1
    for a, k in sorted(counts.items()):
        if not 1 <= a <= arc_count:
            p.append(f"arc {a} outside 1..{arc_count}")
        elif k > 2:
            p.append(f"duplicate arc {a}: appears {k} times")
        elif k < 2:
            p.append(f"arc {a} appears only once")
    for a in range(1, arc_count + 1):
        if a not in counts:
            p.append(f"arc {a} missing")
    # component ranges must tile 1..arc_count in order
    expect = 1
    for k, r in enumerate(d.components):
        if r is None:
            continue
        f, l = r
        if f != expect or l < f:
            p.append(f"component {k + 1}: range {r} does not continue from arc {expect}")
        expect = l + 1
    if expect != arc_count + 1 and c:
        p.append(f"component ranges cover arcs up to {expect - 1}, expected {arc_count}")
    if not c and any(r is not None for r in d.components):
        p.append("crossing-free diagram with non-empty arc range")
    if not d.components:
        p.append("diagram has no components")
    if p:
        return rep

    succ = successor_map(d.components)
    derived = derive_signs(d.crossings, d.components)
    for i, (x, s) in enumerate(zip(d.crossings, d.signs)):
        if succ[x[0]] != x[2]:
            p.append(f"crossing {i}: under strand {x[0]}->{x[2]} is not consecutive")
        if s not in (1, -1):
            p.append(f"crossing {i}: over strand {x[1]},{x[3]} is not consecutive")
            continue
        if derived[i] != 0 and derived[i] != s:
            b, dd = x[1], x[3]
            if not (succ[b] == dd and succ[dd] == b):
                p.append(f"crossing {i}: stated sign {s} contradicts arc order")
    if p:
        return rep
    heads: dict[int, int] = {}
    tails: dict[int, int] = {}
    for x, s in zip(d.crossings, d.signs):
        h = over_in_slot(s)
        for a in (x[0], x[h]):
            heads[a] = heads.get(a, 0) + 1
        for a in (x[2], x[(h + 2) % 4]):
            tails[a] = tails.get(a, 0) + 1
    for a in range(1, arc_count + 1):
        if heads.get(a) != 1 or tails.get(a) != 1:
            p.append(f"arc {a}: needs one head and one tail, has {heads.get(a, 0)}/{tails.get(a, 0)}")
    if p:
        return rep
    # sphere check, piece by piece: each piece with c_i crossings has c_i + 2 faces
    cycles = _face_cycles(d)
    piece_of = _crossing_pieces(d)
    faces_per_piece: dict[int, int] = {}
    for cyc in cycles:
        if cyc[0].arc < 0:
            continue
        i = positions(d)[cyc[0].arc][0][0]
        faces_per_piece[piece_of[i]] = faces_per_piece.get(piece_of[i], 0) + 1
    sizes: dict[int, int] = {}
    for i in range(c):
        sizes[piece_of[i]] = sizes.get(piece_of[i], 0) + 1
    for piece, size in sizes.items():
        f = faces_per_piece.get(piece, 0)
        if f != size + 2:
            p.append(f"piece {piece}: {size} crossings but {f} faces; not planar on the sphere")
    return rep


def is_valid(d: LinkDiagram) -> bool:
    return validate(d).ok


# ------------------------------------------------------------- basic numbers


def crossing_sign(d: LinkDiagram, x: int) -> int:
    if not 0 <= x < d.c:
        raise DiagramError(f"unknown crossing {x}")
    return d.signs[x]


def writhe(d: LinkDiagram) -> int:
    return sum(d.signs)


def linking_matrix(d: LinkDiagram) -> list[list[int]]:
    n = d.n
    twice = [[0] * n for _ in range(n)]
    for i in range(d.c):
        x = d.crossing(i)
        a, b = x.over_component - 1, x.under_component - 1
        if a != b:
            twice[a][b] += x.sign
            twice[b][a] += x.sign
    for row in twice:
        for v in row:
            if v % 2:
                raise DiagramError("odd signed crossing count between two components")
    return [[v // 2 for v in row] for row in twice]


def total_abs_linking(d: LinkDiagram) -> int:
    lk = linking_matrix(d)
    return sum(abs(lk[i][j]) for i in range(d.n) for j in range(i + 1, d.n))


# --------------------------------------------------------------------- faces


def _face_cycles(d: LinkDiagram) -> list[tuple[Dart, ...]]:
    pos = positions(d)
    seen: set[Dart] = set()
    out = []
    darts = [Dart(a, f) for a in range(1, d.arc_count + 1) for f in (True, False)]
    for start in darts:
        if start in seen:
            continue
        cyc = []
        cur = start
        while cur not in seen:
            seen.add(cur)
            cyc.append(cur)
            tail, head = pos[cur.arc]
            i, s = head if cur.forward else tail
            t = (s - 1) % 4
            nxt = d.crossings[i][t]
            cur = Dart(nxt, pos[nxt][0] == (i, t))
        out.append(_rotate_min(cyc))
    for k in d.free_loop_components():
        out.append((Dart(-k, True),))
        out.append((Dart(-k, False),))
    return out


def _dart_key(dt: Dart):
    return (dt.arc < 0, abs(dt.arc), not dt.forward)


def _rotate_min(cyc):
    j = min(range(len(cyc)), key=lambda k: _dart_key(cyc[k]))
    return tuple(cyc[j:] + cyc[:j])


@functools.lru_cache(maxsize=4096)
def faces(d: LinkDiagram) -> tuple[tuple[Dart, ...], ...]:
    """Boundary cycles of the faces, per connected piece, in a fixed order.

    Each face is listed as its cycle of darts (face on the left), starting at
    its smallest dart; a zero-crossing loop contributes two faces.  Face
    indices used by move events refer to positions in this tuple.
    """
    return tuple(sorted(_face_cycles(d), key=lambda cyc: _dart_key(cyc[0])))


def face_of_dart(d: LinkDiagram) -> dict[Dart, int]:
    out = {}
    for k, cyc in enumerate(faces(d)):
        for dt in cyc:
            out[dt] = k
    return out


def _crossing_pieces(d: LinkDiagram) -> dict[int, int]:
    parent = list(range(d.c))

    def find(u):
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    for a, ((t, _), (h, _)) in positions(d).items():
        parent[find(t)] = find(h)
    roots = {}
    return {i: roots.setdefault(find(i), len(roots)) for i in range(d.c)}


def pieces(d: LinkDiagram) -> list[list[int]]:
    """Connected pieces of the underlying 4-valent graph as crossing lists;
    every free loop is a piece of its own (listed as an empty list)."""
    pm = _crossing_pieces(d)
    groups: dict[int, list[int]] = {}
    for i in range(d.c):
        groups.setdefault(pm[i], []).append(i)
    return list(groups.values()) + [[] for _ in d.free_loop_components()]


def piece_count(d: LinkDiagram) -> int:
    return len(pieces(d))


def dart_piece(d: LinkDiagram, dt: Dart) -> int:
    """Piece index of a dart, matching :func:`pieces` ordering."""
    if dt.arc < 0:
        k = d.free_loop_components().index(-dt.arc)
        return len(set(_crossing_pieces(d).values())) + k
    return _crossing_pieces(d)[positions(d)[dt.arc][0][0]]


# ----------------------------------------------------------- transformations


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Swap over and under at every crossing."""
    from ._net import Net

    net = Net.from_diagram(d)
    for cid in list(net.slots):
        net.change_crossing(cid)
    return net.to_diagram()


def crossing_change(d: LinkDiagram, xs) -> LinkDiagram:
    """Swap over/under at the given crossings, keeping arc labels."""
    from ._net import Net

    if isinstance(xs, int):
        xs = [xs]
    net = Net.from_diagram(d)
    for x in xs:
        if not 0 <= x < d.c:
            raise DiagramError(f"unknown crossing {x}")
        net.change_crossing(x)
    return net.to_diagram()


def reverse_component(d: LinkDiagram, i: int) -> LinkDiagram:
    from ._net import Net

    if not 1 <= i <= d.n:
        raise DiagramError(f"unknown component {i}")
    net = Net.from_diagram(d)
    net.reverse_component(i - 1)
    return net.to_diagram()


def reverse_all(d: LinkDiagram) -> LinkDiagram:
    for i in range(1, d.n + 1):
        d = reverse_component(d, i)
    return d


def sublink(d: LinkDiagram, keep: Sequence[int]) -> LinkDiagram:
    """Diagram of the components in ``keep`` (1-based), others deleted."""
    from ._net import Net

    for i in keep:
        if not 1 <= i <= d.n:
            raise DiagramError(f"unknown component {i}")
    net = Net.from_diagram(d)
    net.keep_components({i - 1 for i in keep})
    return net.to_diagram()


def permute_components(d: LinkDiagram, order: Sequence[int]) -> LinkDiagram:
    """The same diagram with components renumbered: new component k is old ``order[k-1]``."""
    if sorted(order) != list(range(1, d.n + 1)):
        raise DiagramError(f"{order} is not a permutation of 1..{d.n}")
    relabel, comps, nxt = {}, [], 1
    for i in order:
        r = d.components[i - 1]
        if r is None:
            comps.append(None)
            continue
        f, l = r
        for a in range(f, l + 1):
            relabel[a] = nxt + a - f
        comps.append((nxt, nxt + l - f))
        nxt += l - f + 1
    crossings = tuple(tuple(relabel[a] for a in x) for x in d.crossings)
    return LinkDiagram(crossings, tuple(comps), d.signs)


def split_union(*ds: LinkDiagram) -> LinkDiagram:
    """Disjoint union; components numbered in argument order."""
    crossings, comps, signs = [], [], []
    offset = 0
    for d in ds:
        for x in d.crossings:
            crossings.append(tuple(a + offset for a in x))
        for r in d.components:
            comps.append(None if r is None else (r[0] + offset, r[1] + offset))
        signs.extend(d.signs)
        offset += d.arc_count
    return LinkDiagram(tuple(crossings), tuple(comps), tuple(signs))


def canonical_form(d: LinkDiagram, oriented: bool = True) -> tuple:
    """Relabeling-invariant key: the lexicographically least PD code over all
    choices of starting arc per component (and, when ``oriented`` is false,
    all orientation choices).  Component order is kept."""
    if not oriented:
        best = None
        for flips in itertools.product((False, True), repeat=d.n):
            e = d
            for k, f in enumerate(flips):
                if f:
                    e = reverse_component(e, k + 1)
            key = canonical_form(e, True)
            if best is None or key < best:
                best = key
        return best
    shapes = tuple(None if r is None else r[1] - r[0] + 1 for r in d.components)
    choices = [range(1) if r is None else range(r[1] - r[0] + 1) for r in d.components]
    best = None
    for rot in itertools.product(*choices):
        relabel = {}
        for r, k in zip(d.components, rot):
            if r is None:
                continue
            f, l = r
            m = l - f + 1
            for a in range(f, l + 1):
                relabel[a] = f + (a - f + k) % m
        key = tuple(sorted((tuple(relabel[a] for a in x), s) for x, s in zip(d.crossings, d.signs)))
        if best is None or key < best:
            best = key
    return (shapes, best)


def isomorphic(d1: LinkDiagram, d2: LinkDiagram, oriented: bool = True) -> bool:
    if d1.c != d2.c or d1.n != d2.n:
        return False
    return canonical_form(d1, oriented) == canonical_form(d2, oriented)


# ------------------------------------------------------------- sign matrices


@dataclass(frozen=True)
class SignMatrixPair:
    """Symmetric ``S`` and ``T`` over {-1, 0, +1} with ``t_ij = 0`` iff ``s_ij = 0``."""

    S: tuple[tuple[int, ...], ...]
    T: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        S = tuple(tuple(int(v) for v in row) for row in self.S)
        T = tuple(tuple(int(v) for v in row) for row in self.T)
        object.__setattr__(self, "S", S)
        object.__setattr__(self, "T", T)
        n = len(S)
        if len(T) != n or any(len(r) != n for r in S + T):
            raise DiagramError("S and T must be square of the same order")
        for i in range(n):
            for j in range(n):
                if S[i][j] not in (-1, 0, 1) or T[i][j] not in (-1, 0, 1):
                    raise DiagramError("entries must lie in {-1, 0, +1}")
                if S[i][j] != S[j][i] or T[i][j] != T[j][i]:
                    raise DiagramError("S and T must be symmetric")
                if (S[i][j] == 0) != (T[i][j] == 0):
                    raise DiagramError(f"t_{i + 1}{j + 1} = 0 must hold exactly when s_{i + 1}{j + 1} = 0")

    @property
    def n(self) -> int:
        return len(self.S)

    @classmethod
    def scalar(cls, v: int, n: int = 1) -> "SignMatrixPair":
        m = tuple(tuple(v for _ in range(n)) for _ in range(n))
        return cls(m, m)

    @classmethod
    def same(cls, S) -> "SignMatrixPair":
        return cls(S, S)

    def s(self, i: int, j: int) -> int:
        return self.S[i - 1][j - 1]

    def t(self, i: int, j: int) -> int:
        return self.T[i - 1][j - 1]
