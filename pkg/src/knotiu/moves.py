"""Reidemeister moves: enumeration, application, a greedy simplifier and
move-sequence execution.

Move events name their site through the current diagram: arcs by label
(``-k`` for the free loop of component ``k``) and faces by their index in
:func:`knotiu.diagram.faces`.  Side ``L`` means the dart running along the
arc's orientation, whose face lies to the left; ``R`` is the other side.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from ._net import Net
from .diagram import (
    Dart,
    DiagramError,
    LinkDiagram,
    dart_piece,
    face_of_dart,
    faces,
    positions,
)

RI_ADD = "RI_add"
RI_REMOVE = "RI_remove"
RII_ADD = "RII_add"
RII_REMOVE = "RII_remove"
RIII = "RIII"
KINDS = (RI_ADD, RI_REMOVE, RII_ADD, RII_REMOVE, RIII)

_TAGS = {RI_ADD: "R1+", RI_REMOVE: "R1-", RII_ADD: "R2+", RII_REMOVE: "R2-", RIII: "R3"}
_KIND_OF_TAG = {v: k for k, v in _TAGS.items()}


class MoveError(DiagramError):
    """An event cannot be applied to the given diagram."""

    def __init__(self, msg: str, step: Optional[int] = None):
        super().__init__(msg if step is None else f"step {step}: {msg}")
        self.step = step


@dataclass(frozen=True)
class MoveEvent:
    kind: str
    site: int
    params: tuple = ()
    matched: Optional[bool] = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown move kind {self.kind!r}")

    def param(self, name, default=None):
        for k, v in self.params:
            if k == name:
                return v
        return default

    @classmethod
    def ri_add(cls, arc: int, side: str = "L", sign: int = 1) -> "MoveEvent":
        return cls(RI_ADD, arc, (("side", side), ("sign", sign)))

    @classmethod
    def ri_remove(cls, face: int) -> "MoveEvent":
        return cls(RI_REMOVE, face)

    @classmethod
    def rii_add(cls, arc: int, side: str, arc2: int, side2: str, over: int = 1) -> "MoveEvent":
        return cls(RII_ADD, arc, (("side", side), ("arc2", arc2), ("side2", side2), ("over", over)),
                   matched=side != side2)

    @classmethod
    def rii_remove(cls, face: int) -> "MoveEvent":
        return cls(RII_REMOVE, face)

    @classmethod
    def riii(cls, face: int) -> "MoveEvent":
        return cls(RIII, face)

    def to_text(self) -> str:
        tag = _TAGS[self.kind]
        if self.kind == RI_ADD:
            s = "+" if self.param("sign") == 1 else "-"
            return f"{tag} arc={self.site} side={self.param('side')} sign={s}"
        if self.kind == RII_ADD:
            p = self.param
            return f"{tag} arc={self.site} side={p('side')} arc2={p('arc2')} side2={p('side2')} over={p('over')}"
        return f"{tag} face={self.site}"

    @classmethod
    def from_text(cls, line: str) -> "MoveEvent":
        parts = line.split()
        if not parts or parts[0] not in _KIND_OF_TAG:
            raise ValueError(f"unknown move tag in {line!r}")
        kind = _KIND_OF_TAG[parts[0]]
        kv = {}
        for p in parts[1:]:
            m = re.fullmatch(r"(\w+)=(\S+)", p)
            if not m:
                raise ValueError(f"bad field {p!r} in {line!r}")
            kv[m.group(1)] = m.group(2)

        def need(name):
            if name not in kv:
                raise ValueError(f"missing {name}= in {line!r}")
            return kv.pop(name)

        def side(v):
            if v not in ("L", "R"):
                raise ValueError(f"side must be L or R, got {v!r}")
            return v

        try:
            if kind == RI_ADD:
                sg = need("sign")
                if sg not in ("+", "-"):
                    raise ValueError(f"sign must be + or -, got {sg!r}")
                ev = cls.ri_add(int(need("arc")), side(need("side")), 1 if sg == "+" else -1)
            elif kind == RII_ADD:
                over = int(need("over"))
                if over not in (1, 2):
                    raise ValueError("over must be 1 or 2")
                ev = cls.rii_add(int(need("arc")), side(need("side")), int(need("arc2")), side(need("side2")), over)
            else:
                ev = cls(kind, int(need("face")))
        except ValueError as exc:
            if "invalid literal" in str(exc):
                raise ValueError(f"expected an integer in {line!r}") from None
            raise
        if kv:
            raise ValueError(f"unexpected fields {sorted(kv)} in {line!r}")
        return ev

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class MoveSequence:
    initial: LinkDiagram
    events: tuple[MoveEvent, ...] = ()

    def to_text(self) -> str:
        return "".join(e.to_text() + "\n" for e in self.events)


def parse_events(text: str) -> list[MoveEvent]:
    out = []
    for n, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(MoveEvent.from_text(line))
        except ValueError as exc:
            raise ValueError(f"line {n}: {exc}") from None
    return out


# ------------------------------------------------------------- face analysis


def _corner_crossing(d: LinkDiagram, dt: Dart) -> int:
    tail, head = positions(d)[dt.arc]
    return (head if dt.forward else tail)[0]


def _is_over_both(d: LinkDiagram, arc: int) -> Optional[bool]:
    """True if the arc is over at both ends, False if under at both, else None."""
    (_, s1), (_, s2) = positions(d)[arc]
    if s1 % 2 and s2 % 2:
        return True
    if not s1 % 2 and not s2 % 2:
        return False
    return None


def _monogon(d: LinkDiagram, cyc) -> bool:
    return len(cyc) == 1 and cyc[0].arc > 0


def _bigon(d: LinkDiagram, cyc) -> bool:
    if len(cyc) != 2 or cyc[0].arc < 0:
        return False
    a, b = cyc[0].arc, cyc[1].arc
    if a == b:
        return False
    xs = {_corner_crossing(d, cyc[0]), _corner_crossing(d, cyc[1])}
    if len(xs) != 2:
        return False
    oa, ob = _is_over_both(d, a), _is_over_both(d, b)
    return oa is not None and ob is not None and oa != ob


def _trigon(d: LinkDiagram, cyc) -> bool:
    if len(cyc) != 3 or cyc[0].arc < 0:
        return False
    arcs = {dt.arc for dt in cyc}
    if len(arcs) != 3:
        return False
    if len({_corner_crossing(d, dt) for dt in cyc}) != 3:
        return False
    kinds = [_is_over_both(d, dt.arc) for dt in cyc]
    return kinds.count(True) == 1 and kinds.count(False) == 1


def trigon_crossings(d: LinkDiagram, face: int) -> tuple[int, int, int]:
    """``(x, y, z)`` for an RIII face: ``x`` joins the top and middle strands,
    ``y`` the bottom and middle ones, ``z`` the top and bottom ones."""
    cyc = _face(d, face)
    if not _trigon(d, cyc):
        raise MoveError(f"face {face} does not admit {RIII}")
    pos = positions(d)
    ends = {}
    for dt in cyc:
        level = {True: "top", False: "bottom", None: "middle"}[_is_over_both(d, dt.arc)]
        (t, _), (h, _) = pos[dt.arc]
        ends[level] = {t, h}
    (x,) = ends["top"] & ends["middle"]
    (y,) = ends["bottom"] & ends["middle"]
    (z,) = ends["top"] & ends["bottom"]
    return x, y, z


def bigon_crossings(d: LinkDiagram, face: int) -> tuple[int, int]:
    """``(x, y)`` for an RII face: the positive and the negative corner."""
    cyc = _face(d, face)
    if not _bigon(d, cyc):
        raise MoveError(f"face {face} does not admit {RII_REMOVE}")
    a, b = _corner_crossing(d, cyc[0]), _corner_crossing(d, cyc[1])
    return (a, b) if d.signs[a] == 1 else (b, a)


def _face(d: LinkDiagram, k: int):
    fs = faces(d)
    if not 0 <= k < len(fs):
        raise MoveError(f"no face {k}")
    return fs[k]


def _loop_label(net: Net, comp: int) -> int:
    for lab in net.free:
        if net.component(lab) == comp - 1:
            return lab
    raise MoveError(f"component {comp} is not a free loop")


def _check_arc(d: LinkDiagram, arc: int) -> None:
    if arc < 0:
        if not (1 <= -arc <= d.n and d.components[-arc - 1] is None):
            raise MoveError(f"no free loop {-arc}")
    elif not 1 <= arc <= d.arc_count:
        raise MoveError(f"no arc {arc}")


# ------------------------------------------------------------- net surgery


def _split(net: Net, lab: int, pieces: int) -> list[int]:
    """Cut an edge into ``pieces`` parts listed in orientation order.

    The first part keeps the label and the tail end, the last one takes the
    head end.  A free loop has one cut fewer, so its first and last parts are
    the same edge and keep its label.
    """
    if lab in net.free:
        del net.free[lab]
        mids = [net.child_label(lab) for _ in range(pieces - 2)]
        return [lab] + mids + [lab]
    occ = net.occurrences()
    _, (hc, hs) = net.ends(lab, occ)
    rest = [net.child_label(lab) for _ in range(pieces - 1)]
    net.slots[hc][hs] = rest[-1]
    return [lab] + rest


# slot patterns for a kink; e1 keeps the tail, e2 is the loop, e3 takes the head
_KINK = {
    ("L", 1): ((0, 2, 1, 1), False),
    ("L", -1): ((1, 0, 2, 1), True),
    ("R", -1): ((0, 1, 1, 2), True),
    ("R", 1): ((1, 1, 2, 0), False),
}


def _ri_add(net: Net, lab: int, side: str, sign: int) -> None:
    if (side, sign) not in _KINK:
        raise MoveError(f"bad RI parameters side={side} sign={sign}")
    parts = _split(net, lab, 3)
    e = (parts[0], parts[1], parts[-1])
    pat, ofwd = _KINK[(side, sign)]
    net.new_crossing([e[j] for j in pat], True, ofwd)


def _rii_add(net: Net, e_lab: int, e_fwd: bool, f_lab: int, f_fwd: bool, over: int) -> None:
    # e runs east along the bottom of the face, f runs west along its top;
    # a finger of e pushes up through f.  Directions: E=0 N=1 W=2 S=3.
    if e_lab == f_lab:
        # two stretches of one edge, e's before f's along the dart
        p = _split(net, e_lab, 5)
        if not e_fwd:
            p = p[::-1]
        ea, em, eb, fm, fb = p
        fa = eb
    else:
        pe = _split(net, e_lab, 3)
        pf = _split(net, f_lab, 3)
        ea, em, eb = (pe[0], pe[1], pe[-1]) if e_fwd else (pe[-1], pe[1], pe[0])
        fa, fm, fb = (pf[0], pf[1], pf[-1]) if f_fwd else (pf[-1], pf[1], pf[0])
    p1 = {3: ea, 1: em, 0: fm, 2: fb}
    p2 = {1: em, 3: eb, 0: fa, 2: fm}
    f_in = 0 if f_fwd else 2
    for where, e_in in ((p1, 3 if e_fwd else 1), (p2, 1 if e_fwd else 3)):
        u_in, o_in = (f_in, e_in) if over == 1 else (e_in, f_in)
        net.new_crossing([where[(u_in + j) % 4] for j in range(4)], True, (o_in - u_in) % 4 == 1)


def _riii(net: Net, d: LinkDiagram, cyc) -> None:
    old = {cid: list(sl) for cid, sl in net.slots.items()}
    for dt in cyc:
        t = dt.arc
        (p, sp), (q, sq) = positions(d)[t]
        o1 = old[p][(sp + 2) % 4]
        o2 = old[q][(sq + 2) % 4]
        net.slots[p][sp] = o2
        net.slots[p][(sp + 2) % 4] = t
        net.slots[q][sq] = o1
        net.slots[q][(sq + 2) % 4] = t


# ------------------------------------------------------------------ public


def is_applicable(d: LinkDiagram, e: MoveEvent) -> bool:
    try:
        _validate_event(d, e)
    except MoveError:
        return False
    return True


def _validate_event(d: LinkDiagram, e: MoveEvent):
    if e.kind == RI_ADD:
        _check_arc(d, e.site)
        if e.param("side") not in ("L", "R") or e.param("sign") not in (1, -1):
            raise MoveError(f"bad RI parameters in {e}")
        return None
    if e.kind == RII_ADD:
        a, b = e.site, e.param("arc2")
        _check_arc(d, a)
        _check_arc(d, b)
        if e.param("over") not in (1, 2):
            raise MoveError("over must be 1 or 2")
        if a == b and e.param("side") != e.param("side2"):
            raise MoveError("an RII on a single arc must use one side of it")
        da = Dart(a, e.param("side") == "L")
        db = Dart(b, e.param("side2") == "L")
        if dart_piece(d, da) == dart_piece(d, db):
            fo = face_of_dart(d)
            if fo[da] != fo[db]:
                raise MoveError(f"arcs {a} and {b} do not share a face on the chosen sides")
        return None
    cyc = _face(d, e.site)
    test = {RI_REMOVE: _monogon, RII_REMOVE: _bigon, RIII: _trigon}[e.kind]
    if not test(d, cyc):
        raise MoveError(f"face {e.site} does not admit {e.kind}")
    return cyc


def apply(d: LinkDiagram, e: MoveEvent) -> LinkDiagram:
    """Apply one move; raises :class:`MoveError` if it is not applicable."""
    cyc = _validate_event(d, e)
    net = Net.from_diagram(d)

    def lab(arc):
        return _loop_label(net, -arc) if arc < 0 else arc

    if e.kind == RI_ADD:
        _ri_add(net, lab(e.site), e.param("side"), e.param("sign"))
    elif e.kind == RII_ADD:
        _rii_add(net, lab(e.site), e.param("side") == "L", lab(e.param("arc2")), e.param("side2") == "L",
                 e.param("over"))
    elif e.kind == RI_REMOVE:
        net.splice([_corner_crossing(d, cyc[0])])
    elif e.kind == RII_REMOVE:
        net.splice(sorted({_corner_crossing(d, dt) for dt in cyc}))
    else:
        _riii(net, d, cyc)
    return net.to_diagram()


def classify_r2(d: LinkDiagram, e: MoveEvent) -> str:
    """'matched' when the two bigon edges run parallel, else 'unmatched'."""
    if e.kind == RII_ADD:
        return "matched" if e.param("side") != e.param("side2") else "unmatched"
    if e.kind != RII_REMOVE:
        raise MoveError(f"{e.kind} is not an RII move")
    cyc = _validate_event(d, e)
    (t1, _), _ = positions(d)[cyc[0].arc]
    (t2, _), _ = positions(d)[cyc[1].arc]
    return "matched" if t1 == t2 else "unmatched"


def _tagged(d: LinkDiagram, e: MoveEvent) -> MoveEvent:
    if e.kind == RII_REMOVE and e.matched is None:
        return MoveEvent(e.kind, e.site, e.params, matched=classify_r2(d, e) == "matched")
    return e


def removing_moves(d: LinkDiagram, kinds=(RI_REMOVE, RII_REMOVE, RIII)) -> list[MoveEvent]:
    out = []
    fs = faces(d)
    for kind, test in ((RI_REMOVE, _monogon), (RII_REMOVE, _bigon), (RIII, _trigon)):
        if kind not in kinds:
            continue
        for k, cyc in enumerate(fs):
            if test(d, cyc):
                out.append(_tagged(d, MoveEvent(kind, k)))
    return out


def enumerate_moves(d: LinkDiagram, include_adds: bool = True) -> list[MoveEvent]:
    """All removing and RIII moves plus a generating family of adding moves:
    a kink of each side and sign on every arc, and an RII for every pair of
    distinct arcs sharing a face, with either strand on top."""
    out = removing_moves(d)
    if not include_adds:
        return out
    arcs = list(range(1, d.arc_count + 1)) + [-k for k in d.free_loop_components()]
    for a in arcs:
        for side in ("L", "R"):
            for sign in (1, -1):
                out.append(MoveEvent.ri_add(a, side, sign))
    for cyc in faces(d):
        for i, da in enumerate(cyc):
            for db in cyc[i:]:
                if da.arc == db.arc and da != db:
                    continue
                for over in (1, 2):
                    out.append(MoveEvent.rii_add(da.arc, "L" if da.forward else "R",
                                                 db.arc, "L" if db.forward else "R", over))
    return out


def bigon_face_of(d: LinkDiagram, arc: int) -> Optional[int]:
    """Index of an RII-removable bigon bounded by ``arc``, if any."""
    fo = face_of_dart(d)
    fs = faces(d)
    for fwd in (True, False):
        k = fo.get(Dart(arc, fwd))
        if k is not None and _bigon(d, fs[k]):
            return k
    return None


def trigon_face_of(d: LinkDiagram, arc: int) -> Optional[int]:
    fo = face_of_dart(d)
    fs = faces(d)
    for fwd in (True, False):
        k = fo.get(Dart(arc, fwd))
        if k is not None and _trigon(d, fs[k]):
            return k
    return None


def run_sequence(s: MoveSequence, observer: Optional[Callable[[int, LinkDiagram], None]] = None
                 ) -> list[LinkDiagram]:
    """Every intermediate diagram, starting with the initial one."""
    cur = s.initial
    out = [cur]
    if observer:
        observer(0, cur)
    for k, e in enumerate(s.events, 1):
        try:
            cur = apply(cur, e)
        except MoveError as exc:
            raise MoveError(str(exc), step=k) from None
        out.append(cur)
        if observer:
            observer(k, cur)
    return out


def simplify(d: LinkDiagram, budget: int = 10_000) -> tuple[LinkDiagram, MoveSequence]:
    """Greedy reduction: kinks first, then bigons, then up to two RIII moves
    that expose one of those.  ``budget`` caps the number of trial moves."""
    events: list[MoveEvent] = []
    cur = d
    spent = 0
    while cur.crossings and spent < budget:
        red = removing_moves(cur, (RI_REMOVE,)) or removing_moves(cur, (RII_REMOVE,))
        if red:
            e = red[0]
            cur = apply(cur, e)
            events.append(e)
            spent += 1
            continue
        found = _riii_search(cur, budget - spent)
        if found is None:
            break
        path, cost = found
        spent += cost
        for e in path:
            cur = apply(cur, e)
            events.append(e)
    return cur, MoveSequence(d, tuple(events))


def _riii_search(d: LinkDiagram, budget: int, depth: int = 2):
    """Shortest RIII path (length <= depth) after which a kink or bigon can be removed."""
    from .diagram import canonical_form

    spent = 0
    frontier = [(d, ())]
    seen = {canonical_form(d)}
    for _ in range(depth):
        nxt = []
        for cur, path in frontier:
            for e in removing_moves(cur, (RIII,)):
                if spent >= budget:
                    return None
                spent += 1
                after = apply(cur, e)
                key = canonical_form(after)
                if key in seen:
                    continue
                seen.add(key)
                if removing_moves(after, (RI_REMOVE, RII_REMOVE)):
                    return path + (e,), spent
                nxt.append((after, path + (e,)))
        frontier = nxt
    return None


def inverse_event(before: LinkDiagram, after: LinkDiagram, e: MoveEvent) -> Optional[MoveEvent]:
    """An event undoing ``e`` (checked up to relabeling), when one is found."""
    from .diagram import canonical_form

    target = canonical_form(before)
    cands: Iterable[MoveEvent]
    if e.kind in (RI_ADD, RII_ADD, RIII):
        kind = {RI_ADD: RI_REMOVE, RII_ADD: RII_REMOVE, RIII: RIII}[e.kind]
        cands = removing_moves(after, (kind,))
    else:
        cands = [m for m in enumerate_moves(after) if m.kind == (RI_ADD if e.kind == RI_REMOVE else RII_ADD)]
    for m in cands:
        try:
            if canonical_form(apply(after, m)) == target:
                return m
        except MoveError:
            continue
    return None
