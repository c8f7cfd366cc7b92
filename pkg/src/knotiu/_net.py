"""Mutable working form of a diagram used by moves and smoothings.

Each crossing keeps its four edge labels in counterclockwise order with the
under strand on slots 0/2 and the over strand on slots 1/3, plus two flags
telling which way each strand runs.  Labels carry sort keys so that
``to_diagram`` renumbers arcs deterministically and keeps component order.
"""

from __future__ import annotations

from .diagram import DiagramError, LinkDiagram


class Net:
    __slots__ = ("slots", "ufwd", "ofwd", "free", "key", "_next_label", "_next_cid", "_stamp")

    def __init__(self):
        self.slots: dict[int, list[int]] = {}
        self.ufwd: dict[int, bool] = {}
        self.ofwd: dict[int, bool] = {}
        self.free: dict[int, None] = {}
        self.key: dict[int, tuple] = {}
        self._next_label = 1
        self._next_cid = 0
        self._stamp = 0

    # ------------------------------------------------------------ building

    @classmethod
    def from_diagram(cls, d: LinkDiagram) -> "Net":
        net = cls()
        for k, r in enumerate(d.components):
            if r is None:
                continue
            for a in range(r[0], r[1] + 1):
                net.key[a] = (k, a)
        net._next_label = d.arc_count + 1
        for i, (x, s) in enumerate(zip(d.crossings, d.signs)):
            net.slots[i] = list(x)
            net.ufwd[i] = True
            net.ofwd[i] = s == -1
        net._next_cid = d.c
        for k, r in enumerate(d.components):
            if r is None:
                lab = net.new_label((k, 0))
                net.free[lab] = None
        return net

    def copy(self) -> "Net":
        out = Net()
        out.slots = {c: list(v) for c, v in self.slots.items()}
        out.ufwd = dict(self.ufwd)
        out.ofwd = dict(self.ofwd)
        out.free = dict(self.free)
        out.key = dict(self.key)
        out._next_label = self._next_label
        out._next_cid = self._next_cid
        out._stamp = self._stamp
        return out

    def new_label(self, key: tuple) -> int:
        lab = self._next_label
        self._next_label += 1
        self.key[lab] = key
        return lab

    def child_label(self, parent: int) -> int:
        """Fresh label ordered after ``parent`` and never before its strand's start."""
        self._stamp += 1
        return self.new_label(self.key[parent] + (self._stamp,))

    def new_crossing(self, slots, ufwd: bool, ofwd: bool) -> int:
        cid = self._next_cid
        self._next_cid += 1
        self.slots[cid] = list(slots)
        self.ufwd[cid] = ufwd
        self.ofwd[cid] = ofwd
        return cid

    # ------------------------------------------------------------- queries

    def sign(self, cid: int) -> int:
        return 1 if self.ufwd[cid] != self.ofwd[cid] else -1

    def is_head(self, cid: int, s: int) -> bool:
        if s % 2 == 0:
            return (s == 0) == self.ufwd[cid]
        return (s == 1) == self.ofwd[cid]

    def occurrences(self) -> dict[int, list[tuple[int, int]]]:
        occ: dict[int, list[tuple[int, int]]] = {}
        for cid in sorted(self.slots):
            for s, lab in enumerate(self.slots[cid]):
                occ.setdefault(lab, []).append((cid, s))
        return occ

    def ends(self, lab: int, occ=None) -> tuple[tuple[int, int], tuple[int, int]]:
        """(tail occurrence, head occurrence) of an edge."""
        occ = occ if occ is not None else self.occurrences()
        o = occ[lab]
        if len(o) != 2:
            raise DiagramError(f"edge {lab} has {len(o)} ends")
        if self.is_head(*o[0]):
            return o[1], o[0]
        return o[0], o[1]

    def component(self, lab: int) -> int:
        return self.key[lab][0]

    # ----------------------------------------------------------- mutations

    def change_crossing(self, cid: int) -> None:
        a, b, c, d = self.slots[cid]
        u, o = self.ufwd[cid], self.ofwd[cid]
        self.slots[cid] = [b, c, d, a]
        self.ufwd[cid] = o
        self.ofwd[cid] = not u

    def reverse_component(self, comp: int) -> None:
        for cid, sl in self.slots.items():
            if self.component(sl[0]) == comp:
                self.ufwd[cid] = not self.ufwd[cid]
            if self.component(sl[1]) == comp:
                self.ofwd[cid] = not self.ofwd[cid]

    def resolve(self, pairs: dict[int, tuple[tuple[int, int], tuple[int, int]]]) -> None:
        """Delete crossings, joining the given slot pairs at each.

        Straight-through pairs ``((0, 2), (1, 3))`` splice the crossing out;
        other pairings smooth it.  Merged edges keep their least label, and
        closed-up edges become free loops.
        """
        parent: dict[int, int] = {}

        def find(u):
            while parent.get(u, u) != u:
                parent[u] = parent.get(parent[u], parent[u])
                u = parent[u]
            return u

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra == rb:
                return
            if self.key[rb] < self.key[ra]:
                ra, rb = rb, ra
            parent[rb] = ra

        touched = set()
        for cid, prs in pairs.items():
            sl = self.slots[cid]
            for s, t in prs:
                union(sl[s], sl[t])
                touched.update((sl[s], sl[t]))
        for cid in pairs:
            del self.slots[cid]
            del self.ufwd[cid]
            del self.ofwd[cid]
        alive = set()
        for cid, sl in self.slots.items():
            for s in range(4):
                r = find(sl[s])
                sl[s] = r
                alive.add(r)
        for lab in touched:
            r = find(lab)
            if r not in alive:
                self.free[r] = None

    def splice(self, cids) -> None:
        self.resolve({c: ((0, 2), (1, 3)) for c in cids})

    def keep_components(self, keep: set[int]) -> None:
        drop = [
            cid for cid, sl in self.slots.items()
            if self.component(sl[0]) not in keep or self.component(sl[1]) not in keep
        ]
        self.splice(drop)
        for lab in list(self.free):
            if self.component(lab) not in keep:
                del self.free[lab]

    def reorient(self) -> None:
        """Choose a consistent orientation on every strand, by walking.

        A strand starts at its least label, which keeps its current head
        when that is unambiguous and otherwise heads toward its first
        occurrence.
        """
        occ = self.occurrences()
        done: set[int] = set()
        for start in sorted(occ, key=lambda lab: self.key[lab]):
            if start in done:
                continue
            o = occ[start]
            heads = [p for p in o if self.is_head(*p)]
            arrive = heads[0] if len(heads) == 1 else o[0]
            lab = start
            while lab not in done:
                done.add(lab)
                cid, s = arrive
                if s % 2 == 0:
                    self.ufwd[cid] = s == 0
                else:
                    self.ofwd[cid] = s == 1
                out = (cid, (s + 2) % 4)
                lab = self.slots[cid][out[1]]
                o2 = occ[lab]
                arrive = o2[1] if o2[0] == out else o2[0]

    # -------------------------------------------------------------- output

    def strands(self, occ=None) -> list[list[int]]:
        """Edge cycles in orientation order, each starting at its least label."""
        occ = occ if occ is not None else self.occurrences()
        done: set[int] = set()
        out = []
        for start in sorted(list(occ) + list(self.free), key=lambda lab: self.key[lab]):
            if start in done:
                continue
            if start in self.free:
                done.add(start)
                out.append([start])
                continue
            cyc = []
            lab = start
            while lab not in done:
                done.add(lab)
                cyc.append(lab)
                _, (cid, s) = self.ends(lab, occ)
                lab = self.slots[cid][(s + 2) % 4]
            out.append(cyc)
        return out

    def to_diagram(self) -> LinkDiagram:
        occ = self.occurrences()
        for lab, o in occ.items():
            if len(o) != 2 or sum(self.is_head(*p) for p in o) != 1:
                raise DiagramError(f"edge {lab} is not consistently oriented")
        new: dict[int, int] = {}
        comps = []
        nxt = 1
        for cyc in self.strands(occ):
            if cyc[0] in self.free:
                comps.append(None)
                continue
            first = nxt
            for lab in cyc:
                new[lab] = nxt
                nxt += 1
            comps.append((first, nxt - 1))
        crossings, signs = [], []
        for cid in sorted(self.slots):
            sl = self.slots[cid]
            base = 0 if self.ufwd[cid] else 2
            crossings.append(tuple(new[sl[(base + j) % 4]] for j in range(4)))
            signs.append(self.sign(cid))
        return LinkDiagram(tuple(crossings), tuple(comps), tuple(signs))
