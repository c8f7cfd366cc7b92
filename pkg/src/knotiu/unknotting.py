"""Unknotting-number oracle.

``u(d)`` returns an interval ``[lo, hi]``.  Lower bounds:

* ``ceil(|sigma| / 2)`` for knots;
* ``sum |lk(i, j)|`` over pairs of components;
* the component bound ``sum |lk| + sum_i u(L_i)``: a change between two
  components leaves every component's knot type alone, and a change
  inside a component leaves all linking numbers alone;
* 1 when the fingerprint differs from the trivial link's.

The upper bound comes from changing ``k`` crossings of a simplified diagram
for ``k = lo, lo + 1, ...`` and checking that the greedy simplifier reaches a
crossing-free diagram.  A catalogue match gives the value directly.

All of these bounds are unchanged when components are reversed
(``|lk|`` and the signature of a knot do not see orientation), so they are
valid for the unoriented results of irregular smoothing as they stand.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import math
import os
import tempfile
import threading
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .diagram import LinkDiagram, canonical_form, crossing_change, linking_matrix, sublink
from .identify import fingerprint, lookup, trivial_fingerprint
from .moves import simplify
from .seifert import seifert

CACHE_VERSION = 1
DEFAULT_BUDGET = 20_000


@dataclass(frozen=True)
class Witness:
    kind: str  # catalogue | signature | linking | component | fingerprint | search | trivial
    value: int
    detail: str = ""

    def to_json(self) -> dict:
        return {"kind": self.kind, "value": self.value, "detail": self.detail}

    @classmethod
    def from_json(cls, obj: dict) -> "Witness":
        return cls(obj["kind"], obj["value"], obj.get("detail", ""))


@dataclass(frozen=True)
class UInterval:
    lo: int
    hi: Optional[int]
    witnesses: tuple[Witness, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.lo < 0 or (self.hi is not None and self.hi < self.lo):
            raise ValueError(f"bad interval [{self.lo}, {self.hi}]")

    @property
    def exact(self) -> bool:
        return self.hi == self.lo

    @property
    def value(self) -> int:
        if not self.exact:
            raise ValueError(f"unknotting number unresolved: {self}")
        return self.lo

    def __str__(self) -> str:
        if self.exact:
            return str(self.lo)
        return f"[{self.lo}, {'?' if self.hi is None else self.hi}]"

    def to_json(self) -> dict:
        return {"lo": self.lo, "hi": self.hi, "exact": self.exact,
                "witnesses": [w.to_json() for w in self.witnesses]}

    @classmethod
    def from_json(cls, obj: dict) -> "UInterval":
        return cls(obj["lo"], obj["hi"], tuple(Witness.from_json(w) for w in obj.get("witnesses", [])))


# ------------------------------------------------------------------ bounds


def _abs_lk(d: LinkDiagram) -> int:
    lk = linking_matrix(d)
    return sum(abs(lk[i][j]) for i in range(d.n) for j in range(i + 1, d.n))


def _knot_lower(k: LinkDiagram, use_catalogue: bool = True) -> tuple[int, Witness]:
    """Best lower bound for a single knot, using the catalogue when it matches."""
    if not k.crossings:
        return 0, Witness("trivial", 0)
    fp = fingerprint(k)
    hit = lookup(fp) if use_catalogue else None
    if hit is not None:
        return hit.unknotting_number, Witness("catalogue", hit.unknotting_number, hit.name)
    sig = abs(seifert(k).signature)
    b = math.ceil(sig / 2)
    if b == 0 and fp != trivial_fingerprint(1):
        return 1, Witness("fingerprint", 1, "not the unknot")
    return b, Witness("signature", b, f"|sigma| = {sig}")


def u_lower(d: LinkDiagram, use_catalogue: bool = True) -> tuple[int, Witness]:
    """Largest implemented lower bound, with the witness that achieves it.

    The catalogue is consulted only for the components in the component bound.
    """
    cands: list[tuple[int, Witness]] = [(0, Witness("trivial", 0))]
    if d.n == 1:
        if d.crossings:
            sig = abs(seifert(d).signature)
            cands.append((math.ceil(sig / 2), Witness("signature", math.ceil(sig / 2), f"|sigma| = {sig}")))
    else:
        lk = _abs_lk(d)
        cands.append((lk, Witness("linking", lk, f"sum |lk| = {lk}")))
        parts = []
        total = lk
        for i in range(1, d.n + 1):
            b, w = _knot_lower(sublink(d, [i]), use_catalogue)
            total += b
            if b:
                parts.append(f"L{i}:{w.kind}:{w.detail or b}")
        cands.append((total, Witness("component", total, ", ".join([f"lk {lk}"] + parts))))
    if d.crossings and fingerprint(d) != trivial_fingerprint(d.n):
        cands.append((1, Witness("fingerprint", 1, "fingerprint differs from the trivial link")))
    return max(cands, key=lambda t: t[0])


def u_upper(d: LinkDiagram, budget: int = DEFAULT_BUDGET, start: int = 0) -> tuple[Optional[int], Witness]:
    """Smallest ``k >= start`` such that changing some ``k`` crossings gives a
    diagram the simplifier takes to no crossings; ``None`` when the budget
    (simplifier moves plus subsets tried) runs out first."""
    base, seq = simplify(d, budget)
    spent = len(seq.events) + 1
    if not base.crossings:
        return 0, Witness("search", 0, f"simplifies to a trivial diagram in {len(seq.events)} moves")
    for k in range(max(start, 1), base.c + 1):
        for subset in itertools.combinations(range(base.c), k):
            if spent >= budget:
                return None, Witness("search", -1, f"budget exhausted at k = {k}")
            e = crossing_change(base, subset)
            out, s = simplify(e, max(budget - spent, 1))
            spent += len(s.events) + 1
            if not out.crossings:
                return k, Witness("search", k, f"change crossings {list(subset)} of the reduced "
                                                f"{base.c}-crossing diagram, then {len(s.events)} moves")
    return None, Witness("search", -1, "no subset simplified to a trivial diagram")


# ------------------------------------------------------------------ cache


def _key(d: LinkDiagram) -> str:
    raw = repr(canonical_form(d, oriented=False)).encode()
    return hashlib.sha1(raw).hexdigest()


class UCache:
    """In-process memo with an optional JSON file behind it.

    Values are deterministic, so concurrent writers can only store the same
    thing; the last write wins.
    """

    def __init__(self, path: Optional[os.PathLike] = None):
        self.path = Path(path) if path else None
        self._mem: dict[tuple[str, int], UInterval] = {}
        self._lock = threading.Lock()
        if self.path and self.path.exists():
            try:
                data = json.loads(self.path.read_text())
            except (OSError, json.JSONDecodeError):
                data = {}
            if data.get("version") == CACHE_VERSION:
                for k, v in data.get("entries", {}).items():
                    h, b = k.rsplit(":", 1)
                    self._mem[(h, int(b))] = UInterval.from_json(v)

    def get(self, key: str, budget: int) -> Optional[UInterval]:
        with self._lock:
            hit = self._mem.get((key, budget))
            if hit is None:
                # an exact value found with any budget is still exact
                hit = next((v for (k, _), v in self._mem.items() if k == key and v.exact), None)
            return hit

    def put(self, key: str, budget: int, val: UInterval) -> None:
        with self._lock:
            self._mem[(key, budget)] = val

    def save(self) -> None:
        if not self.path:
            return
        with self._lock:
            data = {"version": CACHE_VERSION,
                    "entries": {f"{k}:{b}": v.to_json() for (k, b), v in self._mem.items()}}
        self.path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.path.parent, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(data, fh)
        os.replace(tmp, self.path)


def default_cache_path() -> Optional[Path]:
    root = os.environ.get("KNOT_CACHE_DIR")
    return Path(root) / f"unknotting-v{CACHE_VERSION}.json" if root else None


_CACHE = UCache()


def set_cache(cache: UCache) -> None:
    global _CACHE
    _CACHE = cache


def get_cache() -> UCache:
    return _CACHE


# ------------------------------------------------------------------ oracle


def u(d: LinkDiagram, budget: int = DEFAULT_BUDGET, use_catalogue: bool = True) -> UInterval:
    """Unknotting number of the link of ``d`` as an interval."""
    key = _key(d) + ("" if use_catalogue else ":nocat")
    hit = _CACHE.get(key, budget)
    if hit is not None:
        return hit
    val = _compute(d, budget, use_catalogue)
    _CACHE.put(key, budget, val)
    return val


def _compute(d: LinkDiagram, budget: int, use_catalogue: bool) -> UInterval:
    red, _ = simplify(d, budget)
    if not red.crossings:
        return UInterval(0, 0, (Witness("trivial", 0, "simplifies to a crossing-free diagram"),))
    lo, lw = u_lower(red, use_catalogue)
    wits = [lw]
    if use_catalogue:
        entry = lookup(fingerprint(red))
        if entry is not None:
            if entry.unknotting_number < lo:  # pragma: no cover - catalogue bug
                raise RuntimeError(f"catalogue value for {entry.name} below a proven bound")
            return UInterval(entry.unknotting_number, entry.unknotting_number,
                             (Witness("catalogue", entry.unknotting_number, f"{entry.name}: {entry.citation}"), lw))
    hi, hw = u_upper(red, budget, start=lo)
    wits.append(hw)
    return UInterval(lo, hi, tuple(wits))
