"""Smoothing invariants of diagrams.

* ``ilk``: the formal sum over crossings of ``X_n`` (positive) or ``Y_n``
  (negative), ``n`` the linking number of the regular smoothing.  ``g`` and
  ``g0`` evaluate it.
* ``iu``: for each crossing ``x`` between components ``i`` and ``j`` with
  ``s_ij != 0``, add ``t_ij * sign(x) * |u(D'_x) - u(L)|``, where ``D'_x`` is
  the regular smoothing when ``s_ij = +1`` and the irregular one when
  ``s_ij = -1``.  The signed variant drops the absolute value.  With ``eps``
  and ``delta`` the value gains ``eps * (c / 2 + delta * 3 w / 2)``.

Values are :class:`fractions.Fraction`.  When the oracle leaves a smoothed
link unresolved the sum becomes an interval and ``exact`` is false.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Union

from .diagram import LinkDiagram, SignMatrixPair, linking_matrix, writhe
from .moves import MoveSequence, run_sequence
from .smoothing import irregular_smooth, regular_smooth
from .unknotting import DEFAULT_BUDGET, UInterval, u

Number = Union[Fraction, float]
INF = math.inf


class OracleUnresolved(RuntimeError):
    def __init__(self, msg: str, interval: Optional[UInterval] = None, step: Optional[int] = None):
        super().__init__(msg if step is None else f"step {step}: {msg}")
        self.interval = interval
        self.step = step


# ------------------------------------------------------------------ I_lk


class FormalSum:
    """Element of the free abelian group on ``X_n``, ``Y_n`` (n an integer)."""

    def __init__(self, terms: Optional[Iterable] = None):
        c: Counter = Counter()
        if isinstance(terms, dict):
            c.update(terms)
        elif terms is not None:
            for t in terms:
                c[t] += 1
        for (letter, _n) in c:
            if letter not in ("X", "Y"):
                raise ValueError(f"unknown generator {letter!r}")
        self.terms = {k: v for k, v in sorted(c.items(), key=lambda kv: (kv[0][0], kv[0][1])) if v}

    def __eq__(self, other) -> bool:
        return isinstance(other, FormalSum) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def __add__(self, other: "FormalSum") -> "FormalSum":
        c = Counter(self.terms)
        c.update(other.terms)
        return FormalSum(dict(c))

    def total(self) -> int:
        return sum(self.terms.values())

    def abs_indices(self) -> "FormalSum":
        c: Counter = Counter()
        for (letter, n), m in self.terms.items():
            c[(letter, abs(n))] += m
        return FormalSum(dict(c))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{m}*{l}_{n}" if m != 1 else f"{l}_{n}" for (l, n), m in self.terms.items())

    __repr__ = __str__

    def to_json(self) -> list:
        return [[l, n, m] for (l, n), m in self.terms.items()]

    @classmethod
    def from_json(cls, obj) -> "FormalSum":
        return cls({(l, n): m for l, n, m in obj})


def ilk(d: LinkDiagram) -> FormalSum:
    if d.n != 1:
        raise ValueError(f"I_lk needs a knot diagram, got {d.n} components")
    terms = []
    for x in range(d.c):
        sm = regular_smooth(d, x).diagram
        lk = linking_matrix(sm)[0][1]
        terms.append(("X" if d.signs[x] == 1 else "Y", lk))
    return FormalSum(terms)


def g(s: FormalSum) -> int:
    return sum(m * (abs(n) + 1 if l == "X" else -abs(n) - 1) for (l, n), m in s.terms.items())


def g0(s: FormalSum) -> int:
    return sum(m * (abs(n) if l == "X" else -abs(n)) for (l, n), m in s.terms.items())


# ------------------------------------------------------------------ iu


@dataclass(frozen=True)
class IuConfig:
    matrices: SignMatrixPair
    epsilon: Optional[int] = None
    delta: Optional[int] = None
    signed: bool = False
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if (self.epsilon is None) != (self.delta is None):
            raise ValueError("epsilon and delta go together")
        for v in (self.epsilon, self.delta):
            if v not in (None, 1, -1):
                raise ValueError("epsilon and delta must be +1 or -1")

    @classmethod
    def knot(cls, s: int, **kw) -> "IuConfig":
        """Knot case ``S = (s)``, ``T = (+1)``, written ``iu_(s)``."""
        return cls(SignMatrixPair(((s,),), ((1,),)), **kw)

    def with_eps(self, epsilon: Optional[int], delta: Optional[int]) -> "IuConfig":
        return IuConfig(self.matrices, epsilon, delta, self.signed, self.budget)

    def label(self) -> str:
        base = ("~iu" if self.signed else "iu") + _mat_label(self.matrices)
        if self.epsilon is None:
            return base
        return f"{self.epsilon:+d},{self.delta:+d} {base}"

    def to_json(self) -> dict:
        return {"S": [list(r) for r in self.matrices.S], "T": [list(r) for r in self.matrices.T],
                "eps": self.epsilon, "delta": self.delta, "signed": self.signed, "budget": self.budget}

    @classmethod
    def from_json(cls, obj: dict) -> "IuConfig":
        return cls(SignMatrixPair(obj["S"], obj.get("T", obj["S"])), obj.get("eps"), obj.get("delta"),
                   bool(obj.get("signed", False)), int(obj.get("budget", DEFAULT_BUDGET)))


def _mat_label(m: SignMatrixPair) -> str:
    if m.n == 1 and m.T == ((1,),):
        return f"({m.S[0][0]:+d})"
    return f"[S={[list(r) for r in m.S]}, T={[list(r) for r in m.T]}]"


@dataclass(frozen=True)
class LedgerEntry:
    crossing: int
    components: tuple[int, int]
    member: str  # "C" (regular), "C-check" (irregular) or "skip"
    t: int
    sign: int
    u_smoothed: Optional[UInterval]
    lo: Number
    hi: Number

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    def to_json(self) -> dict:
        return {
            "crossing": self.crossing, "components": list(self.components), "member": self.member,
            "t": self.t, "sign": self.sign,
            "u": None if self.u_smoothed is None else self.u_smoothed.to_json(),
            "contribution": _num_json(self.lo) if self.exact else [_num_json(self.lo), _num_json(self.hi)],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "LedgerEntry":
        c = obj["contribution"]
        lo, hi = (c, c) if not isinstance(c, list) else c
        ui = None if obj.get("u") is None else UInterval.from_json(obj["u"])
        return cls(obj["crossing"], tuple(obj["components"]), obj["member"], obj["t"], obj["sign"], ui,
                   _num_from_json(lo), _num_from_json(hi))


def _num_json(x: Number):
    if isinstance(x, float):
        return "inf" if x > 0 else "-inf"
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _num_from_json(v) -> Number:
    if v in ("inf", "-inf"):
        return INF if v == "inf" else -INF
    return Fraction(v)


@dataclass(frozen=True)
class IuValue:
    lo: Number
    hi: Number
    config: IuConfig
    u_link: int
    correction: Fraction = Fraction(0)
    ledger: tuple[LedgerEntry, ...] = field(default=(), compare=False)

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> Fraction:
        if not self.exact:
            raise OracleUnresolved(f"{self.config.label()} is only known to lie in [{self.lo}, {self.hi}]")
        return self.lo

    def __str__(self) -> str:
        if self.exact:
            return _fmt(self.lo)
        return f"[{_fmt(self.lo)}, {_fmt(self.hi)}]"

    def to_json(self) -> dict:
        out = {"config": self.config.to_json(), "label": self.config.label(), "exact": self.exact,
               "u_link": self.u_link, "correction": _num_json(self.correction),
               "ledger": [e.to_json() for e in self.ledger]}
        if self.exact:
            out["value"] = _num_json(self.lo)
        else:
            out["interval"] = [_num_json(self.lo), _num_json(self.hi)]
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "IuValue":
        lo, hi = (obj["value"], obj["value"]) if "value" in obj else obj["interval"]
        return cls(_num_from_json(lo), _num_from_json(hi), IuConfig.from_json(obj["config"]), obj["u_link"],
                   _num_from_json(obj["correction"]), tuple(LedgerEntry.from_json(e) for e in obj["ledger"]))


def _fmt(x: Number) -> str:
    if isinstance(x, float):
        return "inf" if x > 0 else "-inf"
    return str(x)


def _delta_range(ui: UInterval, base: int, signed: bool) -> tuple[Number, Number]:
    a = Fraction(ui.lo - base)
    b: Number = INF if ui.hi is None else Fraction(ui.hi - base)
    if signed:
        return a, b
    if a >= 0:
        return a, b
    if b <= 0:
        return -b, -a
    return Fraction(0), max(-a, b)


def correction(d: LinkDiagram, epsilon: Optional[int], delta: Optional[int]) -> Fraction:
    """``eps * (c / 2 + delta * 3 w / 2)``, or 0 without ``eps``/``delta``."""
    if epsilon is None:
        return Fraction(0)
    return epsilon * (Fraction(d.c, 2) + delta * Fraction(3 * writhe(d), 2))


def link_u(d: LinkDiagram, budget: int = DEFAULT_BUDGET) -> int:
    ui = u(d, budget)
    if not ui.exact:
        raise OracleUnresolved(f"unknotting number of the link itself is unresolved: {ui}", ui)
    return ui.lo


def _entry(d: LinkDiagram, x: int, cfg: IuConfig, base: int) -> LedgerEntry:
    cr = d.crossing(x)
    i, j = cr.over_component, cr.under_component
    s = cfg.matrices.s(i, j)
    if s == 0:
        return LedgerEntry(x, (i, j), "skip", 0, cr.sign, None, Fraction(0), Fraction(0))
    t = cfg.matrices.t(i, j)
    sm = (regular_smooth if s == 1 else irregular_smooth)(d, x).diagram
    ui = u(sm, cfg.budget)
    a, b = _delta_range(ui, base, cfg.signed)
    k = t * cr.sign
    lo, hi = (k * a, k * b) if k > 0 else (k * b, k * a)
    return LedgerEntry(x, (i, j), "C" if s == 1 else "C-check", t, cr.sign, ui, lo, hi)


def iu(d: LinkDiagram, cfg: IuConfig, threads: int = 1, u_link: Optional[int] = None) -> IuValue:
    """The invariant for ``cfg`` with a per-crossing ledger.

    ``u_link`` may be passed when the unknotting number of the link is
    already known (for instance along a move sequence).
    """
    if cfg.matrices.n != d.n:
        raise ValueError(f"matrices have order {cfg.matrices.n}, diagram has {d.n} components")
    corr = correction(d, cfg.epsilon, cfg.delta)
    if not d.crossings:
        return IuValue(corr, corr, cfg, 0 if u_link is None else u_link, corr, ())
    base = link_u(d, cfg.budget) if u_link is None else u_link
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            ledger = list(ex.map(lambda x: _entry(d, x, cfg, base), range(d.c)))
    else:
        ledger = [_entry(d, x, cfg, base) for x in range(d.c)]
    lo = sum((e.lo for e in ledger), corr)
    hi = sum((e.hi for e in ledger), corr)
    return IuValue(lo, hi, cfg, base, corr, tuple(ledger))


def move_bound(v1: IuValue, v2: IuValue, kind: str = "RII_RIII_only") -> int:
    """``ceil(|v1 - v2| / 2)``: a lower bound on RII+RIII moves (plain
    invariant) or on all moves (the ``eps, delta`` variant)."""
    if kind not in ("RII_RIII_only", "all_moves"):
        raise ValueError(f"unknown bound kind {kind!r}")
    if v1.config != v2.config:
        raise ValueError("values were computed with different configurations")
    has_eps = v1.config.epsilon is not None
    if kind == "RII_RIII_only" and has_eps:
        raise ValueError("the RII/RIII bound uses the invariant without eps and delta")
    if kind == "all_moves" and not has_eps:
        raise ValueError("the all-moves bound needs eps and delta")
    return math.ceil(abs(v1.value - v2.value) / 2)


def trivial_value(cfg: IuConfig) -> IuValue:
    """Value on a crossing-free diagram with the same number of components."""
    return iu(LinkDiagram.unknot(cfg.matrices.n), cfg)


def trace(s: MoveSequence, cfg: IuConfig, threads: int = 1) -> list[IuValue]:
    """Invariant after each move; the link (hence ``u(L)``) never changes."""
    diagrams = run_sequence(s)
    base = link_u(s.initial, cfg.budget)
    out = []
    for k, d in enumerate(diagrams):
        v = iu(d, cfg, threads, u_link=base)
        if not v.exact:
            raise OracleUnresolved(f"{cfg.label()} unresolved: {v}", step=k)
        out.append(v)
    return out
