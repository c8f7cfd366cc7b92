"""Checks of how iu moves under a single Reidemeister move."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from knotiu.diagram import LinkDiagram, SignMatrixPair
from knotiu.invariants import IuConfig, iu, link_u, OracleUnresolved
from knotiu.moves import RI_ADD, RI_REMOVE, RII_ADD, RII_REMOVE, RIII, MoveEvent, apply, bigon_crossings

from structural import created_bigon

LIMIT = {RI_ADD: 0, RI_REMOVE: 0, RII_ADD: 1, RII_REMOVE: 1, RIII: 2}


def random_matrices(rng: random.Random, n: int) -> SignMatrixPair:
    S = [[0] * n for _ in range(n)]
    T = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            s = rng.choice((-1, 0, 1)) if i != j or n > 1 else rng.choice((-1, 1))
            t = rng.choice((-1, 1)) if s else 0
            S[i][j] = S[j][i] = s
            T[i][j] = T[j][i] = t
    return SignMatrixPair(S, T)


def ri_correction_step(sign: int, eps: int, delta: int) -> Fraction:
    """Expected change of the eps, delta variant under an RI adding a crossing of ``sign``."""
    table = {(1, 1): 2, (-1, 1): -1, (1, -1): -1, (-1, -1): 2}
    return eps * table[(sign, delta)]


def rii_site(d: LinkDiagram, e: MoveEvent):
    """(components, matched) of the bigon an RII_add creates."""
    E = apply(d, e)
    b = created_bigon(d, E)
    x, _ = bigon_crossings(E, b.site)
    cr = E.crossing(x)
    return (cr.over_component, cr.under_component), e.matched


def check_triple(d: LinkDiagram, e: MoveEvent, mats: SignMatrixPair, budget: int = 3000) -> Optional[dict]:
    """Check every single-move bound on iu for one move; None if an oracle
    call did not resolve.  Raises AssertionError on a violation."""
    E = apply(d, e)
    try:
        base = link_u(d, budget)
    except OracleUnresolved:
        return None
    out = {}
    for signed in (False, True):
        cfg = IuConfig(mats, signed=signed, budget=budget)
        a, b = iu(d, cfg, u_link=base), iu(E, cfg, u_link=base)
        if not (a.exact and b.exact):
            return None
        delta = abs(b.value - a.value)
        assert delta <= LIMIT[e.kind], (e.kind, signed, a.value, b.value)
        out["signed" if signed else "abs"] = delta
    if e.kind in (RI_ADD, RI_REMOVE):
        new, old = (E, d) if e.kind == RI_ADD else (d, E)
        sign = _new_crossing_sign(old, new)
        for eps in (1, -1):
            for dl in (1, -1):
                cfg = IuConfig(mats, eps, dl, budget=budget)
                step = iu(new, cfg, u_link=base).value - iu(old, cfg, u_link=base).value
                assert step == ri_correction_step(sign, eps, dl), (sign, eps, dl, step)
    if e.kind == RII_ADD:
        (i, j), matched = rii_site(d, e)
        s = mats.s(i, j)
        if s == 0 or (matched and s == -1) or (not matched and s == 1):
            assert out["abs"] == 0 and out["signed"] == 0, (matched, s, out)
    return out


def _new_crossing_sign(old: LinkDiagram, new: LinkDiagram) -> int:
    from knotiu.diagram import writhe

    return writhe(new) - writhe(old)
