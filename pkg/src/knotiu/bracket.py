"""Kauffman bracket and Jones polynomial.

Conventions: at a crossing ``X(a, b, c, d)`` the A-smoothing joins ``a-b``
and ``c-d``; the B-smoothing joins ``a-d`` and ``b-c``.  The loop value is
``delta = -A^2 - A^-2`` and the one-loop diagram has bracket 1.

:func:`jones` returns ``V(t)`` written in ``q = t^(1/2)``, so that links with
an even number of components also get integer exponents.  With these
choices the positive (right-handed) trefoil has ``V = t + t^3 - t^4``, i.e.
``q^2 + q^6 - q^8``.

The bracket is computed by a tangle dynamic program over boundary
matchings, compiled when the extension was built and pure Python otherwise.
``BACKEND`` names the kernel picked at import.  Full state enumeration
(compiled only) is kept as an independent check.
"""

from __future__ import annotations

import functools

from .diagram import LinkDiagram, writhe
from .poly import LaurentPoly

try:
    from ._bracket_ext import state_counts as _ext_state_counts
    from ._bracket_ext import tangle_dp as _ext_tangle_dp
except ImportError:  # pragma: no cover - depends on the build
    _ext_state_counts = _ext_tangle_dp = None

BACKEND = "cython" if _ext_tangle_dp is not None else "python"
# int64 coefficients stay exact well past this size
EXT_MAX_CROSSINGS = 28

DELTA = LaurentPoly({2: -1, -2: -1})


def _state_poly(counts, c: int, extra_loops: int) -> LaurentPoly:
    acc: dict[int, int] = {}
    for na, row in enumerate(counts):
        for loops, k in enumerate(row):
            if k:
                p = LaurentPoly.monomial(2 * na - c, k) * DELTA ** (loops - 1 + extra_loops)
                for e, v in p.terms.items():
                    acc[e] = acc.get(e, 0) + v
    return LaurentPoly(acc)


def bracket_states(d: LinkDiagram) -> LaurentPoly:
    """Bracket by full state enumeration with the compiled kernel."""
    if _ext_state_counts is None:
        raise RuntimeError("compiled kernel not available")
    flat = [a for x in d.crossings for a in x]
    counts = _ext_state_counts(flat, d.arc_count)
    return _state_poly(counts, d.c, len(d.free_loop_components()))


def _greedy_order(crossings) -> list[int]:
    remaining = set(range(len(crossings)))
    open_labels: set[int] = set()
    order = []
    while remaining:
        best = min(remaining, key=lambda i: (-sum(a in open_labels for a in crossings[i]), i))
        remaining.discard(best)
        order.append(best)
        for a in crossings[best]:
            if a in open_labels:
                open_labels.discard(a)
            else:
                open_labels.add(a)
        # a label seen twice at one crossing is closed
    return order


def bracket_dp_ext(d: LinkDiagram) -> LaurentPoly:
    """Bracket by the compiled tangle dynamic program."""
    if _ext_tangle_dp is None:
        raise RuntimeError("compiled kernel not available")
    free = len(d.free_loop_components())
    if not d.crossings:
        return DELTA ** (free - 1)
    flat = [a for i in _greedy_order(d.crossings) for a in d.crossings[i]]
    off, coeffs = _ext_tangle_dp(flat, d.arc_count)
    total = LaurentPoly({k - off: v for k, v in enumerate(coeffs) if v})
    return total.exact_div(DELTA) * DELTA ** free


def bracket_dp(d: LinkDiagram) -> LaurentPoly:
    """Bracket by a tangle dynamic program (pure Python)."""
    free = len(d.free_loop_components())
    if not d.crossings:
        return DELTA ** (free - 1)
    # state: sorted tuple of (label, partner) over open labels -> polynomial as dict
    states: dict[tuple, dict[int, int]] = {(): {0: 1}}
    delta_pows = [LaurentPoly.constant(1)]
    for i in _greedy_order(d.crossings):
        a, b, c, dd = d.crossings[i]
        nxt: dict[tuple, dict[int, int]] = {}
        for key, poly in states.items():
            for shift, pairs in ((1, ((a, b), (c, dd))), (-1, ((a, dd), (b, c)))):
                m = dict(key)
                loops = 0
                for u, v in pairs:
                    if u == v:
                        loops += 1
                    elif m.get(u) == v:
                        del m[u], m[v]
                        loops += 1
                    else:
                        fu = m.pop(u, None)
                        if fu is not None:
                            del m[fu]
                        else:
                            fu = u
                        fv = m.pop(v, None)
                        if fv is not None:
                            del m[fv]
                        else:
                            fv = v
                        m[fu] = fv
                        m[fv] = fu
                nk = tuple(sorted(m.items()))
                while len(delta_pows) <= loops:
                    delta_pows.append(delta_pows[-1] * DELTA)
                target = nxt.setdefault(nk, {})
                for e, v in poly.items():
                    for e2, v2 in delta_pows[loops].terms.items():
                        ee = e + shift + e2
                        target[ee] = target.get(ee, 0) + v * v2
        states = {k: {e: v for e, v in p.items() if v} for k, p in nxt.items()}
    total = LaurentPoly(states.get((), {}))
    return total.exact_div(DELTA) * DELTA ** free


@functools.lru_cache(maxsize=8192)
def kauffman_bracket(d: LinkDiagram) -> LaurentPoly:
    """Unnormalized bracket; orientation is ignored."""
    if _ext_tangle_dp is not None and d.c <= EXT_MAX_CROSSINGS:
        return bracket_dp_ext(d)
    return bracket_dp(d)


def normalized_bracket(d: LinkDiagram) -> LaurentPoly:
    """``(-A^3)^(-w) <D>``, invariant under all three moves."""
    w = writhe(d)
    return LaurentPoly.monomial(-3 * w, -1 if w % 2 else 1) * kauffman_bracket(d)


def jones(d: LinkDiagram) -> LaurentPoly:
    """Jones polynomial in ``q = t^(1/2)`` (``A = q^(-1/2)``)."""
    f = normalized_bracket(d)
    return LaurentPoly({-e // 2: v for e, v in f.terms.items()})


def jones_in_t(d: LinkDiagram) -> LaurentPoly:
    """Jones polynomial in ``t``; only for an odd number of components."""
    return jones(d).rescale_exponents(2)


def determinant(d: LinkDiagram) -> int:
    """``|V(-1)|``, evaluated exactly: ``t = -1`` means ``q = i``."""
    units = [(1, 0), (0, 1), (-1, 0), (0, -1)]
    re = im = 0
    for e, v in jones(d).terms.items():
        r, i = units[e % 4]
        re += v * r
        im += v * i
    # all exponents share a parity, so one part vanishes
    return abs(re) + abs(im)
