"""Diagrams from braid words: braid closures and plat closures.

A generator is a signed index: ``+i`` is a positive crossing between
strands ``i`` and ``i + 1``, ``-i`` a negative one.
"""

from __future__ import annotations

from typing import Sequence

from ._net import Net
from .diagram import LinkDiagram


def _crossing(net: Net, left: int, right: int, g: int) -> tuple[int, int]:
    """Add a crossing above the edges ``left``/``right`` (running upward) and
    return the new upper edges."""
    nw = net.new_label((0, net._next_label))
    ne = net.new_label((0, net._next_label))
    if g > 0:
        net.new_crossing([right, ne, nw, left], True, False)
    else:
        net.new_crossing([left, right, ne, nw], True, True)
    # the left strand ends on the right and vice versa
    return ne, nw


def _replace(net: Net, old: int, new: int) -> None:
    for sl in net.slots.values():
        for k in range(4):
            if sl[k] == old:
                sl[k] = new


def braid_closure(word: Sequence[int], strands: int | None = None) -> LinkDiagram:
    """Closure of a braid with strands oriented upward."""
    n = strands or (max((abs(g) for g in word), default=0) + 1)
    net = Net()
    bottom = [net.new_label((0, k)) for k in range(n)]
    cur = list(bottom)
    for g in word:
        i = abs(g) - 1
        if not 0 <= i < n - 1:
            raise ValueError(f"generator {g} out of range for {n} strands")
        cur[i + 1], cur[i] = _crossing(net, cur[i], cur[i + 1], g)
    for k in range(n):
        if cur[k] == bottom[k]:
            net.free[bottom[k]] = None
        else:
            _replace(net, cur[k], bottom[k])
    return net.to_diagram()


def plat_closure(word: Sequence[int], strands: int = 4) -> LinkDiagram:
    """Plat closure: strands paired (1,2), (3,4), ... by cups below and caps
    above.  The orientation is chosen by walking the result."""
    if strands % 2:
        raise ValueError("a plat needs an even number of strands")
    net = Net()
    cur = []
    for k in range(strands // 2):
        lab = net.new_label((0, k))
        cur += [lab, lab]
    for g in word:
        i = abs(g) - 1
        if not 0 <= i < strands - 1:
            raise ValueError(f"generator {g} out of range for {strands} strands")
        cur[i + 1], cur[i] = _crossing(net, cur[i], cur[i + 1], g)
    for k in range(0, strands, 2):
        a, b = cur[k], cur[k + 1]
        if a == b:
            net.free[a] = None
        else:
            _replace(net, b, a)
            cur = [a if c == b else c for c in cur]
    # the builder's flags are provisional; pick a consistent orientation
    net.reorient()
    return net.to_diagram()
