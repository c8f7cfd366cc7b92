"""Regular and irregular smoothing at a single crossing."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from ._net import Net
from .diagram import DiagramError, LinkDiagram, canonical_form

REGULAR = "regular"
IRREGULAR = "irregular"


@dataclass(frozen=True)
class SmoothedResult:
    diagram: LinkDiagram
    oriented: bool
    component_count: int
    origin: tuple[str, int, str]


def diagram_id(d: LinkDiagram) -> str:
    return hashlib.sha1(repr(canonical_form(d)).encode()).hexdigest()[:12]


def _smooth(d: LinkDiagram, x: int, mode: str) -> SmoothedResult:
    if not 0 <= x < d.c:
        raise DiagramError(f"unknown crossing {x}")
    net = Net.from_diagram(d)
    hu = 0 if net.ufwd[x] else 2
    ho = 1 if net.ofwd[x] else 3
    tu, to = hu ^ 2, ho ^ 2
    if mode == REGULAR:
        net.resolve({x: ((hu, to), (ho, tu))})
    else:
        net.resolve({x: ((hu, ho), (tu, to))})
        net.reorient()
    out = net.to_diagram()
    return SmoothedResult(out, mode == REGULAR, out.n, (diagram_id(d), x, mode))


def regular_smooth(d: LinkDiagram, x: int) -> SmoothedResult:
    """Delete crossing ``x`` and reconnect the strands along their orientations."""
    return _smooth(d, x, REGULAR)


def irregular_smooth(d: LinkDiagram, x: int) -> SmoothedResult:
    """Delete crossing ``x`` and reconnect against the orientations.

    The result has no meaningful orientation; the one stored on the returned
    diagram is an arbitrary deterministic choice.
    """
    return _smooth(d, x, IRREGULAR)


def smooth(d: LinkDiagram, x: int, mode: str) -> SmoothedResult:
    if mode not in (REGULAR, IRREGULAR):
        raise ValueError(f"mode must be '{REGULAR}' or '{IRREGULAR}'")
    return _smooth(d, x, mode)
