"""Named diagrams shipped with the package.

Two kinds live here: small standard links taken from the catalogue (``unknot``,
``Hopf``, ``T(2,4)``, ``3_1``, ``10_2`` ...) and the reconstructed diagrams
``U``, ``example``, ``DE`` and ``FG``.  A reconstructed fixture carries a
manifest of facts it is required to satisfy; :mod:`knotiu.verify` checks them.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Any, Optional

from .diagram import LinkDiagram
from .identify import catalogue, entry
from .io import diagram_from_json
from .moves import MoveEvent, MoveSequence

RECONSTRUCTED = ("U", "example", "DE", "FG")


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    diagram: LinkDiagram
    crossing_names: dict = field(default_factory=dict, compare=False)
    sequence: Optional[MoveSequence] = None
    move: Optional[MoveEvent] = None
    partner: Optional["Fixture"] = None
    manifest: tuple = ()

    def crossing(self, label) -> int:
        """Crossing index for a label such as ``"p"``, or an index as is."""
        if isinstance(label, int):
            return label
        if label in self.crossing_names:
            return self.crossing_names[label]
        if str(label).isdigit():
            return int(label)
        raise KeyError(f"{self.name} has no crossing named {label!r}")

    @classmethod
    def from_json(cls, obj: dict[str, Any], name: Optional[str] = None) -> "Fixture":
        d = diagram_from_json(obj["diagram"])
        seq = None
        if obj.get("sequence") is not None:
            seq = MoveSequence(d, tuple(MoveEvent.from_text(t) for t in obj["sequence"]))
        partner = None
        if obj.get("partner"):
            p = dict(obj["partner"])
            p.setdefault("description", "")
            partner = cls.from_json(p, name=f"{obj['name']}:partner")
        return cls(
            name or obj["name"], obj.get("description", ""), d, dict(obj.get("crossing_names", {})), seq,
            MoveEvent.from_text(obj["move"]) if obj.get("move") else None, partner,
            tuple(obj.get("manifest", ())),
        )


@functools.lru_cache(maxsize=None)
def load(name: str) -> Fixture:
    """A reconstructed fixture by name, or a catalogue link as a bare fixture."""
    if name in RECONSTRUCTED:
        text = resources.files("knotiu").joinpath(f"data/fixtures/{name}.json").read_text()
        return Fixture.from_json(json.loads(text))
    try:
        e = entry(name)
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; try one of {', '.join(names())}") from None
    return Fixture(e.name, e.citation, e.diagram)


def names() -> list[str]:
    return list(RECONSTRUCTED) + [e.name for e in catalogue()]


def diagram(name: str) -> LinkDiagram:
    return load(name).diagram
