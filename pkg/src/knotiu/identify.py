"""Fingerprints of small links and lookup in the bundled catalogue.

A fingerprint is a tuple of invariants that does not depend on orientation
or chirality: component count, the sorted absolute linking numbers, the
determinant, the bracket up to units ``+-A^k`` (minimised over mirroring),
the same class for each component taken alone and, for knots, ``|signature|``.
Catalogue entries match up to mirror image, which is harmless for
unknotting numbers.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .bracket import determinant, kauffman_bracket
from .diagram import LinkDiagram, linking_matrix, pieces, sublink
from .moves import simplify
from .poly import LaurentPoly
from .seifert import seifert


@dataclass(frozen=True)
class Fingerprint:
    components: int
    abs_lk: tuple[int, ...]
    determinant: int
    jones_class: tuple[tuple[int, int], ...]
    component_classes: tuple[tuple[tuple[int, int], ...], ...]
    abs_signature: Optional[int]

    def to_json(self) -> dict:
        return {
            "components": self.components,
            "abs_lk": list(self.abs_lk),
            "determinant": self.determinant,
            "jones_class": [list(p) for p in self.jones_class],
            "component_classes": [[list(p) for p in c] for c in self.component_classes],
            "abs_signature": self.abs_signature,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Fingerprint":
        return cls(
            obj["components"],
            tuple(obj["abs_lk"]),
            obj["determinant"],
            tuple(tuple(p) for p in obj["jones_class"]),
            tuple(tuple(tuple(p) for p in c) for c in obj["component_classes"]),
            obj["abs_signature"],
        )


def _unit_normal(p: LaurentPoly) -> tuple[tuple[int, int], ...]:
    if p.is_zero():
        return ()
    lo = p.min_exp()
    s = 1 if p.coeff(lo) > 0 else -1
    return tuple((e - lo, s * c) for e, c in p.terms.items())


def bracket_class(d: LinkDiagram) -> tuple[tuple[int, int], ...]:
    """The bracket modulo ``+-A^k`` and ``A -> 1/A``."""
    b = kauffman_bracket(d)
    return min(_unit_normal(b), _unit_normal(b.substitute_power(-1)))


@functools.lru_cache(maxsize=8192)
def fingerprint(d: LinkDiagram) -> Fingerprint:
    lk = linking_matrix(d)
    abs_lk = tuple(sorted(abs(lk[i][j]) for i in range(d.n) for j in range(i + 1, d.n)))
    comps = tuple(sorted(bracket_class(sublink(d, [k])) for k in range(1, d.n + 1))) if d.n > 1 else ()
    sig = abs(seifert(d).signature) if d.n == 1 else None
    return Fingerprint(d.n, abs_lk, determinant(d), bracket_class(d), comps, sig)


@dataclass(frozen=True)
class CatalogueEntry:
    name: str
    diagram: LinkDiagram
    unknotting_number: int
    citation: str
    fingerprint: Fingerprint


class NotFound:
    """Identification failed; carries the fingerprint that was looked up."""

    def __init__(self, fp: Fingerprint):
        self.fingerprint = fp

    def __bool__(self) -> bool:
        return False

    def __repr__(self) -> str:
        return "NotFound()"


def trivial_fingerprint(k: int) -> Fingerprint:
    return fingerprint(LinkDiagram.unknot(k))


@functools.lru_cache(maxsize=1)
def catalogue() -> tuple[CatalogueEntry, ...]:
    from .io import diagram_from_json

    text = resources.files("knotiu").joinpath("data/catalogue.json").read_text()
    out = []
    for obj in json.loads(text)["entries"]:
        out.append(CatalogueEntry(
            obj["name"], diagram_from_json(obj["diagram"]), obj["u"], obj["citation"],
            Fingerprint.from_json(obj["fingerprint"]),
        ))
    return tuple(out)


@functools.lru_cache(maxsize=1)
def _index() -> dict[Fingerprint, CatalogueEntry]:
    return {e.fingerprint: e for e in catalogue()}


def lookup(fp: Fingerprint) -> Optional[CatalogueEntry]:
    return _index().get(fp)


def entry(name: str) -> CatalogueEntry:
    for e in catalogue():
        if e.name == name:
            return e
    raise KeyError(name)


def identify(d: LinkDiagram, budget: int = 2000):
    """Catalogue entry for the link of ``d``, or :class:`NotFound`.

    Trivial links of any size are recognised without the catalogue when the
    diagram simplifies to no crossings.
    """
    if len(pieces(d)) > 1 or d.c > 0:
        d = simplify(d, budget)[0]
    if not d.crossings:
        return _trivial_entry(d.n)
    fp = fingerprint(d)
    hit = lookup(fp)
    return hit if hit is not None else NotFound(fp)


@functools.lru_cache(maxsize=64)
def _trivial_entry(k: int) -> CatalogueEntry:
    for e in catalogue():
        if e.diagram.c == 0 and e.diagram.n == k:
            return e
    d = LinkDiagram.unknot(k)
    return CatalogueEntry(f"trivial-{k}", d, 0, "crossing-free diagram", fingerprint(d))
