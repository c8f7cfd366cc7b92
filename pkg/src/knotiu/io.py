"""Diagram serialization: a JSON object and a plain PD text format.

JSON::

    {"crossings": [[a, b, c, d], ...], "components": [[first, last], ...],
     "free_loops": k}

Crossing-free components after the last ranged one are counted in
``free_loops``; one sitting between ranged components is written ``null``
to keep component numbering.  A ``"signs"`` list is added only when the
arc numbering cannot determine the signs (two-arc components running
through one crossing pair both ways).

PD text::

    components: 1-6, 7-8, loop
    X(1,5,2,4)
    ...
    signs: + - +        (optional, same rule as above)
"""

from __future__ import annotations

import json
import re
from typing import Any

from .diagram import LinkDiagram, derive_signs


class ParseError(ValueError):
    def __init__(self, msg: str, line: int = 0, col: int = 0):
        self.line, self.col = line, col
        where = f"{line}:{col}: " if line else ""
        super().__init__(where + msg)


def _needs_signs(d: LinkDiagram) -> bool:
    return derive_signs(d.crossings, d.components) != d.signs


def _split_components(d: LinkDiagram):
    comps = list(d.components)
    trailing = 0
    while len(comps) > 1 and comps[-1] is None:
        comps.pop()
        trailing += 1
    if comps == [None]:
        return [], trailing + 1
    return comps, trailing


def diagram_to_json(d: LinkDiagram, **extra: Any) -> dict:
    comps, free = _split_components(d)
    out: dict[str, Any] = {
        "crossings": [list(x) for x in d.crossings],
        "components": [None if r is None else list(r) for r in comps],
        "free_loops": free,
    }
    if _needs_signs(d):
        out["signs"] = list(d.signs)
    out.update(extra)
    return out


def diagram_from_json(obj: Any) -> LinkDiagram:
    if not isinstance(obj, dict):
        raise ParseError("diagram JSON must be an object")
    try:
        xs = obj.get("crossings", [])
        comps = obj.get("components", [])
        free = int(obj.get("free_loops", 0))
        if free < 0:
            raise ParseError("free_loops must be non-negative")
        for x in xs:
            if not isinstance(x, list) or not all(isinstance(a, int) for a in x):
                raise ParseError(f"bad crossing {x!r}")
        ranges = []
        for r in comps:
            if r is None:
                ranges.append(None)
            elif isinstance(r, list) and len(r) == 2 and all(isinstance(a, int) for a in r):
                ranges.append((r[0], r[1]))
            else:
                raise ParseError(f"bad component range {r!r}")
        signs = obj.get("signs")
        if signs is not None and (len(signs) != len(xs) or any(s not in (1, -1) for s in signs)):
            raise ParseError("signs must be a list of +1/-1, one per crossing")
        if not ranges and not free:
            raise ParseError("diagram has no components")
        return LinkDiagram.from_pd([tuple(x) for x in xs], ranges, free, signs)
    except (TypeError, AttributeError) as exc:
        raise ParseError(f"malformed diagram JSON: {exc}") from None


def dumps(d: LinkDiagram, **extra: Any) -> str:
    return json.dumps(diagram_to_json(d, **extra))


def loads(text: str) -> LinkDiagram:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return diagram_from_json(obj)


# ------------------------------------------------------------------ PD text


def to_pd_text(d: LinkDiagram) -> str:
    parts = ["loop" if r is None else f"{r[0]}-{r[1]}" for r in d.components]
    lines = ["components: " + ", ".join(parts)]
    lines += [f"X({','.join(map(str, x))})" for x in d.crossings]
    if _needs_signs(d):
        lines.append("signs: " + " ".join("+" if s == 1 else "-" for s in d.signs))
    return "\n".join(lines) + "\n"


_X = re.compile(r"X\(\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def from_pd_text(text: str) -> LinkDiagram:
    comps = None
    xs = []
    signs = None
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        body = line.strip()
        if not body:
            continue
        col = len(line) - len(line.lstrip()) + 1
        low = body.lower()
        if low.startswith("components:"):
            if comps is not None:
                raise ParseError("repeated components header", n, col)
            comps = []
            rest = body[len("components:"):]
            offset = col + len("components:")
            for m in re.finditer(r"[^,]+", rest):
                tok = m.group().strip()
                tcol = offset + m.start() + (len(m.group()) - len(m.group().lstrip()))
                if tok == "loop":
                    comps.append(None)
                    continue
                rm = re.fullmatch(r"(\d+)\s*-\s*(\d+)", tok)
                if not rm:
                    raise ParseError(f"bad component range {tok!r}", n, tcol)
                comps.append((int(rm.group(1)), int(rm.group(2))))
        elif low.startswith("signs:"):
            signs = []
            rest = body[len("signs:"):]
            for m in re.finditer(r"\S+", rest):
                if m.group() not in ("+", "-"):
                    raise ParseError(f"sign must be + or -, got {m.group()!r}", n, col + len("signs:") + m.start())
                signs.append(1 if m.group() == "+" else -1)
        else:
            pos = 0
            while pos < len(body):
                m = _X.match(body, pos)
                if not m:
                    raise ParseError(f"expected X(a,b,c,d) at {body[pos:pos + 12]!r}", n, col + pos)
                xs.append(tuple(int(g) for g in m.groups()))
                pos = m.end()
                while pos < len(body) and body[pos] in " \t,;":
                    pos += 1
    if comps is None:
        raise ParseError("missing 'components:' header", 1, 1)
    if signs is not None and len(signs) != len(xs):
        raise ParseError(f"{len(signs)} signs for {len(xs)} crossings")
    return LinkDiagram.from_pd(xs, comps, 0, signs)


def read_diagram(text: str) -> LinkDiagram:
    """Parse either format, deciding by the first non-blank character."""
    if text.lstrip().startswith("{"):
        return loads(text)
    return from_pd_text(text)
