"""Command-line front end: ``knotiu <subcommand> [options]``.

Exit codes: 0 success, 1 a requested check failed (or the diagram is
invalid for ``validate``), 2 unreadable input, 3 an oracle result was needed
exactly but only an interval was found.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from .diagram import DiagramError, LinkDiagram, SignMatrixPair, validate, writhe
from .identify import identify
from .invariants import IuConfig, OracleUnresolved, g, g0, ilk, iu, move_bound, trace, trivial_value
from .io import ParseError, diagram_to_json, read_diagram
from .moves import MoveError, MoveSequence, enumerate_moves, parse_events, run_sequence, simplify
from .smoothing import smooth
from .unknotting import DEFAULT_BUDGET, UCache, default_cache_path, set_cache, u

EXIT_FAIL, EXIT_PARSE, EXIT_UNRESOLVED = 1, 2, 3


class CliError(Exception):
    def __init__(self, msg: str, code: int = EXIT_PARSE):
        super().__init__(msg)
        self.code = code


# ------------------------------------------------------------------ inputs


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror}") from None


def _load(args, path: Optional[str] = None, fixture: Optional[str] = None):
    """(diagram, fixture or None) from --diagram/--fixture."""
    path = path if path is not None else args.diagram
    fixture = fixture if fixture is not None else getattr(args, "fixture", None)
    if fixture:
        from .fixtures import load

        try:
            fx = load(fixture)
        except KeyError as exc:
            raise CliError(str(exc.args[0])) from None
        return fx.diagram, fx
    if not path:
        raise CliError("a diagram is required (--diagram PATH or --fixture NAME)")
    try:
        d = read_diagram(_read_text(path))
    except (ParseError, DiagramError) as exc:
        raise CliError(f"{path}:{exc}" if isinstance(exc, ParseError) and exc.line else f"{path}: {exc}") from None
    rep = validate(d)
    if not rep.ok and args.command != "validate":
        raise CliError(f"{path}: invalid diagram: " + "; ".join(rep.problems))
    return d, None


def _matrix(text: Optional[str], n: int, what: str):
    """A sign matrix from a file or an inline literal: JSON (``[[-1,0],[0,1]]``),
    whitespace rows, or a single number meaning that value everywhere."""
    if text is None:
        return None
    raw = _read_text(text) if os.path.exists(text) or text == "-" else text
    raw = raw.strip()
    try:
        if raw.startswith("["):
            m = json.loads(raw)
        elif "\n" not in raw and len(raw.split()) == 1:
            m = [[int(raw)] * n for _ in range(n)]
        else:
            m = [[int(v) for v in line.split()] for line in raw.splitlines() if line.strip()]
    except (ValueError, json.JSONDecodeError) as exc:
        raise CliError(f"{what}: cannot read a matrix from {text!r} ({exc})") from None
    if isinstance(m, int):
        m = [[m]]
    return m


def _config(args, d: LinkDiagram) -> IuConfig:
    if args.s is not None:
        if d.n != 1:
            raise CliError("--s is the knot shorthand; use --S/--T for links")
        mats = SignMatrixPair(((args.s,),), ((1,),))
    else:
        S = _matrix(args.S, d.n, "--S")
        T = _matrix(args.T, d.n, "--T")
        if S is None:
            S = [[1] * d.n for _ in range(d.n)]
        if T is None:
            T = S
        try:
            mats = SignMatrixPair(S, T)
        except DiagramError as exc:
            raise CliError(str(exc)) from None
    if (args.eps is None) != (args.delta is None):
        raise CliError("--eps and --delta go together")
    return IuConfig(mats, args.eps, args.delta, args.signed, args.budget)


def _crossing(d: LinkDiagram, fx, label: str) -> int:
    if fx is not None and label in fx.crossing_names:
        return fx.crossing_names[label]
    try:
        x = int(label)
    except ValueError:
        raise CliError(f"unknown crossing {label!r}") from None
    if not 0 <= x < d.c:
        raise CliError(f"unknown crossing {x}; the diagram has crossings 0..{d.c - 1}")
    return x


def _emit(args, obj, text: str) -> None:
    print(json.dumps(obj, indent=1) if args.json else text)


# ------------------------------------------------------------------ commands


def cmd_validate(args) -> int:
    d, _ = _load(args)
    rep = validate(d)
    obj = {"valid": rep.ok, "problems": rep.problems, "components": d.n, "crossings": d.c}
    if rep.ok:
        obj["writhe"] = writhe(d)
        text = f"valid: {d.n} component(s), {d.c} crossing(s), writhe {writhe(d)}"
    else:
        text = "invalid:\n" + "\n".join("  " + p for p in rep.problems)
    _emit(args, obj, text)
    return 0 if rep.ok else EXIT_FAIL


def cmd_identify(args) -> int:
    d, _ = _load(args)
    hit = identify(d, args.budget)
    fp = hit.fingerprint
    name = hit.name if hit else "unknown"
    obj = {"name": name, "fingerprint": fp.to_json()}
    if hit:
        obj["u"] = hit.unknotting_number
    text = name if not hit else f"{name} (u = {hit.unknotting_number})"
    text += f"\nfingerprint: determinant {fp.determinant}, |lk| {list(fp.abs_lk)}, |sigma| {fp.abs_signature}"
    _emit(args, obj, text)
    return 0


def cmd_smooth(args) -> int:
    d, fx = _load(args)
    x = _crossing(d, fx, args.crossing)
    res = smooth(d, x, args.mode)
    extra = {} if res.oriented else {"oriented": False}
    out = diagram_to_json(res.diagram, **extra)
    print(json.dumps(out))
    return 0


def cmd_moves(args) -> int:
    d, _ = _load(args)
    if args.apply:
        try:
            events = parse_events(_read_text(args.apply))
        except ValueError as exc:
            raise CliError(f"{args.apply}: {exc}") from None
        try:
            ds = run_sequence(MoveSequence(d, tuple(events)))
        except MoveError as exc:
            raise CliError(f"{args.apply}: {exc}", EXIT_FAIL) from None
        rows = [{"step": k, "crossings": e.c, "writhe": writhe(e)} for k, e in enumerate(ds)]
        obj = {"steps": rows, "final": diagram_to_json(ds[-1])}
        text = "\n".join(f"{r['step']:3d}  c={r['crossings']:<3d} w={r['writhe']}" for r in rows)
        _emit(args, obj, text)
        return 0
    moves = enumerate_moves(d, include_adds=args.all)
    obj = [{"move": m.to_text(), "kind": m.kind, **({"matched": m.matched} if m.matched is not None else {})}
           for m in moves]
    lines = [m.to_text() + ("" if m.matched is None else "  # " + ("matched" if m.matched else "unmatched"))
             for m in moves]
    _emit(args, obj, "\n".join(lines) if lines else "(no moves)")
    return 0


def cmd_simplify(args) -> int:
    d, _ = _load(args)
    out, seq = simplify(d, args.budget)
    obj = {"diagram": diagram_to_json(out), "moves": [e.to_text() for e in seq.events]}
    _emit(args, obj, json.dumps(diagram_to_json(out)) + "\n" + seq.to_text().rstrip())
    return 0


def cmd_unknotting(args) -> int:
    d, _ = _load(args)
    ui = u(d, args.budget)
    text = f"u = {ui}" + "".join(f"\n  {w.kind}: {w.value} {w.detail}".rstrip() for w in ui.witnesses)
    _emit(args, ui.to_json(), text)
    return 0


def cmd_invariant(args) -> int:
    d, _ = _load(args)
    if args.which in ("ilk", "g", "g0"):
        if d.n != 1:
            raise CliError(f"{args.which} is defined for knot diagrams only")
        s = ilk(d)
        val = {"ilk": s, "g": g(s), "g0": g0(s)}[args.which]
        obj = {"which": args.which, "value": val.to_json() if args.which == "ilk" else val}
        _emit(args, obj, str(val))
        return 0
    cfg = _config(args, d)
    v = iu(d, cfg, args.threads)
    text = f"{cfg.label()} = {v}"
    if args.ledger:
        for e in v.ledger:
            text += (f"\n  x{e.crossing} {e.member:<7} comps {e.components} t={e.t:+d} sign={e.sign:+d} "
                     f"u={e.u_smoothed if e.u_smoothed is not None else '-'} -> {e.lo if e.exact else (e.lo, e.hi)}")
        if v.correction:
            text += f"\n  correction {v.correction}"
    _emit(args, v.to_json(), text)
    return 0 if v.exact else EXIT_UNRESOLVED


def cmd_bound(args) -> int:
    d1, _ = _load(args)
    cfg = _config(args, d1)
    v1 = iu(d1, cfg, args.threads)
    if args.diagram2 or args.fixture2:
        d2, _ = _load(args, args.diagram2, args.fixture2)
        v2 = iu(d2, cfg, args.threads)
    else:
        v2 = trivial_value(cfg)
    kind = "all_moves" if cfg.epsilon is not None else "RII_RIII_only"
    b = move_bound(v1, v2, kind)
    what = "Reidemeister moves" if kind == "all_moves" else "RII and RIII moves"
    obj = {"bound": b, "kind": kind, "values": [v1.to_json()["value"], v2.to_json()["value"]],
           "config": cfg.to_json()}
    _emit(args, obj, f"at least {b} {what} ({cfg.label()}: {v1} vs {v2})")
    return 0


def cmd_trace(args) -> int:
    d, fx = _load(args)
    if args.sequence:
        try:
            events = tuple(parse_events(_read_text(args.sequence)))
        except ValueError as exc:
            raise CliError(f"{args.sequence}: {exc}") from None
        seq = MoveSequence(d, events)
    elif fx is not None and fx.sequence is not None:
        seq = fx.sequence
    else:
        raise CliError("trace needs --sequence FILE (or a fixture that ships one)")
    cfg = _config(args, d)
    try:
        vals = trace(seq, cfg, args.threads)
    except MoveError as exc:
        raise CliError(str(exc), EXIT_FAIL) from None
    obj = {"config": cfg.to_json(), "label": cfg.label(), "values": [v.to_json()["value"] for v in vals]}
    _emit(args, obj, f"{cfg.label()}: " + " -> ".join(str(v) for v in vals))
    return 0


def cmd_verify_paper(args) -> int:
    from .verify import verify_paper

    rows = verify_paper(args.fixture or None, args.budget, args.threads)
    if args.json:
        print(json.dumps([r.to_json() for r in rows], indent=1))
    else:
        w1 = max(len(r.fixture) for r in rows)
        w2 = max(len(r.label) for r in rows)
        for r in rows:
            status = "PASS" if r.passed else "FAIL"
            line = f"{r.fixture:<{w1}}  {r.label:<{w2}}  expected {r.expected!s:<10} got {r.got!s:<10} {status}"
            if r.note:
                line += f"  ({r.note})"
            print(line)
        print(f"{sum(r.passed for r in rows)}/{len(rows)} checks pass")
    return 0 if all(r.passed for r in rows) else EXIT_FAIL


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    base = argparse.ArgumentParser(add_help=False)
    base.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="oracle search budget")
    base.add_argument("--cache", help="unknotting-number cache file (default: $KNOT_CACHE_DIR)")
    base.add_argument("--json", action="store_true", help="machine-readable output")
    base.add_argument("--threads", type=int, default=1)
    common = argparse.ArgumentParser(add_help=False, parents=[base])
    common.add_argument("--diagram", help="diagram file (JSON or PD text; '-' for stdin)")
    common.add_argument("--fixture", help="a shipped diagram by name (U, example, DE, FG, 3_1, Hopf, ...)")

    cfgp = argparse.ArgumentParser(add_help=False)
    cfgp.add_argument("--S", help="matrix S: file, JSON literal or a single value")
    cfgp.add_argument("--T", help="matrix T (defaults to S)")
    cfgp.add_argument("--s", type=int, choices=(1, -1), help="knot shorthand: S = (s), T = (+1)")
    cfgp.add_argument("--eps", type=int, choices=(1, -1))
    cfgp.add_argument("--delta", type=int, choices=(1, -1))
    cfgp.add_argument("--signed", action="store_true", help="drop the absolute values")

    p = argparse.ArgumentParser(prog="knotiu", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("validate", parents=[common], help="check a diagram's structure")
    sub.add_parser("identify", parents=[common], help="name the link from the catalogue")
    sp = sub.add_parser("smooth", parents=[common], help="smooth one crossing")
    sp.add_argument("--crossing", required=True, help="crossing index, or a fixture's crossing name")
    sp.add_argument("--mode", choices=("regular", "irregular"), default="regular")
    sp = sub.add_parser("moves", parents=[common], help="list Reidemeister moves or apply a sequence")
    sp.add_argument("--all", action="store_true", help="include the adding moves")
    sp.add_argument("--apply", help="move-sequence file to run")
    sub.add_parser("simplify", parents=[common], help="greedy simplification")
    sub.add_parser("unknotting", parents=[common], help="unknotting-number interval")
    sp = sub.add_parser("invariant", parents=[common, cfgp], help="ilk, g, g0 or iu")
    sp.add_argument("--which", choices=("ilk", "g", "g0", "iu"), default="iu")
    sp.add_argument("--ledger", action="store_true", help="show each crossing's contribution")
    sp = sub.add_parser("bound", parents=[common, cfgp], help="lower bound on moves between two diagrams")
    sp.add_argument("--diagram2", help="second diagram (default: crossing-free)")
    sp.add_argument("--fixture2")
    sp = sub.add_parser("trace", parents=[common, cfgp], help="invariant along a move sequence")
    sp.add_argument("--sequence", help="move-sequence file")
    sp = sub.add_parser("verify-paper", parents=[base], help="re-check every reconstructed fixture")
    sp.add_argument("--fixture", action="append", help="U, example, DE, FG or oracle (repeatable)")
    return p


COMMANDS = {
    "validate": cmd_validate, "identify": cmd_identify, "smooth": cmd_smooth, "moves": cmd_moves,
    "simplify": cmd_simplify, "unknotting": cmd_unknotting, "invariant": cmd_invariant, "bound": cmd_bound,
    "trace": cmd_trace, "verify-paper": cmd_verify_paper,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    cache_path = args.cache or default_cache_path()
    cache = UCache(cache_path) if cache_path else None
    if cache is not None:
        set_cache(cache)
    try:
        return COMMANDS[args.command](args)
    except CliError as exc:
        print(f"knotiu: {exc}", file=sys.stderr)
        return exc.code
    except OracleUnresolved as exc:
        print(f"knotiu: {exc}", file=sys.stderr)
        return EXIT_UNRESOLVED
    finally:
        if cache is not None:
            cache.save()
            set_cache(UCache())


if __name__ == "__main__":
    sys.exit(main())
