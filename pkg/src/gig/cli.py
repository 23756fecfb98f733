"""Command-line front end for graph incidence game analysis.

Subcommands: classify, order, rewrite, picture, strategy.  Output is
deterministic (identical invocations produce byte-identical JSON); exit
codes are 0 for a conclusive result, 1 for usage or parse errors, and 2
for results left inconclusive by a resource cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .classify import classify, game_summary, order_exact
from .cosets import DEFAULT_MAX_COSETS
from .graphs import (ColouredGraph, GraphFormatError, builtin_graph,
                     graph_from_json, parse_colour_spec, parse_graph)
from .pictures import (CROSSING_PAIRS, crossing_picture, from_embedding,
                       picture_from_json, picture_to_json)
from .rewriting import count_normal_forms, find_completion, load_h33_system
from .strategies import (build_strategy, game_observables, integer_closure,
                         verify_perfect)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INCONCLUSIVE = 2


class CliError(Exception):
    """Bad input or arguments; maps to exit code 1."""


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise CliError(f"environment variable {name} must be an integer,"
                       f" got {raw!r}")


def _positive(value: int, what: str) -> int:
    if value <= 0:
        raise CliError(f"{what} must be positive, got {value}")
    return value


def parse_duration(text: str) -> float:
    """Seconds from `90`, `90s`, `2m`, `1h`, or `500ms`."""
    t = text.strip().lower()
    scale = 1.0
    for suffix, s in (("ms", 0.001), ("s", 1.0), ("m", 60.0), ("h", 3600.0)):
        if t.endswith(suffix):
            t = t[: -len(suffix)]
            scale = s
            break
    try:
        value = float(t)
    except ValueError:
        raise CliError(f"bad duration {text!r}")
    if value <= 0:
        raise CliError(f"duration must be positive, got {text!r}")
    return value * scale


def load_graph(spec: str) -> ColouredGraph:
    """A builtin name like `k(3,3)` or a path to a graph file.

    Files ending in .json use the JSON graph format; anything else uses
    the `vertex`/`edge` line format.
    """
    path = Path(spec)
    if path.is_file():
        text = path.read_text()
        if path.suffix == ".json":
            return graph_from_json(text)
        return parse_graph(text)
    try:
        return builtin_graph(spec)
    except GraphFormatError:
        raise CliError(
            f"{spec!r} is neither a file nor a builtin graph; builtins are"
            " k(n), k(m,n), wheel(n), cycle(n), c2c2, petersen,"
            " magic-square, magic-pentagram")


def _coloured(args, default_spec: str = "zero") -> ColouredGraph:
    """Graph with colouring resolved: an explicit --colour wins, a graph
    file keeps its stored colours, and builtins fall back to the
    subcommand default."""
    g = load_graph(args.graph)
    spec = getattr(args, "colour", None)
    if spec is None:
        if Path(args.graph).is_file():
            return g
        spec = default_spec
    try:
        return parse_colour_spec(g, spec)
    except GraphFormatError as exc:
        raise CliError(str(exc))


def _emit(args, obj: dict, text_lines: list) -> None:
    if args.json:
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------
# classify

def cmd_classify(args) -> int:
    g = _coloured(args)
    mode = "with-oracle" if args.oracle else "theorem-only"
    report = classify(g, mode=mode, max_cosets=args.max_cosets,
                      budget=args.budget)
    summary = game_summary(g)
    obj = report.to_obj()
    obj["game"] = summary

    def fmt(name, verdict):
        line = f"{name}: {verdict.value}"
        if verdict.note:
            line += f"  ({verdict.note})"
        return line

    colour_src = args.colour or \
        ("from file" if Path(args.graph).is_file() else "zero")
    lines = [
        f"graph: {args.graph}  colour: {colour_src}"
        f"  components: {len(report.components)}",
        fmt("classically solvable", report.classically_solvable),
        fmt("group trivial (uncoloured)", report.trivial),
        fmt("J trivial", report.j_trivial),
        fmt("finite", report.finite),
        fmt("abelian", report.abelian),
        f"perfect classical strategy: {'yes' if summary['classical'] else 'no'}",
        f"perfect quantum strategy: {'yes' if summary['quantum'] else 'no'}",
        f"quantum advantage: {'yes' if summary['advantage'] else 'no'}",
    ]
    if report.order is not None:
        lines.append(f"order: {report.order}")
    if report.oracle is not None:
        lines.append(f"oracle: {json.dumps(report.oracle, sort_keys=True)}")
    _emit(args, obj, lines)

    verdicts = (report.classically_solvable, report.trivial, report.j_trivial,
                report.finite, report.abelian)
    if args.strict and any(v.value == "inconclusive" for v in verdicts):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


# ---------------------------------------------------------------------------
# order

def cmd_order(args) -> int:
    """Uncoloured |Γ(G)| by default; an explicit colour spec, or a nonzero
    colouring stored in a graph file, switches to the coloured group."""
    g = load_graph(args.graph)
    spec = args.coloured or args.colour
    if spec:
        g = parse_colour_spec(g, spec)
        res = order_exact(g, coloured=True, max_cosets=args.max_cosets)
    elif any(g.colour):
        res = order_exact(g, coloured=True, max_cosets=args.max_cosets)
    else:
        res = order_exact(g, coloured=False, max_cosets=args.max_cosets)
    obj = res.to_obj()
    if res.status == "exact":
        _emit(args, obj, [f"order: {res.order}"])
        return EXIT_OK
    _emit(args, obj, [f"order: inconclusive ({res.note})"])
    return EXIT_INCONCLUSIVE


# ---------------------------------------------------------------------------
# rewrite

def _require_h33(args):
    if args.system != "h33":
        raise CliError(f"unknown rewriting system {args.system!r};"
                       " only `h33` is bundled")
    return load_h33_system()


def cmd_rewrite_nf(args) -> int:
    system = _require_h33(args)
    word = tuple(w.strip() for w in args.word.split(",") if w.strip())
    for letter in word:
        if letter not in system.alphabet:
            raise CliError(f"letter {letter!r} not in system alphabet")
    nf = system.normal_form(word)
    obj = {"word": list(word), "normal_form": list(nf),
           "changed": nf != word}
    note = "" if nf != word else "  (unchanged)"
    _emit(args, obj, [f"word:        {' '.join(word)}",
                      f"normal form: {' '.join(nf) if nf else '1'}{note}"])
    return EXIT_OK


def cmd_rewrite_check(args) -> int:
    from .presentations import hmn

    system = _require_h33(args)
    term = system.check_termination()
    conf = system.check_local_confluence()
    rels = system.check_relations(hmn(3, 3))
    obj = {"terminating": term.ok, "locally_confluent": conf.ok,
           "relations_reduce": rels.ok, "rules": len(system.rules),
           "critical_pairs": conf.pairs}
    yn = lambda b: "yes" if b else "no"
    _emit(args, obj, [
        f"rules: {len(system.rules)}",
        f"terminating: {yn(term.ok)}; locally confluent: {yn(conf.ok)};"
        f" relations reduce: {yn(rels.ok)}",
        f"critical pairs joined: {conf.pairs}",
    ])
    return EXIT_OK if (term.ok and conf.ok and rels.ok) else EXIT_USAGE


def cmd_rewrite_kb(args) -> int:
    from .presentations import gamma, gamma_uncoloured

    g = load_graph(args.graph)
    if args.colour:
        p = gamma(parse_colour_spec(g, args.colour))
    else:
        p = gamma_uncoloured(g)
    seconds = parse_duration(args.budget) if args.budget else None
    res = find_completion(p, max_orders=args.max_orders,
                          max_rules=args.max_rules, seed=args.seed,
                          max_seconds=seconds)
    obj = {"status": res.status, "equations": res.equations,
           "rules_peak": res.rules_peak,
           "rules": len(res.system.rules) if res.system else None}
    if res.status == "complete":
        _emit(args, obj, [f"status: complete"
                          f"  rules: {len(res.system.rules)}"
                          f"  equations processed: {res.equations}"])
        return EXIT_OK
    _emit(args, obj, [f"status: exhausted  equations processed:"
                      f" {res.equations}  peak rules: {res.rules_peak}"])
    return EXIT_INCONCLUSIVE


def cmd_rewrite_census(args) -> int:
    system = _require_h33(args)
    counts = count_normal_forms(system, args.max_length)
    obj = {"max_length": args.max_length, "counts": counts}
    lines = ["length  normal forms"]
    lines += [f"{i:6d}  {c}" for i, c in enumerate(counts)]
    _emit(args, obj, lines)
    return EXIT_OK


# ---------------------------------------------------------------------------
# picture

def _picture_obj(pic) -> dict:
    word, a = pic.vankampen_relation()
    return {
        "closed": pic.is_closed(),
        "boundary_word": list(word),
        "character": list(pic.character()),
        "j_exponent": a,
        "relation": _relation_text(word, a),
    }


def _relation_text(word, a) -> str:
    lhs = " ".join(word) if word else "1"
    return f"{lhs} = {'J' if a else '1'}"


def cmd_picture_builtin(args) -> int:
    if args.name == "k33-crossing":
        from .graphs import magic_square_graph
        g = parse_colour_spec(magic_square_graph(), "odd")
        e, f = CROSSING_PAIRS["k33"]
    elif args.name == "k5-crossing":
        from .graphs import magic_pentagram_graph
        g = parse_colour_spec(magic_pentagram_graph(), "odd")
        e, f = CROSSING_PAIRS["k5"]
    else:
        raise CliError(f"unknown builtin picture {args.name!r};"
                       " choose k33-crossing or k5-crossing")
    pic = crossing_picture(g, e, f)
    rep = pic.validate()
    if not rep.ok:
        raise CliError("builtin picture failed validation: "
                       + "; ".join(rep.errors))
    obj = _picture_obj(pic)
    obj["valid"] = True
    if args.out:
        Path(args.out).write_text(picture_to_json(pic))
    word, a = pic.vankampen_relation()
    lines = [
        f"picture: {args.name}  valid: yes  closed:"
        f" {'yes' if pic.is_closed() else 'no'}",
        f"boundary word: ({', '.join(word)})",
        f"character: {''.join(str(c) for c in pic.character())}",
        f"relation: {_relation_text(word, a)}",
    ]
    if args.out:
        lines.append(f"wrote: {args.out}")
    _emit(args, obj, lines)
    return EXIT_OK


def cmd_picture_verify(args) -> int:
    try:
        pic = picture_from_json(Path(args.file).read_text())
    except (OSError, ValueError, KeyError) as exc:
        raise CliError(f"cannot load picture: {exc}")
    rep = pic.validate()
    obj = {"valid": rep.ok, "errors": list(rep.errors)}
    if rep.ok:
        obj.update(_picture_obj(pic))
        word, a = pic.vankampen_relation()
        _emit(args, obj, [
            "valid: yes",
            f"closed: {'yes' if pic.is_closed() else 'no'}",
            f"relation: {_relation_text(word, a)}",
        ])
        return EXIT_OK
    _emit(args, obj, ["valid: no"] + [f"  {e}" for e in rep.errors])
    return EXIT_USAGE


def cmd_picture_from_embedding(args) -> int:
    g = _coloured(args, default_spec="odd")
    try:
        pic = from_embedding(g)
    except ValueError as exc:
        raise CliError(str(exc))
    rep = pic.validate()
    if not rep.ok:
        raise CliError("constructed picture failed validation: "
                       + "; ".join(rep.errors))
    obj = _picture_obj(pic)
    obj["valid"] = True
    word, a = pic.vankampen_relation()
    lines = [
        f"valid: yes  closed: {'yes' if pic.is_closed() else 'no'}",
        f"character: {''.join(str(c) for c in pic.character())}",
        f"relation: {_relation_text(word, a)}",
    ]
    if pic.is_closed() and a == 1:
        lines.append("certifies J = 1 for this colouring")
        obj["certifies_j_trivial"] = True
    else:
        obj["certifies_j_trivial"] = False
    if args.out:
        Path(args.out).write_text(picture_to_json(pic))
        lines.append(f"wrote: {args.out}")
    _emit(args, obj, lines)
    return EXIT_OK


# ---------------------------------------------------------------------------
# strategy

def cmd_strategy_verify(args) -> int:
    if args.game not in ("k33", "k5"):
        raise CliError(f"unknown game {args.game!r}; choose k33 or k5")
    g, obs, _j = game_observables(args.game)
    if args.tamper:
        first = min(obs)
        obs = dict(obs)
        obs[first] = -obs[first]
    strat = build_strategy(g, obs)
    report = verify_perfect(strat, tol=args.tol)
    obj = {
        "game": args.game,
        "dimension": strat.dim,
        "tampered": bool(args.tamper),
        "ok": report.ok,
        "max_deviation": report.max_deviation,
        "violations": [{"kind": k, "where": str(w), "deviation": d}
                       for k, w, d in report.violations[:10]],
    }
    lines = [f"game: {args.game}  dimension: {strat.dim}"
             + ("  (tampered)" if args.tamper else ""),
             f"all checks pass: {'yes' if report.ok else 'no'}"
             f"  max deviation: {report.max_deviation:.3g}"]
    for kind, where, dev in report.violations[:10]:
        lines.append(f"violation: {kind} at {where} (deviation {dev:.3g})")
    if report.ok and args.closure:
        size = len(integer_closure(list(strat.first.values())))
        obj["closure_size"] = size
        lines.append(f"multiplicative closure: {size} elements")
    _emit(args, obj, lines)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser assembly

def _add_common(sp, max_cosets=False, budget=False, tol=False):
    sp.add_argument("--json", action="store_true",
                    help="machine-readable one-line JSON output")
    sp.add_argument("--jobs", type=int,
                    default=_env_int("GIG_JOBS", 1) if "GIG_JOBS" in
                    os.environ else 1,
                    help="upper bound on worker processes (default 1;"
                    " env GIG_JOBS)")
    if max_cosets:
        sp.add_argument("--max-cosets", type=int, metavar="N",
                        default=None,
                        help="coset table cap (env GIG_MAX_COSETS;"
                        f" default {DEFAULT_MAX_COSETS})")
    if budget:
        sp.add_argument("--budget", metavar="N", default=None,
                        help="resource budget (see subcommand help)")
    if tol:
        sp.add_argument("--tol", type=float, default=1e-9,
                        help="numeric tolerance (default 1e-9)")


def _resolve_max_cosets(args):
    if getattr(args, "max_cosets", None) is None:
        args.max_cosets = _env_int("GIG_MAX_COSETS", DEFAULT_MAX_COSETS)
    _positive(args.max_cosets, "--max-cosets")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gig",
        description="Structural properties of graph incidence game groups:"
        " classification by forbidden minors, exact orders, rewriting,"
        " picture certificates, and operator strategies.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify",
                       help="decide triviality, J-triviality, solvability,"
                       " finiteness, abelianness")
    p.add_argument("graph", help="builtin spec (e.g. k(3,3)) or file path")
    p.add_argument("--colour", help="even | odd | zero | v=1,... "
                   "(default zero)")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check all conclusive verdicts by coset"
                   " enumeration")
    p.add_argument("--strict", action="store_true",
                   help="exit 2 if any verdict is inconclusive")
    _add_common(p, max_cosets=True, budget=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("order", help="exact group order by coset enumeration,"
                       " guarded by the finiteness theorem")
    p.add_argument("graph")
    p.add_argument("--coloured", metavar="SPEC",
                   help="colour spec; enumerate the coloured group")
    p.add_argument("--colour", metavar="SPEC",
                   help="alias for --coloured")
    _add_common(p, max_cosets=True)
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("rewrite", help="string rewriting toolkit")
    rsub = p.add_subparsers(dest="subcommand", required=True)

    q = rsub.add_parser("nf", help="normal form of a word")
    q.add_argument("--system", default="h33", help="bundled system name")
    q.add_argument("--word", required=True,
                   help="comma-separated letters, e.g. y4,y2,y7")
    _add_common(q)
    q.set_defaults(func=cmd_rewrite_nf)

    q = rsub.add_parser("check", help="certify termination, local"
                        " confluence, and that all group relations reduce")
    q.add_argument("--system", default="h33")
    _add_common(q)
    q.set_defaults(func=cmd_rewrite_check)

    q = rsub.add_parser("kb", help="search for a complete rewriting system"
                        " for a graph group")
    q.add_argument("--graph", required=True,
                   help="builtin spec or file path")
    q.add_argument("--colour", help="colour spec (default: uncoloured"
                   " group)")
    q.add_argument("--budget", metavar="DUR",
                   help="wall-clock budget, e.g. 60s or 2m")
    q.add_argument("--max-rules", type=int, default=2000)
    q.add_argument("--max-orders", type=int, default=24,
                   help="generator orders to try")
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--json", action="store_true")
    q.add_argument("--jobs", type=int, default=1)
    q.set_defaults(func=cmd_rewrite_kb)

    q = rsub.add_parser("census", help="count irreducible words per length")
    q.add_argument("--system", default="h33")
    q.add_argument("--max-length", type=int, default=30)
    _add_common(q)
    q.set_defaults(func=cmd_rewrite_census)

    p = sub.add_parser("picture", help="planar relation certificates")
    psub = p.add_subparsers(dest="subcommand", required=True)

    q = psub.add_parser("builtin", help="a bundled crossing picture")
    q.add_argument("name", help="k33-crossing | k5-crossing")
    q.add_argument("--out", help="write the picture as JSON")
    _add_common(q)
    q.set_defaults(func=cmd_picture_builtin)

    q = psub.add_parser("verify", help="validate a picture file")
    q.add_argument("file")
    _add_common(q)
    q.set_defaults(func=cmd_picture_verify)

    q = psub.add_parser("from-embedding",
                        help="closed picture from a planar graph; with odd"
                        " colouring this certifies J = 1")
    q.add_argument("graph")
    q.add_argument("--colour", help="colour spec (default odd)")
    q.add_argument("--out", help="write the picture as JSON")
    _add_common(q)
    q.set_defaults(func=cmd_picture_from_embedding)

    p = sub.add_parser("strategy", help="operator strategies")
    ssub = p.add_subparsers(dest="subcommand", required=True)

    q = ssub.add_parser("verify", help="build and verify a perfect operator"
                        " strategy")
    q.add_argument("--game", required=True, help="k33 | k5")
    q.add_argument("--tamper", action="store_true",
                   help="negate one observable to demonstrate violation"
                   " localisation")
    q.add_argument("--closure", action="store_true",
                   help="also count the multiplicative closure of the"
                   " first player's observables")
    _add_common(q, tol=True)
    q.set_defaults(func=cmd_strategy_verify)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        if hasattr(args, "max_cosets") or args.func is cmd_order:
            _resolve_max_cosets(args)
        if getattr(args, "jobs", 1) <= 0:
            raise CliError("--jobs must be positive")
        if args.func is cmd_classify:
            if args.budget is None:
                from .classify import DEFAULT_MINOR_BUDGET
                args.budget = DEFAULT_MINOR_BUDGET
            else:
                try:
                    args.budget = int(args.budget)
                except ValueError:
                    raise CliError("classify --budget takes a state count"
                                   " (integer)")
                _positive(args.budget, "--budget")
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
