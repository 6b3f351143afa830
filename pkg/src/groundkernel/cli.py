"""``groundkernel`` command line front end.

JSON reports go to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 domain failure (invalid dictionary, unknown word), 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from pathlib import Path

from groundkernel.digraph import DefGraph, build_graph, scc
from groundkernel.errors import DictionarySyntaxError, DuplicateEntry, GroundKernelError, NotClosed
from groundkernel.kernel import grounding_kernel
from groundkernel.lexicon import (
    Dictionary,
    normalize_token,
    read_json_entries,
    read_text_entries,
    validate,
)
from groundkernel.mgs import MgsConfig, minimum_grounding_set
from groundkernel.reachability import coverage_fraction, relaxed_reachable_set

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, ensure_ascii=False) + "\n")


def _read_pairs(path: str, fmt: str):
    if fmt == "auto":
        fmt = "json" if path.lower().endswith(".json") else "text"
    try:
        with open(path, encoding="utf-8") as fh:
            if fmt == "json":
                return read_json_entries(fh)
            return read_text_entries(fh)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}", EXIT_USAGE) from exc
    except UnicodeDecodeError as exc:
        raise CliError(f"{path} is not valid UTF-8", EXIT_USAGE) from exc
    except DictionarySyntaxError as exc:
        raise CliError(f"{path}: {exc}", EXIT_DOMAIN) from exc


def _load(args) -> tuple[Dictionary, DefGraph]:
    pairs = _read_pairs(args.file, args.format)
    try:
        d = Dictionary(pairs, allow_open=args.allow_open)
    except (NotClosed, DuplicateEntry) as exc:
        raise CliError(f"{args.file}: invalid dictionary: {exc}", EXIT_DOMAIN) from exc
    return d, build_graph(d)


def _meta(args, d: Dictionary) -> dict:
    meta = {"allow_open": args.allow_open}
    if args.allow_open:
        # extension: undefined definientes are vertices without in-arcs
        meta["open_words"] = sorted(d.open_words)
    return meta


def _seed(raw: str, g: DefGraph) -> list[str]:
    words = sorted({normalize_token(t) for t in raw.split(",") if t.strip()})
    unknown = [w for w in words if w not in g]
    if unknown:
        raise CliError(f"unknown seed word(s): {', '.join(unknown)}", EXIT_DOMAIN)
    return words


def _mgs_json(result, exact_limit: int) -> dict:
    return {
        "grounding_number": len(result.chosen),
        "exact": result.exact,
        "chosen": sorted(result.chosen),
        "lower_bound": result.grounding_number_lower_bound,
        "upper_bound": result.grounding_number_upper_bound,
        "components": [
            {
                "vertices": sorted(c.vertices),
                "chosen": sorted(c.chosen),
                "exact": c.exact,
                "lower_bound": c.lower_bound,
            }
            for c in result.per_component
        ],
        "parameters": {"exact_limit": exact_limit},
    }


def _levels_json(kr) -> dict:
    return {str(k): words for k, words in kr.levels().items()}


def cmd_validate(args) -> int:
    pairs = _read_pairs(args.file, args.format)
    report = validate(pairs)
    out = report.to_json()
    _emit(out)
    ok = report.ok or (
        args.allow_open and not report.empty_definitions and not report.duplicate_definienda
    )
    if not ok:
        print(f"{args.file}: {report.summary()}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_DOMAIN


def _reachable_json(g: DefGraph, seed: list[str], r: int) -> dict:
    res = relaxed_reachable_set(g, seed, r)
    frac = coverage_fraction(g, seed, r)
    return {
        "seed": seed,
        "relax": r,
        "reached": sorted(res.reached),
        "step_of": {w: res.step_of[w] for w in sorted(res.step_of)},
        "fixpoint_step": res.fixpoint_step,
        "coverage": f"{frac.numerator}/{frac.denominator}",
        "coverage_float": float(frac),
        "grounding": len(res.reached) == len(g),
    }


def cmd_reachable(args) -> int:
    d, g = _load(args)
    seed = _seed(args.seed, g)
    _emit({**_reachable_json(g, seed, args.relax), "meta": _meta(args, d)})
    return EXIT_OK


def cmd_kernel(args) -> int:
    d, g = _load(args)
    kr = grounding_kernel(g)
    _emit(
        {
            "kernel": sorted(kr.kernel),
            "removal_rounds": [sorted(r) for r in kr.removal_rounds],
            "levels": _levels_json(kr),
            "max_level": kr.max_level,
            "meta": _meta(args, d),
        }
    )
    return EXIT_OK


def cmd_levels(args) -> int:
    d, g = _load(args)
    kr = grounding_kernel(g)
    _emit(
        {
            "level_of": {w: kr.level_of[w] for w in sorted(kr.level_of)},
            "levels": _levels_json(kr),
            "max_level": kr.max_level,
            "meta": _meta(args, d),
        }
    )
    return EXIT_OK


def cmd_mgs(args) -> int:
    d, g = _load(args)
    result = minimum_grounding_set(g, MgsConfig(exact_limit=args.exact_limit))
    _emit({**_mgs_json(result, args.exact_limit), "meta": _meta(args, d)})
    return EXIT_OK


def _quote(token: str) -> str:
    return '"' + token.replace("\\", "\\\\").replace('"', '\\"') + '"'


def render_dot(g: DefGraph, highlight=frozenset()) -> str:
    """DOT text: one node line per word, one edge line per arc, highlighted words boxed."""
    lines = ["digraph definitions {"]
    for v in g.vertices:
        attr = " [shape=box]" if v in highlight else ""
        lines.append(f"  {_quote(v)}{attr};")
    for u, v in g.iter_arcs():
        lines.append(f"  {_quote(u)} -> {_quote(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_export(args) -> int:
    d, g = _load(args)
    if args.highlight == "kernel":
        marked = grounding_kernel(g).kernel
    elif args.highlight == "mgs":
        marked = minimum_grounding_set(g, MgsConfig(exact_limit=args.exact_limit)).chosen
    else:
        marked = frozenset()
    text = render_dot(g, marked)
    if args.dot in (None, "-"):
        sys.stdout.write(text)
        return EXIT_OK
    try:
        Path(args.dot).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot write {args.dot}: {exc.strerror or exc}", EXIT_USAGE) from exc
    _emit(
        {
            "dot": args.dot,
            "nodes": len(g),
            "arcs": g.arc_count,
            "highlight": args.highlight,
            "highlighted": sorted(marked),
        }
    )
    return EXIT_OK


def cmd_analyze(args) -> int:
    d, g = _load(args)
    seed = _seed(args.seed, g)
    dec = scc(g)
    hist = Counter(dec.sizes())
    kr = grounding_kernel(g)
    result = minimum_grounding_set(g, MgsConfig(exact_limit=args.exact_limit))
    _emit(
        {
            "word_count": len(g),
            "arc_count": g.arc_count,
            "scc_summary": {
                "count": len(dec),
                "size_histogram": {str(k): hist[k] for k in sorted(hist)},
            },
            "kernel": sorted(kr.kernel),
            "levels": _levels_json(kr),
            "mgs": _mgs_json(result, args.exact_limit),
            "coverage": _reachable_json(g, seed, args.relax),
            "parameters": {
                "relax": args.relax,
                "exact_limit": args.exact_limit,
                "from": seed,
                "allow_open": args.allow_open,
            },
            "meta": _meta(args, d),
        }
    )
    return EXIT_OK


def _percent(raw: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {raw!r}") from None
    if not 0 <= value <= 100:
        raise argparse.ArgumentTypeError("must be between 0 and 100")
    return value


def _positive(raw: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {raw!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groundkernel",
        description="Reachable sets, grounding kernels and minimum grounding sets of dictionaries.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="dictionary file (text 'word: tok tok' lines or JSON object)")
    common.add_argument("--format", choices=("auto", "text", "json"), default="auto")
    common.add_argument(
        "--allow-open",
        action="store_true",
        help="accept undefined definientes as words without a definition",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check closure and report defects")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("reachable", parents=[common], help="closure of a seed set")
    p.add_argument("--from", dest="seed", default="", help="comma-separated seed words")
    p.add_argument("--relax", type=_percent, default=100, help="percent of a definition needed")
    p.set_defaults(func=cmd_reachable)

    p = sub.add_parser("kernel", parents=[common], help="grounding kernel and removal rounds")
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("levels", parents=[common], help="word levels relative to the kernel")
    p.set_defaults(func=cmd_levels)

    p = sub.add_parser("mgs", parents=[common], help="minimum grounding set")
    p.add_argument("--exact-limit", type=_positive, default=25)
    p.set_defaults(func=cmd_mgs)

    p = sub.add_parser("export", parents=[common], help="write the definition graph as DOT")
    p.add_argument("--dot", default=None, help="output path, '-' or omitted for stdout")
    p.add_argument("--highlight", choices=("kernel", "mgs", "none"), default="none")
    p.add_argument("--exact-limit", type=_positive, default=25)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("analyze", parents=[common], help="full report")
    p.add_argument("--from", dest="seed", default="", help="seed words for the coverage section")
    p.add_argument("--relax", type=_percent, default=100)
    p.add_argument("--exact-limit", type=_positive, default=25)
    p.set_defaults(func=cmd_analyze)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"groundkernel: {exc}", file=sys.stderr)
        return exc.code
    except GroundKernelError as exc:
        print(f"groundkernel: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
