"""Command line front end (installed as ``pcn``).

Subcommands::

    construct "<family-spec>" -o graph.json
    chi graph.json [--time-budget S] [--order degree|ecc|input] [--parallel]
                   [--witness out.json]
    verify graph.json coloring.json
    pattern <name> [--n N] [--p P] [--m M] [--base SPEC] -o coloring.json
    check --suite all|<claim-id> [--max-n N] [--max-m M] [--time-budget S]
          --report report.json
    export-dot graph.json -o graph.dot

Exit codes: 0 ok, 2 invalid coloring, 3 timeout, 4 claim fail, 5 skips only,
64 usage error, 66 file I/O error.  Machine-readable stdout lines are
prefixed ``chi=``, ``valid=``, and ``verdicts=``.  The environment variable
``PCN_TIME_BUDGET`` supplies a default solver budget; flags override it.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from pathlib import Path
from typing import Sequence

from . import harness
from .coloring import (
    ColoringError,
    coloring_from_dict,
    coloring_to_dict,
    pattern_fssd_bipartite,
    pattern_fssd_cn_corona,
    pattern_fssd_complete,
    pattern_fssd_cycle,
    pattern_fssd_kn_corona,
    pattern_fssd_splitting_complete,
    pattern_fssd_splitting_cycle,
    verify,
)
from .families import FamilyError, fssd, generate, parse_spec
from .graphs import GraphError, graph_from_dict, graph_to_dict, to_dot
from .solver import SolveOptions, packing_chromatic_number

EXIT_OK = 0
EXIT_INVALID_COLORING = 2
EXIT_TIMEOUT = 3
EXIT_CLAIM_FAIL = 4
EXIT_SKIPS_ONLY = 5
EXIT_USAGE = 64
EXIT_IO = 66

_ORDER_FLAGS = {"degree": "degree-desc", "ecc": "eccentricity-asc", "input": "input"}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit(2); we want 64
        raise _UsageError(message)


def _atomic_write(path: str, text: str) -> None:
    """Write via a temp file in the target directory plus rename."""
    target = Path(path)
    fd, tmp = tempfile.mkstemp(dir=target.parent or Path("."), suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _load_json(path: str) -> dict:
    with open(path, "r") as fh:
        return json.load(fh)


def _default_budget(flag_value: float | None) -> float:
    if flag_value is not None:
        return flag_value
    env = os.environ.get("PCN_TIME_BUDGET")
    return float(env) if env else 0.0


def _build_parser() -> _Parser:
    parser = _Parser(prog="pcn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a family graph and write JSON")
    p.add_argument("spec", help='family spec, e.g. "fssd(corona(complete:3,path:2),m=1)"')
    p.add_argument("-o", "--out", required=True)

    p = sub.add_parser("chi", help="exact packing chromatic number")
    p.add_argument("graph")
    p.add_argument("--time-budget", type=float, default=None, metavar="S")
    p.add_argument("--order", choices=sorted(_ORDER_FLAGS), default="degree")
    p.add_argument("--parallel", action="store_true")
    p.add_argument("--witness", default=None, metavar="OUT")

    p = sub.add_parser("verify", help="check a coloring against a graph")
    p.add_argument("graph")
    p.add_argument("coloring")

    p = sub.add_parser("pattern", help="emit a constructive pattern coloring")
    p.add_argument(
        "name",
        choices=[
            "fssd-complete", "fssd-cycle", "fssd-bipartite",
            "kn-corona", "cn-corona", "split-cycle", "split-complete",
        ],
    )
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--base", default=None, help="base family spec (fssd-bipartite)")
    p.add_argument("-o", "--out", required=True)

    p = sub.add_parser("check", help="run the claim-checking suite")
    p.add_argument("--suite", required=True, help='"all" or one claim id')
    p.add_argument("--max-n", type=int, default=23)
    p.add_argument("--max-m", type=int, default=3)
    p.add_argument("--time-budget", type=float, default=None, metavar="S")
    p.add_argument("--report", required=True)

    p = sub.add_parser("export-dot", help="write a Graphviz rendering")
    p.add_argument("graph")
    p.add_argument("-o", "--out", required=True)
    return parser


def _cmd_construct(args) -> int:
    g = generate(parse_spec(args.spec))[0]
    _atomic_write(args.out, json.dumps(graph_to_dict(g), indent=2) + "\n")
    return EXIT_OK


def _cmd_chi(args) -> int:
    g = graph_from_dict(_load_json(args.graph))
    opts = SolveOptions(
        time_budget=_default_budget(args.time_budget),
        order_strategy=_ORDER_FLAGS[args.order],
        parallel=args.parallel,
    )
    result = packing_chromatic_number(g, opts)
    if args.witness:
        _atomic_write(
            args.witness,
            json.dumps(coloring_to_dict(result.witness, g.name), indent=2) + "\n",
        )
    if result.status == "exact":
        print(f"chi={result.chi}")
        return EXIT_OK
    lo, hi = result.bounds
    print(f"bounds=[{lo},{hi}]")
    return EXIT_TIMEOUT


def _cmd_verify(args) -> int:
    g = graph_from_dict(_load_json(args.graph))
    coloring, _ = coloring_from_dict(_load_json(args.coloring))
    report = verify(g, coloring)
    print(f"valid={'true' if report.valid else 'false'}")
    if report.valid:
        return EXIT_OK
    for u, v, color, distance in report.violations:
        print(f"{u} {v} {color} {distance}")
    return EXIT_INVALID_COLORING


def _pattern_coloring(args):
    """(graph, coloring, verification-report-or-None) for a pattern name."""
    name, n, p, m = args.name, args.n, args.p, args.m
    needs_n = name != "fssd-bipartite"
    if needs_n and n is None:
        raise _UsageError(f"pattern {name} requires --n")
    if name == "fssd-bipartite":
        if not args.base:
            raise _UsageError("pattern fssd-bipartite requires --base")
        base = generate(parse_spec(args.base))[0]
        return fssd(base, m), pattern_fssd_bipartite(base, m), None
    if name == "cn-corona":
        coloring, rep = pattern_fssd_cn_corona(n, p, m)
        g = generate(parse_spec(f"fssd(corona(cycle:{n},path:{p}),m={m})"))[0]
        return g, coloring, rep
    builders = {
        "fssd-complete": (f"fssd(complete:{n},m={m})", lambda: pattern_fssd_complete(n, m)),
        "fssd-cycle": (f"fssd(cycle:{n},m={m})", lambda: pattern_fssd_cycle(n, m)),
        "kn-corona": (
            f"fssd(corona(complete:{n},path:{p}),m={m})",
            lambda: pattern_fssd_kn_corona(n, p, m),
        ),
        "split-cycle": (f"fssd(split(cycle:{n}),m={m})", lambda: pattern_fssd_splitting_cycle(n, m)),
        "split-complete": (
            f"fssd(split(complete:{n}),m={m})",
            lambda: pattern_fssd_splitting_complete(n, m),
        ),
    }
    spec_text, make = builders[name]
    return generate(parse_spec(spec_text))[0], make(), None


def _cmd_pattern(args) -> int:
    g, coloring, rep = _pattern_coloring(args)
    if rep is None:
        rep = verify(g, coloring)
    _atomic_write(args.out, json.dumps(coloring_to_dict(coloring, g.name), indent=2) + "\n")
    print(f"valid={'true' if rep.valid else 'false'}")
    if not rep.valid:
        for u, v, color, distance in rep.violations:
            print(f"{u} {v} {color} {distance}")
        return EXIT_INVALID_COLORING
    return EXIT_OK


def _cmd_check(args) -> int:
    budget = _default_budget(args.time_budget) or harness.DEFAULT_BUDGET
    results = harness.run_suite(args.suite, args.max_n, args.max_m, budget)
    _atomic_write(
        args.report, json.dumps([r.to_dict() for r in results], indent=2) + "\n"
    )
    width = max((len(r.claim) for r in results), default=10)
    iwidth = max((len(r.instance) for r in results), default=10)
    for r in results:
        print(f"{r.claim:<{width}}  {r.instance:<{iwidth}}  {r.verdict:<14} {r.observed}")
    counts = {v: sum(1 for r in results if r.verdict == v)
              for v in (harness.PASS, harness.FAIL, harness.SKIPPED)}
    print(
        f"verdicts=pass:{counts[harness.PASS]} fail:{counts[harness.FAIL]} "
        f"skipped:{counts[harness.SKIPPED]}"
    )
    return harness.suite_exit_code(results)


def _cmd_export_dot(args) -> int:
    g = graph_from_dict(_load_json(args.graph))
    _atomic_write(args.out, to_dot(g))
    return EXIT_OK


_COMMANDS = {
    "construct": _cmd_construct,
    "chi": _cmd_chi,
    "verify": _cmd_verify,
    "pattern": _cmd_pattern,
    "check": _cmd_check,
    "export-dot": _cmd_export_dot,
}


def run(argv: Sequence[str]) -> int:
    """Parse and dispatch; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FamilyError, GraphError, ColoringError, ValueError) as exc:
        # domain errors: invalid specs, malformed graphs, partial colorings
        print(f"error: {exc}", file=sys.stderr)
        return _domain_exit(exc)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


def _domain_exit(exc: Exception) -> int:
    if isinstance(exc, ColoringError):
        return EXIT_INVALID_COLORING
    return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
