"""Command-line front end.

Results go to stdout as graph6 lines or JSON certificate envelopes
(one per line, sorted keys, byte-stable across runs and worker
counts); progress and warnings go to stderr.  Exit codes: 0 success
or certified, 1 checked-and-refuted, 2 usage or parse error, 3 budget
exhausted / result not final.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import __version__, envelope
from .constructions import (
    ParamTriple,
    build_h1,
    build_h2,
    certify_lower_bound,
    closed_form_value,
    extremal_size,
    regime,
)
from .cycles import longest_even_cycle, find_cycle_of_length
from .enumeration import DEFAULT_CEILING, EnumerationCeilingError, enumerate_graphs
from .graph6 import Graph6Error, from_graph6, to_graph6
from .harness import (
    probe_theorem,
    verify_bc,
    verify_dec,
    verify_erdos_gallai_structure,
    verify_set_system,
    verify_vz,
    verify_williamson,
)
from .search import ramsey_number, turan_number, MODE_AT_LEAST, MODE_EXACT
from .structure import HypothesisError, bc_closure, decompose_2connected

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

ENV_CEILING = "CSR_ENUM_CEILING"


def _warn(msg: str) -> None:
    print(f"cyclestar: {msg}", file=sys.stderr)


def _emit(line: str, out) -> None:
    out.write(line + "\n")


def _read_graphs(args):
    data = sys.stdin.buffer.read() if args.input is None else open(args.input, "rb").read()
    for lineno, raw in enumerate(data.splitlines(), 1):
        raw = raw.strip()
        if raw:
            yield lineno, raw


def _resolve_ceiling(args) -> int:
    if getattr(args, "enum_ceiling", None) is not None:
        return args.enum_ceiling
    env = os.environ.get(ENV_CEILING)
    if env is not None:
        try:
            value = int(env)
        except ValueError:
            _warn(f"ignoring non-integer {ENV_CEILING}={env!r}")
            return DEFAULT_CEILING
        _warn(
            f"enumeration ceiling overridden to {value} by {ENV_CEILING}; "
            f"orders above {DEFAULT_CEILING} can take a very long time"
        )
        return value
    return DEFAULT_CEILING


def _perf_kwargs(args) -> dict:
    return {
        "workers": args.workers,
        "ceiling": _resolve_ceiling(args),
        "allow_above_ceiling": args.allow_above_ceiling,
    }


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        return args.func(args, out)
    except EnumerationCeilingError as exc:
        _warn(str(exc))
        return EXIT_USAGE
    except (Graph6Error, ValueError) as exc:
        _warn(str(exc))
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclestar",
        description="certified even-cycle versus star Ramsey computations",
    )
    parser.add_argument("--version", action="version", version=f"cyclestar {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    io_p = argparse.ArgumentParser(add_help=False)
    io_p.add_argument("--in", dest="input", metavar="FILE",
                      help="graph6 input file (default: stdin)")

    perf_p = argparse.ArgumentParser(add_help=False)
    perf_p.add_argument("--workers", type=int, default=os.cpu_count() or 1,
                        help="parallel workers (output is identical for any value)")
    perf_p.add_argument("--budget", type=int, default=None, metavar="NODES",
                        help="per-search node budget; exhaustion exits 3")
    perf_p.add_argument("--enum-ceiling", type=int, default=None,
                        help=f"enumeration order ceiling (default {DEFAULT_CEILING}, "
                             f"or ${ENV_CEILING})")
    perf_p.add_argument("--allow-above-ceiling", action="store_true",
                        help="enumerate above the ceiling (can take very long)")

    p = sub.add_parser("construct", parents=[],
                       help="emit a certified extremal construction")
    p.add_argument("kind", choices=["h1", "h2"])
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--envelope", action="store_true",
                   help="emit a certification envelope instead of bare graph6")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", parents=[io_p, perf_p],
                       help="certify graphs as cycle-free and complement-star-free")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("formula", help="extremal-size arithmetic for (ell, n)")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("ramsey", parents=[perf_p],
                       help="compute the Ramsey number exactly")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--resume", default=None, metavar="TOKEN",
                   help="resume token from an interrupted run")
    p.set_defaults(func=cmd_ramsey)

    p = sub.add_parser("turan", parents=[perf_p],
                       help="exact forbidden-cycle Turan number")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--mode", choices=[MODE_EXACT, MODE_AT_LEAST], default=MODE_AT_LEAST)
    p.set_defaults(func=cmd_turan)

    p = sub.add_parser("verify", parents=[perf_p],
                       help="run a lemma verification suite")
    p.add_argument("lemma", choices=["vz", "bc", "williamson", "dec", "set-system",
                                     "erdos-gallai", "theorem-probe"])
    p.add_argument("--max-order", type=int, default=8)
    p.add_argument("--k-min", type=int, default=2)
    p.add_argument("--k-max", type=int, default=4)
    p.add_argument("--max-ground", type=int, default=12)
    p.add_argument("--max-s", type=int, default=4)
    p.add_argument("--ell", type=int, default=2)
    p.add_argument("--ell-min", type=int, default=2)
    p.add_argument("--ell-max", type=int, default=3)
    p.add_argument("--n", type=int, action="append", default=None)
    p.add_argument("--max-value", type=int, default=8,
                   help="probe only pairs with expected value up to this order")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decompose", parents=[io_p, perf_p],
                       help="peel graphs into 2-connected components")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--unchecked", action="store_true",
                   help="run without the degree hypothesis (flagged in output)")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("closure", parents=[io_p],
                       help="degree-sum closure, graph6 in/out")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("blocks", parents=[io_p],
                       help="block decomposition and cut vertices")
    p.set_defaults(func=cmd_blocks)

    p = sub.add_parser("ec", parents=[io_p, perf_p],
                       help="longest even cycle with witness")
    p.set_defaults(func=cmd_ec)

    p = sub.add_parser("enumerate", parents=[perf_p],
                       help="dump isomorphism-class representatives as graph6")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--min-deg", type=int, default=0)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("revalidate", parents=[io_p],
                       help="re-check certificate envelopes from scratch")
    p.set_defaults(func=cmd_revalidate)

    return parser


def _params_or_exit(args) -> ParamTriple:
    return ParamTriple(args.ell, args.n)


def cmd_construct(args, out) -> int:
    params = _params_or_exit(args)
    g = build_h1(params) if args.kind == "h1" else build_h2(params)
    if not args.envelope:
        _emit(to_graph6(g).decode("ascii"), out)
        return EXIT_OK
    report = certify_lower_bound(g, params)
    env = envelope.lower_bound_envelope(g, params, report)
    _emit(envelope.dumps(env), out)
    return EXIT_OK if report.certified_bound is not None else EXIT_REFUTED


def cmd_check(args, out) -> int:
    params = _params_or_exit(args)
    parse_error = refuted = indeterminate = False
    for lineno, raw in _read_graphs(args):
        try:
            g = from_graph6(raw)
        except Graph6Error as exc:
            _emit(envelope.dumps({"schema": envelope.SCHEMA, "error": str(exc),
                                  "line": lineno}), out)
            parse_error = True
            continue
        report = certify_lower_bound(g, params, max_nodes=args.budget)
        env = envelope.lower_bound_envelope(g, params, report)
        _emit(envelope.dumps(env), out)
        if report.indeterminate:
            indeterminate = True
        elif report.certified_bound is None:
            refuted = True
    if parse_error:
        return EXIT_USAGE
    if refuted:
        return EXIT_REFUTED
    if indeterminate:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_formula(args, out) -> int:
    params = _params_or_exit(args)
    closed = closed_form_value(args.ell, args.n)
    row = {
        "schema": envelope.SCHEMA,
        "ell": params.ell,
        "n": params.n,
        "t": params.t,
        "k": params.k,
        "m": params.m,
        "extremal_size": extremal_size(params),
        "regime": regime(params),
        "formula_value": extremal_size(params) + 1 if params.t >= 2 else None,
        "closed_form": (
            {"value": closed[0], "source": closed[1]} if closed else None
        ),
    }
    _emit(envelope.dumps(row), out)
    return EXIT_OK


def cmd_ramsey(args, out) -> int:
    result = ramsey_number(
        args.ell, args.n,
        max_nodes=args.budget, resume=args.resume, **_perf_kwargs(args),
    )
    _emit(envelope.dumps(envelope.ramsey_envelope(result)), out)
    return EXIT_OK if result.final else EXIT_BUDGET


def cmd_turan(args, out) -> int:
    result = turan_number(
        args.order, args.ell, args.mode, max_nodes=args.budget, **_perf_kwargs(args),
    )
    row = dict(result.to_json(), schema=envelope.SCHEMA)
    _emit(envelope.dumps(row), out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    kw = _perf_kwargs(args)
    ceiling = kw["ceiling"]
    lemma = args.lemma
    if lemma == "vz":
        report = verify_vz(args.max_order, ceiling=ceiling)
    elif lemma == "bc":
        report = verify_bc(args.max_order, ceiling=ceiling)
    elif lemma == "williamson":
        report = verify_williamson(args.max_order, ceiling=ceiling)
    elif lemma == "dec":
        report = verify_dec(args.max_order, (args.k_min, args.k_max), ceiling=ceiling)
    elif lemma == "set-system":
        report = verify_set_system(args.max_ground, args.max_s)
    elif lemma == "erdos-gallai":
        report = verify_erdos_gallai_structure(
            args.max_order, args.ell, ceiling=ceiling, workers=args.workers
        )
    else:
        report = probe_theorem(
            range(args.ell_min, args.ell_max + 1), args.n,
            max_value=args.max_value, ceiling=ceiling, workers=args.workers,
        )
    _emit(envelope.dumps(envelope.lemma_envelope(report)), out)
    return EXIT_OK if report.ok else EXIT_REFUTED


def cmd_decompose(args, out) -> int:
    hypothesis_failed = parse_error = False
    for lineno, raw in _read_graphs(args):
        try:
            g = from_graph6(raw)
        except Graph6Error as exc:
            _emit(envelope.dumps({"schema": envelope.SCHEMA, "error": str(exc),
                                  "line": lineno}), out)
            parse_error = True
            continue
        try:
            dec = decompose_2connected(g, args.k, unchecked=args.unchecked)
        except HypothesisError as exc:
            _emit(envelope.dumps({"schema": envelope.SCHEMA, "error": str(exc),
                                  "line": lineno}), out)
            hypothesis_failed = True
            continue
        _emit(envelope.dumps(envelope.decomposition_envelope(g, dec, args.k)), out)
    if parse_error or hypothesis_failed:
        return EXIT_USAGE
    return EXIT_OK


def cmd_closure(args, out) -> int:
    for _, raw in _read_graphs(args):
        g = from_graph6(raw)
        _emit(to_graph6(bc_closure(g)).decode("ascii"), out)
    return EXIT_OK


def cmd_blocks(args, out) -> int:
    for _, raw in _read_graphs(args):
        g = from_graph6(raw)
        _emit(envelope.dumps(envelope.blocks_envelope(g)), out)
    return EXIT_OK


def cmd_ec(args, out) -> int:
    for _, raw in _read_graphs(args):
        g = from_graph6(raw)
        ec = longest_even_cycle(g, max_nodes=args.budget)
        witness = find_cycle_of_length(g, ec, max_nodes=args.budget) if ec else None
        _emit(envelope.dumps(envelope.ec_envelope(g, ec, witness)), out)
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    kw = _perf_kwargs(args)
    for g in enumerate_graphs(args.order, args.min_deg, ceiling=kw["ceiling"],
                              allow_above_ceiling=kw["allow_above_ceiling"]):
        _emit(to_graph6(g).decode("ascii"), out)
    return EXIT_OK


def cmd_revalidate(args, out) -> int:
    disagree = parse_error = False
    for lineno, raw in _read_graphs(args):
        try:
            env = envelope.loads(raw.decode("ascii"))
        except (ValueError, UnicodeDecodeError) as exc:
            _emit(envelope.dumps({"schema": envelope.SCHEMA, "error": str(exc),
                                  "line": lineno}), out)
            parse_error = True
            continue
        recomputed = envelope.revalidate_envelope(env)
        if recomputed != env.get("verified"):
            disagree = True
        env["verified"] = recomputed
        _emit(envelope.dumps(env), out)
    if parse_error:
        return EXIT_USAGE
    if disagree:
        return EXIT_REFUTED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
