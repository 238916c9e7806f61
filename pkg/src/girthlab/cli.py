"""Command-line interface.

Subcommands: build, lift, girth, gmax, sweep, search, verify-table,
export-alist.  Machine-readable output (--format json/csv) is canonical:
sorted keys, fixed separators, no timing fields, so identical invocations
produce identical bytes.  GIRTHLAB_THREADS caps worker counts (0 = auto).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bsg import build_bsg, to_dot
from .construction import CodeParams, SlopeSequence, build_mother, code_length, lift
from .formats import export_alist, import_alist, load_descriptor, save_descriptor
from .girth import g_max, girth_bfs, girth_bsg, gmax_sweep, sweep_csv
from .search import MinMResult, SearchConfig, min_m_search, search
from .table import verify_table

__all__ = ["main"]


def _dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _add_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--a", type=int, required=True, help="cylinder size, >= 2")
    p.add_argument("--b", type=int, required=True, help="number of cylinder blocks, >= 1")
    p.add_argument("--c", type=int, required=True, help="chain length between cylinders, >= 0")


def _add_common(p: argparse.ArgumentParser, fmt=("text", "json")) -> None:
    p.add_argument("--format", choices=fmt, default=fmt[0])
    p.add_argument("--out", default=None, help="write output to this path instead of stdout")


def _parse_slopes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip() != "")
    except ValueError:
        raise ValueError(f"--slopes must be a comma-separated integer list, got {text!r}") from None


def _seq_for(params: CodeParams, m: int, slopes_text: str | None) -> SlopeSequence:
    if slopes_text is None:
        return SlopeSequence.zeros(m, params.block_cols)
    return SlopeSequence(m=m, slopes=_parse_slopes(slopes_text))


def _cmd_build(args) -> int:
    params = CodeParams(a=args.a, b=args.b, c=args.c)
    mother = build_mother(params)
    if args.format == "json":
        payload = {
            "a": params.a, "b": params.b, "c": params.c,
            "rows": mother.rows, "cols": mother.cols,
            "design_rate": f"1/{params.a + params.c}",
            "columns": [list(pair) for pair in mother.col_rows],
        }
        _emit(_dumps(payload), args.out)
    elif args.dot:
        _emit(to_dot(build_bsg(mother)), args.out)
    else:
        lines = [
            f"H({params.a},{params.b},{params.c}): {mother.rows} x {mother.cols}, "
            f"design rate 1/{params.a + params.c}",
        ]
        for row in mother.toarray():
            lines.append("".join("1" if x else "." for x in row))
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_lift(args) -> int:
    params = CodeParams(a=args.a, b=args.b, c=args.c)
    mother = build_mother(params)
    seq = _seq_for(params, args.m, args.slopes)
    code = lift(mother, seq)
    if args.descriptor is not None:
        save_descriptor(args.descriptor, params, seq)
    if args.format == "json":
        payload = {
            "a": params.a, "b": params.b, "c": params.c, "m": seq.m,
            "n": code.n, "rows": code.num_rows,
            "slopes": list(seq.slopes),
        }
        _emit(_dumps(payload), args.out)
    else:
        _emit(
            f"lift of H({params.a},{params.b},{params.c}) by m={seq.m}: "
            f"{code.num_rows} x {code.n}, n={code_length(params, seq.m)}\n",
            args.out,
        )
    return 0


def _cmd_girth(args) -> int:
    if args.alist is not None:
        if args.method == "bsg":
            raise ValueError("--method bsg needs construction parameters, not an alist")
        matrix = import_alist(args.alist)
        results = {"bfs": girth_bfs(matrix, cutoff=args.cutoff)}
        label = f"alist {args.alist}"
    else:
        for name in ("a", "b", "c", "m"):
            if getattr(args, name) is None:
                raise ValueError(f"--{name} is required unless --alist is given")
        params = CodeParams(a=args.a, b=args.b, c=args.c)
        mother = build_mother(params)
        seq = _seq_for(params, args.m, args.slopes)
        results = {}
        if args.method in ("bfs", "both"):
            results["bfs"] = girth_bfs(lift(mother, seq), cutoff=args.cutoff)
        if args.method in ("bsg", "both"):
            results["bsg"] = girth_bsg(build_bsg(mother, seq), cutoff=args.cutoff)
        label = f"H({params.a},{params.b},{params.c}) m={seq.m}"
    girths = {name: r.girth for name, r in results.items()}
    if len(set(girths.values())) > 1:
        raise AssertionError(f"girth engines disagree: {girths}")
    girth = next(iter(girths.values()))
    if args.format == "json":
        _emit(_dumps({"girth": girth, "methods": girths}), args.out)
    else:
        shown = "acyclic" if girth is None else str(girth)
        methods = ", ".join(f"{k}={v}" for k, v in sorted(girths.items()))
        _emit(f"girth {shown} for {label} ({methods})\n", args.out)
    return 0


def _cmd_gmax(args) -> int:
    params = CodeParams(a=args.a, b=args.b, c=args.c)
    value = g_max(params)
    if args.format == "json":
        _emit(_dumps({"a": args.a, "b": args.b, "c": args.c, "gmax": value}), args.out)
    else:
        _emit(f"{value}\n", args.out)
    return 0


def _cmd_sweep(args) -> int:
    rows = gmax_sweep(args.c, range(args.a_min, args.a_max + 1), range(args.b_min, args.b_max + 1))
    _emit(sweep_csv(rows), args.out)
    return 0


def _cmd_search(args) -> int:
    params = CodeParams(a=args.a, b=args.b, c=args.c)
    if args.m is None and args.m_min is None:
        raise ValueError("provide --m, or --m-min and --m-max for a range search")
    if args.m is not None:
        config = SearchConfig(
            params=params, m=args.m, target_girth=args.target_girth, seed=args.seed,
            budget=args.budget, restarts=args.restarts, strategy=args.strategy,
        )
        outcome = search(config)
        payload = outcome.to_json_dict(config)
        human = (
            f"search {outcome.status}: girth {outcome.achieved_girth} at m={args.m} "
            f"after {outcome.evaluations} evaluations\n"
        )
        found_seq = outcome.slopes
    else:
        if args.m_max is None:
            raise ValueError("--m-min needs --m-max")
        target = args.target_girth if args.target_girth is not None else g_max(params)
        result: MinMResult = min_m_search(
            params, target, range(args.m_min, args.m_max + 1), args.budget,
            args.seed, restarts=args.restarts, strategy=args.strategy,
        )
        payload = {
            "mode": "min-m",
            "a": params.a, "b": params.b, "c": params.c,
            "target_girth": target, "seed": args.seed,
            "per_m_budget": args.budget, "restarts": args.restarts,
            "strategy": args.strategy,
            "tried": list(result.tried),
            "found": result.found,
            "m": result.m,
            "outcome": result.outcome.to_json_dict(
                SearchConfig(params=params, m=result.m, target_girth=target,
                             seed=args.seed, budget=args.budget,
                             restarts=args.restarts, strategy=args.strategy)
            ) if result.found else None,
        }
        human = (
            f"min-m search {'found m=' + str(result.m) if result.found else 'not found'} "
            f"(tried {len(result.tried)} sizes)\n"
        )
        found_seq = result.outcome.slopes if result.found else None
    if args.descriptor is not None and found_seq is not None:
        save_descriptor(args.descriptor, params, found_seq)
    if args.format == "json":
        _emit(_dumps(payload), args.out)
    else:
        _emit(human, args.out)
    return 0


def _cmd_verify_table(args) -> int:
    indices = None
    if args.rows is not None:
        indices = [int(t) for t in args.rows.split(",") if t.strip() != ""]
    report = verify_table(deep=not args.structural_only, indices=indices)
    if args.format == "json":
        _emit(report.to_json(), args.out)
    else:
        lines = []
        for e in report.entries:
            rec = e.record
            issues = ",".join(e.flags.issues()) or "-"
            girth = e.computed["primary"] if e.computed else None
            lines.append(
                f"row {e.index:2d} b={rec.b} c={rec.c} a={rec.a} m={rec.m} "
                f"claimed g={rec.g} computed={girth} issues={issues} verdict={e.verdict}"
            )
        lines.append(str(report.summary()))
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_export_alist(args) -> int:
    if args.descriptor is not None:
        params, seq = load_descriptor(args.descriptor)
    else:
        for name in ("a", "b", "c", "m"):
            if getattr(args, name) is None:
                raise ValueError(f"--{name} is required unless --descriptor is given")
        params = CodeParams(a=args.a, b=args.b, c=args.c)
        seq = _seq_for(params, args.m, args.slopes)
    code = lift(build_mother(params), seq)
    export_alist(code, args.out_path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="girthlab",
        description="Double-cylinder cycle codes: construction, girth, shift search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a mother matrix")
    _add_params(p)
    p.add_argument("--dot", action="store_true", help="emit the block-structure graph as DOT")
    _add_common(p)
    p.set_defaults(fn=_cmd_build)

    p = sub.add_parser("lift", help="lift a mother matrix by circulants")
    _add_params(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--slopes", default=None, help="comma-separated slopes, default all zero")
    p.add_argument("--descriptor", default=None, help="also write the JSON code descriptor here")
    _add_common(p)
    p.set_defaults(fn=_cmd_lift)

    p = sub.add_parser("girth", help="compute Tanner-graph girth")
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--slopes", default=None)
    p.add_argument("--alist", default=None, help="compute the girth of an alist file instead")
    p.add_argument("--method", choices=("bfs", "bsg", "both"), default="both")
    p.add_argument("--cutoff", type=int, default=None)
    _add_common(p)
    p.set_defaults(fn=_cmd_girth)

    p = sub.add_parser("gmax", help="maximum achievable girth for (a,b,c)")
    _add_params(p)
    _add_common(p)
    p.set_defaults(fn=_cmd_gmax)

    p = sub.add_parser("sweep", help="grid of maximum achievable girths, CSV")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--a-min", type=int, required=True)
    p.add_argument("--a-max", type=int, required=True)
    p.add_argument("--b-min", type=int, required=True)
    p.add_argument("--b-max", type=int, required=True)
    _add_common(p, fmt=("csv",))
    p.set_defaults(fn=_cmd_sweep)

    p = sub.add_parser("search", help="search slope sequences for a target girth")
    _add_params(p)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--m-min", type=int, default=None)
    p.add_argument("--m-max", type=int, default=None)
    p.add_argument("--target-girth", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=100_000,
                   help="evaluation budget (per m in range mode)")
    p.add_argument("--restarts", type=int, default=8)
    p.add_argument("--strategy", choices=("backtracking", "randomized-restart", "hybrid"),
                   default="hybrid")
    p.add_argument("--descriptor", default=None, help="write the found code descriptor here")
    _add_common(p)
    p.set_defaults(fn=_cmd_search)

    p = sub.add_parser("verify-table", help="audit the bundled reference table")
    p.add_argument("--structural-only", action="store_true",
                   help="skip girth recomputation, check arithmetic consistency only")
    p.add_argument("--rows", default=None, help="comma-separated 1-based row numbers")
    _add_common(p)
    p.set_defaults(fn=_cmd_verify_table)

    p = sub.add_parser("export-alist", help="write a lifted code as an alist file")
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--slopes", default=None)
    p.add_argument("--descriptor", default=None, help="read parameters from this descriptor")
    p.add_argument("--out", dest="out_path", required=True)
    p.set_defaults(fn=_cmd_export_alist)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
