"""Command-line surface: exact reports over every module, JSON by default.

Exit codes: 0 success, 2 parse/domain errors, 3 for the counterexample alarm
(a pure_fail census verdict or a threshold above 3 at eps=1 on verified data),
so automation can distinguish a mathematical event from an operational error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Optional, TextIO

from .bounds import (
    bounds_report,
    decompose_projective,
    hilali_verdict,
    inequality_suite,
)
from .arithcond import check_condition
from .census import census_report, enumerate_sac
from .errors import CounterexampleFound, EllipticaError, ParseError
from .exactpoly import RatPoly, is_palindromic
from .mixedhodge import mh_box_inequality, mh_box_threshold, mh_model, mh_pi_model
from .modelspace import ExponentData, exponent_data, invariants, parse_space, render
from .serialize import (
    bounds_to_jsonable,
    box_verdict_to_jsonable,
    census_entry_to_jsonable,
    census_summary_to_jsonable,
    data_from_jsonable,
    data_to_jsonable,
    dumps,
    inequalities_to_jsonable,
    invariants_to_jsonable,
    mh_threshold_to_jsonable,
    mh_to_jsonable,
    parse_fraction,
    poly_from_jsonable,
    poly_to_jsonable,
    sac_to_jsonable,
    threshold_to_jsonable,
    verdict_to_jsonable,
)
from .stabilize import stabilization_threshold


def parse_inline_data(text: str) -> ExponentData:
    """Inline exponent data like 'b=2,3;a=1,1' (either side may be empty)."""
    fields: dict[str, tuple[int, ...]] = {}
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        name, sep, vals = part.partition("=")
        name = name.strip().lower()
        if not sep or name not in ("a", "b"):
            raise ParseError(f"expected 'b=...' or 'a=...', got {part!r}")
        try:
            fields[name] = tuple(int(v) for v in vals.split(",") if v.strip())
        except ValueError as exc:
            raise ParseError(f"bad integer list in {part!r}") from exc
    if "b" not in fields or "a" not in fields:
        raise ParseError("inline data must give both b= and a= (use 'b=;a=' for empty)")
    return ExponentData(fields["b"], fields["a"])


def _load_json_file(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from exc


def _load_data(args) -> ExponentData:
    if getattr(args, "data", None) is not None:
        return parse_inline_data(args.data)
    if getattr(args, "from_json", None) is not None:
        return data_from_jsonable(_load_json_file(args.from_json))
    raise ParseError("no exponent data given; use --data or --from-json")


def _load_source(args):
    if getattr(args, "space", None) is not None:
        return parse_space(args.space)
    return _load_data(args)


def _threads(args) -> int:
    if args.threads is not None:
        return max(1, args.threads)
    env = os.environ.get("ELLIPTICA_THREADS")
    if env is not None and env.isdigit():
        return max(1, int(env))
    return 1


def _style(args) -> str:
    return "table" if args.table else "json"


# -- table renderers (human-oriented, not contract-bound) ---------------------


def _flat_table(obj: Any, prefix: str = "") -> list[str]:
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)):
                lines.extend(_flat_table(v, f"{prefix}{k}."))
            else:
                lines.append(f"{prefix}{k} = {v}")
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            if isinstance(v, (dict, list)):
                lines.extend(_flat_table(v, f"{prefix}{i}."))
            else:
                lines.append(f"{prefix}{i} = {v}")
    else:
        lines.append(f"{prefix.rstrip('.')} = {obj}")
    return lines


def _threshold_table(payload: dict) -> str:
    lines = [f"eps = {payload['eps']}", f"threshold = {payload['threshold']}",
             f"tail_constant = {payload['tail_constant']}"]
    for n, ok in payload["per_n"].items():
        mark = "ok" if ok in (True, "positive") else ("??" if ok == "unknown" else "FAIL")
        lines.append(f"  n={n}: {mark}")
    return "\n".join(lines)


def format_report(payload: Any, style: str = "json", *, kind: str = "") -> str:
    """Render a jsonable report; json output is byte-stable, tables are not."""
    if style == "json":
        return dumps(payload)
    if kind == "threshold":
        return _threshold_table(payload)
    return "\n".join(_flat_table(payload))


# -- subcommand bodies ---------------------------------------------------------


def _with_source_keys(args, payload: dict) -> dict:
    out: dict[str, Any] = {}
    if getattr(args, "space", None) is not None:
        out["space"] = render(parse_space(args.space))
    else:
        out["data"] = data_to_jsonable(_load_data(args))
    out.update(payload)
    return out


def _cmd_invariants(args, out: TextIO) -> None:
    source = _load_source(args)
    data = source if isinstance(source, ExponentData) else exponent_data(source)
    payload = _with_source_keys(args, {
        "exponents": data_to_jsonable(data),
        "invariants": invariants_to_jsonable(invariants(data)),
    })
    out.write(format_report(payload, _style(args)) + "\n")


def _cmd_sac(args, out: TextIO) -> None:
    data = _load_data(args)
    rep = check_condition(data, args.mode.upper())
    payload = {"data": data_to_jsonable(data), "report": sac_to_jsonable(rep)}
    out.write(format_report(payload, _style(args)) + "\n")


def _cmd_bounds(args, out: TextIO) -> None:
    data = _load_data(args)
    payload = {
        "data": data_to_jsonable(data),
        "bounds": bounds_to_jsonable(bounds_report(data)),
        "inequalities": inequalities_to_jsonable(inequality_suite(data)),
    }
    out.write(format_report(payload, _style(args)) + "\n")


def _cmd_hilali(args, out: TextIO) -> None:
    data = _load_data(args)
    payload = {"data": data_to_jsonable(data), "verdict": verdict_to_jsonable(hilali_verdict(data))}
    out.write(format_report(payload, _style(args)) + "\n")


def _cmd_census(args, out: TextIO) -> None:
    threads = _threads(args)
    if args.summary:
        payload = census_summary_to_jsonable(census_report(args.max_dim, threads=threads))
        out.write(format_report(payload, _style(args)) + "\n")
        return
    for entry in enumerate_sac(args.max_dim, threads=threads):
        record = census_entry_to_jsonable(entry)
        if _style(args) == "json":
            out.write(dumps(record, indent=None) + "\n")
        else:
            d, v = record["data"], record["verdict"]
            out.write(
                f"n_X={record['invariants']['n_X']} b={d['b']} a={d['a']} "
                f"verdict={v['kind']}\n"
            )


def _cmd_threshold(args, out: TextIO) -> None:
    source = _load_source(args)
    res = stabilization_threshold(source, parse_fraction(args.eps))
    payload = _with_source_keys(args, threshold_to_jsonable(res))
    out.write(format_report(payload, _style(args), kind="threshold") + "\n")


def _parse_poly_arg(args) -> RatPoly:
    if args.coeffs is not None:
        try:
            return RatPoly(tuple(parse_fraction(c) for c in args.coeffs.split(",")))
        except EllipticaError:
            raise
        except ValueError as exc:
            raise ParseError(f"bad coefficient list {args.coeffs!r}") from exc
    if args.from_json is not None:
        return poly_from_jsonable(_load_json_file(args.from_json))
    raise ParseError("no polynomial given; use --coeffs or --from-json")


def _cmd_decompose(args, out: TextIO) -> None:
    poly = _parse_poly_arg(args)
    factors = decompose_projective(poly, allow_even_spheres=args.allow_spheres)
    payload = {
        "poly": poly_to_jsonable(poly),
        "palindromic": is_palindromic(poly),
        "factors": None if factors is None else [render(f) for f in factors],
    }
    out.write(format_report(payload, _style(args)) + "\n")


def _cmd_mh(args, out: TextIO) -> None:
    expr = parse_space(args.space)
    if args.op == "model":
        payload: dict[str, Any] = {"space": render(expr), "op": "model",
                                   "mh": mh_to_jsonable(mh_model(expr))}
    elif args.op == "pi":
        payload = {"space": render(expr), "op": "pi", "mh": mh_to_jsonable(mh_pi_model(expr))}
    elif args.op == "box":
        verdict = mh_box_inequality(
            expr, args.n, parse_fraction(args.eps), parse_fraction(args.rmax),
            max_depth=args.max_depth,
        )
        payload = {"space": render(expr), "op": "box", "n": args.n,
                   "eps": args.eps, "rmax": args.rmax,
                   "verdict": box_verdict_to_jsonable(verdict)}
    else:  # threshold
        res = mh_box_threshold(
            expr, parse_fraction(args.eps), parse_fraction(args.rmax),
            max_depth=args.max_depth,
        )
        payload = {"space": render(expr), "op": "threshold",
                   "result": mh_threshold_to_jsonable(res)}
    out.write(format_report(payload, _style(args)) + "\n")


# -- parser --------------------------------------------------------------------


def _add_common(sub: argparse.ArgumentParser) -> None:
    fmt = sub.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output (default; byte-stable)")
    fmt.add_argument("--table", action="store_true", help="human-oriented table output")
    sub.add_argument("--threads", type=int, default=None,
                     help="worker count (default: ELLIPTICA_THREADS or 1)")
    sub.add_argument("--seed", type=int, default=None, help="reserved")


def _add_data_inputs(sub: argparse.ArgumentParser, with_space: bool) -> None:
    grp = sub.add_mutually_exclusive_group(required=True)
    if with_space:
        grp.add_argument("--space", help="model space expression, e.g. 'S4 x CP2^3'")
    grp.add_argument("--data", help="inline exponent data, e.g. 'b=2,3;a=1,1'")
    grp.add_argument("--from-json", help="path to JSON with {\"b\": [...], \"a\": [...]}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="elliptica",
        description="Exact rational-homotopy invariants of elliptic exponent data",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="q, r, n_X, chi, chi_pi, dim_pi, dim_H")
    _add_data_inputs(p, with_space=True)
    _add_common(p)
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("sac", help="decide the (strong) arithmetic condition")
    _add_data_inputs(p, with_space=False)
    p.add_argument("--mode", choices=["ac", "sac"], default="sac")
    _add_common(p)
    p.set_defaults(func=_cmd_sac)

    p = sub.add_parser("bounds", help="the full upper-bound ladder on dim H")
    _add_data_inputs(p, with_space=False)
    _add_common(p)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("hilali", help="Hilali verdict for one datum")
    _add_data_inputs(p, with_space=False)
    _add_common(p)
    p.set_defaults(func=_cmd_hilali)

    p = sub.add_parser("census", help="enumerate admissible data up to a formal dimension")
    p.add_argument("--max-dim", type=int, required=True)
    p.add_argument("--summary", action="store_true", help="emit only the aggregate report")
    _add_common(p)
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("threshold", help="stabilization threshold pp(X; eps)")
    _add_data_inputs(p, with_space=True)
    p.add_argument("--eps", required=True, help="exact positive rational, e.g. 1 or 1/2")
    _add_common(p)
    p.set_defaults(func=_cmd_threshold)

    p = sub.add_parser("decompose", help="factor a Poincare polynomial into CP (and S^2n) factors")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--coeffs", help="comma-separated coefficients, lowest degree first")
    grp.add_argument("--from-json", help="path to polynomial JSON {\"coeffs\": [...]}")
    p.add_argument("--allow-spheres", action="store_true")
    _add_common(p)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("mh", help="mixed Hodge polynomials and box comparisons")
    p.add_argument("--space", required=True)
    p.add_argument("--op", choices=["model", "pi", "box", "threshold"], required=True)
    p.add_argument("--n", type=int, default=1, help="power of the space (op=box)")
    p.add_argument("--eps", default="1")
    p.add_argument("--rmax", default="2")
    p.add_argument("--max-depth", type=int, default=12)
    _add_common(p)
    p.set_defaults(func=_cmd_mh)

    return parser


def run(argv: list[str], out: Optional[TextIO] = None) -> int:
    """Parse argv, execute, write the report; returns the process exit code."""
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage/help
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except CounterexampleFound as exc:
        print(f"COUNTEREXAMPLE ALARM: {exc}", file=sys.stderr)
        return 3
    except EllipticaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
