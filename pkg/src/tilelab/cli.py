"""Command line front end.

One invocation produces exactly one JSON document on standard output (or a
flat key = value rendering with --format text); diagnostics go to standard
error.  Exit codes separate "the answer is no" from "could not answer":

    0  success
    1  domain-negative result (invalid solution, unsolvable grid, no
       sequence found, no real roots, no factorization shape solved)
    2  usage error (bad flags, malformed input)
    3  resource limit hit

TILELAB_THREADS, when set, must be an integer >= 1.  It caps the worker
count; every current code path is single-worker, so its only observable
effect is validation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cost import CostLedger, budget, instrumented_apply, instrumented_verify
from .grid import GridError, format_moves, load_grid, parse_moves
from .poly import (
    NotARoot,
    Poly,
    eval_horner,
    max_norm,
    multiplicity,
    norm_claim_check,
    parse_poly_text,
    parse_scalar,
    poly_from_json,
)
from .search import (
    DEFAULT_STATE_CAP,
    NotFound,
    ResourceLimit,
    Unsolvable,
    candidate_sequences,
    enumerate_reachable,
    exhaust_sequences,
    solve_optimal,
)
from .sturm import oracle_real_roots
from .verify import claim_report
from .vieta import NoPatternSolved, SolveConfig, enumerate_patterns, find_roots_report

USAGE_ERROR = 2
DOMAIN_NEGATIVE = 1
RESOURCE_LIMIT = 3


class _UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_grid_arg(path: str):
    try:
        return load_grid(_read_text(path))
    except (OSError, ValueError, GridError) as exc:
        raise _UsageError(f"cannot load grid from {path}: {exc}") from exc


def _load_poly_arg(args) -> Poly:
    if getattr(args, "poly", None) is not None:
        try:
            return parse_poly_text(args.poly)
        except ValueError as exc:
            raise _UsageError(f"bad polynomial text: {exc}") from exc
    path = getattr(args, "infile", None)
    if path is None:
        raise _UsageError("one of --poly or --in is required")
    try:
        text = _read_text(path)
        if text.lstrip().startswith("{"):
            return poly_from_json(json.loads(text))
        return parse_poly_text(text)
    except (OSError, ValueError) as exc:
        raise _UsageError(f"cannot load polynomial from {path}: {exc}") from exc


def _parse_seq(text: str):
    try:
        return parse_moves(text)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc


def _flat(doc, prefix=""):
    if isinstance(doc, dict):
        for key, val in doc.items():
            yield from _flat(val, f"{prefix}.{key}" if prefix else str(key))
    elif isinstance(doc, (list, tuple)):
        for i, val in enumerate(doc):
            yield from _flat(val, f"{prefix}[{i}]")
    else:
        yield f"{prefix} = {json.dumps(doc)}"


def _emit(doc: dict, args) -> None:
    if args.format == "json":
        payload = json.dumps(doc, indent=2) + "\n"
    else:
        payload = "\n".join(_flat(doc)) + "\n"
    sys.stdout.write(payload)
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(payload)


# ---------------------------------------------------------------------------
# puzzle handlers


def _cmd_puzzle_solve(args) -> int:
    g = _load_grid_arg(args.infile)
    if args.algo == "exhaust":
        ledger = CostLedger()
        try:
            seq = exhaust_sequences(g, args.kmax, ledger)
        except NotFound:
            _emit({"found": False, "kmax": args.kmax}, args)
            return DOMAIN_NEGATIVE
        # candidates probed until the winner; the empty-sequence
        # pre-check is not a candidate and does not count
        probes = 0
        if seq:
            for cand in candidate_sequences(args.kmax):
                probes += 1
                if cand == seq:
                    break
        doc = {
            "psi": len(seq),
            "seq": format_moves(seq),
            "expanded": probes,
            "decisions": ledger.decisions,
        }
        _emit(doc, args)
        return 0
    try:
        res = solve_optimal(g, algo=args.algo)
    except Unsolvable as exc:
        _emit({"solvable": False, "reason": str(exc)}, args)
        return DOMAIN_NEGATIVE
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    _emit(
        {
            "solvable": True,
            "psi": res.psi,
            "seq": format_moves(res.seq),
            "expanded": res.expanded,
        },
        args,
    )
    return 0


def _cmd_puzzle_verify(args) -> int:
    g = _load_grid_arg(args.infile)
    seq = _parse_seq(args.seq)
    ledger = CostLedger()
    valid = instrumented_verify(g, seq, ledger)
    cap = budget("verify", g.n, len(seq))
    doc = {
        "valid": valid,
        "decisions": ledger.decisions,
        "budget": cap.ceiling,
        "within": ledger.decisions <= cap.ceiling,
    }
    if args.emit_ledger:
        doc["per_primitive"] = ledger.snapshot()
    _emit(doc, args)
    return 0 if valid else DOMAIN_NEGATIVE


def _cmd_puzzle_enumerate(args) -> int:
    table = enumerate_reachable(args.n, depth_limit=args.depth_limit,
                                max_states=args.state_cap)
    doc = {
        "n": table.n,
        "count": table.count,
        "diameter": table.diameter,
        "depth_histogram": list(table.depth_histogram),
    }
    _emit(doc, args)
    return 0


def _cmd_puzzle_bounds(args) -> int:
    table = enumerate_reachable(args.n)
    doc = claim_report(args.n, table).to_json()
    _emit(doc, args)
    return 0


def _cmd_puzzle_cost(args) -> int:
    g = _load_grid_arg(args.infile)
    seq = _parse_seq(args.seq)
    ledger = CostLedger()
    cur = g
    for mv in seq:
        cur = instrumented_apply(cur, mv, ledger)
    ceiling = 27 * len(seq)
    doc = {
        "decisions": ledger.decisions,
        "ceiling": ceiling,
        "within": ledger.decisions <= ceiling,
    }
    if args.emit_ledger:
        doc["per_primitive"] = ledger.snapshot()
    _emit(doc, args)
    return 0


def _cmd_puzzle_exhaust(args) -> int:
    g = _load_grid_arg(args.infile)
    ledger = CostLedger()
    cap = budget("search", g.n, args.kmax)
    try:
        seq = exhaust_sequences(g, args.kmax, ledger)
    except NotFound:
        doc = {
            "found": False,
            "kmax": args.kmax,
            "decisions": ledger.decisions,
            "budget": cap.ceiling,
            "within": ledger.decisions <= cap.ceiling,
        }
        _emit(doc, args)
        return DOMAIN_NEGATIVE
    doc = {
        "found": True,
        "psi": len(seq),
        "seq": format_moves(seq),
        "decisions": ledger.decisions,
        "budget": cap.ceiling,
        "within": ledger.decisions <= cap.ceiling,
    }
    if args.emit_ledger:
        doc["per_primitive"] = ledger.snapshot()
    _emit(doc, args)
    return 0


# ---------------------------------------------------------------------------
# roots handlers


def _solve_config(args) -> SolveConfig:
    return SolveConfig(
        tol=args.tol,
        max_iters=args.max_iters,
        starts=args.starts,
        cluster_radius=args.cluster_radius,
    )


def _cmd_roots_find(args) -> int:
    p = _load_poly_arg(args)
    if p.degree is None or p.degree < 1:
        raise _UsageError("polynomial must have degree at least 1")
    cfg = _solve_config(args)
    try:
        rep = find_roots_report(p, mode=args.mode, config=cfg, order=args.order)
    except NoPatternSolved as exc:
        doc = {
            "roots": [],
            "tau": None,
            "case": None,
            "outcomes": [o.to_json() for o in exc.outcomes],
            "error": "no factorization shape solved",
        }
        _emit(doc, args)
        return DOMAIN_NEGATIVE
    doc = rep.to_json()
    _emit(doc, args)
    return 0 if rep.roots.count > 0 else DOMAIN_NEGATIVE


def _cmd_roots_verify(args) -> int:
    p = _load_poly_arg(args)
    try:
        native = parse_scalar(args.root)
    except ValueError:
        try:
            native = complex(args.root)
        except ValueError as exc:
            raise _UsageError(f"cannot parse root value {args.root!r}") from exc
    value = complex(native)
    if value.imag == 0:
        value = value.real
    residual = abs(complex(eval_horner(p, value)))
    scale = max(1.0, float(max_norm(p)))
    is_root = residual <= args.tol * scale
    mult = None
    if is_root:
        from fractions import Fraction

        from .poly import RATIONAL, complex_poly

        probe_p, probe_r = p, value
        if p.kind == RATIONAL:
            if isinstance(native, (int, Fraction)):
                probe_r = Fraction(native)
            else:
                probe_p = complex_poly([complex(c) for c in p.coeffs])
        try:
            mult = multiplicity(probe_p, probe_r)
        except NotARoot:
            mult = None
    doc = {
        "root": value if isinstance(value, float) else {"re": value.real, "im": value.imag},
        "residual": residual,
        "tol": args.tol,
        "is_root": is_root,
        "multiplicity": mult,
    }
    _emit(doc, args)
    return 0 if is_root else DOMAIN_NEGATIVE


def _cmd_roots_cases(args) -> int:
    pats = enumerate_patterns(args.degree, args.mode, args.order)
    doc = {
        "degree": args.degree,
        "mode": args.mode,
        "order": args.order or ("merged" if args.mode == "real" else "generic"),
        "cases": [
            {
                "label": p.label(),
                "mults": list(p.mults),
                "cofactor_degree": p.cofactor_degree,
            }
            for p in pats
        ],
    }
    _emit(doc, args)
    return 0


# ---------------------------------------------------------------------------
# report handler


def _cmd_report(args) -> int:
    sizes = args.n or [2]
    bounds = []
    for n in sorted(set(sizes)):
        table = enumerate_reachable(n)
        bounds.append(claim_report(n, table).to_json())
    polynomials = []
    norm_checks = []
    if args.poly_corpus:
        try:
            lines = [
                ln.strip()
                for ln in _read_text(args.poly_corpus).splitlines()
                if ln.strip() and not ln.strip().startswith("#")
            ]
        except OSError as exc:
            raise _UsageError(f"cannot read corpus {args.poly_corpus}: {exc}") from exc
        polys = []
        for ln in lines:
            try:
                polys.append((ln, parse_poly_text(ln)))
            except ValueError as exc:
                raise _UsageError(f"bad corpus line {ln!r}: {exc}") from exc
        for text, p in polys:
            entry = {"poly": text}
            if p.degree is None or p.degree < 1:
                entry["tau"] = 0
                entry["roots"] = []
            else:
                found = oracle_real_roots(p)
                entry["tau"] = found.count
                entry["roots"] = found.to_json()["roots"]
            polynomials.append(entry)
        # consecutive non-overlapping pairs: (0,1), (2,3), ...
        for i in range(0, len(polys) - 1, 2):
            (t1, p1), (t2, p2) = polys[i], polys[i + 1]
            if p1.kind != p2.kind:
                from .poly import complex_poly

                p1 = complex_poly([complex(c) for c in p1.coeffs])
                p2 = complex_poly([complex(c) for c in p2.coeffs])
            chk = norm_claim_check(p1, p2)
            norm_checks.append(
                {
                    "pair": [t1, t2],
                    "product_norm": float(chk.lhs),
                    "norm_product": float(chk.rhs),
                    "multiplicative": chk.holds,
                }
            )
    doc = {"bounds": bounds, "polynomials": polynomials, "norm_checks": norm_checks}
    _emit(doc, args)
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_common(sub):
    sub.add_argument("--format", choices=("json", "text"), default="json",
                     help="output rendering (default json)")
    sub.add_argument("--out", default=None, metavar="PATH",
                     help="also write the document to this file")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="tilelab",
        description="Sliding-tile solvability workbench and factor-matching root finder.",
    )
    groups = top.add_subparsers(dest="group", required=True)

    puzzle = groups.add_parser("puzzle", help="sliding-tile operations")
    pz = puzzle.add_subparsers(dest="command", required=True)

    p_solve = pz.add_parser("solve", help="optimal solution for a grid")
    p_solve.add_argument("--in", dest="infile", required=True,
                         help="grid file (text or JSON); - for stdin")
    p_solve.add_argument("--algo", choices=("auto", "bfs", "ida", "exhaust"),
                         default="auto")
    p_solve.add_argument("--kmax", type=int, default=8,
                         help="sequence length cap for --algo exhaust (default 8)")
    _add_common(p_solve)
    p_solve.set_defaults(func=_cmd_puzzle_solve)

    p_verify = pz.add_parser("verify", help="check a claimed solution")
    p_verify.add_argument("--in", dest="infile", required=True)
    p_verify.add_argument("--seq", required=True, help='move letters, e.g. "RDDRD"')
    p_verify.add_argument("--emit-ledger", action="store_true")
    _add_common(p_verify)
    p_verify.set_defaults(func=_cmd_puzzle_verify)

    p_enum = pz.add_parser("enumerate", help="census of the goal component")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--depth-limit", type=int, default=None)
    p_enum.add_argument("--state-cap", type=int, default=DEFAULT_STATE_CAP)
    _add_common(p_enum)
    p_enum.set_defaults(func=_cmd_puzzle_enumerate)

    p_bounds = pz.add_parser("bounds", help="claim-check the published bounds")
    p_bounds.add_argument("--n", type=int, choices=(2, 3), required=True)
    _add_common(p_bounds)
    p_bounds.set_defaults(func=_cmd_puzzle_bounds)

    p_cost = pz.add_parser("cost", help="decision cost of applying a sequence")
    p_cost.add_argument("--in", dest="infile", required=True)
    p_cost.add_argument("--seq", required=True)
    p_cost.add_argument("--emit-ledger", action="store_true")
    _add_common(p_cost)
    p_cost.set_defaults(func=_cmd_puzzle_cost)

    p_ex = pz.add_parser("exhaust", help="brute-force search with budget accounting")
    p_ex.add_argument("--in", dest="infile", required=True)
    p_ex.add_argument("--kmax", type=int, required=True)
    p_ex.add_argument("--emit-ledger", action="store_true")
    _add_common(p_ex)
    p_ex.set_defaults(func=_cmd_puzzle_exhaust)

    roots = groups.add_parser("roots", help="polynomial root operations")
    rt = roots.add_subparsers(dest="command", required=True)

    r_find = rt.add_parser("find", help="roots via factorization-shape matching")
    r_find.add_argument("--poly", default=None,
                        help='low-to-high coefficients, e.g. "pi/2,-pi^2,0,2"')
    r_find.add_argument("--in", dest="infile", default=None,
                        help="polynomial file (text or JSON)")
    r_find.add_argument("--mode", choices=("real", "complex"), default="real")
    r_find.add_argument("--order", choices=("merged", "generic"), default=None,
                        help="case order (default: merged in real mode, generic in complex)")
    r_find.add_argument("--tol", type=float, default=1e-10,
                        help="coefficient residual tolerance (default 1e-10)")
    r_find.add_argument("--max-iters", type=int, default=100)
    r_find.add_argument("--starts", type=int, default=32)
    r_find.add_argument("--cluster-radius", type=float, default=1e-6)
    _add_common(r_find)
    r_find.set_defaults(func=_cmd_roots_find)

    r_verify = rt.add_parser("verify", help="residual check for a claimed root")
    r_verify.add_argument("--poly", default=None)
    r_verify.add_argument("--in", dest="infile", default=None)
    r_verify.add_argument("--root", required=True)
    r_verify.add_argument("--tol", type=float, default=1e-9)
    _add_common(r_verify)
    r_verify.set_defaults(func=_cmd_roots_verify)

    r_cases = rt.add_parser("cases", help="list factorization shapes for a degree")
    r_cases.add_argument("--degree", type=int, required=True)
    r_cases.add_argument("--mode", choices=("real", "complex"), default="real")
    r_cases.add_argument("--order", choices=("merged", "generic"), default=None)
    _add_common(r_cases)
    r_cases.set_defaults(func=_cmd_roots_cases)

    rep = groups.add_parser("report", help="aggregate claim-check report")
    rep.add_argument("--n", type=int, choices=(2, 3), action="append",
                     help="board sizes to census (repeatable; default 2)")
    rep.add_argument("--poly-corpus", default=None,
                     help="text file, one polynomial per line; consecutive "
                          "non-overlapping pairs feed the norm check")
    _add_common(rep)
    rep.set_defaults(func=_cmd_report)

    return top


def _validate_threads() -> None:
    raw = os.environ.get("TILELAB_THREADS")
    if raw is None:
        return
    try:
        val = int(raw)
    except ValueError:
        raise _UsageError(f"TILELAB_THREADS must be an integer, got {raw!r}")
    if val < 1:
        raise _UsageError(f"TILELAB_THREADS must be >= 1, got {val}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _validate_threads()
        return args.func(args)
    except _UsageError as exc:
        print(f"tilelab: error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ResourceLimit as exc:
        print(f"tilelab: resource limit: {exc}", file=sys.stderr)
        return RESOURCE_LIMIT


if __name__ == "__main__":
    sys.exit(main())
