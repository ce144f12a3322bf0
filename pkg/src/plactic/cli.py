"""Command-line interface.

Exit codes: 0 success, 1 domain error, 2 parse error, 3 property violation.
Payloads go to stdout (JSON or DOT), diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import kostka as kostka_mod
from .crystal import crystal_graph
from .cyclage import charge_any_weight, cocharge, cyclage_graph, partition_norm
from .diagnostics import PlacticError
from .multivariate import bold_kostka
from .orbits import orbit
from .tableaux import Tableau, as_partition, is_partition
from .typec import congruent, parse_signed_word, validate
from .verify import SUITES, run_suite

EXIT_DOMAIN, EXIT_PARSE, EXIT_VIOLATION = 1, 2, 3


def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _partition_arg(text: str) -> tuple[int, ...]:
    parts = _int_list(text)
    try:
        return as_partition(parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _weight_arg(text: str) -> tuple[int, ...]:
    parts = _int_list(text)
    if any(x < 0 for x in parts):
        raise argparse.ArgumentTypeError(f"negative entry in weight {text!r}")
    return parts


def _rows_arg(text: str) -> list[list[int]]:
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise argparse.ArgumentTypeError(f"tableau rows must be JSON, e.g. [[1,1],[2]]: {exc}")
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise argparse.ArgumentTypeError("tableau rows must be a list of lists")
    return rows


def _signed_arg(text: str) -> tuple[int, ...]:
    try:
        return parse_signed_word(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated signed integers, got {text!r}")


def _emit(payload) -> None:
    if isinstance(payload, str):
        sys.stdout.write(payload)
    else:
        sys.stdout.write(json.dumps(payload, separators=(",", ":")) + "\n")


def cmd_crystal(args) -> int:
    g = crystal_graph(args.shape, args.rank)
    _emit(g.to_dot() if args.format == "dot" else g.to_json())
    if args.figure:
        from .figures import plot_crystal

        plot_crystal(g, args.figure, color_orbits=args.orbits)
    return 0


def cmd_kostka(args) -> int:
    if args.method == "all":
        results = {name: fn(args.shape, args.weight, args.rank) for name, fn in kostka_mod.METHODS.items()}
        first = results["lusztig"]
        payload = dict(first.to_json(), agree=all(p == first for p in results.values()))
        if not payload["agree"]:
            payload["by_method"] = {k: v.to_json()["q"] for k, v in results.items()}
    else:
        payload = kostka_mod.METHODS[args.method](args.shape, args.weight, args.rank).to_json()
    _emit(payload)
    return 0


def cmd_multi(args) -> int:
    p = bold_kostka(args.shape, args.k, args.rank)
    _emit(dict(p.to_json(), text=str(p)))
    return 0


def _tableau(args) -> Tableau:
    return Tableau.from_rows(args.tableau, args.rank)


def cmd_orbit(args) -> int:
    _emit(orbit(_tableau(args)).to_json())
    return 0


def cmd_charge(args) -> int:
    t = _tableau(args)
    payload = {"tableau": t.to_json(), "charge": charge_any_weight(t)}
    if is_partition(t.weight):
        payload["cocharge"] = cocharge(t)
        payload["norm"] = partition_norm(t.weight)
    _emit(payload)
    return 0


def cmd_cyclage(args) -> int:
    g = cyclage_graph(args.weight, args.rank)
    _emit(g.to_dot(tree=args.tree) if args.format == "dot" else g.to_json(tree=args.tree))
    if args.figure:
        from .figures import plot_cyclage

        plot_cyclage(g, args.figure, tree=args.tree)
    return 0


def cmd_cplactic(args) -> int:
    w1 = validate(args.w1, args.rank)
    w2 = validate(args.w2, args.rank)
    verdict = congruent(w1, w2, args.rank, max_len=args.max_len, max_states=args.max_states)
    _emit({"congruent": verdict})
    return 0


def cmd_verify(args) -> int:
    if args.list:
        _emit("\n".join(SUITES) + "\n")
        return 0
    names = list(SUITES) if args.suite == "all" else [args.suite]
    report = []
    for name in names:
        r = run_suite(name, args.max_size)
        report.append({"suite": name, "ok": r.ok, "checked": r.checked})
        if not r.ok:
            print(f"{name}: violation after {r.checked} checks: {r.counterexample}", file=sys.stderr)
            return EXIT_VIOLATION
    _emit({"suites": report})
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="plactic", description="Crystal graphs, charge and Kostka-Foulkes polynomials.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("crystal", help="crystal graph of a shape")
    c.add_argument("--shape", type=_partition_arg, required=True)
    c.add_argument("--rank", type=int, required=True)
    c.add_argument("--format", choices=["dot", "json"], default="json")
    c.add_argument("--figure", help="also render the graph to this image file")
    c.add_argument("--orbits", action="store_true", help="shade vertices by sigma-orbit in the figure")
    c.set_defaults(func=cmd_crystal)

    k = sub.add_parser("kostka", help="Kostka-Foulkes polynomial")
    k.add_argument("--shape", type=_partition_arg, required=True)
    k.add_argument("--weight", type=_weight_arg, required=True)
    k.add_argument("--rank", type=int, required=True)
    k.add_argument("--method", choices=["charge", "mean", "lusztig", "all"], default="all")
    k.set_defaults(func=cmd_kostka)

    m = sub.add_parser("multi", help="multivariate K polynomial for rectangular weight (k^(n+1))")
    m.add_argument("--shape", type=_partition_arg, required=True)
    m.add_argument("--k", type=int, required=True)
    m.add_argument("--rank", type=int, required=True)
    m.set_defaults(func=cmd_multi)

    for name, func, text in (
        ("orbit", cmd_orbit, "sigma-orbit of a tableau"),
        ("charge", cmd_charge, "charge and cocharge of a tableau"),
    ):
        s = sub.add_parser(name, help=text)
        s.add_argument("--tableau", type=_rows_arg, required=True, help="rows bottom first, e.g. [[1,1],[2]]")
        s.add_argument("--rank", type=int, required=True)
        s.set_defaults(func=func)

    y = sub.add_parser("cyclage", help="cyclage graph (or tree) of a weight")
    y.add_argument("--weight", type=_partition_arg, required=True)
    y.add_argument("--rank", type=int, required=True)
    y.add_argument("--format", choices=["dot", "json"], default="json")
    y.add_argument("--tree", action="store_true", help="keep only initial cyclages")
    y.add_argument("--figure", help="also render the graph to this image file")
    y.set_defaults(func=cmd_cyclage)

    t = sub.add_parser("cplactic", help="type C plactic congruence (bounded search)")
    t.add_argument("--rank", type=int, required=True)
    t.add_argument("--w1", type=_signed_arg, required=True)
    t.add_argument("--w2", type=_signed_arg, required=True)
    t.add_argument("--max-len", type=int, default=8)
    t.add_argument("--max-states", type=int, default=50_000)
    t.set_defaults(func=cmd_cplactic)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    v.add_argument("--max-size", type=int)
    v.add_argument("--list", action="store_true")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "rank", 1) is not None and getattr(args, "rank", 1) < 1:
        parser.error("--rank must be at least 1")
    try:
        return args.func(args)
    except PlacticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
