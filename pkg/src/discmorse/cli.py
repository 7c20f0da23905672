"""Command line entry points.

Six subcommands: homology, morse, reduce, euler, subdivide, product.
Each prints a report with stable key order, or a JSON document with
--json. Exit status is 0 whenever an answer was computed, including
negative verdicts like "not a Morse matching"; parse and usage problems
exit nonzero.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from typing import Any

from .chains import chain_complex
from .complexes import (
    Cell,
    SimplicialComplex,
    barycentric_subdivision,
    product_triangulation,
)
from .elimination import EliminationError, all_orders_agree, gaussian_eliminate
from .errors import DiscMorseError, ParseError
from .euler import (
    EulerChain,
    boundary_zero_chain,
    complete_matching,
    euler_chain_from_matching,
    homologous,
)
from .homology import homology
from .io import (
    SymbolTable,
    format_chain,
    format_complex,
    format_matching,
    parse_chain,
    parse_complex,
    parse_matching,
)
from .matchings import (
    Matching,
    critical_cells,
    find_closed_vpath,
    greedy_morse_matching,
    hasse,
    validate_matching,
)
from .morse import thom_smale_complex


class Report:
    """Ordered key/value results plus input digests and warnings."""

    def __init__(self, command: str):
        self.command = command
        self.inputs: dict[str, str] = {}
        self.results: dict[str, Any] = {}
        self.warnings: list[str] = []

    def add_input(self, path: str, data: bytes) -> None:
        self.inputs[path] = hashlib.sha256(data).hexdigest()

    def put(self, key: str, value: Any) -> None:
        self.results[key] = value

    def warn(self, message: str) -> None:
        self.warnings.append(message)

    def to_json(self) -> str:
        doc = {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "warnings": self.warnings,
        }
        return json.dumps(doc, indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"command: {self.command}"]
        for path, digest in self.inputs.items():
            lines.append(f"input: {path} sha256 {digest}")
        for key, value in self.results.items():
            if isinstance(value, str) and "\n" in value:
                lines.append(f"{key}:")
                lines.extend(f"  {ln}" for ln in value.splitlines())
            elif isinstance(value, (list, tuple)):
                if not value:
                    lines.append(f"{key}: (none)")
                elif isinstance(value[0], str) and any(
                    " " in v or ";" in v or "\n" in v for v in value
                ):
                    lines.append(f"{key}:")
                    lines.extend(f"  {v}" for v in value)
                else:
                    lines.append(f"{key}: " + " ".join(str(v) for v in value))
            else:
                lines.append(f"{key}: {value}")
        for w in self.warnings:
            lines.append(f"warning: {w}")
        return "\n".join(lines) + "\n"

    def emit(self, as_json: bool) -> None:
        sys.stdout.write(self.to_json() + "\n" if as_json else self.to_text())


def _read_file(path: str, report: Report) -> str:
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    report.add_input(path, data)
    return data.decode("utf-8")


def _load_complex(path: str, report: Report) -> tuple[SimplicialComplex, SymbolTable]:
    X, table = parse_complex(_read_file(path, report))
    report.put("cells", [len(X.cells(k)) for k in range(X.dim + 1)])
    report.put("euler_characteristic", X.euler_characteristic())
    return X, table


def _homology_lines(h) -> list[str]:
    return [f"H_{k} = {h.group(k)}" for k in range(len(h.betti))]


def cmd_homology(args: argparse.Namespace) -> int:
    report = Report("homology")
    X, _ = _load_complex(args.complex, report)
    h = homology(chain_complex(X))
    report.put("betti", list(h.betti))
    for k, t in enumerate(h.torsion):
        if t:
            report.put(f"torsion_{k}", list(t))
    report.put("homology", _homology_lines(h))
    report.emit(args.json)
    return 0


def _matching_from_args(
    args, X: SimplicialComplex, table: SymbolTable, report: Report
) -> Matching | None:
    """Greedy matching, or the validated matching file; None on a negative
    validation verdict (already reported)."""
    if args.matching is None:
        M = greedy_morse_matching(X)
        report.put("matching_source", "greedy")
        return M
    pairs = parse_matching(_read_file(args.matching, report), table)
    verdict = validate_matching(hasse(X), pairs)
    report.put("matching_valid", verdict.ok)
    if not verdict.ok:
        report.put("matching_problem", verdict.problem)
        return None
    return Matching(pairs)


def cmd_morse(args: argparse.Namespace) -> int:
    report = Report("morse")
    X, table = _load_complex(args.complex, report)
    M = _matching_from_args(args, X, table, report)
    if M is None:
        report.emit(args.json)
        return 0
    report.put("pairs", len(M))
    morse = find_closed_vpath(X, M) is None
    report.put("morse", morse)
    if not morse:
        witness = find_closed_vpath(X, M)
        report.put(
            "closed_vpath", " -> ".join(table.decode_cell(c) for c in witness)
        )
        report.emit(args.json)
        return 0
    crit = critical_cells(X, M)
    report.put("critical", [len(crit[k]) for k in range(X.dim + 1)])
    ts = thom_smale_complex(X, M)
    entries = []
    for k in range(1, X.dim + 1):
        mat = ts.boundary(k)
        for j, tau in enumerate(ts.basis(k)):
            for i, sigma in enumerate(ts.basis(k - 1)):
                if mat[i][j]:
                    entries.append(
                        f"{table.decode_cell(tau)} ; {table.decode_cell(sigma)} ; {mat[i][j]}"
                    )
    report.put("differential", entries)
    hm = homology(ts)
    hs = homology(chain_complex(X))
    report.put("morse_homology", _homology_lines(hm))
    report.put("homology_match", hm == hs)
    report.put("matching", format_matching(M, table).splitlines())
    report.emit(args.json)
    return 0


def _pivot_of(C, sigma: Cell, tau: Cell) -> int:
    k = len(tau) - 1
    row = C.basis(k - 1).index(sigma)
    col = C.basis(k).index(tau)
    return C.boundary(k)[row][col]


def cmd_reduce(args: argparse.Namespace) -> int:
    report = Report("reduce")
    X, table = _load_complex(args.complex, report)
    pairs = parse_matching(_read_file(args.matching, report), table)
    verdict = validate_matching(hasse(X), pairs)
    report.put("matching_valid", verdict.ok)
    if not verdict.ok:
        report.put("matching_problem", verdict.problem)
        report.emit(args.json)
        return 0
    M = Matching(pairs)
    C = chain_complex(X)
    morse = find_closed_vpath(X, M) is None
    report.put("morse", morse)

    if args.all_orders:
        res = all_orders_agree(C, M, max_orders=args.max_orders, seed=args.seed)
        report.put("orders_tested", res.orders_tested)
        report.put("exhaustive", res.exhaustive)
        report.put("all_orders_agree", res.agree)
        if res.failure is not None:
            report.put("failure_step", res.failure.step)
            report.put("failure_pivot", res.failure.pivot)
        if res.agree and morse:
            report.put("matches_thom_smale", res.reduced == thom_smale_complex(X, M))
        report.emit(args.json)
        return 0

    order = list(pairs)
    if args.order:
        try:
            idx = [int(t) for t in args.order.split(",")]
        except ValueError:
            raise ParseError(f"--order wants comma-separated indices, got {args.order!r}")
        if sorted(idx) != list(range(len(pairs))):
            raise ParseError("--order must be a permutation of 0..n-1 over matching lines")
        order = [pairs[i] for i in idx]
    steps = []
    current = C
    failed = None
    for i, (sigma, tau) in enumerate(order):
        pivot = _pivot_of(current, sigma, tau)
        try:
            current = gaussian_eliminate(current, (sigma, tau))
        except EliminationError:
            failed = (i, sigma, tau, pivot)
            break
        steps.append(
            f"{table.decode_cell(sigma)} ; {table.decode_cell(tau)} ; pivot {pivot}"
        )
    report.put("steps", steps)
    if failed is not None:
        i, sigma, tau, pivot = failed
        report.put("failed_step", i)
        report.put(
            "failed_pair", f"{table.decode_cell(sigma)} ; {table.decode_cell(tau)}"
        )
        report.put("failed_pivot", pivot)
        report.emit(args.json)
        return 0
    report.put("reduced_sizes", [current.size(k) for k in range(current.top_dim + 1)])
    entries = []
    for k in range(1, current.top_dim + 1):
        mat = current.boundary(k)
        for j, tau in enumerate(current.basis(k)):
            for i2, sigma in enumerate(current.basis(k - 1)):
                if mat[i2][j]:
                    entries.append(
                        f"{table.decode_cell(tau)} ; {table.decode_cell(sigma)} ; {mat[i2][j]}"
                    )
    report.put("reduced_differential", entries)
    if morse:
        report.put("matches_thom_smale", current == thom_smale_complex(X, M))
    report.emit(args.json)
    return 0


def cmd_euler(args: argparse.Namespace) -> int:
    report = Report("euler")
    X, table = _load_complex(args.complex, report)
    if args.matching is not None:
        pairs = parse_matching(_read_file(args.matching, report), table)
        verdict = validate_matching(hasse(X), pairs)
        report.put("matching_valid", verdict.ok)
        if not verdict.ok:
            report.put("matching_problem", verdict.problem)
            report.emit(args.json)
            return 0
        M = Matching(pairs)
        uncovered = [c for c in X.all_cells() if not M.covers(c)]
        report.put("complete", not uncovered)
        if uncovered:
            report.put("uncovered_cell", table.decode_cell(uncovered[0]))
            report.emit(args.json)
            return 0
    else:
        M = complete_matching(hasse(X))
        report.put("complete", M is not None)
        if M is None:
            chi = X.euler_characteristic()
            if chi != 0:
                report.warn(
                    f"no complete matching: Euler characteristic is {chi}, not 0"
                )
            else:
                report.warn("no complete matching: bipartite matching is not perfect")
            report.emit(args.json)
            return 0
    chain = euler_chain_from_matching(X, M)
    sub = barycentric_subdivision(X)
    bz = boundary_zero_chain(sub, chain)
    want = {
        sub.barycenter_of[c]: (1 if len(c) % 2 == 1 else -1) for c in X.all_cells()
    }
    report.put("matching", format_matching(M, table).splitlines())
    report.put("chain", format_chain(chain, table).splitlines())
    report.put("boundary_ok", bz == want)
    if args.compare is not None:
        other = parse_chain(_read_file(args.compare, report), table)
        if other.boundary_on_cells() != chain.boundary_on_cells():
            report.put("comparable", False)
            report.warn("chains have different boundaries")
        else:
            report.put("comparable", True)
            report.put("homologous", homologous(X, chain, other))
    report.emit(args.json)
    return 0


def cmd_subdivide(args: argparse.Namespace) -> int:
    report = Report("subdivide")
    X, table = _load_complex(args.complex, report)
    sub = barycentric_subdivision(X)
    sd = sub.complex
    report.put("subdivision_cells", [len(sd.cells(k)) for k in range(sd.dim + 1)])
    report.put("euler_preserved", sd.euler_characteristic() == X.euler_characteristic())
    report.put(
        "barycenters",
        [
            f"{table.decode_cell(c)} ; {vid}"
            for c, vid in sorted(sub.barycenter_of.items(), key=lambda kv: kv[1])
        ],
    )
    report.put("facets", format_complex(sd).splitlines())
    report.emit(args.json)
    return 0


def cmd_product(args: argparse.Namespace) -> int:
    report = Report("product")
    X = product_triangulation(args.m, args.n)
    report.put("cells", [len(X.cells(k)) for k in range(X.dim + 1)])
    report.put("euler_characteristic", X.euler_characteristic())
    report.put("facets", format_complex(X).splitlines())
    report.emit(args.json)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled orders")
    common.add_argument(
        "--max-orders", type=int, default=100, help="order sample budget"
    )

    parser = argparse.ArgumentParser(
        prog="discmorse",
        description="Morse matchings, critical-cell complexes, and integer homology "
        "on simplicial complexes given as facet files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("homology", parents=[common], help="Betti numbers and torsion")
    p.add_argument("complex", help="facet file")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser(
        "morse", parents=[common], help="validate a matching and build its critical complex"
    )
    p.add_argument("complex", help="facet file")
    p.add_argument("--matching", help="matching file (default: greedy search)")
    p.set_defaults(func=cmd_morse)

    p = sub.add_parser(
        "reduce", parents=[common], help="eliminate matched pairs in a given order"
    )
    p.add_argument("complex", help="facet file")
    p.add_argument("--matching", required=True, help="matching file")
    p.add_argument("--order", help="comma-separated indices into the matching lines")
    p.add_argument(
        "--all-orders", action="store_true", help="compare every (or sampled) order"
    )
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser(
        "euler", parents=[common], help="complete matchings and their Euler chains"
    )
    p.add_argument("complex", help="facet file")
    p.add_argument("--matching", help="use this matching instead of searching")
    p.add_argument("--compare", help="second chain file; test homologous")
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("subdivide", parents=[common], help="barycentric subdivision")
    p.add_argument("complex", help="facet file")
    p.set_defaults(func=cmd_subdivide)

    p = sub.add_parser("product", parents=[common], help="staircase product of simplices")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_product)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DiscMorseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
