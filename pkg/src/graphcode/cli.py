"""Command-line interface.

Subcommands: construct (emit a scheme file), analyze (spectrum, minimum
cut, probabilities for a graph file), bounds (verified bound report as
CSV), reproduce (the bundled 12-scheme comparison suite as tables, or
probability curves as CSV plus a rendered PNG), and simulate (packet-level
Monte Carlo for a scheme file).

Exit codes: 0 success, 1 usage error, 2 size cap exceeded, 3 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__, rng
from .analysis import (
    DEFAULT_ENUMERATION_CAP,
    SizeCapError,
    DeletionSpectrum,
    decoding_probability,
    deletion_spectrum,
    min_dcut,
    monte_carlo_probability,
)
from .bounds import InvariantViolation, b_upper_bounds, report_csv, u_lower_bounds, BoundsReport
from .codec import DecodingError, InternalCheckError, decode, encode, erase
from .constructions import (
    CodingScheme,
    algorithm1,
    algorithm1_warnings,
    algorithm2,
    algorithm2_warnings,
    format_scheme,
    parse_scheme,
    scheme_to_graph,
    uncoded,
)
from .decodability import Parity
from .finite_field import FieldSpec
from .multigraph import GraphError, MultiGraph, parse_graph

COMPARISON_LABELS = [f"G_{i}" for i in range(10)] + ["G'", "G"]

TABLE_GRID = {"b": None, "p06": 0.6, "p07": 0.7, "p08": 0.8}

FIGURE_MODES = {"even-curves": Parity.EVEN, "odd-curves": Parity.ODD}

FIGURE_GRAPHS = ["G_3", "G'", "G"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # exit 1 on usage problems, not argparse's 2
        raise UsageError(message)


def comparison_suite() -> list[tuple[str, MultiGraph]]:
    """The bundled comparison family: ten ring-plus-loops schemes with 0..9
    single-packet encodings, the circulant scheme, and the uncoded
    baseline, all with 9 packets and redundancy 2."""
    graphs = [
        (f"G_{i}", scheme_to_graph(algorithm1(9, 2, 3, i))) for i in range(10)
    ]
    graphs.append(("G'", scheme_to_graph(algorithm2(9, 2))))
    graphs.append(("G", scheme_to_graph(uncoded(9, 2))))
    return graphs


def _threads(args: argparse.Namespace) -> int:
    if getattr(args, "threads", None):
        return args.threads
    env = os.environ.get("GRAPHCODE_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError as exc:
            raise UsageError(f"GRAPHCODE_THREADS={env!r} is not an integer") from exc
    return os.cpu_count() or 1


def _parities(name: str) -> list[Parity]:
    if name == "both":
        return [Parity.EVEN, Parity.ODD]
    return [Parity(name)]


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def cmd_construct(args: argparse.Namespace) -> int:
    if args.algorithm == "alg1":
        if args.k is None or args.loops is None:
            raise UsageError("alg1 needs --k and --loops")
        scheme = algorithm1(args.n, args.r, args.k, args.loops)
        for note in algorithm1_warnings(args.n, args.r, args.k, args.loops):
            print(f"warning: {note}", file=sys.stderr)
    elif args.algorithm == "alg2":
        scheme = algorithm2(args.n, args.r)
        for note in algorithm2_warnings(args.n, args.r):
            print(f"warning: {note}", file=sys.stderr)
    else:
        scheme = uncoded(args.n, args.r)
    text = format_scheme(scheme)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def _format_probability(value: float, precision: int) -> str:
    return f"{value:.{precision}f}"


def cmd_analyze(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.graph))
    precision = args.precision
    results = {}
    for parity in _parities(args.parity):
        spectrum = deletion_spectrum(g, parity, cap=args.cap, threads=_threads(args))
        cut = min_dcut(g, parity)
        probabilities = {p: decoding_probability(spectrum, p) for p in args.p}
        results[parity.value] = (spectrum, cut, probabilities)

    if args.format == "json":
        payload = {
            "n": g.n,
            "m": g.m,
            "parities": {
                name: {
                    "spectrum": list(spectrum.c),
                    "b": cut.b,
                    "witness": list(cut.witness),
                    "probabilities": {
                        str(p): float(_format_probability(v, precision))
                        for p, v in probs.items()
                    },
                }
                for name, (spectrum, cut, probs) in results.items()
            },
        }
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        print("parity,quantity,index,value")
        for name, (spectrum, cut, probs) in results.items():
            for x, c in enumerate(spectrum.c):
                print(f"{name},c,{x},{c}")
            print(f"{name},b,,{cut.b}")
            print(f"{name},witness,,{' '.join(map(str, cut.witness))}")
            for p, v in probs.items():
                print(f"{name},P,{p},{_format_probability(v, precision)}")
    else:
        print(f"graph: n={g.n} m={g.m}")
        for name, (spectrum, cut, probs) in results.items():
            print(f"[{name}] spectrum: {' '.join(map(str, spectrum.c))}")
            witness = "{" + ", ".join(map(str, cut.witness)) + "}"
            print(f"[{name}] b = {cut.b}, witness = {witness}")
            for p, v in probs.items():
                print(f"[{name}] P(p={p}) = {_format_probability(v, precision)}")
    return 0


def cmd_bounds(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.graph))
    reports = []
    for parity in _parities(args.parity):
        spectrum = deletion_spectrum(g, parity, cap=args.cap, threads=_threads(args))
        report = b_upper_bounds(g, parity)
        rows = report.rows + u_lower_bounds(g, parity, spectrum)
        reports.append(BoundsReport(parity=parity, exact_b=report.exact_b, rows=rows))
    sys.stdout.write(report_csv(reports))
    return 0


def _suite_spectra(
    labels_and_graphs: list[tuple[str, MultiGraph]],
    parities: list[Parity],
    threads: int,
) -> dict[tuple[str, Parity], DeletionSpectrum]:
    return {
        (label, parity): deletion_spectrum(g, parity, threads=threads)
        for label, g in labels_and_graphs
        for parity in parities
    }


def cmd_reproduce(args: argparse.Namespace) -> int:
    if (args.table is None) == (args.figure is None):
        raise UsageError("choose exactly one of --table or --figure")
    suite = comparison_suite()
    threads = _threads(args)

    if args.table is not None:
        if args.table == "b":
            print("graph,even,odd")
            for label, g in suite:
                even = min_dcut(g, Parity.EVEN).b
                odd = min_dcut(g, Parity.ODD).b
                print(f"{label},{even},{odd}")
        else:
            p = TABLE_GRID[args.table]
            spectra = _suite_spectra(suite, [Parity.EVEN, Parity.ODD], threads)
            print("graph,even,odd")
            for label, _ in suite:
                even = decoding_probability(spectra[label, Parity.EVEN], p)
                odd = decoding_probability(spectra[label, Parity.ODD], p)
                print(f"{label},{even:.6f},{odd:.6f}")
        return 0

    parity = FIGURE_MODES[args.figure]
    chosen = [(label, g) for label, g in suite if label in FIGURE_GRAPHS]
    spectra = _suite_spectra(chosen, [parity], threads)
    grid = [round(i / 100, 2) for i in range(101)]
    header = ["p"] + FIGURE_GRAPHS
    rows = [header]
    for p in grid:
        row = [f"{p:.2f}"]
        for label in FIGURE_GRAPHS:
            row.append(f"{decoding_probability(spectra[label, parity], p):.6f}")
        rows.append(row)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / f"{args.figure}.csv"
    csv_path.write_text("\n".join(",".join(r) for r in rows) + "\n", encoding="utf-8")
    png_path = out_dir / f"{args.figure}.png"
    _render_curves(rows, parity, png_path)
    print(f"wrote {csv_path}")
    print(f"wrote {png_path}")
    return 0


def _render_curves(rows: list[list[str]], parity: Parity, path: Path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    header, data = rows[0], rows[1:]
    xs = [float(r[0]) for r in data]
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    for col, label in enumerate(header[1:], start=1):
        ax.plot(xs, [float(r[col]) for r in data], label=label)
    ax.set_xlabel("packet survival probability p")
    ax.set_ylabel("decoding probability")
    ax.set_title(f"{parity.value} characteristic")
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def cmd_simulate(args: argparse.Namespace) -> int:
    scheme = parse_scheme(_read(args.scheme))
    field = FieldSpec(args.field)
    parity = Parity.from_field(field)
    graph = scheme_to_graph(scheme)

    packets = rng.stream(args.seed).integers(0, field.p, size=(scheme.n, args.symbols))
    encoded = encode(scheme, packets, field)
    successes = 0
    for trial in range(args.trials):
        batch = erase(encoded, args.p, args.seed, stream_index=trial + 1)
        try:
            recovered = decode(batch, scheme, field)
        except DecodingError:
            continue
        if (recovered == packets % field.p).all():
            successes += 1
        else:
            raise InternalCheckError("decode reported success with wrong packets")

    estimate = successes / args.trials
    std_error = (estimate * (1 - estimate) / args.trials) ** 0.5
    exact = None
    agrees = None
    if graph.m <= args.cap:
        spectrum = deletion_spectrum(graph, parity, cap=args.cap, threads=_threads(args))
        exact = decoding_probability(spectrum, args.p)
        agrees = abs(estimate - exact) <= 4 * std_error or estimate == exact
    print(
        json.dumps(
            {
                "scheme": args.scheme,
                "field": field.p,
                "keep_probability": args.p,
                "trials": args.trials,
                "successes": successes,
                "estimate": estimate,
                "std_error": std_error,
                "exact": exact,
                "agrees_within_4se": agrees,
                "seed": args.seed,
            },
            indent=2,
        )
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="graphcode", description=__doc__)
    parser.add_argument("--version", action="version", version=f"graphcode {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="generate a coding scheme file")
    c.add_argument("algorithm", choices=["alg1", "alg2", "uncoded"])
    c.add_argument("--n", type=int, required=True, help="packet count")
    c.add_argument("--r", type=int, required=True, help="redundancy (copies per packet)")
    c.add_argument("--k", type=int, help="row count for alg1 (proper divisor of n)")
    c.add_argument("--loops", type=int, help="single-packet encodings for alg1")
    c.add_argument("--out", help="output scheme file (default stdout)")
    c.set_defaults(func=cmd_construct)

    a = sub.add_parser("analyze", help="spectrum, minimum cut, probabilities")
    a.add_argument("graph", help="graph file")
    a.add_argument("--parity", choices=["even", "odd", "both"], default="both")
    a.add_argument("--p", type=float, action="append", default=None,
                   help="survival probability (repeatable; default 0.6 0.7 0.8)")
    a.add_argument("--format", choices=["table", "csv", "json"], default="table")
    a.add_argument("--precision", type=int, default=6)
    a.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP)
    a.add_argument("--threads", type=int)
    a.set_defaults(func=cmd_analyze)

    b = sub.add_parser("bounds", help="verified bound report as CSV")
    b.add_argument("graph", help="graph file")
    b.add_argument("--parity", choices=["even", "odd", "both"], default="both")
    b.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP)
    b.add_argument("--threads", type=int)
    b.set_defaults(func=cmd_bounds)

    r = sub.add_parser("reproduce", help="regenerate the comparison suite")
    r.add_argument("--table", choices=sorted(TABLE_GRID))
    r.add_argument("--figure", choices=sorted(FIGURE_MODES))
    r.add_argument("--out", default=".", help="output directory for figure files")
    r.add_argument("--threads", type=int)
    r.set_defaults(func=cmd_reproduce)

    s = sub.add_parser("simulate", help="packet-level Monte Carlo for a scheme")
    s.add_argument("scheme", help="scheme file")
    s.add_argument("--field", type=int, required=True, help="prime field modulus")
    s.add_argument("--p", type=float, required=True, help="survival probability")
    s.add_argument("--trials", type=int, default=10000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--symbols", type=int, default=16, help="symbols per packet")
    s.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP)
    s.add_argument("--threads", type=int)
    s.set_defaults(func=cmd_simulate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "analyze":
            if args.p is None:
                args.p = [0.6, 0.7, 0.8]
            bad = [p for p in args.p if not 0.0 <= p <= 1.0]
            if bad:
                raise UsageError(f"probabilities outside [0, 1]: {bad}")
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (GraphError, ValueError) as exc:
        if isinstance(exc, SizeCapError):
            print(f"size cap: {exc}", file=sys.stderr)
            return 2
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (InvariantViolation, InternalCheckError, AssertionError) as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
