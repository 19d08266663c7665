"""Command-line driver: ``thompson-growth {length,count,validate,analyze,emit}``.

Exit codes: 0 success, 1 cross-check disagreement, 2 bad input, 3 resource
limit, 4 series not submultiplicative, 5 I/O error.
"""
from __future__ import annotations

import argparse
import contextlib
import sys
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, TextIO

from . import algorithm_a, algorithm_b
from .forest_core import (
    ORACLE_BUDGET, ResourceLimitError, WordSyntaxError, bfs_sphere_counts,
    geodesic_length,
)
from .series import GrowthSeries, read_bfile, write_bfile
from .series_analysis import (
    DEFAULT_PRECISION, NotSubmultiplicativeError, PrecisionError, amplitude_fit,
    check_submultiplicative, fekete_bounds, fraction_decimal, lower_bound_rate, root_decimal,
)

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE, EXIT_RESOURCE, EXIT_NOT_SUBMULT, EXIT_IO = 0, 1, 2, 3, 4, 5

# bytes per stored element in the breadth-first oracle (key, diagram, witness)
ORACLE_BYTES_PER_ELEMENT = 600


@dataclass
class RunConfig:
    command: str
    max_n: int = 10
    method: str = "b"
    precision: int = DEFAULT_PRECISION
    format: str = "table"
    threads: int = 1
    memory_budget: Optional[int] = None
    geodesics: bool = False
    out: Optional[str] = None
    prune: bool = False

    def __post_init__(self):
        if self.max_n < 0:
            raise ValueError("--max-n must be >= 0")
        if self.method not in ("a", "b", "oracle"):
            raise ValueError(f"unknown method {self.method!r}")
        if self.format not in ("table", "csv", "bfile"):
            raise ValueError(f"unknown format {self.format!r}")
        if self.threads < 1:
            raise ValueError("--threads must be >= 1")
        if self.geodesics and self.method != "a":
            raise ValueError("geodesic counts are only produced by --method a")
        if self.method == "a" and self.max_n > algorithm_a.WARN_DEPTH:
            warnings.warn(f"method a with --max-n {self.max_n} grows exponentially; "
                          "expect a very long run", RuntimeWarning, stacklevel=2)


def _err(msg: str) -> None:
    print(f"thompson-growth: {msg}", file=sys.stderr)


def _oracle_budget(cfg: RunConfig) -> int:
    if cfg.memory_budget is None:
        return ORACLE_BUDGET
    return max(1, cfg.memory_budget // ORACLE_BYTES_PER_ELEMENT)


def _check_b_budget(cfg: RunConfig) -> None:
    if cfg.memory_budget is not None:
        need = algorithm_b.estimate_memory(cfg.max_n + 4)
        if need > cfg.memory_budget:
            raise ResourceLimitError(
                f"method b to n={cfg.max_n} needs about {need} bytes, budget is {cfg.memory_budget}")


def iter_series(cfg: RunConfig) -> Iterator[tuple[int, int, Optional[int]]]:
    """Yield ``(n, f(n), g(n) or None)``; method b streams as levels complete."""
    if cfg.method == "b":
        _check_b_budget(cfg)
        for n, f in algorithm_b.iter_growth(cfg.max_n, cfg.prune):
            yield n, f, None
    elif cfg.method == "a":
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", RuntimeWarning)  # already warned by RunConfig
            f, g = algorithm_a.sphere_and_geodesic_counts(cfg.max_n, cfg.threads)
        for n in range(cfg.max_n + 1):
            yield n, f[n], g[n] if cfg.geodesics else None
    else:
        s = bfs_sphere_counts(cfg.max_n, _oracle_budget(cfg))
        for n, f in enumerate(s.values):
            yield n, f, None


def _csv_cells(n: int, f: int, prev: Optional[int], precision: int) -> tuple[str, str]:
    if n == 0 or f == 0:
        return "", ""
    upper = str(root_decimal(f, n, precision))
    ratio = str(fraction_decimal(Fraction(f, prev), precision)) if prev else ""
    return upper, ratio


def write_count(cfg: RunConfig, out: TextIO) -> None:
    if cfg.format == "csv":
        out.write("n,f,fekete_upper,ratio" + (",g" if cfg.geodesics else "") + "\n")
    prev = None
    for n, f, g in iter_series(cfg):
        if cfg.format == "csv":
            upper, ratio = _csv_cells(n, f, prev, cfg.precision)
            row = f"{n},{f},{upper},{ratio}" + (f",{g}" if g is not None else "")
        elif cfg.format == "bfile":
            row = f"{n} {g if cfg.geodesics else f}"
        else:
            row = f"{n} {f}" + (f" {g}" if g is not None else "")
        out.write(row + "\n")
        out.flush()
        prev = f


@contextlib.contextmanager
def _output(path: Optional[str]):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            yield fh


def cmd_length(word: str) -> int:
    try:
        n = geodesic_length(word)
    except WordSyntaxError as e:
        _err(str(e))
        return EXIT_USAGE
    print(n)
    return EXIT_OK


def cmd_count(cfg: RunConfig) -> int:
    with _output(cfg.out) as out:
        write_count(cfg, out)
    return EXIT_OK


def emit_bfile(series, path: Optional[str]) -> int:
    """Write a series as b-file lines; ``path`` None means stdout."""
    values = list(getattr(series, "values", series))
    try:
        if path is None:
            sys.stdout.write("".join(f"{n} {v}\n" for n, v in enumerate(values)))
        else:
            write_bfile(values, path)
    except OSError as e:
        _err(f"cannot write {path}: {e.strerror or e}")
        return EXIT_IO
    return EXIT_OK


def cmd_emit(cfg: RunConfig) -> int:
    rows = list(iter_series(cfg))
    values = [g if cfg.geodesics else f for _, f, g in rows]
    return emit_bfile(values, cfg.out)


def cmd_validate(n_a: int, n_oracle: int, threads: int = 1, out: TextIO | None = None) -> int:
    """Run A, B and the oracle; print a per-n agreement matrix."""
    out = out or sys.stdout
    if n_a < 0 or n_oracle < 0:
        _err("ranges must be >= 0")
        return EXIT_USAGE
    with warnings.catch_warnings():
        warnings.simplefilter("default", RuntimeWarning)
        fa, _ = algorithm_a.sphere_and_geodesic_counts(n_a, threads)
    fb = algorithm_b.growth_series(max(n_a, n_oracle)).values
    fo = bfs_sphere_counts(n_oracle).values
    results = {"A": fa, "B": fb, "oracle": fo}

    def cell(vals, n):
        return str(vals[n]) if n < len(vals) else "-"

    out.write(f"{'n':>3} {'A':>12} {'B':>12} {'oracle':>12}  agree\n")
    first = None
    for n in range(max(n_a, n_oracle) + 1):
        present = [(m, v[n]) for m, v in results.items() if n < len(v)]
        ok = len({v for _, v in present}) == 1
        if not ok and first is None:
            first = (n, present)
        out.write(f"{n:>3} {cell(fa, n):>12} {cell(fb, n):>12} {cell(fo, n):>12}  "
                  f"{'yes' if ok else 'NO'}\n")
    out.flush()
    if first is not None:
        n, present = first
        ref = present[0]
        other = next((m, v) for m, v in present if v != ref[1])
        _err(f"first disagreement at n={n}: {ref[0]}={ref[1]} {other[0]}={other[1]}")
        return EXIT_DISAGREE
    return EXIT_OK


def _short(v: int) -> str:
    s = str(v)
    return s if len(s) <= 24 else f"{s[:4]}...{s[-4:]} ({len(s)} digits)"


def analysis_report(series: GrowthSeries, precision: int, fmt: str, out: TextIO) -> None:
    """Bounds table; raises NotSubmultiplicativeError on bad input."""
    v = series.values
    bad = check_submultiplicative(v)
    if bad:
        n, m = bad[0]
        raise NotSubmultiplicativeError(
            f"f({n + m}) = {v[n + m]} > f({n}) f({m}) = {v[n] * v[m]}")
    reports = fekete_bounds(v, precision, check=False)
    if fmt == "csv":
        out.write("n,f,fekete_upper,ratio\n")
        if v:
            out.write(f"0,{v[0]},,\n")
        for r in reports:
            out.write(f"{r.n},{v[r.n]},{r.upper},{r.ratio if r.ratio is not None else ''}\n")
        return
    out.write(f"{'n':>5}  {'f(n)':<30} {'f(n)^(1/n)':<{precision + 2}} "
              f"{'f(n)/f(n-1)':<{precision + 2}} doubling\n")
    if v:
        out.write(f"{0:>5}  {_short(v[0]):<30}\n")
    for r in reports:
        out.write(f"{r.n:>5}  {_short(v[r.n]):<30} {str(r.upper):<{precision + 2}} "
                  f"{str(r.ratio or '-'):<{precision + 2}} {r.doubling or '-'}\n")
    out.write(f"lower bound (3+sqrt5)/2 = {lower_bound_rate(precision)}\n")
    if reports:
        best = min(reports, key=lambda r: r.upper)
        out.write(f"best upper bound      = {best.upper} (n={best.n})\n")
    if len(v) >= 50:
        fit = amplitude_fit(v, lower_bound_rate(precision + 10), precision)
        out.write(f"amplitude estimate A  = {fit.amplitude} (from n={fit.n}, rate (3+sqrt5)/2)\n")


def cmd_analyze(cfg: RunConfig, bfile: Optional[str] = None) -> int:
    if bfile is not None:
        try:
            series = read_bfile(bfile, "geodesics" if cfg.geodesics else "elements")
        except OSError as e:
            _err(f"cannot read {bfile}: {e.strerror or e}")
            return EXIT_IO
        except ValueError as e:
            _err(f"{bfile}: {e}")
            return EXIT_USAGE
    else:
        rows = list(iter_series(cfg))
        kind = "geodesics" if cfg.geodesics else "elements"
        series = GrowthSeries([g if cfg.geodesics else f for _, f, g in rows], kind, "file")
    with _output(cfg.out) as out:
        analysis_report(series, cfg.precision, "csv" if cfg.format == "csv" else "table", out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--method", choices=("a", "b", "oracle"), default="b",
                        help="a: geodesic traversal, b: column transfer (default), oracle: BFS")
    common.add_argument("--max-n", type=int, default=10, help="largest n (default 10)")
    common.add_argument("--geodesics", action="store_true",
                        help="also report geodesic counts g(n) (method a only)")
    common.add_argument("--precision", type=int, default=DEFAULT_PRECISION,
                        help=f"significant digits for bounds (default {DEFAULT_PRECISION})")
    common.add_argument("--format", choices=("table", "csv", "bfile"), default="table",
                        help="output format (default table)")
    common.add_argument("--threads", type=int, default=1,
                        help="worker processes for method a (default 1)")
    common.add_argument("--memory-budget", type=int, default=None, metavar="BYTES",
                        help="refuse runs estimated to exceed this many bytes")
    common.add_argument("--out", default=None, help="write to this file instead of stdout")
    common.add_argument("--prune", action="store_true",
                        help="method b: drop states that cannot finish within --max-n")

    p = argparse.ArgumentParser(prog="thompson-growth",
                                description="Growth series of Thompson's group F.")
    sub = p.add_subparsers(dest="command", required=True)
    s = sub.add_parser("length", help="geodesic length of a word over a, A, b, B")
    s.add_argument("word", help="e.g. abAB, or x0 x1 x0^-1 x1^-1")
    sub.add_parser("count", parents=[common], help="print f(n) (and g(n)) for n <= --max-n")
    s = sub.add_parser("validate", help="cross-check A, B and the BFS oracle")
    s.add_argument("n_a", type=int, nargs="?", default=12, help="range for A and B (default 12)")
    s.add_argument("n_oracle", type=int, nargs="?", default=8, help="range for the oracle (default 8)")
    s.add_argument("--threads", type=int, default=1)
    s = sub.add_parser("analyze", parents=[common], help="Fekete bounds, ratios, amplitude")
    s.add_argument("bfile", nargs="?", default=None, help="read the series from a b-file")
    sub.add_parser("emit", parents=[common], help="write the series as a b-file")
    return p


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "length":
            return cmd_length(args.word)
        if args.command == "validate":
            return cmd_validate(args.n_a, args.n_oracle, args.threads)
        cfg = RunConfig(args.command, args.max_n, args.method, args.precision, args.format,
                        args.threads, args.memory_budget, args.geodesics, args.out, args.prune)
        if args.command == "count":
            return cmd_count(cfg)
        if args.command == "emit":
            return cmd_emit(cfg)
        return cmd_analyze(cfg, args.bfile)
    except NotSubmultiplicativeError as e:
        _err(f"not submultiplicative: {e}")
        return EXIT_NOT_SUBMULT
    except ResourceLimitError as e:
        _err(str(e))
        return EXIT_RESOURCE
    except MemoryError:
        _err("out of memory")
        return EXIT_RESOURCE
    except (ValueError, PrecisionError) as e:
        _err(str(e))
        return EXIT_USAGE
    except OSError as e:
        _err(f"I/O error: {e}")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
