"""Command-line interface: ``maxdensity solve|verify|bench``.

Exit codes: 0 success, 1 verify mismatch, 2 bad input or usage, 3 no feasible
segment, 4 verify guard exceeded, 70 internal invariant failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from decimal import Decimal, localcontext

from . import bench as bench_mod
from .bounds import compute_bounds
from .core import InvalidWidth, NoFeasibleSegment, ProblemInstance, Solution
from .general import InternalInvariantError, OnlineSolver, solve
from .ingest import (DECIMAL_SCALE, InputFormat, ParseError, iter_fasta_gc,
                     iter_pairs, iter_rle, read_input, scale_bounds)
from .lmain import solve_ineffective
from .oracle import brute_force_solve
from .sparse import RunLengthSequence, solve_sparse

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_INFEASIBLE = 3
EXIT_GUARD = 4
EXIT_INTERNAL = 70

VERIFY_LIMIT = 10**8


@dataclass
class CliConfig:
    subcommand: str
    wmin: Decimal = None
    wmax: Decimal = None
    format: str = "pairs"
    algorithm: str = "auto"
    all: bool = False
    stream: bool = False
    json: bool = False
    input: str = "-"
    sizes: tuple = bench_mod.DEFAULT_SIZES
    seed: int = 0


class UsageError(ValueError):
    pass


def _positive_decimal(text):
    try:
        d = Decimal(text)
    except Exception:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not d.is_finite() or d <= 0:
        raise argparse.ArgumentTypeError(f"must be a positive number: {text!r}")
    return d


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maxdensity",
        description="Maximum-density segment with width bounds in linear time.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, wmin_required=True):
        p.add_argument("--wmin", type=_positive_decimal, required=wmin_required,
                       help="minimum segment width")
        p.add_argument("--wmax", type=_positive_decimal,
                       help="maximum segment width (default: no limit)")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    for name, helptext in (("solve", "find a maximum-density segment"),
                           ("verify", "check the fast solvers against brute force")):
        p = sub.add_parser(name, help=helptext)
        common(p)
        p.add_argument("--format", choices=[f.value for f in InputFormat], default="pairs")
        p.add_argument("input", nargs="?", default="-", help="input file or '-' for stdin")
        if name == "solve":
            p.add_argument("--algorithm", choices=["auto", "brute", "linear", "sparse"],
                           default="auto")
            p.add_argument("--all", action="store_true", help="print every candidate")
            p.add_argument("--stream", action="store_true",
                           help="read the input incrementally (online solver)")

    p = sub.add_parser("bench", help="time the linear solver on synthetic inputs")
    common(p, wmin_required=False)
    p.add_argument("--sizes", type=lambda s: tuple(int(x) for x in s.split(",")),
                   default=bench_mod.DEFAULT_SIZES, help="comma-separated sizes")
    p.add_argument("--seed", type=int, default=0)
    return parser


def parse_config(argv) -> CliConfig:
    ns = build_parser().parse_args(argv)
    cfg = CliConfig(subcommand=ns.subcommand)
    for key in ("wmin", "wmax", "format", "algorithm", "all", "stream", "json",
                "input", "sizes", "seed"):
        if hasattr(ns, key):
            setattr(cfg, key, getattr(ns, key))
    if cfg.wmin is not None and cfg.wmax is not None and cfg.wmin > cfg.wmax:
        raise UsageError("--wmin must not exceed --wmax")
    if cfg.algorithm == "sparse" and cfg.format != "rle":
        raise UsageError("--algorithm sparse requires --format rle")
    if cfg.stream and cfg.algorithm not in ("auto", "linear"):
        raise UsageError("--stream uses the online linear solver; "
                         "--algorithm must be auto or linear")
    return cfg


# ---------------------------------------------------------------- formatting

def _fmt_scaled(value, scale) -> str:
    if scale == 1:
        return str(value)
    with localcontext() as ctx:
        ctx.prec = 60
        q = (Decimal(value) / Decimal(scale)).normalize()
    return format(q, "f")


def _decimal9(num, den) -> str:
    with localcontext() as ctx:
        ctx.prec = 80
        return format((Decimal(num) / Decimal(den)).quantize(Decimal("1e-9")), "f")


def _fields(i, j, num, den, a_scale, w_scale) -> dict:
    width = _fmt_scaled(den, w_scale)
    return {
        "i": i,
        "j": j,
        "width": width,
        "num": _fmt_scaled(num, a_scale),
        "den": width,
        "decimal": _decimal9(num * w_scale, den * a_scale),
    }


def _line(f) -> str:
    return f"{f['i']}\t{f['j']}\t{f['width']}\t{f['num']}/{f['den']}\t{f['decimal']}"


# ------------------------------------------------------------------- solving

def _read_text(path, stdin):
    if path == "-":
        return stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _open_lines(path, stdin):
    if path == "-":
        return stdin
    return open(path, encoding="utf-8")


def _expand_instance(rls: RunLengthSequence, cfg) -> ProblemInstance:
    lo, hi = scale_bounds(cfg.wmin, cfg.wmax, 1)
    if hi is not None and hi < lo:
        raise NoFeasibleSegment(f"no width lies in [{cfg.wmin}, {cfg.wmax}]")
    return ProblemInstance(rls.expand(), None, lo, hi)


def _solve_batch(cfg, data, on_event):
    """Return ``(solution, a_scale, w_scale, algorithm_used)``."""
    if isinstance(data, RunLengthSequence):
        if cfg.algorithm in ("auto", "sparse"):
            lo, hi = scale_bounds(cfg.wmin, cfg.wmax, 1)
            return solve_sparse(data, lo, hi, on_event=on_event), data.a_scale, 1, "sparse"
        inst = _expand_instance(data, cfg)
        a_scale, w_scale = data.a_scale, 1
    else:
        if len(data) == 0:
            raise NoFeasibleSegment("empty input")
        inst = data.instance(cfg.wmin, cfg.wmax)
        a_scale, w_scale = data.a_scale, data.w_scale
    if cfg.algorithm == "brute":
        return brute_force_solve(inst), a_scale, w_scale, "brute"
    if cfg.algorithm == "auto" and inst.is_ineffective() and on_event is None:
        return solve_ineffective(inst), a_scale, w_scale, "lmain"
    return solve(inst, on_event=on_event), a_scale, w_scale, "general"


def _solve_stream(cfg, stdin, on_event):
    fmt = InputFormat(cfg.format)
    if fmt is InputFormat.FASTA:
        a_scale = w_scale = 1
    elif fmt is InputFormat.RLE:
        a_scale, w_scale = DECIMAL_SCALE, 1
    else:
        a_scale = w_scale = DECIMAL_SCALE
    lo, hi = scale_bounds(cfg.wmin, cfg.wmax, w_scale)
    if hi is not None and hi < lo:
        raise NoFeasibleSegment(f"no width lies in [{cfg.wmin}, {cfg.wmax}]")
    solver = OnlineSolver(lo, hi)
    lines = _open_lines(cfg.input, stdin)
    try:
        if fmt is InputFormat.FASTA:
            elements = iter_fasta_gc(lines)
        elif fmt is InputFormat.RLE:
            elements = iter_rle(lines, a_scale)
        else:
            elements = iter_pairs(lines, a_scale, w_scale)
        for a, w in elements:
            events = solver.push(a, w)
            if on_event is not None:
                for ev in events:
                    on_event(ev)
    finally:
        if lines is not stdin:
            lines.close()
    return solver.finalize(), a_scale, w_scale, "online"


def run_solve(cfg: CliConfig, stdout=None, stdin=None) -> int:
    stdout = stdout or sys.stdout
    stdin = stdin or sys.stdin
    candidates = []
    on_event = candidates.append if cfg.all else None
    if cfg.stream:
        sol, a_scale, w_scale, used = _solve_stream(cfg, stdin, on_event)
    else:
        data = read_input(_read_text(cfg.input, stdin), cfg.format)
        sol, a_scale, w_scale, used = _solve_batch(cfg, data, on_event)
    result = _fields(sol.i, sol.j, sol.density.num, sol.density.den, a_scale, w_scale)
    cand_fields = []
    for ev in candidates:
        f = _fields(ev.segment.i, ev.segment.j, ev.density.num, ev.density.den,
                    a_scale, w_scale)
        f["source"] = ev.source.value
        cand_fields.append(f)
    if cfg.json:
        out = dict(result, algorithm=used, counters=sol.counters.as_dict())
        if cfg.all:
            out["candidates"] = cand_fields
        stdout.write(json.dumps(out) + "\n")
    else:
        for f in cand_fields:
            stdout.write(f"candidate\t{f['source']}\t{_line(f)}\n")
        stdout.write(_line(result) + "\n")
    return EXIT_OK


# ------------------------------------------------------------------ verifying

def _feasible_count(inst: ProblemInstance) -> int:
    try:
        b = compute_bounds(inst.prefix, inst.w_min, inst.w_max)
    except NoFeasibleSegment:
        return 0
    return sum(max(0, b.r[j] - b.ell[j] + 1) for j in range(b.j0, inst.n + 1))


def run_verify(cfg: CliConfig, stdout=None, stdin=None, linear=None, sparse=None) -> int:
    """Compare brute force with the linear solver (and the sparse one for rle).

    ``linear`` and ``sparse`` replace the solvers under test (fault injection).
    """
    stdout = stdout or sys.stdout
    stdin = stdin or sys.stdin
    linear = linear or solve
    sparse = sparse or solve_sparse
    data = read_input(_read_text(cfg.input, stdin), cfg.format)
    rls = None
    if isinstance(data, RunLengthSequence):
        rls = data
        if rls.n > VERIFY_LIMIT:
            stdout.write(f"verify: input too large for brute force (n={rls.n})\n")
            return EXIT_GUARD
        inst = _expand_instance(rls, cfg)
    else:
        if len(data) == 0:
            raise NoFeasibleSegment("empty input")
        inst = data.instance(cfg.wmin, cfg.wmax)
    count = _feasible_count(inst)
    if count > VERIFY_LIMIT:
        stdout.write(f"verify: {count} feasible segments exceed the limit "
                     f"{VERIFY_LIMIT}\n")
        return EXIT_GUARD

    def attempt(fn, *args):
        try:
            return fn(*args)
        except NoFeasibleSegment:
            return None

    results = [("brute", attempt(brute_force_solve, inst)),
               ("linear", attempt(linear, inst))]
    if rls is not None:
        lo, hi = scale_bounds(cfg.wmin, cfg.wmax, 1)
        results.append(("sparse", attempt(sparse, rls, lo, hi)))
    ref_name, ref = results[0]
    for name, sol in results[1:]:
        same = (ref is None and sol is None) or (
            ref is not None and sol is not None and sol.density == ref.density)
        if not same:
            stdout.write(f"verify: MISMATCH {name} vs {ref_name}: "
                         f"{_describe(sol)} != {_describe(ref)}\n")
            return EXIT_MISMATCH
    summary = ", ".join(f"{name}={_describe(sol)}" for name, sol in results)
    stdout.write(f"verify: OK {summary}\n")
    return EXIT_OK


def _describe(sol: Solution) -> str:
    if sol is None:
        return "infeasible"
    return f"({sol.i},{sol.j}) {sol.density.num}/{sol.density.den}"


# ------------------------------------------------------------------ benchmark

def run_bench(cfg: CliConfig, stdout=None) -> int:
    stdout = stdout or sys.stdout
    w_min = int(cfg.wmin) if cfg.wmin is not None else 50
    w_max = int(cfg.wmax) if cfg.wmax is not None else max(200, w_min)
    rows = []
    for family in bench_mod.FAMILIES:
        prev = None
        for n in cfg.sizes:
            row = bench_mod.measure(family, n, w_min, w_max, cfg.seed)
            growth = None if prev is None else (row.work / prev.work) / (row.n / prev.n)
            rows.append((row, growth))
            prev = row
    if cfg.json:
        stdout.write(json.dumps([
            dict(family=r.family, n=r.n, seconds=r.seconds, counters=r.counters,
                 per_element=r.per_element, normalized_growth=g)
            for r, g in rows]) + "\n")
        return EXIT_OK
    stdout.write("family\tn\tseconds\twork\twork/n\tpushes\tpops\tvbest\tinit\n")
    for r, _ in rows:
        c = r.counters
        stdout.write(f"{r.family}\t{r.n}\t{r.seconds:.3f}\t{r.work}\t"
                     f"{r.per_element:.3f}\t{c['pushes']}\t{c['pops']}\t"
                     f"{c['vbest_steps']}\t{c['init_steps']}\n")
    return EXIT_OK


def main(argv=None, stdout=None, stdin=None, stderr=None) -> int:
    stderr = stderr or sys.stderr
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    except UsageError as exc:
        stderr.write(f"maxdensity: {exc}\n")
        return EXIT_INPUT
    try:
        if cfg.subcommand == "solve":
            return run_solve(cfg, stdout, stdin)
        if cfg.subcommand == "verify":
            return run_verify(cfg, stdout, stdin)
        return run_bench(cfg, stdout)
    except (ParseError, InvalidWidth, OSError, UnicodeDecodeError) as exc:
        stderr.write(f"maxdensity: {exc}\n")
        return EXIT_INPUT
    except NoFeasibleSegment as exc:
        stderr.write(f"maxdensity: no feasible segment: {exc}\n")
        return EXIT_INFEASIBLE
    except (InternalInvariantError, AssertionError) as exc:
        stderr.write(f"maxdensity: internal error: {exc}\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
