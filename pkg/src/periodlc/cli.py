"""Command line front end.

    periodlc analyze --q 2 --input seq.txt [--verify] [--json]
    periodlc bench --q 2 --p 3 --n-range 1..3 --m-range 1..6 --trials 5 [--with-bm]

Exit codes: 0 success, 1 usage or precondition failure, 2 verification mismatch.
"""
from __future__ import annotations

import argparse
import csv
import json
import re
import statistics
import sys
import time
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from .errors import LinearComplexityError, UsageError
from .fastlc import PeriodicSequence, lc_general
from .numtheory import factor_period
from .oracle import LfsrSpec, berlekamp_massey, lfsr_regenerate, naive_minpoly

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2

BENCH_HEADER = ["q", "p", "n", "m", "N", "algo", "mean_seconds", "loop_count_max"]

_TOKEN_SPLIT = re.compile(r"[\s,]+")


class ParseError(UsageError):
    pass


def parse_sequence_file(path, q: int) -> PeriodicSequence:
    """Read whitespace- or comma-separated integers; N is the token count."""
    values = []
    text = Path(path).read_text(encoding="utf-8")
    for lineno, line in enumerate(text.splitlines(), 1):
        for tok in _TOKEN_SPLIT.split(line.strip()):
            if not tok:
                continue
            try:
                values.append(int(tok))
            except ValueError:
                raise ParseError(f"{path}:{lineno}: {tok!r} is not an integer") from None
    if not values:
        raise UsageError(f"{path}: no symbols found")
    return PeriodicSequence.from_values(values, q)


@dataclass
class AnalysisReport:
    q: int
    p: int | None
    n: int
    m: int
    N: int
    linear_complexity: int
    minimal_polynomial: dict
    loop_count: int
    oracle_checked: bool

    def to_dict(self) -> dict:
        return asdict(self)

    def to_text(self) -> str:
        rows = [
            ("period", f"N = {self.N} = {self.q}^{self.n}"
             + (f" * {self.p}^{self.m}" if self.m else "")),
            ("field", f"GF({self.q})"),
            ("linear complexity", str(self.linear_complexity)),
            ("minimal polynomial", self.minimal_polynomial["text"]),
            ("factors", _factor_text(self.minimal_polynomial["factors"])),
            ("loop count", str(self.loop_count)),
            ("oracle checked", "yes" if self.oracle_checked else "no"),
        ]
        width = max(len(k) for k, _ in rows)
        return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def _factor_text(factors: list[dict]) -> str:
    parts = [f"({d['label']})" + (f"^{d['exponent']}" if d["exponent"] > 1 else "")
             for d in factors]
    return " * ".join(parts) or "1"


def verify_result(seq: PeriodicSequence, result) -> list[str]:
    """Compare a fast result with both oracles and LFSR regeneration."""
    problems = []
    f = result.expanded
    if len(f.coeffs) - 1 != result.complexity:
        problems.append(f"degree {len(f.coeffs) - 1} != complexity {result.complexity}")
    naive = naive_minpoly(seq)
    if (naive.complexity, naive.expanded) != (result.complexity, f):
        problems.append(
            f"naive gcd oracle gives c={naive.complexity}, f={naive.expanded}"
        )
    values = seq.tolist()
    L, _ = berlekamp_massey(values + values, seq.shape.q)
    if L != result.complexity:
        problems.append(f"Berlekamp-Massey gives L={L}")
    if len(f.coeffs) - 1 == result.complexity:
        c = result.complexity
        regen = lfsr_regenerate(LfsrSpec(f, tuple(values[:c])), seq.N)
        if regen != values:
            problems.append("LFSR from the minimal polynomial does not regenerate the period")
    return problems


def analyze(seq: PeriodicSequence, verify: bool = False) -> tuple[AnalysisReport, list[str]]:
    result = lc_general(seq)
    problems = verify_result(seq, result) if verify else []
    f = result.expanded
    sh = seq.shape
    report = AnalysisReport(
        q=sh.q, p=sh.p, n=sh.n, m=sh.m, N=sh.N,
        linear_complexity=result.complexity,
        minimal_polynomial={
            "coefficients": f.to_list(),
            "text": f.to_text(),
            "factors": result.min_poly.describe(),
        },
        loop_count=result.trace.loop_count,
        oracle_checked=verify and not problems,
    )
    return report, problems


def parse_range(text: str) -> range:
    m = re.fullmatch(r"\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def bench(q: int, p: int, n_range: range, m_range: range, trials: int, *,
          with_bm: bool = False, seed: int = 0, max_n: int = 2_000_000,
          bm_max_n: int = 10_000, out=None) -> list[dict]:
    """Time lc_general (and optionally Berlekamp-Massey) over a shape grid.

    Writes CSV to ``out`` and returns the rows.  Shapes run in grid order so
    the output is deterministic for a given seed.
    """
    if trials < 1:
        raise UsageError("need at least one trial")
    shapes = []
    for n in n_range:
        for m in m_range:
            N = q ** n * p ** m
            if N > max_n:
                raise UsageError(f"shape n={n}, m={m} has N={N} above the cap {max_n}")
            shapes.append((n, m, factor_period(N, q)))
    rng = np.random.default_rng(seed)
    rows = []
    for n, m, shape in shapes:
        seqs = [PeriodicSequence.from_values(rng.integers(0, q, shape.N), q)
                for _ in range(trials)]
        times, loops = [], []
        for s in seqs:
            t0 = time.perf_counter()
            r = lc_general(s)
            times.append(time.perf_counter() - t0)
            loops.append(r.trace.loop_count)
        rows.append(dict(q=q, p=p, n=n, m=m, N=shape.N, algo="lc_general",
                         mean_seconds=statistics.fmean(times),
                         loop_count_max=max(loops), bound=shape.loop_bound()))
        if with_bm and shape.N <= bm_max_n:
            times = []
            for s in seqs:
                prefix = s.tolist() * 2
                t0 = time.perf_counter()
                berlekamp_massey(prefix, q)
                times.append(time.perf_counter() - t0)
            rows.append(dict(q=q, p=p, n=n, m=m, N=shape.N, algo="berlekamp_massey",
                             mean_seconds=statistics.fmean(times),
                             loop_count_max="", bound=""))
    if out is not None:
        out.write(f"# seed={seed} trials={trials}\n")
        w = csv.DictWriter(out, fieldnames=BENCH_HEADER, extrasaction="ignore",
                           lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow({**row, "mean_seconds": f"{row['mean_seconds']:.6e}"})
    return rows


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="periodlc",
        description="Linear complexity of periodic sequences over GF(q) with period q^n p^m.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="analyze one sequence file")
    a.add_argument("--q", type=int, required=True, help="field characteristic (prime)")
    a.add_argument("--input", required=True, help="text file with one period of integers")
    a.add_argument("--verify", action="store_true",
                   help="cross-check against the gcd oracle and Berlekamp-Massey")
    a.add_argument("--json", action="store_true", help="emit the report as JSON")

    b = sub.add_parser("bench", help="runtime scaling benchmark, CSV on stdout")
    b.add_argument("--q", type=int, required=True)
    b.add_argument("--p", type=int, required=True)
    b.add_argument("--n-range", type=parse_range, required=True, help="inclusive, e.g. 1..3")
    b.add_argument("--m-range", type=parse_range, required=True, help="inclusive, e.g. 1..6")
    b.add_argument("--trials", type=int, default=5)
    b.add_argument("--with-bm", action="store_true",
                   help="also time Berlekamp-Massey on a 2N prefix (N <= --bm-max-n)")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--max-n", type=int, default=2_000_000)
    b.add_argument("--bm-max-n", type=int, default=10_000)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "analyze":
            seq = parse_sequence_file(args.input, args.q)
            report, problems = analyze(seq, verify=args.verify)
            if args.json:
                print(json.dumps(report.to_dict(), indent=2))
            else:
                print(report.to_text())
            if problems:
                for msg in problems:
                    print(f"verification failed: {msg}", file=sys.stderr)
                return EXIT_MISMATCH
            return EXIT_OK
        rows = bench(args.q, args.p, args.n_range, args.m_range, args.trials,
                     with_bm=args.with_bm, seed=args.seed, max_n=args.max_n,
                     bm_max_n=args.bm_max_n, out=sys.stdout)
        over = [r for r in rows if r["bound"] != "" and r["loop_count_max"] > r["bound"]]
        for r in over:
            print(f"loop bound exceeded at n={r['n']}, m={r['m']}: "
                  f"{r['loop_count_max']} > {r['bound']}", file=sys.stderr)
        return EXIT_MISMATCH if over else EXIT_OK
    except (LinearComplexityError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
