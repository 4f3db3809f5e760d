"""Command line front end.

    sptk table spt --kmax 6 --nmax 29 --method comb --format csv
    sptk table stirling --nmax 6
    sptk table moments --kind crank --kmax 3 --nmax 20
    sptk table stats --kind crank --n 1
    sptk verify inequality --kmax 6 --nmax 29

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import congruences, moments, spt
from .partitions import stat_table
from .report import VerificationReport


@dataclass(frozen=True)
class OutputRecord:
    n: int
    k: int
    value: int


def _spt_rows(k_max: int, n_max: int, method: str, threads: int) -> list[dict]:
    if method == "comb":
        if threads > 1:
            with ProcessPoolExecutor(max_workers=threads) as pool:
                rows = list(pool.map(_comb_row, [(n, max(k_max, 6)) for n in range(1, n_max + 1)]))
        else:
            rows = [_comb_row((n, max(k_max, 6))) for n in range(1, n_max + 1)]
        values = {(n, k): rows[n - 1][k - 1] for n in range(1, n_max + 1) for k in range(1, k_max + 1)}
    elif method == "moments":
        cols = {k: spt.spt_from_moments(k, n_max) for k in range(1, k_max + 1)}
        values = {(n, k): cols[k][n] for n in range(1, n_max + 1) for k in range(1, k_max + 1)}
    else:
        cols = {k: spt.spt_series(k, n_max) for k in range(1, k_max + 1)}
        values = {(n, k): cols[k][n] for n in range(1, n_max + 1) for k in range(1, k_max + 1)}
    return [
        vars(OutputRecord(n, k, values[(n, k)]))
        for n in range(1, n_max + 1)
        for k in range(1, k_max + 1)
    ]


def _comb_row(args):
    n, k_max = args
    return spt._spt_row(n, k_max)


def _emit(records: list[dict], header: list[str], fmt: str, out) -> None:
    if fmt == "json":
        json.dump(records, out)
        out.write("\n")
        return
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    for r in records:
        w.writerow([r[h] for h in header])


def cmd_table(args, out) -> int:
    if args.kind == "spt":
        records = _spt_rows(args.kmax, args.nmax, args.method, args.threads)
        header = ["n", "k", "value"]
    elif args.kind == "stirling":
        tri = moments.stirling_star(args.nmax)
        records = [
            {"n": n, "k": k, "S": tri(n, k)} for n in range(1, args.nmax + 1) for k in range(1, n + 1)
        ]
        header = ["n", "k", "S"]
    elif args.kind == "moments":
        records = []
        vecs = {k: moments.moment_vector(args.stat, k, args.nmax) for k in range(1, args.kmax + 1)}
        for n in range(1, args.nmax + 1):
            for k in range(1, args.kmax + 1):
                records.append(vars(OutputRecord(n, k, vecs[k][n])))
        header = ["n", "k", "value"]
    else:
        table = stat_table(args.stat, args.n)
        records = [{"m": m, "count": c} for m, c in table.row(args.n)]
        header = ["m", "count"]
    _emit(records, header, args.format, out)
    return 0


def _run_verifier(args) -> VerificationReport:
    name = args.name
    nmax = args.nmax
    kmax = args.kmax
    prec = args.precision

    def ks(default_max):
        if args.k is not None:
            return [args.k]
        return list(range(1, (kmax or default_max) + 1))

    def combine(label, n_max, parts):
        report = VerificationReport(label, n_max)
        for p in parts:
            report.merge(p)
        return report

    if name == "three-route":
        n = nmax or 29
        return combine(name, n, [spt.three_route_check(k, n) for k in ks(6)])
    if name == "sptkid":
        p = prec or nmax or 100
        return combine(name, p, [spt.sptkid_check(k, p) for k in ks(4)])
    if name == "mukakid":
        p = prec or nmax or 30
        parts = [spt.mukid_check(k, p) for k in ks(4)]
        parts += [spt.symnid2_check(k, p) for k in ks(4)]
        parts.append(spt.a1_sigma_check(max(p, 60)))
        return combine(name, p, parts)
    if name == "mainthm":
        p = prec or 30
        return combine(
            name, p, [spt.mainthm_check(pair, k, p) for pair in (spt.CRANK_PAIR, spt.RANK_PAIR) for k in ks(3)]
        )
    if name == "bailey":
        n = nmax or 12
        p = prec or 40
        return combine(name, n, [spt.bailey_verify(pair, n, p) for pair in (spt.CRANK_PAIR, spt.RANK_PAIR)])
    if name == "symm-odd-zero":
        n = nmax or 40
        return moments.odd_symmetrized_zero_check(kmax or 11, n)
    if name == "moment-convert":
        n = nmax or 40
        return combine(
            name, n,
            [moments.moment_conversion_check(kmax or 5, n), moments.second_crank_moment_check(max(n, 100))],
        )
    if name == "inequality":
        n = nmax or 40
        return moments.verify_inequality(kmax or n, n)
    if name in ("spt2id", "spt3id", "spt4id"):
        n = nmax or 60
        parts = [congruences.spt_identity_check(int(name[3]), n)]
        if name == "spt2id":
            parts.append(congruences.moment_relation_checks(n))
        return combine(name, n, parts)
    if name == "s3-closed":
        return congruences.s3_closed_form_check(nmax or 100)
    if name in congruences.SPECS:
        return congruences.check_congruence(congruences.SPECS[name], nmax or 500)
    if name == "lewis":
        n = nmax or 60
        return combine(name, n, [congruences.lewis_check(n), congruences.skbt_checks(prec or 60, min(n, 30))])
    if name == "taumod729":
        return congruences.tau_congruence_check(nmax or 300)
    if name == "n2mod7":
        return congruences.n2mod7_check(nmax or 100)
    raise AssertionError(name)


VERIFY_NAMES = (
    "three-route", "sptkid", "mukakid", "mainthm", "bailey", "symm-odd-zero",
    "moment-convert", "inequality", "spt2id", "spt3id", "spt4id", "s3-closed",
    "spt2mod5", "spt2mod7", "spt2mod11", "spt3mod7", "spt3mod2", "spt4mod3",
    "lewis", "taumod729", "n2mod7",
)


def cmd_verify(args, out) -> int:
    report = _run_verifier(args)
    out.write(report.summary() + "\n")
    json.dump(report.to_dict(), out, indent=2)
    out.write("\n")
    return 0 if report.passed else 1


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sptk", description="Higher order spt-functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="emit a table as CSV or JSON")
    kinds = table.add_subparsers(dest="kind", required=True)

    def common(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = kinds.add_parser("spt", help="spt_k(n)")
    p.add_argument("--kmax", type=_positive, default=6)
    p.add_argument("--nmax", type=_positive, default=29)
    p.add_argument("--method", choices=("comb", "moments", "series"), default="series")
    p.add_argument("--threads", type=_positive, default=1)
    common(p)

    p = kinds.add_parser("stirling", help="the S*(n, k) triangle")
    p.add_argument("--nmax", type=_positive, default=6)
    common(p)

    p = kinds.add_parser("moments", help="moments of order 2k")
    p.add_argument("--kind", dest="stat", choices=("crank", "rank", "mu", "eta"), default="crank")
    p.add_argument("--kmax", type=_positive, default=3)
    p.add_argument("--nmax", type=_positive, default=20)
    common(p)

    p = kinds.add_parser("stats", help="one row of the rank or crank table")
    p.add_argument("--kind", dest="stat", choices=("crank", "rank"), default="crank")
    p.add_argument("--n", type=_positive, required=True)
    common(p)

    verify = sub.add_parser("verify", help="run a named verifier")
    verify.add_argument("name", choices=VERIFY_NAMES)
    verify.add_argument("--nmax", type=_positive)
    verify.add_argument("--k", type=_positive)
    verify.add_argument("--kmax", type=_positive)
    verify.add_argument("--precision", type=_positive)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    if args.command == "table":
        return cmd_table(args, out)
    return cmd_verify(args, out)


if __name__ == "__main__":
    sys.exit(main())
