"""Command-line front end: verification suites, the complex diagnostic, the
randomized search, and the determinant benchmark.

Commands
    verify johnson        symbolic or numeric minor-identity certificates
    verify lemmas         reduced cases, skew-adjugate facts, rank-one expansion
    verify bt             rank-one symmetric-part equality (exact or float)
    verify specialization exact values at b1 = 1, bk = 0
    verify accretive      determinant/adjugate/minor-inequality suite
    repro remark45        the hard-coded complex counterexample
    search complex        seeded randomized violation search
    bench det             timing rows for the three determinant engines

All randomness flows from ``--seed`` (fixed default, never time-based)
through SplitMix64 substreams, and reports are emitted in a deterministic
order, so identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import identity as idmod
from . import numaccretive as accmod
from .detkit import COFACTOR_CAP, DET_ALGOS, det
from .matrix import Matrix, matrix_from_json, matrix_to_json
from .ring import scalar_text
from .rng import random_int_matrix, random_poly_matrix, substream

__all__ = ["DEFAULT_SEED", "RunConfig", "load_matrix", "main", "run", "save_report"]

DEFAULT_SEED = 123456789


@dataclass
class RunConfig:
    command: str
    subcommand: str
    n: int = 8
    dim: int = 6
    m: int = 7
    order: int = 5
    mode: str = "symbolic"
    scalar: str = "rat"
    algo: str = "bareiss"
    trials: int = 50
    iters: int = 10000
    seed: int = DEFAULT_SEED
    tol: float | None = None
    max_n: int = idmod.DEFAULT_SYMBOLIC_CAP
    init: str = "random"
    out: str | None = None
    fmt: str = "json"


def run(cfg: RunConfig):
    """Dispatches a validated config; returns (payload, all_verified)."""
    handler = _HANDLERS[(cfg.command, cfg.subcommand)]
    return handler(cfg)


def _with_seed(reports, seed):
    out = []
    for r in reports:
        out.append(
            idmod.CertificateReport(
                claim=r.claim,
                status=r.status,
                residual=r.residual,
                instance=r.instance,
                seed=seed if r.seed is None else r.seed,
                tolerance=r.tolerance,
            )
        )
    return out


def _verify_johnson(cfg: RunConfig):
    if cfg.mode == "symbolic":
        reports = [idmod.verify_johnson_symbolic(cfg.n, max_n=cfg.max_n)]
    else:
        reports = idmod.johnson_numeric_suite(
            cfg.n, cfg.trials, cfg.seed, tol=cfg.tol or 1e-9
        )
    reports = _with_seed(sorted(reports, key=lambda r: r.claim), cfg.seed)
    return reports, all(r.verified for r in reports)


def _verify_lemmas(cfg: RunConfig):
    reports = _with_seed(idmod.lemmas_suite(cfg.n, cfg.trials, cfg.seed), cfg.seed)
    return reports, all(r.verified for r in reports)


def _verify_bt(cfg: RunConfig):
    reports = idmod.bt_suite(
        cfg.dim, cfg.trials, cfg.seed, scalar=cfg.scalar, tol=cfg.tol or 1e-8
    )
    reports = _with_seed(sorted(reports, key=lambda r: r.claim), cfg.seed)
    return reports, all(r.verified for r in reports)


def _verify_specialization(cfg: RunConfig):
    reports = _with_seed([idmod.specialization_certificate(cfg.m)], cfg.seed)
    return reports, all(r.verified for r in reports)


def _verify_accretive(cfg: RunConfig):
    reports = accmod.accretive_suite(
        cfg.dim, cfg.trials, cfg.seed, tol=cfg.tol or 1e-8
    )
    reports = _with_seed(sorted(reports, key=lambda r: r.claim), cfg.seed)
    return reports, all(r.verified for r in reports)


def _repro_remark45(cfg: RunConfig):
    return [accmod.remark45_repro()], True


def _search_complex(cfg: RunConfig):
    witnesses = accmod.search_complex_violation(
        cfg.dim, cfg.iters, cfg.seed, init=cfg.init, tol=cfg.tol or 1e-6
    )
    return witnesses, True


def _bench_det(cfg: RunConfig):
    rows = []
    fn = DET_ALGOS[cfg.algo]
    for t in range(cfg.trials):
        stream = substream(cfg.seed, 4000 + t)
        if cfg.scalar == "poly":
            a = random_poly_matrix(stream, cfg.order)
        else:
            a = random_int_matrix(stream, cfg.order)
        t0 = time.perf_counter_ns()
        value = fn(a)
        nanos = time.perf_counter_ns() - t0
        digest = hashlib.sha256(scalar_text(value).encode()).hexdigest()[:16]
        rows.append(
            {
                "algo": cfg.algo,
                "order": cfg.order,
                "trial": t,
                "nanos": nanos,
                "det_hash": digest,
            }
        )
    return rows, True


_HANDLERS = {
    ("verify", "johnson"): _verify_johnson,
    ("verify", "lemmas"): _verify_lemmas,
    ("verify", "bt"): _verify_bt,
    ("verify", "specialization"): _verify_specialization,
    ("verify", "accretive"): _verify_accretive,
    ("repro", "remark45"): _repro_remark45,
    ("search", "complex"): _search_complex,
    ("bench", "det"): _bench_det,
}


# -- matrix / report file IO -------------------------------------------------

def load_matrix(path) -> Matrix:
    """Reads a matrix from the JSON wire format, raising ValueError with the
    offending field named on malformed input."""
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise ValueError(f"json: {e}") from None
    return matrix_from_json(doc)


def save_matrix(a: Matrix, path) -> None:
    Path(path).write_text(_dump_json(matrix_to_json(a)))


def save_report(reports, path) -> None:
    """Writes a list of reports/witnesses as a sorted, stable JSON array."""
    Path(path).write_text(_render(list(reports), "json"))


def _dump_json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _payload_dict(item):
    if hasattr(item, "to_json"):
        return item.to_json()
    return item


def _render(payload, fmt: str) -> str:
    dicts = [_payload_dict(x) for x in payload]
    if fmt == "json":
        return _dump_json(dicts)
    lines = []
    if dicts and "claim" in dicts[0]:
        header = f"{'claim':<36} {'status':<9} {'residual':<26} seed"
        lines = [header, "-" * len(header)]
        for d in dicts:
            residual = str(d["residual"])
            if len(residual) > 26:
                residual = residual[:23] + "..."
            lines.append(
                f"{d['claim']:<36} {d['status']:<9} {residual:<26} {d['seed']}"
            )
    elif dicts and "margin" in dicts[0]:
        header = f"{'label':<28} {'lhs':>14} {'rhs':>14} {'margin':>14}"
        lines = [header, "-" * len(header)]
        for d in dicts:
            lines.append(
                f"{d['label']:<28} {d['lhs']:>14.6g} {d['rhs']:>14.6g} {d['margin']:>14.6g}"
            )
    elif dicts:
        header = f"{'algo':<14} {'order':>5} {'trial':>5} {'nanos':>12}  det_hash"
        lines = [header, "-" * len(header)]
        for d in dicts:
            lines.append(
                f"{d['algo']:<14} {d['order']:>5} {d['trial']:>5} {d['nanos']:>12}  {d['det_hash']}"
            )
    else:
        lines = ["(empty)"]
    return "\n".join(lines) + "\n"


# -- argument parsing ---------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="master seed (fixed default, never time-based)")
    common.add_argument("--out", default=None, help="write output to this path")
    common.add_argument("--format", dest="fmt", choices=["json", "text-summary"],
                        default="json")

    parser = argparse.ArgumentParser(
        prog="minorcert",
        description="Exact and numeric certificates for contiguous-minor "
                    "determinant identities.",
    )
    top = parser.add_subparsers(dest="command", required=True)

    verify = top.add_parser("verify", help="run verification suites")
    vsub = verify.add_subparsers(dest="subcommand", required=True)

    p = vsub.add_parser("johnson", parents=[common],
                        help="minor identity for the A + A^T = 2J family")
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--mode", choices=["symbolic", "numeric"], default="symbolic")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-n", type=int, default=idmod.DEFAULT_SYMBOLIC_CAP,
                   help="cap for the symbolic certificate")
    p.add_argument("--tol", type=float, default=None)

    p = vsub.add_parser("lemmas", parents=[common],
                        help="reduced cases, skew facts, rank-one expansion")
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--trials", type=int, default=50)

    p = vsub.add_parser("bt", parents=[common],
                        help="rank-one symmetric-part equality")
    p.add_argument("--dim", type=int, default=5)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--scalar", choices=["rat", "real"], default="rat")
    p.add_argument("--tol", type=float, default=None)

    p = vsub.add_parser("specialization", parents=[common],
                        help="exact values at b1 = 1, bk = 0")
    p.add_argument("--m", type=int, default=7)

    p = vsub.add_parser("accretive", parents=[common],
                        help="accretive determinant/adjugate/inequality suite")
    p.add_argument("--dim", type=int, default=6)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--tol", type=float, default=None)

    repro = top.add_parser("repro", help="reproduce hard-coded diagnostics")
    rsub = repro.add_subparsers(dest="subcommand", required=True)
    rsub.add_parser("remark45", parents=[common],
                    help="the 4x4 complex transpose-minor violation")

    search = top.add_parser("search", help="randomized counterexample search")
    ssub = search.add_subparsers(dest="subcommand", required=True)
    p = ssub.add_parser("complex", parents=[common],
                        help="complex violations of the transpose-based inequality")
    p.add_argument("--dim", type=int, default=4)
    p.add_argument("--iters", type=int, default=10000)
    p.add_argument("--init", choices=["random", "remark45"], default="random")
    p.add_argument("--tol", type=float, default=None)

    bench = top.add_parser("bench", help="benchmark harness")
    bsub = bench.add_subparsers(dest="subcommand", required=True)
    p = bsub.add_parser("det", parents=[common], help="time determinant engines")
    p.add_argument("--algo", choices=sorted(DET_ALGOS), required=True)
    p.add_argument("--order", type=int, default=5)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--scalar", choices=["int", "poly"], default="int")

    return parser


def _validate(parser: argparse.ArgumentParser, args) -> RunConfig:
    cfg = RunConfig(command=args.command, subcommand=args.subcommand)
    for field in ("n", "dim", "m", "order", "mode", "scalar", "algo", "trials",
                  "iters", "seed", "tol", "max_n", "init", "out", "fmt"):
        if hasattr(args, field):
            setattr(cfg, field, getattr(args, field))
    key = (cfg.command, cfg.subcommand)
    if key == ("verify", "johnson"):
        if cfg.n < 2:
            parser.error("--n must be at least 2 (the identity needs order >= 2)")
        if cfg.mode == "symbolic" and cfg.n > cfg.max_n:
            parser.error(f"--n exceeds the symbolic cap {cfg.max_n}; raise --max-n")
    elif key == ("verify", "lemmas") and cfg.n < 3:
        parser.error("--n must be at least 3")
    elif key in (("verify", "bt"), ("verify", "accretive")) and cfg.dim < 2:
        parser.error("--dim must be at least 2")
    elif key == ("verify", "specialization") and cfg.m < 2:
        parser.error("--m must be at least 2")
    elif key == ("search", "complex"):
        if cfg.dim < 2:
            parser.error("--dim must be at least 2")
        if cfg.init == "remark45" and cfg.dim != 4:
            parser.error("--init remark45 requires --dim 4")
    elif key == ("bench", "det"):
        if cfg.order < 1:
            parser.error("--order must be at least 1")
        if cfg.algo == "cofactor" and cfg.order > COFACTOR_CAP:
            parser.error(f"--order is capped at {COFACTOR_CAP} for the cofactor oracle")
    if cfg.trials < 0 or cfg.iters < 0:
        parser.error("--trials/--iters must be non-negative")
    return cfg


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    cfg = _validate(parser, args)
    try:
        payload, ok = run(cfg)
    except accmod.ConvergenceError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    text = _render(payload, cfg.fmt)
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
