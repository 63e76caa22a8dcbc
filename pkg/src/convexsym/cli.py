"""Command-line driver: generate bodies, symmetrize, measure, verify, plot.

Exit codes: 0 success, 2 usage or validation failure, 3 I/O failure.
Reports omit wall-clock data by default so reruns with the same seed are
byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

import numpy as np

from .core import (
    ConfigurationError,
    InvalidInputError,
    RngStream,
    Subspace,
    orthonormalize,
)
from .bodies import (
    Ball,
    Polytope,
    SphericalCylinder,
    cube,
    load_body,
    save_body,
    segment,
)
from .measures import intrinsic_volume, mean_width
from .symmetrize import (
    Symmetrizer,
    apply,
    minkowski_op,
    natural_extension,
    pathological_op,
    steiner_op,
    steiner_support_defect,
    symmetrizer_from_dict,
)
from . import harness


@dataclass(frozen=True)
class RunConfig:
    """Knobs shared by the verification commands."""

    seed: int = 42
    samples: int = 100_000
    tol: float = 1e-7
    m_max: int = 64

    def __post_init__(self):
        if self.samples < 100:
            raise InvalidInputError("samples must be at least 100")
        if self.tol <= 0:
            raise InvalidInputError("tol must be positive")
        if self.m_max < 1:
            raise InvalidInputError("m_max must be at least 1")


def parse_subspace(text: str, dim: int) -> Subspace:
    """Axis shorthand ('e1,e2'), 'o' for the origin, or an inline basis matrix."""
    text = text.strip()
    if text in ("o", "{o}", ""):
        return orthonormalize([], ambient_dim=dim)
    if text.startswith("["):
        return orthonormalize(np.asarray(json.loads(text), dtype=float))
    axes = []
    for token in text.split(","):
        token = token.strip()
        if not token.startswith("e"):
            raise InvalidInputError(f"bad subspace token {token!r}")
        axes.append(int(token[1:]) - 1)
    basis = np.eye(dim)[axes]
    return orthonormalize(basis)


def _cmd_gen(args) -> int:
    if args.kind == "cube":
        if not 1 <= args.dim <= 8:
            raise InvalidInputError(f"cube dimension {args.dim} outside 1..8")
        body = cube(args.dim, side=args.side)
    elif args.kind == "random-hull":
        gen = RngStream(args.seed, 0).generator()
        body = Polytope(args.scale * gen.standard_normal((args.points, args.dim)))
    elif args.kind == "ball":
        body = Ball(np.zeros(args.dim), args.radius)
    elif args.kind == "segment":
        e = np.zeros(args.dim)
        e[0] = 0.5 * args.length
        body = segment(-e, e)
    elif args.kind == "cylinder":
        H = parse_subspace(args.subspace, args.dim)
        body = SphericalCylinder(H, args.r, args.s, np.zeros(args.dim))
    else:
        raise InvalidInputError(f"unknown generator kind {args.kind!r}")
    save_body(body, args.out)
    return 0


def _build_operator(args, dim: int) -> Symmetrizer:
    if args.op_file:
        with open(args.op_file, encoding="utf-8") as fh:
            return symmetrizer_from_dict(json.load(fh))
    if args.op is None:
        raise InvalidInputError("need --op or --op-file")
    if args.op == "pathological":
        return pathological_op()
    if args.op == "natural":
        inner_name = args.inner or "pathological"
        if inner_name == "pathological":
            inner = pathological_op()
        else:
            H = parse_subspace(args.subspace or "", dim)
            inner = steiner_op(H) if inner_name == "steiner" else minkowski_op(H)
        return Symmetrizer("natural", inner=inner, m_max=args.m_max, tol=args.tol)
    H = parse_subspace(args.subspace or "", dim)
    if args.op == "steiner":
        return steiner_op(H)
    if args.op == "minkowski":
        return minkowski_op(H)
    raise InvalidInputError(f"unknown operator {args.op!r}")


def _cmd_sym(args) -> int:
    body = load_body(args.infile)
    op = _build_operator(args, body.dim)
    if op.kind == "natural":
        res = natural_extension(op.inner, body, m_max=op.m_max, tol=op.tol)
        result = res.body
        print(f"m {res.m_final} residual {res.residual!r}")
    else:
        result = apply(op, body)
        if op.kind == "steiner" and body.dim >= 3:
            from .bodies import as_polytope
            defect = steiner_support_defect(as_polytope(body), result, op.H)
            print(f"residual {defect!r}")
        else:
            print("residual 0.0")
    save_body(result, args.out)
    return 0


def _cmd_measure(args) -> int:
    body = load_body(args.infile)
    rng = RngStream(args.seed, 0)
    if args.what == "vj":
        if args.j is None:
            raise InvalidInputError("--what vj needs --j")
        est = intrinsic_volume(body, args.j, samples=args.samples, rng=rng)
    elif args.what == "width":
        est = mean_width(body, samples=args.samples, rng=rng)
    else:
        raise InvalidInputError(f"unknown measure {args.what!r}")
    print(json.dumps(est.to_dict(), sort_keys=True))
    return 0


def _mc_error_series(cfg: RunConfig) -> dict:
    """std_error of the mean-width estimator along a sample-count ladder."""
    K = Polytope(RngStream(cfg.seed, 40).generator().standard_normal((10, 3)))
    ladder = [s for s in (1000, 3162, 10000, 31623, 100000) if s <= cfg.samples]
    errs = [mean_width(K, samples=s, rng=RngStream(cfg.seed, 41)).std_error
            for s in ladder]
    slope = float(np.polyfit(np.log(ladder), np.log(errs), 1)[0])
    return {"record": "series", "name": "mc_error", "samples": ladder,
            "std_errors": errs, "slope": slope,
            "verdict": "pass" if -0.65 <= slope <= -0.35 else "fail"}


def build_report(suite: str, cfg: RunConfig, trials: int = 200) -> list[dict]:
    records: list[dict] = [{
        "record": "config", "suite": suite, "seed": cfg.seed,
        "samples": cfg.samples, "tol": cfg.tol, "m_max": cfg.m_max,
        "trials": trials,
    }]
    if suite in ("core", "all"):
        for rep in harness.steiner_suite(cfg.seed, trials=trials):
            records.append({**rep.to_dict(), "expected": "pass"})
        for rep in harness.minkowski_suite(cfg.seed, trials=trials):
            records.append({**rep.to_dict(), "expected": "pass"})
        records.extend(harness.pathological_suite(cfg.seed))
    if suite in ("fixtures", "all"):
        for rec in harness.fixture_records(cfg.seed, samples=cfg.samples,
                                           m_max=cfg.m_max):
            rec.setdefault("expected", "pass")
            records.append(rec)
        records.append({**_mc_error_series(cfg), "expected": "pass"})
    return records


def report_outcome(records: list[dict]) -> bool:
    """True iff every expected-pass record passed and expected-fail failed."""
    ok = True
    for rec in records:
        verdict = rec.get("verdict")
        if verdict is None:
            continue
        ok = ok and verdict == rec.get("expected", "pass")
    return ok


def _cmd_verify(args) -> int:
    cfg = RunConfig(seed=args.seed, samples=args.samples, tol=args.tol,
                    m_max=args.m_max)
    start = time.perf_counter()
    records = build_report(args.suite, cfg, trials=args.trials)
    ok = report_outcome(records)
    if args.include_timing:
        records.append({"record": "timing",
                        "seconds": time.perf_counter() - start})
    with open(args.out, "w", encoding="utf-8") as fh:
        json.dump(records, fh, sort_keys=True, indent=1)
        fh.write("\n")
    for rec in records:
        if "verdict" in rec:
            name = rec.get("property") or rec.get("name")
            print(f"{rec['verdict']:4s} {name}")
    return 0 if ok else 1


def _cmd_plot(args) -> int:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    with open(args.report, encoding="utf-8") as fh:
        records = json.load(fh)
    plt.rcParams["svg.hashsalt"] = "convexsym"
    fig, ax = plt.subplots(figsize=(6, 4))
    if args.kind == "ne-convergence":
        series = [r for r in records
                  if r.get("name") == "natural_pathological" and r.get("residual_curve")]
        if not series:
            raise InvalidInputError("report has no natural-extension records")
        for rec in series:
            curve = rec["residual_curve"]
            ax.semilogy(range(2, len(curve) + 2), curve, label=f"n={rec['n']}")
        ax.set_xlabel("m")
        ax.set_ylabel("hausdorff(A_{m-1}, A_m)")
        ax.set_title("natural extension convergence")
    elif args.kind == "mc-error":
        series = [r for r in records if r.get("name") == "mc_error"]
        if not series:
            raise InvalidInputError("report has no mc-error series")
        rec = series[0]
        ax.loglog(rec["samples"], rec["std_errors"], marker="o",
                  label=f"slope {rec['slope']:.3f}")
        ax.set_xlabel("samples")
        ax.set_ylabel("std error")
        ax.set_title("monte carlo error scaling")
    else:
        raise InvalidInputError(f"unknown plot kind {args.kind!r}")
    ax.legend()
    fig.tight_layout()
    fig.savefig(args.out, format="svg", metadata={"Date": None})
    plt.close(fig)
    return 0


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="convexsym")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a body file")
    g.add_argument("--kind", required=True,
                   choices=["cube", "random-hull", "ball", "segment", "cylinder"])
    g.add_argument("--dim", type=int, required=True)
    g.add_argument("--side", type=float, default=1.0)
    g.add_argument("--points", type=int, default=8)
    g.add_argument("--scale", type=float, default=1.0)
    g.add_argument("--radius", type=float, default=1.0)
    g.add_argument("--length", type=float, default=1.0)
    g.add_argument("--r", type=float, default=1.0)
    g.add_argument("--s", type=float, default=1.0)
    g.add_argument("--subspace", default="e1")
    g.add_argument("--seed", type=int, default=42)
    g.add_argument("--out", required=True)
    g.set_defaults(func=_cmd_gen)

    s = sub.add_parser("sym", help="apply a symmetrization operator")
    s.add_argument("--op", choices=["steiner", "minkowski", "pathological", "natural"])
    s.add_argument("--op-file")
    s.add_argument("--subspace")
    s.add_argument("--inner", choices=["steiner", "minkowski", "pathological"])
    s.add_argument("--m-max", type=int, default=64)
    s.add_argument("--tol", type=float, default=1e-6)
    s.add_argument("--in", dest="infile", required=True)
    s.add_argument("--out", required=True)
    s.set_defaults(func=_cmd_sym)

    m = sub.add_parser("measure", help="compute a measure of a body")
    m.add_argument("--what", required=True, choices=["vj", "width"])
    m.add_argument("--j", type=int)
    m.add_argument("--in", dest="infile", required=True)
    m.add_argument("--seed", type=int, default=42)
    m.add_argument("--samples", type=int, default=100_000)
    m.set_defaults(func=_cmd_measure)

    v = sub.add_parser("verify", help="run the verification suites")
    v.add_argument("--suite", default="all", choices=["core", "fixtures", "all"])
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--samples", type=int, default=100_000)
    v.add_argument("--tol", type=float, default=1e-7)
    v.add_argument("--m-max", type=int, default=64)
    v.add_argument("--trials", type=int, default=200)
    v.add_argument("--include-timing", action="store_true")
    v.add_argument("--out", required=True)
    v.set_defaults(func=_cmd_verify)

    pl = sub.add_parser("plot", help="render a report series as SVG")
    pl.add_argument("--kind", required=True, choices=["ne-convergence", "mc-error"])
    pl.add_argument("--report", required=True)
    pl.add_argument("--out", required=True)
    pl.set_defaults(func=_cmd_plot)
    return p


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (InvalidInputError, ConfigurationError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
