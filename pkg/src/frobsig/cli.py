"""Command-line front end.

    frobsig csig --config job.json --output json --out report.json
    frobsig hk --preset veronese2 --e-max 3
    frobsig corpus list
    frobsig corpus run all

Exit codes: 0 success, 2 a checked property failed (chain, deformation,
corpus expectation), 1 any error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, replace
from fractions import Fraction
from pathlib import Path

from . import __version__
from .config import OUTPUTS, JobConfig
from .corpus import CORPUS, corpus_run, entry_config
from .errors import FrobsigError
from .invariants import (
    SearchConfig,
    chain_check,
    csig_estimate,
    deformation_check,
    fsig_hypersurface,
    hk_sequence,
    rsig_estimate,
    singularity_report,
)
from .report import decimal, rational, render

EXIT_OK, EXIT_ERROR, EXIT_FINDING = 0, 1, 2


@dataclass
class JobResult:
    report: object
    exit_code: int
    text: str


def _dispatch(cfg: JobConfig):
    R = cfg.ring()
    search = SearchConfig(cfg.max_subspaces, cfg.seed)
    e = cfg.e_max
    task = cfg.task
    if task == "hk":
        I = R.ideal(cfg.ideal) if cfg.ideal else R.maximal_ideal()
        return hk_sequence(R, I, e), True
    if task == "rsig":
        return rsig_estimate(R, cfg.sop, e, search), True
    if task == "csig":
        return csig_estimate(R, cfg.sop, e, search), True
    if task == "fsig":
        if len(R.relations) != 1:
            raise FrobsigError("fsig is only implemented for hypersurfaces (one relation)")
        return fsig_hypersurface(R.ring, R.relations[0], e), True
    if task == "chain":
        rep = chain_check(R, cfg.sop, e, search)
        return rep, rep.passed
    if task == "deform":
        rep = deformation_check(R, cfg.deform.parameter, cfg.sop, cfg.deform.quotient_sop,
                                e, search)
        return rep, rep.passed
    # full report
    hk = hk_sequence(R, R.maximal_ideal(), e)
    chain = chain_check(R, cfg.sop, e, search)
    out = [hk, chain]
    if cfg.multiplicity is not None:
        out.append(singularity_report(chain.csig.minimum, cfg.multiplicity, R.d))
    return out, chain.passed


def run_job(cfg: JobConfig, out: str | Path | None = None) -> JobResult:
    """Run one configured job; write the rendered report to ``out`` if given."""
    report, ok = _dispatch(cfg)
    text = render(report, cfg.output)
    if out is not None:
        Path(out).write_text(text)
    return JobResult(report, EXIT_OK if ok else EXIT_FINDING, text)


def _corpus_matrix(results) -> str:
    def show(v):
        if isinstance(v, Fraction):
            return rational(v) if v.denominator == 1 or abs(v) > 10 else \
                f"{rational(v)} ({decimal(v):.4g})"
        if isinstance(v, list):
            return "[" + ", ".join(rational(a) for a in v) + "]"
        return str(v)

    lines = [f"{'entry':<16} {'quantity':<16} {'mode':<8} {'expected':<12} "
             f"{'tol':<6} {'source':<12} {'result':<6} observed"]
    for r in results:
        lines.append(f"{r.entry:<16} {r.quantity:<16} {r.mode:<8} {show(r.expected):<12} "
                     f"{rational(r.tolerance) if r.tolerance else '0':<6} {r.source:<12} "
                     f"{'PASS' if r.passed else 'FAIL':<6} {show(r.observed)}")
    n_ok = sum(r.passed for r in results)
    lines.append(f"{n_ok}/{len(results)} expectations passed")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="frobsig", description=(
        "Hilbert-Kunz, F-rational signature and F-signature estimates over F_p."))
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for task in ("hk", "rsig", "csig", "fsig", "chain", "deform", "report"):
        p = sub.add_parser(task, help=f"run the {task} task")
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--config", help="JSON job configuration")
        src.add_argument("--preset", help="use a built-in corpus entry as the configuration")
        p.add_argument("--e-max", type=int)
        p.add_argument("--output", choices=OUTPUTS)
        p.add_argument("--out", help="write the report here instead of stdout")
        p.add_argument("--seed", type=int)
        p.add_argument("--max-subspaces", type=int)
    c = sub.add_parser("corpus", help="list or run the built-in corpus")
    c.add_argument("action", choices=("list", "run"))
    c.add_argument("name", nargs="?", default="all")
    c.add_argument("--e-max", type=int)
    c.add_argument("--out")
    return parser


def _config_from_args(args) -> JobConfig:
    cfg = JobConfig.load(args.config) if args.config else entry_config(args.preset)
    overrides = {"task": args.command}
    for attr, key in (("e_max", "e_max"), ("output", "output"), ("seed", "seed"),
                      ("max_subspaces", "max_subspaces")):
        v = getattr(args, attr)
        if v is not None:
            overrides[key] = v
    return replace(cfg, **overrides)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "corpus":
            if args.action == "list":
                text = "".join(f"{c.name:<16} {c.config.task:<6} {c.description}\n"
                               for c in CORPUS)
                code = EXIT_OK
            else:
                results = corpus_run(args.name, args.e_max)
                text = _corpus_matrix(results)
                code = EXIT_OK if all(r.passed for r in results) else EXIT_FINDING
            if args.out:
                Path(args.out).write_text(text)
            else:
                sys.stdout.write(text)
            return code
        cfg = _config_from_args(args)
        result = run_job(cfg, args.out)
        if not args.out:
            sys.stdout.write(result.text)
        return result.exit_code
    except (FrobsigError, ValueError, KeyError, OSError) as exc:
        print(f"frobsig: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
