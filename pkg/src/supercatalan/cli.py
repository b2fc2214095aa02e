"""Command line front end.

Three subcommands:

    compute  evaluate one quantity at one parameter point
    verify   sweep selected identities over a grid, human summary by default
    sweep    like verify but machine-readable output only, explicit bounds

Exit status is 0 for success, 1 when any identity check failed, 2 for
usage errors. All printed values are exact; rationals appear as p/q.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__, dsums, sums, supercat, verifier

__all__ = ["main"]


class _UsageError(Exception):
    pass


def _kind_super_catalan(p):
    return supercat.super_catalan(p["n"], p["l"])


def _kind_catalan(p):
    return supercat.catalan(p["n"])


def _kind_psi(p):
    return sums.psi(p["n"], p["m"], p["l"])


def _kind_psi_t(p):
    return sums.psi_t(p["n"], p["t"], p["l"])


def _kind_phi(p):
    return supercat.phi(p["n"], p["l"], p["t"])


def _kind_p(p):
    return sums.p_sum(p["n"], p["t"], p["l"])


def _kind_r(p):
    return sums.r_sum(p["n"], p["t"], p["l"])


def _kind_r_prime(p):
    return sums.r_prime_sum(p["n"], p["t"], p["l"])


def _kind_r_dprime(p):
    return sums.r_dprime_sum(p["n"], p["t"], p["l"])


def _kind_t_sum(p):
    return sums.t_sum(p["n"], p["t"], p["l"])


def _kind_d_sum(p):
    return dsums.d_sum_direct(dsums.psi_summand, p["n"], p["j"], p["t"], p["l"])


def _kind_q(p):
    return dsums.q_sum(p["n"], p["s"], p["l"])


# kind -> (required parameter flags, evaluator)
_KINDS = {
    "super-catalan": (("n", "l"), _kind_super_catalan),
    "catalan": (("n",), _kind_catalan),
    "psi": (("n", "m", "l"), _kind_psi),
    "psi-t": (("n", "t", "l"), _kind_psi_t),
    "phi": (("n", "l", "t"), _kind_phi),
    "p": (("n", "t", "l"), _kind_p),
    "r": (("n", "t", "l"), _kind_r),
    "r-prime": (("n", "t", "l"), _kind_r_prime),
    "r-dprime": (("n", "t", "l"), _kind_r_dprime),
    "t-sum": (("n", "t", "l"), _kind_t_sum),
    "d-sum": (("n", "j", "t", "l"), _kind_d_sum),
    "q": (("n", "s", "l"), _kind_q),
}

_COMPUTE_EPILOG = """\
parameters by kind (all take full, untransformed arguments unless noted):
  super-catalan --n --l      catalan --n
  psi --n --m --l            psi-t --n --t --l
  phi --n --l --t            (closed form of the length-2n window sum)
  p | r | r-prime | r-dprime | t-sum   --n --t --l
  d-sum --n --j --t --l      (level engine with the psi summand)
  q --n --s --l              (rational level-1 kernel)
"""


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supercatalan",
        description="exact super Catalan convolutions and identity sweeps")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    comp = sub.add_parser(
        "compute", help="evaluate one quantity at one point",
        epilog=_COMPUTE_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    comp.add_argument("kind", choices=sorted(_KINDS))
    for flag in ("n", "l", "t", "m", "j", "s"):
        comp.add_argument(f"--{flag}", type=int, default=None)
    comp.set_defaults(func=_cmd_compute)

    def add_sweep_args(p: argparse.ArgumentParser, formats: tuple[str, ...],
                       default_format: str) -> None:
        p.add_argument("--id", action="append", default=None, metavar="IDENTITY",
                       help="identity to check (repeatable)")
        p.add_argument("--all", action="store_true", help="check every identity")
        p.add_argument("--n-max", type=int, default=None)
        p.add_argument("--l-max", type=int, default=None)
        p.add_argument("--t-max", type=int, default=None)
        p.add_argument("--m-max", type=int, default=None)
        p.add_argument("--format", choices=formats, default=default_format)
        p.add_argument("--output", default=None, metavar="PATH")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--no-timestamp", action="store_true",
                       help="omit runtime and generation time from output")

    ver = sub.add_parser("verify", help="sweep identities over a grid")
    add_sweep_args(ver, ("json", "csv", "human"), "human")
    ver.add_argument("--default-grid", action="store_true",
                     help=f"use the default grid ({verifier.DEFAULT_GRID_NOTE})")
    ver.set_defaults(func=_cmd_verify)

    swp = sub.add_parser(
        "sweep", help="sweep with explicit bounds, machine-readable output")
    add_sweep_args(swp, ("json", "csv"), "json")
    swp.set_defaults(func=_cmd_sweep)

    return parser


def _cmd_compute(args: argparse.Namespace) -> int:
    required, evaluate = _KINDS[args.kind]
    provided = {flag: getattr(args, flag)
                for flag in ("n", "l", "t", "m", "j", "s")
                if getattr(args, flag) is not None}
    missing = [f"--{flag}" for flag in required if flag not in provided]
    if missing:
        raise _UsageError(f"compute {args.kind} requires {', '.join(missing)}")
    extra = [f"--{flag}" for flag in provided if flag not in required]
    if extra:
        raise _UsageError(f"compute {args.kind} does not take {', '.join(extra)}")
    try:
        value = evaluate(provided)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    print(value)
    return 0


def _selected_ids(args: argparse.Namespace) -> list[str]:
    if args.all and args.id:
        raise _UsageError("give either --all or --id, not both")
    if args.all:
        return list(verifier.registry_ids())
    if args.id:
        for name in args.id:
            if name not in verifier.REGISTRY:
                raise _UsageError(f"unknown identity {name!r}")
        return args.id
    raise _UsageError("select identities with --all or --id")


def _grid_from(args: argparse.Namespace) -> verifier.GridBounds:
    default = verifier.GridBounds()
    try:
        return verifier.GridBounds(
            n_max=args.n_max if args.n_max is not None else default.n_max,
            l_max=args.l_max if args.l_max is not None else default.l_max,
            t_max=args.t_max,
            m_max=args.m_max if args.m_max is not None else default.m_max,
        )
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc


def _explicit_bounds(args: argparse.Namespace) -> list[str]:
    return [f"--{name.replace('_', '-')}"
            for name in ("n_max", "l_max", "t_max", "m_max")
            if getattr(args, name) is not None]


def _run_sweep(args: argparse.Namespace) -> int:
    ids = _selected_ids(args)
    if args.jobs < 1:
        raise _UsageError("--jobs must be at least 1")
    report = verifier.sweep(ids, _grid_from(args), jobs=args.jobs)
    if args.format == "json":
        text = verifier.to_jsonl(report)
    elif args.format == "csv":
        text = verifier.to_csv(report)
    else:
        text = verifier.to_human(report, show_timestamp=not args.no_timestamp)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 1 if report.failed else 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.default_grid and _explicit_bounds(args):
        raise _UsageError("--default-grid excludes explicit bounds")
    return _run_sweep(args)


def _cmd_sweep(args: argparse.Namespace) -> int:
    if not _explicit_bounds(args):
        raise _UsageError("sweep requires at least one explicit grid bound")
    return _run_sweep(args)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
