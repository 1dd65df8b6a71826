"""Command-line interface: ``nrbounds suite | radius | sharpness``.

Exit codes: 0 all assertions hold, 1 violations found, 2 usage or config
error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import json
import sys

from .bounds import CHAINS, DEFAULT_TOL
from .ensembles import KINDS, Ensemble
from .errors import ConfigError
from .matrix_io import read_matrix
from .radius import DEFAULT_GRID, numerical_radius
from .suite import ALL_DIMS, SuiteConfig, run_suite, sharpness_experiment

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_CONFIG = 2
EXIT_IO = 3

DEFAULT_COUNT = 500


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_CONFIG)


def _csv_list(kind):
    def parse(text):
        try:
            return [kind(v) for v in text.split(",") if v.strip()]
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from exc
    return parse


def build_parser():
    p = _Parser(prog="nrbounds", description="Numerical radius inequality verifier.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("suite", help="run inequality chains over random ensembles")
    s.add_argument("--config", help="JSON file mirroring SuiteConfig; flags override it")
    s.add_argument("--ensemble", type=_csv_list(str), help=f"kinds, comma separated {KINDS}")
    s.add_argument("--dim", type=_csv_list(int), help="dimensions, comma separated")
    s.add_argument("--count", type=int, help=f"matrices per ensemble (default {DEFAULT_COUNT})")
    s.add_argument("--seed", type=int, help="base seed (default 0)")
    s.add_argument("--chains", type=_csv_list(str),
                   help=f"chain ids, comma separated {sorted(CHAINS)}")
    s.add_argument("--tol", type=float)
    s.add_argument("--nodes", type=int)
    s.add_argument("--r", type=_csv_list(float), dest="r_values")
    s.add_argument("--t", type=_csv_list(float), dest="t_values")
    s.add_argument("--p", type=_csv_list(float), dest="p_values")
    s.add_argument("--restarts", type=int, help="random restarts for supremum estimates")
    s.add_argument("--out", dest="output", help="report path (default: stdout)")
    s.add_argument("--format", choices=("json", "csv"))

    r = sub.add_parser("radius", help="numerical radius of a matrix JSON file")
    r.add_argument("path")
    r.add_argument("--grid", type=int, default=DEFAULT_GRID)

    h = sub.add_parser("sharpness", help="equality check on random normal matrices")
    h.add_argument("--count", type=int, default=100)
    h.add_argument("--dim", type=int, default=4)
    h.add_argument("--seed", type=int, default=0)
    h.add_argument("--tol", type=float, default=DEFAULT_TOL)
    h.add_argument("--out", dest="output")
    h.add_argument("--format", choices=("json", "csv"), default="json")
    return p


def _load_config(path):
    with open(path) as fh:
        text = fh.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(obj, dict):
        raise ConfigError(f"{path}: expected a JSON object")
    return SuiteConfig.from_dict(obj)


def config_from_args(args):
    """Merge ``--config`` (if any) with explicit flags; flags win."""
    cfg = _load_config(args.config) if args.config else SuiteConfig(ensembles=[])
    if not args.config or any(v is not None for v in
                              (args.ensemble, args.dim, args.count, args.seed)):
        old = cfg.ensembles
        kinds = args.ensemble or list(dict.fromkeys(e.kind for e in old)) or list(KINDS)
        dims = args.dim or list(dict.fromkeys(e.dim for e in old)) or list(ALL_DIMS)
        count = args.count if args.count is not None else (old[0].count if old else DEFAULT_COUNT)
        seed = args.seed if args.seed is not None else (old[0].seed if old else 0)
        cfg.ensembles = [Ensemble(k, n, count, seed) for k in kinds for n in dims]
    for name in ("chains", "tol", "nodes", "r_values", "t_values", "p_values",
                 "restarts", "output", "format"):
        value = getattr(args, name)
        if value is not None:
            setattr(cfg, name, value)
    return cfg.validate()


def _summary_line(report):
    s = report.summary
    return (f"matrices={s['matrices']} assertions={s['total_assertions']} "
            f"violations={s['violations']} max_violation={s['max_violation']:.3e} "
            f"runtime={report.runtime:.2f}s")


def _emit(report, output, fmt):
    if output:
        report.write(output, fmt)
    else:
        sys.stdout.write(report.to_json() + "\n" if fmt == "json" else report.to_csv())


def _cmd_suite(args):
    cfg = config_from_args(args)
    output, cfg.output = cfg.output, None
    report = run_suite(cfg, keep_reports=True)
    _emit(report, output, cfg.format)
    print(_summary_line(report), file=sys.stderr)
    return EXIT_VIOLATIONS if report.violations else EXIT_OK


def _cmd_radius(args):
    try:
        A = read_matrix(args.path)
    except ValueError as exc:  # includes JSONDecodeError
        raise OSError(f"{args.path}: {exc}") from exc
    res = numerical_radius(A, grid=args.grid)
    print(json.dumps({"w": res.value, "norm": res.norm, "argmax_theta": res.argmax_theta,
                      "refinement_residual": res.refinement_residual}))
    return EXIT_OK


def _cmd_sharpness(args):
    report = sharpness_experiment(args.count, args.dim, args.seed, args.tol)
    _emit(report, args.output, args.format)
    print(_summary_line(report), file=sys.stderr)
    return EXIT_VIOLATIONS if report.violations else EXIT_OK


def main(argv=None):
    args = build_parser().parse_args(argv)
    handler = {"suite": _cmd_suite, "radius": _cmd_radius, "sharpness": _cmd_sharpness}
    try:
        return handler[args.command](args)
    except OSError as exc:
        print(f"nrbounds: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ConfigError, ValueError) as exc:
        print(f"nrbounds: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
