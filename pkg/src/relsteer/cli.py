"""
Command-line interface.

Exit codes: 0 success, 1 usage error, 2 domain/validation/output error,
3 internal contract failure (cross-check or monogamy violation).
"""

from __future__ import annotations

import argparse
import ast
import json
import math
import operator
import sys

from relsteer import kernels
from relsteer.errors import ContractFailure, RelSteerError
from relsteer.figures import FIGURES, figure_grid
from relsteer.sweep import (
    QUANTITIES,
    PointResult,
    SweepConfig,
    emit,
    find_asymmetry_onset,
    find_sudden_death_alpha,
    max_asymmetry,
    monogamy_max,
    MONOGAMY_TOL,
    run_grid,
)
from relsteer.unruh import ALPHA_MAX, BETA_MAX, Partition, UnruhScenario, beta_from_acceleration, crosscheck

ASYM_BOUND_LN = 0.2 * math.log(2.0)

EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_CONTRACT = 3

_OPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.USub: operator.neg,
    ast.UAdd: operator.pos,
}


def parse_number(text: str) -> float:
    """Parse a float, also accepting arithmetic with ``pi`` such as ``pi/4``."""

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return float(node.value)
        if isinstance(node, ast.Name) and node.id == "pi":
            return math.pi
        if isinstance(node, ast.BinOp) and type(node.op) in _OPS:
            return _OPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and type(node.op) in _OPS:
            return _OPS[type(node.op)](ev(node.operand))
        raise ValueError(text)

    try:
        return ev(ast.parse(text.strip(), mode="eval"))
    except (SyntaxError, ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def parse_range(text: str):
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"range must be lo:hi:n, got {text!r}")
    try:
        count = int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"range count must be an integer, got {parts[2]!r}") from None
    return (parse_number(parts[0]), parse_number(parts[1]), count)


def parse_partitions(text: str):
    names = [t.strip() for t in text.split(",") if t.strip()]
    try:
        return tuple(Partition(n.upper()) for n in names)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"partitions must be a comma list of {', '.join(p.value for p in Partition)}"
        ) from None


def parse_quantities(text: str):
    names = tuple(t.strip() for t in text.split(",") if t.strip())
    bad = [n for n in names if n not in QUANTITIES]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown quantities {bad}; choose from {', '.join(QUANTITIES)}")
    return names


def parse_bool(text: str) -> bool:
    low = text.strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"not a boolean: {text!r}")


# dest -> (converter for config-file values, default)
OPTIONS = {
    "alpha": (parse_number, None),
    "beta": (parse_number, None),
    "accel": (parse_number, None),
    "omega": (parse_number, 1.0),
    "alpha_range": (parse_range, None),
    "beta_range": (parse_range, None),
    "partitions": (parse_partitions, tuple(Partition)),
    "quantities": (parse_quantities, QUANTITIES),
    "out": (str, None),
    "format": (str, "csv"),
    "degrees": (parse_bool, False),
    "tol": (parse_number, None),
    "eps": (parse_number, 1e-6),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add(sub, *names):
    for name in names:
        flag = "--" + name.replace("_", "-")
        if name == "degrees":
            sub.add_argument(flag, action="store_const", const=True, default=None,
                             help="interpret angles in degrees")
        elif name == "format":
            sub.add_argument(flag, choices=("csv", "json"), default=None)
        else:
            sub.add_argument(flag, type=OPTIONS[name][0], default=None)
    sub.add_argument("--config", default=None, help="key = value file; flags override it")


def _add_acceleration(sub):
    group = sub.add_mutually_exclusive_group()
    group.add_argument("--beta", type=parse_number, default=None, help="acceleration parameter in [0, pi/4]")
    group.add_argument("--accel", type=parse_number, default=None, help="raw acceleration, converted with --omega")
    sub.add_argument("--omega", type=parse_number, default=None, help="mode frequency (default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="relsteer", description=__doc__.strip().splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s 0.1.0 ({kernels.BACKEND} kernel)")
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = subs.add_parser("point", help="correlation report for the three reduced states")
    p.add_argument("--alpha", type=parse_number, default=None)
    _add_acceleration(p)
    _add(p, "partitions", "quantities", "out", "format", "degrees")

    p = subs.add_parser("sweep", help="rectangular (alpha, beta) grid")
    _add(p, "alpha_range", "beta_range", "partitions", "quantities", "out", "format", "degrees")

    p = subs.add_parser("figure", help="data behind one figure preset")
    p.add_argument("name", choices=FIGURES)
    _add(p, "alpha_range", "beta_range", "out", "format", "degrees")

    p = subs.add_parser("threshold", help="alpha below which Alice->Bob steering is not witnessed")
    _add_acceleration(p)
    _add(p, "tol", "out", "format", "degrees")

    p = subs.add_parser("onset", help="beta at which the Alice/Bob asymmetry exceeds a detectability level")
    p.add_argument("--alpha", type=parse_number, default=None)
    _add(p, "eps", "tol", "out", "format", "degrees")

    p = subs.add_parser("max-asym", help="maximum steering asymmetry between Alice and Bob")
    _add(p, "alpha_range", "beta_range", "tol", "out", "format", "degrees")

    p = subs.add_parser("monogamy", help="largest simultaneous steering of anti-Bob by Alice and Bob")
    _add(p, "alpha_range", "beta_range", "out", "format", "degrees")

    p = subs.add_parser("beta-of-a", help="acceleration parameter for a raw acceleration")
    p.add_argument("--accel", type=parse_number, default=None)
    p.add_argument("--omega", type=parse_number, default=None)
    _add(p, "out", "format", "degrees")
    return parser


def read_config(path: str) -> dict:
    values = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise argparse.ArgumentTypeError(f"cannot read config {path}: {exc}") from None
    for lineno, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip().lstrip("-").replace("-", "_")
        if not sep or key not in OPTIONS:
            raise argparse.ArgumentTypeError(f"{path}:{lineno}: unrecognized entry {line!r}")
        values[key] = OPTIONS[key][0](value.strip())
    return values


def _resolve(args, parser) -> argparse.Namespace:
    """Merge flags over config-file values over defaults."""
    from_file = {}
    if getattr(args, "config", None):
        try:
            from_file = read_config(args.config)
        except argparse.ArgumentTypeError as exc:
            parser.error(str(exc))
    for dest, (_, default) in OPTIONS.items():
        if not hasattr(args, dest):
            continue
        if getattr(args, dest) is None:
            setattr(args, dest, from_file.get(dest, default))
    if getattr(args, "beta", None) is not None and getattr(args, "accel", None) is not None:
        parser.error("--beta and --accel are mutually exclusive")
    if args.format not in ("csv", "json"):
        parser.error(f"format must be csv or json, got {args.format!r}")
    return args


def _angle(value, args):
    return math.radians(value) if args.degrees else value


def _range(rng, args, default):
    if rng is None:
        return default
    lo, hi, n = rng
    return (_angle(lo, args), _angle(hi, args), n)


def _sweep_config(args) -> SweepConfig:
    return SweepConfig(
        alpha_range=_range(args.alpha_range, args, (0.0, ALPHA_MAX, 201)),
        beta_range=_range(args.beta_range, args, (0.0, BETA_MAX, 101)),
        partitions=getattr(args, "partitions", tuple(Partition)),
        quantities=getattr(args, "quantities", QUANTITIES),
        out=args.out,
        format=args.format,
    )


def _beta(args, parser):
    if args.accel is not None:
        return beta_from_acceleration(args.accel, args.omega)
    if args.beta is None:
        parser.error("one of --beta or --accel is required")
    return _angle(args.beta, args)


def _write_text(text: str, out):
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", newline="", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        from relsteer.errors import IoError

        raise IoError(f"cannot write {out}: {exc}") from exc


def _write_record(record: dict, args):
    if args.format == "json":
        text = json.dumps(record, indent=1) + "\n"
    else:
        keys = list(record)
        vals = [f"{v:.9f}" if isinstance(v, float) else str(v) for v in record.values()]
        text = ",".join(keys) + "\n" + ",".join(vals) + "\n"
    _write_text(text, args.out)


def _emit(result, args):
    emit(result, sys.stdout if args.out is None else args.out, args.format)


def run(args, parser) -> int:
    cmd = args.command
    if cmd == "point":
        if args.alpha is None:
            parser.error("--alpha is required")
        sc = UnruhScenario(_angle(args.alpha, args), _beta(args, parser))
        crosscheck(sc)
        _emit(PointResult.compute(sc, args.partitions, args.quantities), args)
    elif cmd == "sweep":
        _emit(run_grid(_sweep_config(args)), args)
    elif cmd == "figure":
        cfg = _sweep_config(args)
        _emit(figure_grid(args.name, cfg), args)
    elif cmd == "threshold":
        beta = _beta(args, parser)
        tol = 1e-9 if args.tol is None else args.tol
        _emit(find_sudden_death_alpha(beta, tol), args)
    elif cmd == "onset":
        if args.alpha is None:
            parser.error("--alpha is required")
        tol = 1e-9 if args.tol is None else args.tol
        _emit(find_asymmetry_onset(_angle(args.alpha, args), args.eps, tol), args)
    elif cmd == "max-asym":
        tol = 1e-6 if args.tol is None else args.tol
        ext = max_asymmetry(_sweep_config(args), tol)
        _write_record(
            {
                "alpha": ext.alpha,
                "beta": ext.beta,
                "value": ext.value,
                "bound_0.2ln2": ASYM_BOUND_LN,
                "within_0.2ln2": ext.value <= ASYM_BOUND_LN,
                "within_0.2": ext.value <= 0.2,
            },
            args,
        )
        if ext.value > ASYM_BOUND_LN:
            print(
                f"note: maximum {ext.value:.6f} exceeds 0.2*ln2 = {ASYM_BOUND_LN:.6f}; "
                f"it is consistent only with the 0.2 (log2) reading of the bound",
                file=sys.stderr,
            )
    elif cmd == "monogamy":
        ext = monogamy_max(_sweep_config(args))
        _write_record({"alpha": ext.alpha, "beta": ext.beta, "value": ext.value}, args)
        if ext.value > MONOGAMY_TOL:
            print(
                f"monogamy violation: both Alice and Bob steer anti-Bob by {ext.value:.6e} "
                f"at alpha={ext.alpha:.6f}, beta={ext.beta:.6f}",
                file=sys.stderr,
            )
            return EXIT_CONTRACT
    elif cmd == "beta-of-a":
        if args.accel is None:
            parser.error("--accel is required")
        beta = beta_from_acceleration(args.accel, args.omega)
        _write_record(
            {"accel": float(args.accel), "omega": float(args.omega), "beta": math.degrees(beta) if args.degrees else beta},
            args,
        )
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args = _resolve(args, parser)
    try:
        return run(args, parser)
    except ContractFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONTRACT
    except (RelSteerError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
