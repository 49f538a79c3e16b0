"""Command-line interface: ``xdiscord <command> ...``.

Exit codes: 0 success, 2 usage error, 3 unreadable or malformed state file,
4 matrix failing a density-matrix invariant, 5 state not of the expected class.
"""

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import discord as gd
from .linalg import InvalidStateError, n_qubits, permute_qubits
from .monogamy import monogamy_report
from .oracle import SphereGrid, oracle_discord_measurement, oracle_discord_sphere
from .statefile import StateFileError, dump_state, format_state, load_state
from .xstates import (
    ClassMismatchError,
    XClass,
    classify,
    commutator_residuals,
    family_state,
    random_state,
    random_x_state,
    require_class,
    support_report,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_INVALID = 4
EXIT_CLASS = 5

SWEEP_COLUMNS = ("discord_1_23", "d12", "d13", "residual", "k1", "k2", "k3")
FAMILY_PARAMS = {"ghz": ("p",), "w": ("p",), "bell": ("c1", "c2", "c3")}


# --- output -----------------------------------------------------------------


def _value(v):
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    if isinstance(v, np.ndarray):
        return ",".join(_value(x) for x in v.tolist())
    if v is None:
        return "none"
    return str(v)


def _jsonable(v):
    if isinstance(v, np.ndarray):
        return [float(x) for x in v.tolist()]
    if isinstance(v, (np.floating, np.bool_)):
        return v.item()
    if isinstance(v, XClass):
        return str(v)
    return v


def emit(record, as_json, out=None):
    """Print one flat record as ``key: value`` lines or a single JSON object."""
    out = out or sys.stdout
    if as_json:
        out.write(json.dumps({k: _jsonable(v) for k, v in record.items()}) + "\n")
        return
    width = max(len(k) for k in record)
    for k, v in record.items():
        out.write(f"{k.ljust(width)}  {_value(v)}\n")


# --- argument helpers -------------------------------------------------------


def parse_grid(text):
    try:
        n, m = (int(s) for s in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must look like 64x128, got {text!r}") from None
    return n, m


def parse_permutation(text):
    try:
        order = tuple(int(s) for s in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"permutation must look like 2,1,3, got {text!r}") from None
    if sorted(order) != [1, 2, 3]:
        raise argparse.ArgumentTypeError(f"permutation must be a rearrangement of 1,2,3, got {text!r}")
    return order


def parse_class(text):
    for c in XClass:
        if c.value.lower() == text.lower():
            return c
    names = ", ".join(c.value for c in XClass)
    raise argparse.ArgumentTypeError(f"unknown class {text!r}; choose from {names}")


def _grid(args):
    n, m = args.grid
    return SphereGrid(n_theta=n, n_phi=m, refine_tol=args.refine_tol)


def _load(args):
    rho = load_state(args.path)
    if getattr(args, "expect_class", None) is not None:
        require_class(rho, args.expect_class)
    return rho


def _family_params(args):
    return {name: getattr(args, name) for name in FAMILY_PARAMS[args.family]}


# --- commands ---------------------------------------------------------------


def cmd_validate(args):
    rho = _load(args)
    record = {"dim": rho.shape[0], "class": classify(rho)}
    for cls, res in commutator_residuals(rho).items():
        record[f"commutator_{cls.value.lower()}"] = res
    if rho.shape[0] == 8:
        record.update(support_report(rho))
    emit(record, args.json)
    return EXIT_OK


def _discord_result(rho):
    if n_qubits(rho) == 3:
        return gd.discord3(rho)
    return gd.discord2(rho)


def cmd_discord(args):
    rho = _load(args)
    if args.permute is not None:
        if rho.shape[0] != 8:
            raise InvalidStateError("shape", 0.0, "--permute needs a three-qubit state")
        rho = permute_qubits(rho, args.permute)
    res = _discord_result(rho)
    record = {
        "discord": res.value,
        "k1": res.k1,
        "k2": res.k2,
        "k3": res.k3,
        "branch": res.branch,
        "e_max": res.e_max,
        "method": res.method,
    }
    if args.method == "oracle":
        grid = _grid(args)
        sphere = oracle_discord_sphere(rho, grid)
        meas = oracle_discord_measurement(rho, grid)
        record["method"] = "oracle"
        record["analytic"] = res.value
        record["oracle_sphere"] = sphere
        record["oracle_measurement"] = meas
        record["max_disagreement"] = max(abs(sphere - res.value), abs(meas - res.value))
    emit(record, args.json)
    return EXIT_OK


def cmd_closest(args):
    rho = _load(args)
    if rho.shape[0] == 8:
        res = gd.discord3(rho)
        cs = gd.closest_classical3(rho, res)
    else:
        res = gd.discord2(rho)
        cs = gd.closest_classical2(rho, res)
    if args.out:
        dump_state(cs.chi, args.out, label="closest classical state")
    record = {
        "psd_ok": cs.psd_ok,
        "distance_sq": cs.distance_sq,
        "discord": res.value,
        "branch": cs.branch,
        "e": cs.e,
    }
    if args.out:
        record["out"] = args.out
    emit(record, args.json)
    return EXIT_OK


def cmd_monogamy(args):
    rho = _load(args)
    if rho.shape[0] != 8:
        raise InvalidStateError("shape", 0.0, "monogamy needs a three-qubit state")
    emit(monogamy_report(rho).as_dict(), args.json)
    return EXIT_OK


def cmd_family(args):
    params = _family_params(args)
    rho = family_state(args.family, **params)
    if args.emit == "state":
        label = args.family + " " + " ".join(f"{k}={v!r}" for k, v in params.items())
        text = format_state(rho, label=label)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return EXIT_OK
    res = gd.discord3(rho)
    record = {"family": args.family, **params, "discord": res.value, "k1": res.k1, "k2": res.k2, "k3": res.k3}
    emit(record, args.json)
    return EXIT_OK


def sweep_rows(family, param, start, stop, steps, columns, fixed=None):
    """Rows ``[param value, column values...]`` of a family sweep in parameter order."""
    if family not in FAMILY_PARAMS:
        raise ValueError(f"unknown family {family!r}")
    if param not in FAMILY_PARAMS[family]:
        raise ValueError(f"family {family} has no parameter {param!r}")
    if steps < 2:
        raise ValueError("steps must be at least 2")
    if start > stop:
        raise ValueError("sweep needs from <= to")
    bad = [c for c in columns if c not in SWEEP_COLUMNS]
    if bad:
        raise ValueError(f"unknown columns {bad}; choose from {', '.join(SWEEP_COLUMNS)}")
    params = dict(fixed or {})
    rows = []
    for v in np.linspace(start, stop, steps):
        params[param] = float(v)
        rho = family_state(family, **params)
        res = gd.discord3(rho)
        rep = monogamy_report(rho)
        values = {
            "discord_1_23": res.value,
            "d12": rep.d_12,
            "d13": rep.d_13,
            "residual": rep.residual,
            "k1": res.k1,
            "k2": res.k2,
            "k3": res.k3,
        }
        rows.append([float(v)] + [values[c] for c in columns])
    return rows


def format_csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format(float(x), ".12g") for x in row])
    return buf.getvalue()


def cmd_sweep(args):
    columns = args.columns.split(",") if args.columns else ["discord_1_23"]
    fixed = {k: v for k, v in _family_params(args).items() if k != args.param}
    try:
        rows = sweep_rows(args.family, args.param, args.start, args.stop, args.steps, columns, fixed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = format_csv([args.param] + columns, rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_random(args):
    rng = np.random.default_rng(args.seed)
    cls = args.xclass
    if cls in (XClass.CLASS1, XClass.CLASS2, XClass.TWO_QUBIT_X):
        rho = random_x_state(cls, rng, real=args.real)
    elif cls is XClass.NON_X:
        rho = random_state(8, rng)
    else:
        print("error: random states are generated for Class1, Class2, TwoQubitX or NonX", file=sys.stderr)
        return EXIT_USAGE
    text = format_state(rho, label=f"random {cls} seed={args.seed}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# --- parser -----------------------------------------------------------------


def _add_family_params(p):
    p.add_argument("--p", type=float, default=0.0, help="mixing weight (ghz, w)")
    p.add_argument("--c1", type=float, default=0.0)
    p.add_argument("--c2", type=float, default=0.0)
    p.add_argument("--c3", type=float, default=0.0)


def build_parser():
    parser = argparse.ArgumentParser(prog="xdiscord", description="Geometric discord of two- and three-qubit states.")
    sub = parser.add_subparsers(dest="command", required=True)

    def state_command(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("path", help="state file")
        p.add_argument("--json", action="store_true", help="print one JSON object")
        p.add_argument("--expect-class", type=parse_class, default=None, help="fail with code 5 unless the state is of this class")
        p.set_defaults(func=func)
        return p

    state_command("validate", cmd_validate, "classify a state and report residuals")
    p = state_command("discord", cmd_discord, "geometric discord of the 1|23 (or 1|2) split")
    p.add_argument("--method", choices=("analytic", "oracle"), default="analytic")
    p.add_argument("--grid", type=parse_grid, default=(64, 128), help="oracle grid NxM")
    p.add_argument("--refine-tol", type=float, default=1e-10)
    p.add_argument("--permute", type=parse_permutation, default=None, help="qubit relabelling a,b,c")
    p = state_command("closest", cmd_closest, "closest classical state")
    p.add_argument("--out", default=None, help="write the classical state here")
    state_command("monogamy", cmd_monogamy, "pairwise discords and monogamy residual")

    p = sub.add_parser("family", help="named state families")
    p.add_argument("family", choices=sorted(FAMILY_PARAMS))
    _add_family_params(p)
    p.add_argument("--emit", choices=("state", "discord"), default="discord")
    p.add_argument("--out", default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("sweep", help="CSV sweep of a family parameter")
    p.add_argument("family", choices=sorted(FAMILY_PARAMS))
    p.add_argument("--param", required=True)
    p.add_argument("--from", dest="start", type=float, required=True)
    p.add_argument("--to", dest="stop", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--columns", default=None, help="comma list from " + ",".join(SWEEP_COLUMNS))
    _add_family_params(p)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("random", help="seeded random state file")
    p.add_argument("--class", dest="xclass", type=parse_class, default=XClass.CLASS1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--real", action="store_true", help="real matrix entries")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_random)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (StateFileError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvalidStateError as exc:
        print(f"error: invalid state: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ClassMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CLASS
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
