"""Command-line front end.

Five subcommands:

``eval``
    Tabulate position, classical invariants (kappa, tau, epsilon), the
    scale-invariant pair, frame components and the two frame-equation
    residuals over a grid.
``classify``
    Run the span-condition classifier and the constant-invariant
    classifier and emit a structured report with diagnostics.
``bertrand``
    Build the normal-offset mate for a given constant offset and report
    the pair-verification verdict.
``zoo-list``
    List the built-in curve families with their parameter constraints.
``figure``
    Emit (s, x, y, z) samples of catalogue family N at its reference
    parameters — the standard plot datasets.

Outputs are deterministic: identical configurations produce byte-identical
files.  CSV uses a header row, comma separators, ``\\n`` line endings and
17 significant digits (lossless for doubles).  JSON reports carry a
top-level ``"schema": "pg-curvelab/1"`` key.  All errors are also written
to stderr as one-line JSON diagnostics; the exit status is 0 on success,
2 on a validation problem and 3 when a curve fails admissibility.

External curves come in as CSV files with columns ``s,x,y,z`` holding
positions on a uniform lattice; derivatives are always rebuilt by the
finite-difference constructor, never read from the file.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from typing import Sequence

from . import aw
from .algebra import PGVector
from .bertrand import bertrand_mate, bertrand_nature, verify_bertrand_pair
from .curves import CurveJet, JetKind, make_sampled_curve
from .equiform import equiform_data, equiform_residual, natural_class
from .errors import CurveLabError, InadmissibleCurveError
from .frenet import frenet_data, frenet_residual
from .zoo import ZooEntry, describe_constraints, get_example, zoo_names

SCHEMA = "pg-curvelab/1"

_FIGURES: dict[int, tuple[str, float, float]] = {
    1: ("timelike_general_helix", 1.0, 2.0),
    2: ("spacelike_general_helix", 1.0, 2.0),
    3: ("timelike_circular_helix", 1.0, 2.0),
    4: ("spacelike_circular_helix", 1.0, 2.0),
    5: ("timelike_log_spiral", 1.0, 1.0),
}
_FIGURE_SAMPLES = 256


class ConfigError(ValueError):
    """A run configuration that violates its own invariants."""


@dataclass
class RunConfig:
    """Validated description of one CLI invocation."""

    command: str
    curve: str | None = None
    a: float = 1.0
    b: float = 1.0
    input_path: str | None = None
    grid: tuple[float, float, int] | None = None
    offset: float | None = None
    figure_number: int | None = None
    tol_class: float | None = None
    tol_zero: float = 1e-9
    tol_const: float = 1e-6
    tol_light: float = 1e-10
    out_path: str | None = None
    fmt: str = "csv"

    def validate(self) -> None:
        if self.command not in ("eval", "classify", "bertrand", "zoo-list",
                                "figure"):
            raise ConfigError(f"unknown command {self.command!r}")
        if self.fmt not in ("csv", "json"):
            raise ConfigError(f"unknown format {self.fmt!r}")
        for name in ("tol_class", "tol_zero", "tol_const", "tol_light"):
            val = getattr(self, name)
            if val is not None and not val > 0.0:
                raise ConfigError(f"{name} must be positive, got {val}")
        if self.grid is not None:
            start, stop, count = self.grid
            if count < 1:
                raise ConfigError("grid count must be at least 1")
            if count == 1:
                if start != stop:
                    raise ConfigError(
                        "a single-point grid needs start == stop")
            elif not start < stop:
                raise ConfigError("grid start must be below stop")
        if self.command in ("eval", "classify", "bertrand"):
            if (self.curve is None) == (self.input_path is None):
                raise ConfigError(
                    "exactly one of --curve and --input is required")
            if self.grid is None:
                raise ConfigError("--grid is required for this command")
        if self.command == "bertrand" and self.offset is None:
            raise ConfigError("--lambda is required for the bertrand command")
        if self.command == "figure":
            if self.figure_number not in _FIGURES:
                raise ConfigError("figure number must be between 1 and 5")
            if self.fmt != "csv":
                raise ConfigError("the figure command only emits csv")


def _f17(v: float) -> str:
    return f"{v:.17g}"


def _grid_points(grid: tuple[float, float, int]) -> list[float]:
    start, stop, count = grid
    if count == 1:
        return [start]
    step = (stop - start) / (count - 1)
    return [start + i * step for i in range(count)]


# ---------------------------------------------------------------------------
# external position samples


def _read_lattice(path: str) -> tuple[list[float], list[PGVector]]:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or not {"s", "x", "y", "z"} <= set(
                reader.fieldnames):
            raise ConfigError(
                f"{path}: need CSV columns s,x,y,z (found "
                f"{reader.fieldnames})")
        rows = [(float(r["s"]), float(r["x"]), float(r["y"]), float(r["z"]))
                for r in reader]
    if len(rows) < 18:
        raise ConfigError(
            f"{path}: need at least 18 samples to rebuild derivatives, "
            f"got {len(rows)}")
    rows.sort(key=lambda r: r[0])
    svals = [r[0] for r in rows]
    return svals, [PGVector(r[1], r[2], r[3]) for r in rows]


def _lattice_curve(path: str) -> tuple[CurveJet, float, float]:
    """Build an FD curve from a CSV sample file.

    Returns (curve, lattice spacing, first sample).  The FD step is twice
    the spacing so every stencil evaluation lands back on the lattice.
    """
    svals, points = _read_lattice(path)
    s0, s_end = svals[0], svals[-1]
    n = len(svals)
    delta = (s_end - s0) / (n - 1)
    if not delta > 0.0:
        raise ConfigError(f"{path}: sample parameters must be distinct")
    for i, s in enumerate(svals):
        if abs(s - (s0 + i * delta)) > 1e-9 * max(1.0, abs(s)):
            raise ConfigError(
                f"{path}: samples must lie on a uniform lattice "
                f"(row {i} is off by more than 1e-9)")

    def position(s: float) -> PGVector:
        i = round((s - s0) / delta)
        if i < 0 or i >= n or abs(s - (s0 + i * delta)) > 1e-6 * delta:
            raise ValueError(f"off-lattice evaluation at s={s!r}")
        return points[i]

    domain = (s0 + 8 * delta, s_end - 8 * delta)
    curve = make_sampled_curve(position, domain, h=2 * delta)
    return curve, delta, s0


def _snap_grid(pts: Sequence[float], delta: float, s0: float,
               domain: tuple[float, float]) -> list[float]:
    lo, hi = domain
    out: list[float] = []
    for p in pts:
        snapped = s0 + round((p - s0) / delta) * delta
        snapped = min(max(snapped, lo), hi)
        snapped = s0 + round((snapped - s0) / delta) * delta
        if lo - 1e-12 <= snapped <= hi + 1e-12 and (
                not out or snapped > out[-1]):
            out.append(snapped)
    if not out:
        raise ConfigError("grid does not intersect the usable sample range")
    return out


# ---------------------------------------------------------------------------
# resolving the configured curve


@dataclass
class _Resolved:
    curve: CurveJet
    label: str
    params: dict[str, float]
    grid: list[float]
    notes: tuple[str, ...] = ()
    residual_h: float = 1e-4
    entry: ZooEntry | None = None


def _resolve(config: RunConfig) -> _Resolved:
    pts = _grid_points(config.grid) if config.grid else []
    if config.input_path is not None:
        curve, delta, s0 = _lattice_curve(config.input_path)
        grid = _snap_grid(pts, delta, s0, curve.domain)
        return _Resolved(curve=curve, label=f"sampled:{config.input_path}",
                         params={}, grid=grid, residual_h=2 * delta)
    assert config.curve is not None
    entry = get_example(config.curve, config.a, config.b)
    lo, hi = entry.curve.domain
    for p in pts:
        if not lo <= p <= hi:
            raise ConfigError(
                f"grid point {p:g} is outside the curve domain "
                f"[{lo:g}, {hi:g}]")
    return _Resolved(curve=entry.curve, label=entry.name, params=entry.params,
                     grid=pts, notes=entry.notes, entry=entry)


# ---------------------------------------------------------------------------
# output plumbing


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def _json_text(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _grid_doc(config: RunConfig, grid: list[float]) -> dict:
    if config.grid is not None:
        start, stop, count = config.grid
        return {"start": start, "stop": stop, "count": count,
                "points": len(grid)}
    return {"points": len(grid)}


def _emit_error(exc: BaseException) -> None:
    doc = {"schema": SCHEMA, "error": type(exc).__name__, "message": str(exc)}
    print(json.dumps(doc), file=sys.stderr)


# ---------------------------------------------------------------------------
# subcommands


_EVAL_HEADER = (
    "s", "x", "y", "z", "kappa", "tau", "epsilon",
    "eq_curvature", "eq_torsion",
    "e1_x", "e1_y", "e1_z", "e2_x", "e2_y", "e2_z", "e3_x", "e3_y", "e3_z",
    "frenet_residual", "equiform_residual",
)


def _eval_rows(res: _Resolved) -> list[list[float]]:
    lo, hi = res.curve.domain
    h = res.residual_h
    rows = []
    for s in res.grid:
        p = res.curve.jet(s, 0)
        fr = frenet_data(res.curve, s)
        eq = equiform_data(res.curve, s)
        if lo <= s - h and s + h <= hi:
            r1 = frenet_residual(res.curve, s, h=h)
            r2 = equiform_residual(res.curve, s, h=h)
        else:
            r1 = r2 = math.nan
        rows.append([
            s, p.x1, p.x2, p.x3, fr.kappa, fr.tau, float(fr.epsilon),
            eq.curvature, eq.torsion,
            *fr.tangent.as_tuple(), *fr.normal.as_tuple(),
            *fr.binormal.as_tuple(), r1, r2,
        ])
    return rows


def _cmd_eval(config: RunConfig) -> int:
    res = _resolve(config)
    rows = _eval_rows(res)
    if config.fmt == "csv":
        text = _csv_text(_EVAL_HEADER, [[_f17(v) for v in row]
                                        for row in rows])
    else:
        text = _json_text({
            "schema": SCHEMA,
            "curve": res.label,
            "params": res.params,
            "grid": _grid_doc(config, res.grid),
            "columns": list(_EVAL_HEADER),
            "rows": rows,
            "diagnostics": list(res.notes),
        })
    _write_text(config.out_path, text)
    return 0


def _cmd_classify(config: RunConfig) -> int:
    res = _resolve(config)
    report = aw.classify(res.curve, res.grid, tol=config.tol_class,
                         notes=res.notes)
    nat = natural_class(res.curve, res.grid, tol_const=config.tol_const,
                        tol_zero=config.tol_zero)
    diagnostics = list(report.diagnostics)
    if report.degenerate_points:
        diagnostics.append(
            f"{len(report.degenerate_points)} grid points had a degenerate "
            "second span direction; the weak span-2 check used scalars only")
    aw_doc = {name: {"holds": v.holds, "sup_residual": v.sup_residual}
              for name, v in report.verdicts.items()}
    if config.fmt == "json":
        text = _json_text({
            "schema": SCHEMA,
            "curve": res.label,
            "params": res.params,
            "grid": _grid_doc(config, res.grid),
            "natural_class": {
                "tag": nat.tag.value,
                "curvature_mean": nat.curvature_mean,
                "curvature_spread": nat.curvature_spread,
                "torsion_mean": nat.torsion_mean,
                "torsion_spread": nat.torsion_spread,
            },
            "aw": aw_doc,
            "diagnostics": diagnostics,
        })
    else:
        rows: list[list[object]] = [
            [name, str(v.holds).lower(), _f17(v.sup_residual)]
            for name, v in report.verdicts.items()]
        rows.append(["natural_class", nat.tag.value, ""])
        rows.extend(["diagnostic", d, ""] for d in diagnostics)
        text = _csv_text(("condition", "holds", "sup_residual"), rows)
    _write_text(config.out_path, text)
    return 0


def _cmd_bertrand(config: RunConfig) -> int:
    res = _resolve(config)
    assert config.offset is not None
    mate = bertrand_mate(res.curve, config.offset)
    grid = [s for s in res.grid
            if mate.domain[0] <= s <= mate.domain[1]]
    if len(grid) < 5:
        raise ConfigError(
            "need at least 5 grid points inside the mate domain")
    pair = verify_bertrand_pair(res.curve, mate, config.offset, grid,
                                tol=config.tol_class or 1e-8)
    nature = bertrand_nature(res.curve, grid)
    doc = {
        "schema": SCHEMA,
        "curve": res.label,
        "params": res.params,
        "grid": _grid_doc(config, grid),
        "offset": config.offset,
        "bertrand": {
            "is_pair": pair.is_pair,
            "nature": nature.value,
            "curvature_flatness_sup": pair.curvature_flatness_sup,
            "normal_parallel_sup": pair.normal_parallel_sup,
            "tangent_product_spread": pair.tangent_product_spread,
            "offset_spread": pair.offset_spread,
            "failures": list(pair.failures),
        },
        "diagnostics": list(res.notes) + list(mate.warnings),
    }
    if config.fmt == "json":
        text = _json_text(doc)
    else:
        items = doc["bertrand"]

        def cell(v: object) -> str:
            if isinstance(v, bool):
                return str(v).lower()
            if isinstance(v, float):
                return _f17(v)
            if isinstance(v, str):
                return v
            return "; ".join(v)

        rows = [[k, cell(v)] for k, v in items.items()]
        rows.insert(0, ["offset", _f17(config.offset)])
        text = _csv_text(("key", "value"), rows)
    _write_text(config.out_path, text)
    return 0


def _cmd_zoo_list(config: RunConfig) -> int:
    names = zoo_names()
    if config.fmt == "json":
        text = _json_text({
            "schema": SCHEMA,
            "curves": [
                {"name": n,
                 "constraints": describe_constraints(n)[0],
                 "default_domain": describe_constraints(n)[1]}
                for n in names],
        })
    else:
        rows = [[n, *describe_constraints(n)] for n in names]
        text = _csv_text(("name", "constraints", "default_domain"), rows)
    _write_text(config.out_path, text)
    return 0


def _cmd_figure(config: RunConfig) -> int:
    assert config.figure_number is not None
    name, a, b = _FIGURES[config.figure_number]
    entry = get_example(name, a, b)
    lo, hi = entry.domain
    step = (hi - lo) / (_FIGURE_SAMPLES - 1)
    rows = []
    for i in range(_FIGURE_SAMPLES):
        s = lo + i * step
        p = entry.curve.jet(s, 0)
        rows.append([_f17(s), _f17(p.x1), _f17(p.x2), _f17(p.x3)])
    _write_text(config.out_path, _csv_text(("s", "x", "y", "z"), rows))
    return 0


# ---------------------------------------------------------------------------
# argument parsing and entry point


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        _emit_error(ConfigError(message))
        raise SystemExit(2)


def _build_parser() -> _Parser:
    parser = _Parser(prog="pg-curvelab",
                     description="invariants, span-condition classification "
                                 "and normal-offset mates for curves with a "
                                 "degenerate-metric ambient space")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, with_grid: bool) -> None:
        if with_grid:
            p.add_argument("--curve", help="catalogue curve name")
            p.add_argument("--a", type=float, default=1.0,
                           help="first curve parameter (default 1)")
            p.add_argument("--b", type=float, default=1.0,
                           help="second curve parameter (default 1)")
            p.add_argument("--input", dest="input_path",
                           help="CSV file with s,x,y,z position samples on "
                                "a uniform lattice")
            p.add_argument("--grid", required=True,
                           help="evaluation grid start:stop:count")
            p.add_argument("--tol", dest="tol_class", type=float,
                           help="classification tolerance (default by tier)")
            p.add_argument("--tol-zero", dest="tol_zero", type=float,
                           default=1e-9,
                           help="threshold below which an invariant counts "
                                "as identically zero (default 1e-9)")
            p.add_argument("--tol-const", dest="tol_const", type=float,
                           default=1e-6,
                           help="relative spread below which an invariant "
                                "counts as constant (default 1e-6)")
        p.add_argument("--out", dest="out_path",
                       help="output path (default stdout)")
        p.add_argument("--format", dest="fmt", choices=("csv", "json"),
                       default="csv", help="output format (default csv)")

    for name in ("eval", "classify"):
        add_common(sub.add_parser(name), with_grid=True)
    pb = sub.add_parser("bertrand")
    pb.add_argument("--lambda", dest="offset", type=float, required=True,
                    help="constant normal-offset factor")
    add_common(pb, with_grid=True)
    add_common(sub.add_parser("zoo-list"), with_grid=False)
    pf = sub.add_parser("figure")
    pf.add_argument("figure_number", type=int, metavar="N",
                    help="figure number 1..5")
    add_common(pf, with_grid=False)
    return parser


def _parse_grid(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise ConfigError(f"grid must be start:stop:count, got {text!r}")
    try:
        return float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise ConfigError(f"bad grid {text!r}: {exc}") from None


def run(config: RunConfig) -> int:
    """Execute a validated configuration; returns the exit status."""
    handlers = {
        "eval": _cmd_eval,
        "classify": _cmd_classify,
        "bertrand": _cmd_bertrand,
        "zoo-list": _cmd_zoo_list,
        "figure": _cmd_figure,
    }
    try:
        config.validate()
        return handlers[config.command](config)
    except InadmissibleCurveError as exc:
        _emit_error(exc)
        return 3
    except (CurveLabError, ValueError, OSError) as exc:
        _emit_error(exc)
        return 2


def _merge_grid_value(argv: Sequence[str]) -> list[str]:
    """Join ``--grid`` with its value so grids starting at a negative
    parameter (``--grid -1:1:101``) survive option parsing."""
    out: list[str] = []
    tokens = iter(argv)
    for tok in tokens:
        if tok == "--grid":
            value = next(tokens, None)
            out.append(tok if value is None else f"--grid={value}")
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = _build_parser().parse_args(_merge_grid_value(argv))
    try:
        grid = (_parse_grid(args.grid)
                if getattr(args, "grid", None) is not None else None)
    except ConfigError as exc:
        _emit_error(exc)
        return 2
    config = RunConfig(
        command=args.command,
        curve=getattr(args, "curve", None),
        a=getattr(args, "a", 1.0),
        b=getattr(args, "b", 1.0),
        input_path=getattr(args, "input_path", None),
        grid=grid,
        offset=getattr(args, "offset", None),
        figure_number=getattr(args, "figure_number", None),
        tol_class=getattr(args, "tol_class", None),
        tol_zero=getattr(args, "tol_zero", 1e-9),
        tol_const=getattr(args, "tol_const", 1e-6),
        out_path=args.out_path,
        fmt=args.fmt,
    )
    return run(config)


if __name__ == "__main__":
    raise SystemExit(main())
