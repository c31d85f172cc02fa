"""Command line interface.

Subcommands: spectrum, sample, verify, moments, plot, reweight.  Every
subcommand accepts --seed, --threads, --out and --config; flags take
precedence over config-file values, which take precedence over built-in
defaults.  Config files hold one key=value pair per line (# comments and
blank lines allowed).

Exit codes: 0 on success (standing discrepancies do not fail a run),
1 when a verification check fails, 2 on configuration or IO errors,
which includes malformed inputs, bad flag values, and finite-difference
step-size failures.

Output bytes are a pure function of the parsed options: CSV files use
CRLF line endings and repr float formatting, the verification report is
sorted JSON, and sampling splits its substreams deterministically, so
--threads never changes the result.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys

import numpy as np

from .spectral import (
    SpectralTable,
    TABLE_COLUMNS,
    WeightSpec,
    _cached_distribution,
    _pdf_batch,
    mc_mean,
    mc_sample,
    mean_quadrature,
    second_moment_tail_model,
    truncated_second_moment,
    weighted_mean,
    weighted_truncated_second_moment,
    MEAN_CLAIMED,
)
from .verify import (
    FAIL,
    VerifyConfig,
    count_status,
    has_step_size_failure,
    run_all,
    to_json,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CONFIG = 2

MOMENT_CUTS = (1e2, 1e3, 1e4)


class CliError(Exception):
    """Configuration or IO problem; maps to exit code 2."""


def _bool(s: str) -> bool:
    v = s.strip().lower()
    if v in ("1", "true", "yes", "on"):
        return True
    if v in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {s!r}")


DEFAULTS: dict[str, dict] = {
    "spectrum": {"grid": "1e-3:100:400", "log": True, "linear": False},
    "sample": {"n": 100000, "weight": "uniform", "streams": 16},
    "verify": {"json": None, "tol": 1e-5, "fd_step": 1e-5},
    "moments": {"weight": "uniform", "json": None, "n": 200000},
    "plot": {"table": None, "grid": "1e-3:100:400", "log": True, "linear": False},
    "reweight": {"weight": "exp", "grid": "1e-3:100:400", "log": True, "linear": False},
}
COMMON_DEFAULTS = {"seed": 1729, "threads": 1, "out": None, "config": None}

_TYPES = {
    "seed": int,
    "threads": int,
    "out": str,
    "config": str,
    "grid": str,
    "log": _bool,
    "linear": _bool,
    "n": int,
    "weight": str,
    "streams": int,
    "json": str,
    "tol": float,
    "fd_step": float,
    "table": str,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bidisk",
        description="spectral eigenvalue distribution of the bidisk moment map",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    S = argparse.SUPPRESS

    def common(sp):
        sp.add_argument("--seed", type=int, default=S, help="RNG seed")
        sp.add_argument("--threads", type=int, default=S, help="worker threads")
        sp.add_argument("--out", default=S, help="output path (default stdout)")
        sp.add_argument("--config", default=S, help="key=value config file")

    sp = sub.add_parser("spectrum", help="tabulate the distribution and candidates")
    common(sp)
    sp.add_argument("--grid", default=S, help="min:max:points")
    sp.add_argument("--log", action="store_true", default=S, help="log-spaced grid")
    sp.add_argument("--linear", action="store_true", default=S, help="linear grid")

    sp = sub.add_parser("sample", help="Monte Carlo rotation numbers")
    common(sp)
    sp.add_argument("--n", type=int, default=S, help="sample size")
    sp.add_argument("--weight", default=S, help="uniform | exp | gauss | table:PATH")
    sp.add_argument("--streams", type=int, default=S, help="substream count")

    sp = sub.add_parser("verify", help="run the verification report")
    common(sp)
    sp.add_argument("--json", default=S, help="write the JSON report here")
    sp.add_argument("--tol", type=float, default=S, help="FD certification tolerance")
    sp.add_argument("--fd-step", dest="fd_step", type=float, default=S)

    sp = sub.add_parser("moments", help="mean and truncated second moments")
    common(sp)
    sp.add_argument("--weight", default=S, help="uniform | exp | gauss | table:PATH")
    sp.add_argument("--json", default=S, help="write machine-readable output here")
    sp.add_argument("--n", type=int, default=S, help="MC cross-check sample size")

    sp = sub.add_parser("plot", help="render the density curve as SVG")
    common(sp)
    sp.add_argument("--table", default=S, help="spectrum CSV to plot (else recompute)")
    sp.add_argument("--grid", default=S, help="min:max:points when recomputing")
    sp.add_argument("--log", action="store_true", default=S)
    sp.add_argument("--linear", action="store_true", default=S)

    sp = sub.add_parser("reweight", help="tabulate a reweighted density")
    common(sp)
    sp.add_argument("--weight", default=S, help="uniform | exp | gauss | table:PATH")
    sp.add_argument("--grid", default=S, help="min:max:points")
    sp.add_argument("--log", action="store_true", default=S)
    sp.add_argument("--linear", action="store_true", default=S)

    return parser


def load_config(path: str) -> dict[str, str]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise CliError(f"cannot read config {path}: {exc}") from exc
    vals: dict[str, str] = {}
    for i, raw in enumerate(lines, 1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        if "=" not in s:
            raise CliError(f"{path}: line {i}: expected key=value, got {s!r}")
        key, _, val = s.partition("=")
        vals[key.strip()] = val.strip()
    return vals


def resolve_options(ns: argparse.Namespace) -> dict:
    """Merge defaults, config file and flags (flags win)."""
    cmd = ns.command
    given = {k: v for k, v in vars(ns).items() if k != "command"}
    opts = {**COMMON_DEFAULTS, **DEFAULTS[cmd]}
    config_path = given.get("config") or opts.get("config")
    if config_path:
        raw = load_config(config_path)
        for key, sval in raw.items():
            if key not in opts:
                raise CliError(f"{config_path}: unknown key {key!r} for {cmd!r}")
            try:
                opts[key] = _TYPES[key](sval)
            except ValueError as exc:
                raise CliError(f"{config_path}: bad value for {key!r}: {exc}") from exc
    opts.update(given)
    if opts["threads"] < 1:
        raise CliError("--threads must be >= 1")
    return opts


def parse_grid(spec: str, log: bool) -> np.ndarray:
    parts = str(spec).split(":")
    if len(parts) != 3:
        raise CliError(f"grid must be min:max:points, got {spec!r}")
    try:
        lo = float(parts[0])
        hi = float(parts[1])
        n = int(parts[2])
    except ValueError as exc:
        raise CliError(f"bad grid {spec!r}: {exc}") from exc
    if not (0.0 < lo < hi) or n < 2:
        raise CliError(f"grid needs 0 < min < max and points >= 2, got {spec!r}")
    if log:
        return np.geomspace(lo, hi, n)
    return np.linspace(lo, hi, n)


def parse_weight(spec: str) -> WeightSpec:
    spec = str(spec)
    if spec in ("uniform", "exp", "gauss"):
        return WeightSpec(spec)
    if spec.startswith("table:"):
        path = spec[len("table:") :]
        try:
            with open(path, "r", encoding="utf-8", newline="") as fh:
                reader = csv.reader(fh)
                rows = list(reader)
        except OSError as exc:
            raise CliError(f"cannot read weight table {path}: {exc}") from exc
        if not rows or [c.strip() for c in rows[0]] != ["rho", "weight"]:
            raise CliError(f"{path}: line 1: expected header 'rho,weight'")
        rho = []
        val = []
        for i, row in enumerate(rows[1:], 2):
            if not row:
                continue
            if len(row) != 2:
                raise CliError(f"{path}: line {i}: expected 2 columns")
            try:
                rho.append(float(row[0]))
                val.append(float(row[1]))
            except ValueError as exc:
                raise CliError(f"{path}: line {i}: {exc}") from exc
        try:
            return WeightSpec("table", tuple(rho), tuple(val))
        except ValueError as exc:
            raise CliError(f"{path}: {exc}") from exc
    raise CliError(f"unknown weight {spec!r} (use uniform, exp, gauss, table:PATH)")


def _fmt(v: float) -> str:
    return repr(float(v))


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc}") from exc


def _csv_text(header: tuple[str, ...], rows) -> str:
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(v) for v in row])
    return buf.getvalue()


def _grid_from(opts: dict) -> np.ndarray:
    log = bool(opts["log"]) and not bool(opts.get("linear", False))
    return parse_grid(opts["grid"], log)


def cmd_spectrum(opts: dict) -> int:
    table = SpectralTable.build(_grid_from(opts))
    _write_text(opts["out"], _csv_text(TABLE_COLUMNS, table.rows()))
    return EXIT_OK


def cmd_sample(opts: dict) -> int:
    if opts["n"] < 1:
        raise CliError("--n must be >= 1")
    weight = parse_weight(opts["weight"])
    batch = mc_sample(
        opts["n"], opts["seed"], weight, streams=opts["streams"], threads=opts["threads"]
    )
    rows = zip(batch.omega.tolist(), batch.weight.tolist())
    _write_text(opts["out"], _csv_text(("omega", "weight"), rows))
    return EXIT_OK


def cmd_verify(opts: dict) -> int:
    cfg = VerifyConfig(seed=opts["seed"], fd_step=opts["fd_step"], fd_tol=opts["tol"])
    report = run_all(cfg)
    text = to_json(report)
    json_path = opts["json"] or opts["out"]
    if json_path:
        _write_text(json_path, text)
        for name in sorted(report):
            sys.stdout.write(f"{name}: {report[name]['status']}\n")
        sys.stdout.write(
            f"pass={count_status(report, 'pass')} "
            f"discrepancy={count_status(report, 'discrepancy')} "
            f"fail={count_status(report, 'fail')}\n"
        )
    else:
        sys.stdout.write(text)
    if has_step_size_failure(report):
        return EXIT_CONFIG
    if count_status(report, FAIL) > 0:
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_moments(opts: dict) -> int:
    weight = parse_weight(opts["weight"])
    out: dict = {"weight": weight.kind, "cuts": list(MOMENT_CUTS)}
    batch = mc_sample(opts["n"], opts["seed"], weight)
    m_mc, se_mc = mc_mean(batch)
    out["mean_mc"] = m_mc
    out["mc_stderr"] = se_mc
    out["mc_n"] = opts["n"]
    if weight.kind == "uniform":
        mean_q, bound = mean_quadrature()
        e2 = [truncated_second_moment(c) for c in MOMENT_CUTS]
        ratio = (e2[2] - e2[1]) / (e2[1] - e2[0])
        model_ratio, pure_ratio = second_moment_tail_model(*MOMENT_CUTS)
        out.update(
            {
                "mean_quadrature": mean_q,
                "mean_bound": bound,
                "claimed_mean": MEAN_CLAIMED,
                "E2_truncated": e2,
                "increment_ratio": ratio,
                "model_ratio": model_ratio,
                "pure_log2_ratio": pure_ratio,
            }
        )
    else:
        mean_q = weighted_mean(weight)
        e2 = [weighted_truncated_second_moment(weight, c) for c in MOMENT_CUTS]
        out.update({"mean_quadrature": mean_q, "E2_truncated": e2})
    lines = [f"weight = {weight.kind}"]
    lines.append(f"mean_quadrature = {_fmt(out['mean_quadrature'])}")
    lines.append(f"mean_mc = {_fmt(m_mc)} (stderr {_fmt(se_mc)}, n={opts['n']})")
    for cut, v in zip(MOMENT_CUTS, out["E2_truncated"]):
        lines.append(f"E2[{cut:g}] = {_fmt(v)}")
    if weight.kind == "uniform":
        lines.append(
            f"increment_ratio = {_fmt(out['increment_ratio'])} "
            f"(tail model {_fmt(out['model_ratio'])}, "
            f"pure log^2 {_fmt(out['pure_log2_ratio'])})"
        )
        lines.append(
            f"claimed_mean = {_fmt(MEAN_CLAIMED)} "
            f"(measured {_fmt(out['mean_quadrature'])}: discrepancy)"
        )
    text = "\n".join(lines) + "\n"
    if opts["json"]:
        import json as _json

        _write_text(opts["json"], _json.dumps(out, sort_keys=True, indent=2) + "\n")
        sys.stdout.write(text)
    else:
        _write_text(opts["out"], text)
    return EXIT_OK


def read_spectrum_csv(path: str) -> SpectralTable:
    try:
        with open(path, "r", encoding="utf-8", newline="") as fh:
            reader = csv.reader(fh)
            rows = list(reader)
    except OSError as exc:
        raise CliError(f"cannot read table {path}: {exc}") from exc
    if not rows:
        raise CliError(f"{path}: empty table")
    if [c.strip() for c in rows[0]] != list(TABLE_COLUMNS):
        raise CliError(
            f"{path}: line 1: expected header {','.join(TABLE_COLUMNS)!r}"
        )
    data: list[list[float]] = []
    for i, row in enumerate(rows[1:], 2):
        if not row:
            continue
        if len(row) != len(TABLE_COLUMNS):
            raise CliError(
                f"{path}: line {i}: expected {len(TABLE_COLUMNS)} columns, got {len(row)}"
            )
        try:
            data.append([float(v) for v in row])
        except ValueError as exc:
            raise CliError(f"{path}: line {i}: {exc}") from exc
    if not data:
        raise CliError(f"{path}: no data rows")
    cols = np.array(data, dtype=float).T
    return SpectralTable(*cols)


def render_spectrum_svg(table: SpectralTable) -> str:
    width, height = 880, 560
    ml, mr, mt, mb = 70.0, 20.0, 30.0, 50.0
    lx = np.log10(table.x)
    x0, x1 = float(lx[0]), float(lx[-1])
    if x1 <= x0:
        x1 = x0 + 1.0
    ymax = float(np.max(table.f_quad))
    y1 = ymax * 1.06 if ymax > 0 else 1.0

    def px(v: float) -> float:
        return ml + (v - x0) / (x1 - x0) * (width - ml - mr)

    def py(v: float) -> float:
        return height - mb - v / y1 * (height - mt - mb)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{ml:.2f}" y1="{py(0.0):.2f}" x2="{width - mr:.2f}" '
        f'y2="{py(0.0):.2f}" stroke="black" stroke-width="1"/>',
        f'<line x1="{ml:.2f}" y1="{py(0.0):.2f}" x2="{ml:.2f}" '
        f'y2="{mt:.2f}" stroke="black" stroke-width="1"/>',
    ]
    for d in range(math.ceil(x0), math.floor(x1) + 1):
        xp = px(float(d))
        parts.append(
            f'<line x1="{xp:.2f}" y1="{py(0.0):.2f}" x2="{xp:.2f}" '
            f'y2="{py(0.0) + 6:.2f}" stroke="black" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{xp:.2f}" y="{py(0.0) + 20:.2f}" font-size="12" '
            f'text-anchor="middle">1e{d}</text>'
        )
    for k in range(1, 5):
        yv = y1 * k / 5.0
        yp = py(yv)
        parts.append(
            f'<line x1="{ml - 6:.2f}" y1="{yp:.2f}" x2="{ml:.2f}" y2="{yp:.2f}" '
            f'stroke="black" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{ml - 10:.2f}" y="{yp + 4:.2f}" font-size="12" '
            f'text-anchor="end">{yv:.4f}</text>'
        )
    pts = " ".join(
        f"{px(float(v)):.2f},{py(float(fv)):.2f}"
        for v, fv in zip(lx, table.f_quad)
    )
    parts.append(
        f'<polyline points="{pts}" fill="none" stroke="#1f77b4" stroke-width="1.5"/>'
    )
    parts.append(
        f'<text x="{(ml + width - mr) / 2:.2f}" y="{height - 12:.2f}" '
        f'font-size="13" text-anchor="middle">x (log scale)</text>'
    )
    parts.append(
        f'<text x="{ml:.2f}" y="{mt - 10:.2f}" font-size="13">'
        f"spectral density f_quad</text>"
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def cmd_plot(opts: dict) -> int:
    if opts["table"]:
        table = read_spectrum_csv(opts["table"])
    else:
        table = SpectralTable.build(_grid_from(opts))
    _write_text(opts["out"], render_spectrum_svg(table))
    return EXIT_OK


def cmd_reweight(opts: dict) -> int:
    weight = parse_weight(opts["weight"])
    x = _grid_from(opts)
    f_quad = _pdf_batch(x)
    if weight.kind == "uniform":
        w = np.ones_like(x)
        f_rw = f_quad
    else:
        w = weight.weight_of_omega(x)
        z = _cached_distribution(weight).normalizer
        f_rw = f_quad * w / z
    rows = zip(x.tolist(), (x / 4.0).tolist(), f_quad.tolist(), w.tolist(), f_rw.tolist())
    header = ("x", "x_tilde", "f_quad", "weight", "f_reweighted")
    _write_text(opts["out"], _csv_text(header, rows))
    return EXIT_OK


_COMMANDS = {
    "spectrum": cmd_spectrum,
    "sample": cmd_sample,
    "verify": cmd_verify,
    "moments": cmd_moments,
    "plot": cmd_plot,
    "reweight": cmd_reweight,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
        opts = resolve_options(ns)
        return _COMMANDS[ns.command](opts)
    except CliError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CONFIG
    except SystemExit as exc:
        # argparse exits 2 on usage errors; normalize None to 0
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
