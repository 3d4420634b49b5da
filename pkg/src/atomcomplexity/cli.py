"""Command-line interface: ``atomcomplexity <command> [options]``.

Exit codes: 0 success, 1 usage error, 2 data error, 3 numerical
non-convergence.
"""
import argparse
import math
import sys
import warnings
from pathlib import Path

import numpy as np

from .measures import BoundViolation, GammaParams, DEFAULT_GAMMAS
from .quadrature import QuadratureError, QuadratureSpec
from .rhf import (
    MAX_SUPPORTED_Z,
    BasisFormatError,
    NormalizationWarning,
    bundled_library,
    hydrogenic_basis,
    load_basis_library,
)
from .scan import (
    AtomComputationError,
    MissingAtomsError,
    ScanTable,
    compute_atom_measures,
    fit_log,
    local_extrema,
    scan_range,
    similarity,
)

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_NUMERIC = 0, 1, 2, 3


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad arguments; usage errors here are 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _gamma(text):
    try:
        return GammaParams.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text):
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return v


def _spec(args):
    return QuadratureSpec(rel_tol=args.tol) if args.tol else QuadratureSpec()


def _check_z(*zs):
    for z in zs:
        if not 1 <= z <= MAX_SUPPORTED_Z:
            raise UsageError(f"Z out of supported range [1,{MAX_SUPPORTED_Z}]")


def _library(path):
    if path is None:
        return bundled_library()
    try:
        atoms = load_basis_library(path)
    except OSError as exc:
        raise DataError(f"cannot read basis file: {exc}") from exc
    return list(atoms)


def _read_table(path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from exc
    try:
        return ScanTable.from_csv(text)
    except (ValueError, KeyError) as exc:
        raise DataError(f"{path}: {exc}") from exc


def _column(table, name):
    try:
        return table.column(name)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None


def _fmt(x):
    return format(x, ".10g")


# -- commands -----------------------------------------------------------------


def cmd_compute(args):
    _check_z(args.z)
    gammas = tuple(args.gamma) if args.gamma else DEFAULT_GAMMAS
    if args.hydrogenic:
        atom = hydrogenic_basis(args.z)
    else:
        atoms = {a.Z: a for a in _library(args.basis)}
        if args.z not in atoms:
            zs = sorted(atoms)
            raise DataError(
                f"no atom with Z={args.z} in the basis library (available Z: {zs[0]}..{zs[-1]})"
                if zs else "basis library is empty"
            )
        atom = atoms[args.z]
    m = compute_atom_measures(atom, gammas, _spec(args))
    out = [f"Z = {m.Z}", f"symbol = {m.symbol}"]
    for name in ("S_r", "S_k", "S", "E_r", "E_k", "D", "O", "r2", "T",
                 "S_r_min", "S_r_max", "S_k_min", "S_k_max", "S_min", "S_max",
                 "Delta", "Omega"):
        out.append(f"{name} = {_fmt(getattr(m, name))}")
    for g in gammas:
        out.append(f"{g.column} = {_fmt(m.gammas[g])}")
    out.append(f"C = {_fmt(m.C)}")
    print("\n".join(out))
    bad = m.bound_violations()
    if bad:
        print("bound violation: " + "; ".join(bad), file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK


def cmd_scan(args):
    _check_z(args.z_min, args.z_max)
    if args.z_min > args.z_max:
        raise UsageError("--z-min must not exceed --z-max")
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    gammas = tuple(args.gamma) if args.gamma else DEFAULT_GAMMAS
    table = scan_range(_library(args.basis), args.z_min, args.z_max, gammas, args.jobs, _spec(args))
    text = table.to_csv()
    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text, encoding="utf-8")
    return EXIT_OK


def cmd_fit(args):
    table = _read_table(args.input)
    _column(table, args.column)
    sub = table.select(args.z_min, args.z_max)
    if len(sub) < 3:
        raise DataError(f"fewer than 3 rows with Z in [{args.z_min},{args.z_max}]")
    fit = fit_log(table, args.column, args.z_min, args.z_max)
    print(f"{args.column}(Z) = a + b ln Z over Z in [{sub.Z[0]},{sub.Z[-1]}]")
    print(f"a={_fmt(fit.a)} b={_fmt(fit.b)} rms={_fmt(fit.rms)}")
    return EXIT_OK


def cmd_compare(args):
    table = _read_table(args.input)
    _column(table, args.a)
    _column(table, args.b)
    sub = table.select(args.z_min, args.z_max)
    if len(sub) < 3:
        raise DataError(f"fewer than 3 rows with Z in [{args.z_min},{args.z_max}]")
    rep = similarity(sub.Z, sub.column(args.a), sub.column(args.b))
    print(f"{args.a} vs {args.b} over Z in [{sub.Z[0]},{sub.Z[-1]}]")
    print(f"scale={_fmt(rep.scale)}")
    print(f"pearson_r={_fmt(rep.pearson_r)}")
    print("shared_minima=" + ",".join(map(str, rep.shared_minima)))
    print("shared_maxima=" + ",".join(map(str, rep.shared_maxima)))
    return EXIT_OK


def _series_arg(text):
    name, _, factor = text.partition(":")
    if not name:
        raise argparse.ArgumentTypeError(f"bad series {text!r}")
    scale = _positive(factor) if factor else 1.0
    return name, scale, factor


def _nice_ticks(lo, hi, count=6):
    if hi <= lo:
        hi = lo + 1.0
    raw = (hi - lo) / count
    mag = 10.0 ** math.floor(math.log10(raw))
    step = next(m * mag for m in (1, 2, 2.5, 5, 10) if m * mag >= raw)
    start = math.floor(lo / step) * step
    ticks = []
    t = start
    while t <= hi + 1e-9 * step:
        ticks.append(round(t, 12))
        t += step
    return ticks


COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def render_svg(z, series, width=800, height=500):
    """Line chart of ``series`` = [(label, values)] against Z as SVG text.

    Local minima get circles and local maxima squares.
    """
    ml, mr, mt, mb = 70, 150, 30, 50
    pw, ph = width - ml - mr, height - mt - mb
    z = np.asarray(z, dtype=float)
    allv = np.concatenate([np.asarray(v, dtype=float) for _, v in series])
    yt = _nice_ticks(float(allv.min()), float(allv.max()))
    xt = _nice_ticks(float(z.min()), float(z.max()), 10)
    x0, x1, y0, y1 = xt[0], xt[-1], yt[0], yt[-1]

    def px(x):
        return ml + (x - x0) / (x1 - x0) * pw

    def py(y):
        return mt + ph - (y - y0) / (y1 - y0) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<g id="axes" stroke="black" stroke-width="1">',
        f'<line x1="{ml}" y1="{mt + ph}" x2="{ml + pw}" y2="{mt + ph}"/>',
        f'<line x1="{ml}" y1="{mt}" x2="{ml}" y2="{mt + ph}"/>',
        "</g>",
    ]
    for t in xt:
        x = px(t)
        out.append(f'<line x1="{x:.2f}" y1="{mt + ph}" x2="{x:.2f}" y2="{mt + ph + 5}" stroke="black"/>')
        out.append(f'<text x="{x:.2f}" y="{mt + ph + 18}" text-anchor="middle">{t:g}</text>')
    for t in yt:
        y = py(t)
        out.append(f'<line x1="{ml - 5}" y1="{y:.2f}" x2="{ml}" y2="{y:.2f}" stroke="black"/>')
        out.append(f'<text x="{ml - 8}" y="{y + 4:.2f}" text-anchor="end">{t:g}</text>')
    out.append(f'<text x="{ml + pw / 2:.2f}" y="{height - 10}" text-anchor="middle">Z</text>')
    for i, (label, values) in enumerate(series):
        color = COLORS[i % len(COLORS)]
        values = np.asarray(values, dtype=float)
        pts = " ".join(f"{px(a):.2f},{py(b):.2f}" for a, b in zip(z, values))
        out.append(f'<polyline class="series" fill="none" stroke="{color}" stroke-width="1.5" points="{pts}"/>')
        if z.size >= 3:
            ext = local_extrema(z.astype(int), values)
            lookup = dict(zip(z.astype(int).tolist(), values))
            for zm in ext.minima:
                out.append(f'<circle class="minimum" cx="{px(zm):.2f}" cy="{py(lookup[zm]):.2f}" r="3" fill="{color}"/>')
            for zm in ext.maxima:
                out.append(
                    f'<rect class="maximum" x="{px(zm) - 3:.2f}" y="{py(lookup[zm]) - 3:.2f}" '
                    f'width="6" height="6" fill="{color}"/>'
                )
        ly = mt + 15 + 18 * i
        out.append(f'<line x1="{ml + pw + 15}" y1="{ly}" x2="{ml + pw + 40}" y2="{ly}" stroke="{color}" stroke-width="1.5"/>')
        out.append(f'<text x="{ml + pw + 45}" y="{ly + 4}">{label}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_gnuplot(z, series, svg_path, width=800, height=500):
    lines = [f"set terminal svg size {width},{height}", f"set output '{svg_path}'",
             "set xlabel 'Z'", "$data << EOD"]
    for i, zi in enumerate(z):
        lines.append(" ".join([str(int(zi))] + [format(float(v[i]), ".9e") for _, v in series]))
    lines.append("EOD")
    plots = [f"$data using 1:{j + 2} with linespoints title '{label}'" for j, (label, _) in enumerate(series)]
    lines.append("plot " + ", \\\n     ".join(plots))
    return "\n".join(lines) + "\n"


def cmd_plot(args):
    table = _read_table(args.input)
    if len(table) < 1:
        raise DataError("table has no rows")
    series = []
    for name, scale, factor in args.series:
        label = f"{factor}*{name}" if factor else name
        series.append((label, scale * _column(table, name)))
    Path(args.out).write_text(render_svg(table.Z, series, args.width, args.height), encoding="utf-8")
    if args.gnuplot:
        Path(args.gnuplot).write_text(
            render_gnuplot(table.Z, series, args.out, args.width, args.height), encoding="utf-8"
        )
    return EXIT_OK


def cmd_validate(args):
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", NormalizationWarning)
            atoms = _library(args.basis)
    except BasisFormatError as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_DATA
    worst = 0.0
    for atom in atoms:
        res = [abs(o.norm() - 1.0) for o in atom.orbitals]
        worst = max(worst, max(res))
        print(f"Z={atom.Z} {atom.symbol} orbitals={len(atom.orbitals)} max_residual={max(res):.3e}")
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    print(f"atoms={len(atoms)} max_residual={worst:.3e}")
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def build_parser():
    p = _Parser(prog="atomcomplexity", description="Information-theoretic complexity of neutral atoms.")
    sub = p.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True

    c = sub.add_parser("compute", help="report every measure of one atom")
    c.add_argument("--z", type=int, required=True, help="atomic number")
    c.add_argument("--basis", help="basis library file (default: bundled RHF data)")
    c.add_argument("--hydrogenic", action="store_true", help="use the exact one-electron atom of charge Z")
    c.add_argument("--gamma", type=_gamma, action="append", metavar="A,B",
                   help="SDL parameters alpha,beta (repeatable)")
    c.add_argument("--tol", type=_positive, help="quadrature relative tolerance")
    c.set_defaults(func=cmd_compute)

    s = sub.add_parser("scan", help="compute all measures over a range of Z and write CSV")
    s.add_argument("--z-min", type=int, default=2)
    s.add_argument("--z-max", type=int, default=MAX_SUPPORTED_Z)
    s.add_argument("--basis", help="basis library file (default: bundled RHF data)")
    s.add_argument("--gamma", type=_gamma, action="append", metavar="A,B",
                   help="SDL parameters alpha,beta (repeatable)")
    s.add_argument("--out", default="-", help="output CSV path ('-' for stdout)")
    s.add_argument("--jobs", type=int, default=1, help="worker processes")
    s.add_argument("--tol", type=_positive, help="quadrature relative tolerance")
    s.set_defaults(func=cmd_scan)

    f = sub.add_parser("fit", help="least-squares fit of a column against ln Z")
    f.add_argument("--in", dest="input", required=True, help="scan CSV")
    f.add_argument("--column", required=True)
    f.add_argument("--z-min", type=int, default=2)
    f.add_argument("--z-max", type=int, default=MAX_SUPPORTED_Z)
    f.set_defaults(func=cmd_fit)

    m = sub.add_parser("compare", help="scale factor, correlation and shared extrema of two columns")
    m.add_argument("--in", dest="input", required=True, help="scan CSV")
    m.add_argument("--a", required=True, help="first column")
    m.add_argument("--b", required=True, help="second column")
    m.add_argument("--z-min", type=int, default=2)
    m.add_argument("--z-max", type=int, default=MAX_SUPPORTED_Z)
    m.set_defaults(func=cmd_compare)

    g = sub.add_parser("plot", help="SVG line chart of columns against Z")
    g.add_argument("--in", dest="input", required=True, help="scan CSV")
    g.add_argument("--series", type=_series_arg, action="append", required=True,
                   metavar="COLUMN[:SCALE]", help="column to draw, optionally scaled (repeatable)")
    g.add_argument("--out", required=True, help="output SVG path")
    g.add_argument("--width", type=int, default=800)
    g.add_argument("--height", type=int, default=500)
    g.add_argument("--gnuplot", metavar="PATH", help="also write a gnuplot script")
    g.set_defaults(func=cmd_plot)

    v = sub.add_parser("validate", help="parse a basis file and report normalization residuals")
    v.add_argument("--basis", help="basis library file (default: bundled RHF data)")
    v.set_defaults(func=cmd_validate)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DataError, MissingAtomsError, BasisFormatError, BoundViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except AtomComputationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC if isinstance(exc.cause, QuadratureError) else EXIT_DATA
    except QuadratureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
