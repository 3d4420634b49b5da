"""Z-scan pipeline: per-atom measure records, CSV tables and trend analysis."""
import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import measures as M
from .measures import GammaParams, MeasureSet, DEFAULT_GAMMAS
from .quadrature import QuadratureSpec
from .rhf import atom_moments, momentum_density, position_density

__all__ = [
    "AtomComputationError",
    "MissingAtomsError",
    "ScanTable",
    "FitResult",
    "Extrema",
    "SimilarityReport",
    "compute_atom_measures",
    "scan_range",
    "fit_log",
    "fit_log_series",
    "local_extrema",
    "similarity",
    "CSV_FIELDS",
]

# scalar columns of the CSV, in order; Gamma columns go between Omega and C
CSV_FIELDS = (
    "Z", "symbol", "S_r", "S_k", "S", "E_r", "E_k", "D", "O", "r2", "T",
    "S_min", "S_max", "Delta", "Omega",
)
NUMBER_FORMAT = "{:.9e}"


class AtomComputationError(RuntimeError):
    """A per-atom stage failed; carries the atom's Z and the stage name."""

    def __init__(self, Z, stage, cause):
        super().__init__(f"Z={Z}: {stage} failed: {cause}")
        self.Z = Z
        self.stage = stage
        self.cause = cause


class MissingAtomsError(LookupError):
    def __init__(self, missing):
        self.missing = sorted(missing)
        super().__init__("library has no data for Z = " + ", ".join(map(str, self.missing)))


def _stage(Z, name, fn, *args, **kw):
    try:
        return fn(*args, **kw)
    except M.BoundViolation:
        raise
    except Exception as exc:  # noqa: BLE001
        raise AtomComputationError(Z, name, exc) from exc


def compute_atom_measures(atom, gammas=DEFAULT_GAMMAS, spec=None):
    """Assemble the full :class:`MeasureSet` of one atom.

    Bound violations (S > S_max) are raised as :class:`BoundViolation`, never
    clamped; any other stage failure becomes :class:`AtomComputationError`.
    """
    spec = spec or QuadratureSpec()
    Z = atom.Z
    rho = _stage(Z, "position density", position_density, atom)
    n_k = _stage(Z, "momentum density", momentum_density, atom)
    S_r = _stage(Z, "position entropy", M.shannon_radial, rho, spec)
    S_k = _stage(Z, "momentum entropy", M.shannon_radial, n_k, spec)
    E_r = _stage(Z, "position information energy", M.onicescu_radial, rho, spec, check=False)
    E_k = _stage(Z, "momentum information energy", M.onicescu_radial, n_k, spec, check=False)
    r2, T = _stage(Z, "moments", atom_moments, atom, spec, rho=rho, n_k=n_k)
    b = _stage(Z, "entropy bounds", M.entropy_bounds, r2, T)
    S = S_r + S_k
    delta, omega = M.order_disorder(S, b.S_max)
    D = E_r * E_k
    return MeasureSet(
        Z=Z, symbol=atom.symbol, S_r=S_r, S_k=S_k, S=S, E_r=E_r, E_k=E_k,
        D=D, O=1.0 / D, r2=r2, T=T,
        S_r_min=b.S_r_min, S_r_max=b.S_r_max, S_k_min=b.S_k_min, S_k_max=b.S_k_max,
        S_min=b.S_min, S_max=b.S_max, Delta=delta, Omega=omega,
        gammas={g: M.sdl_gamma(delta, g) for g in gammas},
        C=M.lmc_complexity(S, E_r, E_k),
    )


def _row_from_csv(record, gammas):
    """Rebuild a MeasureSet from one CSV record; the component bounds are
    not stored, so they are recomputed from r2 and T."""
    num = {k: float(record[k]) for k in CSV_FIELDS if k not in ("Z", "symbol")}
    b = M.entropy_bounds(num["r2"], num["T"])
    return MeasureSet(
        Z=int(record["Z"]), symbol=record["symbol"],
        S_r=num["S_r"], S_k=num["S_k"], S=num["S"], E_r=num["E_r"], E_k=num["E_k"],
        D=num["D"], O=num["O"], r2=num["r2"], T=num["T"],
        S_r_min=b.S_r_min, S_r_max=b.S_r_max, S_k_min=b.S_k_min, S_k_max=b.S_k_max,
        S_min=num["S_min"], S_max=num["S_max"], Delta=num["Delta"], Omega=num["Omega"],
        gammas={g: float(record[g.column]) for g in gammas},
        C=float(record["C"]),
    )


@dataclass(frozen=True)
class ScanTable:
    rows: tuple
    gamma_params: tuple = DEFAULT_GAMMAS

    def __post_init__(self):
        rows = tuple(self.rows)
        gammas = tuple(self.gamma_params)
        zs = [r.Z for r in rows]
        if any(b <= a for a, b in zip(zs, zs[1:])):
            raise ValueError("rows must have strictly increasing Z")
        for r in rows:
            if set(r.gammas) != set(gammas):
                raise ValueError(f"row Z={r.Z} carries different Gamma parameters")
        if len({g.column for g in gammas}) != len(gammas):
            raise ValueError("duplicate Gamma columns")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "gamma_params", gammas)

    def __len__(self):
        return len(self.rows)

    @property
    def Z(self):
        return np.array([r.Z for r in self.rows])

    @property
    def columns(self):
        return list(CSV_FIELDS) + [g.column for g in self.gamma_params] + ["C"]

    def column(self, name):
        """Values of a numeric column by CSV name (``Gamma_<a>_<b>`` included)."""
        for g in self.gamma_params:
            if g.column == name:
                return np.array([r.gammas[g] for r in self.rows])
        numeric = [c for c in self.columns if c != "symbol"]
        if name not in numeric:
            raise KeyError(f"unknown column {name!r}; valid columns: {', '.join(numeric)}")
        return np.array([getattr(r, name) for r in self.rows], dtype=float)

    def select(self, z_min, z_max):
        keep = tuple(r for r in self.rows if z_min <= r.Z <= z_max)
        return ScanTable(keep, self.gamma_params)

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.columns)
        for r in self.rows:
            vals = [str(r.Z), r.symbol]
            vals += [NUMBER_FORMAT.format(getattr(r, k)) for k in CSV_FIELDS[2:]]
            vals += [NUMBER_FORMAT.format(r.gammas[g]) for g in self.gamma_params]
            vals.append(NUMBER_FORMAT.format(r.C))
            w.writerow(vals)
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text):
        reader = csv.DictReader(io.StringIO(text))
        header = reader.fieldnames or []
        n = len(CSV_FIELDS)
        if tuple(header[:n]) != CSV_FIELDS or not header or header[-1] != "C":
            raise ValueError("CSV header does not match the scan table layout")
        gammas = []
        for col in header[n:-1]:
            parts = col.split("_")
            if len(parts) != 3 or parts[0] != "Gamma":
                raise ValueError(f"bad Gamma column {col!r}")
            gammas.append(GammaParams(float(parts[1]), float(parts[2]), label=f"{parts[1]}_{parts[2]}"))
        rows = [_row_from_csv(rec, gammas) for rec in reader]
        return cls(tuple(rows), tuple(gammas))


def _measure_job(args):
    atom, gammas, spec = args
    return compute_atom_measures(atom, gammas, spec)


def scan_range(library, z_min, z_max, gammas=DEFAULT_GAMMAS, jobs=1, spec=None):
    """Compute one row per Z in ``[z_min, z_max]``.

    Raises :class:`MissingAtomsError` naming every absent Z.  With
    ``jobs > 1`` the atoms are spread over worker processes; the row order
    does not depend on ``jobs``.
    """
    if z_min > z_max:
        raise ValueError("z_min must not exceed z_max")
    by_z = {a.Z: a for a in library}
    missing = [z for z in range(z_min, z_max + 1) if z not in by_z]
    if missing:
        raise MissingAtomsError(missing)
    gammas = tuple(gammas)
    work = [(by_z[z], gammas, spec) for z in range(z_min, z_max + 1)]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_measure_job, work))
    else:
        rows = [_measure_job(w) for w in work]
    return ScanTable(tuple(rows), gammas)


class FitResult(NamedTuple):
    a: float
    b: float
    rms: float


def fit_log_series(z, y):
    """Ordinary least squares y = a + b ln Z."""
    z = np.asarray(z, dtype=float)
    y = np.asarray(y, dtype=float)
    if z.size < 3 or z.size != y.size:
        raise ValueError("need at least 3 aligned points")
    if not (np.all(np.isfinite(y)) and np.all(z > 0)):
        raise ValueError("values must be finite and Z positive")
    x = np.log(z)
    if np.ptp(x) == 0:
        raise ValueError("degenerate design: all Z equal")
    A = np.column_stack((np.ones_like(x), x))
    (a, b), *_ = np.linalg.lstsq(A, y, rcond=None)
    resid = y - (a + b * x)
    return FitResult(float(a), float(b), float(math.sqrt(np.mean(resid**2))))


def fit_log(table, column, z_min=2, z_max=54):
    """Fit ``column`` of a :class:`ScanTable` against ln Z over [z_min, z_max]."""
    sub = table.select(z_min, z_max)
    return fit_log_series(sub.Z, sub.column(column))


class Extrema(NamedTuple):
    minima: list
    maxima: list


def local_extrema(z, values):
    """Strict interior local minima and maxima of an ordered series."""
    z = np.asarray(z)
    v = np.asarray(values, dtype=float)
    if v.size < 3 or z.size != v.size:
        raise ValueError("need at least 3 aligned points")
    if np.any(np.diff(z) <= 0):
        raise ValueError("Z must be strictly increasing")
    mid, left, right = v[1:-1], v[:-2], v[2:]
    zi = z[1:-1]
    minima = [int(x) for x in zi[(mid < left) & (mid < right)]]
    maxima = [int(x) for x in zi[(mid > left) & (mid > right)]]
    return Extrema(minima, maxima)


class SimilarityReport(NamedTuple):
    scale: float
    pearson_r: float
    shared_minima: list
    shared_maxima: list


def similarity(z, a, b):
    """Compare two series on the same Z grid.

    ``scale`` minimizes sum (a - s b)**2; extrema are intersected.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape or a.size != np.asarray(z).size:
        raise ValueError("series must share the Z grid")
    if np.ptp(a) == 0 or np.ptp(b) == 0:
        raise ValueError("zero-variance series has no correlation")
    scale = float(np.dot(a, b) / np.dot(b, b))
    r = float(np.clip(np.corrcoef(a, b)[0, 1], -1.0, 1.0))
    ea, eb = local_extrema(z, a), local_extrema(z, b)
    return SimilarityReport(
        scale,
        r,
        sorted(set(ea.minima) & set(eb.minima)),
        sorted(set(ea.maxima) & set(eb.maxima)),
    )
