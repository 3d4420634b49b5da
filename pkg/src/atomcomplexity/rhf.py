"""Slater-type-orbital atoms: basis files, densities and moments.

An orbital is ``R(r) = sum_j c_j N_j r**(n_j - 1) exp(-zeta_j r)`` with the
primitive normalization ``N = (2 zeta)**(n + 1/2) / sqrt((2n)!)``.  Densities
are spherically averaged over each (n, l) subshell and normalized to one:
``rho(r) = sum occ R**2 / (4 pi N_e)``; the momentum density is built the same
way from the order-l spherical Bessel transforms of the orbitals.
"""
import hashlib
import math
import re
import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import NamedTuple

import numpy as np
from scipy.special import gammaln, spherical_jn

from .elements import SYMBOLS
from .measures import RadialDensity
from .quadrature import QuadratureSpec, gauss_legendre, radial_moment

__all__ = [
    "StoPrimitive",
    "Orbital",
    "AtomBasis",
    "Moments",
    "BasisFormatError",
    "NormalizationWarning",
    "parse_basis_library",
    "load_basis_library",
    "bundled_library",
    "bundled_basis_path",
    "read_manifest",
    "verify_manifest",
    "block_checksum",
    "hydrogenic_basis",
    "position_density",
    "sto_hankel",
    "hankel_quadrature",
    "momentum_orbital",
    "momentum_density",
    "atom_moments",
    "spherical_jn_zeros",
    "wynn_epsilon",
]

NORM_WARN = 1e-6
NORM_FAIL = 1e-4
SERIES_SWITCH = 0.5
SERIES_TERMS = 64
MAX_SUPPORTED_Z = 54


class BasisFormatError(ValueError):
    def __init__(self, message, lineno=None, source="<basis>"):
        where = f"{source}:{lineno}: " if lineno is not None else f"{source}: "
        super().__init__(where + message)
        self.lineno = lineno


class NormalizationWarning(UserWarning):
    pass


@dataclass(frozen=True)
class StoPrimitive:
    n: int
    zeta: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"STO principal number must be an integer >= 1, got {self.n}")
        if not self.zeta > 0:
            raise ValueError(f"STO exponent must be positive, got {self.zeta}")

    @property
    def norm(self):
        return math.exp(
            (self.n + 0.5) * math.log(2.0 * self.zeta) - 0.5 * math.lgamma(2 * self.n + 1)
        )

    def __call__(self, r):
        r = np.asarray(r, dtype=float)
        return self.norm * r ** (self.n - 1) * np.exp(-self.zeta * r)


@dataclass(frozen=True)
class Orbital:
    label: str
    l: int  # noqa: E741
    occupation: float
    terms: tuple  # of (coefficient, StoPrimitive)

    def __post_init__(self):
        if self.l < 0:
            raise ValueError("angular momentum must be >= 0")
        cap = 2 * (2 * self.l + 1)
        if not 0 < self.occupation <= cap:
            raise ValueError(
                f"orbital {self.label}: occupation {self.occupation:g} outside (0, {cap}]"
            )
        if not self.terms:
            raise ValueError(f"orbital {self.label} has no terms")
        for _, prim in self.terms:
            if prim.n < self.l + 1:
                raise ValueError(f"orbital {self.label}: primitive n={prim.n} < l+1={self.l + 1}")

    @property
    def coefficients(self):
        return np.array([c for c, _ in self.terms])

    @property
    def primitives(self):
        return [p for _, p in self.terms]

    @property
    def zeta_min(self):
        return min(p.zeta for p in self.primitives)

    @property
    def zeta_max(self):
        return max(p.zeta for p in self.primitives)

    def radial(self, r):
        r = np.asarray(r, dtype=float)
        out = np.zeros_like(r)
        for c, p in self.terms:
            out += c * p(r)
        return out

    def norm(self):
        """Exact ``int R(r)**2 r**2 dr`` from the STO overlap formula."""
        c = self.coefficients
        n = np.array([p.n for p in self.primitives], dtype=float)
        z = np.array([p.zeta for p in self.primitives])
        lognorm = (n + 0.5) * np.log(2 * z) - 0.5 * gammaln(2 * n + 1)
        nn = n[:, None] + n[None, :]
        zz = z[:, None] + z[None, :]
        log_overlap = lognorm[:, None] + lognorm[None, :] + gammaln(nn + 1) - (nn + 1) * np.log(zz)
        return float(c @ np.exp(log_overlap) @ c)

    def normalized(self):
        s = 1.0 / math.sqrt(self.norm())
        return Orbital(self.label, self.l, self.occupation, tuple((c * s, p) for c, p in self.terms))


@dataclass(frozen=True)
class AtomBasis:
    Z: int
    symbol: str
    orbitals: tuple
    checksum: str = field(default=None, compare=False)

    def __post_init__(self):
        if self.Z < 1:
            raise ValueError("Z must be >= 1")
        if not self.orbitals:
            raise ValueError(f"atom Z={self.Z} has no orbitals")

    @property
    def n_electrons(self):
        return sum(o.occupation for o in self.orbitals)

    @property
    def zeta_min(self):
        return min(o.zeta_min for o in self.orbitals)

    @property
    def zeta_max(self):
        return max(o.zeta_max for o in self.orbitals)

    def orbital(self, label):
        for o in self.orbitals:
            if o.label == label:
                return o
        raise KeyError(label)


# -- basis file format ----------------------------------------------------------

_KEYS = {
    "atom": {"Z": int, "symbol": str},
    "orbital": {"label": str, "l": int, "occ": float},
    "term": {"c": float, "n": int, "zeta": float},
}
_TOKEN = re.compile(r"^(\w+)=(\S+)$")


def block_checksum(lines):
    """SHA-256 of one atom block (``atom`` .. ``end`` lines, whitespace-stripped)."""
    text = "\n".join(ln.strip() for ln in lines) + "\n"
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _fields(kind, tokens, lineno, source):
    spec = _KEYS[kind]
    out = {}
    for tok in tokens:
        m = _TOKEN.match(tok)
        if not m:
            raise BasisFormatError(f"malformed field {tok!r}", lineno, source)
        key, raw = m.groups()
        if key not in spec:
            raise BasisFormatError(f"unknown field {key!r} in {kind} record", lineno, source)
        if key in out:
            raise BasisFormatError(f"duplicate field {key!r}", lineno, source)
        try:
            out[key] = spec[key](raw)
        except ValueError:
            raise BasisFormatError(f"bad value {raw!r} for {key}", lineno, source) from None
    missing = set(spec) - set(out)
    if missing:
        raise BasisFormatError(f"{kind} record lacks {', '.join(sorted(missing))}", lineno, source)
    return out


def _finish_orbital(orb, lineno, source):
    try:
        orbital = Orbital(orb["label"], orb["l"], orb["occ"], tuple(orb["terms"]))
    except ValueError as exc:
        raise BasisFormatError(str(exc), orb["lineno"], source) from None
    err = abs(orbital.norm() - 1.0)
    if err > NORM_FAIL:
        raise BasisFormatError(
            f"orbital {orbital.label} radial norm off by {err:.2e} (transcription error?)",
            orb["lineno"],
            source,
        )
    if err > NORM_WARN:
        warnings.warn(
            f"{source}:{orb['lineno']}: orbital {orbital.label} radial norm off by {err:.2e}",
            NormalizationWarning,
            stacklevel=3,
        )
    return orbital


def parse_basis_library(text, source="<basis>"):
    """Parse basis-file text into a list of :class:`AtomBasis` in file order.

    Radial norms that miss 1 by more than 1e-6 trigger a
    :class:`NormalizationWarning`; beyond 1e-4 the record is rejected.
    """
    atoms = []
    atom = None
    orb = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        kind, *tokens = line.split()
        if kind == "atom":
            if atom is not None:
                raise BasisFormatError("'atom' inside an open block (missing 'end')", lineno, source)
            f = _fields(kind, tokens, lineno, source)
            if f["Z"] < 1:
                raise BasisFormatError(f"Z={f['Z']} must be >= 1", lineno, source)
            if f["Z"] < len(SYMBOLS) and f["symbol"] != SYMBOLS[f["Z"]]:
                raise BasisFormatError(
                    f"symbol {f['symbol']!r} does not match Z={f['Z']} ({SYMBOLS[f['Z']]})",
                    lineno,
                    source,
                )
            atom = {"Z": f["Z"], "symbol": f["symbol"], "orbitals": [], "lines": [line], "lineno": lineno}
        elif kind == "orbital":
            if atom is None:
                raise BasisFormatError("'orbital' outside an atom block", lineno, source)
            if orb is not None:
                atom["orbitals"].append(_finish_orbital(orb, lineno, source))
            f = _fields(kind, tokens, lineno, source)
            if any(o.label == f["label"] for o in atom["orbitals"]):
                raise BasisFormatError(f"duplicate orbital {f['label']!r}", lineno, source)
            orb = {**f, "terms": [], "lineno": lineno}
            atom["lines"].append(line)
        elif kind == "term":
            if orb is None:
                raise BasisFormatError("'term' outside an orbital", lineno, source)
            f = _fields(kind, tokens, lineno, source)
            try:
                prim = StoPrimitive(f["n"], f["zeta"])
            except ValueError as exc:
                raise BasisFormatError(str(exc), lineno, source) from None
            orb["terms"].append((f["c"], prim))
            atom["lines"].append(line)
        elif kind == "end":
            if atom is None:
                raise BasisFormatError("'end' without an open atom block", lineno, source)
            if tokens:
                raise BasisFormatError("'end' takes no fields", lineno, source)
            if orb is not None:
                atom["orbitals"].append(_finish_orbital(orb, lineno, source))
            orb = None
            atom["lines"].append(line)
            try:
                basis = AtomBasis(
                    atom["Z"],
                    atom["symbol"],
                    tuple(atom["orbitals"]),
                    checksum=block_checksum(atom["lines"]),
                )
            except ValueError as exc:
                raise BasisFormatError(str(exc), atom["lineno"], source) from None
            if abs(basis.n_electrons - basis.Z) > 1e-9:
                raise BasisFormatError(
                    f"atom Z={basis.Z}: occupations sum to {basis.n_electrons:g}, "
                    "expected a neutral atom",
                    atom["lineno"],
                    source,
                )
            atoms.append(basis)
            atom = None
        else:
            raise BasisFormatError(f"unknown record {kind!r}", lineno, source)
    if atom is not None:
        raise BasisFormatError(f"atom Z={atom['Z']} not closed by 'end'", atom["lineno"], source)
    return atoms


def load_basis_library(path):
    with open(path, encoding="utf-8") as fh:
        return parse_basis_library(fh.read(), source=str(path))


def bundled_basis_path():
    return resources.files("atomcomplexity").joinpath("data", "rhf.sto")


def _bundled_manifest_path():
    return resources.files("atomcomplexity").joinpath("data", "rhf.manifest")


def read_manifest(text):
    """Parse ``Z symbol n_orbitals checksum`` lines into a dict keyed by Z."""
    out = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 4:
            raise BasisFormatError("manifest lines need 'Z symbol n_orbitals checksum'", lineno, "<manifest>")
        out[int(parts[0])] = (parts[1], int(parts[2]), parts[3])
    return out


def verify_manifest(atoms, manifest):
    """Raise :class:`BasisFormatError` if any atom disagrees with its manifest entry."""
    for atom in atoms:
        if atom.Z not in manifest:
            raise BasisFormatError(f"atom Z={atom.Z} missing from manifest")
        symbol, n_orb, checksum = manifest[atom.Z]
        if (symbol, n_orb, checksum) != (atom.symbol, len(atom.orbitals), atom.checksum):
            raise BasisFormatError(f"atom Z={atom.Z} ({atom.symbol}) does not match its manifest entry")


@lru_cache(maxsize=1)
def _bundled_atoms():
    atoms = parse_basis_library(bundled_basis_path().read_text(encoding="utf-8"), source="rhf.sto")
    verify_manifest(atoms, read_manifest(_bundled_manifest_path().read_text(encoding="utf-8")))
    return tuple(atoms)


def bundled_library(include_hydrogen=True):
    """The bundled RHF atoms (Z = 2..54), preceded by exact hydrogen."""
    atoms = list(_bundled_atoms())
    if include_hydrogen:
        atoms.insert(0, hydrogenic_basis(1))
    return atoms


def hydrogenic_basis(Z):
    """Exact one-electron ground state: a single 1s STO with zeta = Z."""
    if int(Z) != Z or Z < 1:
        raise ValueError("Z must be a positive integer")
    Z = int(Z)
    symbol = SYMBOLS[Z] if Z < len(SYMBOLS) else f"Z{Z}"
    orbital = Orbital("1S", 0, 1.0, ((1.0, StoPrimitive(1, float(Z))),))
    return AtomBasis(Z, symbol, (orbital,))


# -- position space -------------------------------------------------------------


def _electron_count(atom):
    return sum(o.occupation for o in atom.orbitals)


def position_density(atom):
    """rho(r) = sum occ R**2 / (4 pi N_e) with each orbital renormalized exactly."""
    orbitals = [o.normalized() for o in atom.orbitals]
    weights = np.array([o.occupation for o in orbitals]) / (4.0 * np.pi * _electron_count(atom))

    def rho(r):
        r = np.asarray(r, dtype=float)
        out = np.zeros_like(r)
        for w, o in zip(weights, orbitals):
            out += w * o.radial(r) ** 2
        return out

    return RadialDensity(rho, "position", 1.0 / (2.0 * atom.zeta_min))


# -- momentum space -------------------------------------------------------------


@lru_cache(maxsize=None)
def _series_coefficients(N, l):  # noqa: E741
    t = np.arange(SERIES_TERMS)
    # (2l+2t+1)!! = (2l+2t+1)! / (2**(l+t) (l+t)!)
    log_dfact = gammaln(2 * l + 2 * t + 2) - gammaln(l + t + 1) - (l + t) * math.log(2.0)
    log_mag = gammaln(N + l + 2 * t + 1) - t * math.log(2.0) - gammaln(t + 1) - log_dfact
    return np.where(t % 2 == 0, 1.0, -1.0) * np.exp(log_mag)


def _unit_hankel(N, l, kappa):  # noqa: E741
    """int_0^inf r**N exp(-r) j_l(kappa r) dr for N >= l + 2."""
    kappa = np.asarray(kappa, dtype=float)
    out = np.empty_like(kappa)
    small = kappa < SERIES_SWITCH
    if np.any(small):
        ks = kappa[small]
        coef = _series_coefficients(N, l)
        k2 = ks * ks
        acc = np.zeros_like(ks)
        for c in coef[::-1]:
            acc = acc * k2 + c
        out[small] = acc * ks**l
    if np.any(~small):
        kb = kappa[~small]
        # j_l = Re h_l^(1) with h_l^(1)(x) = (-i)**(l+1) e^{ix}/x sum_m i**m (l+m)!/(m!(l-m)!) (2x)**-m;
        # every term integrates in closed form against r**N exp(-r).
        acc = np.zeros(kb.shape, dtype=complex)
        one_minus = 1.0 - 1j * kb
        for m in range(l + 1):
            cm = math.factorial(l + m) / (math.factorial(m) * math.factorial(l - m) * 2.0**m)
            acc += (1j) ** m * cm * math.gamma(N - m) * kb ** (-1.0 - m) / one_minus ** (N - m)
        out[~small] = np.real((-1j) ** (l + 1) * acc)
    return out


def sto_hankel(n, zeta, l, k):  # noqa: E741
    """Closed-form ``int_0^inf r**(n-1) exp(-zeta r) j_l(k r) r**2 dr`` (unnormalized STO)."""
    if n < l + 1:
        raise ValueError("STO transform needs n >= l + 1")
    k = np.asarray(k, dtype=float)
    return zeta ** (-(n + 2)) * _unit_hankel(n + 1, l, k / zeta)


_ZERO_CACHE = {}


def spherical_jn_zeros(l, count):  # noqa: E741
    """First ``count`` positive zeros of the spherical Bessel function j_l."""
    have = _ZERO_CACHE.get(l)
    if have is not None and have.size >= count:
        return have[:count]
    count = max(count, 2 * (have.size if have is not None else 0), 64)
    if l == 0:
        zeros = np.pi * np.arange(1, count + 1)
    else:
        # Zeros of j_l interlace those of j_{l-1}: one in each gap after the first zero.
        outer = spherical_jn_zeros(l - 1, count + 1)
        a, b = outer[:-1].copy(), outer[1:].copy()
        fa = spherical_jn(l, a)
        for _ in range(64):
            mid = 0.5 * (a + b)
            fm = spherical_jn(l, mid)
            left = np.sign(fm) == np.sign(fa)
            a = np.where(left, mid, a)
            fa = np.where(left, fm, fa)
            b = np.where(left, b, mid)
        zeros = 0.5 * (a + b)
    _ZERO_CACHE[l] = zeros
    return zeros


def wynn_epsilon(partial_sums):
    """Extrapolate a sequence of partial sums with Wynn's epsilon algorithm.

    Returns ``(estimate, error)`` where ``error`` is the change between the
    last two even-column estimates.
    """
    prev = np.zeros(len(partial_sums) + 1)
    cur = np.asarray(partial_sums, dtype=float)
    estimates = [cur[-1]]
    column = 0
    while cur.size > 1:
        d = np.diff(cur)
        if np.any(d == 0.0):
            idx = int(np.flatnonzero(d == 0.0)[-1])
            return float(cur[idx + 1]), 0.0
        nxt = prev[1 : cur.size] + 1.0 / d
        prev, cur = cur, nxt
        column += 1
        if column % 2 == 0:
            estimates.append(cur[-1])
    if len(estimates) < 2:
        return float(estimates[-1]), float("inf")
    return float(estimates[-1]), float(abs(estimates[-1] - estimates[-2]))


DIRECT_PANELS = 400
ACCEL_PANELS = 40
PANEL_ORDER = 16


def _hankel_at(radial, l, k, r_max, r_scale):  # noqa: E741
    if k == 0.0:
        if l > 0:
            return 0.0
        edges = r_max * 2.0 ** -np.arange(60, -1, -1, dtype=float)
        edges = np.concatenate(([0.0], edges))
        t, w = gauss_legendre(PANEL_ORDER)
        a, h = edges[:-1], np.diff(edges)
        x = (a[:, None] + h[:, None] * t).ravel()
        return float(np.dot((h[:, None] * w).ravel(), radial(x) * x * x))

    accelerate = k * r_max / np.pi > DIRECT_PANELS
    if accelerate:
        r_smooth = min(40.0 * r_scale, r_max)
        zeros = spherical_jn_zeros(l, int(k * r_smooth / np.pi) + ACCEL_PANELS + l + 4) / k
        n_direct = max(int(np.searchsorted(zeros, r_smooth)), 1)
        panel_ends = zeros[: n_direct + ACCEL_PANELS]
    else:
        zeros = spherical_jn_zeros(l, int(k * r_max / np.pi) + l + 2) / k
        panel_ends = np.append(zeros[zeros < r_max], r_max)

    top = panel_ends[-1]
    core = top * 2.0 ** -np.arange(60, -1, -1, dtype=float)
    core = core[core > 1e-3 * r_scale]
    edges = np.unique(np.concatenate(([0.0], core, panel_ends)))
    t, w = gauss_legendre(PANEL_ORDER)
    a, h = edges[:-1], np.diff(edges)
    x = (a[:, None] + h[:, None] * t).ravel()
    vals = radial(x) * x * x * spherical_jn(l, k * x)
    sub = (vals.reshape(a.size, -1) @ w) * h
    # Sum subintervals into zero-to-zero panels.
    panel_of = np.searchsorted(panel_ends, edges[1:], side="left")
    panels = np.bincount(panel_of, weights=sub, minlength=panel_ends.size)[: panel_ends.size]
    if not accelerate:
        return float(panels.sum())
    head = panels[:-ACCEL_PANELS].sum()
    partial = head + np.cumsum(panels[-ACCEL_PANELS:])
    estimate, _ = wynn_epsilon(partial)
    return float(estimate)


def hankel_quadrature(radial, l, k, r_max, r_scale):  # noqa: E741
    """Numerical ``sqrt(2/pi) int_0^inf radial(r) j_l(k r) r**2 dr``.

    The integral is cut at ``r_max`` and split at the zeros of ``j_l(k r)``;
    each sub-panel gets a Gauss-Legendre rule, with additional geometric
    panels down to ``1e-3 * r_scale`` to resolve the innermost structure.
    When more than ``DIRECT_PANELS`` oscillations fit below ``r_max`` the
    alternating panel sums beyond ``40 * r_scale`` are extrapolated with
    Wynn's epsilon algorithm instead of being summed out.
    """
    k = np.atleast_1d(np.asarray(k, dtype=float))
    out = np.array([_hankel_at(radial, l, float(kk), r_max, r_scale) for kk in k])
    return math.sqrt(2.0 / math.pi) * out


def _orbital_rmax(orbital, cutoff=1e-18):
    """Radius beyond which every primitive's r**2-weighted envelope is below ``cutoff``."""
    r = 1.0
    for c, p in orbital.terms:
        # envelope |c| N r**(n+1) exp(-zeta r); step outward until negligible.
        rr = (p.n + 1) / p.zeta
        while abs(c) * p.norm * rr ** (p.n + 1) * math.exp(-p.zeta * rr) > cutoff:
            rr *= 1.25
        r = max(r, rr)
    return r


def momentum_orbital(orbital, method="analytic"):
    """Radial momentum amplitude ``k -> sqrt(2/pi) int R(r) j_l(k r) r**2 dr``.

    ``method="analytic"`` sums closed-form STO transforms; ``"quadrature"``
    integrates the orbital numerically between Bessel zeros.
    """
    if method == "analytic":
        coefs = [c * p.norm for c, p in orbital.terms]
        prims = orbital.primitives

        def amplitude(k):
            k = np.asarray(k, dtype=float)
            out = np.zeros_like(k)
            for c, p in zip(coefs, prims):
                out += c * sto_hankel(p.n, p.zeta, orbital.l, k)
            return math.sqrt(2.0 / math.pi) * out

        return amplitude
    if method == "quadrature":
        r_max = _orbital_rmax(orbital)
        r_scale = 1.0 / orbital.zeta_max
        return lambda k: hankel_quadrature(orbital.radial, orbital.l, k, r_max, r_scale).reshape(
            np.shape(k)
        )
    raise ValueError(f"unknown transform method {method!r}")


class _MomentumEvaluator:
    """n(k) for one atom; primitives shared by orbitals of equal l are transformed once."""

    def __init__(self, atom, method):
        orbitals = [o.normalized() for o in atom.orbitals]
        self.scale = 1.0 / (4.0 * np.pi * _electron_count(atom))
        self.method = method
        self.groups = []
        if method == "analytic":
            by_l = {}
            for o in orbitals:
                by_l.setdefault(o.l, []).append(o)
            for l, orbs in by_l.items():  # noqa: E741
                prims = sorted({(p.n, p.zeta) for o in orbs for p in o.primitives})
                index = {pz: i for i, pz in enumerate(prims)}
                mat = np.zeros((len(orbs), len(prims)))
                for row, o in enumerate(orbs):
                    for c, p in o.terms:
                        mat[row, index[(p.n, p.zeta)]] += c * p.norm
                occ = np.array([o.occupation for o in orbs])
                self.groups.append((l, prims, mat, occ))
        else:
            self.amplitudes = [(o.occupation, momentum_orbital(o, method)) for o in orbitals]
        self._cache = {}

    def __call__(self, k):
        k = np.asarray(k, dtype=float)
        key = (k.shape, hashlib.blake2b(k.tobytes(), digest_size=16).digest())
        hit = self._cache.get(key)
        if hit is not None:
            return hit.copy()
        flat = k.ravel()
        out = np.zeros_like(flat)
        if self.method == "analytic":
            for l, prims, mat, occ in self.groups:  # noqa: E741
                table = np.array([sto_hankel(n, z, l, flat) for n, z in prims])
                amp = math.sqrt(2.0 / math.pi) * (mat @ table)
                out += occ @ (amp * amp)
        else:
            for occ, amp in self.amplitudes:
                out += occ * amp(flat) ** 2
        out = (out * self.scale).reshape(k.shape)
        if len(self._cache) > 16:
            self._cache.clear()
        self._cache[key] = out
        return out.copy()


def momentum_density(atom, method="analytic"):
    """n(k) = sum occ |phi(k)|**2 / (4 pi N_e), normalized to one."""
    return RadialDensity(_MomentumEvaluator(atom, method), "momentum", float(atom.zeta_max))


class Moments(NamedTuple):
    r2: float
    T: float


def atom_moments(atom, spec=None, rho=None, n_k=None):
    """<r^2> (bohr^2) and kinetic energy per electron T = <k^2>/2 (hartree)."""
    spec = spec or QuadratureSpec()
    rho = rho or position_density(atom)
    n_k = n_k or momentum_density(atom)
    return Moments(radial_moment(rho, 2, spec), 0.5 * radial_moment(n_k, 2, spec))
