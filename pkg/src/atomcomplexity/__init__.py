"""Shannon, disorder/order and complexity measures of neutral atoms from
Roothaan-Hartree-Fock Slater-type-orbital densities."""
from .measures import (
    DEFAULT_GAMMAS,
    S_MIN,
    BoundViolation,
    GammaParams,
    MeasureSet,
    NormalizationError,
    ProbabilityVector,
    RadialDensity,
    entropy_bounds,
    lmc_complexity,
    order_disorder,
    sdl_gamma,
    sdl_gamma_max,
    shannon_radial,
    onicescu_radial,
)
from .quadrature import QuadratureError, QuadratureSpec, integrate_semi_infinite, radial_moment
from .rhf import (
    AtomBasis,
    Orbital,
    StoPrimitive,
    atom_moments,
    bundled_library,
    hydrogenic_basis,
    load_basis_library,
    momentum_density,
    parse_basis_library,
    position_density,
)
from .scan import ScanTable, compute_atom_measures, fit_log, local_extrema, scan_range, similarity

__version__ = "0.1.0"
