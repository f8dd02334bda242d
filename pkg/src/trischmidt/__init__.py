"""Schmidt decompositions and bipartition purities for three coupled oscillators.

The library computes the amplitude tables of tripartite oscillator
eigenstates under a three-angle normal-mode rotation, the reduced
density-matrix spectra and purities of the three one-vs-two splits, the
physical-parameter map for the coupled system, and independent
Gauss-Hermite quadrature oracles cross-checking every closed form.
"""

from .entanglement import (
    BipartiteFactorization,
    Bipartition,
    ModeSpectrum,
    SchmidtTerm,
    bipartite_factorization,
    closed_form_purity,
    jacobi_coefficients,
    makarov_lambda,
    mode_spectrum,
    purity,
    purity_direct,
    von_neumann_entropy,
)
from .oscillator import (
    Angles,
    DegenerateFrequencyError,
    Excitation,
    Masses,
    MixingMatrix,
    NormalFrequenciesSq,
    PhysicalScales,
    coupling_matrix,
    coupling_ratios,
    coupling_ratios_degenerate,
    energy,
    frequency_geometry,
    mass_scalings,
    mixing_matrix,
    normal_coordinates,
)
from .quadrature import (
    QuadratureRule,
    coefficient_overlap,
    coefficient_overlap_2d,
    default_rule_order,
    gauss_hermite_rule,
)
from .schmidt import (
    SchmidtMatrix,
    coefficients_k16,
    coefficients_sum,
    selection_rule,
    to_document,
    wavefunction_eval,
)
from .specfun import (
    DEGREE_LIMIT,
    DegreeLimitError,
    K16Arguments,
    K16PoleError,
    exton_k16,
    hermite_function,
    hermite_phys,
    jacobi,
    legendre,
    pochhammer,
)
from .surface import SurfaceRequest, render_csv, surface_grid
from .verify import CheckResult, VerifyReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "Angles",
    "BipartiteFactorization",
    "Bipartition",
    "CheckResult",
    "DEGREE_LIMIT",
    "DegenerateFrequencyError",
    "DegreeLimitError",
    "Excitation",
    "K16Arguments",
    "K16PoleError",
    "Masses",
    "MixingMatrix",
    "ModeSpectrum",
    "NormalFrequenciesSq",
    "PhysicalScales",
    "QuadratureRule",
    "SchmidtMatrix",
    "SchmidtTerm",
    "SurfaceRequest",
    "VerifyReport",
    "bipartite_factorization",
    "closed_form_purity",
    "coefficient_overlap",
    "coefficient_overlap_2d",
    "coefficients_k16",
    "coefficients_sum",
    "coupling_matrix",
    "coupling_ratios",
    "coupling_ratios_degenerate",
    "default_rule_order",
    "energy",
    "exton_k16",
    "frequency_geometry",
    "gauss_hermite_rule",
    "hermite_function",
    "hermite_phys",
    "jacobi",
    "jacobi_coefficients",
    "legendre",
    "makarov_lambda",
    "mass_scalings",
    "mixing_matrix",
    "mode_spectrum",
    "normal_coordinates",
    "pochhammer",
    "purity",
    "purity_direct",
    "render_csv",
    "run_suite",
    "selection_rule",
    "surface_grid",
    "to_document",
    "von_neumann_entropy",
    "wavefunction_eval",
]
