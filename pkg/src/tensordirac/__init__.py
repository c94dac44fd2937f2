"""Exact exterior calculus on Minkowski space and a tensor model of the 2D Dirac equation."""

from .algebra import AntisymTensor, basis, conjugate, covector, dot, hodge, reflect, wedge
from .dirac import (
    Bispinor3D,
    ChargeValue,
    DispersionResult,
    PhotonSpec,
    SignPair,
    SpinorPair2D,
    assembled_dirac_2d,
    charge,
    conjugation_symmetry_check,
    dirac_residual_2d,
    dirac_residual_3d,
    dispersion_solve,
    free_catalogue,
    make_electron_candidate,
    make_photon,
    perturbed_residual,
    polarised_residual,
    theorem1_check,
)
from .fields import (
    ExpField,
    WaveCovector,
    codiff,
    connection_coeffs,
    constant_field,
    ext_d,
    ext_dA,
    field_algebra,
    perp,
    plane_wave,
    scalar_wave,
    torsion_tensor,
    zero_field,
)
from .lorentz import LorentzMap, build_map, compose, transform_field, transform_tensor
from .report import VerificationReport
from .scalars import I, ComplexRational

__version__ = "0.1.0"
