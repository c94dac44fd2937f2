"""Photons, electrons and the 2D Dirac equation as a torsion-perturbed Maxwell equation.

Sign conventions
----------------
``alpha`` fixes the mass oscillation ``exp(-i alpha x^3)`` and ``beta`` the
polarisation ``*du = i beta du``.  The photon is expressed in the frame where
its wave covector is ``k = (1, 0, 0, alpha)``.  Covariant derivatives on
spinor components are ``nabla^beta = partial + i beta A``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .algebra import covector
from .errors import ChargeDegenerateError, ChargeUndefinedError, PreconditionError, RankError
from .fields import (
    ExpField,
    WaveCovector,
    constant_field,
    ext_d,
    ext_dA,
    mass_shift,
    partial,
    perp,
    plane_wave,
    scalar_wave,
    zero_field,
)
from .report import VerificationReport, timed
from .scalars import I, ZERO, ComplexRational, Scalar, as_scalar

__all__ = [
    "SignPair",
    "SpinorPair2D",
    "Bispinor3D",
    "PhotonSpec",
    "ChargeValue",
    "DispersionResult",
    "photon_wave",
    "make_photon",
    "make_electron_candidate",
    "polarised_residual",
    "perturbed_residual",
    "nabla",
    "dirac_residual_2d",
    "dirac_residual_3d",
    "assembled_dirac_2d",
    "theorem1_check",
    "conjugation_symmetry_check",
    "charge",
    "charge_witness",
    "dispersion_solve",
    "free_catalogue",
]


# -- value types ------------------------------------------------------------


@dataclass(frozen=True)
class SignPair:
    alpha: int
    beta: int

    def __post_init__(self):
        if self.alpha not in (1, -1) or self.beta not in (1, -1):
            raise ValueError(f"alpha and beta must be +1 or -1, got ({self.alpha}, {self.beta})")

    @property
    def ab(self) -> int:
        return self.alpha * self.beta

    def flipped(self) -> SignPair:
        return SignPair(-self.alpha, -self.beta)

    @classmethod
    def all(cls) -> list[SignPair]:
        return [cls(a, b) for a in (1, -1) for b in (1, -1)]


def _require_2d_scalar(name: str, f: ExpField) -> None:
    if f.rank != 0:
        raise RankError(f"{name} must be a scalar field, got rank {f.rank}")
    if any(k[3] for k in f.wave_covectors()):
        raise PreconditionError(f"{name} must not depend on x^3 (every mode needs k_3 = 0)")


@dataclass(frozen=True)
class SpinorPair2D:
    """The pair ``(phi, chi)`` of scalar functions of ``(x^0, x^1, x^2)``."""

    phi: ExpField
    chi: ExpField

    def __post_init__(self):
        _require_2d_scalar("phi", self.phi)
        _require_2d_scalar("chi", self.chi)
        if self.phi.orientation != self.chi.orientation:
            raise PreconditionError("phi and chi live in frames of opposite orientation")

    @classmethod
    def zero(cls) -> SpinorPair2D:
        return cls(zero_field(0), zero_field(0))

    def is_zero(self) -> bool:
        return self.phi.is_zero() and self.chi.is_zero()


@dataclass(frozen=True)
class Bispinor3D:
    """``psi = (phi1, phi2, chi1, chi2)`` in the standard representation."""

    phi1: ExpField
    phi2: ExpField
    chi1: ExpField
    chi2: ExpField

    def __post_init__(self):
        for name in ("phi1", "phi2", "chi1", "chi2"):
            if getattr(self, name).rank != 0:
                raise RankError(f"{name} must be a scalar field")

    def components(self) -> tuple[ExpField, ExpField, ExpField, ExpField]:
        return self.phi1, self.phi2, self.chi1, self.chi2


@dataclass(frozen=True)
class PhotonSpec:
    signs: SignPair
    C: ComplexRational = ZERO

    def __post_init__(self):
        object.__setattr__(self, "C", as_scalar(self.C))


@dataclass(frozen=True)
class ChargeValue:
    c: int
    witness: ComplexRational


@dataclass(frozen=True)
class DispersionResult:
    epsilon: Fraction
    branch: str
    A0: Fraction = Fraction(0)
    beta: int = 1


# -- constructors -------------------------------------------------------------


def photon_wave(signs: SignPair) -> WaveCovector:
    """Canonical forward-cone photon wave covector ``(1, 0, 0, alpha)``."""
    return WaveCovector(1, 0, 0, signs.alpha)


def make_photon(spec: PhotonSpec | SignPair, C: Scalar | str | None = None) -> ExpField:
    """``u = (C, 1, -i alpha beta, C alpha) exp(-i(x^0 + alpha x^3))``."""
    if isinstance(spec, SignPair):
        spec = PhotonSpec(spec, ZERO if C is None else as_scalar(C))
    a, ab = spec.signs.alpha, spec.signs.ab
    coeff = covector([spec.C, 1, ComplexRational(0, -ab), spec.C * a])
    return plane_wave(photon_wave(spec.signs), coeff)


def make_electron_candidate(signs: SignPair, s: SpinorPair2D) -> ExpField:
    """``v = {phi (1,0,0,alpha) - chi (0,1,i alpha beta,0)} exp(-i alpha x^3)``.

    These are exactly the vectors orthogonal to the photon and its wave covector.
    """
    e_phi = constant_field(covector([1, 0, 0, signs.alpha]), s.phi.orientation)
    e_chi = constant_field(covector([0, 1, ComplexRational(0, signs.ab), 0]), s.phi.orientation)
    return (s.phi.wedge(e_phi) - s.chi.wedge(e_chi)).shift(mass_shift(signs.alpha))


# -- residuals ----------------------------------------------------------------


def _self_dual_residual(f: ExpField, beta: int) -> ExpField:
    return f.hodge() - f.scale(ComplexRational(0, beta))


def polarised_residual(u: ExpField, beta: int) -> ExpField:
    """``*du - i beta du``."""
    if u.rank != 1:
        raise RankError("the polarised Maxwell equation acts on rank-1 fields")
    return _self_dual_residual(ext_d(u), beta)


def perturbed_residual(v: ExpField, A: ExpField, beta: int) -> ExpField:
    """``*d_A v - i beta d_A v``."""
    if v.rank != 1:
        raise RankError("the perturbed Maxwell equation acts on rank-1 fields")
    return _self_dual_residual(ext_dA(v, A), beta)


def nabla(f: ExpField, mu: int, A: ExpField, charge_sign: int = 1) -> ExpField:
    """``(partial_mu + i charge_sign A_mu) f`` for a scalar field ``f``."""
    return partial(f, mu) + A.component(mu).wedge(f).scale(ComplexRational(0, charge_sign))


def _require_real_rank1(A: ExpField) -> None:
    if A.rank != 1:
        raise RankError(f"the potential must be a rank-1 field, got rank {A.rank}")
    if not A.is_real():
        raise PreconditionError("the potential A must be real")


def _require_2d_potential(A: ExpField) -> None:
    _require_real_rank1(A)
    if any(k[3] for k in A.wave_covectors()):
        raise PreconditionError("the potential must not depend on x^3 (every mode needs k_3 = 0)")
    if not A.component(3).is_zero():
        raise PreconditionError("the potential must satisfy A_3 = 0")


def dirac_residual_2d(s: SpinorPair2D, A: ExpField, signs: SignPair) -> tuple[ExpField, ExpField]:
    """Both rows of the combined particle/antiparticle 2D Dirac operator.

    ``[[i n0 - 1, i n1 - ab n2], [-i n1 - ab n2, -i n0 - 1]] (phi, chi)``
    with ``n = nabla^beta``.
    """
    _require_2d_potential(A)
    b, ab = signs.beta, signs.ab
    phi, chi = s.phi, s.chi
    n = {(f, mu): nabla(g, mu, A, b) for f, g in (("phi", phi), ("chi", chi)) for mu in range(3)}
    row1 = n["phi", 0].scale(I) - phi + n["chi", 1].scale(I) - n["chi", 2].scale(ab)
    row2 = -n["phi", 1].scale(I) - n["phi", 2].scale(ab) - n["chi", 0].scale(I) - chi
    return row1, row2


def _dependent_row(s: SpinorPair2D, A: ExpField, signs: SignPair) -> ExpField:
    # third row of the component reduction: (n1 - i ab n2) phi + (n0 - i) chi
    b, ab = signs.beta, signs.ab
    return (
        nabla(s.phi, 1, A, b)
        - nabla(s.phi, 2, A, b).scale(ComplexRational(0, ab))
        + nabla(s.chi, 0, A, b)
        - s.chi.scale(I)
    )


def dirac_residual_3d(psi: Bispinor3D, A: ExpField) -> tuple[ExpField, ExpField, ExpField, ExpField]:
    """The four rows of the 3D Dirac operator with ``nabla = partial + i A``."""
    _require_real_rank1(A)
    phi1, phi2, chi1, chi2 = psi.components()

    def n(f, mu):
        return nabla(f, mu, A, 1)

    def i(f):
        return f.scale(I)

    r1 = i(n(phi1, 0)) - phi1 + i(n(chi1, 3)) + i(n(chi2, 1)) + n(chi2, 2)
    r2 = i(n(phi2, 0)) - phi2 + i(n(chi1, 1)) - n(chi1, 2) - i(n(chi2, 3))
    r3 = -i(n(phi1, 3)) - i(n(phi2, 1)) - n(phi2, 2) - i(n(chi1, 0)) - chi1
    r4 = -i(n(phi1, 1)) + n(phi1, 2) + i(n(phi2, 3)) - i(n(chi2, 0)) - chi2
    return r1, r2, r3, r4


def assembled_dirac_2d(psi: Bispinor3D, A: ExpField, beta: int = 1) -> tuple[ExpField, ExpField, ExpField, ExpField]:
    """Four-row 2D Dirac residual built from two :func:`dirac_residual_2d` calls.

    Rows 1 and 4 act on ``(phi1, chi2)`` with ``alpha = -beta``; rows 2 and 3
    act on ``(phi2, chi1)`` with ``alpha = beta``.  With ``beta = -1`` this is
    the antiparticle equation.
    """
    outer = dirac_residual_2d(SpinorPair2D(psi.phi1, psi.chi2), A, SignPair(-beta, beta))
    inner = dirac_residual_2d(SpinorPair2D(psi.phi2, psi.chi1), A, SignPair(beta, beta))
    return outer[0], inner[0], inner[1], outer[1]


# -- checkers -----------------------------------------------------------------


def theorem1_check(
    s: SpinorPair2D,
    A: ExpField,
    signs: SignPair,
    residual_2d: Callable[[SpinorPair2D, ExpField, SignPair], tuple[ExpField, ExpField]] = dirac_residual_2d,
    C_values: tuple = (0, 1, I),
) -> VerificationReport:
    """Verify that the perturbed Maxwell system and the 2D Dirac system coincide.

    Builds ``v`` from ``s``, computes the Maxwell residual ``R`` and the Dirac
    residual ``D`` and checks, as exact field identities,

    * ``R^{03} = ab D_1 e``, ``R^{13} = ab D_2 e`` and ``R^{23} = i D_2 e`` with
      ``e = exp(-i alpha x^3)``, the last row also against its explicit form;
    * ``*R = -i beta R``, so the remaining components carry no information;
    * ``v`` is orthogonal to the photon (for each gauge constant) and to ``k``;
    * ``R == 0`` exactly when ``D == 0``.

    ``residual_2d`` may be swapped for a deliberately wrong operator to run
    negative controls.
    """
    _require_2d_potential(A)
    report = VerificationReport(
        name=f"theorem1[alpha={signs.alpha:+d},beta={signs.beta:+d}]",
        anchor="*d_A v = i beta d_A v, v perp u, v perp k  <=>  2D Dirac system",
    )
    with timed(report):
        e = mass_shift(signs.alpha)
        v = make_electron_candidate(signs, s)
        R = perturbed_residual(v, A, signs.beta)
        D1, D2 = residual_2d(s, A, signs)
        ab = signs.ab

        report.add_residual("R^03 - ab*D1", R.upper_component(0, 3) - D1.shift(e).scale(ab))
        report.add_residual("R^13 - ab*D2", R.upper_component(1, 3) - D2.shift(e).scale(ab))
        report.add_residual("R^23 - i*D2", R.upper_component(2, 3) - D2.shift(e).scale(I))
        report.add_residual("R^23 - row3", R.upper_component(2, 3) - _dependent_row(s, A, signs).shift(e))
        report.add_residual("*R + i*beta*R", R.hodge() + R.scale(ComplexRational(0, signs.beta)))

        kfield = constant_field(photon_wave(signs).as_tensor(), v.orientation)
        if not perp(v, kfield):
            report.fail("v perp k", "v is not orthogonal to the photon wave covector")
        for C in C_values:
            u = make_photon(PhotonSpec(signs, as_scalar(C)))
            if not perp(v, u):
                report.fail(f"v perp u[C={as_scalar(C)}]", "v is not orthogonal to the photon")

        r_zero = R.is_zero()
        d_zero = D1.is_zero() and D2.is_zero()
        if r_zero != d_zero:
            report.fail("equivalence", {"maxwell_residual_zero": r_zero, "dirac_residual_zero": d_zero})
        report.details.update(
            alpha=signs.alpha,
            beta=signs.beta,
            maxwell_residual_zero=r_zero,
            dirac_residual_zero=d_zero,
            v_modes=len(v),
        )
    return report


def conjugation_symmetry_check(u: ExpField, v: ExpField, A: ExpField, signs: SignPair) -> VerificationReport:
    """Complex conjugation maps ``(alpha, beta)`` solutions to ``(-alpha, -beta)`` solutions.

    The residual identities are checked whether or not ``u`` and ``v`` solve
    anything; solution status is reported in ``details``.
    """
    report = VerificationReport(
        name=f"conjugation-symmetry[alpha={signs.alpha:+d},beta={signs.beta:+d}]",
        anchor="conj(*dw - i b dw) = *d conj(w) + i b d conj(w), w in {u, v}",
    )
    with timed(report):
        b = signs.beta
        ub, vb = u.conjugate(), v.conjugate()
        pu, pub = polarised_residual(u, b), polarised_residual(ub, -b)
        qv, qvb = perturbed_residual(v, A, b), perturbed_residual(vb, A, -b)
        report.add_residual("photon", pub - pu.conjugate())
        report.add_residual("electron", qvb - qv.conjugate())
        if perp(v, u) != perp(vb, ub):
            report.fail("perp", "orthogonality of v and u is not preserved by conjugation")
        report.details.update(
            photon_solves=pu.is_zero(),
            conjugate_photon_solves=pub.is_zero(),
            electron_solves=qv.is_zero(),
            conjugate_electron_solves=qvb.is_zero(),
        )
    return report


# -- charge -----------------------------------------------------------------


def charge_witness(u: ExpField) -> ExpField:
    """The scalar field ``i * (du ^ conj(R du))``."""
    if u.rank != 1:
        raise RankError("charge is defined for rank-1 fields")
    F = ext_d(u)
    return F.wedge(F.reflect().conjugate()).hodge().scale(I)


def charge(u: ExpField) -> ChargeValue:
    """``c = -sgn(i * (du ^ conj(R du)))`` for fields whose witness is constant."""
    w = charge_witness(u)
    const = w.constant_value()
    if const is None:
        raise ChargeUndefinedError("charge undefined for this field: the witness depends on x")
    value = const.value()
    if not value:
        raise ChargeDegenerateError("charge degenerate: the witness vanishes")
    if not value.is_real():
        raise RuntimeError(f"internal consistency: charge witness {value} is not real")
    return ChargeValue(c=-1 if value.re > 0 else 1, witness=value)


# -- free particles and dispersion --------------------------------------------


def free_catalogue(signs: SignPair, C: Scalar | str = 0) -> tuple[ExpField, ExpField]:
    """Free photon ``u`` and free electron/positron ``v = (1,0,0,alpha) exp(-i k.x)``.

    ``v`` is built from its explicit formula and then confirmed to be the
    gradient of ``i exp(-i k.x)`` and to share the photon's wave covector.
    """
    k = photon_wave(signs)
    u = make_photon(PhotonSpec(signs, as_scalar(C)))
    v = plane_wave(k, covector([1, 0, 0, signs.alpha]))
    if v != ext_d(scalar_wave(k, I)):
        raise RuntimeError("internal consistency: free electron is not the expected gradient")
    if v.wave_covectors() != u.wave_covectors():
        raise RuntimeError("internal consistency: electron and photon wave covectors differ")
    return u, v


def _ansatz_coefficients(epsilon: Fraction, A: ExpField, signs: SignPair) -> tuple[ComplexRational, ExpField]:
    k = WaveCovector(epsilon, 0, 0, 0)
    s = SpinorPair2D(scalar_wave(k), zero_field(0))
    row1, row2 = dirac_residual_2d(s, A, signs)
    if any(q != k for q in row1.wave_covectors()):
        raise PreconditionError("the potential does not preserve the plane-wave ansatz")
    return row1.coefficient(k).value(), row2


def _solve_epsilon(A0: Fraction, signs: SignPair) -> Fraction:
    A = constant_field(covector([A0, 0, 0, 0]))
    # row 1 is affine in epsilon: c(eps) = c(0) + eps (c(1) - c(0))
    c0, _ = _ansatz_coefficients(Fraction(0), A, signs)
    c1, _ = _ansatz_coefficients(Fraction(1), A, signs)
    slope = c1 - c0
    if not slope:
        raise PreconditionError("no plane-wave solution of the form exp(-i eps x^0)")
    root = -c0 / slope
    if not root.is_real():
        raise PreconditionError(f"the ansatz frequency {root} is not real")
    eps = root.re
    r1, r2 = _ansatz_coefficients(eps, A, signs)
    if r1 or not r2.is_zero():
        raise PreconditionError("no plane-wave solution of the form exp(-i eps x^0)")
    return eps


def dispersion_solve(A0: Fraction | int | str, signs: SignPair) -> DispersionResult:
    """Frequency of ``phi = exp(-i eps x^0), chi = 0`` in the constant potential ``(A0, 0, 0, 0)``.

    The branch is read off from ``d eps / d A0``: ``+1`` is the electron
    (``eps = 1 + A0``), ``-1`` the positron (``eps = 1 - A0``).
    """
    A0 = Fraction(A0)
    eps = _solve_epsilon(A0, signs)
    slope = _solve_epsilon(A0 + 1, signs) - eps
    if slope == 1:
        branch = "electron"
    elif slope == -1:
        branch = "positron"
    else:
        raise RuntimeError(f"internal consistency: unexpected frequency slope {slope}")
    return DispersionResult(epsilon=eps, branch=branch, A0=A0, beta=signs.beta)

