"""Plane-wave fields and the differential operators acting on them.

An :class:`ExpField` is a finite sum ``sum_k c_k exp(-i k.x)`` with constant
antisymmetric coefficients ``c_k``.  The wave covector ``k`` is stored with
lower indices and paired with ``x`` directly, ``k.x = k_mu x^mu``.  Sums of
distinct exponentials are linearly independent, so the canonical mode map
is a faithful representation and field equality is mode-map equality.

On such fields ``d/dx^mu`` is multiplication by ``-i k_mu``, and a product of
fields adds wave covectors.  Everything here is therefore exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from . import algebra
from .algebra import DIM, METRIC, AntisymTensor, covector, levi_civita, metric_sign
from .errors import OrientationError, PreconditionError, RankError
from .scalars import ComplexRational, Scalar, as_scalar

__all__ = [
    "WaveCovector",
    "ExpField",
    "plane_wave",
    "constant_field",
    "zero_field",
    "scalar_wave",
    "field_algebra",
    "ext_d",
    "codiff",
    "partial",
    "connection_coeffs",
    "torsion_tensor",
    "ext_dA",
    "perp",
    "mass_shift",
]


@dataclass(frozen=True, order=True)
class WaveCovector:
    """Lower-index wave covector ``k_mu`` with exact rational entries."""

    k: tuple[Fraction, Fraction, Fraction, Fraction]

    def __init__(self, *components):
        if len(components) == 1 and not isinstance(components[0], (int, Fraction, str)):
            components = tuple(components[0])
        if len(components) != DIM:
            raise ValueError(f"a wave covector has {DIM} components, got {len(components)}")
        ks = []
        for c in components:
            if isinstance(c, str):
                c = Fraction(c)
            elif isinstance(c, bool) or not isinstance(c, (int, Fraction)):
                raise TypeError(f"wave covector entries must be rational, got {type(c).__name__}")
            ks.append(Fraction(c))
        object.__setattr__(self, "k", tuple(ks))

    @classmethod
    def zero(cls) -> WaveCovector:
        return cls(0, 0, 0, 0)

    def __getitem__(self, mu: int) -> Fraction:
        return self.k[mu]

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.k)

    def __add__(self, other: WaveCovector) -> WaveCovector:
        return WaveCovector(*(a + b for a, b in zip(self.k, other.k)))

    def __sub__(self, other: WaveCovector) -> WaveCovector:
        return WaveCovector(*(a - b for a, b in zip(self.k, other.k)))

    def __neg__(self) -> WaveCovector:
        return WaveCovector(*(-a for a in self.k))

    def is_zero(self) -> bool:
        return not any(self.k)

    def as_tensor(self) -> AntisymTensor:
        return covector(self.k)

    def __repr__(self) -> str:
        return "WaveCovector(" + ", ".join(f"'{a}'" for a in self.k) + ")"


def mass_shift(alpha: int) -> WaveCovector:
    """Wave covector of the factor ``exp(-i alpha x^3)``."""
    return WaveCovector(0, 0, 0, alpha)


def _check_orientation(orientation: int) -> None:
    if orientation not in (1, -1):
        raise ValueError(f"orientation must be +1 or -1, got {orientation}")


class ExpField:
    """Finite sum of plane-wave modes sharing one rank.

    ``orientation`` is the value of ``eps_{0123}`` in the frame the
    components are expressed in; it only affects :meth:`hodge`.
    """

    __slots__ = ("rank", "orientation", "_modes")

    def __init__(
        self,
        rank: int,
        modes: Mapping[WaveCovector, AntisymTensor] | Iterable[tuple[WaveCovector, AntisymTensor]] = (),
        orientation: int = 1,
    ):
        if not 0 <= rank <= DIM:
            raise RankError(f"rank must be in 0..{DIM}, got {rank}")
        _check_orientation(orientation)
        pairs = modes.items() if isinstance(modes, Mapping) else modes
        acc: dict[WaveCovector, AntisymTensor] = {}
        for k, c in pairs:
            if not isinstance(k, WaveCovector):
                k = WaveCovector(k)
            if c.rank != rank:
                raise RankError(f"mode coefficient of rank {c.rank} in a rank-{rank} field")
            acc[k] = acc[k] + c if k in acc else c
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "orientation", orientation)
        object.__setattr__(self, "_modes", {k: c for k, c in acc.items() if not c.is_zero()})

    @classmethod
    def _raw(cls, rank: int, modes: dict, orientation: int) -> ExpField:
        obj = object.__new__(cls)
        object.__setattr__(obj, "rank", rank)
        object.__setattr__(obj, "orientation", orientation)
        object.__setattr__(obj, "_modes", modes)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("ExpField is immutable")

    # -- inspection ----------------------------------------------------------

    def modes(self) -> list[tuple[WaveCovector, AntisymTensor]]:
        """Canonical mode list, sorted by wave covector."""
        return sorted(self._modes.items(), key=lambda kc: kc[0].k)

    def wave_covectors(self) -> list[WaveCovector]:
        return sorted(self._modes, key=lambda k: k.k)

    def coefficient(self, k: WaveCovector) -> AntisymTensor:
        return self._modes.get(k, AntisymTensor.zero(self.rank))

    def __len__(self) -> int:
        return len(self._modes)

    def is_zero(self) -> bool:
        return not self._modes

    def is_real(self) -> bool:
        return self == self.conjugate()

    def constant_value(self) -> AntisymTensor | None:
        """The coefficient if the field is a single ``k = 0`` mode (or zero), else None."""
        if not self._modes:
            return AntisymTensor.zero(self.rank)
        if len(self._modes) == 1:
            (k, c), = self._modes.items()
            if k.is_zero():
                return c
        return None

    def component(self, *idx: int) -> ExpField:
        """Scalar field of one covariant component."""
        return ExpField._raw(
            0,
            _clean({k: AntisymTensor._raw(0, _nz({(): c[idx]})) for k, c in self._modes.items()}),
            self.orientation,
        )

    def upper_component(self, *idx: int) -> ExpField:
        """Scalar field of one contravariant component."""
        f = self.component(*idx)
        return f if metric_sign(idx) > 0 else -f

    # -- linear structure ----------------------------------------------------

    def _check_compatible(self, other: ExpField) -> None:
        if self.rank != other.rank:
            raise RankError(f"rank mismatch: {self.rank} vs {other.rank}")
        if self.orientation != other.orientation:
            raise OrientationError("fields are expressed in frames of opposite orientation")

    def __add__(self, other: ExpField) -> ExpField:
        if not isinstance(other, ExpField):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self._modes)
        for k, c in other._modes.items():
            if k in out:
                s = out[k] + c
                if s.is_zero():
                    del out[k]
                else:
                    out[k] = s
            else:
                out[k] = c
        return ExpField._raw(self.rank, out, self.orientation)

    def __neg__(self) -> ExpField:
        return ExpField._raw(self.rank, {k: -c for k, c in self._modes.items()}, self.orientation)

    def __sub__(self, other: ExpField) -> ExpField:
        if not isinstance(other, ExpField):
            return NotImplemented
        return self + (-other)

    def scale(self, z: Scalar | str) -> ExpField:
        z = as_scalar(z)
        if not z:
            return ExpField._raw(self.rank, {}, self.orientation)
        return ExpField._raw(self.rank, {k: c * z for k, c in self._modes.items()}, self.orientation)

    def __mul__(self, z) -> ExpField:
        if isinstance(z, ExpField):
            return self.wedge(z)
        try:
            return self.scale(z)
        except TypeError:
            return NotImplemented

    def __rmul__(self, z) -> ExpField:
        try:
            return self.scale(z)
        except TypeError:
            return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExpField):
            return NotImplemented
        return (
            self.rank == other.rank
            and self.orientation == other.orientation
            and self._modes == other._modes
        )

    def __hash__(self) -> int:
        return hash((self.rank, self.orientation, frozenset(self._modes.items())))

    def __repr__(self) -> str:
        parts = ", ".join(f"{k.k}: {c!r}" for k, c in self.modes())
        return f"ExpField(rank={self.rank}, orientation={self.orientation}, modes={{{parts}}})"

    # -- pointwise exterior algebra ----------------------------------------

    def wedge(self, other: ExpField) -> ExpField:
        if self.orientation != other.orientation:
            raise OrientationError("fields are expressed in frames of opposite orientation")
        rank = self.rank + other.rank
        if rank > DIM:
            raise RankError(f"wedge of ranks {self.rank} and {other.rank} exceeds {DIM}")
        out: dict[WaveCovector, AntisymTensor] = {}
        for k1, c1 in self._modes.items():
            for k2, c2 in other._modes.items():
                k = k1 + k2
                c = algebra.wedge(c1, c2)
                out[k] = out[k] + c if k in out else c
        return ExpField._raw(rank, _clean(out), self.orientation)

    def dot(self, other: ExpField) -> ExpField:
        """Pointwise ``Q.R`` as a scalar field (no conjugation)."""
        self._check_compatible(other)
        out: dict[WaveCovector, AntisymTensor] = {}
        for k1, c1 in self._modes.items():
            for k2, c2 in other._modes.items():
                k = k1 + k2
                c = AntisymTensor._raw(0, _nz({(): algebra.dot(c1, c2)}))
                out[k] = out[k] + c if k in out else c
        return ExpField._raw(0, _clean(out), self.orientation)

    def hodge(self) -> ExpField:
        return ExpField._raw(
            DIM - self.rank,
            {k: algebra.hodge(c, self.orientation) for k, c in self._modes.items()},
            self.orientation,
        )

    def reflect(self) -> ExpField:
        return ExpField._raw(self.rank, {k: algebra.reflect(c) for k, c in self._modes.items()}, self.orientation)

    def conjugate(self) -> ExpField:
        """Complex conjugate: mode ``(k, c)`` becomes ``(-k, conj(c))``."""
        return ExpField._raw(
            self.rank, {-k: algebra.conjugate(c) for k, c in self._modes.items()}, self.orientation
        )

    def shift(self, k: WaveCovector) -> ExpField:
        """Multiply by ``exp(-i k.x)``."""
        return ExpField._raw(self.rank, {q + k: c for q, c in self._modes.items()}, self.orientation)

    def with_orientation(self, orientation: int) -> ExpField:
        """Same components, relabelled frame orientation."""
        _check_orientation(orientation)
        return ExpField._raw(self.rank, dict(self._modes), orientation)


def _nz(c: dict) -> dict:
    return {k: v for k, v in c.items() if v}


def _clean(modes: dict) -> dict:
    return {k: c for k, c in modes.items() if not c.is_zero()}


def plane_wave(k: WaveCovector | Sequence, coeff: AntisymTensor, orientation: int = 1) -> ExpField:
    """Single mode ``coeff * exp(-i k.x)``."""
    if not isinstance(k, WaveCovector):
        k = WaveCovector(k)
    return ExpField(coeff.rank, {k: coeff}, orientation)


def scalar_wave(k: WaveCovector | Sequence, z: Scalar | str = 1, orientation: int = 1) -> ExpField:
    return plane_wave(k, AntisymTensor.scalar(z), orientation)


def constant_field(coeff: AntisymTensor, orientation: int = 1) -> ExpField:
    return plane_wave(WaveCovector.zero(), coeff, orientation)


def zero_field(rank: int, orientation: int = 1) -> ExpField:
    return ExpField(rank, {}, orientation)


_UNARY = {"hodge", "reflect", "conjugate"}
_BINARY = {"add", "wedge", "dot"}


def field_algebra(op: str, f: ExpField, g: ExpField | Scalar | str | None = None) -> ExpField:
    """Dispatch a pointwise exterior-algebra operation by name.

    ``op`` is one of ``add``, ``scale``, ``wedge``, ``hodge``, ``dot``,
    ``reflect``, ``conjugate``.  For ``scale`` the second argument is the scalar.
    """
    if op in _UNARY:
        if g is not None:
            raise TypeError(f"{op} takes a single field")
        return getattr(f, op)()
    if op == "scale":
        return f.scale(g)
    if op in _BINARY:
        if not isinstance(g, ExpField):
            raise TypeError(f"{op} needs a second field")
        return f + g if op == "add" else getattr(f, op)(g)
    raise ValueError(f"unknown field operation {op!r}")


# -- differential operators -------------------------------------------------


def _minus_i_k(k: WaveCovector) -> AntisymTensor:
    return AntisymTensor._raw(1, {(mu,): ComplexRational._make(Fraction(0), -a) for mu, a in enumerate(k.k) if a})


def ext_d(f: ExpField) -> ExpField:
    """Exterior derivative ``d f = partial ^ f``; each mode gets ``(-i k) ^ c``."""
    if f.rank >= DIM:
        raise RankError("exterior derivative of a rank-4 field is not defined here")
    out = {}
    for k, c in f._modes.items():
        dc = algebra.wedge(_minus_i_k(k), c)
        if not dc.is_zero():
            out[k] = dc
    return ExpField._raw(f.rank + 1, out, f.orientation)


def codiff(f: ExpField) -> ExpField:
    """Codifferential realised as ``* d *`` (no extra sign)."""
    if f.rank < 1:
        raise RankError("codifferential of a scalar field is not defined")
    return ext_d(f.hodge()).hodge()


def partial(f: ExpField, mu: int) -> ExpField:
    """Partial derivative of a scalar field along ``x^mu``."""
    if f.rank != 0:
        raise RankError("partial() acts on scalar fields")
    out = {}
    for k, c in f._modes.items():
        if k.k[mu]:
            out[k] = c * ComplexRational._make(Fraction(0), -k.k[mu])
    return ExpField._raw(0, out, f.orientation)


# -- torsion connection -----------------------------------------------------


def _require_real_potential(a: ExpField) -> None:
    if a.rank != 1:
        raise RankError(f"the potential must be a rank-1 field, got rank {a.rank}")
    if not a.is_real():
        raise PreconditionError("the potential A must be real")


def connection_coeffs(a: ExpField) -> np.ndarray:
    """Connection coefficients ``Gamma[lam, mu, nu] = 1/2 A_kap eps^{kap lam}_{mu nu}``.

    Only constant real potentials are supported.  Entries are Fractions in a
    ``(4, 4, 4)`` object array.
    """
    _require_real_potential(a)
    const = a.constant_value()
    if const is None:
        raise PreconditionError("explicit connection coefficients need a constant potential")
    acomp = [const[(kap,)].re for kap in range(DIM)]
    gamma = np.full((DIM, DIM, DIM), Fraction(0), dtype=object)
    for lam in range(DIM):
        for mu in range(DIM):
            for nu in range(DIM):
                s = Fraction(0)
                for kap in range(DIM):
                    e = levi_civita((kap, lam, mu, nu), a.orientation)
                    if e and acomp[kap]:
                        s += acomp[kap] * METRIC[kap] * METRIC[lam] * e
                gamma[lam, mu, nu] = s / 2
    return gamma


def torsion_tensor(gamma: np.ndarray) -> np.ndarray:
    """``T[lam, mu, nu] = Gamma[lam, mu, nu] - Gamma[lam, nu, mu]``."""
    return gamma - gamma.transpose(0, 2, 1)


def _check_potential_2d(a: ExpField) -> None:
    _require_real_potential(a)
    if any(k.k[3] for k in a._modes):
        raise PreconditionError("every mode of the potential must have k_3 = 0")


def ext_dA(f: ExpField, a: ExpField) -> ExpField:
    """Exterior derivative twisted by the torsion connection of ``a``.

    Scalars: ``d_A s = d s``.  Vectors: ``d_A v = d v - *(A ^ v)``.
    """
    _check_potential_2d(a)
    if f.rank == 0:
        return ext_d(f)
    if f.rank == 1:
        return ext_d(f) - a.wedge(f).hodge()
    raise RankError(f"ext_dA is implemented for ranks 0 and 1 only, got {f.rank}")


def perp(q: ExpField, r: ExpField) -> bool:
    """Pointwise orthogonality ``Q . conj(R) == 0`` at every spacetime point."""
    if q.rank != r.rank:
        raise RankError(f"rank mismatch: {q.rank} vs {r.rank}")
    return q.dot(r.conjugate()).is_zero()

