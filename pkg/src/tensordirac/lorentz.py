"""Exact Lorentz transformations that keep the hyperplane ``x^3 = 0``.

Transformations are passive: ``x'^mu = L^mu_nu x^nu``, and covariant
components pick up one factor of ``L^{-1}`` per index.  Only maps with
rational entries are constructible (Pythagorean rotations, boosts on the
rational unit hyperbola, axis reversals and their products).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Sequence

import numpy as np

from .algebra import DIM, METRIC, AntisymTensor, increasing_tuples, perm_sign
from .fields import ExpField, WaveCovector
from .scalars import ZERO, parse_rational

__all__ = ["LorentzMap", "build_map", "compose", "transform_tensor", "transform_field", "MAP_KINDS"]

MAP_KINDS = ("boost-x1", "rotation-x1x2", "reverse-x3", "reverse-x0", "reverse-x1")

_G = np.diag([Fraction(m) for m in METRIC]).astype(object)


def _det(m: np.ndarray) -> Fraction:
    n = m.shape[0]
    if n == 0:
        return Fraction(1)
    total = Fraction(0)
    for p in permutations(range(n)):
        term = Fraction(perm_sign(p))
        for row, col in enumerate(p):
            term *= m[row, col]
            if not term:
                break
        total += term
    return total


class LorentzMap:
    """A validated 4x4 rational Lorentz matrix preserving ``{x^3 = 0}``.

    Attributes
    ----------
    matrix : numpy object array of Fractions, ``matrix[mu, nu] = L^mu_nu``
    orientation : ``det L``, either +1 or -1
    orthochronous : whether ``L^0_0 > 0``
    """

    __slots__ = ("matrix", "orientation", "orthochronous", "label")

    def __init__(self, matrix, label: str = "custom"):
        m = np.array([[Fraction(x) for x in row] for row in matrix], dtype=object)
        if m.shape != (DIM, DIM):
            raise ValueError(f"a Lorentz map is {DIM}x{DIM}, got shape {m.shape}")
        if not np.array_equal(m.T.dot(_G).dot(m), _G):
            raise ValueError("matrix does not preserve the Minkowski metric")
        if any(m[3, nu] != 0 for nu in range(3)) or any(m[mu, 3] != 0 for mu in range(3)):
            raise ValueError("matrix does not preserve the hyperplane x^3 = 0")
        if abs(m[3, 3]) != 1:
            raise ValueError("matrix rescales the x^3 axis")
        det = _det(m)
        if det not in (1, -1):
            raise ValueError(f"determinant {det} is not +-1")
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "orientation", int(det))
        object.__setattr__(self, "orthochronous", m[0, 0] > 0)
        object.__setattr__(self, "label", label)

    def __setattr__(self, name, value):
        raise AttributeError("LorentzMap is immutable")

    @property
    def inverse_matrix(self) -> np.ndarray:
        """``L^{-1} = g L^T g``, exact."""
        return _G.dot(self.matrix.T).dot(_G)

    def inverse(self) -> LorentzMap:
        return LorentzMap(self.inverse_matrix, label=f"inverse({self.label})")

    @property
    def proper(self) -> bool:
        return self.orientation == 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, LorentzMap):
            return NotImplemented
        return np.array_equal(self.matrix, other.matrix)

    def __hash__(self) -> int:
        return hash(tuple(self.matrix.ravel()))

    def __repr__(self) -> str:
        return f"LorentzMap({self.label!r}, orientation={self.orientation}, orthochronous={self.orthochronous})"


def build_map(kind: str, param: Sequence | None = None) -> LorentzMap:
    """Construct one of the exact generators.

    ``boost-x1`` takes ``(cosh, sinh)`` with ``cosh^2 - sinh^2 = 1`` and
    ``cosh > 0``; ``rotation-x1x2`` takes ``(cos, sin)`` on the unit circle.
    The reversals take no parameter.
    """
    one, zero = Fraction(1), Fraction(0)
    if kind in ("boost-x1", "rotation-x1x2"):
        if param is None or len(param) != 2:
            raise ValueError(f"{kind} needs a pair of rationals")
        a, b = (parse_rational(p) if isinstance(p, str) else Fraction(p) for p in param)
        if kind == "boost-x1":
            if a * a - b * b != 1 or a <= 0:
                raise ValueError(f"boost parameter ({a}, {b}) is not on the unit hyperbola")
            rows = [[a, b, zero, zero], [b, a, zero, zero], [zero, zero, one, zero], [zero, zero, zero, one]]
        else:
            if a * a + b * b != 1:
                raise ValueError(f"rotation parameter ({a}, {b}) is not on the unit circle")
            rows = [[one, zero, zero, zero], [zero, a, -b, zero], [zero, b, a, zero], [zero, zero, zero, one]]
        return LorentzMap(rows, label=f"{kind}({a},{b})")
    if kind in ("reverse-x3", "reverse-x0", "reverse-x1"):
        if param:
            raise ValueError(f"{kind} takes no parameter")
        axis = int(kind[-1])
        diag = [one] * DIM
        diag[axis] = -one
        return LorentzMap(np.diag(diag).astype(object), label=kind)
    raise ValueError(f"unknown map kind {kind!r}; expected one of {', '.join(MAP_KINDS)}")


def compose(first: LorentzMap, second: LorentzMap) -> LorentzMap:
    """The map ``second o first``: apply ``first``, then ``second``."""
    return LorentzMap(second.matrix.dot(first.matrix), label=f"{second.label}*{first.label}")


def _transform_components(minv: np.ndarray, q: AntisymTensor) -> AntisymTensor:
    if q.rank == 0:
        return q
    comps = {}
    for j in increasing_tuples(q.rank):
        s = ZERO
        for i, v in q.items():
            minor = _det(minv[np.ix_(i, j)])
            if minor:
                s = s + v * minor
        if s:
            comps[j] = s
    return AntisymTensor(q.rank, comps)


def transform_tensor(lmap: LorentzMap, q: AntisymTensor) -> AntisymTensor:
    """Covariant components of ``q`` in the new frame."""
    return _transform_components(lmap.inverse_matrix, q)


def transform_wave(lmap: LorentzMap, k: WaveCovector) -> WaveCovector:
    minv = lmap.inverse_matrix
    return WaveCovector(*(sum((k[nu] * minv[nu, mu] for nu in range(DIM)), Fraction(0)) for mu in range(DIM)))


def transform_field(lmap: LorentzMap, f: ExpField) -> ExpField:
    """Re-express a field in the new frame.

    Coefficients and wave covectors transform covariantly, and the frame's
    orientation flag is multiplied by ``det L`` so the Hodge star keeps using
    ``eps_{0123} = +1`` in positively oriented frames.
    """
    minv = lmap.inverse_matrix
    modes = [(transform_wave(lmap, k), _transform_components(minv, c)) for k, c in f.modes()]
    return ExpField(f.rank, modes, f.orientation * lmap.orientation)
