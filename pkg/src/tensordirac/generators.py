"""Seeded random generators of exact rational test data.

All generators draw from a :class:`random.Random` so a seed reproduces the
whole sequence.  Numerators and denominators are kept small; the identities
being tested are exact, so size only affects speed.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from .algebra import DIM, AntisymTensor, conjugate
from .dirac import Bispinor3D, SpinorPair2D
from .fields import ExpField, WaveCovector, constant_field
from .scalars import ComplexRational

__all__ = [
    "rational",
    "complex_rational",
    "tensor",
    "wave",
    "field",
    "real_field",
    "spinor_pair",
    "potential_2d",
    "bispinor_2d",
]


def rational(rng: random.Random, span: int = 5, max_den: int = 4) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def complex_rational(rng: random.Random, real: bool = False) -> ComplexRational:
    return ComplexRational(rational(rng), 0 if real else rational(rng))


def tensor(rng: random.Random, rank: int, density: float = 0.7, real: bool = False) -> AntisymTensor:
    comps = {}
    for idx in combinations(range(DIM), rank):
        if rng.random() < density:
            comps[idx] = complex_rational(rng, real)
    return AntisymTensor(rank, comps)


def wave(rng: random.Random, k3: Fraction | int | None = None, span: int = 3) -> WaveCovector:
    k = [Fraction(rng.randint(-span, span), rng.randint(1, 2)) for _ in range(DIM)]
    if k3 is not None:
        k[3] = Fraction(k3)
    return WaveCovector(*k)


def field(rng: random.Random, rank: int, max_modes: int = 3, k3=None, orientation: int = 1) -> ExpField:
    """Random complex field with 1..max_modes modes (duplicates merge)."""
    n = rng.randint(1, max_modes)
    return ExpField(rank, [(wave(rng, k3), tensor(rng, rank)) for _ in range(n)], orientation)


def real_field(rng: random.Random, rank: int, max_pairs: int = 2, two_d: bool = False, orientation: int = 1) -> ExpField:
    """Random real field: conjugate pairs ``(k, c), (-k, conj c)`` plus a real constant."""
    pairs = [(WaveCovector.zero(), tensor(rng, rank, real=True))]
    for _ in range(rng.randint(0, max_pairs)):
        k = wave(rng, 0 if two_d else None)
        c = tensor(rng, rank)
        pairs += [(k, c), (-k, conjugate(c))]
    return ExpField(rank, pairs, orientation)


def spinor_pair(rng: random.Random, max_modes: int = 3) -> SpinorPair2D:
    return SpinorPair2D(field(rng, 0, max_modes, k3=0), field(rng, 0, max_modes, k3=0))


def _potential_coeff(rng: random.Random, real: bool) -> AntisymTensor:
    return AntisymTensor(1, {(mu,): complex_rational(rng, real) for mu in range(3)})


def potential_2d(rng: random.Random, kind: str | None = None) -> ExpField:
    """Real rank-1 potential with ``A_3 = 0`` and no ``x^3`` dependence.

    ``kind`` is ``"constant"`` or ``"wave"`` (a single real plane wave, i.e. a
    conjugate pair of modes); chosen at random when omitted.
    """
    kind = kind or rng.choice(("constant", "wave"))
    if kind == "constant":
        return constant_field(_potential_coeff(rng, real=True))
    if kind == "wave":
        k = wave(rng, k3=0)
        while k.is_zero():
            k = wave(rng, k3=0)
        c = _potential_coeff(rng, real=False)
        return ExpField(1, [(k, c), (-k, conjugate(c))])
    raise ValueError(f"unknown potential kind {kind!r}")


def bispinor_2d(rng: random.Random, max_modes: int = 2) -> Bispinor3D:
    """Bispinor whose components do not depend on ``x^3``."""
    return Bispinor3D(*(field(rng, 0, max_modes, k3=0) for _ in range(4)))
