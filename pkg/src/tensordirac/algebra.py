"""Antisymmetric tensors on Minkowski 4-space.

Tensors are stored covariant (all indices down) and only on strictly
increasing index tuples; every other ordering is recovered on access through
the permutation sign.  The metric is ``diag(+1, -1, -1, -1)`` and the
totally antisymmetric symbol has ``eps_{0123} = orientation``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import RankError
from .scalars import ZERO, ComplexRational, Scalar, as_scalar

__all__ = [
    "DIM",
    "METRIC",
    "AntisymTensor",
    "basis",
    "covector",
    "dot",
    "hodge",
    "wedge",
    "reflect",
    "conjugate",
    "raise_all",
    "perm_sign",
    "sort_with_sign",
    "levi_civita",
    "metric_sign",
    "hodge_square_sign",
]

DIM = 4
METRIC = (1, -1, -1, -1)

Index = tuple[int, ...]


def perm_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation that sorts ``seq``; 0 if an entry repeats."""
    n = len(seq)
    if len(set(seq)) != n:
        return 0
    inversions = 0
    for i in range(n):
        for j in range(i + 1, n):
            if seq[i] > seq[j]:
                inversions += 1
    return -1 if inversions & 1 else 1


def sort_with_sign(seq: Sequence[int]) -> tuple[int, Index]:
    """Return ``(sign, sorted tuple)``; sign is 0 for repeated indices."""
    return perm_sign(seq), tuple(sorted(seq))


def levi_civita(idx: Sequence[int], orientation: int = 1) -> int:
    """Covariant totally antisymmetric symbol with ``eps_{0123} = orientation``."""
    if len(idx) != DIM:
        raise RankError(f"levi-civita symbol takes {DIM} indices, got {len(idx)}")
    return orientation * perm_sign(idx)


def metric_sign(idx: Iterable[int]) -> int:
    """Product of diagonal metric entries; the factor picked up when raising ``idx``."""
    s = 1
    for i in idx:
        s *= METRIC[i]
    return s


def _complement(idx: Index) -> Index:
    return tuple(i for i in range(DIM) if i not in idx)


class AntisymTensor:
    """Totally antisymmetric covariant tensor of rank 0..4 with exact entries.

    ``components`` may use any index ordering; entries are brought to
    increasing order with the appropriate sign and summed.  Entries with
    repeated indices must be zero.
    """

    __slots__ = ("rank", "_c")

    def __init__(self, rank: int, components: Mapping[Sequence[int], Scalar | str] | None = None):
        if not 0 <= rank <= DIM:
            raise RankError(f"rank must be in 0..{DIM}, got {rank}")
        c: dict[Index, ComplexRational] = {}
        for key, value in (components or {}).items():
            key = tuple(key)
            if len(key) != rank or any(not 0 <= i < DIM for i in key):
                raise RankError(f"bad index tuple {key} for a rank-{rank} tensor")
            val = as_scalar(value)
            sign, skey = sort_with_sign(key)
            if sign == 0:
                if val:
                    raise RankError(f"nonzero entry on repeated indices {key}")
                continue
            c[skey] = c.get(skey, ZERO) + (val if sign > 0 else -val)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "_c", {k: v for k, v in c.items() if v})

    @classmethod
    def _raw(cls, rank: int, c: dict[Index, ComplexRational]) -> AntisymTensor:
        # c must already be canonical: increasing keys, no zero values
        obj = object.__new__(cls)
        object.__setattr__(obj, "rank", rank)
        object.__setattr__(obj, "_c", c)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("AntisymTensor is immutable")

    @classmethod
    def zero(cls, rank: int) -> AntisymTensor:
        if not 0 <= rank <= DIM:
            raise RankError(f"rank must be in 0..{DIM}, got {rank}")
        return cls._raw(rank, {})

    @classmethod
    def scalar(cls, value: Scalar | str) -> AntisymTensor:
        return cls(0, {(): value})

    def __getitem__(self, idx) -> ComplexRational:
        if isinstance(idx, int):
            idx = (idx,)
        idx = tuple(idx)
        if len(idx) != self.rank:
            raise RankError(f"rank-{self.rank} tensor indexed with {len(idx)} indices")
        sign, key = sort_with_sign(idx)
        if sign == 0:
            return ZERO
        v = self._c.get(key, ZERO)
        return v if sign > 0 else -v

    def items(self) -> Iterator[tuple[Index, ComplexRational]]:
        """Nonzero stored components in increasing index order."""
        return iter(sorted(self._c.items()))

    def keys(self) -> list[Index]:
        return sorted(self._c)

    @property
    def nnz(self) -> int:
        return len(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def is_real(self) -> bool:
        return all(v.is_real() for v in self._c.values())

    def value(self) -> ComplexRational:
        """The single component of a rank-0 tensor."""
        if self.rank != 0:
            raise RankError("value() is only defined for rank-0 tensors")
        return self._c.get((), ZERO)

    # -- linear structure ----------------------------------------------------

    def __add__(self, other: AntisymTensor) -> AntisymTensor:
        if not isinstance(other, AntisymTensor):
            return NotImplemented
        _same_rank(self, other)
        c = dict(self._c)
        for k, v in other._c.items():
            s = c.get(k, ZERO) + v
            if s:
                c[k] = s
            else:
                c.pop(k, None)
        return AntisymTensor._raw(self.rank, c)

    def __neg__(self) -> AntisymTensor:
        return AntisymTensor._raw(self.rank, {k: -v for k, v in self._c.items()})

    def __sub__(self, other: AntisymTensor) -> AntisymTensor:
        if not isinstance(other, AntisymTensor):
            return NotImplemented
        return self + (-other)

    def __mul__(self, z) -> AntisymTensor:
        try:
            z = as_scalar(z)
        except TypeError:
            return NotImplemented
        if not z:
            return AntisymTensor._raw(self.rank, {})
        return AntisymTensor._raw(self.rank, {k: v * z for k, v in self._c.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, AntisymTensor):
            return NotImplemented
        return self.rank == other.rank and self._c == other._c

    def __hash__(self) -> int:
        return hash((self.rank, frozenset(self._c.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: '{v}'" for k, v in self.items())
        return f"AntisymTensor({self.rank}, {{{body}}})"


def _same_rank(q: AntisymTensor, r: AntisymTensor) -> None:
    if q.rank != r.rank:
        raise RankError(f"rank mismatch: {q.rank} vs {r.rank}")


def basis(*idx: int) -> AntisymTensor:
    """Wedge of basis covectors, e.g. ``basis(0, 1)`` is e^0 ^ e^1."""
    return AntisymTensor(len(idx), {idx: 1})


def covector(components: Sequence[Scalar | str]) -> AntisymTensor:
    """Rank-1 tensor from its four lower-index components."""
    if len(components) != DIM:
        raise RankError(f"a covector has {DIM} components, got {len(components)}")
    return AntisymTensor(1, {(mu,): c for mu, c in enumerate(components)})


def raise_all(q: AntisymTensor) -> dict[Index, ComplexRational]:
    """Contravariant components on increasing tuples (metric applied per index)."""
    return {k: (v if metric_sign(k) > 0 else -v) for k, v in q._c.items()}


def dot(q: AntisymTensor, r: AntisymTensor) -> ComplexRational:
    """``(1/q!) Q_{mu...} R^{mu...}``; no complex conjugation is applied."""
    _same_rank(q, r)
    small, big = (q._c, r._c) if len(q._c) <= len(r._c) else (r._c, q._c)
    total = ZERO
    for k, v in small.items():
        w = big.get(k)
        if w is not None:
            p = v * w
            total = total + (p if metric_sign(k) > 0 else -p)
    return total


def hodge(q: AntisymTensor, orientation: int = 1) -> AntisymTensor:
    """Hodge dual, rank ``q -> 4 - q``.

    ``(*Q)_J = (1/q!) Q^{I} eps_{I J}``.  Only the ordering of the complement
    of ``J`` contributes, and its ``q!`` orderings all give the same term.
    """
    _check_orientation(orientation)
    out: dict[Index, ComplexRational] = {}
    for k, v in q._c.items():
        j = _complement(k)
        s = metric_sign(k) * levi_civita(k + j, orientation)
        out[j] = v if s > 0 else -v
    return AntisymTensor._raw(DIM - q.rank, out)


def wedge(q: AntisymTensor, r: AntisymTensor) -> AntisymTensor:
    """Exterior product with the ``1/(q! r!)`` normalisation.

    For increasing target indices the permutation sum collapses to a sum over
    shuffles, each appearing ``q! r!`` times.
    """
    rank = q.rank + r.rank
    if rank > DIM:
        raise RankError(f"wedge of ranks {q.rank} and {r.rank} exceeds {DIM}")
    out: dict[Index, ComplexRational] = {}
    for kq, vq in q._c.items():
        for kr, vr in r._c.items():
            sign, key = sort_with_sign(kq + kr)
            if sign == 0:
                continue
            p = vq * vr
            s = out.get(key, ZERO) + (p if sign > 0 else -p)
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return AntisymTensor._raw(rank, out)


def reflect(q: AntisymTensor) -> AntisymTensor:
    """Flip the sign of every component carrying index 3."""
    return AntisymTensor._raw(q.rank, {k: (-v if 3 in k else v) for k, v in q._c.items()})


def conjugate(q: AntisymTensor) -> AntisymTensor:
    return AntisymTensor._raw(q.rank, {k: v.conjugate() for k, v in q._c.items()})


# Lorentzian signature: ** = -1 on even ranks, +1 on odd ranks.
# Confirmed by brute force in the test suite.
_HODGE_SQUARE = {0: -1, 1: 1, 2: -1, 3: 1, 4: -1}


def hodge_square_sign(rank: int) -> int:
    """Sign ``s`` with ``hodge(hodge(Q)) == s * Q`` for rank-``rank`` tensors."""
    return _HODGE_SQUARE[rank]


def _check_orientation(orientation: int) -> None:
    if orientation not in (1, -1):
        raise ValueError(f"orientation must be +1 or -1, got {orientation}")


def increasing_tuples(rank: int) -> Iterator[Index]:
    return combinations(range(DIM), rank)

