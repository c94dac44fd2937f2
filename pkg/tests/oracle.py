"""Brute-force reference implementations used as independent oracles.

Nothing here reuses the sign or shuffle shortcuts of the library: tensors are
expanded to all 4**q index tuples, the Levi-Civita symbol is built from cycle
counts, and every definition is summed term by term.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations, product
from math import factorial

from tensordirac.algebra import AntisymTensor
from tensordirac.scalars import ZERO, ComplexRational

G = (1, -1, -1, -1)


def parity(p) -> int:
    """Sign of a permutation of range(n) via cycle decomposition; 0 if not a permutation."""
    n = len(p)
    if sorted(p) != list(range(n)):
        return 0
    seen = [False] * n
    sign = 1
    for i in range(n):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def eps(idx, orientation=1) -> int:
    return orientation * parity(list(idx))


def dense(q: AntisymTensor) -> dict:
    """All 4**rank components (lower indices) read through the public accessor."""
    return {idx: q[idx] for idx in product(range(4), repeat=q.rank)}


def raised(d: dict) -> dict:
    out = {}
    for idx, v in d.items():
        s = 1
        for i in idx:
            s *= G[i]
        out[idx] = v * s
    return out


def from_dense(rank: int, d: dict) -> AntisymTensor:
    comps = {idx: v for idx, v in d.items() if list(idx) == sorted(set(idx)) and v}
    return AntisymTensor(rank, comps)


def dot(q: AntisymTensor, r: AntisymTensor) -> ComplexRational:
    dq, dr = dense(q), raised(dense(r))
    total = ZERO
    for idx in dq:
        total = total + dq[idx] * dr[idx]
    return total * Fraction(1, factorial(q.rank))


def hodge(q: AntisymTensor, orientation=1) -> AntisymTensor:
    qr = raised(dense(q))
    rank = 4 - q.rank
    out = {}
    for tail in product(range(4), repeat=rank):
        s = ZERO
        for head in product(range(4), repeat=q.rank):
            e = eps(head + tail, orientation)
            if e:
                s = s + qr[head] * e
        out[tail] = s * Fraction(1, factorial(q.rank))
    return from_dense(rank, out)


def wedge(q: AntisymTensor, r: AntisymTensor) -> AntisymTensor:
    """Sum over all permutations P of the target slots, with 1/(q! r!)."""
    dq, dr = dense(q), dense(r)
    n = q.rank + r.rank
    out = {}
    for lam in product(range(4), repeat=n):
        s = ZERO
        for p in permutations(range(n)):
            mu = tuple(lam[p[i]] for i in range(q.rank))
            nu = tuple(lam[p[i]] for i in range(q.rank, n))
            s = s + dq[mu] * dr[nu] * parity(list(p))
        out[lam] = s * Fraction(1, factorial(q.rank) * factorial(r.rank))
    return from_dense(n, out)


def connection(a_lower) -> dict:
    """Gamma^lam_{mu nu} = 1/2 A_kap eps^{kap lam}_{mu nu}, all entries."""
    out = {}
    for lam, mu, nu in product(range(4), repeat=3):
        s = Fraction(0)
        for kap in range(4):
            s += Fraction(a_lower[kap]) * G[kap] * G[lam] * eps((kap, lam, mu, nu))
        out[lam, mu, nu] = s / 2
    return out
