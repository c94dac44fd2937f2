import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from tensordirac import generators as gen
from tensordirac.algebra import AntisymTensor, basis, covector
from tensordirac.dirac import SignPair, SpinorPair2D, make_electron_candidate, make_photon
from tensordirac.errors import PreconditionError, RankError
from tensordirac.fields import (
    ExpField,
    WaveCovector,
    codiff,
    connection_coeffs,
    constant_field,
    ext_d,
    ext_dA,
    field_algebra,
    partial,
    perp,
    plane_wave,
    scalar_wave,
    torsion_tensor,
    zero_field,
)
from tensordirac.scalars import I, ComplexRational

seeds = st.integers(min_value=0, max_value=2**32 - 1)
G = (1, -1, -1, -1)


# -- canonical form and pointwise algebra -------------------------------------


def test_add_negation_gives_zero_field():
    f = gen.field(random.Random(3), 2)
    assert field_algebra("add", f, field_algebra("scale", f, -1)).is_zero()
    assert len(f - f) == 0


def test_wedge_adds_wave_covectors():
    f = plane_wave((1, 0, 0, 1), basis(0))
    g = plane_wave((2, 1, 0, 0), basis(1))
    w = field_algebra("wedge", f, g)
    assert w.rank == 2
    assert w.modes() == [(WaveCovector(3, 1, 0, 1), basis(0, 1))]


def test_conjugation_negates_wave_covector():
    f = plane_wave((1, 0, 0, 1), covector([I, 0, 0, 0]))
    assert field_algebra("conjugate", f).modes() == [(WaveCovector(-1, 0, 0, -1), covector([-I, 0, 0, 0]))]


def test_field_algebra_errors():
    f = gen.field(random.Random(1), 1)
    with pytest.raises(RankError):
        field_algebra("add", f, zero_field(2))
    with pytest.raises(ValueError):
        field_algebra("add", f, f.with_orientation(-1))
    with pytest.raises(ValueError):
        field_algebra("frobnicate", f)


def test_modes_with_equal_covectors_merge():
    k = (1, 2, 0, 0)
    f = ExpField(0, [(k, AntisymTensor.scalar(1)), (k, AntisymTensor.scalar(2))])
    assert f == scalar_wave(k, 3)
    assert ExpField(0, [(k, AntisymTensor.scalar(1)), (k, AntisymTensor.scalar(-1))]).is_zero()


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_linear_independence_of_exponentials(seed):
    # rebuild F from shuffled, split modes; F - rebuilt must cancel to nothing
    rng = random.Random(seed)
    f = gen.field(rng, 1, max_modes=4)
    pieces = []
    for k, c in f.modes():
        z = gen.complex_rational(rng)
        pieces += [(k, c * z), (k, c * (1 - z))]
    rng.shuffle(pieces)
    rebuilt = ExpField(1, pieces)
    assert (f - rebuilt).is_zero()
    assert f == rebuilt


def test_reality():
    a = gen.real_field(random.Random(5), 1)
    assert a.is_real() and a.conjugate() == a
    assert not scalar_wave((1, 0, 0, 0), 1).is_real()


# -- d and delta --------------------------------------------------------------


def test_ext_d_examples():
    k = WaveCovector(1, 0, 0, 1)
    df = ext_d(scalar_wave(k))
    assert df.modes() == [(k, covector([-I, 0, 0, -I]))]
    assert ext_d(constant_field(AntisymTensor.scalar(7))).is_zero()
    with pytest.raises(RankError):
        ext_d(zero_field(4))


def test_codiff_rank_zero_is_an_error():
    with pytest.raises(RankError):
        codiff(zero_field(0))


@settings(max_examples=30, deadline=None)
@given(seeds, st.integers(0, 2))
def test_d_squared_and_codiff_identities(seed, rank):
    rng = random.Random(seed)
    f = gen.field(rng, rank)
    assert ext_d(ext_d(f)).is_zero()
    assert codiff(ext_d(f).hodge()).is_zero()
    g = gen.field(rng, rank + 2)
    assert codiff(codiff(g)).is_zero()


@settings(max_examples=30, deadline=None)
@given(seeds, st.integers(0, 3))
def test_ext_d_matches_partial_derivatives(seed, rank):
    # (df)_{mu nu...} from the antisymmetrised partials, built componentwise
    f = gen.field(random.Random(seed), rank)
    df = ext_d(f)
    for idx in product(range(4), repeat=rank + 1):
        if list(idx) != sorted(set(idx)):
            continue
        expected = zero_field(0)
        for pos, mu in enumerate(idx):
            rest = idx[:pos] + idx[pos + 1 :]
            term = partial(f.component(*rest), mu)
            expected = expected + (term if pos % 2 == 0 else -term)
        assert df.component(*idx) == expected


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_d_is_linear_and_commutes_with_conjugation(seed):
    rng = random.Random(seed)
    rank = rng.randint(0, 3)
    f, g = gen.field(rng, rank), gen.field(rng, rank)
    z = gen.complex_rational(rng)
    assert ext_d(f.scale(z) + g) == ext_d(f).scale(z) + ext_d(g)
    assert ext_d(f.conjugate()) == ext_d(f).conjugate()


def test_photon_is_co_closed():
    u = make_photon(SignPair(1, 1), 0)
    assert codiff(ext_d(u)).is_zero()


# -- connection ---------------------------------------------------------------


def random_constant_potentials(n, seed=11):
    rng = random.Random(seed)
    yield [1, 0, 0, 0]
    for _ in range(n):
        yield [gen.rational(rng) for _ in range(4)]


def as_potential(a):
    return constant_field(covector(a))


def test_connection_vanishes_for_zero_potential():
    gamma = connection_coeffs(zero_field(1))
    assert all(x == 0 for x in gamma.flat)


@pytest.mark.parametrize("a", list(random_constant_potentials(10)))
def test_connection_matches_oracle(a):
    gamma = connection_coeffs(as_potential(a))
    expected = oracle.connection(a)
    for idx, value in expected.items():
        assert gamma[idx] == value


@pytest.mark.parametrize("a", list(random_constant_potentials(10)))
def test_metric_compatibility(a):
    gamma = oracle.connection(a)
    for lam, mu, nu in product(range(4), repeat=3):
        assert gamma[nu, lam, mu] * G[nu] + gamma[mu, lam, nu] * G[mu] == 0
    lib = connection_coeffs(as_potential(a))
    for lam, mu, nu in product(range(4), repeat=3):
        assert lib[nu, lam, mu] * G[nu] + lib[mu, lam, nu] * G[mu] == 0


@pytest.mark.parametrize("a", list(random_constant_potentials(10)))
def test_torsion_is_dual_of_potential(a):
    t = torsion_tensor(connection_coeffs(as_potential(a)))
    star_a = oracle.hodge(covector(a))
    for lam, mu, nu in product(range(4), repeat=3):
        assert t[lam, mu, nu] == star_a[lam, mu, nu] * G[lam]


def test_connection_preconditions():
    with pytest.raises(PreconditionError):
        connection_coeffs(constant_field(covector([I, 0, 0, 0])))
    with pytest.raises(PreconditionError):
        connection_coeffs(gen.real_field(random.Random(2), 1, max_pairs=1) + constant_field(covector([1, 0, 0, 0])))
    with pytest.raises(RankError):
        connection_coeffs(zero_field(2))


# -- d_A ----------------------------------------------------------------------


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_ext_dA_reduces_to_d_without_potential(seed):
    v = gen.field(random.Random(seed), 1)
    assert ext_dA(v, zero_field(1)) == ext_d(v)


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_ext_dA_twice_on_scalars(seed):
    rng = random.Random(seed)
    s = gen.field(rng, 0)
    a = gen.potential_2d(rng, "constant")
    assert ext_dA(ext_dA(s, a), a) == -a.wedge(ext_d(s)).hodge()


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_ext_dA_matches_torsion_expansion(seed):
    # (d_A v)_{mu nu} = (dv)_{mu nu} - T^lam_{mu nu} v_lam with T from the oracle
    rng = random.Random(seed)
    a_comps = [gen.rational(rng) for _ in range(3)] + [Fraction(0)]
    gamma = oracle.connection(a_comps)
    v = gen.field(rng, 1)
    lhs = ext_dA(v, as_potential(a_comps))
    dv = ext_d(v)
    for mu in range(4):
        for nu in range(mu + 1, 4):
            correction = zero_field(0)
            for lam in range(4):
                t = gamma[lam, mu, nu] - gamma[lam, nu, mu]
                correction = correction + v.component(lam).scale(t)
            assert lhs.component(mu, nu) == dv.component(mu, nu) - correction


def test_ext_dA_preconditions():
    v = gen.field(random.Random(4), 1)
    with pytest.raises(RankError):
        ext_dA(zero_field(2), zero_field(1))
    with pytest.raises(PreconditionError):
        ext_dA(v, constant_field(covector([I, 0, 0, 0])))
    with pytest.raises(PreconditionError):
        ext_dA(v, gen.real_field(random.Random(1), 1, max_pairs=1).shift(WaveCovector(0, 0, 0, 1)))


@settings(max_examples=30, deadline=None)
@given(seeds, st.sampled_from([1, -1]))
def test_mass_ansatz_closure(seed, alpha):
    rng = random.Random(seed)
    v = gen.field(rng, 1, k3=alpha)
    a = gen.potential_2d(rng)
    assert all(k[3] == alpha for k in ext_dA(v, a).wave_covectors())


# -- perp ---------------------------------------------------------------------


def test_perp_examples():
    k = (1, 0, 0, 0)
    assert perp(plane_wave(k, basis(0)), plane_wave(k, basis(1)))
    f = constant_field(covector([1, 2, 0, 0]))
    assert not perp(f, f)
    with pytest.raises(RankError):
        perp(f, zero_field(2))


@pytest.mark.parametrize("signs", SignPair.all(), ids=str)
def test_electron_candidate_is_perpendicular_to_k(signs):
    s = gen.spinor_pair(random.Random(8))
    v = make_electron_candidate(signs, s)
    kfield = constant_field(covector([1, 0, 0, signs.alpha]))
    assert perp(v, kfield)
    assert isinstance(s, SpinorPair2D)
