import random
from fractions import Fraction

import pytest

from helpers import frac_mat, random_cochain, random_matrix, random_pair
from moddef.cochain import (
    Cochain,
    coboundary_witness,
    cohomology,
    cokernel_certificate,
    differential,
    differential_matrix,
    is_cocycle,
)
from moddef.errors import InputError, ResourceError
from moddef.fields import QQ
from moddef.fixtures import fixture_a, fixture_b, fixture_c
from moddef.linalg import Matrix

Q0, Q1 = Fraction(0), Fraction(1)


def one_by_one(x):
    return frac_mat([[x]])


# --- the differential itself -------------------------------------------------


def test_differential_of_zero_is_zero():
    _, mod = fixture_c()
    for degree in range(3):
        assert differential(Cochain.zero(mod, degree)).is_zero()


def test_fixture_a_degree_one_table():
    # hand evaluation on all four pairs: with the generator acting by zero,
    # only the (1,1) entry survives and equals the value at the unit
    _, mod = fixture_a()
    for c, s in [(1, 0), (0, 1), (3, -2)]:
        f = Cochain(mod, 1, {(0,): one_by_one(c), (1,): one_by_one(s)})
        df = differential(f)
        assert df.value((0, 0)) == one_by_one(c)
        for key in [(0, 1), (1, 0), (1, 1)]:
            assert df.value(key).is_zero()


def test_degree_zero_is_commutator():
    rng = random.Random(3)
    _, mod = fixture_c()
    for _ in range(10):
        phi = random_matrix(rng, 2, 2)
        d0 = differential(Cochain.of_operator(mod, phi))
        for a in range(2):
            rho = mod.action[a]
            assert d0.value((a,)) == rho @ phi - phi @ rho


def test_differential_is_linear():
    rng = random.Random(91)
    _, mod = fixture_c()
    f = random_cochain(mod, 1, rng)
    g = random_cochain(mod, 1, rng)
    c = Fraction(3, 2)
    assert differential(f + g.scale(c)) == differential(f) + differential(g).scale(c)


def test_module_mismatch_rejected():
    _, ma = fixture_a()
    _, mc = fixture_c()
    f = Cochain(ma, 1, {(1,): one_by_one(1)})
    g = Cochain(mc, 1, {(1,): frac_mat([[1, 0], [0, 1]])})
    with pytest.raises(InputError):
        f + g


# --- assembled differential matrices ------------------------------------------


def test_fixture_a_assembled_matrices_frozen():
    _, mod = fixture_a()
    d0 = differential_matrix(mod, 0)
    assert (d0.nrows, d0.ncols) == (2, 1)
    assert d0.is_zero()

    d1 = differential_matrix(mod, 1)
    assert (d1.nrows, d1.ncols) == (4, 2)
    assert d1 == frac_mat([[1, 0], [0, 0], [0, 0], [0, 0]])

    d2 = differential_matrix(mod, 2)
    assert (d2.nrows, d2.ncols) == (8, 4)
    expected = [[0] * 4 for _ in range(8)]
    expected[1][1] = 1  # triple (1,1,x) reads the (1,x) value
    expected[4][2] = -1  # triple (x,1,1) reads minus the (x,1) value
    assert d2 == frac_mat(expected)


def test_composition_of_matrices_is_zero():
    rng = random.Random(13)
    for _ in range(5):
        _, mod = random_pair(rng)
        d0 = differential_matrix(mod, 0)
        d1 = differential_matrix(mod, 1)
        d2 = differential_matrix(mod, 2)
        assert (d1 @ d0).is_zero()
        assert (d2 @ d1).is_zero()


def test_entrywise_square_is_zero():
    rng = random.Random(17)
    for _ in range(6):
        _, mod = random_pair(rng)
        for degree in range(3):
            f = random_cochain(mod, degree, rng)
            assert differential(differential(f)).is_zero()


def test_matrix_agrees_with_entrywise_differential():
    rng = random.Random(19)
    for _ in range(4):
        _, mod = random_pair(rng)
        for degree in range(3):
            f = random_cochain(mod, degree, rng)
            d = differential_matrix(mod, degree)
            assert d.matvec(f.flatten()) == differential(f).flatten()


def test_flatten_round_trip():
    rng = random.Random(23)
    _, mod = fixture_c()
    for degree in range(3):
        f = random_cochain(mod, degree, rng, density=0.8)
        assert Cochain.unflatten(mod, degree, f.flatten()) == f


def test_degree_guardrail():
    _, mod = fixture_a()
    with pytest.raises(ResourceError) as err:
        differential_matrix(mod, 4)
    assert "32x16" in str(err.value)
    # the default cap admits degree 3
    d3 = differential_matrix(mod, 3)
    assert (d3.nrows, d3.ncols) == (16, 8)


# --- cocycles and witnesses ---------------------------------------------------


def test_is_cocycle_fixture_a():
    _, mod = fixture_a()
    assert is_cocycle(Cochain(mod, 1, {(1,): one_by_one(1)}))
    assert not is_cocycle(Cochain(mod, 1, {(0,): one_by_one(1)}))


def test_differentials_are_cocycles():
    rng = random.Random(29)
    for _ in range(5):
        _, mod = random_pair(rng)
        g = random_cochain(mod, 1, rng)
        assert is_cocycle(differential(g))


def test_witness_of_zero_is_zero():
    _, mod = fixture_c()
    w = coboundary_witness(Cochain.zero(mod, 1))
    assert w is not None and w.is_zero()


def test_fixture_a_indicator_not_a_coboundary():
    _, mod = fixture_a()
    f = Cochain(mod, 2, {(1, 1): one_by_one(1)})
    assert coboundary_witness(f) is None
    # the (1,1)-indicator spans the coboundaries
    g = Cochain(mod, 2, {(0, 0): one_by_one(1)})
    w = coboundary_witness(g)
    assert w is not None
    assert differential(w) == g


def test_cokernel_certificate_checks_out():
    _, mod = fixture_a()
    f = Cochain(mod, 2, {(1, 1): one_by_one(1)})
    cert = cokernel_certificate(f)
    assert cert is not None
    y, pairing = cert
    d = differential_matrix(mod, 1)
    assert all(x == 0 for x in d.transpose().matvec(y))
    assert pairing != 0
    got = sum((yv * bv for yv, bv in zip(y, f.flatten())), Fraction(0))
    assert got == pairing


def test_fixture_c_canonical_witness_frozen():
    _, mod = fixture_c()
    sigma = Cochain(mod, 1, {(1,): frac_mat([[1, 0], [0, -1]])})
    w = coboundary_witness(sigma)
    assert w is not None
    assert w.value(()) == frac_mat([[0, 0], [1, 0]])
    assert differential(w) == sigma


def test_random_coboundaries_have_witnesses():
    rng = random.Random(31)
    for _ in range(6):
        _, mod = random_pair(rng)
        g = random_cochain(mod, 1, rng)
        f = differential(g)
        w = coboundary_witness(f)
        assert w is not None
        assert differential(w) == f


def test_witness_needs_positive_degree():
    _, mod = fixture_a()
    with pytest.raises(InputError):
        coboundary_witness(Cochain.zero(mod, 0))


# --- cohomology ----------------------------------------------------------------


def test_fixture_a_dimensions_and_representatives():
    _, mod = fixture_a()
    h1 = cohomology(mod, 1)
    assert (h1.dim_cocycles, h1.dim_coboundaries, h1.dim_cohomology) == (1, 0, 1)
    assert h1.representatives == [Cochain(mod, 1, {(1,): one_by_one(1)})]
    h2 = cohomology(mod, 2)
    assert (h2.dim_cocycles, h2.dim_coboundaries, h2.dim_cohomology) == (2, 1, 1)
    assert h2.representatives == [Cochain(mod, 2, {(1, 1): one_by_one(1)})]


def test_fixture_b_is_acyclic():
    _, mod = fixture_b()
    assert cohomology(mod, 1).dim_cohomology == 0
    assert cohomology(mod, 2).dim_cohomology == 0


def test_degree_zero_report():
    _, mod = fixture_a()
    h0 = cohomology(mod, 0)
    assert h0.dim_coboundaries == 0
    assert h0.dim_cocycles == h0.dim_cohomology == 1
    assert len(h0.representatives) == 1


def test_one_dimensional_algebra_is_acyclic():
    structure = [[[Q1]]]
    from moddef.algebra import Algebra, Module

    alg = Algebra(QQ, structure, [Q1])
    mod = Module(alg, [Matrix.identity(QQ, 3)])
    for n in (1, 2):
        assert cohomology(mod, n).dim_cohomology == 0


def test_representatives_are_cocycles_and_independent_mod_boundaries():
    rng = random.Random(41)
    for _ in range(3):
        _, mod = random_pair(rng)
        for n in (1, 2):
            rep = cohomology(mod, n)
            assert rep.dim_cohomology == rep.dim_cocycles - rep.dim_coboundaries >= 0
            assert len(rep.representatives) == rep.dim_cohomology
            for f in rep.representatives:
                assert is_cocycle(f)
            if rep.representatives:
                d_prev = differential_matrix(mod, n - 1)
                cols = [list(col) for col in d_prev.transpose().data]
                cols += [f.flatten() for f in rep.representatives]
                stacked = Matrix(QQ, cols, len(cols[0])).transpose()
                assert stacked.rank() == rep.dim_coboundaries + rep.dim_cohomology


def test_split_field_products_are_acyclic():
    # separable coefficients: no higher cohomology for any module
    from helpers import projector_module

    for n, sizes in [(2, (1, 1)), (2, (2, 1)), (3, (1, 1, 1))]:
        _, mod = projector_module(n, sizes)
        assert cohomology(mod, 1).dim_cohomology == 0
        assert cohomology(mod, 2).dim_cohomology == 0


def test_triangular_algebra_has_no_degree_two_classes():
    # the algebra has a length-one projective bimodule resolution, so
    # degree-two cohomology vanishes for every coefficient module
    from helpers import upper_triangular_pair

    _, mod = upper_triangular_pair()
    assert cohomology(mod, 2).dim_cohomology == 0


def test_enveloping_pair_full_stack():
    from moddef.algebra import EndBimodule, enveloping_left_module
    from moddef.fixtures import fixture_c

    _, small = fixture_c()
    env, mod = enveloping_left_module(small.algebra, EndBimodule(small).action_data())
    # operators on the plane form a free rank-one module over the
    # enveloping algebra here, so nothing deforms
    assert cohomology(mod, 1).dim_cohomology == 0
    assert cohomology(mod, 2).dim_cohomology == 0


def test_dimensions_are_basis_independent():
    from helpers import change_basis

    rng = random.Random(43)
    base_alg, base_mod = fixture_a()
    dims = (
        cohomology(base_mod, 1).dim_cohomology,
        cohomology(base_mod, 2).dim_cohomology,
    )
    for _ in range(4):
        _, mod2 = change_basis(base_alg, base_mod, rng)
        assert (
            cohomology(mod2, 1).dim_cohomology,
            cohomology(mod2, 2).dim_cohomology,
        ) == dims
