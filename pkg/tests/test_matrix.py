"""Matrix kernel: algebra, elimination, subspaces, memberships, index."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ginv import (
    DimensionError,
    Matrix,
    NoSolutionError,
    adjoint,
    full_rank_factorize,
    hstack,
    ideal_membership,
    image_of,
    kernel_of,
    kronecker,
    matrix_algebra,
    nilpotency_and_index,
    nullspace_basis,
    rank,
    rref,
    solve_right,
    subspace_relate,
    unvec,
    vec,
)
from ginv.matrix import reconstruct
from ginv.scalar import GaussianRational as GR

from conftest import POOL, rank_by_minors, small_random_matrices

I = GR(0, 1)


def small_matrices(max_dim=3):
    entries = st.sampled_from(POOL)
    return st.integers(1, max_dim).flatmap(
        lambda n: st.integers(1, max_dim).flatmap(
            lambda m: st.lists(
                st.lists(entries, min_size=m, max_size=m), min_size=n, max_size=n
            ).map(Matrix)
        )
    )


class TestAlgebra:
    def test_fixture_products(self, fx):
        assert matrix_algebra("mul", fx.X, fx.Y).is_zero()
        assert matrix_algebra("pow", fx.X, 2) == fx.X.scale(3)
        assert matrix_algebra("add", fx.X, fx.Y) == fx.A

    def test_scale_and_sub(self, fx):
        assert matrix_algebra("scale", GR(3), fx.Z) == fx.X.scale(F(1, 3))
        assert matrix_algebra("sub", fx.A, fx.Y) == fx.X

    def test_pow_zero_is_identity(self, fx):
        assert fx.A**0 == Matrix.identity(3)

    def test_pow_requires_square(self):
        with pytest.raises(DimensionError):
            Matrix.zeros(2, 3) ** 2

    def test_dimension_mismatch(self, fx):
        with pytest.raises(DimensionError):
            fx.A + fx.N
        with pytest.raises(DimensionError):
            fx.A.matmul(fx.N)

    def test_zero_width_products(self):
        f = Matrix.zeros(2, 0)
        g = Matrix.zeros(0, 3)
        assert f.matmul(g) == Matrix.zeros(2, 3)
        assert rank(f) == 0


class TestAdjoint:
    def test_hermitian_fixture(self, fx):
        assert adjoint(fx.X) == fx.X

    def test_shift_matrix(self, fx):
        assert adjoint(fx.N) == Matrix([[0, 0], [1, 0]])

    def test_scalar_conjugation(self):
        one_plus_i = Matrix([[1 + I]])
        assert adjoint(one_plus_i) == Matrix([[1 - I]])

    @given(small_matrices(), st.data())
    @settings(max_examples=40, deadline=None)
    def test_involution_laws(self, a, data):
        b = data.draw(small_matrices().filter(lambda m: m.rows == a.cols))
        assert adjoint(adjoint(a)) == a
        assert adjoint(a.matmul(b)) == adjoint(b).matmul(adjoint(a))
        assert rank(adjoint(a)) == rank(a)


class TestRref:
    def test_fixture_ranks(self, fx):
        reduced, rk, pivots = rref(fx.X)
        assert rk == 1 and pivots == (0,)
        assert rank(fx.A) == 2
        assert rank(fx.I3) == 3

    def test_idempotent(self, fx):
        reduced, _, _ = rref(fx.A)
        again, _, _ = rref(reduced)
        assert again == reduced

    def test_rank_matches_minor_oracle(self, fx):
        for m in [fx.A, fx.X, fx.Y, fx.N, fx.I3]:
            assert rank(m) == rank_by_minors(m)
        for m in small_random_matrices(seed=7, count=25):
            assert rank(m) == rank_by_minors(m)


class TestSolveRight:
    def test_identity(self, fx):
        b = Matrix([[1, 2], [3, 4], [5, 6]])
        assert solve_right(fx.I3, b) == b

    def test_no_solution(self, fx):
        with pytest.raises(NoSolutionError):
            solve_right(fx.N, Matrix([[0], [1]]))

    def test_canonical_solution_zero_off_pivots(self, fx):
        u = solve_right(fx.X, fx.X.scale(3))
        assert fx.X.matmul(u) == fx.X.scale(3)
        # pivot column of X is 0, so rows 1 and 2 of u stay zero
        assert all(not u[i, j] for i in (1, 2) for j in range(3))

    def test_dimension_error(self, fx):
        with pytest.raises(DimensionError):
            solve_right(fx.N, Matrix([[1], [2], [3]]))

    @given(small_matrices(), st.data())
    @settings(max_examples=40, deadline=None)
    def test_solution_solves(self, a, data):
        cols = data.draw(st.integers(1, 2))
        u0 = data.draw(
            st.lists(
                st.lists(st.sampled_from(POOL), min_size=cols, max_size=cols),
                min_size=a.cols,
                max_size=a.cols,
            ).map(Matrix)
        )
        b = a.matmul(u0)  # consistent by construction
        u = solve_right(a, b)
        assert a.matmul(u) == b


class TestNullspace:
    def test_identity_trivial(self, fx):
        assert nullspace_basis(fx.I3) == []

    def test_zero_matrix(self):
        basis = nullspace_basis(Matrix.zeros(3, 3))
        assert hstack(*basis) == Matrix.identity(3)

    def test_fixture_kernel(self, fx):
        basis = nullspace_basis(fx.X)
        assert basis == [Matrix([[-(1 + I)], [1], [0]]), Matrix([[0], [0], [1]])]
        for v in basis:
            assert fx.X.matmul(v).is_zero()

    @given(small_matrices())
    @settings(max_examples=40, deadline=None)
    def test_size_and_annihilation(self, a):
        basis = nullspace_basis(a)
        assert len(basis) == a.cols - rank(a)
        for v in basis:
            assert a.matmul(v).is_zero()


class TestFullRankFactorization:
    def test_fixture(self, fx):
        frf = full_rank_factorize(fx.X)
        assert frf.f == Matrix([[1], [1 - I], [0]])
        assert frf.g == Matrix([[1, 1 + I, 0]])
        assert frf.f.matmul(frf.g) == fx.X

    def test_identity(self, fx):
        frf = full_rank_factorize(fx.I2)
        assert frf.f == fx.I2 and frf.g == fx.I2

    def test_degenerate_zero(self):
        frf = full_rank_factorize(Matrix.zeros(2, 2))
        assert frf.rank == 0
        assert frf.f.shape == (2, 0) and frf.g.shape == (0, 2)
        assert frf.f.matmul(frf.g) == Matrix.zeros(2, 2)

    def test_ranks_on_random(self):
        for m in small_random_matrices(seed=11, count=25):
            frf = full_rank_factorize(m)
            assert frf.f.matmul(frf.g) == m
            assert rank(frf.f) == rank(frf.g) == frf.rank == rank(m)


class TestSubspaces:
    def test_image_equality(self, fx):
        assert subspace_relate(image_of(fx.A**2), image_of(fx.X), "equals")

    def test_kernel_inequality(self, fx):
        assert not subspace_relate(kernel_of(fx.X), kernel_of(fx.A), "equals")

    def test_containment(self, fx):
        assert subspace_relate(image_of(fx.I3), image_of(fx.X), "contains")
        assert not subspace_relate(image_of(fx.X), image_of(fx.I3), "contains")

    def test_ambient_mismatch(self, fx):
        with pytest.raises(DimensionError):
            subspace_relate(image_of(fx.I3), image_of(fx.N), "equals")

    def test_equivalence_relation(self, fx):
        descriptors = [
            image_of(fx.X),
            image_of(fx.X.scale(3)),
            image_of(fx.A),
            kernel_of(fx.A),
            kernel_of(fx.X),
            image_of(fx.I3),
        ]
        for p in descriptors:
            assert subspace_relate(p, p, "equals")
        for p in descriptors:
            for q in descriptors:
                assert subspace_relate(p, q, "equals") == subspace_relate(
                    q, p, "equals"
                )
        for p in descriptors:
            for q in descriptors:
                for r in descriptors:
                    if subspace_relate(p, q, "equals") and subspace_relate(
                        q, r, "equals"
                    ):
                        assert subspace_relate(p, r, "equals")


class TestMembership:
    def test_in_left_ideal(self, fx):
        outcome = ideal_membership("x_in_aR", fx.Z, fx.X)
        assert outcome.holds
        assert fx.X.matmul(outcome.witness) == fx.Z

    def test_not_in_left_ideal(self, fx):
        # every member of X R has a zero third row; Y does not
        assert not ideal_membership("x_in_aR", fx.Y, fx.X).holds

    def test_in_right_ideal(self, fx):
        outcome = ideal_membership("x_in_Ra", fx.Z, fx.X)
        assert outcome.holds
        assert outcome.witness.matmul(fx.X) == fx.Z

    def test_sandwich_zero(self, fx):
        outcome = ideal_membership("x_in_bRx", Matrix.zeros(3, 3), fx.A)
        assert outcome.holds
        assert reconstruct(outcome, Matrix.zeros(3, 3), fx.A).is_zero()

    def test_sandwich_witness_reconstructs(self, fx):
        outcome = ideal_membership("x_in_bRx", fx.Z, fx.X.scale(3))
        assert outcome.holds
        assert reconstruct(outcome, fx.Z, fx.X.scale(3)) == fx.Z

    def test_dimension_error(self, fx):
        with pytest.raises(DimensionError):
            ideal_membership("x_in_aR", fx.Z, fx.N)


class TestVectorization:
    @given(st.data())
    @settings(max_examples=30, deadline=None)
    def test_kronecker_identity(self, data):
        n = data.draw(st.integers(1, 3))
        draw = lambda: Matrix(
            [
                [data.draw(st.sampled_from(POOL)) for _ in range(n)]
                for _ in range(n)
            ]
        )
        a, r, b = draw(), draw(), draw()
        lhs = vec(a.matmul(r).matmul(b))
        rhs = kronecker(b.t, a).matmul(vec(r))
        assert lhs == rhs
        assert unvec(vec(r), n, n) == r


class TestIndex:
    def test_fixtures(self, fx):
        assert nilpotency_and_index(fx.Y) == (True, 2)
        assert nilpotency_and_index(fx.X) == (False, 1)
        assert nilpotency_and_index(fx.A) == (False, 2)
        assert nilpotency_and_index(fx.N) == (True, 2)

    def test_rank_chain_of_A(self, fx):
        assert [rank(fx.A**k) for k in (1, 2, 3)] == [2, 1, 1]

    def test_zero_matrix_convention(self):
        assert nilpotency_and_index(Matrix.zeros(2, 2)) == (True, 1)

    def test_invertible_has_index_zero(self, fx):
        assert nilpotency_and_index(fx.I3) == (False, 0)

    def test_requires_square(self):
        with pytest.raises(DimensionError):
            nilpotency_and_index(Matrix.zeros(2, 3))

    def test_index_bounded_by_size(self):
        for m in small_random_matrices(seed=23, count=25, square=True):
            nilpotent, k = nilpotency_and_index(m)
            assert k <= m.rows
            assert rank(m**k) == rank(m ** (k + 1))
            if nilpotent:
                assert (m**m.rows).is_zero()
