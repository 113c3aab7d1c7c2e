import random

import pytest

from skewaffine import rationals
from skewaffine._ratio import rat
from skewaffine.algebra import Algebra
from skewaffine.linalg import (LEFT, RIGHT, Matrix, matrix, member,
                               membership_constraints, pivot_complement,
                               qcoords, qspan_matrix, row_echelon,
                               side_action_matrix, solve_central_linear,
                               subspace_dim, vector, vector_from_qcoords,
                               identity_matrix, standard_basis_vector)
from skewaffine.randomgen import rand_matrix, rand_scalar, rand_vector

H = Algebra.quaternions()
Q = Algebra.rationals()
i, j, k = H.i(), H.j(), H.k()


def test_rationals_rref_and_rank():
    rows = [[rat(1), rat(2), rat(3)],
            [rat(2), rat(4), rat(6)],
            [rat(0), rat(1), rat(1)]]
    red, pivots = rationals.rref(rows, 3)
    assert pivots == [0, 1]
    assert rationals.rank(rows, 3) == 2
    null = rationals.nullspace(rows, 3)
    assert len(null) == 1
    for r in rows:
        assert sum(a * b for a, b in zip(r, null[0])) == 0


def test_rationals_solve_and_invert():
    a = [[rat(2), rat(1)], [rat(1), rat(3)]]
    x = rationals.solve(a, [rat(5), rat(10)])
    assert rationals.mat_vec(a, x) == [rat(5), rat(10)]
    inv = rationals.invert(a)
    assert rationals.mat_mul(a, inv) == rationals.identity(2)
    assert rationals.solve([[rat(1), rat(1)], [rat(1), rat(1)]],
                           [rat(0), rat(1)]) is None
    assert rationals.invert([[rat(1), rat(2)], [rat(2), rat(4)]]) is None


class TestEchelon:
    def test_hand_example(self):
        # second row is i * first row; third pivots in column 1
        m = matrix(H, [[1, i, 0], [i, -1, 0], [0, j, 1]])
        ech = row_echelon(m, LEFT)
        assert ech.pivots == (0, 1)
        assert ech.rows == (vector(H, [1, 0, k]), vector(H, [0, 1, -j]))

    def test_identity(self):
        m = identity_matrix(H, 3)
        for side in (LEFT, RIGHT):
            ech = row_echelon(m, side)
            assert ech.pivots == (0, 1, 2)
            assert ech.rows == m.rows

    def test_zero_matrix(self):
        m = matrix(H, [[0, 0], [0, 0]])
        assert subspace_dim(m, LEFT) == 0
        assert subspace_dim(m, RIGHT) == 0

    def test_left_right_differ(self):
        # the left span of (1, i) contains (j, ji) but the right span
        # holds (j, ij) instead
        m = matrix(H, [[1, i]])
        assert member(vector(H, [j, j * i]), m, LEFT)
        assert not member(vector(H, [j, j * i]), m, RIGHT)
        assert member(vector(H, [j, i * j]), m, RIGHT)

    def test_idempotent(self):
        rng = random.Random(11)
        for _ in range(10):
            m = rand_matrix(rng, H, 3, 4, 5)
            side = rng.choice((LEFT, RIGHT))
            ech = row_echelon(m, side)
            if not ech.rows:
                continue
            again = row_echelon(Matrix(ech.rows), side)
            assert again.rows == ech.rows
            assert again.pivots == ech.pivots

    def test_span_preserved(self):
        rng = random.Random(12)
        for _ in range(10):
            m = rand_matrix(rng, H, 3, 4, 5)
            for side in (LEFT, RIGHT):
                ech = row_echelon(m, side)
                for row in m.rows:
                    assert member(row, Matrix(ech.rows) if ech.rows else m, side) \
                        or row.is_zero()
                if ech.rows:
                    for row in ech.rows:
                        assert member(row, m, side)

    def test_dim_invariant_under_row_scaling(self):
        rng = random.Random(13)
        for _ in range(10):
            m = rand_matrix(rng, H, 3, 3, 4)
            d = subspace_dim(m, LEFT)
            rows = list(m.rows)
            rng.shuffle(rows)
            c = rand_scalar(rng, H, 4, nonzero=True)
            rows[0] = rows[0].left_mul(c)
            assert subspace_dim(Matrix(tuple(rows)), LEFT) == d


class TestMembership:
    def test_left_multiple(self):
        m = matrix(H, [[1, i, 0]])
        assert member(vector(H, [i, -1, 0]), m, LEFT)

    def test_last_coordinate(self):
        m = matrix(H, [[1, i, 0]])
        assert not member(vector(H, [0, 0, 1]), m, LEFT)

    def test_commutative_matches_classical(self):
        rng = random.Random(14)
        for _ in range(25):
            m = rand_matrix(rng, Q, 3, 4, 6)
            v = rand_vector(rng, Q, 4, 6)
            qrows = [[e.t for e in row] for row in m.rows]
            red, piv = rationals.rref(qrows, 4)
            classical = rationals.in_span([e.t for e in v], red, piv)
            assert member(v, m, LEFT) == classical
            assert member(v, m, RIGHT) == classical
            assert subspace_dim(m, LEFT) == len(piv)


class TestPivotComplement:
    def test_hand_example(self):
        m = matrix(H, [[1, i, 0], [i, -1, 0], [0, j, 1]])
        pc = pivot_complement(m, LEFT)
        assert pc.indices == (2,)

    def test_identity(self):
        pc = pivot_complement(identity_matrix(H, 3), LEFT)
        assert pc.indices == ()

    def test_zero(self):
        pc = pivot_complement(matrix(H, [[0, 0]]), LEFT)
        assert pc.indices == (0, 1)

    def test_dimension_formula(self):
        rng = random.Random(15)
        for _ in range(20):
            n = rng.randint(1, 5)
            m = rand_matrix(rng, H, rng.randint(1, n + 1), n, 5)
            side = rng.choice((LEFT, RIGHT))
            pc = pivot_complement(m, side)
            assert subspace_dim(m, side) == n - len(pc.indices)


class TestRankOracle:
    def test_four_times_dim_is_rational_rank(self):
        rng = random.Random(16)
        for _ in range(20):
            n = rng.randint(1, 4)
            m = rand_matrix(rng, H, rng.randint(1, n + 1), n, 5)
            for side in (LEFT, RIGHT):
                qrank = rationals.rank(qspan_matrix(m, side), 4 * n)
                assert 4 * subspace_dim(m, side) == qrank

    def test_commutative_dim_is_classical_rank(self):
        rng = random.Random(17)
        for _ in range(20):
            m = rand_matrix(rng, Q, 3, 3, 6)
            qrank = rationals.rank(qspan_matrix(m, LEFT), 3)
            assert subspace_dim(m, LEFT) == qrank


class TestDimComparison:
    def test_right_inside_left(self):
        rng = random.Random(18)
        from skewaffine.randomgen import rand_two_sided_subspace
        from skewaffine.subspaces import VectorSubspace
        for _ in range(25):
            n = rng.randint(1, 4)
            u = rand_two_sided_subspace(rng, H, n, 4)
            if u.dim == 0:
                continue
            # random right combinations of the rational basis stay inside
            w_rows = []
            for _ in range(rng.randint(1, u.dim)):
                acc = u.rows[0].right_mul(rand_scalar(rng, H, 3))
                for r in u.rows[1:]:
                    acc = acc + r.right_mul(rand_scalar(rng, H, 3))
                w_rows.append(acc)
            w = VectorSubspace.from_vectors(H, w_rows, RIGHT, n)
            extra = [rand_vector(rng, H, n, 4) for _ in range(rng.randint(0, 2))]
            v = VectorSubspace.from_vectors(
                H, list(u.rows) + extra, LEFT, n)
            assert all(v.contains(r) for r in w.rows)
            assert w.dim <= v.dim
            same_q = rationals.rref(w.qrows(), 4 * n)[0] == \
                rationals.rref(v.qrows(), 4 * n)[0]
            if not same_q:
                assert w.dim < v.dim


class TestCentralSolver:
    def test_no_constraints(self):
        sols = solve_central_linear([], 1, H)
        assert len(sols) == 4

    def test_centrality_constraint(self):
        # kill the i, j, k coordinates of a single scalar variable
        rows = [[rat(0), rat(1), rat(0), rat(0)],
                [rat(0), rat(0), rat(1), rat(0)],
                [rat(0), rat(0), rat(0), rat(1)]]
        sols = solve_central_linear(rows, 1, H)
        assert len(sols) == 1
        assert sols[0].entries[0] == H.one()

    def test_right_closure_example(self):
        # inside the left span of (1,i,0) and (0,0,1) the only right line
        # is spanned by (0,0,1)
        m = matrix(H, [[1, i, 0], [0, 0, 1]])
        target, _ = rationals.rref(qspan_matrix(m, LEFT), 12)
        constraints = []
        for c in H.basis():
            act = side_action_matrix(c, RIGHT, 3)
            constraints.extend(membership_constraints(target, act, 12))
        sols = solve_central_linear(constraints, 3, H)
        sub = Matrix(tuple(sols))
        assert subspace_dim(sub, RIGHT) == 1
        ech = row_echelon(sub, RIGHT)
        assert ech.rows[0] == standard_basis_vector(H, 3, 2)

    def test_roundtrip_coords(self):
        rng = random.Random(19)
        v = rand_vector(rng, H, 3, 5)
        assert vector_from_qcoords(H, qcoords(v)) == v
