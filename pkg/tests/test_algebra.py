import pytest
from hypothesis import given, settings, strategies as st

from skewaffine._ratio import rat
from skewaffine.algebra import Algebra, Morphism, restrict_scalars
from skewaffine.errors import DivisionByZero, InputError
from skewaffine import rationals

H = Algebra.quaternions()
Q = Algebra.rationals()


def rats(max_den=6):
    return st.builds(
        rat,
        st.integers(min_value=-8, max_value=8),
        st.integers(min_value=1, max_value=max_den),
    )


def scalars(algebra=H):
    if algebra.commutative:
        return st.builds(lambda t: algebra.scalar(t), rats())
    return st.builds(lambda t, x, y, z: algebra.scalar(t, x, y, z),
                     rats(), rats(), rats(), rats())


def nonzero_scalars(algebra=H):
    return scalars(algebra).filter(lambda s: not s.is_zero())


class TestMultiplicationTable:
    def test_one_plus_i_times_one_plus_j(self):
        got = (H.one() + H.i()) * (H.one() + H.j())
        assert got == H.scalar(1, 1, 1, 1)

    def test_ij_and_ji(self):
        assert H.i() * H.j() == H.k()
        assert H.j() * H.i() == -H.k()

    def test_i_squared_uses_parameter(self):
        A = Algebra.quaternions(-2, -3)
        assert A.i() * A.i() == A.scalar(-2)
        assert A.j() * A.j() == A.scalar(-3)
        assert A.k() * A.k() == A.scalar(-6)

    def test_associativity_spot(self):
        x = H.scalar(1, 2, 0, -1)
        y = H.scalar(0, 1, 1, 0)
        z = H.scalar(rat(1, 2), 0, 3, 1)
        assert (x * y) * z == x * (y * z)


class TestInverse:
    def test_one_plus_i_plus_j_plus_k(self):
        s = H.scalar(1, 1, 1, 1)
        assert s.norm() == 4
        inv = s.inverse()
        assert inv == H.scalar(rat(1, 4), rat(-1, 4), rat(-1, 4), rat(-1, 4))
        assert s * inv == H.one()
        assert inv * s == H.one()

    def test_identity(self):
        assert H.one().inverse() == H.one()

    def test_i_inverse(self):
        assert H.i().inverse() == -H.i()

    def test_zero_raises(self):
        with pytest.raises(DivisionByZero):
            H.zero().inverse()


class TestCentrality:
    def test_rational_is_central(self):
        assert H.scalar(rat(7, 3)).is_central()

    def test_i_plus_j_not_central(self):
        s = H.i() + H.j()
        assert not s.is_central()
        # the defining commutator
        assert H.i() * s - s * H.i() == H.k().scale(2)

    def test_zero_is_central(self):
        assert H.zero().is_central()

    def test_central_means_commutes_with_generators(self):
        s = H.scalar(2, 1, 0, 0)
        for g in H.generators():
            assert (s * g == g * s) == s.is_central() or not s.is_central()


@settings(max_examples=60, deadline=None)
@given(nonzero_scalars(), nonzero_scalars())
def test_norm_positive_and_multiplicative(x, y):
    assert x.norm() > 0
    assert (x * y).norm() == x.norm() * y.norm()


@settings(max_examples=60, deadline=None)
@given(scalars(), scalars())
def test_conjugation_reverses_products(x, y):
    assert (x * y).conjugate() == y.conjugate() * x.conjugate()


class TestMorphism:
    def test_identity_automorphism(self):
        m = Morphism.identity(H)
        assert m(H.i()) == H.i()

    def test_quaternion_conjugation(self):
        m = Morphism.conjugation(H)
        assert m(H.i()) == -H.i()
        assert m(H.scalar(2)) == H.scalar(2)

    def test_inner_by_one_plus_i(self):
        # q = 1+i conjugates j to -k and k to j, fixing i
        m = Morphism(Morphism.AUTOMORPHISM, H.scalar(1, 1, 0, 0))
        assert m(H.i()) == H.i()
        assert m(H.j()) == -H.k()
        assert m(H.k()) == H.j()

    def test_anti_by_one_plus_i(self):
        m = Morphism(Morphism.ANTI_AUTOMORPHISM, H.scalar(1, 1, 0, 0))
        assert m(H.i()) == -H.i()
        assert m(H.j()) == H.k()
        assert m(H.k()) == -H.j()

    def test_conjugator_normalization(self):
        m = Morphism(Morphism.AUTOMORPHISM, H.scalar(0, 0, 3, 3))
        assert m.q == H.scalar(0, 0, 1, 1)

    def test_compose_and_inverse(self):
        m1 = Morphism(Morphism.ANTI_AUTOMORPHISM, H.scalar(1, 1, 0, 0))
        m2 = Morphism(Morphism.AUTOMORPHISM, H.scalar(1, 0, 2, 0))
        comp = m1.compose(m2)
        for s in (H.i(), H.j(), H.scalar(1, 2, 3, 4)):
            assert comp(s) == m1(m2(s))
        inv = m1.inverse()
        for s in (H.i(), H.j(), H.scalar(1, 2, 3, 4)):
            assert inv(m1(s)) == s

    def test_zero_conjugator_rejected(self):
        with pytest.raises(InputError):
            Morphism(Morphism.AUTOMORPHISM, H.zero())


@settings(max_examples=40, deadline=None)
@given(scalars(), scalars())
def test_automorphism_preserves_products(x, y):
    m = Morphism(Morphism.AUTOMORPHISM, H.scalar(1, 1, 0, 0))
    assert m(x * y) == m(x) * m(y)
    assert m(x + y) == m(x) + m(y)


@settings(max_examples=40, deadline=None)
@given(scalars(), scalars())
def test_anti_automorphism_reverses_products(x, y):
    m = Morphism(Morphism.ANTI_AUTOMORPHISM, H.scalar(1, 0, 1, 0))
    assert m(x * y) == m(y) * m(x)


def test_morphisms_fix_central_scalars():
    for kind in (Morphism.AUTOMORPHISM, Morphism.ANTI_AUTOMORPHISM):
        m = Morphism(kind, H.scalar(2, -1, 0, 3))
        assert m(H.scalar(rat(5, 7))) == H.scalar(rat(5, 7))


class TestRestrictScalars:
    def test_one_is_identity(self):
        for side in ("left", "right"):
            assert restrict_scalars(H.one(), side) == rationals.identity(4)

    def test_left_by_i(self):
        m = restrict_scalars(H.i(), "left")
        # columns are the images of 1, i, j, k
        assert [row[0] for row in m] == [0, 1, 0, 0]   # 1 -> i
        assert [row[1] for row in m] == [-1, 0, 0, 0]  # i -> -1
        assert [row[2] for row in m] == [0, 0, 0, 1]   # j -> k
        assert [row[3] for row in m] == [0, 0, -1, 0]  # k -> -j

    def test_matrix_matches_multiplication(self):
        x = H.scalar(1, -2, rat(1, 3), 0)
        v = H.scalar(0, 1, 1, 5)
        left = restrict_scalars(x, "left")
        assert rationals.mat_vec(left, list(v.coords())) == list((x * v).coords())
        right = restrict_scalars(x, "right")
        assert rationals.mat_vec(right, list(v.coords())) == list((v * x).coords())


@settings(max_examples=40, deadline=None)
@given(scalars(), scalars())
def test_left_and_right_actions_commute(x, y):
    lx = restrict_scalars(x, "left")
    ry = restrict_scalars(y, "right")
    assert rationals.mat_mul(lx, ry) == rationals.mat_mul(ry, lx)


@settings(max_examples=40, deadline=None)
@given(scalars(), scalars())
def test_restriction_homomorphism_sides(x, y):
    assert restrict_scalars(x * y, "left") == rationals.mat_mul(
        restrict_scalars(x, "left"), restrict_scalars(y, "left"))
    assert restrict_scalars(x * y, "right") == rationals.mat_mul(
        restrict_scalars(y, "right"), restrict_scalars(x, "right"))


class TestCommutativeMode:
    def test_scalars_are_rationals(self):
        s = Q.scalar(rat(3, 4))
        assert s.is_central()
        assert (s * s).t == rat(9, 16)

    def test_nonzero_imaginary_rejected(self):
        with pytest.raises(InputError):
            Q.scalar(1, 1, 0, 0)

    def test_block_dim(self):
        assert Q.block_dim == 1
        assert H.block_dim == 4
        assert restrict_scalars(Q.scalar(5), "left") == [[5]]

    def test_bad_params_rejected(self):
        with pytest.raises(InputError):
            Algebra.quaternions(1, -1)
