import random

import pytest

from skewaffine._ratio import rat
from skewaffine import serialization as ser
from skewaffine.algebra import Algebra, Morphism
from skewaffine.errors import InputError
from skewaffine.linalg import LEFT, RIGHT, matrix, vector
from skewaffine.maps import (Componentwise, Compose, MatrixMul, RightScalar,
                             Translate)
from skewaffine.randomgen import (rand_affine, rand_matrix, rand_scalar,
                                  rand_semilinear_form, rand_subspace,
                                  rand_vector)
from skewaffine.subspaces import AffineSubspace

H = Algebra.quaternions()
Q = Algebra.rationals()


class TestAlgebra:
    def test_roundtrip_quaternions(self):
        a = Algebra.quaternions(rat(-2), rat(-7, 3))
        assert ser.algebra_from_json(ser.algebra_to_json(a)) == a

    def test_roundtrip_rationals(self):
        assert ser.algebra_from_json({"commutative": True}).commutative

    def test_string_params(self):
        a = ser.algebra_from_json({"a": "-1", "b": "-3/2"})
        assert a.b == rat(-3, 2)

    def test_missing_field(self):
        with pytest.raises(InputError):
            ser.algebra_from_json({"a": "-1"})


class TestScalar:
    def test_json_roundtrip(self):
        rng = random.Random(50)
        for _ in range(20):
            s = rand_scalar(rng, H, 9)
            assert ser.scalar_from_json(H, ser.scalar_to_json(s)) == s

    def test_structured_shape(self):
        s = H.scalar(rat(1, 2), 3, 0, -1)
        assert ser.scalar_to_json(s) == ["1/2", "3", "0", "-1"]

    def test_text_form(self):
        s = H.scalar(rat(1, 2), 3, 0, -1)
        assert str(s) == "1/2 + 3 i - k"
        assert ser.scalar_from_text(H, "1/2 + 3 i - k") == s
        assert ser.scalar_from_text(H, "0") == H.zero()
        assert ser.scalar_from_text(H, "-i + 2/3 j") == \
            H.scalar(0, -1, rat(2, 3), 0)

    def test_text_roundtrip(self):
        rng = random.Random(51)
        for _ in range(30):
            s = rand_scalar(rng, H, 9)
            assert ser.scalar_from_text(H, str(s)) == s

    def test_bad_input(self):
        with pytest.raises(InputError):
            ser.scalar_from_json(H, ["1", "2"])
        with pytest.raises(InputError):
            ser.scalar_from_text(H, "1 + q")
        with pytest.raises(InputError):
            ser.scalar_from_json(H, 1.5)

    def test_int_accepted(self):
        assert ser.scalar_from_json(H, 7) == H.scalar(7)

    def test_commutative_single_coordinate(self):
        assert ser.scalar_from_json(Q, ["5/3"]) == Q.scalar(rat(5, 3))


class TestContainers:
    def test_vector_matrix_roundtrip(self):
        rng = random.Random(52)
        v = rand_vector(rng, H, 4, 6)
        assert ser.vector_from_json(H, ser.vector_to_json(v)) == v
        m = rand_matrix(rng, H, 3, 4, 6)
        assert ser.matrix_from_json(H, ser.matrix_to_json(m)) == m

    def test_subspace_roundtrip(self):
        rng = random.Random(53)
        for _ in range(10):
            sub = rand_subspace(rng, H, 3, 5)
            back = ser.subspace_from_json(H, ser.subspace_to_json(sub))
            assert back == sub
            aff = rand_affine(rng, H, 3, 5)
            back = ser.subspace_from_json(H, ser.subspace_to_json(aff))
            assert back == aff

    def test_empty_basis_needs_ambient(self):
        with pytest.raises(InputError):
            ser.subspace_from_json(H, {"side": "left", "basis": []})
        sub = ser.subspace_from_json(
            H, {"side": "left", "basis": [], "ambient": 3})
        assert sub.dim == 0 and sub.ambient == 3

    def test_bad_side(self):
        with pytest.raises(InputError):
            ser.subspace_from_json(H, {"side": "up", "basis": [[["1"] * 4]]})


class TestMapExpr:
    def test_roundtrip(self):
        expr = Compose((
            RightScalar(H.i()),
            MatrixMul(matrix(H, [[1, 2], [0, 1]])),
            Translate(vector(H, [1, 0])),
            Componentwise(Morphism.identity(H)),
            Componentwise(Morphism.conjugation(H)),
        ))
        data = ser.mapexpr_to_json(expr)
        assert data["op"] == "compose"
        assert [item["op"] for item in data["items"]] == \
            ["right_scalar", "matrix", "translate", "auto", "antiauto"]
        assert ser.mapexpr_from_json(H, data) == expr

    def test_unknown_op(self):
        with pytest.raises(InputError):
            ser.mapexpr_from_json(H, {"op": "reflect"})


class TestForm:
    def test_roundtrip_both_modes(self):
        rng = random.Random(54)
        for mode in ("same_side", "side_swap"):
            form = rand_semilinear_form(rng, H, 3, 5, mode=mode)
            data = ser.form_to_json(form)
            assert ("anti" in data) == (mode == "side_swap")
            assert ser.form_from_json(H, data) == form

    def test_missing_field(self):
        with pytest.raises(InputError):
            ser.form_from_json(H, {"sigma": ["1", "0", "0", "0"]})
