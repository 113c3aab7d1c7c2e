"""JSON schemas for every value exchanged through files or reports.

Scalars travel as 4-element arrays of rational strings ("num/den", the
denominator omitted when 1); a bare string in the human-readable form
"1/2 + 3 i - k" is accepted anywhere a scalar is expected. Algebra
parameters are {"a": "-1", "b": "-1"} or {"commutative": true}.
"""

from __future__ import annotations

import re
from typing import Any, Optional, Union

from ._ratio import rat
from .algebra import Algebra, Morphism, Scalar
from .errors import InputError
from .linalg import LEFT, RIGHT, Matrix, Vector, matrix, vector
from .maps import (Componentwise, Compose, MapExpr, MatrixMul, RightScalar,
                   SemilinearForm, Translate)
from .subspaces import AffineSubspace, VectorSubspace


# -- algebra -----------------------------------------------------------------


def algebra_to_json(algebra: Algebra) -> dict:
    if algebra.commutative:
        return {"commutative": True}
    return {"a": str(algebra.a), "b": str(algebra.b)}


def algebra_from_json(data: Any) -> Algebra:
    if not isinstance(data, dict):
        raise InputError("algebra: expected an object")
    if data.get("commutative"):
        return Algebra.rationals()
    try:
        return Algebra.quaternions(rat(str(data["a"])), rat(str(data["b"])))
    except KeyError as err:
        raise InputError(f"algebra: missing field {err.args[0]!r}") from err
    except (ValueError, ZeroDivisionError) as err:
        raise InputError(f"algebra: bad rational ({err})") from err


# -- scalars -----------------------------------------------------------------

_TERM = re.compile(
    r"^\s*([+-]?)\s*((?:\d+(?:\s*/\s*\d+)?)?)\s*([ijk]?)\s*$")


def scalar_to_json(s: Scalar) -> list[str]:
    t, x, y, z = (s.t, s.x, s.y, s.z)
    return [str(t), str(x), str(y), str(z)]


def scalar_to_text(s: Scalar) -> str:
    return str(s)


def scalar_from_text(algebra: Algebra, text: str) -> Scalar:
    coords = {"": rat(0), "i": rat(0), "j": rat(0), "k": rat(0)}
    body = text.strip()
    if not body:
        raise InputError("scalar: empty string")
    chunks = re.findall(r"[+-]?[^+-]+", body)
    for chunk in chunks:
        m = _TERM.match(chunk)
        if not m:
            raise InputError(f"scalar: cannot parse term {chunk!r}")
        sign, mag, unit = m.groups()
        if not mag and not unit:
            raise InputError(f"scalar: cannot parse term {chunk!r}")
        value = rat(mag.replace(" ", "")) if mag else rat(1)
        if sign == "-":
            value = -value
        coords[unit] += value
    return algebra.scalar(coords[""], coords["i"], coords["j"], coords["k"])


def scalar_from_json(algebra: Algebra, data: Any) -> Scalar:
    if isinstance(data, str):
        return scalar_from_text(algebra, data)
    if isinstance(data, (int, float)):
        if isinstance(data, float) and not data.is_integer():
            raise InputError("scalar: floats are not exact; use strings")
        return algebra.scalar(int(data))
    if isinstance(data, list):
        if len(data) not in (1, 4):
            raise InputError("scalar: expected 1 or 4 coordinates")
        try:
            coords = [rat(str(c)) for c in data]
        except (ValueError, ZeroDivisionError) as err:
            raise InputError(f"scalar: bad rational ({err})") from err
        if len(coords) == 1:
            coords += [rat(0)] * 3
        return algebra.scalar(*coords)
    raise InputError("scalar: expected string or coordinate array")


# -- vectors and matrices ------------------------------------------------------


def vector_to_json(v: Vector) -> list:
    return [scalar_to_json(e) for e in v.entries]


def vector_from_json(algebra: Algebra, data: Any) -> Vector:
    if not isinstance(data, list) or not data:
        raise InputError("vector: expected a nonempty array")
    return vector(algebra, [scalar_from_json(algebra, e) for e in data])


def matrix_to_json(m: Matrix) -> list:
    return [vector_to_json(r) for r in m.rows]


def matrix_from_json(algebra: Algebra, data: Any) -> Matrix:
    if not isinstance(data, list) or not data:
        raise InputError("matrix: expected a nonempty array of rows")
    return Matrix(tuple(vector_from_json(algebra, row) for row in data))


# -- morphisms -------------------------------------------------------------------


def morphism_to_json(m: Morphism) -> dict:
    return {"kind": m.kind, "q": scalar_to_json(m.q)}


def morphism_from_json(algebra: Algebra, data: Any) -> Morphism:
    if not isinstance(data, dict):
        raise InputError("morphism: expected an object")
    kind = data.get("kind")
    if kind not in (Morphism.AUTOMORPHISM, Morphism.ANTI_AUTOMORPHISM):
        raise InputError(f"morphism: unknown kind {kind!r}")
    return Morphism(kind, scalar_from_json(algebra, data.get("q")))


# -- subspaces --------------------------------------------------------------------


def subspace_to_json(space: Union[VectorSubspace, AffineSubspace]) -> dict:
    if isinstance(space, AffineSubspace):
        out = subspace_to_json(space.direction)
        out["point"] = vector_to_json(space.point)
        return out
    return {"side": space.side,
            "ambient": space.ambient,
            "basis": [vector_to_json(r) for r in space.rows]}


def subspace_from_json(algebra: Algebra, data: Any, *,
                       ambient: Optional[int] = None
                       ) -> Union[VectorSubspace, AffineSubspace]:
    if not isinstance(data, dict):
        raise InputError("subspace: expected an object")
    side = data.get("side", LEFT)
    if side not in (LEFT, RIGHT):
        raise InputError(f"subspace: side must be left or right, got {side!r}")
    basis_data = data.get("basis")
    if not isinstance(basis_data, list):
        raise InputError("subspace: missing basis array")
    rows = [vector_from_json(algebra, r) for r in basis_data]
    point_data = data.get("point")
    if rows:
        ambient = len(rows[0])
    elif point_data is not None:
        ambient = len(point_data)
    elif data.get("ambient"):
        ambient = int(data["ambient"])
    elif ambient is None:
        raise InputError("subspace: empty basis needs an ambient dimension")
    sub = VectorSubspace.from_vectors(algebra, rows, side, ambient)
    if point_data is None:
        return sub
    point = vector_from_json(algebra, point_data)
    if len(point) != ambient:
        raise InputError("subspace: point length differs from basis width")
    return AffineSubspace(point, sub)


def as_affine(space: Union[VectorSubspace, AffineSubspace]) -> AffineSubspace:
    if isinstance(space, AffineSubspace):
        return space
    from .linalg import zero_vector
    return AffineSubspace(zero_vector(space.algebra, space.ambient), space)


# -- map expressions ----------------------------------------------------------------


def mapexpr_to_json(f: MapExpr) -> dict:
    if isinstance(f, Compose):
        return {"op": "compose", "items": [mapexpr_to_json(x)
                                           for x in f.items]}
    if isinstance(f, Translate):
        return {"op": "translate", "b": vector_to_json(f.b)}
    if isinstance(f, RightScalar):
        return {"op": "right_scalar", "a": scalar_to_json(f.a)}
    if isinstance(f, MatrixMul):
        return {"op": "matrix", "m": matrix_to_json(f.m)}
    if isinstance(f, Componentwise):
        op = "antiauto" if f.morphism.is_anti else "auto"
        return {"op": op, "q": scalar_to_json(f.morphism.q)}
    raise InputError(f"cannot serialize node {type(f).__name__}")


def mapexpr_from_json(algebra: Algebra, data: Any) -> MapExpr:
    if not isinstance(data, dict):
        raise InputError("map: expected an object")
    op = data.get("op")
    if op == "compose":
        items = data.get("items")
        if not isinstance(items, list):
            raise InputError("map: compose needs an items array")
        return Compose(tuple(mapexpr_from_json(algebra, x) for x in items))
    if op == "translate":
        return Translate(vector_from_json(algebra, data.get("b")))
    if op == "right_scalar":
        return RightScalar(scalar_from_json(algebra, data.get("a")))
    if op == "matrix":
        return MatrixMul(matrix_from_json(algebra, data.get("m")))
    if op == "auto":
        return Componentwise(Morphism(
            Morphism.AUTOMORPHISM, scalar_from_json(algebra, data.get("q"))))
    if op == "antiauto":
        return Componentwise(Morphism(
            Morphism.ANTI_AUTOMORPHISM,
            scalar_from_json(algebra, data.get("q"))))
    raise InputError(f"map: unknown op {op!r}")


# -- normal forms ---------------------------------------------------------------------


def form_to_json(form: SemilinearForm) -> dict:
    out = {
        "sigma": scalar_to_json(form.sigma.q),
        "a": scalar_to_json(form.a),
        "diag": [scalar_to_json(d) for d in form.diag],
        "N": matrix_to_json(form.n_matrix),
        "b": vector_to_json(form.b),
    }
    if form.anti is not None:
        out["anti"] = scalar_to_json(form.anti.q)
    return out


def form_from_json(algebra: Algebra, data: Any) -> SemilinearForm:
    if not isinstance(data, dict):
        raise InputError("form: expected an object")
    try:
        sigma = Morphism(Morphism.AUTOMORPHISM,
                         scalar_from_json(algebra, data["sigma"]))
        a = scalar_from_json(algebra, data["a"])
        diag = tuple(scalar_from_json(algebra, d) for d in data["diag"])
        n_matrix = matrix_from_json(algebra, data["N"])
        b = vector_from_json(algebra, data["b"])
    except KeyError as err:
        raise InputError(f"form: missing field {err.args[0]!r}") from err
    anti = None
    if data.get("anti") is not None:
        anti = Morphism(Morphism.ANTI_AUTOMORPHISM,
                        scalar_from_json(algebra, data["anti"]))
    return SemilinearForm(sigma=sigma, a=a, diag=diag, n_matrix=n_matrix,
                          b=b, anti=anti)
