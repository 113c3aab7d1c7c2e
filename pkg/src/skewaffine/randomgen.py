"""Seeded generators for scalars, subspaces, morphisms and normal forms.

Everything is driven by an explicit random.Random so that identical
seeds give identical objects on every platform. Rational samples are
uniform numerator/denominator pairs in [-H, H] with a nonzero
denominator, reduced by the rational constructor.
"""

from __future__ import annotations

import random
from typing import Optional

from . import rationals
from ._ratio import Rat, rat
from .algebra import Algebra, Morphism, Scalar
from .linalg import LEFT, RIGHT, Matrix, Vector, matrix, vector
from .subspaces import (AffineSubspace, Sidedness, VectorSubspace,
                        classify_sidedness)


def rand_rational(rng: random.Random, height: int) -> Rat:
    num = rng.randint(-height, height)
    den = 0
    while den == 0:
        den = rng.randint(-height, height)
    return rat(num, den)


def rand_nonzero_rational(rng: random.Random, height: int) -> Rat:
    while True:
        r = rand_rational(rng, height)
        if r:
            return r


def rand_scalar(rng: random.Random, algebra: Algebra, height: int,
                nonzero: bool = False) -> Scalar:
    while True:
        if algebra.commutative:
            s = algebra.scalar(rand_rational(rng, height))
        else:
            s = algebra.scalar(*(rand_rational(rng, height)
                                 for _ in range(4)))
        if not nonzero or not s.is_zero():
            return s


def rand_central_scalar(rng: random.Random, algebra: Algebra, height: int,
                        nonzero: bool = False) -> Scalar:
    r = (rand_nonzero_rational(rng, height) if nonzero
         else rand_rational(rng, height))
    return algebra.scalar(r)


def rand_vector(rng: random.Random, algebra: Algebra, n: int,
                height: int, nonzero: bool = False) -> Vector:
    while True:
        v = vector(algebra, [rand_scalar(rng, algebra, height)
                             for _ in range(n)])
        if not nonzero or not v.is_zero():
            return v


def rand_matrix(rng: random.Random, algebra: Algebra, nrows: int,
                ncols: int, height: int) -> Matrix:
    return matrix(algebra, [[rand_scalar(rng, algebra, height)
                             for _ in range(ncols)]
                            for _ in range(nrows)])


def rand_invertible_matrix(rng: random.Random, algebra: Algebra, n: int,
                           height: int) -> Matrix:
    from .linalg import subspace_dim
    while True:
        m = rand_matrix(rng, algebra, n, n, height)
        if subspace_dim(m, LEFT) == n:
            return m


def rand_invertible_rational_matrix(rng: random.Random, n: int,
                                    height: int):
    while True:
        rows = [[rand_rational(rng, height) for _ in range(n)]
                for _ in range(n)]
        if rationals.rank(rows, n) == n:
            return rows


def rand_subspace(rng: random.Random, algebra: Algebra, n: int,
                  height: int, dim: Optional[int] = None,
                  side: Optional[str] = None) -> VectorSubspace:
    if side is None:
        side = rng.choice((LEFT, RIGHT))
    if dim is None:
        dim = rng.randint(0, n)
    if dim == 0:
        return VectorSubspace.zero(algebra, n, side)
    while True:
        rows = [rand_vector(rng, algebra, n, height) for _ in range(dim)]
        sub = VectorSubspace.from_vectors(algebra, rows, side, n)
        if sub.dim == dim:
            return sub


def rand_two_sided_subspace(rng: random.Random, algebra: Algebra, n: int,
                            height: int, dim: Optional[int] = None,
                            side: str = LEFT) -> VectorSubspace:
    """Random two-sided subspace: the span of a random rational matrix."""
    if dim is None:
        dim = rng.randint(0, n)
    if dim == 0:
        return VectorSubspace.zero(algebra, n, side)
    while True:
        rows = [vector(algebra, [rand_rational(rng, height)
                                 for _ in range(n)])
                for _ in range(dim)]
        sub = VectorSubspace.from_vectors(algebra, rows, side, n)
        if sub.dim == dim:
            return sub


def rand_purely_sided_subspace(rng: random.Random, algebra: Algebra, n: int,
                               height: int, dim: Optional[int] = None,
                               side: Optional[str] = None) -> VectorSubspace:
    """Rejection-sample a subspace that is not two-sided."""
    if algebra.commutative:
        raise ValueError("no purely one-sided subspaces over a field")
    if side is None:
        side = rng.choice((LEFT, RIGHT))
    if dim is None:
        dim = rng.randint(1, max(1, n - 1))
    while True:
        sub = rand_subspace(rng, algebra, n, height, dim=dim, side=side)
        if classify_sidedness(sub) is not Sidedness.TWO_SIDED:
            return sub


def rand_affine(rng: random.Random, algebra: Algebra, n: int, height: int,
                dim: Optional[int] = None,
                side: Optional[str] = None) -> AffineSubspace:
    sub = rand_subspace(rng, algebra, n, height, dim=dim, side=side)
    return AffineSubspace(rand_vector(rng, algebra, n, height), sub)


def rand_two_sided_plane(rng: random.Random, algebra: Algebra, n: int,
                         height: int) -> AffineSubspace:
    sub = rand_two_sided_subspace(rng, algebra, n, height, dim=2)
    return AffineSubspace(rand_vector(rng, algebra, n, height), sub)


def rand_purely_left_line_in(rng: random.Random,
                             plane: AffineSubspace) -> AffineSubspace:
    """Purely left affine line inside a two-sided plane, through a random
    point of the plane."""
    algebra = plane.algebra
    n = plane.ambient
    r1, r2 = plane.direction.rows
    while True:
        c1 = rand_scalar(rng, algebra, 3)
        c2 = rand_scalar(rng, algebra, 3)
        d = r1.left_mul(c1) + r2.left_mul(c2)
        if d.is_zero():
            continue
        span = VectorSubspace.from_vectors(algebra, [d], LEFT, n)
        if classify_sidedness(span) is Sidedness.PURELY_LEFT:
            base = plane.point + r1.left_mul(rand_scalar(rng, algebra, 2))
            return AffineSubspace(base, span)


def rand_morphism(rng: random.Random, algebra: Algebra, height: int,
                  kind: Optional[str] = None) -> Morphism:
    if kind is None:
        kind = rng.choice((Morphism.AUTOMORPHISM, Morphism.ANTI_AUTOMORPHISM))
    if algebra.commutative:
        return Morphism(kind, algebra.one())
    return Morphism(kind, rand_scalar(rng, algebra, height, nonzero=True))


def rand_semilinear_form(rng: random.Random, algebra: Algebra, n: int,
                         height: int, mode: Optional[str] = None):
    """Random normal-form datum; mode side_swap adds an anti-automorphism
    (noncommutative algebras only)."""
    from .maps import SemilinearForm

    if mode is None:
        mode = rng.choice(("same_side", "side_swap"))
    if algebra.commutative:
        mode = "same_side"
    sigma = rand_morphism(rng, algebra, height, Morphism.AUTOMORPHISM)
    anti = (rand_morphism(rng, algebra, height, Morphism.ANTI_AUTOMORPHISM)
            if mode == "side_swap" else None)
    a = rand_scalar(rng, algebra, height, nonzero=True)
    diag = tuple(algebra.one() if idx == 0
                 else rand_central_scalar(rng, algebra, height, nonzero=True)
                 for idx in range(n))
    n_matrix = matrix(algebra, rand_invertible_rational_matrix(rng, n, height))
    b = rand_vector(rng, algebra, n, height)
    return SemilinearForm(sigma=sigma, a=a, diag=diag,
                          n_matrix=n_matrix, b=b, anti=anti)


def derive_seed(seed: int, label: str) -> int:
    """Stable per-check seed derived from a suite seed and a label."""
    import hashlib
    digest = hashlib.sha256(f"{seed}:{label}".encode()).hexdigest()
    return int(digest[:16], 16)
