"""Structured self-maps of k^n and the normal-form decomposition pipeline.

A MapExpr is a composition of invertible building blocks: translations,
right scalar multiplications, row-vector matrix multiplications and
componentwise morphisms. Every block is linear over the center, so a
whole expression has an exact affine representation on the rational
coordinates; exact images of affine subspaces come from that
representation followed by side re-recognition.

A SemilinearForm is the normal-form datum (optional anti-automorphism,
automorphism, right scalar, central-ratio diagonal, central matrix,
translation) denoting

    x  |->  anti?( sigma( (x * a) @ (diag @ N) + b ) )

with the gauge fixed as: diag[0] = 1 (forcing the whole diagonal into
the center), N rows scaled to leading entry 1, conjugating elements
normalized, and sigma folded into the anti-automorphism whenever one is
present (the denotation only ever sees their composite). Under that
gauge the form of a map is unique and decompose() recovers it from
point evaluations alone.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional, Sequence

from . import rationals
from ._ratio import Rat
from .algebra import Algebra, Morphism, Scalar
from .errors import (DecompositionError, DimensionMismatch, InconsistentAlpha,
                     InputError, NoSolution, NonCentralRatio, NotAdditive,
                     NotAntiMultiplicative, NotCentralRow,
                     ReconstructionMismatch, SideUnrepresentable)
from .linalg import (LEFT, RIGHT, Matrix, Vector, diagonal_matrix,
                     morphism_qmatrix, qcoords, restrict_scalars,
                     standard_basis_vector, subspace_dim, vec_mat, vector,
                     zero_vector)
from .subspaces import (AffineSubspace, Sidedness, VectorSubspace,
                        classify_sidedness, extend_to_flag, recognize_affine)

PointMap = Callable[[Vector], Vector]


# -- map expressions ----------------------------------------------------------


class MapExpr:
    """Base class for structured self-maps; every node is a bijection."""

    def apply(self, x: Vector) -> Vector:
        raise NotImplementedError

    def children(self):
        return ()


@dataclass(frozen=True)
class Translate(MapExpr):
    b: Vector

    def apply(self, x: Vector) -> Vector:
        return x + self.b


@dataclass(frozen=True)
class RightScalar(MapExpr):
    a: Scalar

    def __post_init__(self):
        if self.a.is_zero():
            raise InputError("right scalar must be nonzero")

    def apply(self, x: Vector) -> Vector:
        return x.right_mul(self.a)


@dataclass(frozen=True)
class MatrixMul(MapExpr):
    m: Matrix

    def __post_init__(self):
        if self.m.nrows != self.m.ncols:
            raise InputError("matrix of a self-map must be square")
        if subspace_dim(self.m, LEFT) != self.m.nrows:
            raise InputError("matrix of a self-map must be invertible")

    def apply(self, x: Vector) -> Vector:
        return vec_mat(x, self.m)


@dataclass(frozen=True)
class Componentwise(MapExpr):
    morphism: Morphism

    def apply(self, x: Vector) -> Vector:
        return x.map_entries(self.morphism)


@dataclass(frozen=True)
class Compose(MapExpr):
    items: tuple[MapExpr, ...]

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))

    def apply(self, x: Vector) -> Vector:
        for node in self.items:
            x = node.apply(x)
        return x

    def children(self):
        return self.items


def eval_map(f: MapExpr, x: Vector) -> Vector:
    """Exact evaluation; composition applies the nodes in order."""
    y = f.apply(x)
    if len(y) != len(x):
        raise DimensionMismatch("map changed the ambient dimension")
    return y


def infer_dimension(f: MapExpr) -> Optional[int]:
    if isinstance(f, Translate):
        return len(f.b)
    if isinstance(f, MatrixMul):
        return f.m.nrows
    for child in f.children():
        n = infer_dimension(child)
        if n is not None:
            return n
    return None


def infer_algebra(f: MapExpr) -> Optional[Algebra]:
    if isinstance(f, Translate):
        return f.b.algebra
    if isinstance(f, MatrixMul):
        return f.m.algebra
    if isinstance(f, RightScalar):
        return f.a.algebra
    if isinstance(f, Componentwise):
        return f.morphism.algebra
    for child in f.children():
        a = infer_algebra(child)
        if a is not None:
            return a
    return None


@lru_cache(maxsize=256)
def _q_affine(f: MapExpr, algebra: Algebra, n: int):
    """Rational affine representation (matrix, shift) of a map expression."""
    total = algebra.block_dim * n
    if isinstance(f, Translate):
        if len(f.b) != n:
            raise DimensionMismatch("translation has the wrong length")
        return rationals.identity(total), qcoords(f.b)
    if isinstance(f, RightScalar):
        block = restrict_scalars(f.a, RIGHT)
        return rationals.block_diagonal(block, n), [Rat(0)] * total
    if isinstance(f, Componentwise):
        block = morphism_qmatrix(f.morphism)
        return rationals.block_diagonal(block, n), [Rat(0)] * total
    if isinstance(f, MatrixMul):
        if f.m.nrows != n:
            raise DimensionMismatch("matrix has the wrong size")
        b = algebra.block_dim
        out = rationals.zeros(total, total)
        for l in range(n):
            for m_idx in range(n):
                block = restrict_scalars(f.m.entry(m_idx, l), RIGHT)
                for r in range(b):
                    for c in range(b):
                        out[l * b + r][m_idx * b + c] = block[r][c]
        return out, [Rat(0)] * total
    if isinstance(f, Compose):
        mat = rationals.identity(total)
        shift = [Rat(0)] * total
        for node in f.items:
            nm, ns = _q_affine(node, algebra, n)
            mat = rationals.mat_mul(nm, mat)
            shift = rationals.vec_add(rationals.mat_vec(nm, shift), ns)
        return mat, shift
    raise InputError(f"unknown map expression node {type(f).__name__}")


def image_affine(f: MapExpr, a: AffineSubspace) -> AffineSubspace:
    """Exact image of an affine subspace, re-recognized as a side-tagged
    subspace. Raises SideUnrepresentable when the image set is neither a
    left nor a right affine subspace (the map then violates the
    collineation hypothesis)."""
    algebra = a.algebra
    n = a.ambient
    mat, shift = _q_affine(f, algebra, n)
    point_q = rationals.vec_add(rationals.mat_vec(mat, qcoords(a.point)), shift)
    dir_rows = []
    for row in a.direction.qrows():
        dir_rows.append(rationals.mat_vec(mat, row))
    return recognize_affine(algebra, n, point_q, dir_rows)


# -- line preservation --------------------------------------------------------


@dataclass(frozen=True)
class LineTrial:
    line: AffineSubspace
    input_class: Sidedness
    output_class: Optional[Sidedness]
    verdict: str  # line_same_side | line_opposite_side | not_a_line
    samples: tuple[tuple[Vector, Vector], ...] = ()


@dataclass(frozen=True)
class LineImageReport:
    trials: tuple[LineTrial, ...]
    counts: tuple[tuple[str, int], ...]
    ok: bool
    witness: Optional[LineTrial]


def _verdict(input_class: Sidedness, output_class: Optional[Sidedness]) -> str:
    if output_class is None:
        return "not_a_line"
    pure = {Sidedness.PURELY_LEFT, Sidedness.PURELY_RIGHT}
    if {input_class, output_class} == pure:
        return "line_opposite_side"
    return "line_same_side"


def _sample_line_points(rng: random.Random, line: AffineSubspace,
                        count: int) -> list[Vector]:
    from .randomgen import rand_scalar
    algebra = line.algebra
    d = line.direction.rows[0]
    coeffs = [algebra.zero(), algebra.one()]
    while len(coeffs) < count:
        c = rand_scalar(rng, algebra, 4)
        if c not in coeffs:
            coeffs.append(c)
    points = []
    for c in coeffs:
        step = d.left_mul(c) if line.side == LEFT else d.right_mul(c)
        points.append(line.point + step)
    return points


def _fit_sampled_images(images: Sequence[Vector]) -> Optional[Sidedness]:
    """Side classification of the line through the sampled images, or
    None when no line of either side holds them all."""
    from .subspaces import line_through
    base = images[0]
    other = next((y for y in images[1:] if y != base), None)
    if other is None:
        return None
    fits = {}
    for side in (LEFT, RIGHT):
        line = line_through(base, other, side)
        fits[side] = all(line.contains(y) for y in images)
    if fits[LEFT] and fits[RIGHT]:
        return Sidedness.TWO_SIDED
    if fits[LEFT]:
        return classify_sidedness(line_through(base, other, LEFT))
    if fits[RIGHT]:
        return classify_sidedness(line_through(base, other, RIGHT))
    return None


def check_line_preservation(f, trials: int, seed: int, *,
                            n: Optional[int] = None,
                            algebra: Optional[Algebra] = None,
                            points_per_line: int = 5,
                            probe_lines: Sequence[AffineSubspace] = ()
                            ) -> LineImageReport:
    """Verify that sampled affine lines map to affine lines.

    Structured maps are imaged exactly; opaque point-maps are sampled on
    points_per_line collinear points and a line is fitted through the
    images on both sides. Specific probe lines may be supplied (witness
    re-checks); they are tested before the random trials.
    """
    from .randomgen import rand_vector

    structured = isinstance(f, MapExpr)
    if structured:
        n = n or infer_dimension(f)
        algebra = algebra or infer_algebra(f)
    if n is None or algebra is None:
        raise InputError("opaque maps need explicit dimension and algebra")
    evalf = (lambda v: eval_map(f, v)) if structured else f

    rng = random.Random(seed)
    records = []

    def run_trial(line: AffineSubspace) -> LineTrial:
        input_class = classify_sidedness(line)
        if structured:
            try:
                img = image_affine(f, line)
                output_class = classify_sidedness(img)
                samples = ()
            except SideUnrepresentable:
                output_class = None
                pts = _sample_line_points(rng, line, points_per_line)
                samples = tuple((p, evalf(p)) for p in pts)
        else:
            pts = _sample_line_points(rng, line, points_per_line)
            images = [evalf(p) for p in pts]
            samples = tuple(zip(pts, images))
            output_class = _fit_sampled_images(images)
        return LineTrial(line, input_class, output_class,
                         _verdict(input_class, output_class), samples)

    for line in probe_lines:
        records.append(run_trial(line))
    for _ in range(trials):
        side = rng.choice((LEFT, RIGHT))
        p = rand_vector(rng, algebra, n, 4)
        d = rand_vector(rng, algebra, n, 4, nonzero=True)
        line = AffineSubspace(
            p, VectorSubspace.from_vectors(algebra, [d], side, n))
        records.append(run_trial(line))

    counts: dict[str, int] = {}
    witness = None
    for rec in records:
        counts[rec.verdict] = counts.get(rec.verdict, 0) + 1
        if rec.verdict == "not_a_line" and witness is None:
            witness = rec
    ok = witness is None
    return LineImageReport(tuple(records), tuple(sorted(counts.items())),
                           ok, witness)


# -- additivity ---------------------------------------------------------------


@dataclass(frozen=True)
class AdditivityResult:
    ok: bool
    witness: Optional[tuple[Vector, ...]]


def check_additivity(f, trials: int, seed: int, *,
                     n: Optional[int] = None,
                     algebra: Optional[Algebra] = None) -> AdditivityResult:
    """Sampled check that f(x+y) = f(x) + f(y) and f(-x) = -f(x).

    f(0) = 0 is part of the claim; a map with f(0) != 0 fails with the
    zero witness immediately.
    """
    from .randomgen import rand_vector

    structured = isinstance(f, MapExpr)
    if structured:
        n = n or infer_dimension(f)
        algebra = algebra or infer_algebra(f)
    if n is None or algebra is None:
        raise InputError("opaque maps need explicit dimension and algebra")
    evalf = (lambda v: eval_map(f, v)) if structured else f

    zero = zero_vector(algebra, n)
    if evalf(zero) != zero:
        return AdditivityResult(False, (zero,))
    rng = random.Random(seed)
    for _ in range(trials):
        x = rand_vector(rng, algebra, n, 4)
        y = rand_vector(rng, algebra, n, 4)
        if evalf(x + y) != evalf(x) + evalf(y):
            return AdditivityResult(False, (x, y))
        if evalf(-x) != -evalf(x):
            return AdditivityResult(False, (x,))
    return AdditivityResult(True, None)


# -- anti-automorphism extraction ----------------------------------------------


@dataclass(frozen=True)
class AlphaTable:
    """Values of the scaling map alpha on the algebra basis, along with
    the random probes used to confirm it is well defined."""

    algebra: Algebra
    images: tuple[Scalar, ...]
    probes: tuple[tuple[Scalar, Scalar], ...]

    def linear_extension(self, c: Scalar) -> Scalar:
        out = self.algebra.zero()
        for coord, image in zip(c.coords(), self.images):
            out = out + image.scale(coord)
        return out


def _alpha_at(evalf: PointMap, base: Vector, c: Scalar) -> Scalar:
    """Solve evalf(c * base) = evalf(base) * alpha for alpha."""
    u = evalf(base)
    w = evalf(base.left_mul(c))
    pivot = next((idx for idx, e in enumerate(u) if not e.is_zero()), None)
    if pivot is None:
        raise InconsistentAlpha("base vector maps to zero")
    alpha = u[pivot].inverse() * w[pivot]
    for ue, we in zip(u, w):
        if ue * alpha != we:
            raise InconsistentAlpha(
                "image of a scaled point leaves the image line")
    return alpha


def extract_alpha(f, algebra: Optional[Algebra] = None, *, seed: int = 0,
                  extra_bases: int = 3, pairs: int = 20) -> AlphaTable:
    """Extract the scaling map of a plane bijection sending left lines
    through the origin to right lines.

    The defining relation f(c*x) = f(x) * alpha(c) is solved at the base
    vector (1, 1), cross-checked at (1, 0), (0, 1) and random bases, and
    the result is verified to reverse products. Disagreement between
    bases raises InconsistentAlpha; a table failing alpha(xy) =
    alpha(y) alpha(x) raises NotAntiMultiplicative.
    """
    from .randomgen import rand_scalar, rand_vector

    structured = isinstance(f, MapExpr)
    if structured:
        algebra = algebra or infer_algebra(f)
    if algebra is None:
        raise InputError("opaque maps need an explicit algebra")
    evalf = (lambda v: eval_map(f, v)) if structured else f
    rng = random.Random(seed)

    one = algebra.one()
    main_base = vector(algebra, [one, one])
    basis = algebra.basis()
    images = tuple(_alpha_at(evalf, main_base, c) for c in basis)
    if images[0] != one:
        raise InconsistentAlpha("alpha(1) differs from 1")

    probe_scalars = [rand_scalar(rng, algebra, 4) for _ in range(3)]
    table = AlphaTable(algebra, images, ())
    probes = []
    for c in probe_scalars:
        got = _alpha_at(evalf, main_base, c)
        if got != table.linear_extension(c):
            raise InconsistentAlpha("alpha is not linear over the center")
        probes.append((c, got))

    bases = [vector(algebra, [one, algebra.zero()]),
             vector(algebra, [algebra.zero(), one])]
    for _ in range(extra_bases):
        bases.append(rand_vector(rng, algebra, 2, 4, nonzero=True))
    for base in bases:
        for c in list(basis) + probe_scalars:
            expected = (images[basis.index(c)] if c in basis
                        else table.linear_extension(c))
            if _alpha_at(evalf, base, c) != expected:
                raise InconsistentAlpha(
                    "scaling maps at different base vectors disagree")

    for _ in range(pairs):
        x = rand_scalar(rng, algebra, 4)
        y = rand_scalar(rng, algebra, 4)
        lhs = _alpha_at(evalf, main_base, x * y)
        rhs = _alpha_at(evalf, main_base, y) * _alpha_at(evalf, main_base, x)
        if lhs != rhs:
            raise NotAntiMultiplicative(
                f"alpha({x} * {y}) != alpha({y}) alpha({x})")
    return AlphaTable(algebra, images, tuple(probes))


def identify_morphism(images: Sequence[Scalar], kind: str,
                      algebra: Algebra) -> Morphism:
    """Find the conjugating element realizing a value table on the basis.

    Solves the linear system q * T(x) = x * q (automorphism) or
    q * T(x) = conj(x) * q (anti-automorphism) for x in {i, j, k} over
    the center; any nonzero solution realizes the table exactly.
    """
    basis = algebra.basis()
    if len(images) != len(basis):
        raise InputError("value table must cover the scalar basis")
    if images[0] != algebra.one():
        raise NoSolution("table does not fix 1")
    if algebra.commutative:
        if list(images) != list(basis):
            raise NoSolution("only the identity moves rational scalars")
        return Morphism(kind, algebra.one())

    anti = kind == Morphism.ANTI_AUTOMORPHISM
    constraints = []
    for x, image in zip(basis[1:], images[1:]):
        lhs = restrict_scalars(image, RIGHT)
        mult = x.conjugate() if anti else x
        rhs = restrict_scalars(mult, LEFT)
        for r_lhs, r_rhs in zip(lhs, rhs):
            constraints.append([le - re for le, re in zip(r_lhs, r_rhs)])
    space = rationals.nullspace(constraints, 4)
    if not space:
        raise NoSolution("no conjugating element matches the table")
    q = algebra.scalar(*space[0])
    morphism = Morphism(kind, q)
    for x, image in zip(basis, images):
        if morphism(x) != image:
            raise NoSolution("solution fails to reproduce the table")
    return morphism


# -- central factorization ------------------------------------------------------


def factor_matrix_central(m: Matrix) -> tuple[tuple[Scalar, ...], Matrix]:
    """Write each row as (leading coefficient) * (central row).

    Returns the row coefficients and the central matrix with leading
    entries 1. NotCentralRow: some row is not a scalar multiple of a
    central vector. NonCentralRatio: rows are fine but two coefficients
    have a non-central ratio. Either failure means x -> x @ m does not
    take every right line to a right line.
    """
    coeffs = []
    rows = []
    for idx, row in enumerate(m.rows):
        lead = next((e for e in row if not e.is_zero()), None)
        if lead is None:
            raise InputError(f"row {idx} is zero")
        inv = lead.inverse()
        scaled = row.left_mul(inv)
        if not all(e.is_central() for e in scaled):
            raise NotCentralRow(
                f"row {idx} is not central after scaling", row_index=idx)
        coeffs.append(lead)
        rows.append(scaled)
    base_inv = coeffs[0].inverse()
    for idx, c in enumerate(coeffs[1:], start=1):
        if not (base_inv * c).is_central():
            raise NonCentralRatio(
                f"rows 0 and {idx} have a non-central coefficient ratio",
                pair=(0, idx))
    return tuple(coeffs), Matrix(tuple(rows))


# -- the normal form -------------------------------------------------------------


@dataclass(frozen=True)
class SemilinearForm:
    """Normal-form datum of a collineation; see the module docstring for
    the denotation and gauge."""

    sigma: Morphism
    a: Scalar
    diag: tuple[Scalar, ...]
    n_matrix: Matrix
    b: Vector
    anti: Optional[Morphism] = None

    def __post_init__(self):
        object.__setattr__(self, "diag", tuple(self.diag))
        if self.sigma.is_anti:
            raise InputError("sigma must be an automorphism")
        if self.anti is not None and not self.anti.is_anti:
            raise InputError("anti must be an anti-automorphism")
        if self.a.is_zero():
            raise InputError("right scalar must be nonzero")
        n = len(self.diag)
        if self.n_matrix.nrows != n or self.n_matrix.ncols != n \
                or len(self.b) != n:
            raise InputError("form components have inconsistent sizes")
        if self.diag[0] != self.algebra.one():
            raise InputError("diagonal gauge requires diag[0] = 1")
        for d in self.diag:
            if d.is_zero() or not d.is_central():
                raise InputError("diagonal entries must be nonzero and central")
        if not self.n_matrix.is_central():
            raise InputError("N must be central")
        qrows = [[e.t for e in row] for row in self.n_matrix.rows]
        if rationals.rank(qrows, n) != n:
            raise InputError("N must be invertible over the center")

    @property
    def algebra(self) -> Algebra:
        return self.a.algebra

    @property
    def ambient(self) -> int:
        return len(self.diag)

    @property
    def is_side_swap(self) -> bool:
        return self.anti is not None

    def total_matrix(self) -> Matrix:
        return diagonal_matrix(list(self.diag)).matmul(self.n_matrix)

    def build(self) -> MapExpr:
        items = [RightScalar(self.a),
                 MatrixMul(self.total_matrix()),
                 Translate(self.b),
                 Componentwise(self.sigma)]
        if self.anti is not None:
            items.append(Componentwise(self.anti))
        return Compose(tuple(items))

    def normalize(self) -> "SemilinearForm":
        """Canonical representative of the same map.

        Folds sigma into the anti-automorphism when one is present,
        scales N rows to leading entry 1 and pulls the diagonal gauge
        into the right scalar.
        """
        sigma, anti = self.sigma, self.anti
        if anti is not None:
            anti = anti.compose(sigma)
            sigma = Morphism.identity(self.algebra)
        algebra = self.algebra
        diag = list(self.diag)
        n_rows = []
        for idx, row in enumerate(self.n_matrix.rows):
            lead = next((e for e in row if not e.is_zero()), None)
            assert lead is not None
            n_rows.append(row.left_mul(lead.inverse()))
            diag[idx] = diag[idx] * lead
        d0 = diag[0]
        a = self.a * d0
        d0_inv = d0.inverse()
        diag = [d * d0_inv for d in diag]
        return SemilinearForm(sigma, a, tuple(diag),
                              Matrix(tuple(n_rows)), self.b, anti)


def detect_mode(f, *, n: Optional[int] = None,
                algebra: Optional[Algebra] = None, seed: int = 0) -> str:
    """Route a map to same_side or side_swap from one purely left probe
    line inside a two-sided probe plane."""
    structured = isinstance(f, MapExpr)
    if structured:
        n = n or infer_dimension(f)
        algebra = algebra or infer_algebra(f)
    if n is None or algebra is None:
        raise InputError("opaque maps need explicit dimension and algebra")
    if algebra.commutative or n < 2:
        return "same_side"
    evalf = (lambda v: eval_map(f, v)) if structured else f
    base = evalf(zero_vector(algebra, n))

    entries = [algebra.one(), algebra.i()] + [algebra.zero()] * (n - 2)
    d = vector(algebra, entries)
    probes = [algebra.one(), algebra.i(), algebra.j(),
              algebra.one() + algebra.j()]
    images = [evalf(d.left_mul(c)) - base for c in probes]
    cls = _fit_sampled_images([zero_vector(algebra, n)] + images)
    if cls is Sidedness.PURELY_RIGHT:
        return "side_swap"
    if cls is Sidedness.PURELY_LEFT:
        return "same_side"
    raise DecompositionError(
        "mode_detection",
        "probe line image is not a purely one-sided line")


def _tag_stage(err: Exception, stage: str):
    if not hasattr(err, "stage"):
        err.stage = stage  # type: ignore[attr-defined]
    return err


def _chart_to_plane(evalf: PointMap, algebra: Algebra, n: int):
    """Coordinates on the image of the standard two-sided plane.

    Returns g: k^2 -> k^2 conjugating the restriction of the map to the
    plane spanned by e0, e1 into a plane self-map. The image plane of an
    additive collineation is two-sided, hence has a rational reduced
    basis; coordinates along that basis commute with both scalar
    actions.
    """
    e0 = standard_basis_vector(algebra, n, 0)
    e1 = standard_basis_vector(algebra, n, 1)
    span_vectors = []
    for c in algebra.basis():
        span_vectors.append(e0.left_mul(c))
        span_vectors.append(e1.left_mul(c))
    image_rows = [qcoords(evalf(v)) for v in span_vectors]
    total = algebra.block_dim * n
    rows, _ = rationals.rref(image_rows, total)
    if len(rows) != 2 * algebra.block_dim:
        raise DecompositionError(
            "alpha_chart", "image of the probe plane has the wrong dimension")
    try:
        plane = recognize_affine(algebra, n, [Rat(0)] * total, rows)
    except SideUnrepresentable as err:
        raise DecompositionError(
            "alpha_chart", "image of the probe plane is not one-sided") from err
    basis_rows = plane.direction.rows
    if not plane.direction.is_rational():
        raise DecompositionError(
            "alpha_chart", "image of the probe plane is not two-sided")
    pivots = plane.direction.pivots

    def embed(x: Vector) -> Vector:
        entries = list(x.entries) + [algebra.zero()] * (n - 2)
        return Vector(tuple(entries))

    def chart(y: Vector) -> Vector:
        got = vector(algebra, [y[pivots[0]], y[pivots[1]]])
        recon = basis_rows[0].left_mul(got[0]) + basis_rows[1].left_mul(got[1])
        if recon != y:
            raise DecompositionError(
                "alpha_chart", "image point leaves the probe plane image")
        return got

    return lambda x: chart(evalf(embed(x)))


def decompose(f, mode: Optional[str] = None, *, n: Optional[int] = None,
              algebra: Optional[Algebra] = None, trials: int = 12,
              seed: int = 0, verify_points: int = 50) -> SemilinearForm:
    """Recover the canonical SemilinearForm of a collineation from point
    evaluations.

    Pipeline: split off the translation, check additivity, extract and
    divide out the anti-automorphism in side_swap mode, read sigma off
    the first coordinate line (cross-validated on the others), factor
    the remaining matrix through the center and verify the rebuilt map
    agrees with the input pointwise. Failures carry the stage name.
    """
    structured = isinstance(f, MapExpr)
    if structured:
        n = n or infer_dimension(f)
        algebra = algebra or infer_algebra(f)
    if n is None or algebra is None:
        raise InputError("opaque maps need explicit dimension and algebra")
    evalf = (lambda v: eval_map(f, v)) if structured else f
    rng = random.Random(seed)

    if mode is None:
        mode = detect_mode(f, n=n, algebra=algebra, seed=seed)
    if mode not in ("same_side", "side_swap"):
        raise InputError(f"unknown mode {mode!r}")
    if mode == "side_swap" and algebra.commutative:
        raise InputError("side_swap mode needs a noncommutative algebra")

    b_image = evalf(zero_vector(algebra, n))

    def h(v: Vector) -> Vector:
        return evalf(v) - b_image

    additivity = check_additivity(h, trials, rng.randrange(1 << 30),
                                  n=n, algebra=algebra)
    if not additivity.ok:
        raise NotAdditive("translation-reduced map is not additive",
                          witness=additivity.witness)

    m_alpha: Optional[Morphism] = None
    if mode == "side_swap":
        g = _chart_to_plane(h, algebra, n)
        try:
            alpha = extract_alpha(g, algebra, seed=rng.randrange(1 << 30))
        except (InconsistentAlpha, NotAntiMultiplicative) as err:
            raise _tag_stage(err, "alpha")
        try:
            m_alpha = identify_morphism(
                alpha.images, Morphism.ANTI_AUTOMORPHISM, algebra)
        except NoSolution as err:
            raise _tag_stage(err, "alpha_identify")
        alpha_inv = m_alpha.inverse()
        inner_h = h

        def h(v: Vector) -> Vector:  # noqa: F811  (pipeline stage rebinding)
            return inner_h(v).map_entries(alpha_inv)

    basis_vectors = [standard_basis_vector(algebra, n, idx)
                     for idx in range(n)]
    rows = [h(e) for e in basis_vectors]
    scalar_basis = algebra.basis()

    def sigma_table_at(idx: int) -> tuple[Scalar, ...]:
        base_row = rows[idx]
        pivot = next((p for p, e in enumerate(base_row)
                      if not e.is_zero()), None)
        if pivot is None:
            raise DecompositionError(
                "sigma", f"basis vector {idx} maps to zero")
        inv = base_row[pivot].inverse()
        images = []
        for c in scalar_basis:
            w = h(basis_vectors[idx].left_mul(c))
            value = w[pivot] * inv
            for we, be in zip(w, base_row):
                if value * be != we:
                    raise DecompositionError(
                        "sigma",
                        "map is not left-semilinear on a coordinate line")
            images.append(value)
        return tuple(images)

    sigma_images = sigma_table_at(0)
    for idx in range(1, n):
        if sigma_table_at(idx) != sigma_images:
            raise DecompositionError(
                "sigma", "semilinear twists differ between coordinate lines")
    try:
        m_sigma = identify_morphism(
            sigma_images, Morphism.AUTOMORPHISM, algebra)
    except NoSolution as err:
        raise _tag_stage(err, "sigma_identify")

    sigma_inv = m_sigma.inverse()
    t_matrix = Matrix(tuple(row.map_entries(sigma_inv) for row in rows))
    try:
        coeffs, n_central = factor_matrix_central(t_matrix)
    except (NotCentralRow, NonCentralRatio, InputError) as err:
        raise _tag_stage(err, "central_factor")

    a_final = coeffs[0]
    a_inv = a_final.inverse()
    diag = tuple(algebra.one() if idx == 0 else c * a_inv
                 for idx, c in enumerate(coeffs))

    b_vec = b_image
    if m_alpha is not None:
        b_vec = b_vec.map_entries(m_alpha.inverse())
    b_vec = b_vec.map_entries(sigma_inv)

    form = SemilinearForm(sigma=m_sigma, a=a_final, diag=diag,
                          n_matrix=n_central, b=b_vec,
                          anti=m_alpha).normalize()

    rebuilt = form.build()
    check_points = [zero_vector(algebra, n)] + basis_vectors
    from .randomgen import rand_vector
    for _ in range(max(0, verify_points - len(check_points))):
        check_points.append(rand_vector(rng, algebra, n, 4))
    for p in check_points:
        if evalf(p) != eval_map(rebuilt, p):
            raise ReconstructionMismatch(
                "rebuilt form disagrees with the input map", witness=p)
    return form


# -- end-to-end verification -----------------------------------------------------


@dataclass(frozen=True)
class TheoremCheck:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class TheoremReport:
    checks: tuple[TheoremCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def verify_theorem_instance(form: SemilinearForm, trials: int,
                            seed: int) -> TheoremReport:
    """Check a built form against the expected geometric behavior:
    dimensions are preserved along flags, purely left lines inside
    two-sided planes land on the predicted side, and decompose
    round-trips to the same canonical form."""
    from .randomgen import (rand_affine, rand_purely_left_line_in,
                            rand_two_sided_plane)

    rng = random.Random(seed)
    algebra = form.algebra
    n = form.ambient
    f = form.build()
    checks = []

    ok = True
    detail = ""
    for _ in range(trials):
        a = rand_affine(rng, algebra, n, 4)
        flag = extend_to_flag(a)
        dims = []
        for member in flag.members:
            image = image_affine(f, member)
            dims.append(image.dim)
        if dims != list(range(n + 1)):
            ok = False
            detail = f"dims {dims}"
            break
    checks.append(TheoremCheck("dimension_preservation", ok, detail))

    if not algebra.commutative and n >= 2:
        expected = (Sidedness.PURELY_RIGHT if form.is_side_swap
                    else Sidedness.PURELY_LEFT)
        ok = True
        detail = ""
        for _ in range(min(trials, 20)):
            plane = rand_two_sided_plane(rng, algebra, n, 4)
            line = rand_purely_left_line_in(rng, plane)
            got = classify_sidedness(image_affine(f, line))
            if got is not expected:
                ok = False
                detail = f"line mapped to {got.value}"
                break
        checks.append(TheoremCheck("pure_line_side_behavior", ok, detail))

    try:
        again = decompose(f, mode=("side_swap" if form.is_side_swap
                                   else "same_side"),
                          seed=rng.randrange(1 << 30))
        ok = again == form.normalize()
        detail = "" if ok else "round-trip returned a different form"
    except Exception as err:  # noqa: BLE001  (report, do not crash)
        ok = False
        detail = f"round-trip failed: {err}"
    checks.append(TheoremCheck("decomposition_round_trip", ok, detail))
    return TheoremReport(tuple(checks))
