"""Vectors and matrices over the algebra, with explicit module sides.

Vectors are rows. A "left" span consists of combinations with scalar
coefficients on the left, a "right" span has them on the right; the two
notions genuinely differ in the noncommutative case and every routine
here takes the side explicitly. Reduction to a fully reduced echelon
form (pivot entries 1, zeros above and below) makes the representation
of a span canonical, so span equality is representational equality.

Restriction of scalars views k^n as a vector space over the center
(dimension block_dim * n over the rationals); helpers at the bottom
translate between the two pictures and feed the exact rational solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import rationals
from ._ratio import Rat, rat
from .algebra import Algebra, Morphism, Scalar, restrict_scalars
from .errors import DimensionMismatch, InputError

LEFT = "left"
RIGHT = "right"


def _check_side(side: str) -> str:
    if side not in (LEFT, RIGHT):
        raise InputError(f"side must be 'left' or 'right', got {side!r}")
    return side


@dataclass(frozen=True)
class Vector:
    """Row vector with entries in the algebra."""

    entries: tuple[Scalar, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if not self.entries:
            raise InputError("vectors must have at least one entry")

    @property
    def algebra(self) -> Algebra:
        return self.entries[0].algebra

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, idx) -> Scalar:
        return self.entries[idx]

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def __add__(self, other: "Vector") -> "Vector":
        self._check_compatible(other)
        return Vector(tuple(a + b for a, b in zip(self, other)))

    def __sub__(self, other: "Vector") -> "Vector":
        self._check_compatible(other)
        return Vector(tuple(a - b for a, b in zip(self, other)))

    def __neg__(self) -> "Vector":
        return Vector(tuple(-a for a in self.entries))

    def left_mul(self, c: Scalar) -> "Vector":
        return Vector(tuple(c * e for e in self.entries))

    def right_mul(self, c: Scalar) -> "Vector":
        return Vector(tuple(e * c for e in self.entries))

    def side_mul(self, c: Scalar, side: str) -> "Vector":
        return self.left_mul(c) if _check_side(side) == LEFT else self.right_mul(c)

    def map_entries(self, fn: Callable[[Scalar], Scalar]) -> "Vector":
        return Vector(tuple(fn(e) for e in self.entries))

    def _check_compatible(self, other: "Vector"):
        if len(self) != len(other):
            raise DimensionMismatch(
                f"vector lengths differ: {len(self)} vs {len(other)}")

    def __str__(self) -> str:
        return "(" + ", ".join(str(e) for e in self.entries) + ")"


def vector(algebra: Algebra, entries: Iterable) -> Vector:
    """Build a vector, coercing ints/rationals to central scalars."""
    out = []
    for e in entries:
        if isinstance(e, Scalar):
            out.append(e)
        else:
            out.append(algebra.scalar(e))
    return Vector(tuple(out))


def zero_vector(algebra: Algebra, n: int) -> Vector:
    return Vector(tuple(algebra.zero() for _ in range(n)))


def standard_basis_vector(algebra: Algebra, n: int, idx: int) -> Vector:
    entries = [algebra.zero()] * n
    entries[idx] = algebra.one()
    return Vector(tuple(entries))


@dataclass(frozen=True)
class Matrix:
    """Rectangular matrix as a tuple of row vectors."""

    rows: tuple[Vector, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        if not self.rows:
            raise InputError("matrices must have at least one row")
        width = len(self.rows[0])
        if any(len(r) != width for r in self.rows):
            raise InputError("matrix rows must have equal length")

    @property
    def algebra(self) -> Algebra:
        return self.rows[0].algebra

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def __iter__(self):
        return iter(self.rows)

    def __getitem__(self, idx) -> Vector:
        return self.rows[idx]

    def entry(self, i: int, j: int) -> Scalar:
        return self.rows[i][j]

    def is_central(self) -> bool:
        return all(e.is_central() for row in self.rows for e in row)

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch("inner matrix dimensions disagree")
        rows = []
        for r in self.rows:
            acc = zero_vector(self.algebra, other.ncols)
            for coeff, orow in zip(r, other.rows):
                acc = acc + orow.left_mul(coeff)
            rows.append(acc)
        return Matrix(tuple(rows))

    def __str__(self) -> str:
        return "[" + "; ".join(str(r) for r in self.rows) + "]"


def matrix(algebra: Algebra, rows: Iterable[Iterable]) -> Matrix:
    return Matrix(tuple(vector(algebra, r) for r in rows))


def identity_matrix(algebra: Algebra, n: int) -> Matrix:
    return Matrix(tuple(standard_basis_vector(algebra, n, idx)
                        for idx in range(n)))


def diagonal_matrix(entries: Sequence[Scalar]) -> Matrix:
    algebra = entries[0].algebra
    n = len(entries)
    rows = []
    for idx, e in enumerate(entries):
        row = [algebra.zero()] * n
        row[idx] = e
        rows.append(Vector(tuple(row)))
    return Matrix(tuple(rows))


def vec_mat(v: Vector, m: Matrix) -> Vector:
    """Row vector times matrix, keeping coefficients on the left."""
    if len(v) != m.nrows:
        raise DimensionMismatch("vector/matrix dimensions disagree")
    acc = zero_vector(v.algebra, m.ncols)
    for coeff, row in zip(v, m.rows):
        acc = acc + row.left_mul(coeff)
    return acc


def rational_matrix(m: Matrix):
    """Entries of a central matrix as plain rationals."""
    if not m.is_central():
        raise InputError("matrix is not central")
    return [[e.t for e in row] for row in m.rows]


def matrix_from_rational(algebra: Algebra, rows) -> Matrix:
    return matrix(algebra, rows)


@dataclass(frozen=True)
class EchelonForm:
    """Fully reduced echelon basis of a left or right span.

    Row i has entry 1 at column pivots[i] and zeros in every other pivot
    column (and everywhere before its pivot). Zero rows are dropped, so
    the number of rows is the dimension of the span on the given side.
    """

    side: str
    rows: tuple[Vector, ...]
    pivots: tuple[int, ...]
    ambient: int

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def algebra_or(self, algebra: Algebra) -> Algebra:
        return self.rows[0].algebra if self.rows else algebra


def row_echelon(m: Matrix, side: str) -> EchelonForm:
    """Reduced echelon form of the rows on the given module side.

    Left case: rows may be swapped, scaled by left multiplication and
    updated by subtracting left multiples of other rows, all of which
    preserve the left span. The right case mirrors every product.
    """
    _check_side(side)
    work = [list(r.entries) for r in m.rows]
    ncols = m.ncols
    pivots = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, len(work)):
            if not work[i][col].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = work[r][col].inverse()
        if side == LEFT:
            work[r] = [inv * e for e in work[r]]
        else:
            work[r] = [e * inv for e in work[r]]
        for i in range(len(work)):
            if i == r:
                continue
            c = work[i][col]
            if c.is_zero():
                continue
            if side == LEFT:
                work[i] = [e - c * p for e, p in zip(work[i], work[r])]
            else:
                work[i] = [e - p * c for e, p in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    rows = tuple(Vector(tuple(row)) for row in work[:r])
    return EchelonForm(side, rows, tuple(pivots), ncols)


def echelon_of_vectors(vectors: Sequence[Vector], side: str, *,
                       algebra: Algebra, ambient: int) -> EchelonForm:
    """Echelon form of a possibly empty list of vectors."""
    vectors = [v for v in vectors if not v.is_zero()]
    if not vectors:
        return EchelonForm(_check_side(side), (), (), ambient)
    return row_echelon(Matrix(tuple(vectors)), side)


def subspace_dim(m: Matrix, side: str) -> int:
    """Dimension of the span of the rows on the given side."""
    return row_echelon(m, side).dim


def reduce_vector(v: Vector, ech: EchelonForm) -> Vector:
    """Remainder of v after elimination against an echelon basis."""
    for row, col in zip(ech.rows, ech.pivots):
        c = v[col]
        if c.is_zero():
            continue
        if ech.side == LEFT:
            v = v - row.left_mul(c)
        else:
            v = v - row.right_mul(c)
    return v


def member(v: Vector, m: Matrix, side: str) -> bool:
    """Whether v lies in the left (right) span of the rows of m."""
    return member_echelon(v, row_echelon(m, side))


def member_echelon(v: Vector, ech: EchelonForm) -> bool:
    return reduce_vector(v, ech).is_zero()


@dataclass(frozen=True)
class PivotComplement:
    """Complementary coordinate subspace attached to an echelon form.

    indices is the set of columns holding no pivot; the span of the
    corresponding standard basis vectors meets the original span only in
    0 and together they fill the ambient space.
    """

    indices: tuple[int, ...]
    basis: tuple[Vector, ...]


def pivot_complement(m: Matrix, side: str) -> PivotComplement:
    ech = row_echelon(m, side)
    pivot_set = set(ech.pivots)
    indices = tuple(i for i in range(m.ncols) if i not in pivot_set)
    basis = tuple(standard_basis_vector(m.algebra, m.ncols, i)
                  for i in indices)
    combined = list(ech.rows) + list(basis)
    if combined:
        total = subspace_dim(Matrix(tuple(combined)), side)
        assert total == m.ncols, "complement does not complete the span"
    return PivotComplement(indices, basis)


# -- restriction of scalars ------------------------------------------------

def qcoords(v: Vector) -> list[Rat]:
    """Coordinates of a vector over the center, entry blocks in order."""
    out: list[Rat] = []
    for e in v.entries:
        out.extend(e.coords())
    return out


def vector_from_qcoords(algebra: Algebra, coords: Sequence[Rat]) -> Vector:
    b = algebra.block_dim
    if len(coords) % b:
        raise InputError("coordinate length is not a multiple of the block size")
    entries = []
    for pos in range(0, len(coords), b):
        block = list(coords[pos:pos + b])
        if b == 1:
            entries.append(algebra.scalar(block[0]))
        else:
            entries.append(algebra.scalar(*block))
    return Vector(tuple(entries))


def side_action_matrix(c: Scalar, side: str, n: int):
    """Rational matrix of v -> c*v or v -> v*c on the coordinates of k^n."""
    return rationals.block_diagonal(restrict_scalars(c, side), n)


def qspan_rows(vectors: Sequence[Vector], side: str,
               algebra: Algebra) -> list[list[Rat]]:
    """Spanning set over the center of the side-span of the vectors.

    Multiplying each vector by the four basis scalars (on the span's
    coefficient side) turns the module span into a plain rational span
    with the same underlying set of points.
    """
    _check_side(side)
    rows = []
    for v in vectors:
        for c in algebra.basis():
            w = v.left_mul(c) if side == LEFT else v.right_mul(c)
            rows.append(qcoords(w))
    return rows


def qspan_matrix(m: Matrix, side: str) -> list[list[Rat]]:
    return qspan_rows(list(m.rows), side, m.algebra)


def solve_central_linear(constraints: Sequence[Sequence[Rat]], n: int,
                         algebra: Algebra) -> list[Vector]:
    """Basis of the solution space of homogeneous constraints over the
    center, returned as vectors in k^n.

    Each constraint is a rational functional on the block_dim * n
    coordinates. An empty constraint list yields the full coordinate
    basis.
    """
    total = algebra.block_dim * n
    if constraints:
        basis = rationals.nullspace([list(c) for c in constraints], total)
    else:
        basis = rationals.identity(total)
    return [vector_from_qcoords(algebra, coords) for coords in basis]


def annihilator_rows(span_rows: Sequence[Sequence[Rat]],
                     total: int) -> list[list[Rat]]:
    """Functionals vanishing exactly on the rational span of the rows."""
    if not span_rows:
        return rationals.identity(total)
    return rationals.nullspace([list(r) for r in span_rows], total)


def membership_constraints(target_rows: Sequence[Sequence[Rat]],
                           action, total: int) -> list[list[Rat]]:
    """Constraints expressing action(x) in span(target_rows).

    action is a total x total rational matrix applied to the unknown
    coordinate vector; composing the annihilator of the span with it
    keeps everything linear over the center.
    """
    ann = annihilator_rows(target_rows, total)
    return rationals.mat_mul(ann, action)


def morphism_qmatrix(m: Morphism):
    """Rational matrix of a morphism on scalar coordinates."""
    algebra = m.algebra
    cols = [m(e).coords() for e in algebra.basis()]
    b = algebra.block_dim
    return [[cols[c][r] for c in range(b)] for r in range(b)]
