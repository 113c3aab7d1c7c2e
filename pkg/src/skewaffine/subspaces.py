"""Vector and affine subspaces of k^n with sidedness classification.

A subspace carries the side of its representation (the side the span was
taken on); classify_sidedness decides whether the underlying set of
points is purely left, purely right or two-sided. Closure under the
opposite scalar action is tested on the generators i and j only, which
suffices because 1, i, j generate the algebra over its center.

Two-sided subspaces always have a rational reduced echelon basis: a
reduced basis row r satisfies r*c = c*r for every scalar c once the span
is right-closed, forcing every entry into the center. Several
constructions below (standardization maps, plane chains) lean on that
fact.

Mixed-side intersections are computed over the center, where both
membership conditions are linear; the resulting set of points need not
be a left or right subspace at all, in which case SideUnrepresentable is
raised. That failure mode is exactly the witness used by the
line-intersection trichotomy check.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from . import rationals
from ._ratio import Rat
from .algebra import Algebra, Scalar
from .errors import (DegenerateLine, DimensionTooSmall, InputError,
                     NotTwoSided, SideUnrepresentable)
from .linalg import (LEFT, RIGHT, EchelonForm, Matrix, Vector,
                     echelon_of_vectors, member_echelon, qcoords,
                     qspan_rows, reduce_vector, side_action_matrix,
                     standard_basis_vector, solve_central_linear,
                     membership_constraints, vec_mat,
                     vector_from_qcoords, zero_vector, matrix,
                     _check_side)


class Sidedness(enum.Enum):
    PURELY_LEFT = "purely_left"
    PURELY_RIGHT = "purely_right"
    TWO_SIDED = "two_sided"


@dataclass(frozen=True)
class VectorSubspace:
    """Side-tagged vector subspace with a canonical echelon basis."""

    algebra: Algebra
    echelon: EchelonForm

    @classmethod
    def from_vectors(cls, algebra: Algebra, vectors: Sequence[Vector],
                     side: str, ambient: Optional[int] = None) -> "VectorSubspace":
        if ambient is None:
            if not vectors:
                raise InputError("ambient dimension needed for empty spans")
            ambient = len(vectors[0])
        ech = echelon_of_vectors(list(vectors), side,
                                 algebra=algebra, ambient=ambient)
        return cls(algebra, ech)

    @classmethod
    def zero(cls, algebra: Algebra, n: int, side: str = LEFT) -> "VectorSubspace":
        return cls(algebra, EchelonForm(_check_side(side), (), (), n))

    @classmethod
    def full(cls, algebra: Algebra, n: int, side: str = LEFT) -> "VectorSubspace":
        rows = tuple(standard_basis_vector(algebra, n, i) for i in range(n))
        return cls(algebra, EchelonForm(_check_side(side), rows,
                                        tuple(range(n)), n))

    @property
    def side(self) -> str:
        return self.echelon.side

    @property
    def dim(self) -> int:
        return self.echelon.dim

    @property
    def ambient(self) -> int:
        return self.echelon.ambient

    @property
    def rows(self) -> tuple[Vector, ...]:
        return self.echelon.rows

    @property
    def pivots(self) -> tuple[int, ...]:
        return self.echelon.pivots

    def contains(self, v: Vector) -> bool:
        return member_echelon(v, self.echelon)

    def is_rational(self) -> bool:
        return all(e.is_central() for r in self.rows for e in r)

    def qrows(self) -> list[list[Rat]]:
        """Rational spanning rows of the same point set over the center."""
        return qspan_rows(list(self.rows), self.side, self.algebra)

    def retag(self, side: str) -> "VectorSubspace":
        """Re-represent on the other side; only valid for two-sided spans."""
        if side == self.side:
            return self
        if classify_sidedness(self) is not Sidedness.TWO_SIDED:
            raise NotTwoSided("cannot retag a purely one-sided subspace")
        return VectorSubspace(self.algebra,
                              EchelonForm(_check_side(side), self.rows,
                                          self.pivots, self.ambient))


@dataclass(frozen=True)
class AffineSubspace:
    """Translate of a vector subspace, with a canonical base point.

    The stored point is the reduction of any representative modulo the
    direction, so equal point sets on the same side have equal fields.
    """

    point: Vector
    direction: VectorSubspace

    def __post_init__(self):
        if len(self.point) != self.direction.ambient:
            raise InputError("point and direction have different ambients")
        object.__setattr__(self, "point",
                           reduce_vector(self.point, self.direction.echelon))

    @property
    def algebra(self) -> Algebra:
        return self.direction.algebra

    @property
    def side(self) -> str:
        return self.direction.side

    @property
    def dim(self) -> int:
        return self.direction.dim

    @property
    def ambient(self) -> int:
        return self.direction.ambient

    def contains(self, v: Vector) -> bool:
        return self.direction.contains(v - self.point)

    def translate(self, b: Vector) -> "AffineSubspace":
        return AffineSubspace(self.point + b, self.direction)

    def set_equal(self, other: "AffineSubspace") -> bool:
        """Equality as sets of points.

        Canonical representations agree entrywise whenever the sides
        match; across sides the sets can only coincide when both are
        two-sided, in which case the rational echelon bases coincide as
        well.
        """
        if (self.point, self.direction.rows) != (other.point, other.direction.rows):
            return False
        if self.side == other.side:
            return True
        return (classify_sidedness(self) is Sidedness.TWO_SIDED
                and classify_sidedness(other) is Sidedness.TWO_SIDED)


def vector_subspace_span(algebra: Algebra, vectors: Sequence[Vector],
                         side: str, ambient: Optional[int] = None) -> VectorSubspace:
    return VectorSubspace.from_vectors(algebra, vectors, side, ambient)


def affine_through(point: Vector, direction: VectorSubspace) -> AffineSubspace:
    return AffineSubspace(point, direction)


def affine_point(p: Vector, side: str = LEFT) -> AffineSubspace:
    return AffineSubspace(p, VectorSubspace.zero(p.algebra, len(p), side))


def classify_sidedness(space) -> Sidedness:
    """Decide purely left / purely right / two-sided.

    Affine subspaces classify through their direction. A left span is
    two-sided iff each basis vector stays inside after right
    multiplication by the generators (mirrored for right spans).
    """
    if isinstance(space, AffineSubspace):
        space = space.direction
    algebra = space.algebra
    if algebra.commutative or space.dim == 0:
        return Sidedness.TWO_SIDED
    opposite_left = space.side == RIGHT
    for v in space.rows:
        for g in algebra.generators():
            w = v.left_mul(g) if opposite_left else v.right_mul(g)
            if not space.contains(w):
                return (Sidedness.PURELY_RIGHT if space.side == RIGHT
                        else Sidedness.PURELY_LEFT)
    return Sidedness.TWO_SIDED


def line_through(p: Vector, q: Vector, side: str) -> AffineSubspace:
    """Affine line {p + c(q-p)} (left) or {p + (q-p)c} (right)."""
    d = q - p
    if d.is_zero():
        raise DegenerateLine("coincident points do not span a line")
    direction = VectorSubspace.from_vectors(p.algebra, [d], side, len(p))
    return AffineSubspace(p, direction)


# -- computations over the center -------------------------------------------


def _closure_generators(algebra: Algebra, side: str, n: int):
    return [side_action_matrix(g, side, n) for g in algebra.generators()]


def _is_side_closed(dir_rows, dir_pivots, actions) -> bool:
    for act in actions:
        for row in dir_rows:
            image = rationals.mat_vec(act, row)
            if not rationals.in_span(image, dir_rows, dir_pivots):
                return False
    return True


def recognize_affine(algebra: Algebra, n: int, point_q: Sequence[Rat],
                     dir_rows_q: Sequence[Sequence[Rat]]) -> AffineSubspace:
    """Re-recognize a rational affine set as a side-tagged subspace.

    Raises SideUnrepresentable when the direction is closed under
    neither scalar action.
    """
    total = algebra.block_dim * n
    rows, pivots = rationals.rref([list(r) for r in dir_rows_q], total)
    point = vector_from_qcoords(algebra, list(point_q))
    for side in (LEFT, RIGHT):
        if _is_side_closed(rows, pivots, _closure_generators(algebra, side, n)):
            kvecs = [vector_from_qcoords(algebra, r) for r in rows]
            sub = VectorSubspace.from_vectors(algebra, kvecs, side, n)
            assert sub.dim * algebra.block_dim == len(rows)
            return AffineSubspace(point, sub)
    raise SideUnrepresentable(
        "point set is not a left or right affine subspace",
        point=point, direction_qdim=len(rows))


def q_affine_data(a: AffineSubspace):
    """Rational point and rref'd direction rows of an affine subspace."""
    rows, pivots = rationals.rref(a.direction.qrows(),
                                  a.algebra.block_dim * a.ambient)
    return qcoords(a.point), rows, pivots


def intersect_q(a: AffineSubspace, b: AffineSubspace):
    """Exact rational intersection; None when empty, else (point, rows)."""
    if a.ambient != b.ambient or a.algebra != b.algebra:
        raise InputError("subspaces live in different spaces")
    pa, da, _ = q_affine_data(a)
    pb, db, _ = q_affine_data(b)
    total = len(pa)
    cols = len(da) + len(db)
    system = [[da[i][m] for i in range(len(da))]
              + [-db[j][m] for j in range(len(db))] for m in range(total)]
    rhs = rationals.vec_sub(pb, pa)
    if cols == 0:
        if any(rhs):
            return None
        return list(pa), []
    part = rationals.solve(system, rhs)
    if part is None:
        return None
    point = list(pa)
    for coeff, drow in zip(part[:len(da)], da):
        for m in range(total):
            point[m] += coeff * drow[m]
    direction = []
    for null in rationals.nullspace(system, cols):
        vec = [Rat(0)] * total
        for coeff, drow in zip(null[:len(da)], da):
            if coeff:
                for m in range(total):
                    vec[m] += coeff * drow[m]
        if any(vec):
            direction.append(vec)
    return point, direction


def intersect_affine(a: AffineSubspace,
                     b: AffineSubspace) -> Optional[AffineSubspace]:
    """Exact intersection, re-recognized with a valid side tag.

    Same-side inputs always re-recognize. Mixed-side intersections can
    fail to be a subspace of either side, raising SideUnrepresentable.
    Returns None for an empty intersection.
    """
    got = intersect_q(a, b)
    if got is None:
        return None
    point_q, dir_rows = got
    return recognize_affine(a.algebra, a.ambient, point_q, dir_rows)


# -- trichotomy check --------------------------------------------------------


@dataclass(frozen=True)
class TrichotomyRecord:
    line: AffineSubspace
    outcome: str  # empty | point | full | violation


@dataclass(frozen=True)
class TrichotomyReport:
    sidedness: Sidedness
    ok: bool
    records: tuple[TrichotomyRecord, ...]
    witness: Optional[AffineSubspace]


def _line_outcome(a: AffineSubspace, line: AffineSubspace) -> str:
    got = intersect_q(a, line)
    if got is None:
        return "empty"
    _, dir_rows = got
    qdim = len(rationals.rref(dir_rows, a.algebra.block_dim * a.ambient)[1])
    if qdim == 0:
        return "point"
    if qdim == a.algebra.block_dim:
        return "full"
    return "violation"


def _one_sided_witness_line(a: AffineSubspace) -> AffineSubspace:
    """Opposite-side line through the base point meeting A in more than a
    point but not contained in it, built from a basis vector whose
    opposite-side line escapes the direction."""
    algebra = a.algebra
    d = a.direction
    opposite = RIGHT if d.side == LEFT else LEFT
    for x in d.rows:
        for g in algebra.generators():
            w = x.right_mul(g) if d.side == LEFT else x.left_mul(g)
            if not d.contains(w):
                line_dir = VectorSubspace.from_vectors(
                    algebra, [x], opposite, a.ambient)
                return AffineSubspace(a.point, line_dir)
    raise NotTwoSided("no witness: subspace is closed on both sides")


def line_intersection_characterization(a: AffineSubspace, trials: int,
                                       seed: int) -> TrichotomyReport:
    """For a two-sided subspace, sample lines of both sides and verify
    the intersection is empty, one point or the whole line. For a purely
    one-sided subspace, produce a witness line violating that pattern.
    """
    from .randomgen import rand_scalar, rand_vector

    sidedness = classify_sidedness(a)
    if sidedness is not Sidedness.TWO_SIDED:
        witness = _one_sided_witness_line(a)
        outcome = _line_outcome(a, witness)
        record = TrichotomyRecord(witness, outcome)
        return TrichotomyReport(sidedness, outcome == "violation",
                                (record,), witness)

    rng = random.Random(seed)
    algebra = a.algebra
    n = a.ambient
    records = []
    ok = True
    witness = None
    for _ in range(trials):
        side = rng.choice((LEFT, RIGHT))
        if a.dim and rng.random() < 0.5:
            base = a.point
            for row in a.direction.rows:
                c = rand_scalar(rng, algebra, 3)
                base = base + (row.left_mul(c) if a.side == LEFT
                               else row.right_mul(c))
        else:
            base = rand_vector(rng, algebra, n, 3)
        if a.dim and rng.random() < 0.5:
            d = zero_vector(algebra, n)
            for row in a.direction.rows:
                c = rand_scalar(rng, algebra, 3)
                d = d + (row.left_mul(c) if a.side == LEFT
                         else row.right_mul(c))
        else:
            d = rand_vector(rng, algebra, n, 3)
        if d.is_zero():
            d = standard_basis_vector(algebra, n, rng.randrange(n))
        line = AffineSubspace(
            base, VectorSubspace.from_vectors(algebra, [d], side, n))
        outcome = _line_outcome(a, line)
        records.append(TrichotomyRecord(line, outcome))
        if outcome == "violation":
            ok = False
            witness = line
    return TrichotomyReport(sidedness, ok, tuple(records), witness)


# -- bimodule standardization ------------------------------------------------


@dataclass(frozen=True)
class CoordinateMap:
    """Bimodule automorphism of k^n given by a central invertible matrix,
    acting on row vectors from the right."""

    algebra: Algebra
    entries: tuple[tuple[Rat, ...], ...]

    @property
    def ambient(self) -> int:
        return len(self.entries)

    def matrix(self) -> Matrix:
        return matrix(self.algebra, [list(r) for r in self.entries])

    def apply(self, v: Vector) -> Vector:
        return vec_mat(v, self.matrix())

    def apply_affine(self, a: AffineSubspace) -> AffineSubspace:
        rows = [self.apply(r) for r in a.direction.rows]
        sub = VectorSubspace.from_vectors(self.algebra, rows,
                                          a.side, a.ambient)
        return AffineSubspace(self.apply(a.point), sub)

    def inverse(self) -> "CoordinateMap":
        inv = rationals.invert([list(r) for r in self.entries])
        assert inv is not None
        return CoordinateMap(self.algebra,
                             tuple(tuple(r) for r in inv))

    def is_permutation(self) -> bool:
        return all(sorted(row) == [Rat(0)] * (self.ambient - 1) + [Rat(1)]
                   for row in self.entries) and \
            rationals.rank([list(r) for r in self.entries]) == self.ambient


def bimodule_normalize(v: VectorSubspace) -> CoordinateMap:
    """Central change of coordinates taking a two-sided subspace onto the
    span of the first dim-many standard basis vectors.

    The echelon basis of a two-sided subspace is rational; completing it
    with the complementary standard basis vectors gives an invertible
    rational matrix whose inverse is the desired map.
    """
    if classify_sidedness(v) is not Sidedness.TWO_SIDED:
        raise NotTwoSided("standardization needs a two-sided subspace")
    if not v.is_rational():
        raise NotTwoSided("two-sided subspace with non-central echelon basis")
    n = v.ambient
    pivot_set = set(v.pivots)
    rows = [[e.t for e in r] for r in v.rows]
    for i in range(n):
        if i not in pivot_set:
            unit = [Rat(0)] * n
            unit[i] = Rat(1)
            rows.append(unit)
    inv = rationals.invert(rows)
    assert inv is not None
    return CoordinateMap(v.algebra, tuple(tuple(r) for r in inv))


# -- right lines inside a subspace -------------------------------------------


@dataclass(frozen=True)
class RightLineSearch:
    through: Vector
    enumerable: bool
    lines: tuple[VectorSubspace, ...]
    reason: Optional[str]


def right_lines_in(space, through: Optional[Vector] = None) -> RightLineSearch:
    """Right 1-subspaces d*k contained in a left subspace through a point.

    The affine variant shifts to the origin. The union of all such lines
    is the largest right subspace inside the direction, computed exactly
    over the center; with right dimension 0 or 1 the answer is an
    explicit list, otherwise the set is infinite and flagged as not
    enumerable.
    """
    if isinstance(space, AffineSubspace):
        affine = space
    else:
        affine = AffineSubspace(zero_vector(space.algebra, space.ambient), space)
    if through is None:
        through = affine.point
    if not affine.contains(through):
        raise InputError("base point does not lie in the subspace")
    direction = affine.direction
    algebra = direction.algebra
    n = direction.ambient
    total = algebra.block_dim * n
    target, pivots = rationals.rref(direction.qrows(), total)

    constraints: list[list[Rat]] = []
    for c in algebra.basis():
        act = side_action_matrix(c, RIGHT, n)
        constraints.extend(membership_constraints(target, act, total))
    core_vectors = solve_central_linear(constraints, n, algebra)
    core = VectorSubspace.from_vectors(algebra, core_vectors, RIGHT, n)

    if core.dim <= 1:
        lines = tuple(
            VectorSubspace.from_vectors(algebra, [r], RIGHT, n)
            for r in core.rows)
        return RightLineSearch(through, True, lines, None)
    sidedness = classify_sidedness(direction)
    reason = ("two_sided" if sidedness is Sidedness.TWO_SIDED
              else f"right_core_dim_{core.dim}")
    return RightLineSearch(through, False, (), reason)


# -- flags --------------------------------------------------------------------


@dataclass(frozen=True)
class Flag:
    """Strictly increasing chain of affine subspaces, one per dimension,
    with a designated member."""

    members: tuple[AffineSubspace, ...]
    designated: int

    def validate(self) -> bool:
        for i, a in enumerate(self.members):
            if a.dim != i:
                return False
        side = self.members[0].side
        if any(m.side != side for m in self.members):
            return False
        for small, big in zip(self.members, self.members[1:]):
            if not big.contains(small.point):
                return False
            if not all(big.direction.contains(r)
                       for r in small.direction.rows):
                return False
        return True


def extend_to_flag(a: AffineSubspace, side: Optional[str] = None) -> Flag:
    """Flag of affine subspaces of one side containing the input, with
    dimensions 0 through n, built by prefixes of the echelon basis below
    and greedy standard-basis extension above."""
    if side is None:
        side = a.side
    if a.side != side:
        a = AffineSubspace(a.point, a.direction.retag(side))
    algebra = a.algebra
    n = a.ambient
    members = []
    for i in range(a.dim + 1):
        sub = VectorSubspace.from_vectors(
            algebra, list(a.direction.rows[:i]), side, n)
        members.append(AffineSubspace(a.point, sub))
    current = list(a.direction.rows)
    current_sub = a.direction
    for idx in range(n):
        if current_sub.dim == n:
            break
        e = standard_basis_vector(algebra, n, idx)
        if current_sub.contains(e):
            continue
        current = current + [e]
        current_sub = VectorSubspace.from_vectors(algebra, current, side, n)
        members.append(AffineSubspace(a.point, current_sub))
    flag = Flag(tuple(members), a.dim)
    assert flag.members[-1].dim == n
    return flag


# -- chains of two-sided planes ------------------------------------------------


@dataclass(frozen=True)
class PlaneChain:
    planes: tuple[AffineSubspace, ...]

    def validate(self) -> bool:
        for p in self.planes:
            if p.dim != 2 or classify_sidedness(p) is not Sidedness.TWO_SIDED:
                return False
        for prev, nxt in zip(self.planes, self.planes[1:]):
            inter = intersect_affine(prev, nxt)
            if inter is None or inter.dim != 1:
                return False
        return True


def _standard_plane(algebra: Algebra, n: int,
                    consts: Sequence[Scalar]) -> AffineSubspace:
    """Plane with free coordinates 0, 1 and fixed tail coordinates."""
    point = Vector(tuple([algebra.zero(), algebra.zero()] + list(consts)))
    sub = VectorSubspace.from_vectors(
        algebra,
        [standard_basis_vector(algebra, n, 0),
         standard_basis_vector(algebra, n, 1)], LEFT, n)
    return AffineSubspace(point, sub)


def _coordinate_plane(algebra: Algebra, n: int, free: tuple[int, int],
                      fixed: dict[int, Scalar]) -> AffineSubspace:
    entries = [algebra.zero()] * n
    for idx, val in fixed.items():
        entries[idx] = val
    sub = VectorSubspace.from_vectors(
        algebra,
        [standard_basis_vector(algebra, n, free[0]),
         standard_basis_vector(algebra, n, free[1])], LEFT, n)
    return AffineSubspace(Vector(tuple(entries)), sub)


def _last_support_column(v: VectorSubspace) -> int:
    last = -1
    for row in v.rows:
        for idx in range(len(row) - 1, -1, -1):
            if not row[idx].is_zero():
                last = max(last, idx)
                break
    return last


def _chain_to_standard(plane: AffineSubspace) -> list[AffineSubspace]:
    """Chain from the vector plane spanned by e0, e1 to the given
    two-sided plane, consecutive members meeting in lines.

    Base case (direction equal to that plane): move each fixed tail
    coordinate from 0 to its target through an auxiliary plane with free
    coordinates 0 and the coordinate being adjusted. Otherwise reduce
    the highest coordinate supporting the direction by passing to a
    plane containing the trace line on the lower coordinate subspace.
    """
    algebra = plane.algebra
    n = plane.ambient
    v = plane.direction
    kmax = _last_support_column(v)
    if kmax <= 1:
        point = plane.point
        assert point[0].is_zero() and point[1].is_zero()
        consts = list(point.entries[2:])
        achieved = [algebra.zero()] * (n - 2)
        chain = [_standard_plane(algebra, n, achieved)]
        for pos in range(n - 2):
            target = consts[pos]
            if target.is_zero():
                continue
            idx = pos + 2
            fixed = {1: algebra.zero()}
            for other in range(n - 2):
                if other != pos:
                    fixed[other + 2] = achieved[other]
            aux = _coordinate_plane(algebra, n, (0, idx), fixed)
            achieved[pos] = target
            chain.append(aux)
            chain.append(_standard_plane(algebra, n, list(achieved)))
        assert chain[-1].set_equal(plane)
        return chain

    # inductive step: direction reaches coordinate kmax but the trace on
    # the lower coordinates is a two-sided line we can route through
    w = None
    for row in v.rows:
        if not row[kmax].is_zero():
            w = row
            break
    assert w is not None
    point = plane.point
    coeff = point[kmax] * w[kmax].inverse()
    base = point - w.left_mul(coeff)

    others = [row for row in v.rows if row is not w]
    trace_vectors = []
    for row in others:
        if row[kmax].is_zero():
            trace_vectors.append(row)
        else:
            c = row[kmax] * w[kmax].inverse()
            trace_vectors.append(row - w.left_mul(c))
    trace = [t for t in trace_vectors if not t.is_zero()]
    assert len(trace) == 1
    line_row = trace[0]

    pick = None
    for m in range(kmax):
        e = standard_basis_vector(algebra, n, m)
        span = VectorSubspace.from_vectors(algebra, [line_row], LEFT, n)
        if not span.contains(e):
            pick = e
            break
    assert pick is not None
    lower = VectorSubspace.from_vectors(algebra, [line_row, pick], LEFT, n)
    assert lower.dim == 2
    bridge = AffineSubspace(base, lower)
    return _chain_to_standard(bridge) + [plane]


def connect_planes(p: AffineSubspace, p_prime: AffineSubspace) -> PlaneChain:
    """Chain of two-sided affine 2-planes from p to p_prime in which every
    consecutive pair meets in an affine line.

    The first plane is standardized to the span of e0, e1 by a central
    affine change of coordinates; the chain for the second plane is
    built in that frame and mapped back.
    """
    n = p.ambient
    if n < 3:
        raise DimensionTooSmall("plane chains need ambient dimension >= 3")
    for plane in (p, p_prime):
        if plane.dim != 2:
            raise InputError("both subspaces must be 2-planes")
        if classify_sidedness(plane) is not Sidedness.TWO_SIDED:
            raise NotTwoSided("both planes must be two-sided")
    if p.set_equal(p_prime):
        return PlaneChain((p,))
    inter = intersect_affine(p, p_prime)
    if inter is not None and inter.dim == 1:
        return PlaneChain((p, p_prime))

    cmap = bimodule_normalize(p.direction)
    shift = cmap.apply(p.point)
    inv = cmap.inverse()

    def push(a: AffineSubspace) -> AffineSubspace:
        moved = cmap.apply_affine(a)
        return moved.translate(-shift)

    def pull(a: AffineSubspace) -> AffineSubspace:
        return inv.apply_affine(a.translate(shift))

    frame_target = push(p_prime)
    frame_chain = _chain_to_standard(frame_target)
    chain = tuple(pull(a) for a in frame_chain)
    result = PlaneChain(chain)
    assert result.planes[0].set_equal(p)
    assert result.planes[-1].set_equal(p_prime)
    assert result.validate()
    return result
