"""Exact arithmetic in a definite rational quaternion algebra.

An algebra is determined by two negative rationals a, b: the basis is
1, i, j, k with i*i = a, j*j = b, ij = k = -ji (so k*k = -a*b). Negativity
of a and b makes the norm form positive definite, hence every nonzero
element invertible. The rationals themselves are supported as the
degenerate commutative case.

Ring automorphisms of such an algebra fix the rationals pointwise and are
all inner, so a Morphism is stored as a conjugating element q: an
automorphism acts as x -> q^-1 x q and an anti-automorphism as
x -> q^-1 conj(x) q. The conjugating element is only determined up to a
rational factor and is normalized so that its first nonzero coordinate
is 1, making Morphism equality decidable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ._ratio import Rat, rat
from .errors import DivisionByZero, InputError

_ZERO = rat(0)
_ONE = rat(1)


@dataclass(frozen=True)
class Algebra:
    """Parameters of the ambient division algebra."""

    a: Rat = rat(-1)
    b: Rat = rat(-1)
    commutative: bool = False

    def __post_init__(self):
        object.__setattr__(self, "a", rat(self.a))
        object.__setattr__(self, "b", rat(self.b))
        if not self.commutative and not (self.a < 0 and self.b < 0):
            raise InputError(
                "quaternion parameters must satisfy a < 0 and b < 0 "
                "(positive definite norm form)"
            )

    @classmethod
    def rationals(cls) -> "Algebra":
        return cls(rat(-1), rat(-1), commutative=True)

    @classmethod
    def quaternions(cls, a=-1, b=-1) -> "Algebra":
        return cls(rat(a), rat(b), commutative=False)

    @property
    def block_dim(self) -> int:
        """Dimension over the center: 4 for quaternions, 1 for rationals."""
        return 1 if self.commutative else 4

    def scalar(self, t=0, x=0, y=0, z=0) -> "Scalar":
        return Scalar(self, rat(t), rat(x), rat(y), rat(z))

    def zero(self) -> "Scalar":
        return self.scalar()

    def one(self) -> "Scalar":
        return self.scalar(1)

    def i(self) -> "Scalar":
        return self.scalar(0, 1)

    def j(self) -> "Scalar":
        return self.scalar(0, 0, 1)

    def k(self) -> "Scalar":
        return self.scalar(0, 0, 0, 1)

    def basis(self) -> tuple["Scalar", ...]:
        if self.commutative:
            return (self.one(),)
        return (self.one(), self.i(), self.j(), self.k())

    def generators(self) -> tuple["Scalar", ...]:
        """Elements which generate the algebra over its center."""
        if self.commutative:
            return ()
        return (self.i(), self.j())


@dataclass(frozen=True)
class Scalar:
    """Element t + x*i + y*j + z*k with rational coordinates."""

    algebra: Algebra
    t: Rat
    x: Rat
    y: Rat
    z: Rat

    def __post_init__(self):
        for field in ("t", "x", "y", "z"):
            object.__setattr__(self, field, rat(getattr(self, field)))
        if self.algebra.commutative and (self.x or self.y or self.z):
            raise InputError("commutative scalars must have x = y = z = 0")

    def coords(self) -> tuple[Rat, ...]:
        if self.algebra.commutative:
            return (self.t,)
        return (self.t, self.x, self.y, self.z)

    def is_zero(self) -> bool:
        return not (self.t or self.x or self.y or self.z)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_central(self) -> bool:
        """True iff the element commutes with the whole algebra.

        The center is the rationals, so this is vanishing of the i, j, k
        coordinates.
        """
        return not (self.x or self.y or self.z)

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.algebra != self.algebra:
                raise InputError("scalars from different algebras")
            return other
        return Scalar(self.algebra, rat(other), _ZERO, _ZERO, _ZERO)

    def __add__(self, other) -> "Scalar":
        o = self._coerce(other)
        return Scalar(self.algebra, self.t + o.t, self.x + o.x,
                      self.y + o.y, self.z + o.z)

    __radd__ = __add__

    def __sub__(self, other) -> "Scalar":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Scalar":
        return self._coerce(other) - self

    def __neg__(self) -> "Scalar":
        return Scalar(self.algebra, -self.t, -self.x, -self.y, -self.z)

    def __mul__(self, other) -> "Scalar":
        o = self._coerce(other)
        a, b = self.algebra.a, self.algebra.b
        t1, x1, y1, z1 = self.t, self.x, self.y, self.z
        t2, x2, y2, z2 = o.t, o.x, o.y, o.z
        return Scalar(
            self.algebra,
            t1 * t2 + a * x1 * x2 + b * y1 * y2 - a * b * z1 * z2,
            t1 * x2 + x1 * t2 - b * y1 * z2 + b * z1 * y2,
            t1 * y2 + y1 * t2 + a * x1 * z2 - a * z1 * x2,
            t1 * z2 + z1 * t2 + x1 * y2 - y1 * x2,
        )

    def __rmul__(self, other) -> "Scalar":
        return self._coerce(other) * self

    def __truediv__(self, other):
        """Division by a central (rational) value only; noncommutative
        quotients must spell out the side via inverse()."""
        o = self._coerce(other)
        if not o.is_central():
            raise InputError("ambiguous division by a non-central scalar")
        return self * o.inverse()

    def conjugate(self) -> "Scalar":
        return Scalar(self.algebra, self.t, -self.x, -self.y, -self.z)

    def norm(self) -> Rat:
        """Reduced norm x * conj(x), a nonnegative rational."""
        a, b = self.algebra.a, self.algebra.b
        return (self.t * self.t - a * self.x * self.x
                - b * self.y * self.y + a * b * self.z * self.z)

    def inverse(self) -> "Scalar":
        n = self.norm()
        if not n:
            raise DivisionByZero("zero scalar has no inverse")
        c = self.conjugate()
        return Scalar(self.algebra, c.t / n, c.x / n, c.y / n, c.z / n)

    def scale(self, r) -> "Scalar":
        """Multiplication by a rational, unambiguous on either side."""
        r = rat(r)
        return Scalar(self.algebra, self.t * r, self.x * r,
                      self.y * r, self.z * r)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for coeff, unit in zip(self.coords(), ("", "i", "j", "k")):
            if not coeff:
                continue
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            body = unit if (mag == 1 and unit) else str(mag) + (" " + unit if unit else "")
            if not parts:
                parts.append(("-" if sign == "-" else "") + body)
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Scalar({self})"


def scalar_from_coords(algebra: Algebra, coords: Iterable) -> Scalar:
    vals = [rat(c) for c in coords]
    if algebra.commutative:
        if len(vals) == 1:
            vals = vals + [_ZERO, _ZERO, _ZERO]
    if len(vals) != 4:
        raise InputError("scalar needs 4 coordinates (1 in commutative mode)")
    return Scalar(algebra, *vals)


@dataclass(frozen=True)
class Morphism:
    """Automorphism x -> q^-1 x q or anti-automorphism x -> q^-1 conj(x) q."""

    AUTOMORPHISM = "automorphism"
    ANTI_AUTOMORPHISM = "anti_automorphism"

    kind: str
    q: Scalar

    def __post_init__(self):
        if self.kind not in (self.AUTOMORPHISM, self.ANTI_AUTOMORPHISM):
            raise InputError(f"unknown morphism kind {self.kind!r}")
        if self.q.is_zero():
            raise InputError("conjugating element must be nonzero")
        object.__setattr__(self, "q", _normalize_conjugator(self.q))

    @property
    def algebra(self) -> Algebra:
        return self.q.algebra

    @property
    def is_anti(self) -> bool:
        return self.kind == self.ANTI_AUTOMORPHISM

    @classmethod
    def identity(cls, algebra: Algebra) -> "Morphism":
        return cls(cls.AUTOMORPHISM, algebra.one())

    @classmethod
    def conjugation(cls, algebra: Algebra) -> "Morphism":
        return cls(cls.ANTI_AUTOMORPHISM, algebra.one())

    def __call__(self, x: Scalar) -> Scalar:
        if x.algebra != self.algebra:
            raise InputError("scalar from a different algebra")
        core = x.conjugate() if self.is_anti else x
        return self.q.inverse() * core * self.q

    def inverse(self) -> "Morphism":
        return Morphism(self.kind, self.q.inverse())

    def compose(self, inner: "Morphism") -> "Morphism":
        """The morphism x -> self(inner(x))."""
        kind = (self.AUTOMORPHISM if self.is_anti == inner.is_anti
                else self.ANTI_AUTOMORPHISM)
        return Morphism(kind, inner.q * self.q)

    def is_identity(self) -> bool:
        return not self.is_anti and self.q.is_central()


def _normalize_conjugator(q: Scalar) -> Scalar:
    for c in q.coords():
        if c:
            return q.scale(1 / c)
    raise InputError("conjugating element must be nonzero")


def restrict_scalars(x: Scalar, side: str):
    """Matrix over the center of v -> x*v (side="left") or v -> v*x
    (side="right") in the basis 1, i, j, k, acting on column coordinate
    vectors. Left matrices multiply like the algebra, right matrices in
    the reversed order, and any left matrix commutes with any right one.
    """
    if side not in ("left", "right"):
        raise InputError(f"side must be 'left' or 'right', got {side!r}")
    basis = x.algebra.basis()
    cols = []
    for e in basis:
        image = x * e if side == "left" else e * x
        cols.append(image.coords())
    n = len(basis)
    return [[cols[c][r] for c in range(n)] for r in range(n)]
