"""Vector algebra of the pseudo-Galilean 3-space.

The ambient space carries a degenerate metric: the x-axis is the
non-isotropic direction, and the (y, z)-plane is a Minkowski plane.  The
scalar product is therefore defined by cases:

    dot(u, v) = u.x1 * v.x1              if u.x1 != 0 or v.x1 != 0
    dot(u, v) = u.x2 * v.x2 - u.x3 * v.x3   otherwise

The case split is an *exact* comparison on the stored component values; no
tolerance is involved.  A fuzzy split would make the product discontinuous
in a data-dependent way, while the exact split keeps it reproducible.

All functions here are pure and all types immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


@dataclass(frozen=True)
class PGVector:
    """A vector (or point) with components along x, y, z.

    Components must be finite; arithmetic is componentwise.
    """

    x1: float
    x2: float
    x3: float

    def __post_init__(self):
        for c in (self.x1, self.x2, self.x3):
            if not math.isfinite(c):
                raise ValueError(f"PGVector components must be finite, got {c!r}")

    def __add__(self, other: "PGVector") -> "PGVector":
        return PGVector(self.x1 + other.x1, self.x2 + other.x2, self.x3 + other.x3)

    def __sub__(self, other: "PGVector") -> "PGVector":
        return PGVector(self.x1 - other.x1, self.x2 - other.x2, self.x3 - other.x3)

    def __mul__(self, c: float) -> "PGVector":
        return PGVector(c * self.x1, c * self.x2, c * self.x3)

    __rmul__ = __mul__

    def __truediv__(self, c: float) -> "PGVector":
        return PGVector(self.x1 / c, self.x2 / c, self.x3 / c)

    def __neg__(self) -> "PGVector":
        return PGVector(-self.x1, -self.x2, -self.x3)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x1, self.x2, self.x3)

    def max_abs(self) -> float:
        """Sup-norm of the component triple (a scale, not a metric norm)."""
        return max(abs(self.x1), abs(self.x2), abs(self.x3))


class CausalClass(Enum):
    """Causal character of a vector under the degenerate metric."""

    NON_ISOTROPIC = "non-isotropic"
    SPACELIKE = "spacelike-isotropic"
    TIMELIKE = "timelike-isotropic"
    LIGHTLIKE = "lightlike-isotropic"
    ZERO = "zero"


def pg_dot(u: PGVector, v: PGVector) -> float:
    """Signed scalar product of the degenerate metric (see module docstring)."""
    if u.x1 != 0.0 or v.x1 != 0.0:
        return u.x1 * v.x1
    return u.x2 * v.x2 - u.x3 * v.x3


def pg_cross(u: PGVector, v: PGVector) -> PGVector:
    """Cross product adapted to the degenerate metric.

    The result always lies in the isotropic plane (first component zero).
    """
    return PGVector(0.0, u.x1 * v.x3 - u.x3 * v.x1, u.x1 * v.x2 - u.x2 * v.x1)


def det3(u: PGVector, v: PGVector, w: PGVector) -> float:
    """Determinant of the 3x3 matrix with rows u, v, w."""
    return (u.x1 * (v.x2 * w.x3 - v.x3 * w.x2)
            - u.x2 * (v.x1 * w.x3 - v.x3 * w.x1)
            + u.x3 * (v.x1 * w.x2 - v.x2 * w.x1))


def causal_class(v: PGVector) -> CausalClass:
    """Classify v by its causal character.

    Comparisons are exact on the stored components, mirroring the case
    split of the scalar product.
    """
    if v.x1 != 0.0:
        return CausalClass.NON_ISOTROPIC
    if v.x2 == 0.0 and v.x3 == 0.0:
        return CausalClass.ZERO
    q = v.x2 * v.x2 - v.x3 * v.x3
    if q > 0.0:
        return CausalClass.SPACELIKE
    if q < 0.0:
        return CausalClass.TIMELIKE
    return CausalClass.LIGHTLIKE


@dataclass(frozen=True)
class SimilarityMotion:
    """An element of the 8-parameter similarity group of the space.

    Points transform as

        x ->  a + b*x
        y ->  c + d*x + r*cosh(theta)*y + r*sinh(theta)*z
        z ->  e + f*x + r*sinh(theta)*y + r*cosh(theta)*z

    The isometry subgroup is b == r == 1.  The scale r must be nonzero;
    b must be nonzero whenever the motion is used to reparametrize a curve.
    """

    a: float = 0.0
    b: float = 1.0
    c: float = 0.0
    d: float = 0.0
    e: float = 0.0
    f: float = 0.0
    r: float = 1.0
    theta: float = 0.0

    def __post_init__(self):
        if self.r == 0.0:
            raise ValueError("similarity scale r must be nonzero")

    @property
    def is_isometry(self) -> bool:
        return self.b == 1.0 and self.r == 1.0


def apply_similarity(m: SimilarityMotion, p: PGVector) -> PGVector:
    """Transform a point by the full motion, including translations."""
    ch = math.cosh(m.theta)
    sh = math.sinh(m.theta)
    return PGVector(
        m.a + m.b * p.x1,
        m.c + m.d * p.x1 + m.r * ch * p.x2 + m.r * sh * p.x3,
        m.e + m.f * p.x1 + m.r * sh * p.x2 + m.r * ch * p.x3,
    )


def apply_similarity_linear(m: SimilarityMotion, v: PGVector) -> PGVector:
    """Transform a vector by the linear part only (translations dropped)."""
    ch = math.cosh(m.theta)
    sh = math.sinh(m.theta)
    return PGVector(
        m.b * v.x1,
        m.d * v.x1 + m.r * ch * v.x2 + m.r * sh * v.x3,
        m.f * v.x1 + m.r * sh * v.x2 + m.r * ch * v.x3,
    )
