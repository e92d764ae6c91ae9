"""Vector-analysis identities for vector parts over the frame (e, fe, f).

The frame has metric (+, +, -).  Each product is given by its coordinate
formula; :func:`triple_cross` also evaluates the algebraic half-commutator
route and refuses to return if the two disagree.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import DEFAULT_TOL, GNum, _GNumber, from_std, split_product, std_coords
from .errors import IdentityViolation, NotAVector


@dataclass(frozen=True)
class Vec3:
    x1: float
    x2: float
    x3: float

    def __iter__(self):
        return iter((self.x1, self.x2, self.x3))

    def __add__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x1 + other.x1, self.x2 + other.x2, self.x3 + other.x3)

    def __sub__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x1 - other.x1, self.x2 - other.x2, self.x3 - other.x3)

    def __neg__(self) -> "Vec3":
        return Vec3(-self.x1, -self.x2, -self.x3)

    def __mul__(self, s: float) -> "Vec3":
        return Vec3(s * self.x1, s * self.x2, s * self.x3)

    __rmul__ = __mul__

    def to_gnum(self) -> GNum:
        return from_std((0.0, self.x1, self.x2, self.x3))

    @classmethod
    def from_gnum(cls, g: _GNumber, tol: float = DEFAULT_TOL) -> "Vec3":
        c = std_coords(g)
        if abs(c.a0) > tol * max(1.0, g.norm()):
            raise NotAVector(f"{g!r} has scalar part {c.a0!r}")
        return cls(c.a1, c.a2, c.a3)

    def to_json(self) -> list:
        return [self.x1, self.x2, self.x3]


def scalar_prod(x: Vec3, y: Vec3) -> float:
    return x.x1 * y.x1 + x.x2 * y.x2 - x.x3 * y.x3


def cross_prod(x: Vec3, y: Vec3) -> Vec3:
    """Expand ``det [[e, fe, -f], [x1, x2, x3], [y1, y2, y3]]`` along the top row."""
    return Vec3(
        x.x2 * y.x3 - x.x3 * y.x2,
        -(x.x1 * y.x3 - x.x3 * y.x1),
        -(x.x1 * y.x2 - x.x2 * y.x1),
    )


def _det3(r1, r2, r3) -> float:
    (a, b, c), (d, e, f), (g, h, i) = r1, r2, r3
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def triple_scalar(x: Vec3, y: Vec3, z: Vec3) -> float:
    return _det3(tuple(x), tuple(y), tuple(z))


def algebra_scalar_prod(x: Vec3, y: Vec3) -> float:
    """Scalar part of the symmetric product of the embedded vectors."""
    return split_product(x.to_gnum(), y.to_gnum())[0].scalar_part()


def algebra_cross_prod(x: Vec3, y: Vec3) -> Vec3:
    """Half-commutator ``(xy - yx)/2`` of the embedded vectors."""
    return Vec3.from_gnum(split_product(x.to_gnum(), y.to_gnum())[1])


def triple_cross(x: Vec3, y: Vec3, z: Vec3, tol: float = DEFAULT_TOL) -> Vec3:
    """``x ⊗ (y ⊗ z)``, checked against ``(x∘y) z - (x∘z) y``."""
    lhs = algebra_cross_prod(x, algebra_cross_prod(y, z))
    rhs = scalar_prod(x, z) * y
    rhs = scalar_prod(x, y) * z - rhs
    scale = max(1.0, *(abs(c) for c in (*lhs, *rhs)))
    if any(abs(p - q) > tol * scale for p, q in zip(lhs, rhs)):
        raise IdentityViolation(f"{lhs} != {rhs}")
    return rhs
