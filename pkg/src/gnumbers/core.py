"""Real and complex g-numbers in the canonical null basis.

A g-number is ``g11*ba + g12*b + g21*a + g22*ab`` where ``a`` and ``b`` are
nilpotent (``a*a == b*b == 0``) and ``a*b + b*a == 1``.  The four
coordinates multiply exactly like the entries of the 2x2 matrix
``[[g11, g12], [g21, g22]]``.

Two concrete types share one implementation: :class:`GNum` (float
coordinates) and :class:`CGNum` (complex coordinates).  Mixing them, or
multiplying a :class:`GNum` by a complex scalar, promotes to :class:`CGNum`.
"""
from __future__ import annotations

import cmath
import numbers
from dataclasses import dataclass
from typing import ClassVar, Literal, Union

from .errors import SingularGNumber

DEFAULT_TOL = 1e-9

Scalar = Union[float, complex]
ConjugationKind = Literal["reverse", "inversion", "mixed"]

_FIELDS = ("g11", "g12", "g21", "g22")


@dataclass(frozen=True)
class _GNumber:
    g11: Scalar = 0.0
    g12: Scalar = 0.0
    g21: Scalar = 0.0
    g22: Scalar = 0.0

    _coerce: ClassVar[type] = float

    def __post_init__(self):
        for name in _FIELDS:
            value = self._coerce(getattr(self, name))
            if not cmath.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)

    # -- views --------------------------------------------------------------

    @property
    def coords(self) -> tuple:
        return (self.g11, self.g12, self.g21, self.g22)

    @property
    def is_complex(self) -> bool:
        return isinstance(self, CGNum)

    def norm(self) -> float:
        """Max-abs coordinate, the scale used by every tolerance test."""
        return max(abs(c) for c in self.coords)

    def scalar_part(self) -> Scalar:
        return 0.5 * (self.g11 + self.g22)

    def vector_part(self) -> "_GNumber":
        return self - self.scalar_part()

    def vsq(self) -> Scalar:
        """The square of the vector part, ``a1**2 + a2**2 - a3**2``."""
        c = std_coords(self)
        return c.a1 * c.a1 + c.a2 * c.a2 - c.a3 * c.a3

    def std(self) -> "StdCoords":
        return std_coords(self)

    def isclose(self, other: "_GNumber", tol: float = 1e-12) -> bool:
        return all(abs(x - y) <= tol for x, y in zip(self.coords, other.coords))

    def is_singular(self, tol: float = DEFAULT_TOL) -> bool:
        return abs(det(self)) <= tol * max(1.0, self.norm() ** 2)

    def to_complex(self) -> "CGNum":
        return CGNum(*self.coords)

    # -- conjugations and invariants ---------------------------------------

    def reverse(self):
        return conjugate(self, "reverse")

    def inversion(self):
        return conjugate(self, "inversion")

    def mixed(self):
        return conjugate(self, "mixed")

    def trace(self) -> Scalar:
        return trace(self)

    def det(self) -> Scalar:
        return det(self)

    def inverse(self, tol: float = DEFAULT_TOL):
        return inverse(self, tol)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return type(self)(*(-c for c in self.coords))

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return add(other, -self)

    def __mul__(self, other):
        if isinstance(other, numbers.Number):
            return scale(self, other)
        if isinstance(other, _GNumber):
            return mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Number):
            return scale(self, other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, numbers.Number):
            return scale(self, 1 / other)
        if isinstance(other, _GNumber):
            return mul(self, inverse(other))
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, numbers.Number):
            return scale(inverse(self), other)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, numbers.Integral):
            return NotImplemented
        base = self if n >= 0 else inverse(self)
        result = type(self)(1, 0, 0, 1)
        for _ in range(abs(int(n))):
            result = mul(result, base)
        return result

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        if isinstance(self, CGNum):
            return {k: [c.real, c.imag] for k, c in zip(_FIELDS, self.coords)}
        return dict(zip(_FIELDS, self.coords))


@dataclass(frozen=True)
class GNum(_GNumber):
    """A real g-number, coordinates over the ordered basis (ba, b, a, ab)."""

    g11: float = 0.0
    g12: float = 0.0
    g21: float = 0.0
    g22: float = 0.0

    _coerce: ClassVar[type] = float


@dataclass(frozen=True)
class CGNum(_GNumber):
    """A complex g-number; complex scalars commute with ``a`` and ``b``."""

    g11: complex = 0j
    g12: complex = 0j
    g21: complex = 0j
    g22: complex = 0j

    _coerce: ClassVar[type] = complex

    def real_part(self) -> GNum:
        return GNum(*(c.real for c in self.coords))

    def imag_part(self) -> GNum:
        return GNum(*(c.imag for c in self.coords))

    def is_real(self, tol: float = 0.0) -> bool:
        return all(abs(c.imag) <= tol for c in self.coords)


@dataclass(frozen=True)
class StdCoords:
    """Coordinates over the standard basis (1, e, fe, f)."""

    a0: Scalar
    a1: Scalar
    a2: Scalar
    a3: Scalar

    def as_tuple(self) -> tuple:
        return (self.a0, self.a1, self.a2, self.a3)


def _result_type(*items) -> type:
    for item in items:
        if isinstance(item, CGNum) or (
            isinstance(item, numbers.Complex) and not isinstance(item, numbers.Real)
        ):
            return CGNum
    return GNum


def _lift(x):
    """Embed a plain scalar as ``x * ONE``; pass g-numbers through."""
    if isinstance(x, _GNumber):
        return x
    if isinstance(x, numbers.Number):
        return scalar(x)
    return None


def scalar(x: Scalar) -> _GNumber:
    return _result_type(x)(x, 0, 0, x)


def from_json(data: dict) -> _GNumber:
    values = [data[k] for k in _FIELDS]
    if any(isinstance(v, (list, tuple)) for v in values):
        return CGNum(*(complex(v[0], v[1]) if isinstance(v, (list, tuple)) else v
                       for v in values))
    return GNum(*values)


# -- basis constants ---------------------------------------------------------

A_GEN = GNum(0, 0, 1, 0)
B_GEN = GNum(0, 1, 0, 0)
AB = GNum(0, 0, 0, 1)
BA = GNum(1, 0, 0, 0)
ONE = GNum(1, 0, 0, 1)
ZERO = GNum(0, 0, 0, 0)
E = GNum(0, 1, 1, 0)
F = GNum(0, -1, 1, 0)
FE = GNum(-1, 0, 0, 1)


# -- operations --------------------------------------------------------------

def add(f: _GNumber, g: _GNumber) -> _GNumber:
    return _result_type(f, g)(*(x + y for x, y in zip(f.coords, g.coords)))


def scale(g: _GNumber, s: Scalar) -> _GNumber:
    return _result_type(g, s)(*(s * c for c in g.coords))


def mul(f: _GNumber, g: _GNumber) -> _GNumber:
    """Geometric product; the coordinate rule is the 2x2 matrix product."""
    return _result_type(f, g)(
        f.g11 * g.g11 + f.g12 * g.g21,
        f.g11 * g.g12 + f.g12 * g.g22,
        f.g21 * g.g11 + f.g22 * g.g21,
        f.g21 * g.g12 + f.g22 * g.g22,
    )


def conjugate(g: _GNumber, kind: ConjugationKind) -> _GNumber:
    """Apply one of the three involutions defined on the null basis.

    ``reverse`` swaps ``ab <-> ba`` and fixes the odd part, ``inversion``
    negates ``a`` and ``b``, and ``mixed`` is their composition.  Reverse and
    mixed are anti-automorphisms; inversion is an automorphism.
    """
    cls = type(g)
    if kind == "reverse":
        return cls(g.g22, g.g12, g.g21, g.g11)
    if kind == "inversion":
        return cls(g.g11, -g.g12, -g.g21, g.g22)
    if kind == "mixed":
        return cls(g.g22, -g.g12, -g.g21, g.g11)
    raise ValueError(f"unknown conjugation kind {kind!r}")


def parts(g: _GNumber) -> tuple[_GNumber, _GNumber]:
    """Split into (odd, even): the ``a, b`` span and the ``ab, ba`` span."""
    cls = type(g)
    return cls(0, g.g12, g.g21, 0), cls(g.g11, 0, 0, g.g22)


def trace(g: _GNumber) -> Scalar:
    return g.g11 + g.g22


def det(g: _GNumber) -> Scalar:
    return g.g11 * g.g22 - g.g12 * g.g21


def inverse(g: _GNumber, tol: float = DEFAULT_TOL) -> _GNumber:
    """Multiplicative inverse ``g* / det(g)``.

    Raises :class:`SingularGNumber` when ``|det g| <= tol * max(1, |g|**2)``.
    """
    d = det(g)
    if abs(d) <= tol * max(1.0, g.norm() ** 2):
        raise SingularGNumber(f"det = {d!r}; {g!r} has no inverse")
    return scale(conjugate(g, "mixed"), 1 / d)


def split_product(f: _GNumber, g: _GNumber) -> tuple[_GNumber, _GNumber]:
    """Return ``(f∘g, f⊗g)``, the symmetric and skew halves of ``f*g``."""
    fg, gf = mul(f, g), mul(g, f)
    return scale(add(fg, gf), 0.5), scale(add(fg, -gf), 0.5)


def sym(f: _GNumber, g: _GNumber) -> _GNumber:
    return split_product(f, g)[0]


def skew(f: _GNumber, g: _GNumber) -> _GNumber:
    return split_product(f, g)[1]


def dot(f: _GNumber, g: _GNumber) -> Scalar:
    """Scalar part of the symmetric product (``a . b == 1/2``)."""
    return sym(f, g).scalar_part()


def std_coords(g: _GNumber) -> StdCoords:
    return StdCoords(
        0.5 * (g.g22 + g.g11),
        0.5 * (g.g21 + g.g12),
        0.5 * (g.g22 - g.g11),
        0.5 * (g.g21 - g.g12),
    )


def from_std(c: StdCoords | tuple) -> _GNumber:
    a0, a1, a2, a3 = c.as_tuple() if isinstance(c, StdCoords) else c
    cls = _result_type(a0, a1, a2, a3)
    return cls(a0 - a2, a1 - a3, a1 + a3, a0 + a2)
