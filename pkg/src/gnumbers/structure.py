"""Classification, Euler forms, null/idempotent constructions and spectra.

Every g-number splits as ``alpha0 + v`` with ``v`` in the span of
``e, fe, f``.  The sign of ``v*v`` (a real scalar) sorts ``g`` into the
hyperbolic, parabolic and Euclidean classes, and most of what follows is a
case analysis on that sign.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterable, Literal, Optional

from .core import (
    A_GEN,
    B_GEN,
    DEFAULT_TOL,
    E,
    F,
    ONE,
    CGNum,
    GNum,
    Scalar,
    StdCoords,
    _GNumber,
    from_std,
    std_coords,
)
from .errors import (
    DegenerateNilpotent,
    NotAVector,
    NotIdempotent,
    NotNilpotent,
    OffIdempotentVariety,
    ScalarIdempotent,
    ScalarInput,
    SingularGNumber,
    ZeroScalarParabolic,
)
from .matrix import Mat2, sandwich_matrix


def _scale_tol(g: _GNumber, tol: float) -> float:
    return tol * max(1.0, g.norm() ** 2)


def _real(g: _GNumber) -> GNum:
    if isinstance(g, GNum):
        return g
    if isinstance(g, CGNum) and g.is_real():
        return g.real_part()
    raise TypeError(f"a real g-number is required, got {g!r}")


# -- classification ------------------------------------------------------------

class Kind(str, Enum):
    HYPERBOLIC = "Hyperbolic"
    PARABOLIC = "Parabolic"
    EUCLIDEAN = "Euclidean"


@dataclass(frozen=True)
class Classification:
    tag: Kind
    vsq: float
    singular: bool

    def to_json(self) -> dict:
        return {"tag": self.tag.value, "vsq": self.vsq, "singular": self.singular}


def classify(g: _GNumber, tol: float = DEFAULT_TOL) -> Classification:
    g = _real(g)
    vsq = g.vsq()
    band = _scale_tol(g, tol)
    if vsq > band:
        tag = Kind.HYPERBOLIC
    elif vsq < -band:
        tag = Kind.EUCLIDEAN
    else:
        tag = Kind.PARABOLIC
    return Classification(tag, vsq, g.is_singular(tol))


# -- exponentials and Euler forms -----------------------------------------------

def exp_vector(v: _GNumber, t: Scalar, tol: float = DEFAULT_TOL) -> _GNumber:
    """``exp(t*v)`` for a pure vector ``v`` in closed form.

    Because ``v*v`` is a scalar the series collapses to cosh/sinh, ``1 + t*v``
    or cos/sin depending on its sign.
    """
    if abs(v.scalar_part()) > tol * max(1.0, v.norm()):
        raise NotAVector(f"scalar part {v.scalar_part()!r} is not zero")
    vsq = v.vsq()
    if abs(vsq) <= _scale_tol(v, tol):
        return ONE + t * v
    if isinstance(v, CGNum) or isinstance(t, complex):
        s = cmath.sqrt(vsq)
        return cmath.cosh(t * s) + (cmath.sinh(t * s) / s) * v
    if vsq > 0:
        s = math.sqrt(vsq)
        return math.cosh(t * s) + (math.sinh(t * s) / s) * v
    s = math.sqrt(-vsq)
    return math.cos(t * s) + (math.sin(t * s) / s) * v


class EulerTag(str, Enum):
    HYP_SCALAR = "HypScalarLike"
    HYP_VECTOR = "HypVectorLike"
    PARABOLIC = "Parabolic"
    EUCLIDEAN = "Euclidean"


@dataclass(frozen=True)
class EulerForm:
    """An exponential canonical form.

    ``HypScalarLike``:  ``sign * rho * exp(phi*axis)``, ``axis**2 == 1``
    ``HypVectorLike``:  ``sign * rho * axis * exp(phi*axis)``
    ``Parabolic``:      ``rho * exp(phi*axis)`` with ``rho = alpha0``,
                        ``phi = 1/alpha0`` and ``axis`` the nilpotent vector part
    ``Euclidean``:      ``rho * exp(phi*axis)``, ``axis**2 == -1``
    """

    tag: EulerTag
    rho: float
    phi: float
    sign: int
    axis: GNum

    def reconstruct(self) -> GNum:
        return euler_reconstruct(self)

    def to_json(self) -> dict:
        return {
            "tag": self.tag.value,
            "rho": self.rho,
            "phi": self.phi,
            "sign": self.sign,
            "axis": self.axis.to_json(),
        }


def euler_form(g: _GNumber, tol: float = DEFAULT_TOL) -> EulerForm:
    g = _real(g)
    cls = classify(g, tol)
    a0 = g.scalar_part()
    v = g.vector_part()
    if cls.tag is Kind.PARABOLIC:
        if abs(a0) <= tol * max(1.0, g.norm()):
            raise ZeroScalarParabolic(f"{g!r} is parabolic with zero scalar part")
        if cls.singular:
            raise SingularGNumber(f"{g!r} is singular")
        return EulerForm(EulerTag.PARABOLIC, a0, 1.0 / a0, 1, v)
    if cls.singular:
        raise SingularGNumber(f"{g!r} is singular")
    d = g.det()
    if cls.tag is Kind.HYPERBOLIC:
        sigma = math.sqrt(cls.vsq)
        u = v / sigma
        if d > 0:
            eps = 1 if a0 > 0 else -1
            rho = math.sqrt(d)
            return EulerForm(EulerTag.HYP_SCALAR, rho, math.asinh(eps * sigma / rho), eps, u)
        rho = math.sqrt(-d)
        return EulerForm(EulerTag.HYP_VECTOR, rho, math.asinh(a0 / rho), 1, u)
    sigma = math.sqrt(-cls.vsq)
    return EulerForm(EulerTag.EUCLIDEAN, math.sqrt(d), math.atan2(sigma, a0), 1, v / sigma)


def euler_reconstruct(form: EulerForm) -> GNum:
    rot = exp_vector(form.axis, form.phi)
    if form.tag is EulerTag.HYP_VECTOR:
        rot = form.axis * rot
    return (form.sign * form.rho) * rot


# -- nilpotents ------------------------------------------------------------------

@dataclass(frozen=True)
class NilpotentParams:
    """``n = n2*b + n3*a + 2*n4*(a^b)``, on the cone ``n2*n3 + n4**2 == 0``."""

    n2: float
    n3: float
    n4: float

    @property
    def n1(self) -> float:
        return -self.n4

    @classmethod
    def from_gnum(cls, n: _GNumber) -> "NilpotentParams":
        return cls(n.g12, n.g21, n.g22)


def is_nilpotent(g: _GNumber, tol: float = DEFAULT_TOL) -> bool:
    if g.norm() <= tol:
        return False
    return (g * g).norm() <= _scale_tol(g, tol)


def is_idempotent(g: _GNumber, tol: float = DEFAULT_TOL) -> bool:
    if g.norm() <= tol:
        return False
    return (g * g - g).norm() <= _scale_tol(g, tol)


def make_nilpotent(p: NilpotentParams, tol: float = DEFAULT_TOL) -> GNum:
    size = max(abs(p.n2), abs(p.n3), abs(p.n4))
    if abs(p.n2 * p.n3 + p.n4 * p.n4) > tol * max(1.0, size * size):
        raise NotNilpotent(f"n2*n3 + n4**2 = {p.n2 * p.n3 + p.n4 * p.n4!r} != 0")
    return GNum(-p.n4, p.n2, p.n3, p.n4)


def conjugator_for_nilpotent(n: _GNumber, tol: float = DEFAULT_TOL) -> _GNumber:
    """Return ``g`` with ``g * a * g**-1 == n``.

    For ``n2 != 0`` this is ``a + n2*b + n4*ab``.  When ``n2`` vanishes the
    nilpotent is a multiple of ``a``; conjugating by ``e`` (which swaps ``a``
    and ``b``) moves it into the generic case and the two maps are composed.
    """
    if n.norm() <= tol:
        raise DegenerateNilpotent("the zero g-number has no conjugator")
    if not is_nilpotent(n, tol):
        raise NotNilpotent(f"{n!r} does not square to zero")
    if abs(n.g12) <= tol * max(1.0, n.norm()):
        return E * conjugator_for_nilpotent(E * n * E, tol)
    return type(n)(0, n.g12, 1, n.g22)


def corollary_conjugator(n: _GNumber) -> _GNumber:
    """The same conjugator assembled from standard coordinates."""
    n2, n4 = n.g12, n.g22
    return from_std(StdCoords(n4 / 2, (1 + n2) / 2, n4 / 2, (1 - n2) / 2))


# -- relative bases ------------------------------------------------------------------

Direction = Literal["forward", "backward"]


@dataclass(frozen=True)
class RelativeBasis:
    """A relative null basis ``{BA, B, A, AB}``.

    ``direction == "forward"`` means ``X = g x g**-1`` for each canonical
    element ``x``; ``"backward"`` means ``X = g**-1 x g``.
    """

    BA: _GNumber
    B: _GNumber
    A: _GNumber
    AB: _GNumber
    conjugator: _GNumber
    direction: Direction

    def relative_matrix(self, f: _GNumber) -> Mat2:
        """Coordinates of ``f`` over this basis."""
        return sandwich_matrix(f, self.A, self.B)

    def residuals(self) -> dict:
        """Max-abs violation of each defining relation."""
        A, B = self.A, self.B
        half_sum = 0.5 * (A * B + B * A)
        return {
            "A^2": (A * A).norm(),
            "B^2": (B * B).norm(),
            "A.B": (half_sum - 0.5).norm(),
            "BA+AB": (self.BA + self.AB - 1).norm(),
            "BA^2": (self.BA * self.BA - self.BA).norm(),
            "AB^2": (self.AB * self.AB - self.AB).norm(),
            "BA*AB": (self.BA * self.AB).norm(),
        }

    def to_json(self) -> dict:
        return {
            "BA": self.BA.to_json(),
            "B": self.B.to_json(),
            "A": self.A.to_json(),
            "AB": self.AB.to_json(),
            "conjugator": self.conjugator.to_json(),
            "direction": self.direction,
        }


def _basis(g: _GNumber, direction: Direction, tol: float) -> RelativeBasis:
    ginv = g.inverse(tol)
    left, right = (g, ginv) if direction == "forward" else (ginv, g)
    A = left * A_GEN * right
    B = left * B_GEN * right
    return RelativeBasis(B * A, B, A, A * B, g, direction)


def regrade(g: _GNumber, tol: float = DEFAULT_TOL) -> RelativeBasis:
    """Carry the canonical null basis along ``x -> g x g**-1``."""
    if g.is_singular(tol):
        raise SingularGNumber(f"{g!r} is singular")
    return _basis(g, "forward", tol)


# -- idempotents ---------------------------------------------------------------------

def make_idempotent(a1: float, a2: float, branch: int = 1, tol: float = DEFAULT_TOL) -> GNum:
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    q = a1 * a1 + a2 * a2 - 1
    if q < -tol:
        raise OffIdempotentVariety(f"a1**2 + a2**2 = {q + 1!r} < 1")
    a3 = branch * math.sqrt(max(q, 0.0))
    return from_std(StdCoords(0.5, a1 / 2, a2 / 2, a3 / 2))


def _idempotent_params(P: _GNumber) -> tuple:
    c = std_coords(P)
    return 2 * c.a1, 2 * c.a2, 2 * c.a3


def _degenerate(a1, a3, tol) -> bool:
    return abs(a3 - a1) <= tol * max(1.0, abs(a1), abs(a3))


# fixed pre-rotations for the measure-zero a3 == a1 locus; no point of that
# locus is degenerate under both
_PRE_ROTATIONS = (exp_vector(E, 1.0), exp_vector(F, 1.0))


def idempotent_to_canonical(P: _GNumber, tol: float = DEFAULT_TOL) -> tuple[_GNumber, RelativeBasis]:
    """Find ``g`` with ``g P g**-1 == ba`` and the induced relative basis.

    The returned basis is backward (``A = g**-1 a g``, ``B = g**-1 b g``) so
    that ``B*A == P``.
    """
    if P.isclose(0 * P, tol) or P.isclose(ONE, tol):
        raise ScalarIdempotent("0 and 1 have no relative null basis")
    if not is_idempotent(P, tol):
        raise NotIdempotent(f"{P!r} is not idempotent")
    a1, a2, a3 = _idempotent_params(P)
    if not _degenerate(a1, a3, tol):
        g = type(P)(1 - a2, a1 - a3, 1 + a2, a3 - a1)
    else:
        for R in _PRE_ROTATIONS:
            Q = R * P * R.inverse()
            b1, b2, b3 = _idempotent_params(Q)
            if not _degenerate(b1, b3, tol):
                g = type(Q)(1 - b2, b1 - b3, 1 + b2, b3 - b1) * R
                break
        else:  # pragma: no cover - excluded by the choice of rotations
            raise SingularGNumber("no pre-rotation reached generic position")
    return g, _basis(g, "backward", tol)


# -- spectra -----------------------------------------------------------------------------

class SpectralKind(str, Enum):
    DIAGONALIZABLE = "Diagonalizable"
    JORDAN = "Jordan"
    SCALAR = "Scalar"


@dataclass(frozen=True)
class SpectralData:
    lambda1: Scalar
    lambda2: Scalar
    kind: SpectralKind
    projectors: Optional[tuple] = None
    nilpart: Optional[_GNumber] = None
    eigenpotents: Optional[RelativeBasis] = None

    def reconstruct(self) -> _GNumber:
        if self.kind is SpectralKind.DIAGONALIZABLE:
            p, m = self.projectors
            return self.lambda1 * p + self.lambda2 * m
        if self.kind is SpectralKind.JORDAN:
            return self.lambda1 + self.nilpart
        return self.lambda1 * ONE

    def to_json(self) -> dict:
        def num(x):
            return [x.real, x.imag] if isinstance(x, complex) else x

        out = {
            "tag": self.kind.value,
            "lambda1": num(self.lambda1),
            "lambda2": num(self.lambda2),
        }
        if self.projectors is not None:
            out["projectors"] = [p.to_json() for p in self.projectors]
        if self.nilpart is not None:
            out["nilpart"] = self.nilpart.to_json()
        if self.eigenpotents is not None:
            out["eigenpotents"] = self.eigenpotents.to_json()
        return out


def char_poly(g: _GNumber) -> tuple[Scalar, Scalar]:
    """``(c1, c0)`` with ``phi(x) = x**2 + c1*x + c0 = (x - alpha0)**2 - v**2``."""
    return -g.trace(), g.det()


def eigenvalues(g: _GNumber) -> tuple[Scalar, Scalar]:
    g = _real(g)
    a0 = g.scalar_part()
    vsq = g.vsq()
    if vsq >= 0:
        s = math.sqrt(vsq)
        return a0 + s, a0 - s
    s = math.sqrt(-vsq)
    return complex(a0, -s), complex(a0, s)


def canonical_form(g: _GNumber, tol: float = DEFAULT_TOL) -> SpectralData:
    g = _real(g)
    cls = classify(g, tol)
    a0 = g.scalar_part()
    v = g.vector_part()
    if cls.tag is Kind.PARABOLIC:
        if v.norm() <= tol * max(1.0, g.norm()):
            return SpectralData(a0, a0, SpectralKind.SCALAR)
        return SpectralData(a0, a0, SpectralKind.JORDAN, nilpart=v)
    if cls.tag is Kind.HYPERBOLIC:
        sigma = math.sqrt(cls.vsq)
        vhat = v / sigma
        lam1, lam2 = a0 + sigma, a0 - sigma
    else:
        sigma = math.sqrt(-cls.vsq)
        vhat = 1j * (v / sigma)
        lam1, lam2 = complex(a0, -sigma), complex(a0, sigma)
    projectors = (0.5 * (1 + vhat), 0.5 * (1 - vhat))
    return SpectralData(lam1, lam2, SpectralKind.DIAGONALIZABLE, projectors=projectors)


def eigenpotents(f: _GNumber, tol: float = DEFAULT_TOL) -> SpectralData:
    """Spectral data plus a relative null basis of eigen-nilpotents.

    Diagonalizable ``f``: ``B*A`` is the first projector, ``f*B == lambda1*B``
    and ``f*A == lambda2*A``, and ``f`` is diagonal in the basis.  Jordan ``f``:
    ``B`` is the nilpotent part and the relative matrix is
    ``[[alpha0, 1], [0, alpha0]]``.
    """
    sd = canonical_form(f, tol)
    if sd.kind is SpectralKind.SCALAR:
        raise ScalarInput(f"{f!r} is a scalar; every element is an eigenpotent")
    if sd.kind is SpectralKind.DIAGONALIZABLE:
        _, basis = idempotent_to_canonical(sd.projectors[0], tol)
        return replace(sd, eigenpotents=basis)
    h = conjugator_for_nilpotent(sd.nilpart, tol)
    g = E * h.inverse(tol)
    return replace(sd, eigenpotents=_basis(g, "backward", tol))


# -- null cone mappings ---------------------------------------------------------------

NULLCONE_AXES = {
    "hyperbolic": E,
    "parabolic": B_GEN,
    "euclidean": F,
}


def nullcone_path(family: str, t: float) -> GNum:
    """The one-parameter g-number used to sweep the null pair for ``family``."""
    axis = NULLCONE_AXES[family]
    if family == "parabolic":
        return ONE + t * axis
    return exp_vector(axis, t)


def nullcone_rows(family: str, ts: Iterable[float]) -> list[tuple]:
    """Rows ``(t, A11, A12, A21, A22, B11, B12, B21, B22)`` of the regraded pair."""
    rows = []
    for t in ts:
        basis = regrade(nullcone_path(family, t))
        rows.append((t, *basis.A.coords, *basis.B.coords))
    return rows
