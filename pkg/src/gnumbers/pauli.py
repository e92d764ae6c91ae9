"""Complex g-numbers, the Pauli algebra and the Clifford interpretations.

Complex g-numbers carry three real geometric readings:

* ``G20`` (real input only): ``e -> e1``, ``ef -> e2``, ``f -> e12``
* ``G12``: ``e1 = e``, ``f1 = f``, ``f2 = i*e*f``
* ``G30``: ``e1 = e``, ``e2 = i*f``, ``e3 = e*f``

In ``G12`` and ``G30`` the imaginary unit becomes the pseudoscalar.  The
coordinate maps below are derived from these generator images rather than
written out by hand, and the Cayley tables are built from the signature
alone, so multiplicativity of :func:`interpret` is a real check.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from .core import (
    A_GEN,
    B_GEN,
    DEFAULT_TOL,
    E,
    F,
    ONE,
    CGNum,
    GNum,
    _GNumber,
    add,
    conjugate,
    det,
    inverse,
    mul,
    trace,
)
from .errors import ComplexInputForG20, SignatureMismatch, ZeroVectorPart
from .matrix import Mat2, to_matrix
from .structure import RelativeBasis, SpectralData, SpectralKind


def _c(g: _GNumber) -> CGNum:
    return g if isinstance(g, CGNum) else g.to_complex()


# -- complex arithmetic ----------------------------------------------------------

def cmul(f, g) -> CGNum:
    return mul(_c(f), _c(g))


def cadd(f, g) -> CGNum:
    return add(_c(f), _c(g))


def cconjugate(g, kind) -> CGNum:
    return conjugate(_c(g), kind)


def ctrace(g) -> complex:
    return trace(_c(g))


def cdet(g) -> complex:
    return det(_c(g))


def cinverse(g, tol: float = DEFAULT_TOL) -> CGNum:
    return inverse(_c(g), tol)


def hermitian_adjoint(g: _GNumber) -> CGNum:
    """Conjugate the coefficients and transpose: ``[adj g] == [g]^H``."""
    g = _c(g)
    return CGNum(
        g.g11.conjugate(), g.g21.conjugate(), g.g12.conjugate(), g.g22.conjugate()
    )


# -- Pauli vectors -----------------------------------------------------------------

E1 = _c(A_GEN + B_GEN)
E2 = 1j * (A_GEN - B_GEN)
E3 = _c(GNum(1, 0, 0, -1))
I = CGNum(1j, 0, 0, 1j)
F1 = _c(F)
F2 = 1j * (E * F)

_PAULI = {1: E1, 2: E2, 3: E3}


def pauli_vector(k: int) -> CGNum:
    try:
        return _PAULI[k]
    except KeyError:
        raise ValueError(f"Pauli index must be 1, 2 or 3, got {k!r}") from None


def pauli_matrix(k: int) -> Mat2:
    return to_matrix(pauli_vector(k))


# -- signatures and Cayley tables -----------------------------------------------------

# generator name, square, image as a g-number
_GENERATORS = {
    "G20": (("e1", 1, E), ("e2", 1, E * F)),
    "G12": (("e1", 1, E), ("f1", -1, F), ("f2", -1, 1j * (E * F))),
    "G30": (("e1", 1, E), ("e2", 1, 1j * F), ("e3", 1, E * F)),
}

SIGNATURES = tuple(_GENERATORS)


def _blade_label(names: list[str]) -> str:
    if not names:
        return "1"
    if all(n.startswith("e") for n in names):
        return "e" + "".join(n[1:] for n in names)
    return "".join(names)


@lru_cache(maxsize=None)
def _layout(signature: str):
    """Blade masks in grade order, their labels, and the Cayley table."""
    try:
        gens = _GENERATORS[signature]
    except KeyError:
        raise SignatureMismatch(f"unknown signature {signature!r}") from None
    n = len(gens)
    masks = sorted(range(1 << n), key=lambda m: (bin(m).count("1"), [i for i in range(n) if m >> i & 1]))
    labels = tuple(_blade_label([gens[i][0] for i in range(n) if m >> i & 1]) for m in masks)
    index = {m: k for k, m in enumerate(masks)}
    squares = [g[1] for g in gens]

    table = np.zeros((len(masks), len(masks), 2), dtype=int)
    for (j, x), (k, y) in product(enumerate(masks), repeat=2):
        sign = 1
        # move each generator of y leftwards past the higher generators of x
        for i in range(n):
            if y >> i & 1:
                if bin(x >> (i + 1)).count("1") % 2:
                    sign = -sign
                if x >> i & 1:
                    sign *= squares[i]
        table[j, k] = (index[x ^ y], sign)
    return masks, labels, table


@lru_cache(maxsize=None)
def _images(signature: str):
    """Blade images as g-numbers plus the real-coordinate change of basis."""
    masks, labels, _ = _layout(signature)
    gens = _GENERATORS[signature]
    images = []
    for m in masks:
        x = CGNum(1, 0, 0, 1)
        for i, g in enumerate(gens):
            if m >> i & 1:
                x = x * g[2]
        images.append(x)
    if signature == "G20":
        cols = [[x.real_part().coords[k] for k in range(4)] for x in images]
    else:
        cols = [[*(c.real for c in x.coords), *(c.imag for c in x.coords)] for x in images]
    basis = np.array(cols, dtype=float).T
    return tuple(images), basis, np.linalg.inv(basis)


@dataclass(frozen=True)
class AlgebraCoords:
    signature: str
    coords: tuple

    def __post_init__(self):
        labels = blade_labels(self.signature)
        if len(self.coords) != len(labels):
            raise ValueError(f"{self.signature} needs {len(labels)} coordinates")
        object.__setattr__(self, "coords", tuple(float(c) for c in self.coords))

    @property
    def labels(self) -> tuple:
        return blade_labels(self.signature)

    def as_dict(self) -> dict:
        return dict(zip(self.labels, self.coords))

    def to_json(self) -> dict:
        return {"signature": self.signature, "coords": self.as_dict()}

    @classmethod
    def from_json(cls, data: dict) -> "AlgebraCoords":
        sig = data["signature"]
        return cls(sig, tuple(data["coords"][k] for k in blade_labels(sig)))

    def isclose(self, other: "AlgebraCoords", tol: float = 1e-12) -> bool:
        return self.signature == other.signature and all(
            abs(x - y) <= tol for x, y in zip(self.coords, other.coords)
        )


def blade_labels(signature: str) -> tuple:
    return _layout(signature)[1]


def clifford_product(x: AlgebraCoords, y: AlgebraCoords) -> AlgebraCoords:
    if x.signature != y.signature:
        raise SignatureMismatch(f"{x.signature} * {y.signature}")
    _, labels, table = _layout(x.signature)
    out = [0.0] * len(labels)
    for j, xj in enumerate(x.coords):
        if xj == 0:
            continue
        for k, yk in enumerate(y.coords):
            if yk == 0:
                continue
            idx, sign = table[j, k]
            out[idx] += sign * xj * yk
    return AlgebraCoords(x.signature, tuple(out))


def interpret(g: _GNumber, target: str) -> AlgebraCoords:
    """Coordinates of ``g`` over the blades of ``target``."""
    if target not in _GENERATORS:
        raise SignatureMismatch(f"unknown signature {target!r}")
    _, _, inv = _images(target)
    if target == "G20":
        if isinstance(g, CGNum):
            if not g.is_real():
                raise ComplexInputForG20(f"{g!r} has imaginary coordinates")
            g = g.real_part()
        vec = np.array(g.coords, dtype=float)
    else:
        g = _c(g)
        vec = np.array([*(c.real for c in g.coords), *(c.imag for c in g.coords)])
    return AlgebraCoords(target, tuple(inv @ vec))


def interpret_inverse(x: AlgebraCoords) -> _GNumber:
    images, _, _ = _images(x.signature)
    total = CGNum()
    for c, img in zip(x.coords, images):
        total = total + c * img
    return total.real_part() if x.signature == "G20" else total


# -- Hermitian spectral construction --------------------------------------------------

def hermitian(a0: float, u1: float, u2: float, u3: float) -> CGNum:
    return a0 * ONE + u1 * E1 + u2 * E2 + u3 * E3


def hermitian_spectral(a0: float, u1: float, u2: float, u3: float,
                       tol: float = DEFAULT_TOL) -> SpectralData:
    """Eigenvalues and eigen-nilpotents of ``h = a0 + u1 e1 + u2 e2 + u3 e3``.

    The eigenvalues are ``a0 +- rho`` with ``rho = |u|``.  ``A`` and ``B``
    use the closed forms that come from conjugating by
    ``[[z/(rho-u3), 1], [-z/(rho+u3), 1]]`` with ``z = u1 + i u2``; when ``u``
    lies along the ``e3`` axis those divide by zero and the canonical pair
    is used directly.
    """
    rho = math.sqrt(u1 * u1 + u2 * u2 + u3 * u3)
    if rho == 0.0:
        raise ZeroVectorPart("h has no vector part")
    uhat = (u1 * E1 + u2 * E2 + u3 * E3) / rho
    projectors = (0.5 * (1 + uhat), 0.5 * (1 - uhat))
    if abs(rho - abs(u3)) <= tol * rho:
        if u3 > 0:
            B, A, g = _c(B_GEN), _c(A_GEN), _c(ONE)
        else:
            B, A, g = _c(A_GEN), _c(B_GEN), _c(E)
    else:
        z = complex(u1, u2)
        zc = z.conjugate()
        g = CGNum(z / (rho - u3), 1, -z / (rho + u3), 1)
        A = ((rho + u3) / (2 * rho)) * CGNum(-1, -zc / (rho + u3), z / (rho - u3), 1)
        B = ((rho - u3) / (2 * rho)) * CGNum(-1, zc / (rho - u3), -z / (rho + u3), 1)
    basis = RelativeBasis(B * A, B, A, A * B, g, "backward")
    return SpectralData(a0 + rho, a0 - rho, SpectralKind.DIAGONALIZABLE,
                        projectors=projectors, eigenpotents=basis)
