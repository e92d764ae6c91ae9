"""The g-number <-> 2x2 matrix correspondence and an independent matrix oracle.

``Mat2`` is a ``(2, 2)`` numpy array, real or complex.  The ``mat_*``
functions are deliberately written against numpy (and scipy for the matrix
exponential) only, never against :mod:`gnumbers.core`, so that comparing the
two is a genuine differential test.
"""
from __future__ import annotations

import cmath
import math

import numpy as np
import scipy.linalg

from .core import A_GEN, B_GEN, CGNum, GNum, _GNumber
from .errors import SingularMatrix

Mat2 = np.ndarray


def to_matrix(g: _GNumber) -> Mat2:
    dtype = complex if isinstance(g, CGNum) else float
    return np.array([[g.g11, g.g12], [g.g21, g.g22]], dtype=dtype)


def from_matrix(m) -> _GNumber:
    m = np.asarray(m)
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
    cls = CGNum if np.iscomplexobj(m) else GNum
    return cls(m[0, 0], m[0, 1], m[1, 0], m[1, 1])


def _entry(x: _GNumber):
    # each sandwich is a scalar multiple of ONE; read it off the ba slot
    return x.g11


def sandwich_matrix(f: _GNumber, A: _GNumber = A_GEN, B: _GNumber = B_GEN) -> Mat2:
    """Coordinates of ``f`` relative to the null pair ``(A, B)``.

    Entry ``(j, k)`` is the sum of two sandwiches, e.g. the top-left entry is
    ``BA f BA + A f B``; with the canonical pair this reproduces ``[f]``.
    Works for any relative null basis, which is how relative matrices are
    read off after a regrading.
    """
    BA_, AB_ = B * A, A * B
    m11 = BA_ * f * BA_ + A * f * B
    m12 = BA_ * f * A + A * f * AB_
    m21 = B * f * BA_ + AB_ * f * B
    m22 = B * f * A + AB_ * f * AB_
    entries = [_entry(m11), _entry(m12), _entry(m21), _entry(m22)]
    dtype = complex if any(isinstance(x, CGNum) for x in (f, A, B)) else float
    return np.array(entries, dtype=dtype).reshape(2, 2)


def extract_matrix_sandwich(f: _GNumber) -> Mat2:
    return sandwich_matrix(f, A_GEN, B_GEN)


# -- oracle ------------------------------------------------------------------

def mat_mul(m: Mat2, n: Mat2) -> Mat2:
    return np.asarray(m) @ np.asarray(n)


def mat_add(m: Mat2, n: Mat2) -> Mat2:
    return np.asarray(m) + np.asarray(n)


def mat_det(m: Mat2):
    m = np.asarray(m)
    return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]


def mat_trace(m: Mat2):
    m = np.asarray(m)
    return m[0, 0] + m[1, 1]


def mat_inv(m: Mat2, tol: float = 1e-9) -> Mat2:
    m = np.asarray(m)
    d = mat_det(m)
    if abs(d) <= tol * max(1.0, float(np.max(np.abs(m))) ** 2):
        raise SingularMatrix(f"det = {d!r}")
    adj = np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]])
    return adj / d


def mat_eig(m: Mat2) -> tuple:
    """Roots of ``x**2 - tr*x + det`` by the quadratic formula.

    Real roots come larger first; a complex pair comes ``(+i, -i)`` ordered
    by imaginary part.
    """
    tr = mat_trace(m)
    d = mat_det(m)
    half = tr / 2
    disc = half * half - d
    if np.iscomplexobj(disc) or disc < 0:
        root = cmath.sqrt(disc)
        return (half + root, half - root)
    root = math.sqrt(disc)
    return (half + root, half - root)


def mat_exp(m: Mat2) -> Mat2:
    return scipy.linalg.expm(np.asarray(m))


def conj_transpose(m: Mat2) -> Mat2:
    return np.conj(np.asarray(m)).T


# -- serialization ------------------------------------------------------------

def mat_to_json(m: Mat2) -> list:
    m = np.asarray(m)
    if np.iscomplexobj(m):
        return [[[complex(x).real, complex(x).imag] for x in row] for row in m]
    return [[float(x) for x in row] for row in m]


def mat_from_json(data: list) -> Mat2:
    if isinstance(data[0][0], list):
        return np.array([[complex(x[0], x[1]) for x in row] for row in data])
    return np.array(data, dtype=float)
