"""Text and JSON rendering of evaluation results.

Numbers print with 12 significant digits; anything within ``tol`` of zero
(relative to the magnitude of the value it belongs to) prints as ``0`` so
that rounding noise never reaches the output.  G-number renderings are
themselves valid expressions.
"""
from __future__ import annotations

import json
import numbers

import numpy as np

from ..core import DEFAULT_TOL, _GNumber, std_coords
from ..matrix import mat_to_json, to_matrix
from ..pauli import AlgebraCoords
from ..structure import (
    Classification,
    EulerForm,
    RelativeBasis,
    SpectralData,
    canonical_form,
    euler_form,
)
from ..vectors import Vec3

FORMATS = ("coords", "std", "matrix", "euler", "spectral")

_NULL_LABELS = ("ba", "b", "a", "ab")
_STD_LABELS = ("", "e", "fe", "f")


def fmt_real(x: float, scale: float = 1.0, tol: float = DEFAULT_TOL) -> str:
    if abs(x) <= tol * max(1.0, scale):
        return "0"
    text = format(float(x), ".12g")
    return "0" if text in ("0", "-0") else text


def _complex_parts(x: complex, scale: float, tol: float) -> tuple[str, str]:
    scale = max(scale, abs(x))
    return fmt_real(x.real, scale, tol), fmt_real(x.imag, scale, tol)


def fmt_scalar(x, scale: float = 1.0, tol: float = DEFAULT_TOL) -> str:
    """``x`` or ``x+yi``; pure imaginaries print as ``yi``."""
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, numbers.Real):
        return fmt_real(x, scale, tol)
    re, im = _complex_parts(complex(x), scale, tol)
    if im == "0":
        return re
    if re == "0":
        return f"{im}i"
    if im.startswith("-"):
        return f"{re}{im}i"
    return f"{re}+{im}i"


def _terms(coeffs, labels, scale: float, tol: float) -> str:
    out = []
    for k, (c, label) in enumerate(zip(coeffs, labels)):
        text = fmt_scalar(c, scale, tol)
        if not isinstance(c, numbers.Real) and "0" not in _complex_parts(complex(c), scale, tol):
            # mixed complex coefficient; keep it in one piece
            text, sign = f"({text})", "+"
        elif text.startswith("-"):
            text, sign = text[1:], "-"
        else:
            sign = "+"
        term = f"{text}·{label}" if label else text
        if k == 0:
            out.append(term if sign == "+" else f"-{term}")
        else:
            out.append(f" {sign} {term}")
    return "".join(out)


def fmt_gnum(g: _GNumber, fmt: str = "coords", tol: float = DEFAULT_TOL) -> str:
    scale = g.norm()
    if fmt == "std":
        return _terms(std_coords(g).as_tuple(), _STD_LABELS, scale, tol)
    if fmt == "matrix":
        return fmt_matrix(to_matrix(g), tol)
    if fmt == "euler":
        return fmt_value(euler_form(g, tol), "coords", tol)
    if fmt == "spectral":
        return fmt_value(canonical_form(g, tol), "coords", tol)
    return _terms(g.coords, _NULL_LABELS, scale, tol)


def fmt_matrix(m, tol: float = DEFAULT_TOL) -> str:
    m = np.asarray(m)
    scale = float(np.max(np.abs(m))) if m.size else 1.0
    rows = (",".join(fmt_scalar(x.item(), scale, tol) for x in row) for row in m)
    return "[" + ",".join(f"[{r}]" for r in rows) + "]"


def _inner(fmt: str) -> str:
    # reports embed g-numbers; euler/spectral apply only at top level
    return fmt if fmt in ("coords", "std", "matrix") else "coords"


def fmt_value(value, fmt: str = "coords", tol: float = DEFAULT_TOL) -> str:
    inner = _inner(fmt)
    if isinstance(value, _GNumber):
        return fmt_gnum(value, fmt, tol)
    if isinstance(value, Vec3):
        scale = max(abs(c) for c in value)
        return "vec(" + ", ".join(fmt_real(c, scale, tol) for c in value) + ")"
    if isinstance(value, np.ndarray):
        return fmt_matrix(value, tol)
    if isinstance(value, Classification):
        return (f"{value.tag.value} (vsq = {fmt_real(value.vsq, 1.0, tol)}, "
                f"singular = {'true' if value.singular else 'false'})")
    if isinstance(value, EulerForm):
        return (f"{value.tag.value}: sign = {value.sign}, "
                f"rho = {fmt_real(value.rho, 1.0, tol)}, "
                f"phi = {fmt_real(value.phi, 1.0, tol)}, "
                f"axis = {fmt_gnum(value.axis, inner, tol)}")
    if isinstance(value, SpectralData):
        parts = [value.kind.value,
                 f"lambda1 = {fmt_scalar(value.lambda1, 1.0, tol)}",
                 f"lambda2 = {fmt_scalar(value.lambda2, 1.0, tol)}"]
        if value.projectors is not None:
            parts.append(f"P+ = {fmt_gnum(value.projectors[0], inner, tol)}")
            parts.append(f"P- = {fmt_gnum(value.projectors[1], inner, tol)}")
        if value.nilpart is not None:
            parts.append(f"n = {fmt_gnum(value.nilpart, inner, tol)}")
        if value.eigenpotents is not None:
            basis = value.eigenpotents
            parts.append(f"B = {fmt_gnum(basis.B, inner, tol)}")
            parts.append(f"A = {fmt_gnum(basis.A, inner, tol)}")
        return "; ".join(parts)
    if isinstance(value, RelativeBasis):
        return "; ".join([
            f"BA = {fmt_gnum(value.BA, inner, tol)}",
            f"B = {fmt_gnum(value.B, inner, tol)}",
            f"A = {fmt_gnum(value.A, inner, tol)}",
            f"AB = {fmt_gnum(value.AB, inner, tol)}",
            f"g = {fmt_gnum(value.conjugator, inner, tol)} ({value.direction})",
        ])
    if isinstance(value, AlgebraCoords):
        scale = max(abs(c) for c in value.coords)
        labels = ["" if lab == "1" else lab for lab in value.labels]
        return f"{value.signature}: " + _terms(value.coords, labels, scale, tol)
    if isinstance(value, tuple):
        scale = max((abs(x) for x in value if isinstance(x, numbers.Number)), default=1.0)
        return "(" + ", ".join(fmt_scalar(x, scale, tol) for x in value) + ")"
    if isinstance(value, (numbers.Number, np.bool_)):
        return fmt_scalar(value, 1.0, tol)
    raise TypeError(f"cannot format {type(value).__name__}")


# -- JSON ---------------------------------------------------------------------------------

def to_jsonable(value):
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, np.ndarray):
        return mat_to_json(value)
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, numbers.Real):
        return float(value)
    if isinstance(value, tuple):
        return [to_jsonable(x) for x in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


def fmt_json(value, fmt: str = "coords", tol: float = DEFAULT_TOL) -> str:
    if isinstance(value, _GNumber) and fmt == "euler":
        value = euler_form(value, tol)
    elif isinstance(value, _GNumber) and fmt == "spectral":
        value = canonical_form(value, tol)
    elif isinstance(value, _GNumber) and fmt == "std":
        c = std_coords(value).as_tuple()
        return json.dumps({k: to_jsonable(x) for k, x in zip(("a0", "a1", "a2", "a3"), c)})
    elif isinstance(value, _GNumber) and fmt == "matrix":
        value = to_matrix(value)
    return json.dumps(to_jsonable(value))
