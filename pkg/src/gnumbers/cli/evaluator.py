"""Tree-walking evaluator for parsed expressions."""
from __future__ import annotations

import math
import numbers
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from .. import core, matrix, pauli, structure, vectors
from ..core import DEFAULT_TOL, _GNumber
from ..errors import GNumberError
from ..vectors import Vec3
from .parser import BinOp, Call, Let, Name, Neg, Num, Pow, unparse


class DomainError(Exception):
    """A module error (or a type error) raised while evaluating ``expr``."""

    def __init__(self, kind: str, expr, message: str):
        self.kind = kind
        self.expr = expr
        self.message = message
        where = f" in {unparse(expr)}" if expr is not None else ""
        super().__init__(f"{kind}{where}: {message}")


CONSTANTS: dict[str, Any] = {
    "a": core.A_GEN,
    "b": core.B_GEN,
    "ab": core.AB,
    "ba": core.BA,
    "e": core.E,
    "f": core.F,
    "fe": core.FE,
    "e1": core.E,
    "e2": pauli.E2,
    "e3": core.E * core.F,
    "f1": core.F,
    "f2": pauli.F2,
    "i": 1j,
    "pi": math.pi,
}

TARGETS = pauli.SIGNATURES

# name -> (arity, fn(evaluator, *args)); filled in at the bottom of the module
FUNCTIONS: dict[str, tuple[int, Callable]] = {}


@dataclass(frozen=True)
class EvalResult:
    kind: str
    value: Any
    binding: str | None = None


def _kind(value) -> str:
    if isinstance(value, core.CGNum):
        return "cgnum"
    if isinstance(value, core.GNum):
        return "gnum"
    if isinstance(value, Vec3):
        return "vec3"
    if isinstance(value, (numbers.Number, np.bool_)):
        return "scalar"
    if isinstance(value, np.ndarray):
        return "matrix"
    return "report"


class _TypeMismatch(Exception):
    pass


def _gnum(x) -> _GNumber:
    if isinstance(x, _GNumber):
        return x
    if isinstance(x, Vec3):
        return x.to_gnum()
    if isinstance(x, numbers.Number):
        return core.scalar(x)
    raise _TypeMismatch(f"expected a g-number, got {type(x).__name__}")


def _real(x) -> float:
    if isinstance(x, numbers.Real):
        return float(x)
    if isinstance(x, complex) and x.imag == 0:
        return x.real
    raise _TypeMismatch(f"expected a real number, got {x!r}")


def _int(x) -> int:
    r = _real(x)
    if r != int(r):
        raise _TypeMismatch(f"expected an integer, got {x!r}")
    return int(r)


def _vec(x, tol) -> Vec3:
    if isinstance(x, Vec3):
        return x
    return Vec3.from_gnum(_gnum(x), tol)


@dataclass
class Evaluator:
    tol: float = DEFAULT_TOL
    env: dict = field(default_factory=dict)

    # -- statements ------------------------------------------------------------

    def run(self, node) -> EvalResult:
        if isinstance(node, Let):
            if node.name in CONSTANTS or node.name in FUNCTIONS or node.name in TARGETS:
                raise DomainError("NameCollision", None, f"cannot rebind {node.name!r}")
            value = self.eval(node.expr)
            self.env[node.name] = value
            return EvalResult(_kind(value), value, node.name)
        value = self.eval(node)
        return EvalResult(_kind(value), value)

    def eval(self, node):
        if isinstance(node, Num):
            return node.value
        if isinstance(node, Name):
            if node.id in self.env:
                return self.env[node.id]
            if node.id in CONSTANTS:
                return CONSTANTS[node.id]
            raise DomainError("UnknownName", node, f"{node.id!r} is not defined")
        if isinstance(node, Neg):
            return self._guard(node, lambda v: -v, self.eval(node.operand))
        if isinstance(node, BinOp):
            left, right = self.eval(node.left), self.eval(node.right)
            return self._guard(node, self._binop, node.op, left, right)
        if isinstance(node, Pow):
            base = self.eval(node.base)
            return self._guard(node, self._pow, base, node.exponent)
        if isinstance(node, Call):
            return self._call(node)
        raise TypeError(f"not an expression node: {node!r}")

    def _guard(self, node, fn: Callable, *args):
        try:
            return fn(*args)
        except GNumberError as exc:
            raise DomainError(type(exc).__name__, node, str(exc)) from exc
        except (_TypeMismatch, TypeError, ValueError, ZeroDivisionError) as exc:
            raise DomainError("TypeError", node, str(exc)) from exc

    def _binop(self, op, x, y):
        if isinstance(x, Vec3) and isinstance(y, Vec3) and op in "+-":
            return x + y if op == "+" else x - y
        if op in "*/" and isinstance(y, numbers.Number) and isinstance(x, Vec3):
            return x * y if op == "*" else x * (1 / y)
        if op == "*" and isinstance(x, numbers.Number) and isinstance(y, Vec3):
            return y * x
        if isinstance(x, numbers.Number) and isinstance(y, numbers.Number):
            return {"+": x + y, "-": x - y, "*": x * y}[op] if op != "/" else x / y
        if op == "/" and isinstance(y, numbers.Number):
            return _gnum(x) / y
        x, y = _gnum(x), _gnum(y)
        if op == "+":
            return x + y
        if op == "-":
            return x - y
        if op == "*":
            return x * y
        return x * core.inverse(y, self.tol)

    def _pow(self, base, n: int):
        if isinstance(base, numbers.Number):
            return base ** n
        g = _gnum(base)
        if n < 0:
            g, n = core.inverse(g, self.tol), -n
        return g ** n

    # -- calls -------------------------------------------------------------------

    def _call(self, node: Call):
        name = node.func
        if name not in FUNCTIONS:
            raise DomainError("UnknownFunction", node, f"no function named {name!r}")
        arity, fn = FUNCTIONS[name]
        if len(node.args) != arity:
            raise DomainError("TypeError", node, f"{name} takes {arity} argument(s), got {len(node.args)}")
        if name == "interpret":
            target = node.args[1]
            if not (isinstance(target, Name) and target.id in TARGETS):
                raise DomainError("TypeError", node, f"target must be one of {', '.join(TARGETS)}")
            args = [self.eval(node.args[0]), target.id]
        else:
            args = [self.eval(a) for a in node.args]
        return self._guard(node, fn, self, *args)


def _register(name: str, arity: int):
    def deco(fn):
        FUNCTIONS[name] = (arity, fn)
        return fn
    return deco


def _unary(name: str, op: Callable):
    FUNCTIONS[name] = (1, lambda ev, x: op(ev, _gnum(x)))


def _binary(name: str, op: Callable):
    FUNCTIONS[name] = (2, lambda ev, x, y: op(ev, _gnum(x), _gnum(y)))


_unary("rev", lambda ev, g: core.conjugate(g, "reverse"))
_unary("inv", lambda ev, g: core.conjugate(g, "inversion"))
_unary("star", lambda ev, g: core.conjugate(g, "mixed"))
_unary("odd", lambda ev, g: core.parts(g)[0])
_unary("even", lambda ev, g: core.parts(g)[1])
_unary("tr", lambda ev, g: core.trace(g))
_unary("det", lambda ev, g: core.det(g))
_unary("inverse", lambda ev, g: core.inverse(g, ev.tol))
_unary("scalar", lambda ev, g: g.scalar_part())
_unary("vector", lambda ev, g: g.vector_part())
_unary("classify", lambda ev, g: structure.classify(g, ev.tol))
_unary("euler", lambda ev, g: structure.euler_form(g, ev.tol))
_unary("eig", lambda ev, g: structure.eigenvalues(g))
_unary("charpoly", lambda ev, g: structure.char_poly(g))
_unary("spectral", lambda ev, g: structure.canonical_form(g, ev.tol))
_unary("eigenpotents", lambda ev, g: structure.eigenpotents(g, ev.tol))
_unary("matrix", lambda ev, g: matrix.to_matrix(g))
_unary("sandwich", lambda ev, g: matrix.extract_matrix_sandwich(g))
_unary("regrade", lambda ev, g: structure.regrade(g, ev.tol))
_unary("canon", lambda ev, g: structure.idempotent_to_canonical(g, ev.tol)[1])
_unary("conjugator", lambda ev, g: structure.conjugator_for_nilpotent(g, ev.tol))
_unary("isnil", lambda ev, g: structure.is_nilpotent(g, ev.tol))
_unary("isidem", lambda ev, g: structure.is_idempotent(g, ev.tol))
_unary("adj", lambda ev, g: pauli.hermitian_adjoint(g))

_binary("sym", lambda ev, f, g: core.sym(f, g))
_binary("skew", lambda ev, f, g: core.skew(f, g))
_binary("wedge", lambda ev, f, g: core.skew(f, g))
_binary("dot", lambda ev, f, g: core.dot(f, g))
_binary("conj", lambda ev, g, x: g * x * core.inverse(g, ev.tol))


@_register("rebuild", 1)
def _rebuild(ev, form):
    if not isinstance(form, structure.EulerForm):
        raise _TypeMismatch("rebuild expects the result of euler(...)")
    return structure.euler_reconstruct(form)


@_register("exp", 2)
def _exp(ev, v, t):
    return structure.exp_vector(_gnum(v), t, ev.tol)


@_register("nilpotent", 3)
def _nilpotent(ev, n2, n3, n4):
    return structure.make_nilpotent(structure.NilpotentParams(_real(n2), _real(n3), _real(n4)), ev.tol)


@_register("idempotent", 3)
def _idempotent(ev, a1, a2, branch):
    return structure.make_idempotent(_real(a1), _real(a2), _int(branch), ev.tol)


@_register("interpret", 2)
def _interpret(ev, g, target):
    return pauli.interpret(_gnum(g), target)


@_register("uninterpret", 1)
def _uninterpret(ev, x):
    if not isinstance(x, pauli.AlgebraCoords):
        raise _TypeMismatch("uninterpret expects the result of interpret(...)")
    return pauli.interpret_inverse(x)


@_register("clifford", 2)
def _clifford(ev, x, y):
    if not (isinstance(x, pauli.AlgebraCoords) and isinstance(y, pauli.AlgebraCoords)):
        raise _TypeMismatch("clifford expects two interpret(...) results")
    return pauli.clifford_product(x, y)


@_register("pauli", 1)
def _pauli(ev, k):
    return pauli.pauli_vector(_int(k))


@_register("hermitian", 4)
def _hermitian(ev, a0, u1, u2, u3):
    return pauli.hermitian_spectral(_real(a0), _real(u1), _real(u2), _real(u3), ev.tol)


@_register("vec", 3)
def _vec3(ev, x1, x2, x3):
    return Vec3(_real(x1), _real(x2), _real(x3))


@_register("sdot", 2)
def _sdot(ev, x, y):
    return vectors.scalar_prod(_vec(x, ev.tol), _vec(y, ev.tol))


@_register("cross", 2)
def _cross(ev, x, y):
    return vectors.cross_prod(_vec(x, ev.tol), _vec(y, ev.tol))


@_register("triple", 3)
def _triple(ev, x, y, z):
    return vectors.triple_scalar(_vec(x, ev.tol), _vec(y, ev.tol), _vec(z, ev.tol))


@_register("triplecross", 3)
def _triplecross(ev, x, y, z):
    return vectors.triple_cross(_vec(x, ev.tol), _vec(y, ev.tol), _vec(z, ev.tol), ev.tol)
