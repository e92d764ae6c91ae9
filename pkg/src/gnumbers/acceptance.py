"""The acceptance checks, shared by the test suite and ``gnum selftest``.

Each check is a pure function returning a :class:`CheckResult`.  Random
samples come from fixed seeds so every run sees the same inputs.  Where a
tolerance applies it is relative: ``|x - y| <= tol * max(1, scale)`` with
``scale`` the magnitude of the values being compared.
"""
from __future__ import annotations

import io
import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import core, matrix, pauli, structure, vectors
from .core import A_GEN, AB, B_GEN, BA, ONE, ZERO, CGNum, GNum
from .structure import EulerTag, Kind, SpectralKind
from .vectors import Vec3

SEED = 20240611


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _close(x, y, tol: float) -> bool:
    """Relative closeness for g-numbers, matrices, tuples or scalars."""
    xs = np.ravel(np.asarray(x.coords if hasattr(x, "coords") else x, dtype=complex))
    ys = np.ravel(np.asarray(y.coords if hasattr(y, "coords") else y, dtype=complex))
    scale = max(1.0, float(np.max(np.abs(xs), initial=0)), float(np.max(np.abs(ys), initial=0)))
    return bool(np.all(np.abs(xs - ys) <= tol * scale))


def _rand_int_gnum(rng, lo=-9, hi=9) -> GNum:
    return GNum(*(int(v) for v in rng.integers(lo, hi + 1, 4)))


def _rand_gnum(rng, width=3.0) -> GNum:
    return GNum(*rng.uniform(-width, width, 4))


def _rand_cgnum(rng, width=3.0) -> CGNum:
    re, im = rng.uniform(-width, width, 4), rng.uniform(-width, width, 4)
    return CGNum(*(complex(r, i) for r, i in zip(re, im)))


def _int_nilpotent(rng) -> GNum:
    # r * [[st, s^2], [-t^2, -st]] squares to zero for any integers r, s, t
    r, s, t = (int(v) for v in rng.integers(-3, 4, 3))
    while r == 0 or (s == 0 and t == 0):
        r, s, t = (int(v) for v in rng.integers(-3, 4, 3))
    return GNum(r * s * t, r * s * s, -r * t * t, -r * s * t)


# -- 1, 2: multiplication table and axioms ---------------------------------------------

# row * column over {a, b, ab, ba}
TABLE = {
    ("a", "a"): ZERO, ("a", "b"): AB, ("a", "ab"): ZERO, ("a", "ba"): A_GEN,
    ("b", "a"): BA, ("b", "b"): ZERO, ("b", "ab"): B_GEN, ("b", "ba"): ZERO,
    ("ab", "a"): A_GEN, ("ab", "b"): ZERO, ("ab", "ab"): AB, ("ab", "ba"): ZERO,
    ("ba", "a"): ZERO, ("ba", "b"): B_GEN, ("ba", "ab"): ZERO, ("ba", "ba"): BA,
}
_NAMED = {"a": A_GEN, "b": B_GEN, "ab": AB, "ba": BA}


def check_table() -> CheckResult:
    bad = [f"{r}*{c}" for (r, c), want in TABLE.items() if _NAMED[r] * _NAMED[c] != want]
    return CheckResult("multiplication table", not bad,
                       "16/16 products exact" if not bad else f"mismatch: {', '.join(bad)}")


def check_axioms() -> CheckResult:
    a, b = A_GEN, B_GEN
    facts = {
        "a^2 = 0": a * a == ZERO,
        "b^2 = 0": b * b == ZERO,
        "ab + ba = 1": a * b + b * a == ONE,
        "(ab)^2 = ab": AB * AB == AB,
        "(ba)^2 = ba": BA * BA == BA,
        "ab ba = 0": AB * BA == ZERO,
        "ba ab = 0": BA * AB == ZERO,
    }
    bad = [k for k, ok in facts.items() if not ok]
    return CheckResult("axioms", not bad, "all exact" if not bad else f"failed: {', '.join(bad)}")


# -- 3, 4: matrices and conjugations ----------------------------------------------------

def check_matrix_homomorphism(n: int = 1000) -> CheckResult:
    rng = np.random.default_rng(SEED + 3)
    bad = 0
    for _ in range(n):
        f, g = _rand_int_gnum(rng), _rand_int_gnum(rng)
        mf, mg = matrix.to_matrix(f), matrix.to_matrix(g)
        ok = (np.array_equal(matrix.to_matrix(f * g), matrix.mat_mul(mf, mg))
              and core.det(f) == matrix.mat_det(mf)
              and core.trace(f) == matrix.mat_trace(mf))
        bad += not ok
    return CheckResult("matrix homomorphism", bad == 0, f"{n - bad}/{n} integer pairs exact")


def check_conjugations(n: int = 1000, tol: float = 1e-12) -> CheckResult:
    rng = np.random.default_rng(SEED + 4)
    rev = lambda g: core.conjugate(g, "reverse")  # noqa: E731
    inv = lambda g: core.conjugate(g, "inversion")  # noqa: E731
    mix = lambda g: core.conjugate(g, "mixed")  # noqa: E731
    bad = 0
    for _ in range(n):
        f, g = _rand_gnum(rng), _rand_gnum(rng)
        fg = f * g
        ok = (_close(rev(fg), rev(g) * rev(f), tol)
              and _close(inv(fg), inv(f) * inv(g), tol)
              and _close(mix(fg), mix(g) * mix(f), tol)
              and all(_close(c(c(f)), f, tol) for c in (rev, inv, mix)))
        bad += not ok
    return CheckResult("conjugation laws", bad == 0, f"{n - bad}/{n} pairs within {tol:g}")


# -- 5: worked examples -------------------------------------------------------------------

def check_worked_examples() -> CheckResult:
    n = matrix.from_matrix([[-2, 1], [-4, 2]])
    h = matrix.from_matrix([[-1, 1], [-2, 1]])
    g = matrix.from_matrix([[0, 1], [1, 2]])
    facts = {
        "conjugator of n is [[0,1],[1,2]]": structure.conjugator_for_nilpotent(n) == g,
        "g a g^-1 = n": g * A_GEN * g.inverse() == n,
        "g b g^-1 = a": g * B_GEN * g.inverse() == A_GEN,
        "h a h^-1 = [[1,-1],[1,-1]]": h * A_GEN * h.inverse() == matrix.from_matrix([[1, -1], [1, -1]]),
        "h b h^-1 = n": h * B_GEN * h.inverse() == n,
        "h vector square = -1": h.vsq() == -1,
    }
    s = A_GEN + B_GEN + 2 * core.skew(A_GEN, B_GEN)
    facts["(a+b+2a^b)^2 = 2"] = s * s == 2 * ONE
    bad = [k for k, ok in facts.items() if not ok]
    detail = ("all exact; (a+b+2a^b)^2 evaluates to 2, not the 3/2 found in the published text"
              if not bad else f"failed: {', '.join(bad)}")
    return CheckResult("worked examples", not bad, detail)


# -- 6: Euler forms ---------------------------------------------------------------------------

def _euler_sample(rng, tag: EulerTag) -> GNum:
    while True:
        if tag is EulerTag.PARABOLIC:
            a0 = rng.uniform(0.2, 3.0) * rng.choice([-1, 1])
            return a0 * ONE + _int_nilpotent(rng) * rng.uniform(0.1, 1.0)
        g = _rand_gnum(rng)
        vsq, d = g.vsq(), core.det(g)
        if abs(d) < 0.05:
            continue
        if tag is EulerTag.EUCLIDEAN and vsq < -0.05:
            return g
        if tag is EulerTag.HYP_SCALAR and vsq > 0.05 and d > 0:
            return g
        if tag is EulerTag.HYP_VECTOR and vsq > 0.05 and d < 0:
            return g


def check_euler(n: int = 300, tol: float = 1e-12) -> CheckResult:
    rng = np.random.default_rng(SEED + 6)
    counts = {}
    for tag in EulerTag:
        ok = 0
        for _ in range(n):
            g = _euler_sample(rng, tag)
            form = structure.euler_form(g)
            ok += form.tag is tag and _close(structure.euler_reconstruct(form), g, tol)
        counts[tag.value] = ok
    passed = all(v == n for v in counts.values())
    return CheckResult("Euler round trip", passed,
                       ", ".join(f"{k} {v}/{n}" for k, v in counts.items()) + f" within {tol:g}")


# -- 7: nilpotents ----------------------------------------------------------------------------

def check_nilpotent_variety(n: int = 300, tol: float = 1e-12) -> CheckResult:
    grid_bad = 0
    for n1, n2, n3, n4 in itertools.product(range(-3, 4), repeat=4):
        g = GNum(n1, n2, n3, n4)
        squares_to_zero = g * g == ZERO
        on_variety = n1 == -n4 and n1 * n1 + n2 * n3 == 0
        grid_bad += squares_to_zero != on_variety
    rng = np.random.default_rng(SEED + 7)
    trip_bad = 0
    for k in range(n):
        if k % 10 == 0:  # the n2 = 0 branch
            params = structure.NilpotentParams(0.0, rng.uniform(-3, 3), 0.0)
        else:
            n2, n4 = rng.uniform(-3, 3), rng.uniform(-3, 3)
            params = structure.NilpotentParams(n2, -n4 * n4 / n2, n4)
        nil = structure.make_nilpotent(params)
        g = structure.conjugator_for_nilpotent(nil)
        ok = _close(g * A_GEN * g.inverse(), nil, tol)
        if params.n2 != 0:
            ok = ok and _close(structure.corollary_conjugator(nil), g, tol)
        trip_bad += not ok
    passed = grid_bad == 0 and trip_bad == 0
    return CheckResult("nilpotent variety", passed,
                       f"grid mismatches {grid_bad}/2401, conjugator round trips {n - trip_bad}/{n}")


# -- 8: spectra -------------------------------------------------------------------------------

def _spectral_sample(rng, kind: Kind) -> GNum:
    while True:
        if kind is Kind.PARABOLIC:
            return int(rng.integers(-5, 6)) * ONE + _int_nilpotent(rng)
        g = _rand_int_gnum(rng)
        if kind is Kind.HYPERBOLIC and g.vsq() > 0:
            return g
        if kind is Kind.EUCLIDEAN and g.vsq() < 0:
            return g


def _spectral_ok(f: GNum, tol: float) -> bool:
    sd = structure.eigenpotents(f)
    if not _close(sd.reconstruct(), f, tol):
        return False
    lam = sorted(structure.eigenvalues(f), key=lambda z: (z.real, z.imag))
    ref = sorted(matrix.mat_eig(matrix.to_matrix(f)), key=lambda z: (z.real, z.imag))
    if not _close(lam, ref, tol):
        return False
    basis = sd.eigenpotents
    if sd.kind is SpectralKind.JORDAN:
        rel = basis.relative_matrix(f)
        return _close(rel, [[sd.lambda1, 1], [0, sd.lambda1]], tol) and _close(basis.B, sd.nilpart, tol)
    p, m = sd.projectors
    return (_close(p * p, p, tol) and _close(m * m, m, tol)
            and _close(p * m, ZERO, tol) and _close(m * p, ZERO, tol)
            and _close(p + m, ONE, tol)
            and _close(basis.B * basis.A, p, tol)
            and _close(f * basis.B, sd.lambda1 * basis.B, tol)
            and _close(f * basis.A, sd.lambda2 * basis.A, tol))


def check_spectral(n: int = 300, tol: float = 1e-12) -> CheckResult:
    rng = np.random.default_rng(SEED + 8)
    counts = {}
    for kind in Kind:
        counts[kind.value] = sum(_spectral_ok(_spectral_sample(rng, kind), tol) for _ in range(n))
    passed = all(v == n for v in counts.values())
    return CheckResult("spectral decomposition", passed,
                       ", ".join(f"{k} {v}/{n}" for k, v in counts.items()) + f" within {tol:g}")


# -- 9, 10: Pauli algebra -----------------------------------------------------------------

PAULI_MATRICES = {
    1: np.array([[0, 1], [1, 0]], dtype=complex),
    2: np.array([[0, -1j], [1j, 0]], dtype=complex),
    3: np.array([[1, 0], [0, -1]], dtype=complex),
}


def check_pauli() -> CheckResult:
    e = {k: pauli.pauli_vector(k) for k in (1, 2, 3)}
    facts = {f"[e{k}]": np.array_equal(pauli.pauli_matrix(k), m) for k, m in PAULI_MATRICES.items()}
    for j, k in itertools.product((1, 2, 3), repeat=2):
        want = 2 * ONE if j == k else ZERO
        facts[f"e{j}e{k}+e{k}e{j}"] = (e[j] * e[k] + e[k] * e[j]).coords == want.coords
    facts["e1e2e3 = i"] = (e[1] * e[2] * e[3]).coords == pauli.I.coords
    bad = [k for k, ok in facts.items() if not ok]
    return CheckResult("Pauli matrices", not bad, "all exact" if not bad else f"failed: {', '.join(bad)}")


def _hermitian_ok(a0, u, tol) -> bool:
    h = pauli.hermitian(a0, *u)
    sd = pauli.hermitian_spectral(a0, *u)
    A, B = sd.eigenpotents.A, sd.eigenpotents.B
    rho = math.sqrt(sum(x * x for x in u))
    uhat = (u[0] * pauli.E1 + u[1] * pauli.E2 + u[2] * pauli.E3) / rho
    return (_close(h * A, sd.lambda2 * A, tol)
            and _close(h * B, sd.lambda1 * B, tol)
            and _close(B * A, 0.5 * (1 + uhat), tol)
            and _close(A * A, ZERO, tol) and _close(B * B, ZERO, tol))


def check_hermitian(n: int = 100, tol: float = 1e-9) -> CheckResult:
    rng = np.random.default_rng(SEED + 10)
    ok = 0
    for _ in range(n):
        a0, u = rng.uniform(-3, 3), rng.uniform(-3, 3, 3)
        ok += _hermitian_ok(a0, tuple(u), tol)
    fallback = _hermitian_ok(0.5, (0.0, 0.0, 2.0), tol) and _hermitian_ok(0.5, (0.0, 0.0, -2.0), tol)
    return CheckResult("Hermitian eigen-nilpotents", ok == n and fallback,
                       f"{ok}/{n} random within {tol:g}; axis fallback at u=(0,0,+-2) "
                       + ("ok" if fallback else "failed"))


# -- 11: vector identities -----------------------------------------------------------------

def check_vectors(n: int = 500) -> CheckResult:
    rng = np.random.default_rng(SEED + 11)
    bad = 0
    for _ in range(n):
        x, y, z = (Vec3(*(float(c) for c in rng.integers(-9, 10, 3))) for _ in range(3))
        det = vectors.triple_scalar(x, y, z)
        rhs = vectors.scalar_prod(x, z) * y
        rhs = vectors.scalar_prod(x, y) * z - rhs
        ok = (det == vectors.scalar_prod(x, vectors.cross_prod(y, z))
              and det == vectors.scalar_prod(vectors.cross_prod(x, y), z)
              and vectors.algebra_cross_prod(x, vectors.algebra_cross_prod(y, z)) == rhs
              and vectors.cross_prod(x, y) == vectors.algebra_cross_prod(x, y)
              and vectors.scalar_prod(x, y) == vectors.algebra_scalar_prod(x, y))
        bad += not ok
    return CheckResult("vector identities", bad == 0, f"{n - bad}/{n} integer triples exact")


# -- 12: isomorphisms --------------------------------------------------------------------

def check_interpret(n: int = 1000, tol: float = 1e-12) -> CheckResult:
    rng = np.random.default_rng(SEED + 12)
    counts = {}
    for sig in pauli.SIGNATURES:
        draw = _rand_gnum if sig == "G20" else _rand_cgnum
        ok = 0
        for _ in range(n):
            f, g = draw(rng), draw(rng)
            lhs = pauli.interpret(f * g, sig)
            rhs = pauli.clifford_product(pauli.interpret(f, sig), pauli.interpret(g, sig))
            ok += _close(lhs.coords, rhs.coords, tol)
        counts[sig] = ok
    return CheckResult("interpretation maps", all(v == n for v in counts.values()),
                       ", ".join(f"{k} {v}/{n}" for k, v in counts.items()) + f" within {tol:g}")


# -- 13: command line ----------------------------------------------------------------------

def run_cli(argv, stdin_text: str = "") -> tuple[int, str, str]:
    from .cli.main import main

    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdin=io.StringIO(stdin_text), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def check_cli() -> CheckResult:
    from ._golden import BATCH_CASE, GOLDEN
    from .cli.main import EXIT_SELFTEST, cmd_selftest

    failures = []
    for argv, code, out, err in GOLDEN:
        got = run_cli(argv)
        if got != (code, out, err):
            failures.append(" ".join(argv))
    stdin_text, code, out, err = BATCH_CASE
    if run_cli(["batch", "-"], stdin_text) != (code, out, err):
        failures.append("batch recovery")
    failing = [CheckResult("synthetic", False, "")]
    if cmd_selftest(io.StringIO(), failing) != EXIT_SELFTEST:
        failures.append("selftest exit code")
    detail = (f"{len(GOLDEN)} golden invocations byte-stable, batch recovery and exit codes ok"
              if not failures else f"mismatch: {'; '.join(failures)}")
    return CheckResult("CLI goldens", not failures, detail)


CHECKS: tuple[Callable[[], CheckResult], ...] = (
    check_table,
    check_axioms,
    check_matrix_homomorphism,
    check_conjugations,
    check_worked_examples,
    check_euler,
    check_nilpotent_variety,
    check_spectral,
    check_pauli,
    check_hermitian,
    check_vectors,
    check_interpret,
    check_cli,
)


def run_all(parallel: bool = False) -> list[CheckResult]:
    """Run every check; the checks are independent so they may run concurrently."""
    def safe(check):
        try:
            return check()
        except Exception as exc:  # a crash is a failure, not an abort
            return CheckResult(check.__name__, False, f"raised {type(exc).__name__}: {exc}")

    if parallel:
        with ThreadPoolExecutor() as pool:
            return list(pool.map(safe, CHECKS))
    return [safe(c) for c in CHECKS]
