import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from gnumbers import B_GEN, BA, E, F, FE, ONE, to_matrix
from gnumbers.errors import ComplexInputForG20, SignatureMismatch, ZeroVectorPart
from gnumbers.matrix import conj_transpose
from gnumbers.pauli import (
    E1,
    E2,
    E3,
    F1,
    F2,
    I,
    AlgebraCoords,
    blade_labels,
    cdet,
    cinverse,
    clifford_product,
    cmul,
    hermitian,
    hermitian_adjoint,
    hermitian_spectral,
    interpret,
    interpret_inverse,
    pauli_matrix,
    pauli_vector,
)

from helpers import cgnums, close, gnums

reals = st.floats(-3, 3)


def test_pauli_matrices():
    assert np.array_equal(pauli_matrix(1), [[0, 1], [1, 0]])
    assert np.array_equal(pauli_matrix(2), [[0, -1j], [1j, 0]])
    assert np.array_equal(pauli_matrix(3), [[1, 0], [0, -1]])
    with pytest.raises(ValueError):
        pauli_vector(4)


def test_pauli_relations():
    e = (E1, E2, E3)
    for j in range(3):
        for k in range(3):
            want = 2 * ONE if j == k else 0 * ONE
            assert (e[j] * e[k] + e[k] * e[j]).coords == want.coords
    assert E1 * E2 * E3 == I
    assert (F1 * F1).coords == (-ONE).coords and (F2 * F2).coords == (-ONE).coords


def test_complex_arithmetic_examples():
    assert cmul(E1, E2) == 1j * E3
    assert np.array_equal(to_matrix(cmul(E1, E2)), [[1j, 0], [0, -1j]])
    assert cdet(E3) == -1
    assert cinverse(E1) == E1


def test_hermitian_adjoint_examples():
    assert hermitian_adjoint(E2) == E2
    assert hermitian_adjoint(I) == -I


@given(cgnums())
def test_hermitian_adjoint_is_conjugate_transpose(g):
    assert np.array_equal(to_matrix(hermitian_adjoint(g)), conj_transpose(to_matrix(g)))


@given(cgnums(), cgnums())
def test_adjoint_reverses_products(f, g):
    assert close(hermitian_adjoint(f * g), hermitian_adjoint(g) * hermitian_adjoint(f))


# -- interpretation maps ------------------------------------------------------------------

def test_blade_labels():
    assert blade_labels("G20") == ("1", "e1", "e2", "e12")
    assert blade_labels("G12") == ("1", "e1", "f1", "f2", "e1f1", "e1f2", "f1f2", "e1f1f2")
    assert blade_labels("G30") == ("1", "e1", "e2", "e3", "e12", "e13", "e23", "e123")
    with pytest.raises(SignatureMismatch):
        blade_labels("G03")


def test_interpret_examples():
    x = interpret(ONE + E + FE, "G20")
    assert x.coords == (1, 1, -1, 0)
    x = interpret(E1 * E2 * E3, "G30")
    assert x.as_dict()["e123"] == 1 and sum(map(abs, x.coords)) == 1
    assert interpret(ONE, "G12").coords == (1, 0, 0, 0, 0, 0, 0, 0)
    with pytest.raises(ComplexInputForG20):
        interpret(I, "G20")


def _unit(sig, label):
    return AlgebraCoords(sig, tuple(float(lab == label) for lab in blade_labels(sig)))


def test_cayley_examples():
    assert clifford_product(_unit("G30", "e1"), _unit("G30", "e1")) == _unit("G30", "1")
    assert clifford_product(_unit("G12", "f1"), _unit("G12", "f1")).coords[0] == -1
    assert clifford_product(_unit("G30", "e1"), _unit("G30", "e2")) == _unit("G30", "e12")
    assert clifford_product(_unit("G30", "e2"), _unit("G30", "e1")).as_dict()["e12"] == -1
    with pytest.raises(SignatureMismatch):
        clifford_product(_unit("G30", "e1"), _unit("G12", "e1"))


@given(gnums(), gnums())
def test_g20_multiplicative(f, g):
    lhs = interpret(f * g, "G20")
    rhs = clifford_product(interpret(f, "G20"), interpret(g, "G20"))
    assert close(lhs.coords, rhs.coords)


@settings(max_examples=50)
@given(cgnums(), cgnums(), st.sampled_from(["G12", "G30"]))
def test_complex_multiplicative(f, g, sig):
    lhs = interpret(f * g, sig)
    rhs = clifford_product(interpret(f, sig), interpret(g, sig))
    assert close(lhs.coords, rhs.coords)


@given(cgnums(), st.sampled_from(["G12", "G30"]))
def test_interpret_inverse(g, sig):
    assert close(interpret_inverse(interpret(g, sig)), g)


def test_algebra_coords_json():
    x = interpret(E + 2 * F, "G12")
    assert AlgebraCoords.from_json(x.to_json()) == x


# -- Hermitian spectra ---------------------------------------------------------------------

def test_hermitian_example_e1():
    sd = hermitian_spectral(0, 1, 0, 0)
    assert (sd.lambda1, sd.lambda2) == (1, -1)
    B, A = sd.eigenpotents.B, sd.eigenpotents.A
    assert close(to_matrix(B), 0.5 * np.array([[-1, 1], [-1, 1]]))
    assert close(to_matrix(A), 0.5 * np.array([[-1, -1], [1, 1]]))
    assert close(B * A, 0.5 * (ONE + E1))
    assert close(E1 * B, B) and close(E1 * A, -A)


def test_hermitian_axis_fallback():
    sd = hermitian_spectral(5, 0, 0, 2)
    assert (sd.lambda1, sd.lambda2) == (7, 3)
    assert close(sd.eigenpotents.B * sd.eigenpotents.A, BA)
    assert sd.eigenpotents.B.coords == B_GEN.coords
    sd = hermitian_spectral(5, 0, 0, -2)
    h = hermitian(5, 0, 0, -2)
    assert close(h * sd.eigenpotents.B, 7 * sd.eigenpotents.B)
    with pytest.raises(ZeroVectorPart):
        hermitian_spectral(1, 0, 0, 0)


def test_hermitian_example_diagonal_direction():
    sd = hermitian_spectral(1, 1, 1, 1)
    assert sd.lambda1 == pytest.approx(1 + math.sqrt(3))
    h = hermitian(1, 1, 1, 1)
    assert close(h * sd.eigenpotents.B, sd.lambda1 * sd.eigenpotents.B)


@given(reals, reals, reals, reals)
def test_hermitian_spectral_relations(a0, u1, u2, u3):
    rho = math.sqrt(u1 * u1 + u2 * u2 + u3 * u3)
    assume(rho > 1e-3)
    h = hermitian(a0, u1, u2, u3)
    sd = hermitian_spectral(a0, u1, u2, u3)
    A, B = sd.eigenpotents.A, sd.eigenpotents.B
    uhat = (u1 * E1 + u2 * E2 + u3 * E3) / rho
    assert close(h * A, sd.lambda2 * A, 1e-9)
    assert close(h * B, sd.lambda1 * B, 1e-9)
    assert close(B * A, 0.5 * (1 + uhat), 1e-9)
    # the eigenvalues agree with numpy's Hermitian solver
    assert close(sorted([sd.lambda2, sd.lambda1]), np.linalg.eigvalsh(to_matrix(h)), 1e-9)
