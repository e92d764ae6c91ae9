import math

import numpy as np
import pytest
from hypothesis import given

from gnumbers import A_GEN, B_GEN, BA, E, FE, ONE, ZERO, GNum, det, from_matrix, to_matrix, trace
from gnumbers.core import F
from gnumbers.errors import SingularMatrix
from gnumbers.matrix import (
    extract_matrix_sandwich,
    mat_add,
    mat_det,
    mat_eig,
    mat_exp,
    mat_from_json,
    mat_inv,
    mat_mul,
    mat_to_json,
    mat_trace,
    sandwich_matrix,
)

from helpers import cgnums, close, int_gnums


def test_to_matrix_examples():
    assert np.array_equal(to_matrix(ONE), np.eye(2))
    assert np.array_equal(to_matrix(GNum(0, 1, 1, 2)), [[0, 1], [1, 2]])
    assert np.array_equal(to_matrix(E), [[0, 1], [1, 0]])


def test_from_matrix_examples():
    assert from_matrix([[-2, 1], [-4, 2]]) == GNum(-2, 1, -4, 2)
    assert from_matrix(np.zeros((2, 2))) == ZERO
    assert from_matrix([[1, 0], [0, -1]]) == -FE == E * F
    with pytest.raises(ValueError):
        from_matrix(np.eye(3))


@given(cgnums())
def test_matrix_round_trip(g):
    assert from_matrix(to_matrix(g)) == g


def test_sandwich_examples():
    assert np.array_equal(extract_matrix_sandwich(BA), [[1, 0], [0, 0]])
    assert np.array_equal(extract_matrix_sandwich(GNum(0, 1, 1, 2)), [[0, 1], [1, 2]])


@given(int_gnums())
def test_sandwich_matches_coordinates(g):
    assert np.array_equal(extract_matrix_sandwich(g), to_matrix(g))


def test_sandwich_in_swapped_basis():
    # with the roles of a and b exchanged the matrix is conjugated by [[0,1],[1,0]]
    g = GNum(1, 2, 3, 4)
    assert np.array_equal(sandwich_matrix(g, B_GEN, A_GEN), [[4, 3], [2, 1]])


@given(int_gnums(), int_gnums())
def test_homomorphism(f, g):
    assert np.array_equal(to_matrix(f * g), mat_mul(to_matrix(f), to_matrix(g)))
    assert np.array_equal(to_matrix(f + g), mat_add(to_matrix(f), to_matrix(g)))
    assert det(f) == mat_det(to_matrix(f))
    assert trace(f) == mat_trace(to_matrix(f))


def test_oracle_examples():
    assert np.array_equal(mat_mul([[0, 0], [1, 0]], [[0, 1], [0, 0]]), [[0, 0], [0, 1]])
    assert np.array_equal(mat_inv(np.eye(2)), np.eye(2))
    hi, lo = mat_eig(np.array([[0.0, 1.0], [1.0, 2.0]]))
    assert hi == pytest.approx(1 + math.sqrt(2)) and lo == pytest.approx(1 - math.sqrt(2))
    with pytest.raises(SingularMatrix):
        mat_inv(to_matrix(A_GEN))


@given(int_gnums())
def test_mat_eig_against_numpy(g):
    m = to_matrix(g)
    ours = sorted(mat_eig(m), key=lambda z: (complex(z).real, complex(z).imag))
    ref = sorted(np.linalg.eigvals(m), key=lambda z: (z.real, z.imag))
    assert close(ours, ref, 1e-7)  # numpy's general solver is the looser of the two


def test_mat_exp_of_nilpotent():
    assert np.allclose(mat_exp(to_matrix(B_GEN)), to_matrix(ONE + B_GEN))


def test_json_round_trip():
    m = np.array([[1, 2j], [3, 4]])
    assert np.array_equal(mat_from_json(mat_to_json(m)), m)
    assert mat_to_json(np.eye(2)) == [[1.0, 0.0], [0.0, 1.0]]
