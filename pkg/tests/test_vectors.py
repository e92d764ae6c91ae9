import pytest
from hypothesis import given

from gnumbers import E, F, FE, ONE, Vec3, from_std
from gnumbers.errors import NotAVector
from gnumbers.vectors import (
    algebra_cross_prod,
    algebra_scalar_prod,
    cross_prod,
    scalar_prod,
    triple_cross,
    triple_scalar,
)

from helpers import int_vectors

e, fe, f = Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)


def test_embedding():
    assert e.to_gnum() == E and fe.to_gnum() == FE and f.to_gnum() == F
    assert Vec3.from_gnum(from_std((0, 1, 2, 3))) == Vec3(1, 2, 3)
    with pytest.raises(NotAVector):
        Vec3.from_gnum(ONE + E)


def test_scalar_prod_examples():
    assert scalar_prod(f, f) == -1
    assert scalar_prod(e, f) == 0


def test_cross_prod_examples():
    assert cross_prod(e, fe) == Vec3(0, 0, -1)
    assert cross_prod(fe, f) == Vec3(1, 0, 0)
    assert cross_prod(Vec3(1, 2, 3), Vec3(1, 2, 3)) == Vec3(0, 0, 0)


def test_triple_scalar_examples():
    assert triple_scalar(e, fe, f) == 1
    assert triple_scalar(e, e, f) == 0


def test_triple_cross_examples():
    assert triple_cross(e, e, f) == f
    assert triple_cross(f, f, e) == -e
    assert triple_cross(Vec3(1, 2, 3), fe, fe) == Vec3(0, 0, 0)


@given(int_vectors(), int_vectors())
def test_products_match_algebra(x, y):
    assert scalar_prod(x, y) == algebra_scalar_prod(x, y)
    assert cross_prod(x, y) == algebra_cross_prod(x, y)
    assert x.to_gnum() * y.to_gnum() == from_std((scalar_prod(x, y), *cross_prod(x, y)))


@given(int_vectors(), int_vectors(), int_vectors())
def test_triple_identities(x, y, z):
    d = triple_scalar(x, y, z)
    assert d == scalar_prod(x, cross_prod(y, z)) == scalar_prod(cross_prod(x, y), z)
    assert triple_cross(x, y, z) == scalar_prod(x, y) * z - scalar_prod(x, z) * y
    assert algebra_cross_prod(x, algebra_cross_prod(y, z)) == triple_cross(x, y, z)
