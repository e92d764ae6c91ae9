"""Strategies and comparison helpers shared by the test modules."""
import numpy as np
from hypothesis import strategies as st

from gnumbers import CGNum, GNum

# filled by test_acceptance, echoed in the terminal summary
ACCEPTANCE_LINES: list = []

small_ints = st.integers(min_value=-9, max_value=9)
reals = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)


def int_gnums():
    return st.builds(GNum, small_ints, small_ints, small_ints, small_ints)


def gnums():
    return st.builds(GNum, reals, reals, reals, reals)


def cgnums():
    cplx = st.builds(complex, reals, reals)
    return st.builds(CGNum, cplx, cplx, cplx, cplx)


def int_vectors():
    from gnumbers import Vec3

    return st.builds(Vec3, small_ints.map(float), small_ints.map(float), small_ints.map(float))


def close(x, y, tol=1e-12):
    """Relative comparison: ``|x - y| <= tol * max(1, |x|, |y|)`` entrywise."""
    xs = np.ravel(np.asarray(getattr(x, "coords", x), dtype=complex))
    ys = np.ravel(np.asarray(getattr(y, "coords", y), dtype=complex))
    scale = max(1.0, np.max(np.abs(xs), initial=0), np.max(np.abs(ys), initial=0))
    return bool(np.all(np.abs(xs - ys) <= tol * scale))
