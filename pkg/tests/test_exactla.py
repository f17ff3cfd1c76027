from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from bmwlk.exact import L, R, RatFunc
from bmwlk.exactla import (
    DimensionMismatch,
    Matrix,
    SingularMatrix,
    Subspace,
    det,
    kernel,
    mat_inverse,
    rank,
    solve_linear,
    subspace_intersect,
    subspace_sum,
)

small = st.integers(-3, 3)


def square(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)


def test_symbolic_det_specializes():
    A = Matrix([[L, R, 1], [1, L * R, R], [2, 1, L]])
    d = det(A)
    sym = sp.Matrix([[3, 2, 1], [1, 6, 2], [2, 1, 3]]).det()
    assert d.numerator.evaluate(3, 2) / d.denominator.evaluate(3, 2) == sym


def test_symbolic_det_with_denominators():
    A = Matrix([[1 / L, 1 / R], [R, L]])
    assert det(A) == 0
    assert det(Matrix([[1 / L, 0], [R, L]])) == 1


def test_inverse_and_singular():
    A = Matrix([[L, 1], [R, 2]])
    assert A @ mat_inverse(A) == Matrix.identity(2)
    with pytest.raises(SingularMatrix):
        mat_inverse(Matrix([[1, 2], [2, 4]]))


def test_kernel_example():
    K = kernel(Matrix([[1, 1], [1, 1]]))
    assert K == Subspace.span([[1, -1]], 2)


def test_solve_examples():
    assert solve_linear(Matrix([[1, 1]]), [R]) == [R, 0]
    assert solve_linear(Matrix([[1, 1], [1, 1]]), [1, 2]) is None
    with pytest.raises(DimensionMismatch):
        solve_linear(Matrix([[1, 1]]), [1, 2])


def test_subspace_operations():
    a = Subspace.span([[1, 0, 0], [0, 1, 0]], 3)
    b = Subspace.span([[0, 1, 0], [0, 0, 1]], 3)
    assert subspace_intersect(a, b) == Subspace.span([[0, 1, 0]], 3)
    assert subspace_sum(a, b) == Subspace.full(3)
    assert a.contains([2, R, 0])
    assert a.contains([Fraction(1, 2), 3, 0])
    assert not a.contains([0, 0, 1])


def test_restrict_requires_invariance():
    W = Subspace.span([[1, 0]], 2)
    with pytest.raises(ValueError):
        W.restrict(Matrix([[0, 1], [1, 0]]))
    assert W.restrict(Matrix([[3, 1], [0, 2]])) == Matrix([[3]])


@given(square(4))
@settings(max_examples=60, deadline=None)
def test_det_matches_sympy(rows):
    assert det(Matrix(rows)) == sp.Matrix(rows).det()


@given(square(3))
@settings(max_examples=40, deadline=None)
def test_symbolic_det_matches_sympy_after_substitution(rows):
    # entries a + b*l*r^-1 with small integers
    A = Matrix([[x + (y % 3) * L / R for x, y in zip(row, reversed(row))] for row in rows])
    d = det(A)
    l, r = sp.symbols("l r")
    S = sp.Matrix([[x + (y % 3) * l / r for x, y in zip(row, reversed(row))] for row in rows])
    want = sp.factor(S.det())
    got = RatFunc(d)
    val = {l: 5, r: 3}
    assert got.numerator.evaluate(5, 3) / got.denominator.evaluate(5, 3) == want.subs(val)


@given(st.lists(st.lists(small, min_size=5, max_size=5), min_size=1, max_size=5))
@settings(max_examples=60, deadline=None)
def test_rank_nullity(rows):
    A = Matrix(rows)
    K = kernel(A)
    assert rank(A) + K.dim == 5
    assert rank(A) == sp.Matrix(rows).rank()
    for v in K.basis:
        assert not any(A.apply(list(v)))


@given(square(3), st.lists(small, min_size=3, max_size=3))
@settings(max_examples=60, deadline=None)
def test_solve_returns_a_solution(rows, rhs):
    A = Matrix(rows)
    x = solve_linear(A, rhs)
    consistent = sp.Matrix(rows).rank() == sp.Matrix(rows).row_join(sp.Matrix(rhs)).rank()
    assert (x is not None) == consistent
    if x is not None:
        assert A.apply(x) == rhs


@given(square(3))
@settings(max_examples=60, deadline=None)
def test_inverse_property(rows):
    A = Matrix(rows)
    if det(A) == 0:
        with pytest.raises(SingularMatrix):
            mat_inverse(A)
    else:
        assert A @ mat_inverse(A) == Matrix.identity(3)
