from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lieyam._kernels import _pure
from lieyam.errors import DimMismatchError, PolynomialEntriesError, SingularMatrixError
from lieyam.linalg import LinComb, Matrix, Tensor, exact_product_is_zero
from lieyam.scalars import T


def test_rank_examples():
    assert Matrix.identity(2).rank() == 2
    assert Matrix.zero(2).rank() == 0
    # [[1,2],[2,4]]: row 2 = 2 * row 1, so elimination leaves one pivot
    assert Matrix([[1, 2], [2, 4]]).rank() == 1


def test_nullspace_examples():
    assert Matrix.identity(2).nullspace_dim() == 0
    assert Matrix.zero(3).nullspace_dim() == 3
    m = Matrix([[1, 2], [2, 4]])
    assert m.nullspace_dim() == m.cols - m.rank() == 1
    (v,) = m.nullspace_basis()
    assert all(x == 0 for x in m.apply(v))


def test_invert_examples(rng):
    assert Matrix.identity(3).invert() == Matrix.identity(3)
    assert Matrix.diag([2, Fraction(1, 2)]).invert() == Matrix.diag([Fraction(1, 2), 2])
    for _ in range(20):
        m = Matrix([[Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(3)] for _ in range(3)])
        if m.rank() < 3:
            with pytest.raises(SingularMatrixError):
                m.invert()
            continue
        inv = m.invert()
        assert m * inv == Matrix.identity(3)
        assert inv * m == Matrix.identity(3)


def test_singular_raises():
    with pytest.raises(SingularMatrixError):
        Matrix([[1, 2], [2, 4]]).invert()


def test_polynomial_entries_rejected():
    m = Matrix([[T, 0], [0, 1]])
    for op in ("rank", "nullspace_dim", "invert"):
        with pytest.raises(PolynomialEntriesError):
            getattr(m, op)()
    # constant polynomials are fine
    from lieyam.scalars import Poly

    assert Matrix([[Poly([2]), 0], [0, 1]]).rank() == 2


matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(
            st.lists(st.fractions(max_denominator=6), min_size=c, max_size=c),
            min_size=r, max_size=r,
        )
    )
).map(Matrix)


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_rank_nullity(m):
    assert m.rank() + m.nullspace_dim() == m.cols
    for v in m.nullspace_basis():
        assert all(x == 0 for x in m.apply(v))


def test_matrix_shape_errors():
    with pytest.raises(DimMismatchError):
        Matrix([[1, 2], [3]])
    with pytest.raises(DimMismatchError):
        Matrix.identity(2) * Matrix.identity(3)
    with pytest.raises(DimMismatchError):
        Matrix.identity(2).apply((1, 2, 3))


def test_exact_product_is_zero():
    a = Matrix([[1, 2], [2, 4]])
    b = Matrix([[2], [-1]])
    assert exact_product_is_zero(a, b)
    assert not exact_product_is_zero(a, Matrix([[1], [0]]))
    # huge entries exercise the object-dtype fallback
    big = 2**40
    a2 = a.scale(big)
    assert exact_product_is_zero(a2, b.scale(big))


def test_kernel_backends_agree(rng):
    for _ in range(25):
        rows = rng.randint(1, 8)
        cols = rng.randint(1, 8)
        m = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        assert _pure.rank_int_rows(m) == Matrix(m).rank()
    # entries beyond the int64 safe range force the object path
    m = [[rng.randint(-9, 9) * 10**30 for _ in range(4)] for _ in range(6)]
    from lieyam import _kernels

    assert _kernels.rank_int_rows(m) == _pure.rank_int_rows(m)


def test_tensor_basics():
    t = Tensor.from_nested([[1, 2], [3, 4]])
    assert t.shape == (2, 2)
    assert t.at(1, 0) == 3
    assert t.slice_vector(1) == (3, 4)
    with pytest.raises(DimMismatchError):
        Tensor((2, 2), [1, 2, 3])
    assert Tensor.zeros((2, 3)).is_zero()


def test_lincomb_algebra():
    a = LinComb.unit(0)
    b = LinComb.unit(1)
    c = 2 * a + b - a
    assert c.terms == {0: 1, 1: 1}
    assert (c - c).is_zero()
    assert (0 * c).is_zero()
    assert (0 - c).terms == {0: -1, 1: -1}
