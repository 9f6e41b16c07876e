from fractions import Fraction
from itertools import product

import pytest

from lieyam import LieYamagutiAlgebra, Matrix, deformed_algebra, deformed_brackets
from lieyam.algebra import is_homomorphism, is_nijenhuis, nijenhuis_deformation_tensors
from lieyam.errors import AntisymmetryError, DimMismatchError
from lieyam.search import catalog_algebra


def e(n, i):
    return tuple(1 if j == i else 0 for j in range(n))


def test_a2_bracket_values(a2):
    e1, e2 = e(2, 0), e(2, 1)
    assert a2.bracket(e1, e2) == (1, 0)
    assert a2.bracket(e1, e1) == (0, 0)
    assert a2.bracket(e2, e1) == (-1, 0)


def test_a2_triple_values(a2):
    e1, e2 = e(2, 0), e(2, 1)
    assert a2.triple(e1, e2, e2) == (1, 0)
    assert a2.triple(e2, e1, e2) == (-1, 0)
    assert a2.triple(e1, e2, e1) == (0, 0)


def test_bracket_dim_mismatch(a2):
    with pytest.raises(DimMismatchError):
        a2.bracket((1, 0, 0), (0, 1))
    with pytest.raises(DimMismatchError):
        a2.triple((1,), (0, 1), (0, 1))


def test_antisymmetry_validated():
    z = (0, 0)
    with pytest.raises(AntisymmetryError):
        LieYamagutiAlgebra(2, [[z, (1, 0)], [(1, 0), z]], [[[z, z]] * 2] * 2)
    with pytest.raises(AntisymmetryError):
        # nonzero diagonal bracket
        LieYamagutiAlgebra(2, [[(1, 0), z], [z, z]], [[[z, z]] * 2] * 2)


def test_axioms_pass_on_fixtures(a2, so3, sl2):
    for alg in (a2, so3, sl2, LieYamagutiAlgebra.abelian(4), catalog_algebra("heis3"),
                catalog_algebra("so3lts"), catalog_algebra("a2lts")):
        rep = alg.check_axioms()
        assert rep.passed, rep.to_text()


def test_axioms_fail_with_witness(a2):
    # ternary constant <<e1,e2,e2>> changed from e1 to e2
    z = (0, 0)
    bad = LieYamagutiAlgebra(
        2,
        [[z, (1, 0)], [(-1, 0), z]],
        [[[z, z], [z, (0, 1)]], [[z, (0, -1)], [z, z]]],
    )
    rep = bad.check_axioms()
    assert not rep.passed
    assert not rep.check("LY3").ok
    wit = rep.check("LY3").witness
    assert wit is not None and "tuple" in wit and "residual" in wit


def test_homomorphism_examples(a2):
    ident = Matrix.identity(2)
    zero = Matrix.zero(2)
    swap = Matrix([[0, 1], [1, 0]])
    assert is_homomorphism(ident, a2, a2)
    assert is_homomorphism(zero, a2, a2)
    assert not is_homomorphism(swap, a2, a2)
    with pytest.raises(DimMismatchError):
        is_homomorphism(Matrix.zero(3), a2, a2)


def test_deformed_brackets_trivial_cases(a2):
    b0, t0 = deformed_brackets(a2, Matrix.zero(2))
    assert b0.is_zero() and t0.is_zero()
    b1, t1 = deformed_brackets(a2, Matrix.identity(2))
    assert b1 == a2.binary_tensor
    assert t1 == a2.ternary_tensor


def test_deformed_brackets_against_term_expansion(a2):
    """Brute-force expansion of the three defining sums, written separately."""
    nmap = Matrix([[0, 2], [0, 0]])
    n = a2.dim
    ncol = [nmap.col(i) for i in range(n)]
    bas = [a2.basis_vector(i) for i in range(n)]
    got_b, got_t = deformed_brackets(a2, nmap)
    for i, j in product(range(n), repeat=2):
        want = tuple(
            p + q - r
            for p, q, r in zip(
                a2.bracket(ncol[i], bas[j]), a2.bracket(bas[i], ncol[j]),
                nmap.apply(a2.bracket(bas[i], bas[j])),
            )
        )
        assert got_b.slice_vector(i, j) == want
    for i, j, k in product(range(n), repeat=3):
        aux = tuple(
            p + q + r - s
            for p, q, r, s in zip(
                a2.triple(ncol[i], bas[j], bas[k]),
                a2.triple(bas[i], ncol[j], bas[k]),
                a2.triple(bas[i], bas[j], ncol[k]),
                nmap.apply(a2.triple(bas[i], bas[j], bas[k])),
            )
        )
        want = tuple(
            p + q + r - s
            for p, q, r, s in zip(
                a2.triple(ncol[i], ncol[j], bas[k]),
                a2.triple(bas[i], ncol[j], ncol[k]),
                a2.triple(ncol[i], bas[j], ncol[k]),
                nmap.apply(aux),
            )
        )
        assert got_t.slice_vector(i, j, k) == want


def test_nijenhuis_examples(a2, so3):
    assert is_nijenhuis(a2, Matrix.identity(2).scale(Fraction(5, 3)))
    assert is_nijenhuis(a2, Matrix([[0, 2], [0, 0]]))
    # on this 2-dim algebra every operator is Nijenhuis (grid-verified);
    # genuine negatives need dimension 3
    assert is_nijenhuis(a2, Matrix([[0, 1], [1, 0]]))
    assert not is_nijenhuis(so3, Matrix([[-1, -1, -1]] * 3))
    assert not is_nijenhuis(so3, Matrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]]))


def test_nijenhuis_deformation_is_algebra(a2, so3, rng):
    cases = [(a2, Matrix([[0, 2], [0, 0]])), (a2, Matrix.identity(2).scale(3))]
    for _ in range(10):
        lam = rng.randint(-3, 3)
        cases.append((so3, Matrix.identity(3).scale(lam)))
    for alg, nmap in cases:
        assert is_nijenhuis(alg, nmap)
        deformed = deformed_algebra(alg, nmap)
        assert deformed.check_axioms().passed
        # a Nijenhuis operator is a homomorphism deformed -> original
        assert is_homomorphism(nmap, deformed, alg)


def test_bracket_multilinearity(a2, rng):
    for _ in range(30):
        x = tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(2))
        x2 = tuple(Fraction(rng.randint(-4, 4)) for _ in range(2))
        y = tuple(Fraction(rng.randint(-4, 4)) for _ in range(2))
        al, be = Fraction(rng.randint(-3, 3), 2), Fraction(rng.randint(-3, 3))
        lhs = a2.bracket(tuple(al * a + be * b for a, b in zip(x, x2)), y)
        rhs = tuple(al * p + be * q for p, q in zip(a2.bracket(x, y), a2.bracket(x2, y)))
        assert lhs == rhs
        lhs3 = a2.triple(x, tuple(al * a + be * b for a, b in zip(x, x2)), y)
        rhs3 = tuple(
            al * p + be * q
            for p, q in zip(a2.triple(x, x, y), a2.triple(x, x2, y))
        )
        assert lhs3 == rhs3


def test_antisymmetrized_from_lie(sl2):
    # <<x,y,z>> = [[x,y],z] construction stays antisymmetric and valid
    assert sl2.check_axioms().passed
    tens = nijenhuis_deformation_tensors(sl2, Matrix.identity(3))
    assert tens[0] == sl2.binary_tensor
