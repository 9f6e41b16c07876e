import itertools
from fractions import Fraction

import pytest

from lieyam import LieYamagutiAlgebra, LieYRepPair, Matrix, Representation
from lieyam.algebra import is_nijenhuis
from lieyam.deform import NijenhuisStructure
from lieyam.errors import PreconditionFailedError
from lieyam.rotabaxter import (
    RBNTriple,
    RelativeRBOperator,
    hat_deformed_brackets,
    is_compatible_pair,
    is_rbn,
    is_relative_rb,
    nijenhuis_from_pair,
    pre_ly_products,
    rbn_consequences,
    s_deformed_brackets,
    strong_condition,
    subadjacent,
)
from lieyam.search import search_rb_operators

T1 = Matrix([[0, 1], [0, 0]])
NMAT = Matrix([[0, 2], [0, 0]])


def test_relative_rb_examples(a2_adjoint):
    P = a2_adjoint
    assert is_relative_rb(P, Matrix.zero(2))
    assert is_relative_rb(P, T1)
    assert not is_relative_rb(P, Matrix.identity(2))
    with pytest.raises(PreconditionFailedError):
        RelativeRBOperator(P, Matrix.identity(2))


def test_homogeneous_scaling(a2_adjoint, rng):
    ops = search_rb_operators(a2_adjoint, values=(-1, 0, 1), limit=8)
    for t in ops:
        lam = Fraction(rng.randint(1, 5), rng.randint(1, 3)) * (-1) ** rng.randint(0, 1)
        assert is_relative_rb(a2_adjoint, t.scale(lam))


def test_subadjacent(a2_adjoint):
    zero_sub = subadjacent(RelativeRBOperator(a2_adjoint, Matrix.zero(2)))
    assert zero_sub.binary_tensor.is_zero() and zero_sub.ternary_tensor.is_zero()
    sub = subadjacent(RelativeRBOperator(a2_adjoint, T1))
    assert sub.check_axioms().passed


def test_subadjacent_on_coadjoint_search(a2_coadjoint):
    ops = search_rb_operators(a2_coadjoint, values=(-1, 0, 1), limit=6)
    assert ops
    for t in ops:
        assert subadjacent(RelativeRBOperator(a2_coadjoint, t)).check_axioms().passed


def test_pre_ly_products(a2_adjoint):
    top = RelativeRBOperator(a2_adjoint, T1)
    star, brace = pre_ly_products(top)  # consistency asserted inside
    assert star.shape == (2, 2, 2) and brace.shape == (2, 2, 2, 2)
    zero_top = RelativeRBOperator(a2_adjoint, Matrix.zero(2))
    star0, brace0 = pre_ly_products(zero_top)
    assert star0.is_zero() and brace0.is_zero()


def test_s_deformed_brackets_special_cases(a2_adjoint):
    top = RelativeRBOperator(a2_adjoint, T1)
    sub = subadjacent(top)
    b_id, t_id = s_deformed_brackets(top, Matrix.identity(2))
    assert b_id == sub.binary_tensor and t_id == sub.ternary_tensor
    b0, t0 = s_deformed_brackets(top, Matrix.zero(2))
    assert b0.is_zero() and t0.is_zero()


def test_hat_deformed_brackets_special_cases(a2_adjoint):
    top = RelativeRBOperator(a2_adjoint, T1)
    sub = subadjacent(top)
    ident = NijenhuisStructure(a2_adjoint, Matrix.identity(2), Matrix.identity(2))
    b_id, t_id = hat_deformed_brackets(top, ident)
    assert b_id == sub.binary_tensor and t_id == sub.ternary_tensor
    zero = NijenhuisStructure(a2_adjoint, Matrix.zero(2), Matrix.zero(2))
    b0, t0 = hat_deformed_brackets(top, zero)
    assert b0.is_zero() and t0.is_zero()


def test_rbn_family(a2_adjoint):
    P = a2_adjoint
    for a, lam in itertools.product((1, 2, -1, Fraction(3, 2)), repeat=2):
        t = Matrix([[0, a], [0, 0]])
        n = Matrix([[0, lam], [0, 0]])
        assert is_relative_rb(P, t)
        assert is_nijenhuis(P.algebra, n)
        assert is_rbn(P, t, n, n)
    assert is_rbn(P, Matrix.zero(2), Matrix.zero(2), Matrix.zero(2))
    # twist condition fails for N = Id, S = 0
    assert not is_rbn(P, T1, Matrix.zero(2), Matrix.identity(2))


def test_rbn_consequences(a2_adjoint):
    triple = RBNTriple(a2_adjoint, T1, NMAT, NMAT)
    report = rbn_consequences(triple)
    assert report.passed
    names = {c.name for c in report.checks}
    assert {"S-nijenhuis-on-subadjacent", "T-rb-on-deformed", "NT-rb-on-original",
            "deformed-brackets-equal", "deformed-brackets-axioms", "diagram-arrows"} <= names


def test_compatibility(a2_adjoint):
    P = a2_adjoint
    assert is_compatible_pair(P, T1, T1)
    ts = T1 * NMAT
    assert is_compatible_pair(P, T1, ts)
    ab = LieYamagutiAlgebra.abelian(2)
    Pab = LieYRepPair(ab, Representation.zero(2, 2))
    t_a = Matrix([[1, 2], [3, 4]])
    t_b = Matrix([[0, 1], [1, 0]])
    assert is_compatible_pair(Pab, t_a, t_b)
    with pytest.raises(PreconditionFailedError):
        is_compatible_pair(P, Matrix.identity(2), T1)


def test_strong_condition_cases(a2_adjoint):
    P = a2_adjoint
    top = RelativeRBOperator(P, T1)
    assert strong_condition(P, top, Matrix.zero(2))
    assert strong_condition(P, top, NMAT)
    assert strong_condition(P, top, Matrix.identity(2))


def test_strong_implies_compatible(a2_adjoint):
    """On validated triples with the strong condition, T and T S are compatible."""
    P = a2_adjoint
    for a, lam in itertools.product((1, -1, 2, Fraction(3, 2)), repeat=2):
        t = Matrix([[0, a], [0, 0]])
        s = Matrix([[0, lam], [0, 0]])
        triple = RBNTriple(P, t, s, s)
        top = RelativeRBOperator(P, t)
        if strong_condition(P, top, s):
            assert is_compatible_pair(P, t, t * s)


def test_nijenhuis_from_pair(a2_adjoint, a2_coadjoint):
    ab = LieYamagutiAlgebra.abelian(2)
    Pab = LieYRepPair(ab, Representation.zero(2, 2))
    t2 = Matrix([[1, 0], [0, 2]])
    assert nijenhuis_from_pair(Pab, t2.scale(2), t2) == Matrix.identity(2).scale(2)
    assert nijenhuis_from_pair(Pab, t2, t2) == Matrix.identity(2)
    # nondegenerate instance: invertible operator on the coadjoint pair
    pi_sharp = Matrix([[0, -1], [1, 0]])
    assert is_relative_rb(a2_coadjoint, pi_sharp)
    n = nijenhuis_from_pair(a2_coadjoint, pi_sharp.scale(3), pi_sharp)
    assert n == Matrix.identity(2).scale(3)
    assert is_nijenhuis(a2_coadjoint.algebra, n)


def test_nijenhuis_from_pair_requires_compat(a2_adjoint):
    P = a2_adjoint
    t2 = Matrix([[0, -1], [1, 0]])  # not Rota-Baxter for the adjoint pair
    with pytest.raises(PreconditionFailedError):
        nijenhuis_from_pair(P, T1, t2)


def test_compatible_nondegenerate_search(a2_coadjoint):
    """Grid search turns up a compatible pair with invertible second member."""
    P = a2_coadjoint
    t2 = Matrix([[0, -1], [1, 0]])
    found = []
    for ent in itertools.product((-1, 0, 1), repeat=4):
        t1 = Matrix([ent[0:2], ent[2:4]])
        if t1.is_zero() or not is_relative_rb(P, t1):
            continue
        try:
            if is_compatible_pair(P, t1, t2):
                found.append(t1)
        except PreconditionFailedError:
            pass
    assert found
    scalars = 0
    for t1 in found:
        n = nijenhuis_from_pair(P, t1, t2)
        assert is_nijenhuis(P.algebra, n)
        scalars += n == Matrix.identity(2).scale(n[0, 0])
    # record that the search yields at least the scalar family
    assert scalars >= 1
