from fractions import Fraction

import pytest

from lieyam import Matrix
from lieyam.deform import (
    DeformationData,
    NijenhuisStructure,
    are_equivalent_deformations,
    deformation_cocycle,
    deformation_difference_report,
    derived_deformation_terms,
    hat_rep,
    is_deformation_of_pair,
    is_linear_deformation,
    is_nijenhuis_structure,
    linear_deformation_report,
    nijenhuis_structure_report,
    semidirect_nijenhuis,
    trivial_deformation_from,
)
from lieyam.errors import NotNijenhuisError
from lieyam.paircomplex import PairCochain, pair_delta_direct, pair_delta_lifted
from lieyam.reps import check_representation
from lieyam.scalars import Poly


NMAT = Matrix([[0, 2], [0, 0]])


def test_nijenhuis_structure_examples(a2_adjoint):
    P = a2_adjoint
    assert is_nijenhuis_structure(P, NMAT, NMAT)
    assert is_nijenhuis_structure(P, Matrix.zero(2), Matrix.zero(2))
    lam = Fraction(3, 2)
    assert is_nijenhuis_structure(P, Matrix.identity(2).scale(lam), Matrix.identity(2).scale(lam))
    # genuine negative: S must interact correctly with rho
    rep = nijenhuis_structure_report(P, Matrix.zero(2), Matrix.diag([1, 0]))
    assert not rep.passed
    assert not rep.check("rho-compat").ok
    assert rep.check("rho-compat").witness is not None


def test_structure_wrapper_rejects(a2_adjoint):
    with pytest.raises(NotNijenhuisError):
        NijenhuisStructure(a2_adjoint, Matrix.zero(2), Matrix.diag([1, 0]))


def test_zero_deformation_valid(a2_adjoint):
    d0 = DeformationData.zero(a2_adjoint)
    assert is_linear_deformation(a2_adjoint, d0)
    assert is_deformation_of_pair(a2_adjoint, d0)
    assert deformation_cocycle(a2_adjoint, d0).is_zero()


def test_trivial_deformation_roundtrip(a2_adjoint):
    P = a2_adjoint
    cases = [
        (Matrix.zero(2), Matrix.zero(2)),
        (Matrix.identity(2).scale(Fraction(5, 2)), Matrix.identity(2).scale(Fraction(5, 2))),
        (NMAT, NMAT),
    ]
    for nmap, smap in cases:
        ns = NijenhuisStructure(P, nmap, smap)
        d = trivial_deformation_from(P, ns)
        assert is_linear_deformation(P, d)
        assert is_deformation_of_pair(P, d)
        assert are_equivalent_deformations(P, d, DeformationData.zero(P), nmap, smap)
        coc = deformation_cocycle(P, d)
        assert pair_delta_lifted(P, coc, cap=3).is_zero()
        # exactness witness: the cocycle is the coboundary of (N, S)
        one = PairCochain.degree1(nmap, smap)
        assert pair_delta_direct(P, one) == coc
        assert deformation_difference_report(P, d, DeformationData.zero(P), nmap, smap).passed


def test_scalar_rescaling_structure(a2_adjoint):
    lam = Fraction(2)
    ns = NijenhuisStructure(a2_adjoint, Matrix.identity(2).scale(lam), Matrix.identity(2).scale(lam))
    d = trivial_deformation_from(a2_adjoint, ns)
    # phi = 2 lambda [x,y] - lambda [x,y] = lambda [x,y]
    alg = a2_adjoint.algebra
    for i in range(2):
        for j in range(2):
            assert d.phi.slice_vector(i, j) == tuple(lam * v for v in alg.b[i][j])


def test_noncocycle_perturbation_reports_witness(a2_adjoint):
    P = a2_adjoint
    d = DeformationData.zero(P)
    phi = [[list(v) for v in row] for row in
           [[d.phi.slice_vector(i, j) for j in range(2)] for i in range(2)]]
    phi[0][1][1] += 1
    phi[1][0][1] -= 1
    from lieyam.linalg import Tensor

    bad = DeformationData(
        Tensor((2, 2, 2), [x for row in phi for v in row for x in v]),
        d.phi1, d.phi2, d.varrho, d.varpi1, d.varpi2,
    )
    rep = linear_deformation_report(P, bad)
    assert not rep.passed
    failing = [c for c in rep.checks if not c.ok]
    assert failing[0].witness is not None
    residual = failing[0].witness["residual"]
    assert any(isinstance(x, Poly) and x for x in residual)  # t-coefficients visible


def test_equivalence_negative(a2_adjoint):
    P = a2_adjoint
    lam = Matrix.identity(2).scale(2)
    ns = NijenhuisStructure(P, lam, lam)
    d = trivial_deformation_from(P, ns)
    assert not d.is_zero()
    assert not are_equivalent_deformations(P, d, DeformationData.zero(P),
                                           Matrix.zero(2), Matrix.zero(2))


def test_nilpotent_family_degenerates_to_zero(a2_adjoint):
    # for this algebra the nilpotent operator generates the zero family
    ns = NijenhuisStructure(a2_adjoint, NMAT, NMAT)
    assert trivial_deformation_from(a2_adjoint, ns).is_zero()


def _random_deformation(P, rng):
    """Antisymmetry-respecting but otherwise arbitrary deformation data."""
    from lieyam.linalg import Tensor

    n = P.dim_g

    def anti3():
        flat = [[[0] * n for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                v = [rng.randint(-2, 2) for _ in range(n)]
                flat[i][j] = v
                flat[j][i] = [-x for x in v]
        return Tensor((n, n, n), [x for a in flat for b in a for x in b])

    def anti4():
        flat = [[[[0] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(n):
                    v = [rng.randint(-2, 2) for _ in range(n)]
                    flat[i][j][k] = v
                    flat[j][i][k] = [-x for x in v]
        return Tensor((n,) * 4, [x for a in flat for b in a for c in b for x in c])

    m = P.dim_v
    rnd_mat = lambda: Matrix([[rng.randint(-2, 2) for _ in range(m)] for _ in range(m)])  # noqa: E731
    return DeformationData(
        anti3(), anti4(), anti4(),
        [rnd_mat() for _ in range(n)],
        [[rnd_mat() for _ in range(n)] for _ in range(n)],
        [[rnd_mat() for _ in range(n)] for _ in range(n)],
    )


def test_random_data_is_usually_not_a_deformation(a2_adjoint, rng):
    hits = sum(
        is_linear_deformation(a2_adjoint, _random_deformation(a2_adjoint, rng))
        for _ in range(10)
    )
    assert hits <= 2


def test_semidirect_nijenhuis_block(a2_adjoint):
    ns = NijenhuisStructure(a2_adjoint, NMAT, NMAT)
    block = semidirect_nijenhuis(a2_adjoint, ns)
    assert block.rows == 4
    assert block[0, 1] == 2 and block[2, 3] == 2 and block[0, 2] == 0
    zero = NijenhuisStructure(a2_adjoint, Matrix.zero(2), Matrix.zero(2))
    assert semidirect_nijenhuis(a2_adjoint, zero).is_zero()


def test_hat_rep_cases(a2_adjoint):
    P = a2_adjoint
    zero = NijenhuisStructure(P, Matrix.zero(2), Matrix.zero(2))
    h0 = hat_rep(P, zero)
    assert all(m.is_zero() for m in h0.rho)
    assert all(m.is_zero() for row in h0.mu for m in row)

    ident = NijenhuisStructure(P, Matrix.identity(2), Matrix.identity(2))
    h1 = hat_rep(P, ident)
    assert all(h1.rho[i] == P.rep.rho[i] for i in range(2))
    assert all(h1.mu[i][j] == P.rep.mu[i][j] for i in range(2) for j in range(2))

    ns = NijenhuisStructure(P, NMAT, NMAT)
    hn = hat_rep(P, ns)  # all consequence asserts run inside
    from lieyam.algebra import deformed_algebra

    assert check_representation(deformed_algebra(P.algebra, NMAT), hn).passed


def test_derived_deformation_terms_match_polynomial_route(a2_adjoint):
    """D_t computed from the polynomial family splits as D + t D1 + t^2 D2."""
    from lieyam.deform import deformed_pair_structures
    from lieyam.reps import derived_D

    P = a2_adjoint
    ns = NijenhuisStructure(P, NMAT, NMAT)
    d = trivial_deformation_from(P, ns)
    d1, d2 = derived_deformation_terms(P, d)
    alg_t, rep_t = deformed_pair_structures(P, d)
    dt = derived_D(alg_t, rep_t)
    for i in range(2):
        for j in range(2):
            for r in range(2):
                for c in range(2):
                    poly = dt.at(i, j)[r, c]
                    p = poly if isinstance(poly, Poly) else Poly([poly])
                    assert p.coeff(0) == P.d.at(i, j)[r, c]
                    assert p.coeff(1) == d1[i][j][r, c]
                    assert p.coeff(2) == d2[i][j][r, c]


def test_equivalence_maps_are_pair_homomorphisms_at_sampled_t(a2_adjoint):
    """At a sampled rational t, (Id+tN, Id+tS) is a pair homomorphism
    from the deformed pair to the original one."""
    from lieyam.deform import deformed_pair_structures
    from lieyam.reps import LieYRepPair, is_pair_homomorphism
    from lieyam.scalars import Poly

    P = a2_adjoint
    lam = Matrix.identity(2).scale(2)
    ns = NijenhuisStructure(P, lam, lam)
    d = trivial_deformation_from(P, ns)
    alg_t, rep_t = deformed_pair_structures(P, d)
    for t0 in (Fraction(1, 2), Fraction(-1, 3)):
        ev = lambda s: s.eval(t0) if isinstance(s, Poly) else s  # noqa: E731
        alg0 = type(P.algebra)(
            2,
            [[tuple(map(ev, v)) for v in row] for row in alg_t.b],
            [[[tuple(map(ev, v)) for v in row] for row in plane] for plane in alg_t.t],
        )
        rep0 = type(P.rep)(2, 2,
                           [m.map(ev) for m in rep_t.rho],
                           [[m.map(ev) for m in row] for row in rep_t.mu])
        deformed_at_t = LieYRepPair(alg0, rep0)
        phi = Matrix.identity(2) + ns.nmap.scale(t0)
        psi = Matrix.identity(2) + ns.smap.scale(t0)
        assert is_pair_homomorphism(phi, psi, deformed_at_t, P)


def test_nn_structure_iff_nijenhuis_operator_on_adjoint(a2_adjoint, rng):
    """(N, N) is a structure on the adjoint pair exactly when N is Nijenhuis."""
    from lieyam import LieYRepPair, adjoint_rep
    from lieyam.algebra import is_nijenhuis
    from lieyam.search import catalog_algebra

    so3 = catalog_algebra("so3")
    P3 = LieYRepPair(so3, adjoint_rep(so3))
    for _ in range(40):
        nmap = Matrix([[rng.randint(-2, 2) for _ in range(3)] for _ in range(3)])
        assert is_nijenhuis(so3, nmap) == is_nijenhuis_structure(P3, nmap, nmap)
    for _ in range(25):
        nmap = Matrix([[rng.randint(-2, 2) for _ in range(2)] for _ in range(2)])
        # on this 2-dim algebra every operator is Nijenhuis, so every (N, N)
        # must validate as a structure on the adjoint pair
        assert is_nijenhuis_structure(a2_adjoint, nmap, nmap)
