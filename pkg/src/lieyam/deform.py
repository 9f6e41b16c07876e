"""Linear deformations of algebra/representation pairs and Nijenhuis structures.

A deformation datum is a collection (phi, phi1, phi2; varrho, varpi1,
varpi2) defining the one-parameter family

    [x,y]_t      = [x,y] + t phi(x,y)
    <<x,y,z>>_t  = <<x,y,z>> + t phi1(x,y,z) + t^2 phi2(x,y,z)
    rho_t(x)     = rho(x) + t varrho(x)
    mu_t(x,y)    = mu(x,y) + t varpi1(x,y) + t^2 varpi2(x,y)

"Holds for all t" is decided structurally: the family is built over the
polynomial scalar ring and every axiom residual must be the zero
polynomial (degree up to 4 in t), never by sampling.

A Nijenhuis structure is a pair of maps (N on g, S on V) such that N is
a Nijenhuis operator and two compatibility conditions tie S to the
representation; every such pair generates a linear deformation that is
trivial, witnessed by (Id + tN, Id + tS).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .algebra import (
    LieYamagutiAlgebra,
    deformed_algebra,
    is_nijenhuis,
    nijenhuis_deformation_tensors,
)
from .errors import (
    ConsequenceViolatedError,
    DimMismatchError,
    InternalConsistencyError,
    NotNijenhuisError,
)
from .linalg import Matrix, Tensor
from .paircomplex import PairCochain
from .reps import LieYRepPair, Representation, check_representation, derived_D, is_pair_homomorphism
from .yamaguti import wedge_pairs
from .scalars import T as TPOLY
from .scalars import is_zero
from .report import VerificationReport


@dataclass
class DeformationData:
    """First- and second-order terms of a one-parameter family."""

    phi: Tensor          # (n, n, n), antisymmetric
    phi1: Tensor         # (n, n, n, n), antisymmetric in the first two slots
    phi2: Tensor         # (n, n, n, n), antisymmetric in the first two slots
    varrho: list         # n matrices on V
    varpi1: list         # n x n matrices on V
    varpi2: list         # n x n matrices on V

    @classmethod
    def zero(cls, pair: LieYRepPair):
        n, m = pair.dim_g, pair.dim_v
        z = Matrix.zero(m)
        return cls(
            Tensor.zeros((n, n, n)),
            Tensor.zeros((n, n, n, n)),
            Tensor.zeros((n, n, n, n)),
            [z] * n,
            [[z] * n for _ in range(n)],
            [[z] * n for _ in range(n)],
        )

    def is_zero(self):
        return (
            self.phi.is_zero()
            and self.phi1.is_zero()
            and self.phi2.is_zero()
            and all(m.is_zero() for m in self.varrho)
            and all(m.is_zero() for row in self.varpi1 for m in row)
            and all(m.is_zero() for row in self.varpi2 for m in row)
        )


def _check_shapes(pair: LieYRepPair, d: DeformationData):
    n, m = pair.dim_g, pair.dim_v
    if d.phi.shape != (n, n, n) or d.phi1.shape != (n,) * 4 or d.phi2.shape != (n,) * 4:
        raise DimMismatchError("deformation tensors do not match the algebra dimension")
    if len(d.varrho) != n or len(d.varpi1) != n or len(d.varpi2) != n:
        raise DimMismatchError("deformation operator tables must have one entry per basis vector")
    for mat in d.varrho:
        if mat.rows != m or mat.cols != m:
            raise DimMismatchError("deformation operators must act on the module")


def deformed_pair_structures(pair: LieYRepPair, d: DeformationData):
    """The t-family as polynomial-entry structures (algebra_t, rep_t)."""
    _check_shapes(pair, d)
    n, m = pair.dim_g, pair.dim_v
    alg, rep = pair.algebra, pair.rep
    t = TPOLY
    t2 = t * t
    binary = [
        [
            tuple(alg.b[i][j][k] + t * d.phi.at(i, j, k) for k in range(n))
            for j in range(n)
        ]
        for i in range(n)
    ]
    ternary = [
        [
            [
                tuple(
                    alg.t[i][j][k][l] + t * d.phi1.at(i, j, k, l) + t2 * d.phi2.at(i, j, k, l)
                    for l in range(n)
                )
                for k in range(n)
            ]
            for j in range(n)
        ]
        for i in range(n)
    ]
    alg_t = LieYamagutiAlgebra(n, binary, ternary, alg.basis_names)
    rho_t = [rep.rho[i] + d.varrho[i].scale(t) for i in range(n)]
    mu_t = [
        [rep.mu[i][j] + d.varpi1[i][j].scale(t) + d.varpi2[i][j].scale(t2) for j in range(n)]
        for i in range(n)
    ]
    return alg_t, Representation(n, m, rho_t, mu_t)


def linear_deformation_report(pair: LieYRepPair, d: DeformationData) -> VerificationReport:
    """Axioms and representation conditions of the t-family, as polynomials."""
    alg_t, rep_t = deformed_pair_structures(pair, d)
    report = VerificationReport(subject="linear deformation (polynomial arithmetic in t)")
    report.extend(alg_t.check_axioms(), prefix="t-family ")
    report.extend(check_representation(alg_t, rep_t), prefix="t-family ")
    return report


def is_linear_deformation(pair: LieYRepPair, d: DeformationData) -> bool:
    return linear_deformation_report(pair, d).passed


def derived_deformation_terms(pair: LieYRepPair, d: DeformationData):
    """The degree-1 and degree-2 parts in t of the family's derived operator.

    D1(x,y) = varpi1(y,x) - varpi1(x,y) + [rho(x),varrho(y)]
              + [varrho(x),rho(y)] - varrho([x,y]) - rho(phi(x,y))
    D2(x,y) = varpi2(y,x) - varpi2(x,y) + [varrho(x),varrho(y)]
              - varrho(phi(x,y))

    The derived operator of the deformed pair is built over the deformed
    bracket, hence the phi terms; without them the first-order data of a
    trivial deformation would not even be closed.
    """
    n = pair.dim_g
    rep = pair.rep
    alg = pair.algebra

    def vr_vec(vec):
        acc = Matrix.zero(pair.dim_v)
        for i, s in enumerate(vec):
            if not is_zero(s):
                acc = acc + d.varrho[i].scale(s)
        return acc

    d1 = [[None] * n for _ in range(n)]
    d2 = [[None] * n for _ in range(n)]
    for i, j in product(range(n), repeat=2):
        phi_vec = d.phi.slice_vector(i, j)
        m1 = d.varpi1[j][i] - d.varpi1[i][j]
        m1 = m1 + rep.rho[i] * d.varrho[j] - d.varrho[j] * rep.rho[i]
        m1 = m1 + d.varrho[i] * rep.rho[j] - rep.rho[j] * d.varrho[i]
        d1[i][j] = m1 - vr_vec(alg.b[i][j]) - rep.rho_vec(phi_vec)
        m2 = d.varpi2[j][i] - d.varpi2[i][j]
        m2 = m2 + d.varrho[i] * d.varrho[j] - d.varrho[j] * d.varrho[i]
        d2[i][j] = m2 - vr_vec(phi_vec)
    return d1, d2


def deformation_cocycle(pair: LieYRepPair, d: DeformationData) -> PairCochain:
    """The degree-2 cochain carrying the first-order part of a deformation.

    Component placement (fixed by requiring closedness on verified
    deformations): comp1 = (phi, phi1); comp2 = (varrho as a mixed map,
    D1); comp3 holds (D1 - varpi1) on mixed-then-g arguments.
    """
    _check_shapes(pair, d)
    n, m = pair.dim_g, pair.dim_v
    d1, _ = derived_deformation_terms(pair, d)
    c = PairCochain(2, n, m)
    for w, (i, j) in enumerate(wedge_pairs(n)):
        c.set_value("c1f", (w,), [d.phi.at(i, j, k) for k in range(n)])
        for z in range(n):
            c.set_value("c1g", (w, z), [d.phi1.at(i, j, z, l) for l in range(n)])
        for b in range(m):
            c.set_value("c2g", (w, b), d1[i][j].col(b))
    for x in range(n):
        for b in range(m):
            c.set_value("c2f", (x * m + b,), d.varrho[x].col(b))
            for z in range(n):
                c.set_value("c3g1", (x * m + b, z), (d1[x][z] - d.varpi1[x][z]).col(b))
    return c


def is_deformation_of_pair(pair: LieYRepPair, d: DeformationData) -> bool:
    """Whether (phi, phi2) with (varrho, varpi2) is itself a valid pair."""
    _check_shapes(pair, d)
    n, m = pair.dim_g, pair.dim_v
    alg2 = LieYamagutiAlgebra(
        n,
        [[d.phi.slice_vector(i, j) for j in range(n)] for i in range(n)],
        [[[d.phi2.slice_vector(i, j, k) for k in range(n)] for j in range(n)] for i in range(n)],
    )
    if not alg2.check_axioms().passed:
        return False
    rep2 = Representation(n, m, d.varrho, d.varpi2)
    return check_representation(alg2, rep2).passed


# ---------------------------------------------------------------------------
# Nijenhuis structures


def _nij_rho_residual(pair: LieYRepPair, nmap: Matrix, smap: Matrix, x: int) -> Matrix:
    """rho(Nx) S - S (rho(Nx) + rho(x) S - S rho(x))."""
    rep = pair.rep
    rho_nx = rep.rho_vec(nmap.col(x))
    varrho_x = rho_nx + rep.rho[x] * smap - smap * rep.rho[x]
    return rho_nx * smap - smap * varrho_x


def _nij_mu_residual(pair: LieYRepPair, nmap: Matrix, smap: Matrix, x: int, y: int) -> Matrix:
    """mu(Nx,Ny) S - S varpi2(x,y) with varpi2 as in the trivial family."""
    rep = pair.rep
    ncols = [nmap.col(i) for i in range(pair.dim_g)]
    mu_nxy = rep.mu_vl(ncols[x], y)
    mu_xny = rep.mu_vr(x, ncols[y])
    mu_nn = rep.mu_vec(ncols[x], ncols[y])
    varpi1 = mu_nxy + mu_xny + rep.mu[x][y] * smap - smap * rep.mu[x][y]
    varpi2 = mu_nxy * smap + mu_xny * smap + mu_nn - smap * varpi1
    return mu_nn * smap - smap * varpi2


def _nij_d_residual(pair: LieYRepPair, nmap: Matrix, smap: Matrix, x: int, y: int) -> Matrix:
    """Derived-operator analogue of the mu condition (a consequence)."""
    d = pair.d
    ncols = [nmap.col(i) for i in range(pair.dim_g)]
    d_nxy = d.vl(ncols[x], y)
    d_xny = -d.vl(ncols[y], x)
    d_nn = d.vec(ncols[x], ncols[y])
    lhs = d_nn * smap
    rhs = smap * (d_nxy * smap + d_xny * smap + d_nn)
    rhs = rhs - smap * smap * (d_nxy + d_xny + d.at(x, y) * smap)
    rhs = rhs + smap * smap * smap * d.at(x, y)
    return lhs - rhs


def nijenhuis_structure_report(pair: LieYRepPair, nmap: Matrix, smap: Matrix) -> VerificationReport:
    n = pair.dim_g
    if nmap.rows != n or nmap.cols != n:
        raise DimMismatchError("N must act on the algebra")
    if smap.rows != pair.dim_v or smap.cols != pair.dim_v:
        raise DimMismatchError("S must act on the module")
    report = VerificationReport(subject="nijenhuis structure (N, S)")
    report.add("nijenhuis-N", is_nijenhuis(pair.algebra, nmap),
               "N[x,y]_N = [Nx,Ny] and N<<x,y,z>>_N = <<Nx,Ny,Nz>>",
               witness={"operator": "N"})
    wit = None
    for x in range(n):
        r = _nij_rho_residual(pair, nmap, smap, x)
        if not r.is_zero():
            wit = {"tuple": (x,), "residual": r.data}
            break
    report.add("rho-compat", wit is None,
               "rho(Nx) S = S(rho(Nx) + rho(x) S) - S^2 rho(x)", wit)
    wit = None
    for x, y in product(range(n), repeat=2):
        r = _nij_mu_residual(pair, nmap, smap, x, y)
        if not r.is_zero():
            wit = {"tuple": (x, y), "residual": r.data}
            break
    report.add("mu-compat", wit is None,
               "mu(Nx,Ny) S = S(mu(Nx,y)S + mu(x,Ny)S + mu(Nx,Ny)) "
               "- S^2(mu(Nx,y) + mu(x,Ny) + mu(x,y)S) + S^3 mu(x,y)", wit)
    if report.passed:
        for x, y in product(range(n), repeat=2):
            r = _nij_d_residual(pair, nmap, smap, x, y)
            if not r.is_zero():
                raise InternalConsistencyError(
                    "derived-operator compatibility fails although the defining "
                    f"conditions hold (tuple {(x, y)})"
                )
    return report


def is_nijenhuis_structure(pair: LieYRepPair, nmap: Matrix, smap: Matrix) -> bool:
    return nijenhuis_structure_report(pair, nmap, smap).passed


class NijenhuisStructure:
    """Validated (N, S) pair; downstream constructors accept only this."""

    def __init__(self, pair: LieYRepPair, nmap: Matrix, smap: Matrix):
        if not is_nijenhuis_structure(pair, nmap, smap):
            raise NotNijenhuisError("(N, S) is not a Nijenhuis structure on this pair")
        self.pair = pair
        self.nmap = nmap
        self.smap = smap


def trivial_deformation_from(pair: LieYRepPair, ns: NijenhuisStructure) -> DeformationData:
    """The linear deformation generated by a Nijenhuis structure.

    phi / phi1 / phi2 are the operator-deformation tensors of N;
    varrho(x)  = rho(Nx) + rho(x) S - S rho(x)
    varpi1(x,y) = mu(Nx,y) + mu(x,Ny) + mu(x,y) S - S mu(x,y)
    varpi2(x,y) = mu(Nx,y) S + mu(x,Ny) S + mu(Nx,Ny) - S varpi1(x,y)
    """
    if ns.pair is not pair:
        raise DimMismatchError("Nijenhuis structure belongs to another pair")
    alg, rep = pair.algebra, pair.rep
    nmap, smap = ns.nmap, ns.smap
    n = pair.dim_g
    phi, phi1, phi2 = nijenhuis_deformation_tensors(alg, nmap)
    ncols = [nmap.col(i) for i in range(n)]
    varrho = [rep.rho_vec(ncols[x]) + rep.rho[x] * smap - smap * rep.rho[x] for x in range(n)]
    varpi1 = [[None] * n for _ in range(n)]
    varpi2 = [[None] * n for _ in range(n)]
    for x, y in product(range(n), repeat=2):
        m1 = rep.mu_vl(ncols[x], y) + rep.mu_vr(x, ncols[y])
        p1 = m1 + rep.mu[x][y] * smap - smap * rep.mu[x][y]
        varpi1[x][y] = p1
        varpi2[x][y] = m1 * smap + rep.mu_vec(ncols[x], ncols[y]) - smap * p1
    return DeformationData(phi, phi1, phi2, varrho, varpi1, varpi2)


def are_equivalent_deformations(pair: LieYRepPair, d: DeformationData,
                                d2: DeformationData, nmap: Matrix, smap: Matrix) -> bool:
    """Whether (Id + tN, Id + tS) maps the d-family onto the d2-family.

    All five intertwining identities are checked as polynomial identities
    in t on basis tuples (d is the source family, d2 the target).
    """
    alg_s, rep_s = deformed_pair_structures(pair, d)
    alg_t, rep_t = deformed_pair_structures(pair, d2)
    n, m = pair.dim_g, pair.dim_v
    t = TPOLY
    phi_n = Matrix.identity(n) + nmap.scale(t)
    psi_s = Matrix.identity(m) + smap.scale(t)
    ncols = [phi_n.col(i) for i in range(n)]
    # brackets
    for i, j in product(range(n), repeat=2):
        lhs = phi_n.apply(alg_s.b[i][j])
        rhs = alg_t.bracket(ncols[i], ncols[j])
        if not all(is_zero(a - b) for a, b in zip(lhs, rhs)):
            return False
    for i, j, k in product(range(n), repeat=3):
        lhs = phi_n.apply(alg_s.t[i][j][k])
        rhs = alg_t.triple(ncols[i], ncols[j], ncols[k])
        if not all(is_zero(a - b) for a, b in zip(lhs, rhs)):
            return False
    # representation maps
    for i in range(n):
        if psi_s * rep_s.rho[i] != rep_t.rho_vec(ncols[i]) * psi_s:
            return False
    for i, j in product(range(n), repeat=2):
        if psi_s * rep_s.mu[i][j] != rep_t.mu_vec(ncols[i], ncols[j]) * psi_s:
            return False
    ds = derived_D(alg_s, rep_s)
    dt = derived_D(alg_t, rep_t)
    for i, j in product(range(n), repeat=2):
        if psi_s * ds.at(i, j) != dt.vec(ncols[i], ncols[j]) * psi_s:
            return False
    return True


def semidirect_nijenhuis(pair: LieYRepPair, ns: NijenhuisStructure) -> Matrix:
    """Block-diagonal N (+) S, a Nijenhuis operator on the semidirect algebra."""
    n, m = pair.dim_g, pair.dim_v
    rows = []
    for i in range(n + m):
        row = []
        for j in range(n + m):
            if i < n and j < n:
                row.append(ns.nmap[i, j])
            elif i >= n and j >= n:
                row.append(ns.smap[i - n, j - n])
            else:
                row.append(0)
        rows.append(tuple(row))
    block = Matrix(rows)
    if not is_nijenhuis(pair.semidirect(), block):
        raise ConsequenceViolatedError(
            "N (+) S is not Nijenhuis on the semidirect algebra despite a validated structure"
        )
    return block


def hat_rep(pair: LieYRepPair, ns: NijenhuisStructure) -> Representation:
    """The reshaped representation attached to a Nijenhuis structure.

    hat-rho(x)  = rho(Nx) + rho(x) S - S rho(x)
    hat-mu(x,y) = mu(Nx,y) S + mu(x,Ny) S + mu(Nx,Ny)
                  - S(mu(Nx,y) + mu(x,Ny) + mu(x,y) S) + S^2 mu(x,y)

    Verified on construction: the derived operator of (hat-rho, hat-mu)
    over the N-deformed algebra equals its closed form; the deformed
    algebra with (hat-rho, hat-mu) is a valid pair; and (N, S) is a pair
    homomorphism from the deformed pair to the original one.
    """
    d = trivial_deformation_from(pair, ns)
    rep_hat = Representation(pair.dim_g, pair.dim_v, d.varrho, d.varpi2)
    alg_n = deformed_algebra(pair.algebra, ns.nmap)
    n = pair.dim_g
    smap = ns.smap
    ncols = [ns.nmap.col(i) for i in range(n)]
    dh = derived_D(alg_n, rep_hat)
    dd = pair.d
    for x, y in product(range(n), repeat=2):
        d_nxy = dd.vl(ncols[x], y)
        d_xny = -dd.vl(ncols[y], x)
        d_nn = dd.vec(ncols[x], ncols[y])
        closed = d_nxy * smap + d_xny * smap + d_nn
        closed = closed - smap * (d_nxy + d_xny + dd.at(x, y) * smap)
        closed = closed + smap * smap * dd.at(x, y)
        if dh.at(x, y) != closed:
            raise ConsequenceViolatedError(
                f"derived operator of the reshaped representation differs from its closed form at {(x, y)}"
            )
    if not check_representation(alg_n, rep_hat).passed:
        raise ConsequenceViolatedError(
            "reshaped representation fails the representation conditions on the deformed algebra"
        )
    deformed_pair = LieYRepPair(alg_n, rep_hat, validate=False)
    if not is_pair_homomorphism(ns.nmap, ns.smap, deformed_pair, pair):
        raise ConsequenceViolatedError(
            "(N, S) is not a pair homomorphism from the deformed pair to the original"
        )
    return rep_hat


def deformation_difference_report(pair: LieYRepPair, d: DeformationData,
                                  d2: DeformationData, nmap: Matrix,
                                  smap: Matrix) -> VerificationReport:
    """The five first-order difference identities of equivalent families.

    For equivalent deformations (source d, target d2) with witness
    (Id+tN, Id+tS), the differences of the generating data are the
    degree-1 coboundary expressions of (N, S).
    """
    alg, rep = pair.algebra, pair.rep
    dd = pair.d
    n, m = pair.dim_g, pair.dim_v
    report = VerificationReport(subject="first-order difference identities")
    ncols = [nmap.col(i) for i in range(n)]

    wit = None
    for i, j in product(range(n), repeat=2):
        want = [a + b - c for a, b, c in zip(
            alg._bra_vl(ncols[i], j), alg._bra_vr(i, ncols[j]), nmap.apply(alg.b[i][j]))]
        got = [d.phi.at(i, j, k) - d2.phi.at(i, j, k) for k in range(n)]
        if not all(is_zero(a - b) for a, b in zip(got, want)):
            wit = {"tuple": (i, j)}
            break
    report.add("diff-binary", wit is None, "phi - phi' = [Nx,y] + [x,Ny] - N[x,y]", wit)

    wit = None
    for i, j, k in product(range(n), repeat=3):
        e = alg.basis_vector
        want = alg._tri_v1(ncols[i], j, k)
        want = [a + b for a, b in zip(want, alg.triple(e(i), ncols[j], e(k)))]
        want = [a + b for a, b in zip(want, alg._tri_v3(i, j, ncols[k]))]
        want = [a - b for a, b in zip(want, nmap.apply(alg.t[i][j][k]))]
        got = [d.phi1.at(i, j, k, l) - d2.phi1.at(i, j, k, l) for l in range(n)]
        if not all(is_zero(a - b) for a, b in zip(got, want)):
            wit = {"tuple": (i, j, k)}
            break
    report.add("diff-ternary", wit is None,
               "phi1 - phi1' = <<Nx,y,z>> + <<x,Ny,z>> + <<x,y,Nz>> - N<<x,y,z>>", wit)

    wit = None
    for i in range(n):
        want = rep.rho_vec(ncols[i]) + rep.rho[i] * smap - smap * rep.rho[i]
        if d.varrho[i] - d2.varrho[i] != want:
            wit = {"tuple": (i,)}
            break
    report.add("diff-rho", wit is None, "varrho - varrho' = rho(Nx) + rho(x)S - S rho(x)", wit)

    wit = None
    for i, j in product(range(n), repeat=2):
        want = rep.mu_vl(ncols[i], j) + rep.mu_vr(i, ncols[j]) + rep.mu[i][j] * smap - smap * rep.mu[i][j]
        if d.varpi1[i][j] - d2.varpi1[i][j] != want:
            wit = {"tuple": (i, j)}
            break
    report.add("diff-mu", wit is None,
               "varpi1 - varpi1' = mu(Nx,y) + mu(x,Ny) + mu(x,y)S - S mu(x,y)", wit)

    d1a, _ = derived_deformation_terms(pair, d)
    d1b, _ = derived_deformation_terms(pair, d2)
    wit = None
    for i, j in product(range(n), repeat=2):
        want = dd.vl(ncols[i], j) - dd.vl(ncols[j], i) + dd.at(i, j) * smap - smap * dd.at(i, j)
        if d1a[i][j] - d1b[i][j] != want:
            wit = {"tuple": (i, j)}
            break
    report.add("diff-D", wit is None,
               "D1 - D1' = D(Nx,y) + D(x,Ny) + D(x,y)S - S D(x,y)", wit)
    return report
