"""Fixture construction: a catalog of small algebras, deterministic grid
searches for operators, and a randomized corpus of valid pairs.

The grid searches are deterministic (fixed iteration order) so that the
fixtures they find can be committed together with their verification
transcripts and reproduced exactly.  They are test utilities, exposed
through the `search` CLI subcommand, not a general solver.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from .algebra import LieYamagutiAlgebra, is_nijenhuis
from .errors import DimMismatchError
from .linalg import Matrix, vzero
from .quadratic import QuadraticForm, is_invariant_form, is_rb_nijenhuis, is_skew_endomorphism
from .reps import LieYRepPair, Representation, adjoint_rep, coadjoint_rep
from .rotabaxter import is_rbn, is_relative_rb


def _antisym_table(n, entries):
    out = [[vzero(n) for _ in range(n)] for _ in range(n)]
    for (i, j), comp in entries.items():
        vec = [Fraction(0)] * n
        for k, c in comp.items():
            vec[k] = Fraction(c)
        out[i][j] = tuple(vec)
        out[j][i] = tuple(-x for x in vec)
    return out


def catalog_algebra(name: str) -> LieYamagutiAlgebra:
    """Small named algebras used as fixture seeds."""
    if name.startswith("abelian"):
        return LieYamagutiAlgebra.abelian(int(name[len("abelian"):]))
    if name == "a2":
        # [e1,e2] = e1, <<e1,e2,e2>> = e1
        n = 2
        binary = _antisym_table(n, {(0, 1): {0: 1}})
        ternary = [[[vzero(n)] * n for _ in range(n)] for _ in range(n)]
        ternary[0][1] = [vzero(n), (Fraction(1), Fraction(0))]
        ternary[1][0] = [vzero(n), (Fraction(-1), Fraction(0))]
        return LieYamagutiAlgebra(n, binary, ternary)
    if name == "a2lts":
        return LieYamagutiAlgebra.from_triple_system(2, catalog_algebra("a2").ternary_tensor)
    if name == "heis3":
        return LieYamagutiAlgebra.from_lie_algebra(3, _antisym_table(3, {(0, 1): {2: 1}}))
    if name == "sl2":
        return LieYamagutiAlgebra.from_lie_algebra(
            3, _antisym_table(3, {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}})
        )
    if name == "so3":
        return LieYamagutiAlgebra.from_lie_algebra(
            3, _antisym_table(3, {(0, 1): {2: 1}, (1, 2): {0: 1}, (0, 2): {1: -1}})
        )
    if name == "so3lts":
        return LieYamagutiAlgebra.from_triple_system(3, catalog_algebra("so3").ternary_tensor)
    if name == "sl2lts":
        return LieYamagutiAlgebra.from_triple_system(3, catalog_algebra("sl2").ternary_tensor)
    raise KeyError(f"unknown catalog algebra {name!r}")


CATALOG = ("a2", "a2lts", "abelian2", "abelian3", "heis3", "sl2", "so3", "so3lts", "sl2lts")

#: invariant forms that go with the catalog entries (checked, not assumed)
CATALOG_FORMS = {
    "abelian2": Matrix.identity(2),
    "abelian3": Matrix.diag([Fraction(1), Fraction(-1), Fraction(2)]),
    "so3": Matrix.identity(3),
    "so3lts": Matrix.identity(3),
    "sl2": Matrix([[2, 0, 0], [0, 0, 1], [0, 1, 0]]),
    "sl2lts": Matrix([[2, 0, 0], [0, 0, 1], [0, 1, 0]]),
}


def _matrices(rows, cols, values):
    for entries in product(values, repeat=rows * cols):
        yield Matrix([entries[i * cols:(i + 1) * cols] for i in range(rows)])


def search_rb_operators(pair: LieYRepPair, values=(-2, -1, 0, 1, 2), limit=None):
    """All V -> g maps over the value grid passing the Rota-Baxter identities."""
    hits = []
    for t in _matrices(pair.dim_g, pair.dim_v, values):
        if is_relative_rb(pair, t):
            hits.append(t)
            if limit is not None and len(hits) >= limit:
                break
    return hits


def search_nijenhuis_operators(alg: LieYamagutiAlgebra, values=(-2, -1, 0, 1, 2), limit=None):
    hits = []
    for n in _matrices(alg.dim, alg.dim, values):
        if is_nijenhuis(alg, n):
            hits.append(n)
            if limit is not None and len(hits) >= limit:
                break
    return hits


def search_rbn_triples(pair: LieYRepPair, values=(-2, -1, 0, 1, 2), limit=None,
                       require_nonzero=True):
    """Triples (T, S, N) over the grid passing the full triple conditions.

    The T S = N T constraint prunes the grid before the expensive checks.
    """
    hits = []
    rbs = search_rb_operators(pair, values)
    nijs = search_nijenhuis_operators(pair.algebra, values)
    for t in rbs:
        if require_nonzero and t.is_zero():
            continue
        for n in nijs:
            if require_nonzero and n.is_zero():
                continue
            for s in _matrices(pair.dim_v, pair.dim_v, values):
                if n * t != t * s:
                    continue
                if is_rbn(pair, t, s, n):
                    hits.append((t, s, n))
                    if limit is not None and len(hits) >= limit:
                        return hits
                    break
    return hits


def search_quadratic_fixtures(names=("abelian2", "abelian3", "so3lts", "sl2lts"),
                              values=(-1, 0, 1), per_algebra=2):
    """Quadratic algebras with skew Rota-Baxter operators and compatible N.

    For each catalog algebra with a validated invariant form, scan the
    grid for nonzero skew-symmetric-endomorphism Rota-Baxter operators R
    and pair each with the first nonzero N satisfying B# N^T = N B#,
    N R = R N, and the full Rota-Baxter-Nijenhuis conditions.  Returns a
    list of dicts (name, algebra, form, R, N).
    """
    fixtures = []
    for name in names:
        alg = catalog_algebra(name)
        b = CATALOG_FORMS.get(name)
        if b is None or not is_invariant_form(alg, b):
            continue
        qf = QuadraticForm(alg, b)
        pair = LieYRepPair(alg, adjoint_rep(alg), validate=False)
        n_found = 0
        for rmap in _matrices(alg.dim, alg.dim, values):
            if rmap.is_zero() or not is_skew_endomorphism(qf, rmap):
                continue
            if not is_relative_rb(pair, rmap):
                continue
            match = None
            for nmap in _matrices(alg.dim, alg.dim, values):
                if nmap.is_zero():
                    continue
                if qf.b_sharp * nmap.transpose() != nmap * qf.b_sharp:
                    continue
                if nmap * rmap != rmap * nmap:
                    continue
                if is_rb_nijenhuis(alg, rmap, nmap):
                    match = nmap
                    break
            if match is None:
                continue
            fixtures.append({"name": name, "algebra": alg, "form": b, "R": rmap, "N": match})
            n_found += 1
            if n_found >= per_algebra:
                break
    return fixtures


# ---------------------------------------------------------------------------
# randomized corpus of valid pairs


def change_basis(alg: LieYamagutiAlgebra, p: Matrix) -> LieYamagutiAlgebra:
    """Transport the structure constants along an invertible map."""
    if p.rows != alg.dim or p.cols != alg.dim:
        raise DimMismatchError("basis change must be square of the algebra dimension")
    pinv = p.invert()
    n = alg.dim
    cols = [p.col(i) for i in range(n)]
    binary = [[pinv.apply(alg.bracket(cols[i], cols[j])) for j in range(n)] for i in range(n)]
    ternary = [
        [
            [pinv.apply(alg.triple(cols[i], cols[j], cols[k])) for k in range(n)]
            for j in range(n)
        ]
        for i in range(n)
    ]
    return LieYamagutiAlgebra(n, binary, ternary, alg.basis_names)


def random_invertible(dim, rng, values=(-2, -1, 0, 1, 2)):
    """Random invertible integer matrix (product of elementary operations)."""
    mat = Matrix.identity(dim)
    for _ in range(3 * dim):
        i = rng.randrange(dim)
        j = rng.randrange(dim)
        if i == j:
            continue
        c = rng.choice([v for v in values if v])
        rows = [list(r) for r in mat.data]
        rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
        mat = Matrix(rows)
    return mat


RANDOM_SEEDS = ("abelian2", "abelian3", "a2", "a2lts", "heis3", "sl2", "so3", "so3lts", "sl2lts")


def random_valid_pair(rng: random.Random, max_dim=3) -> LieYRepPair:
    """A random valid pair: catalog algebra, random basis, standard rep.

    Basis changes preserve validity exactly, so the corpus is both random
    and guaranteed valid; the pair is still fully re-validated.
    """
    name = rng.choice([n for n in RANDOM_SEEDS if catalog_algebra(n).dim <= max_dim])
    alg = change_basis(catalog_algebra(name), random_invertible(catalog_algebra(name).dim, rng))
    kind = rng.choice(("adjoint", "coadjoint", "zero"))
    if kind == "adjoint":
        rep = adjoint_rep(alg)
    elif kind == "coadjoint":
        rep = coadjoint_rep(alg)
    else:
        rep = Representation.zero(alg.dim, rng.randint(1, 2))
    return LieYRepPair(alg, rep, validate=True)
