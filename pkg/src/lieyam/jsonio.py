"""JSON file formats for algebras, representations, and operators.

Algebra files list structure constants sparsely::

    {"dim": 2,
     "basis": ["e1", "e2"],
     "binary":  [{"i": 0, "j": 1, "value": {"0": "1"}}],
     "ternary": [{"i": 0, "j": 1, "k": 1, "value": {"0": "1"}}]}

Indices are 0-based; only entries with i < j are required -- the loader
antisymmetrizes and rejects conflicting duplicates.  Rationals are
strings "p" or "p/q"; polynomial scalars serialize as
{"poly": ["c0", "c1", ...]} (lowest degree first).

A representation file names its algebra (inline object or path relative
to the file) and either gives rho/mu matrices explicitly or asks for a
special construction::

    {"algebra": "A2.json", "module_dim": 2, "special": "adjoint"}
    {"algebra": {...}, "module_dim": 2,
     "rho": [[["0","1"],["0","0"]], ...], "mu": [[[...], ...], ...]}

Matrices are arrays of rows with string-rational entries.  Operator
files are {"rows": r, "cols": c, "entries": [row-major strings]}.
"""

from __future__ import annotations

import json
import os

from .algebra import LieYamagutiAlgebra
from .errors import ConflictingEntryError, ParseError
from .linalg import Matrix, vec_is_zero, vneg, vsub, vzero
from .reps import LieYRepPair, Representation, adjoint_rep, coadjoint_rep
from .scalars import format_scalar, parse_scalar


def _read_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def _parse_value_vector(dim, value, where):
    if not isinstance(value, dict):
        raise ParseError(f"{where}: value must be an object mapping index -> rational")
    vec = [parse_scalar("0") for _ in range(dim)]
    for key, sval in value.items():
        try:
            idx = int(key)
        except ValueError as exc:
            raise ParseError(f"{where}: bad component index {key!r}") from exc
        if not 0 <= idx < dim:
            raise ParseError(f"{where}: component index {idx} out of range")
        vec[idx] = parse_scalar(sval)
    return tuple(vec)


def algebra_from_dict(data) -> LieYamagutiAlgebra:
    if not isinstance(data, dict) or "dim" not in data:
        raise ParseError("algebra object needs a 'dim' field")
    dim = int(data["dim"])
    names = data.get("basis")
    binary = [[None] * dim for _ in range(dim)]
    ternary = [[[None] * dim for _ in range(dim)] for _ in range(dim)]

    def put2(i, j, vec, where):
        if not (0 <= i < dim and 0 <= j < dim):
            raise ParseError(f"{where}: index out of range")
        if i == j and not vec_is_zero(vec):
            raise ConflictingEntryError(f"{where}: nonzero bracket on a repeated index")
        existing = binary[i][j]
        if existing is not None and not vec_is_zero(vsub(existing, vec)):
            raise ConflictingEntryError(f"{where}: conflicting duplicate for ({i},{j})")
        binary[i][j] = vec
        anti = vneg(vec)
        other = binary[j][i]
        if other is not None and not vec_is_zero(vsub(other, anti)):
            raise ConflictingEntryError(f"{where}: entry ({j},{i}) violates antisymmetry")
        binary[j][i] = anti

    def put3(i, j, k, vec, where):
        if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
            raise ParseError(f"{where}: index out of range")
        if i == j and not vec_is_zero(vec):
            raise ConflictingEntryError(f"{where}: nonzero ternary bracket on repeated first slots")
        existing = ternary[i][j][k]
        if existing is not None and not vec_is_zero(vsub(existing, vec)):
            raise ConflictingEntryError(f"{where}: conflicting duplicate for ({i},{j},{k})")
        ternary[i][j][k] = vec
        anti = vneg(vec)
        other = ternary[j][i][k]
        if other is not None and not vec_is_zero(vsub(other, anti)):
            raise ConflictingEntryError(f"{where}: entry ({j},{i},{k}) violates antisymmetry")
        ternary[j][i][k] = anti

    for pos, entry in enumerate(data.get("binary", [])):
        where = f"binary[{pos}]"
        try:
            i, j = int(entry["i"]), int(entry["j"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"{where}: needs integer 'i' and 'j'") from exc
        put2(i, j, _parse_value_vector(dim, entry.get("value", {}), where), where)
    for pos, entry in enumerate(data.get("ternary", [])):
        where = f"ternary[{pos}]"
        try:
            i, j, k = int(entry["i"]), int(entry["j"]), int(entry["k"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"{where}: needs integer 'i', 'j', 'k'") from exc
        put3(i, j, k, _parse_value_vector(dim, entry.get("value", {}), where), where)

    z = vzero(dim)
    for i in range(dim):
        for j in range(dim):
            if binary[i][j] is None:
                binary[i][j] = z
            for k in range(dim):
                if ternary[i][j][k] is None:
                    ternary[i][j][k] = z
    return LieYamagutiAlgebra(dim, binary, ternary, basis_names=names)


def load_algebra(path) -> LieYamagutiAlgebra:
    return algebra_from_dict(_read_json(path))


def algebra_to_dict(alg: LieYamagutiAlgebra):
    binary = []
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            if not vec_is_zero(alg.b[i][j]):
                binary.append({
                    "i": i, "j": j,
                    "value": {str(k): format_scalar(v) for k, v in enumerate(alg.b[i][j]) if v != 0},
                })
    ternary = []
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            for k in range(alg.dim):
                if not vec_is_zero(alg.t[i][j][k]):
                    ternary.append({
                        "i": i, "j": j, "k": k,
                        "value": {str(l): format_scalar(v) for l, v in enumerate(alg.t[i][j][k]) if v != 0},
                    })
    return {"dim": alg.dim, "basis": alg.basis_names, "binary": binary, "ternary": ternary}


def matrix_from_rows(rows, where="matrix") -> Matrix:
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ParseError(f"{where}: expected an array of rows")
    return Matrix([[parse_scalar(x) for x in r] for r in rows])


def matrix_to_rows(mat: Matrix):
    return [[format_scalar(x) for x in row] for row in mat.data]


def load_operator(path) -> Matrix:
    data = _read_json(path)
    if not isinstance(data, dict) or "entries" not in data:
        raise ParseError(f"{path}: operator file needs 'rows', 'cols', 'entries'")
    rows, cols = int(data["rows"]), int(data["cols"])
    entries = data["entries"]
    if isinstance(entries[0], list):
        mat = matrix_from_rows(entries, where=path)
    else:
        if len(entries) != rows * cols:
            raise ParseError(f"{path}: need {rows * cols} entries, got {len(entries)}")
        mat = Matrix([[parse_scalar(entries[i * cols + j]) for j in range(cols)] for i in range(rows)])
    if mat.rows != rows or mat.cols != cols:
        raise ParseError(f"{path}: entry grid does not match rows/cols")
    return mat


def operator_to_dict(mat: Matrix):
    return {"rows": mat.rows, "cols": mat.cols,
            "entries": [format_scalar(x) for row in mat.data for x in row]}


def representation_from_dict(data, base_dir=".") -> tuple[LieYamagutiAlgebra, Representation]:
    if not isinstance(data, dict):
        raise ParseError("representation file must be a JSON object")
    algref = data.get("algebra")
    if isinstance(algref, str):
        alg = load_algebra(os.path.join(base_dir, algref))
    elif isinstance(algref, dict):
        alg = algebra_from_dict(algref)
    else:
        raise ParseError("representation file needs an 'algebra' (path or inline object)")
    special = data.get("special")
    if special == "adjoint":
        return alg, adjoint_rep(alg, check=False)
    if special == "coadjoint":
        return alg, coadjoint_rep(alg, check=False)
    if special == "zero":
        m = int(data.get("module_dim", alg.dim))
        return alg, Representation.zero(alg.dim, m)
    if special is not None:
        raise ParseError(f"unknown special representation {special!r}")
    m = int(data["module_dim"])
    rho = data.get("rho")
    mu = data.get("mu")
    if not isinstance(rho, list) or len(rho) != alg.dim:
        raise ParseError("'rho' must list one matrix per basis vector")
    if not isinstance(mu, list) or len(mu) != alg.dim:
        raise ParseError("'mu' must be a dim x dim table of matrices")
    rho_m = [matrix_from_rows(r, where=f"rho[{i}]") for i, r in enumerate(rho)]
    mu_m = []
    for i, row in enumerate(mu):
        if not isinstance(row, list) or len(row) != alg.dim:
            raise ParseError(f"mu[{i}] must list dim matrices")
        mu_m.append([matrix_from_rows(x, where=f"mu[{i}][{j}]") for j, x in enumerate(row)])
    rep = Representation(alg.dim, m, rho_m, mu_m)
    return alg, rep


def load_pair(path, validate=True) -> LieYRepPair:
    alg, rep = representation_from_dict(_read_json(path), base_dir=os.path.dirname(path) or ".")
    return LieYRepPair(alg, rep, validate=validate)


def pair_to_dict(pair: LieYRepPair, inline_algebra=True):
    return {
        "algebra": algebra_to_dict(pair.algebra),
        "module_dim": pair.dim_v,
        "rho": [matrix_to_rows(m) for m in pair.rep.rho],
        "mu": [[matrix_to_rows(m) for m in row] for row in pair.rep.mu],
    }


def dump_json(obj, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=1)
        fh.write("\n")
