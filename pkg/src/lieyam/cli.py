"""Command-line interface.

Exit codes: 0 all checks pass; 1 at least one check fails; 2 usage or
input error; 3 a theorem consequence failed on validated premises (or an
internal consistency error) -- kept separate so CI can gate on it.

Output goes to stdout, as text or single-line JSON (--format json).
Reports are deterministic for a fixed --seed, which is echoed in every
report that uses randomness.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import __version__
from .algebra import is_nijenhuis
from .deform import (
    NijenhuisStructure,
    deformation_cocycle,
    linear_deformation_report,
    nijenhuis_structure_report,
    trivial_deformation_from,
    are_equivalent_deformations,
    DeformationData,
)
from .errors import (
    ConsequenceViolatedError,
    InternalConsistencyError,
    LieyamError,
    ParseError,
)
from .jsonio import (
    _read_json,
    algebra_to_dict,
    dump_json,
    load_algebra,
    load_operator,
    load_pair,
    matrix_to_rows,
    operator_to_dict,
    representation_from_dict,
)
from .paircomplex import pair_cohomology_dim, pair_delta_lifted
from .quadratic import (
    QuadraticForm,
    invariance_transport,
    invariant_form_report,
    rbn_to_rmn,
    rmn_to_rbn,
)
from .report import VerificationReport
from .reps import check_derived_identities, check_representation
from .rotabaxter import (
    RBNTriple,
    RelativeRBOperator,
    is_compatible_pair,
    rbn_consequences,
    rbn_report,
    relative_rb_report,
    strong_condition,
)
from .search import search_quadratic_fixtures, search_rb_operators, search_rbn_triples
from .yamaguti import cohomology_dim

import os


def build_parser():
    p = argparse.ArgumentParser(prog="lieyam",
                                description="exact verification of Lie-Yamaguti operator structures")
    p.add_argument("--version", action="version", version=f"lieyam {__version__}")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=0, help="seed echoed in reports; fixes randomized suites")
    p.add_argument("--degree-cap", type=int, default=None, help="cochain degree cap override")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="verify defining identities of a stored object")
    c.add_argument("kind", choices=("algebra", "rep", "pair"))
    c.add_argument("path")

    c = sub.add_parser("cohomology", help="cohomology group dimensions")
    c.add_argument("--pair", required=True)
    c.add_argument("--degree", type=int, required=True)
    c.add_argument("--complex", choices=("pair", "classical"), default="pair")
    c.add_argument("--cap", type=int, default=None)

    c = sub.add_parser("verify-nijenhuis", help="Nijenhuis operator on an algebra")
    c.add_argument("--algebra", required=True)
    c.add_argument("--N", required=True)

    c = sub.add_parser("verify-nijenhuis-structure", help="Nijenhuis structure (N, S) on a pair")
    c.add_argument("--pair", required=True)
    c.add_argument("--N", required=True)
    c.add_argument("--S", required=True)

    c = sub.add_parser("verify-rbo", help="relative Rota-Baxter operator")
    c.add_argument("--pair", required=True)
    c.add_argument("--T", required=True)

    c = sub.add_parser("verify-rbn", help="relative Rota-Baxter-Nijenhuis triple + consequences")
    c.add_argument("--pair", required=True)
    c.add_argument("--T", required=True)
    c.add_argument("--S", required=True)
    c.add_argument("--N", required=True)

    c = sub.add_parser("verify-compatible", help="compatibility of two Rota-Baxter operators")
    c.add_argument("--pair", required=True)
    c.add_argument("--T1", required=True)
    c.add_argument("--T2", required=True)

    c = sub.add_parser("verify-strong", help="the strong compatibility condition of (T, S)")
    c.add_argument("--pair", required=True)
    c.add_argument("--T", required=True)
    c.add_argument("--S", required=True)

    c = sub.add_parser("deform", help="build + certify the deformation of a Nijenhuis structure")
    c.add_argument("--pair", required=True)
    c.add_argument("--from-nijenhuis", action="store_true", required=True)
    c.add_argument("--N", required=True)
    c.add_argument("--S", required=True)
    c.add_argument("--out", default=None, help="write the deformation data as JSON")

    c = sub.add_parser("quadratic", help="quadratic forms and the r-matrix correspondence")
    qsub = c.add_subparsers(dest="qcommand", required=True)
    qc = qsub.add_parser("check-form")
    qc.add_argument("--algebra", required=True)
    qc.add_argument("--B", required=True)
    qc = qsub.add_parser("convert")
    qc.add_argument("--algebra", required=True)
    qc.add_argument("--B", required=True)
    qc.add_argument("--direction", choices=("rbn-to-rmn", "rmn-to-rbn"), required=True)
    qc.add_argument("--R", default=None)
    qc.add_argument("--pi", default=None)
    qc.add_argument("--N", required=True)
    qc.add_argument("--out", default=None)

    c = sub.add_parser("search", help="deterministic fixture searches")
    c.add_argument("what", choices=("rbo", "rbn", "quadratic"))
    c.add_argument("--pair", default=None)
    c.add_argument("--values", default="-2,-1,0,1,2")
    c.add_argument("--limit", type=int, default=None)
    c.add_argument("--out", default=None)
    return p


def _emit(report: VerificationReport, args, extra=None):
    report.seed = args.seed
    if args.format == "json":
        payload = report.to_dict()
        if extra:
            payload.update(extra)
        import json

        print(json.dumps(payload))
    else:
        print(report.to_text())
        if extra:
            for k, v in extra.items():
                print(f"{k}: {v}")
    return 0 if report.passed else 1


def _run(args) -> int:
    t0 = time.perf_counter()

    if args.command == "check":
        if args.kind == "algebra":
            alg = load_algebra(args.path)
            report = alg.check_axioms()
        elif args.kind == "rep":
            alg, rep = representation_from_dict(_read_json(args.path),
                                                base_dir=os_dirname(args.path))
            report = check_representation(alg, rep)
        else:
            pair = load_pair(args.path, validate=False)
            report = VerificationReport(subject=f"pair {args.path}")
            report.extend(pair.algebra.check_axioms())
            report.extend(check_representation(pair.algebra, pair.rep))
            report.extend(check_derived_identities(pair.algebra, pair.rep))
        report.runtime_ms = (time.perf_counter() - t0) * 1000
        return _emit(report, args)

    if args.command == "cohomology":
        pair = load_pair(args.pair)
        cap = args.cap if args.cap is not None else args.degree_cap
        extra = {}
        if args.complex == "pair":
            cap = cap if cap is not None else max(3, args.degree + 1)
            dim = pair_cohomology_dim(pair, args.degree, cap=cap)
        else:
            cap = cap if cap is not None else max(4, args.degree + 1)
            dim = cohomology_dim(pair.algebra, pair.rep, args.degree, cap=cap)
        report = VerificationReport(subject=f"cohomology of {args.pair}")
        report.add(f"H^{args.degree}", True, f"dimension computed over the rationals = {dim}")
        report.runtime_ms = (time.perf_counter() - t0) * 1000
        extra[f"dim_H{args.degree}"] = dim
        return _emit(report, args, extra=extra)

    if args.command == "verify-nijenhuis":
        alg = load_algebra(args.algebra)
        nmap = load_operator(args.N)
        report = VerificationReport(subject="Nijenhuis operator")
        report.add("nijenhuis", is_nijenhuis(alg, nmap),
                   "N[x,y]_N = [Nx,Ny] and N<<x,y,z>>_N = <<Nx,Ny,Nz>>",
                   witness={"operator": args.N})
        report.runtime_ms = (time.perf_counter() - t0) * 1000
        return _emit(report, args)

    if args.command == "verify-nijenhuis-structure":
        pair = load_pair(args.pair)
        report = nijenhuis_structure_report(pair, load_operator(args.N), load_operator(args.S))
        report.runtime_ms = (time.perf_counter() - t0) * 1000
        return _emit(report, args)

    if args.command == "verify-rbo":
        pair = load_pair(args.pair)
        report = relative_rb_report(pair, load_operator(args.T))
        report.runtime_ms = (time.perf_counter() - t0) * 1000
        return _emit(report, args)

    if args.command == "verify-rbn":
        pair = load_pair(args.pair)
        tmap, smap, nmap = load_operator(args.T), load_operator(args.S), load_operator(args.N)
        report = rbn_report(pair, tmap, smap, nmap)
        if report.passed:
            triple = RBNTriple(pair, tmap, smap, nmap)
            report.extend(rbn_consequences(triple, raise_on_failure=True), prefix="consequence: ")
        report.runtime_ms = (time.perf_counter() - t0) * 1000
        return _emit(report, args)

    if args.command == "verify-compatible":
        pair = load_pair(args.pair)
        verdict = is_compatible_pair(pair, load_operator(args.T1), load_operator(args.T2))
        report = VerificationReport(subject="compatible Rota-Baxter operators")
        report.add("compatible", verdict,
                   "every combination k1 T1 + k2 T2 is again Rota-Baxter (closed conditions)",
                   witness={"pair": (args.T1, args.T2)})
        report.runtime_ms = (time.perf_counter() - t0) * 1000
        return _emit(report, args)

    if args.command == "verify-strong":
        pair = load_pair(args.pair)
        top = RelativeRBOperator(pair, load_operator(args.T))
        verdict = strong_condition(pair, top, load_operator(args.S))
        report = VerificationReport(subject="strong compatibility condition")
        report.add("strong", verdict,
                   "D(Tu,Tv)(Sw) + mu(Tv,Tw)(Su) - mu(Tu,Tw)(Sv) = S(<<u,v,w>>^T)",
                   witness={"operators": (args.T, args.S)})
        report.runtime_ms = (time.perf_counter() - t0) * 1000
        return _emit(report, args)

    if args.command == "deform":
        pair = load_pair(args.pair)
        nmap, smap = load_operator(args.N), load_operator(args.S)
        report = nijenhuis_structure_report(pair, nmap, smap)
        extra = None
        if report.passed:
            ns = NijenhuisStructure(pair, nmap, smap)
            d = trivial_deformation_from(pair, ns)
            report.extend(linear_deformation_report(pair, d))
            report.add("triviality-witness",
                       are_equivalent_deformations(pair, d, DeformationData.zero(pair), nmap, smap),
                       "(Id + tN, Id + tS) intertwines the family with the undeformed pair",
                       witness={"witness": "(Id+tN, Id+tS)"})
            cocycle = deformation_cocycle(pair, d)
            closed = pair_delta_lifted(pair, cocycle, cap=3).is_zero()
            report.add("cocycle-closed", closed, "the first-order data is a closed 2-cochain",
                       witness={"cocycle": "degree 2"})
            if args.out:
                payload = _deformation_to_dict(d)
                payload["certificate"] = report.to_dict()
                dump_json(payload, args.out)
                extra = {"written": args.out}
        report.runtime_ms = (time.perf_counter() - t0) * 1000
        return _emit(report, args, extra=extra)

    if args.command == "quadratic":
        alg = load_algebra(args.algebra)
        b = load_operator(args.B)
        if args.qcommand == "check-form":
            report = invariant_form_report(alg, b)
            if report.passed:
                report.extend(invariance_transport(QuadraticForm(alg, b)))
            report.runtime_ms = (time.perf_counter() - t0) * 1000
            return _emit(report, args)
        qf = QuadraticForm(alg, b)
        nmap = load_operator(args.N)
        report = VerificationReport(subject=f"correspondence {args.direction}")
        if args.direction == "rbn-to-rmn":
            if not args.R:
                raise ParseError("--R is required for rbn-to-rmn")
            rm = rbn_to_rmn(alg, qf, load_operator(args.R), nmap)
            result = operator_to_dict(rm.pi)
            report.add("converted", True, "pi# = R B#; induced pair verified as r-matrix-Nijenhuis")
        else:
            if not args.pi:
                raise ParseError("--pi is required for rmn-to-rbn")
            rmap = rmn_to_rbn(alg, qf, load_operator(args.pi), nmap)
            result = operator_to_dict(rmap)
            report.add("converted", True,
                       "R = pi# (B#)^{-1}; verified Rota-Baxter-Nijenhuis with exact round-trip")
        if args.out:
            dump_json(result, args.out)
        report.runtime_ms = (time.perf_counter() - t0) * 1000
        return _emit(report, args, extra={"result": result})

    if args.command == "search":
        values = tuple(int(v) for v in args.values.split(","))
        report = VerificationReport(subject=f"search {args.what}")
        found: list = []
        if args.what == "rbo":
            pair = load_pair(args.pair)
            found = [operator_to_dict(t) for t in search_rb_operators(pair, values, limit=args.limit)]
        elif args.what == "rbn":
            pair = load_pair(args.pair)
            found = [
                {"T": operator_to_dict(t), "S": operator_to_dict(s), "N": operator_to_dict(n)}
                for (t, s, n) in search_rbn_triples(pair, values, limit=args.limit)
            ]
        else:
            fixtures = search_quadratic_fixtures(values=values)
            found = [
                {
                    "name": f["name"],
                    "algebra": algebra_to_dict(f["algebra"]),
                    "B": operator_to_dict(f["form"]),
                    "R": operator_to_dict(f["R"]),
                    "N": operator_to_dict(f["N"]),
                }
                for f in fixtures
            ]
        report.add("search", True, f"{len(found)} fixture(s) found over the value grid {values}")
        if args.out:
            dump_json({"found": found}, args.out)
        report.runtime_ms = (time.perf_counter() - t0) * 1000
        return _emit(report, args, extra={"count": len(found)})

    raise AssertionError(f"unhandled command {args.command}")


def _deformation_to_dict(d):
    return {
        "phi": [_fmt(x) for x in d.phi.entries],
        "phi_shape": list(d.phi.shape),
        "phi1": [_fmt(x) for x in d.phi1.entries],
        "phi1_shape": list(d.phi1.shape),
        "phi2": [_fmt(x) for x in d.phi2.entries],
        "phi2_shape": list(d.phi2.shape),
        "varrho": [matrix_to_rows(m) for m in d.varrho],
        "varpi1": [[matrix_to_rows(m) for m in row] for row in d.varpi1],
        "varpi2": [[matrix_to_rows(m) for m in row] for row in d.varpi2],
    }


def _fmt(x):
    from .scalars import format_scalar

    return format_scalar(x)


def os_dirname(path):
    return os.path.dirname(path) or "."


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except (ConsequenceViolatedError, InternalConsistencyError) as exc:
        print(f"CONSEQUENCE VIOLATED: {exc}", file=sys.stderr)
        return 3
    except ParseError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except LieyamError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
